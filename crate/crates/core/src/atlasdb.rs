//! A small line-oriented database of finite simple groups.
//!
//! ```text
//! group L2(23)
//! order 2^3 3 11 23
//! mu 11,12,23
//! pi 2,3,11,23
//! flag has9 false
//! flag has25 false
//! note spectrum verified by psl2 oracle
//! ```
//!
//! `#` starts a comment, blank lines separate records, `group` must come
//! first and `pi` is required. `note` may repeat; every other key appears at
//! most once. Records are validated as they are loaded.

use std::fmt::Write as _;

use thiserror::Error;

use crate::groups::{prime_power, psl2_spectrum};
use crate::orderset::{is_prime, Factorization, OrderSet};

/// The embedded corpus.
pub const EMBEDDED: &str = include_str!("../data/groups.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("record {name}: {message}")]
    Invariant { name: String, message: String },
    #[error("insufficient data to decide excluded orders for {}", .0.join(", "))]
    InsufficientData(Vec<String>),
    #[error("filter needs min_hits >= 1")]
    BadQuery,
    #[error("record {name} disagrees with the enumeration oracle: {detail}")]
    OracleMismatch { name: String, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRecord {
    pub name: String,
    pub order: Option<Factorization>,
    pub pi: Vec<u64>,
    /// Maximal element orders, when the full spectrum is known.
    pub mu: Option<OrderSet>,
    pub has9: Option<bool>,
    pub has25: Option<bool>,
    pub notes: Vec<String>,
}

impl GroupRecord {
    /// Checks the invariants tying `pi`, `order`, `mu` and the flags together.
    pub fn validate(&self) -> Result<(), DbError> {
        let fail = |message: String| {
            Err(DbError::Invariant {
                name: self.name.clone(),
                message,
            })
        };
        if let Some(&p) = self.pi.iter().find(|&&p| !is_prime(p)) {
            return fail(format!("{p} in pi is not prime"));
        }
        if self.pi.windows(2).any(|w| w[0] >= w[1]) {
            return fail("pi must be strictly increasing".into());
        }
        if let Some(order) = &self.order {
            if order.primes() != self.pi {
                return fail(format!(
                    "pi {:?} differs from the primes of the order {order}",
                    self.pi
                ));
            }
        }
        if let Some(mu) = &self.mu {
            if let Some(p) = mu.pi().into_iter().find(|p| !self.pi.contains(p)) {
                return fail(format!("mu has prime {p} outside pi"));
            }
            for (flag, n, label) in [(self.has9, 9, "has9"), (self.has25, 25, "has25")] {
                if let Some(f) = flag {
                    if f != mu.contains(n) {
                        return fail(format!("{label} = {f} contradicts mu {mu}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `n` is known to be an element order: `Some` when decided by
    /// `mu` or by a flag.
    pub fn has_order(&self, n: u64) -> Option<bool> {
        if let Some(mu) = &self.mu {
            return Some(mu.contains(n));
        }
        match n {
            9 => self.has9,
            25 => self.has25,
            _ => None,
        }
    }
}

fn parse_list(s: &str) -> Option<Vec<u64>> {
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" => Some(true),
        "false" => Some(false),
        _ => None,
    }
}

/// Parses and validates every record in `text`.
pub fn parse_records(text: &str) -> Result<Vec<GroupRecord>, DbError> {
    let mut records = Vec::new();
    let mut current: Option<(GroupRecord, bool)> = None;

    let finish = |current: &mut Option<(GroupRecord, bool)>,
                  records: &mut Vec<GroupRecord>,
                  line: usize|
     -> Result<(), DbError> {
        if let Some((record, has_pi)) = current.take() {
            if !has_pi {
                return Err(DbError::Syntax {
                    line,
                    message: format!("record {} has no pi line", record.name),
                });
            }
            record.validate()?;
            records.push(record);
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            if raw.trim().is_empty() {
                finish(&mut current, &mut records, line)?;
            }
            continue;
        }
        let syntax = |message: String| DbError::Syntax { line, message };
        let (key, rest) = content
            .split_once(char::is_whitespace)
            .map_or((content, ""), |(k, r)| (k, r.trim()));

        if key == "group" {
            if current.is_some() {
                return Err(syntax("`group` must start a new record".into()));
            }
            if rest.is_empty() {
                return Err(syntax("`group` needs a name".into()));
            }
            current = Some((
                GroupRecord {
                    name: rest.to_string(),
                    order: None,
                    pi: Vec::new(),
                    mu: None,
                    has9: None,
                    has25: None,
                    notes: Vec::new(),
                },
                false,
            ));
            continue;
        }
        let Some((record, has_pi)) = current.as_mut() else {
            return Err(syntax(format!("`{key}` before any `group` line")));
        };
        match key {
            "order" => {
                if record.order.is_some() {
                    return Err(syntax("duplicate `order`".into()));
                }
                let f = rest
                    .parse::<Factorization>()
                    .map_err(|e| syntax(e.to_string()))?;
                record.order = Some(f);
            }
            "mu" => {
                if record.mu.is_some() {
                    return Err(syntax("duplicate `mu`".into()));
                }
                let gens = parse_list(rest).ok_or_else(|| syntax(format!("bad list `{rest}`")))?;
                let mu = OrderSet::from_generators(&gens).map_err(|e| syntax(e.to_string()))?;
                record.mu = Some(mu);
            }
            "pi" => {
                if *has_pi {
                    return Err(syntax("duplicate `pi`".into()));
                }
                record.pi = parse_list(rest).ok_or_else(|| syntax(format!("bad list `{rest}`")))?;
                *has_pi = true;
            }
            "flag" => {
                let mut parts = rest.split_whitespace();
                let (Some(name), Some(value), None) = (parts.next(), parts.next(), parts.next())
                else {
                    return Err(syntax("expected `flag has9|has25 true|false`".into()));
                };
                let value =
                    parse_bool(value).ok_or_else(|| syntax(format!("bad boolean `{value}`")))?;
                let slot = match name {
                    "has9" => &mut record.has9,
                    "has25" => &mut record.has25,
                    other => return Err(syntax(format!("unknown flag `{other}`"))),
                };
                if slot.is_some() {
                    return Err(syntax(format!("duplicate flag `{name}`")));
                }
                *slot = Some(value);
            }
            "note" => record.notes.push(rest.to_string()),
            other => return Err(syntax(format!("unknown key `{other}`"))),
        }
    }
    let last = text.lines().count() + 1;
    finish(&mut current, &mut records, last)?;
    Ok(records)
}

/// Writes records in the format accepted by [`parse_records`].
pub fn serialize_records(records: &[GroupRecord]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "group {}", r.name);
        if let Some(order) = &r.order {
            let _ = writeln!(out, "order {order}");
        }
        if let Some(mu) = &r.mu {
            let _ = writeln!(out, "mu {mu}");
        }
        let pi: Vec<String> = r.pi.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "pi {}", pi.join(","));
        if let Some(f) = r.has9 {
            let _ = writeln!(out, "flag has9 {f}");
        }
        if let Some(f) = r.has25 {
            let _ = writeln!(out, "flag has25 {f}");
        }
        for note in &r.notes {
            let _ = writeln!(out, "note {note}");
        }
    }
    out
}

/// Selects records with `pi ⊆ ambient_pi`, at least `min_hits` primes in
/// `target_primes`, and none of `excluded_orders` as an element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterQuery {
    pub ambient_pi: Vec<u64>,
    pub excluded_orders: Vec<u64>,
    pub target_primes: Vec<u64>,
    pub min_hits: usize,
}

impl FilterQuery {
    /// Candidates for sections of J4 without elements of order 9 or 25 that
    /// meet `targets` in at least two primes.
    pub fn within_j4(targets: &[u64]) -> Self {
        Self {
            ambient_pi: crate::groups::j4_order().primes(),
            excluded_orders: vec![9, 25],
            target_primes: targets.to_vec(),
            min_hits: 2,
        }
    }

    /// Targets `{11, 23, 29, 31, 37, 43}`.
    pub fn large_primes() -> Self {
        Self::within_j4(&[11, 23, 29, 31, 37, 43])
    }

    /// Targets `{5, 23, 29, 37, 43}`.
    pub fn five_and_large_primes() -> Self {
        Self::within_j4(&[5, 23, 29, 37, 43])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterHit {
    pub name: String,
    /// `pi ∩ target_primes`
    pub hits: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Crosscheck {
    /// Recomputed by enumeration and found equal.
    Verified(String),
    /// Internally consistent, but no oracle exists in this crate.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Database {
    pub records: Vec<GroupRecord>,
}

impl Database {
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED).expect("embedded corpus is valid")
    }

    pub fn parse(text: &str) -> Result<Self, DbError> {
        Ok(Self {
            records: parse_records(text)?,
        })
    }

    pub fn get(&self, name: &str) -> Option<&GroupRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn to_text(&self) -> String {
        serialize_records(&self.records)
    }

    /// Matching records sorted by name. A record that passes the prime
    /// conditions but whose excluded orders cannot be decided makes the
    /// whole query fail with [`DbError::InsufficientData`].
    pub fn run_filter(&self, q: &FilterQuery) -> Result<Vec<FilterHit>, DbError> {
        if q.min_hits == 0 {
            return Err(DbError::BadQuery);
        }
        let mut hits = Vec::new();
        let mut undecided = Vec::new();
        for r in &self.records {
            if !r.pi.iter().all(|p| q.ambient_pi.contains(p)) {
                continue;
            }
            let meet: Vec<u64> = r
                .pi
                .iter()
                .copied()
                .filter(|p| q.target_primes.contains(p))
                .collect();
            if meet.len() < q.min_hits {
                continue;
            }
            let status: Vec<Option<bool>> =
                q.excluded_orders.iter().map(|&n| r.has_order(n)).collect();
            if status.contains(&Some(true)) {
                continue;
            }
            if status.contains(&None) {
                undecided.push(r.name.clone());
                continue;
            }
            hits.push(FilterHit {
                name: r.name.clone(),
                hits: meet,
            });
        }
        if !undecided.is_empty() {
            undecided.sort();
            return Err(DbError::InsufficientData(undecided));
        }
        hits.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(hits)
    }
}

/// `L2(q)` names with `q` given as `n` or `p^k`.
fn psl2_parameter(name: &str) -> Option<u64> {
    let inner = name.strip_prefix("L2(")?.strip_suffix(')')?;
    match inner.split_once('^') {
        Some((p, k)) => p.parse::<u64>().ok()?.checked_pow(k.parse().ok()?),
        None => inner.parse().ok(),
    }
}

/// Re-derives a record from an independent computation where one exists.
pub fn crosscheck_record(r: &GroupRecord) -> Result<Crosscheck, DbError> {
    r.validate()?;
    let Some(q) = psl2_parameter(&r.name) else {
        return Ok(Crosscheck::Unverified);
    };
    if prime_power(q).is_err() || q > 64 {
        return Ok(Crosscheck::Unverified);
    }
    let oracle = psl2_spectrum(q)
        .map_err(|e| DbError::OracleMismatch {
            name: r.name.clone(),
            detail: e.to_string(),
        })?
        .to_record();
    let mismatch = |detail: String| {
        Err(DbError::OracleMismatch {
            name: r.name.clone(),
            detail,
        })
    };
    if let Some(order) = &r.order {
        if Some(order) != oracle.order.as_ref() {
            return mismatch(format!("order {order} vs {}", oracle.order.unwrap()));
        }
    }
    if r.pi != oracle.pi {
        return mismatch(format!("pi {:?} vs {:?}", r.pi, oracle.pi));
    }
    if let Some(mu) = &r.mu {
        if Some(mu) != oracle.mu.as_ref() {
            return mismatch(format!("mu {mu} vs {}", oracle.mu.unwrap()));
        }
    }
    for (mine, theirs, label) in [(r.has9, oracle.has9, "has9"), (r.has25, oracle.has25, "has25")]
    {
        if mine.is_some() && mine != theirs {
            return mismatch(format!("{label} {mine:?} vs {theirs:?}"));
        }
    }
    Ok(Crosscheck::Verified(format!(
        "matches enumeration of PSL(2, {q}): mu {}",
        oracle.mu.unwrap()
    )))
}
