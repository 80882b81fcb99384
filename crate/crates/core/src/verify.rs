//! The full list of reproducible checks, collected into one report.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::atlasdb::{crosscheck_record, Database, DbError, FilterQuery};
use crate::gf::FiniteField;
use crate::groups::{
    check_proposition_hypotheses, j4_extension_witness_orders, j4_order, j4_spectrum,
    psl2_spectrum, Psl2Report, SemidirectSpec, J4_MAXIMAL_ORDERS, PI_1, PI_2,
};
use crate::linact::{
    frobenius_arith_check, semidirect_spectrum, Action, ActionGroupElement, LinearAction,
};
use crate::orderset::{checked_lcm, divisors, OrderSet};
use crate::poly::Poly;
use crate::primegraph::PrimeGraph;

/// Seed for every randomized check, so reports are reproducible.
pub const SEED: u64 = 0x4a34_4a34;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub citation: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// Pass iff no check failed.
    pub fn overall(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<7} {:<16} {}: {}\n",
                c.status.as_str().to_uppercase(),
                c.id,
                c.citation,
                c.detail
            ));
        }
        out.push_str(&format!("overall: {}\n", self.overall().as_str()));
        out
    }
}

type Outcome = Result<String, String>;

struct Check {
    id: &'static str,
    citation: &'static str,
    run: fn(&Context) -> Option<Outcome>,
}

struct Context {
    db: Result<Database, DbError>,
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

const CHECKS: &[Check] = &[
    Check {
        id: "spectrum",
        citation: "spectrum of J4 from its maximal element orders",
        run: |_| Some(check_spectrum()),
    },
    Check {
        id: "product",
        citation: "spectrum of J4 x J4 as lcm-closure",
        run: |_| Some(check_product()),
    },
    Check {
        id: "gk",
        citation: "prime graphs of J4 and J4 x J4",
        run: |_| Some(check_gk()),
    },
    Check {
        id: "restricted-sigma",
        citation: "restricted sigma of J4 x J4 on pi_1 and pi_2",
        run: |_| Some(check_restricted_sigma()),
    },
    Check {
        id: "extensions",
        citation: "orders forced by extensions of J4 x J4",
        run: |_| Some(check_extensions()),
    },
    Check {
        id: "wreath",
        citation: "32 separates J4 wr C2 from J4 x J4",
        run: |_| Some(check_wreath()),
    },
    Check {
        id: "remark",
        citation: "solvable group with sigma = 2 and three primes",
        run: |_| Some(check_remark()),
    },
    Check {
        id: "psl2",
        citation: "spectra of L2(23), L2(29), L2(32), L2(43)",
        run: |_| Some(check_psl2()),
    },
    Check {
        id: "linear",
        citation: "Frobenius actions and fixed spaces over finite fields",
        run: |_| Some(check_linear()),
    },
    Check {
        id: "db-load",
        citation: "group record corpus",
        run: |ctx| {
            Some(match &ctx.db {
                Ok(db) => Ok(format!("{} records", db.records.len())),
                Err(e) => Err(e.to_string()),
            })
        },
    },
    Check {
        id: "db-filter",
        citation: "simple sections of J4 without orders 9 and 25",
        run: |ctx| ctx.db.as_ref().ok().map(check_filters),
    },
    Check {
        id: "db-crosscheck",
        citation: "group records against enumeration",
        run: |ctx| ctx.db.as_ref().ok().map(check_crosscheck),
    },
    Check {
        id: "properties",
        citation: "randomized invariants of spectra and actions",
        run: |_| Some(check_properties()),
    },
];

/// Every check id, in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Whether `filter` selects `id`: equal, or a dash-separated prefix.
fn selects(filter: &str, id: &str) -> bool {
    id == filter || id.strip_prefix(filter).is_some_and(|r| r.starts_with('-'))
}

/// Whether `filter` selects at least one check.
pub fn is_known_filter(filter: &str) -> bool {
    CHECKS.iter().any(|c| selects(filter, c.id))
}

/// Runs the selected checks against the records in `db_text`.
pub fn run(db_text: &str, only: Option<&str>) -> VerificationReport {
    let ctx = Context {
        db: Database::parse(db_text),
    };
    let checks = CHECKS
        .iter()
        .filter(|c| only.is_none_or(|f| selects(f, c.id)))
        .map(|c| {
            let (status, detail) = match (c.run)(&ctx) {
                Some(Ok(d)) => (Status::Pass, d),
                Some(Err(d)) => (Status::Fail, d),
                None => (Status::Skipped, "records did not load".to_string()),
            };
            CheckResult {
                id: c.id.to_string(),
                citation: c.citation.to_string(),
                status,
                detail,
            }
        })
        .collect();
    VerificationReport { checks }
}

/// Runs the selected checks against the embedded records.
pub fn run_embedded(only: Option<&str>) -> VerificationReport {
    run(crate::atlasdb::EMBEDDED, only)
}

fn check_spectrum() -> Outcome {
    let w = OrderSet::from_generators(&J4_MAXIMAL_ORDERS).map_err(|e| e.to_string())?;
    ensure(w.maximal_elements() == J4_MAXIMAL_ORDERS, || {
        "generators are not an antichain".into()
    })?;
    ensure(w.len() == 31, || format!("{} members, expected 31", w.len()))?;
    for n in [66, 44] {
        ensure(w.contains(n), || format!("{n} missing"))?;
    }
    for n in [9, 25, 46, 55] {
        ensure(!w.contains(n), || format!("{n} present"))?;
    }
    ensure(w.pi() == j4_order().primes(), || {
        format!("pi {:?} differs from the primes of |J4|", w.pi())
    })?;
    Ok(format!("31 members, pi = {:?}", w.pi()))
}

/// `{lcm(x, y)}` over all pairs of members.
pub fn brute_force_product(a: &OrderSet, b: &OrderSet) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for x in a.expand() {
        for y in b.expand() {
            out.insert(checked_lcm(x, y).expect("small"));
        }
    }
    out
}

fn check_product() -> Outcome {
    let w = j4_spectrum();
    let sq = w.product(&w).map_err(|e| e.to_string())?;
    ensure(sq.contains(2310), || "2310 missing".into())?;
    for n in [9, 25, 32] {
        ensure(!sq.contains(n), || format!("{n} present"))?;
    }
    let oracle = brute_force_product(&w, &w);
    let got: BTreeSet<u64> = sq.expand().into_iter().collect();
    ensure(got == oracle, || "closure differs from pairwise enumeration".into())?;
    Ok(format!(
        "{} members, {} maximal, equals pairwise enumeration",
        got.len(),
        sq.maximal_elements().len()
    ))
}

fn check_gk() -> Outcome {
    let w = j4_spectrum();
    let g = PrimeGraph::from_spectrum(&w);
    let best = g.max_cocliques();
    let alpha = g.independence_number();
    ensure(alpha == 7, || format!("independence number {alpha}"))?;
    for pi in [PI_1, PI_2] {
        ensure(best.iter().any(|c| c[..] == pi[..]), || {
            format!("{pi:?} is not a maximum coclique")
        })?;
    }
    ensure(g.is_coclique(&[29, 31, 37, 43]) == Ok(true), || {
        "{29,31,37,43} is not a coclique".into()
    })?;
    let sq = PrimeGraph::from_spectrum(&w.product(&w).map_err(|e| e.to_string())?);
    ensure(sq.is_complete() && sq.vertices().len() == 10, || {
        "GK(J4 x J4) is not complete on 10 vertices".into()
    })?;
    Ok(format!(
        "alpha = 7 with {} maximum cocliques; GK(J4 x J4) complete",
        best.len()
    ))
}

fn check_restricted_sigma() -> Outcome {
    let w = j4_spectrum();
    let sq = w.product(&w).map_err(|e| e.to_string())?;
    let s1 = sq.restricted_sigma(&PI_1);
    let s2 = sq.restricted_sigma(&PI_2);
    ensure(s1 == 2 && s2 == 2, || format!("got {s1} and {s2}"))?;
    Ok("2 on both".into())
}

fn check_extensions() -> Outcome {
    let w = j4_spectrum();
    let sq = w.product(&w).map_err(|e| e.to_string())?;
    let orders = j4_extension_witness_orders();
    let present: Vec<u64> = orders.iter().copied().filter(|&n| sq.contains(n)).collect();
    ensure(present.is_empty(), || format!("present: {present:?}"))?;
    Ok(format!("{} orders, none in the spectrum", orders.len()))
}

fn check_wreath() -> Outcome {
    let w = j4_spectrum();
    let wr = w.wreath2().map_err(|e| e.to_string())?;
    let sq = w.product(&w).map_err(|e| e.to_string())?;
    ensure(wr.contains(32), || "32 missing from the wreath product".into())?;
    ensure(!sq.contains(32), || "32 present in the direct product".into())?;
    ensure(wr != sq, || "spectra coincide".into())?;
    Ok("32 in J4 wr C2, not in J4 x J4".into())
}

/// Number of random elements drawn from the explicit solvable group.
pub const REMARK_SAMPLES: usize = 10_000;

fn check_remark() -> Outcome {
    let spec = SemidirectSpec::remark_group().map_err(|e| e.to_string())?;
    let s = spec.spectrum().map_err(|e| e.to_string())?;
    let expected = [1, 3, 5, 15, 17, 51, 85];
    ensure(s.expand() == expected, || format!("spectrum {:?}", s.expand()))?;
    ensure(s.pi() == [3, 5, 17], || format!("pi {:?}", s.pi()))?;
    ensure(s.sigma() == 2, || format!("sigma {}", s.sigma()))?;
    let report = check_proposition_hypotheses(&s);
    ensure(report.hypotheses_hold() && report.bound_ok && report.pi.len() == 3, || format!("{report:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sample = spec
        .sample(REMARK_SAMPLES, &mut rng)
        .map_err(|e| e.to_string())?;
    ensure(sample.outside_spectrum.is_empty(), || {
        format!("orders outside: {:?}", sample.outside_spectrum)
    })?;
    ensure(sample.dichotomy_failures == 0, || {
        format!("{} samples disagree with the T-sum rule", sample.dichotomy_failures)
    })?;
    Ok(format!(
        "spectrum {{1,3,5,15,17,51,85}}; {} samples, orders seen {:?}",
        sample.samples, sample.orders_seen
    ))
}

const LARGE_PRIMES: [u64; 6] = [11, 23, 29, 31, 37, 43];
const FIVE_AND_LARGE: [u64; 5] = [5, 23, 29, 37, 43];

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

fn check_psl2() -> Outcome {
    let mut parts = Vec::new();
    for (q, targets, expected) in [
        (23, &LARGE_PRIMES[..], &[11, 23][..]),
        (32, &LARGE_PRIMES[..], &[11, 31][..]),
        (43, &LARGE_PRIMES[..], &[11, 43][..]),
        (29, &FIVE_AND_LARGE[..], &[5, 29][..]),
    ] {
        let r = psl2_spectrum(q).map_err(|e| e.to_string())?;
        ensure(r.order == Psl2Report::closed_form_order(q), || {
            format!("|L2({q})| = {} by count", r.order)
        })?;
        ensure(r.classical_structure_holds(), || {
            format!("L2({q}) has an order outside the tori")
        })?;
        let meet = intersect(&r.spectrum.pi(), targets);
        ensure(meet == expected, || format!("L2({q}) meets targets in {meet:?}"))?;
        if q == 23 {
            ensure(r.spectrum.expand() == [1, 2, 3, 4, 6, 11, 12, 23], || {
                format!("L2(23) spectrum {:?}", r.spectrum.expand())
            })?;
        }
        parts.push(format!("L2({q}): mu {}", r.spectrum));
    }
    Ok(parts.join("; "))
}

fn check_linear() -> Outcome {
    let f = FiniteField::new(2, 11).map_err(|e| e.to_string())?;
    let phi = LinearAction::galois(&f, 1);
    ensure(phi.fixed_space_dim() == 1, || {
        format!("Galois fixed space dim {}", phi.fixed_space_dim())
    })?;
    ensure(phi.minimal_polynomial() == Poly::x_pow_minus_one(2, 11), || {
        format!("Galois minimal polynomial {}", phi.minimal_polynomial())
    })?;
    let galois_group: Vec<_> = (0..11)
        .map(|j| ActionGroupElement::new(vec![phi.pow(j)]))
        .collect();
    let s = semidirect_spectrum(std::slice::from_ref(&f), &galois_group)
        .map_err(|e| e.to_string())?;
    ensure(s.contains(22), || "no element of order 22".into())?;

    let zeta = f.subgroup_generator(23).map_err(|e| e.to_string())?;
    let mult = LinearAction::multiplication(zeta).map_err(|e| e.to_string())?;
    ensure(mult.is_fixed_point_free() == Ok(true), || {
        "multiplication by a 23rd root of unity has fixed points".into()
    })?;
    ensure(mult.t_sum_matrix(23).is_zero(), || "T_23 is nonzero".into())?;
    let cyclic: Vec<_> = (0..23)
        .map(|j| ActionGroupElement::new(vec![mult.pow(j)]))
        .collect();
    let s = semidirect_spectrum(std::slice::from_ref(&f), &cyclic).map_err(|e| e.to_string())?;
    ensure(!s.contains(46), || "order 46 present".into())?;

    for (m, c) in [(2048, 23), (23, 11), (3u64.pow(16), 17)] {
        ensure(frobenius_arith_check(m, c), || format!("{c} does not divide {m} - 1"))?;
    }
    Ok("Galois on GF(2^11): dim 1, minpoly x^11 + 1, order 22; zeta_23 fixed-point-free, no 46".into())
}

fn summarize(hits: &[crate::atlasdb::FilterHit]) -> String {
    hits.iter()
        .map(|h| format!("{} {:?}", h.name, h.hits))
        .collect::<Vec<_>>()
        .join(", ")
}

fn check_filters(db: &Database) -> Outcome {
    let expect_large: &[(&str, &[u64])] = &[
        ("J4", &LARGE_PRIMES),
        ("L2(23)", &[11, 23]),
        ("L2(32)", &[11, 31]),
        ("L2(43)", &[11, 43]),
        ("M23", &[11, 23]),
        ("M24", &[11, 23]),
        ("U3(11)", &[11, 37]),
    ];
    let expect_five: &[(&str, &[u64])] = &[
        ("J4", &FIVE_AND_LARGE),
        ("L2(29)", &[5, 29]),
        ("M23", &[5, 23]),
        ("M24", &[5, 23]),
        ("U3(11)", &[5, 37]),
    ];
    let mut detail = Vec::new();
    for (query, expected) in [
        (FilterQuery::large_primes(), expect_large),
        (FilterQuery::five_and_large_primes(), expect_five),
    ] {
        let hits = db.run_filter(&query).map_err(|e| e.to_string())?;
        let got: Vec<(&str, &[u64])> = hits.iter().map(|h| (h.name.as_str(), &h.hits[..])).collect();
        ensure(got == expected, || format!("got {}", summarize(&hits)))?;
        detail.push(format!("{} groups", hits.len()));

        for (i, r) in db.records.iter().enumerate() {
            for drop9 in [true, false] {
                let flag = if drop9 { r.has9 } else { r.has25 };
                if flag.is_none() {
                    continue;
                }
                let mut weakened = db.clone();
                let w = &mut weakened.records[i];
                if drop9 {
                    w.has9 = None;
                } else {
                    w.has25 = None;
                }
                w.mu = None;
                let listed = hits.iter().any(|h| h.name == r.name);
                match weakened.run_filter(&query) {
                    Err(DbError::InsufficientData(names)) if names.contains(&r.name) => {}
                    Err(DbError::InsufficientData(_)) if !listed => {}
                    Ok(h) if !listed && h == hits => {}
                    other => {
                        return Err(format!("dropping a flag of {}: {other:?}", r.name))
                    }
                }
            }
        }
    }
    Ok(format!(
        "{}; dropping any 9/25 flag of a listed group gives insufficient data",
        detail.join(" and ")
    ))
}

fn check_crosscheck(db: &Database) -> Outcome {
    let mut verified = Vec::new();
    let mut cited = 0;
    for r in &db.records {
        match crosscheck_record(r).map_err(|e| e.to_string())? {
            crate::atlasdb::Crosscheck::Verified(_) => verified.push(r.name.as_str()),
            crate::atlasdb::Crosscheck::Unverified => cited += 1,
        }
    }
    Ok(format!(
        "verified by enumeration: {}; {cited} records cited only",
        verified.join(", ")
    ))
}

/// Cases per randomized invariant.
pub const PROPERTY_CASES: usize = 1000;

fn random_set<R: Rng>(rng: &mut R) -> OrderSet {
    let n = rng.gen_range(1..=5);
    let gens: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=120)).collect();
    OrderSet::from_generators(&gens).expect("positive")
}

fn check_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..PROPERTY_CASES {
        let a = random_set(&mut rng);
        let b = random_set(&mut rng);
        let members = a.expand();
        ensure(
            members.iter().all(|&x| divisors(x).iter().all(|d| a.contains(*d))),
            || format!("case {case}: {a} not divisor-closed"),
        )?;
        let again = OrderSet::from_generators(a.maximal_elements()).expect("positive");
        ensure(again == a, || format!("case {case}: {a} not idempotent"))?;
        let ab = a.product(&b).map_err(|e| e.to_string())?;
        let ba = b.product(&a).map_err(|e| e.to_string())?;
        ensure(ab == ba, || format!("case {case}: product of {a} and {b} not symmetric"))?;
        ensure(a.is_subset(&ab), || format!("case {case}: {a} not inside {ab}"))?;
        let got: BTreeSet<u64> = ab.expand().into_iter().collect();
        ensure(got == brute_force_product(&a, &b), || {
            format!("case {case}: product of {a} and {b} differs from enumeration")
        })?;
    }
    let spec = SemidirectSpec::remark_group().map_err(|e| e.to_string())?;
    let sample = spec
        .sample(PROPERTY_CASES, &mut rng)
        .map_err(|e| e.to_string())?;
    ensure(sample.dichotomy_failures == 0, || {
        format!("{} order dichotomy failures", sample.dichotomy_failures)
    })?;
    Ok(format!("{PROPERTY_CASES} cases each, no failures"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selection() {
        assert!(selects("db", "db-filter"));
        assert!(selects("db-filter", "db-filter"));
        assert!(!selects("d", "db-filter"));
        assert!(!selects("remark", "restricted-sigma"));
        assert!(is_known_filter("remark"));
        assert!(!is_known_filter("nothing"));
    }

    #[test]
    fn ids_unique() {
        let ids = check_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn corrupted_records_fail() {
        let r = run("group X\nflag has9 maybe\n", Some("db"));
        assert_eq!(r.overall(), Status::Fail);
        let statuses: Vec<_> = r.checks.iter().map(|c| c.status).collect();
        assert_eq!(statuses, [Status::Fail, Status::Skipped, Status::Skipped]);
    }

    #[test]
    fn embedded_report_passes() {
        let r = run_embedded(None);
        assert_eq!(r.overall(), Status::Pass, "{}", r.to_text());
        assert_eq!(r.checks.len(), CHECKS.len());
    }

    #[test]
    fn only_filters() {
        let r = run_embedded(Some("wreath"));
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.overall(), Status::Pass);
    }
}
