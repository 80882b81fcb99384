//! Divisor-closed sets of positive integers.
//!
//! An [`OrderSet`] models the set of element orders of a finite group. Such a
//! set is closed under taking divisors, so it is determined by its maximal
//! elements under divisibility. Only that antichain is stored; membership and
//! the prime-counting queries reduce to divisibility tests against it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderSetError {
    #[error("element orders must be positive, got 0")]
    Zero,
    #[error("an order set needs at least one generator")]
    Empty,
    #[error("lcm({0}, {1}) does not fit in 64 bits")]
    Overflow(u64, u64),
    #[error("cannot parse `{0}` as a positive integer")]
    Parse(String),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, failing instead of wrapping.
pub fn checked_lcm(a: u64, b: u64) -> Result<u64, OrderSetError> {
    if a == 0 || b == 0 {
        return Err(OrderSetError::Zero);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(OrderSetError::Overflow(a, b))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, increasing.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors of `n`, increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as `(prime, exponent)` pairs with increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    /// Builds a factorization from explicit pairs, merging repeated primes.
    pub fn from_pairs(pairs: &[(u64, u32)]) -> Result<Self, FactorizationError> {
        let mut merged: Vec<(u64, u32)> = Vec::new();
        let mut sorted = pairs.to_vec();
        sorted.sort_unstable();
        for (p, e) in sorted {
            if !is_prime(p) {
                return Err(FactorizationError::NotPrime(p));
            }
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => merged.push((p, e)),
            }
        }
        Ok(Self(merged))
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> Vec<u64> {
        self.0.iter().map(|&(p, _)| p).collect()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The integer this factorization represents, if it fits in 128 bits.
    pub fn value(&self) -> Option<u128> {
        self.0.iter().try_fold(1u128, |acc, &(p, e)| {
            (p as u128).checked_pow(e).and_then(|pe| acc.checked_mul(pe))
        })
    }

    /// `self` divides `other`, compared prime by prime.
    pub fn divides(&self, other: &Factorization) -> bool {
        self.0.iter().all(|&(p, e)| other.exponent_of(p) >= e)
    }

    /// Quotient `self / other`; `None` unless `other` divides `self`.
    pub fn quotient(&self, other: &Factorization) -> Option<Factorization> {
        if !other.divides(self) {
            return None;
        }
        let pairs = self
            .0
            .iter()
            .map(|&(p, e)| (p, e - other.exponent_of(p)))
            .filter(|&(_, e)| e > 0)
            .collect();
        Some(Self(pairs))
    }

    pub fn is_coprime_to(&self, other: &Factorization) -> bool {
        self.0.iter().all(|&(p, _)| other.exponent_of(p) == 0)
    }
}

impl fmt::Display for Factorization {
    /// `2^3 3 11 23`; the empty factorization prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = FactorizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::default());
        }
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (p, e) = match tok.split_once('^') {
                Some((p, e)) => (p, e),
                None => (tok, "1"),
            };
            let p: u64 = p
                .parse()
                .map_err(|_| FactorizationError::Syntax(tok.to_string()))?;
            let e: u32 = e
                .parse()
                .map_err(|_| FactorizationError::Syntax(tok.to_string()))?;
            if e == 0 {
                return Err(FactorizationError::Syntax(tok.to_string()));
            }
            pairs.push((p, e));
        }
        let mut primes: Vec<u64> = pairs.iter().map(|&(p, _)| p).collect();
        primes.dedup();
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FactorizationError::Unsorted(s.to_string()));
        }
        Self::from_pairs(&pairs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error("cannot factor 0")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("malformed factor `{0}`")]
    Syntax(String),
    #[error("primes must be strictly increasing in `{0}`")]
    Unsorted(String),
}

/// Trial-division factorization.
///
/// Accepts 128-bit input so that group orders such as |J4| (which exceeds
/// 2^64) can be checked, but the running time is governed by the second
/// largest prime factor, so only smooth or small inputs are practical.
pub fn factorize(n: u128) -> Result<Factorization, FactorizationError> {
    if n == 0 {
        return Err(FactorizationError::Zero);
    }
    let mut n = n;
    let mut pairs = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            pairs.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let p = u64::try_from(n).map_err(|_| FactorizationError::NotPrime(u64::MAX))?;
        pairs.push((p, 1));
    }
    Ok(Factorization(pairs))
}

/// A divisor-closed set of positive integers, stored by its maximal elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderSet {
    maximal: Vec<u64>,
}

impl OrderSet {
    /// The set `{1}`, i.e. the spectrum of the trivial group.
    pub fn trivial() -> Self {
        Self { maximal: vec![1] }
    }

    /// The divisor closure of `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self, OrderSetError> {
        if gens.is_empty() {
            return Err(OrderSetError::Empty);
        }
        if gens.contains(&0) {
            return Err(OrderSetError::Zero);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // Anything dividing a later (larger) element is dominated.
        let maximal = sorted
            .iter()
            .enumerate()
            .filter(|&(i, &a)| !sorted[i + 1..].iter().any(|&b| b % a == 0))
            .map(|(_, &a)| a)
            .collect();
        Ok(Self { maximal })
    }

    pub fn maximal_elements(&self) -> &[u64] {
        &self.maximal
    }

    pub fn contains(&self, n: u64) -> bool {
        n != 0 && self.maximal.iter().any(|&m| m % n == 0)
    }

    /// Every member, increasing.
    pub fn expand(&self) -> Vec<u64> {
        let all: BTreeSet<u64> = self.maximal.iter().flat_map(|&m| divisors(m)).collect();
        all.into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.expand().len()
    }

    /// Always false: every order set contains 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `self ⊆ other` as represented sets.
    pub fn is_subset(&self, other: &OrderSet) -> bool {
        self.maximal.iter().all(|&m| other.contains(m))
    }

    /// Primes dividing some member.
    pub fn pi(&self) -> Vec<u64> {
        let all: BTreeSet<u64> = self
            .maximal
            .iter()
            .flat_map(|&m| prime_divisors(m))
            .collect();
        all.into_iter().collect()
    }

    /// Largest number of distinct primes dividing a single member.
    pub fn sigma(&self) -> usize {
        self.maximal
            .iter()
            .map(|&m| prime_divisors(m).len())
            .max()
            .unwrap_or(0)
    }

    /// Largest number of primes from `primes` dividing a single member.
    pub fn restricted_sigma(&self, primes: &[u64]) -> usize {
        self.maximal
            .iter()
            .map(|&m| primes.iter().filter(|&&p| p > 1 && m % p == 0).count())
            .max()
            .unwrap_or(0)
    }

    /// Spectrum of a direct product: divisors of `lcm(a, b)` over members.
    pub fn product(&self, other: &OrderSet) -> Result<OrderSet, OrderSetError> {
        let mut lcms = Vec::with_capacity(self.maximal.len() * other.maximal.len());
        for &a in &self.maximal {
            for &b in &other.maximal {
                lcms.push(checked_lcm(a, b)?);
            }
        }
        Self::from_generators(&lcms)
    }

    /// Spectrum of the wreath product `G ≀ C2` given the spectrum of `G`.
    ///
    /// Base elements contribute `product(self, self)`. An element `(g, h)τ`
    /// outside the base squares to `(gh, hg)`, so its order is `2|gh|` with
    /// `gh` ranging over all of `G`.
    pub fn wreath2(&self) -> Result<OrderSet, OrderSetError> {
        let square = self.product(self)?;
        let mut gens = square.maximal.clone();
        for &m in &self.maximal {
            gens.push(m.checked_mul(2).ok_or(OrderSetError::Overflow(m, 2))?);
        }
        Self::from_generators(&gens)
    }
}

impl fmt::Display for OrderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.maximal.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for OrderSet {
    type Err = OrderSetError;

    /// Parses comma-separated generators; they need not form an antichain.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let gens = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u64>()
                    .map_err(|_| OrderSetError::Parse(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_generators(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        let f = factorize(2310).unwrap();
        assert_eq!(f.pairs(), &[(2, 1), (3, 1), (5, 1), (7, 1), (11, 1)]);
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(0), Err(FactorizationError::Zero));
        assert_eq!(factorize(1 << 40).unwrap().pairs(), &[(2, 40)]);
        assert_eq!(factorize(43_046_720).unwrap().to_string(), "2^6 5 17 41 193");
    }

    #[test]
    fn factorization_text() {
        let f: Factorization = "2^3 3 11 23".parse().unwrap();
        assert_eq!(f.value(), Some(6072));
        assert_eq!(f.to_string(), "2^3 3 11 23");
        assert!("3 2".parse::<Factorization>().is_err());
        assert!("4^2".parse::<Factorization>().is_err());
        assert!("2^x".parse::<Factorization>().is_err());
    }

    #[test]
    fn antichain_reduction() {
        let s = OrderSet::from_generators(&[2, 4]).unwrap();
        assert_eq!(s.maximal_elements(), &[4]);
        let s = OrderSet::from_generators(&[6, 3, 6, 10, 1]).unwrap();
        assert_eq!(s.maximal_elements(), &[6, 10]);
        assert_eq!(s.expand(), vec![1, 2, 3, 5, 6, 10]);
        assert_eq!(OrderSet::from_generators(&[]), Err(OrderSetError::Empty));
        assert_eq!(OrderSet::from_generators(&[3, 0]), Err(OrderSetError::Zero));
    }

    #[test]
    fn trivial_set() {
        let one = OrderSet::trivial();
        assert!(one.pi().is_empty());
        assert_eq!(one.sigma(), 0);
        assert_eq!(one.restricted_sigma(&[]), 0);
        assert_eq!(one.wreath2().unwrap().expand(), vec![1, 2]);
        assert!(!one.contains(0));
    }

    #[test]
    fn small_product() {
        let a = OrderSet::from_generators(&[2, 3]).unwrap();
        let b = OrderSet::from_generators(&[5]).unwrap();
        let p = a.product(&b).unwrap();
        assert_eq!(p.maximal_elements(), &[10, 15]);
        assert_eq!(p.expand(), vec![1, 2, 3, 5, 10, 15]);
    }

    #[test]
    fn product_overflow_is_an_error() {
        let a = OrderSet::from_generators(&[u64::MAX - 1]).unwrap();
        let b = OrderSet::from_generators(&[3]).unwrap();
        assert!(matches!(a.product(&b), Err(OrderSetError::Overflow(..))));
        let c = OrderSet::from_generators(&[u64::MAX / 2 + 1]).unwrap();
        assert!(matches!(c.wreath2(), Err(OrderSetError::Overflow(..))));
    }

    #[test]
    fn text_form() {
        let s: OrderSet = "16, 8,23".parse().unwrap();
        assert_eq!(s.to_string(), "16,23");
        assert!("1,x".parse::<OrderSet>().is_err());
        assert!("0".parse::<OrderSet>().is_err());
        assert!("".parse::<OrderSet>().is_err());
    }
}
