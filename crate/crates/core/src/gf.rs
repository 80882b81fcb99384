//! Finite fields GF(p^k) in a polynomial basis.
//!
//! The defining polynomial is the first monic irreducible of degree `k` in
//! the order described at [`FiniteField::new`], so every run constructs the
//! same field and serialized elements stay comparable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::orderset::{factorize, is_prime};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("characteristic {0} is outside the supported range (< 2^31)")]
    CharacteristicTooLarge(u64),
    #[error("field of order {p}^{k} exceeds 2^63")]
    TooLarge { p: u64, k: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("{m} does not divide {q} - 1")]
    NotDivisor { m: u64, q: u64 },
    #[error("malformed field element `{0}`")]
    Syntax(String),
}

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    p: u64,
    k: u32,
    order: u64,
    /// Monic, `k + 1` coefficients ascending.
    modulus: Vec<u64>,
    /// `(p - modulus[j]) % p` for `j < k`: the reduction rule for `x^k`.
    reduction: Vec<u64>,
    /// Whether sums of `4k` products of residues fit in a `u64`.
    lazy: bool,
    /// Distinct primes dividing `order - 1`.
    unit_group_primes: Vec<u64>,
}

/// GF(p^k). Cheap to clone; clones share the same field data.
#[derive(Clone)]
pub struct FiniteField(Arc<FieldData>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{})/modulus=[{}]",
            self.0.p,
            self.0.k,
            join(&self.0.modulus)
        )
    }
}

impl FiniteField {
    /// Constructs GF(p^k).
    ///
    /// The modulus is the monic irreducible `x^k + c_{k-1}x^{k-1} + ... + c_0`
    /// whose index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` is smallest. For
    /// `k = 1` that is `x` itself.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if p >= 1 << 31 {
            return Err(FieldError::CharacteristicTooLarge(p));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= 1 << 63)
            .ok_or(FieldError::TooLarge { p, k })?;
        let ku = k as usize;
        let modulus = (0..order)
            .map(|n| {
                let mut coeffs = digits(n, p, ku);
                coeffs.push(1);
                coeffs
            })
            .find(|c| Poly::new(p, c.clone()).is_irreducible())
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self::with_modulus_unchecked(p, k, modulus))
    }

    fn with_modulus_unchecked(p: u64, k: u32, modulus: Vec<u64>) -> Self {
        let order = p.pow(k);
        let reduction = modulus[..k as usize]
            .iter()
            .map(|&c| (p - c) % p)
            .collect();
        let bound = (p as u128 - 1).pow(2) * 4 * k as u128;
        Self(Arc::new(FieldData {
            p,
            k,
            order,
            modulus,
            reduction,
            lazy: bound < (1u128 << 63),
            unit_group_primes: factorize(order as u128 - 1)
                .map(|f| f.primes())
                .unwrap_or_default(),
        }))
    }

    /// Field with an explicit modulus (ascending, monic, degree `k`).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(FieldError::CharacteristicTooLarge(p));
        }
        let poly = Poly::new(p, modulus.clone());
        let k = poly.degree().unwrap_or(0) as u32;
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if p.checked_pow(k).filter(|&q| q <= 1 << 63).is_none() {
            return Err(FieldError::TooLarge { p, k });
        }
        if poly.coeffs().last() != Some(&1) || !poly.is_irreducible() {
            return Err(FieldError::Syntax(format!("{modulus:?} is not monic irreducible")));
        }
        Ok(Self::with_modulus_unchecked(p, k, poly.coeffs().to_vec()))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    /// Number of elements, `p^k`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn constant(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.0.p;
        e
    }

    /// The basis vector `x^i`.
    pub fn basis(&self, i: usize) -> FieldElement {
        assert!(i < self.0.k as usize, "basis index out of range");
        let mut e = self.zero();
        e.coeffs[i] = 1;
        e
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.0.k as usize {
            return Err(FieldError::Syntax(format!("{coeffs:?}")));
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: coeffs.iter().map(|&c| c % self.0.p).collect(),
        })
    }

    /// The element whose base-`p` digits (least significant first) are its
    /// coefficients. This is the enumeration order used throughout.
    pub fn from_index(&self, n: u64) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: digits(n % self.0.order, self.0.p, self.0.k as usize),
        }
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.from_index(rng.gen_range(0..self.0.order))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.from_index(rng.gen_range(1..self.0.order))
    }

    /// Parses the `p,k:[c0,...]` text form.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let e: ParsedElement = s.parse()?;
        if e.p != self.0.p || e.k != self.0.k {
            return Err(FieldError::MixedFields);
        }
        self.element(&e.coeffs)
    }

    /// An element of multiplicative order exactly `m`.
    ///
    /// Scans candidates `g` in index order and returns the first
    /// `g^((q-1)/m)` whose order is `m`.
    pub fn subgroup_generator(&self, m: u64) -> Result<FieldElement, FieldError> {
        let q1 = self.0.order - 1;
        if m == 0 || !q1.is_multiple_of(m) {
            return Err(FieldError::NotDivisor {
                m,
                q: self.0.order,
            });
        }
        let cofactor = q1 / m;
        for n in 1..self.0.order {
            let h = self.from_index(n).pow(cofactor);
            if h.multiplicative_order()? == m {
                return Ok(h);
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Addition and multiplication tables on element indices; small fields only.
    pub fn tables(&self) -> (Vec<u16>, Vec<u16>) {
        let q = self.0.order as usize;
        assert!(q <= 1 << 12, "tables are meant for small fields");
        let elems: Vec<FieldElement> = (0..q as u64).map(|n| self.from_index(n)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = (a + b).index() as u16;
                mul[i * q + j] = (a * b).index() as u16;
            }
        }
        (add, mul)
    }
}

fn join(coeffs: &[u64]) -> String {
    coeffs
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn digits(mut n: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(n % p);
        n /= p;
    }
    out
}

struct ParsedElement {
    p: u64,
    k: u32,
    coeffs: Vec<u64>,
}

impl FromStr for ParsedElement {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::Syntax(s.to_string());
        let (head, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let (p, k) = head.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let k = k.trim().parse().map_err(|_| bad())?;
        let body = body
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coeffs = body
            .split(',')
            .map(|c| c.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<u64>, _>>()?;
        Ok(Self { p, k, coeffs })
    }
}

/// An element of a [`FiniteField`].
///
/// The arithmetic operators panic when the operands come from different
/// fields; the `checked_*` methods report that as an error instead.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{}:[{}]",
            self.field.0.p,
            self.field.0.k,
            join(&self.coeffs)
        )
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Inverse of [`FiniteField::from_index`].
    pub fn index(&self) -> u64 {
        let p = self.field.0.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(Self {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let data = &*self.field.0;
        let (p, k) = (data.p, data.k as usize);
        let mut stack = [0u64; 63];
        let mut heap = Vec::new();
        let t: &mut [u64] = if k <= 32 {
            &mut stack[..2 * k - 1]
        } else {
            heap.resize(2 * k - 1, 0);
            &mut heap
        };
        if data.lazy {
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a != 0 {
                    for (x, &b) in t[i..i + k].iter_mut().zip(&other.coeffs) {
                        *x += a * b;
                    }
                }
            }
            for i in (k..2 * k - 1).rev() {
                let c = t[i] % p;
                if c != 0 {
                    for (x, &r) in t[i - k..i].iter_mut().zip(&data.reduction) {
                        *x += c * r;
                    }
                }
            }
            for c in &mut t[..k] {
                *c %= p;
            }
        } else {
            for (i, &a) in self.coeffs.iter().enumerate() {
                for (j, &b) in other.coeffs.iter().enumerate() {
                    t[i + j] = (t[i + j] + a * b % p) % p;
                }
            }
            for i in (k..2 * k - 1).rev() {
                let c = t[i];
                for (j, &r) in data.reduction.iter().enumerate() {
                    t[i - k + j] = (t[i - k + j] + c * r % p) % p;
                }
            }
        }
        Self {
            field: self.field.clone(),
            coeffs: t[..k].to_vec(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// `self^(p^e)`: the `e`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, e: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..e % self.field.0.k {
            out = out.pow(self.field.0.p);
        }
        out
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.field.0.order - 2))
    }

    /// Multiplicative order, found by stripping prime factors from `q - 1`.
    pub fn multiplicative_order(&self) -> Result<u64, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroOrder);
        }
        let q1 = self.field.0.order - 1;
        let mut m = 1;
        for &r in &self.field.0.unit_group_primes {
            let mut part = 1;
            while q1.is_multiple_of(part * r) {
                part *= r;
            }
            // the r-part of the order is the order of self^(q1 / part)
            let mut y = self.pow(q1 / part);
            while !y.is_one() {
                y = y.pow(r);
                m *= r;
            }
        }
        Ok(m)
    }

    /// Multiplication by a scalar from the prime field.
    pub fn scale(&self, c: u64) -> Self {
        let p = self.field.0.p;
        let c = c % p;
        Self {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| ((a as u128 * c as u128) % p as u128) as u64)
                .collect(),
        }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("mixed fields in addition")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("mixed fields in subtraction")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("mixed fields in multiplication")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.0.p;
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_has_modulus_x() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 7);
        let a = f.constant(3);
        assert_eq!((&a * &f.constant(5)).coeffs(), &[1]);
        assert_eq!(a.inverse().unwrap().coeffs(), &[5]);
    }

    #[test]
    fn known_smallest_moduli() {
        // x^2 + 1 is the first irreducible quadratic over GF(3) in index order
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(FiniteField::new(4, 2), Err(FieldError::NotPrime(4)));
        assert_eq!(FiniteField::new(3, 0), Err(FieldError::ZeroDegree));
        assert_eq!(
            FiniteField::new(2, 64),
            Err(FieldError::TooLarge { p: 2, k: 64 })
        );
        assert!(FiniteField::new(2, 63).is_ok());
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::with_modulus(2, vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn zero_errors() {
        let f = FiniteField::new(3, 4).unwrap();
        assert_eq!(f.zero().inverse(), Err(FieldError::ZeroInverse));
        assert_eq!(f.zero().multiplicative_order(), Err(FieldError::ZeroOrder));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FiniteField::new(3, 4).unwrap().one();
        let b = FiniteField::new(3, 2).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(FieldError::MixedFields));
        assert_eq!(a.checked_mul(&b), Err(FieldError::MixedFields));
        // equal parameters from separate constructions are the same field
        let c = FiniteField::new(3, 4).unwrap().one();
        assert!(a.checked_mul(&c).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let f = FiniteField::new(3, 4).unwrap();
        let x = f.element(&[2, 0, 1, 1]).unwrap();
        assert_eq!(x.to_string(), "3,4:[2,0,1,1]");
        assert_eq!(f.parse_element("3,4:[2,0,1,1]").unwrap(), x);
        assert!(f.parse_element("3,2:[2,0]").is_err());
        assert!(f.parse_element("3,4:2,0,1,1").is_err());
        assert!(f.to_string().starts_with("GF(3^4)/modulus=["));
    }

    #[test]
    fn subgroup_generator_orders() {
        let f = FiniteField::new(3, 4).unwrap();
        let g = f.subgroup_generator(5).unwrap();
        assert_eq!(g.multiplicative_order().unwrap(), 5);
        assert!(f.subgroup_generator(1).unwrap().is_one());
        assert_eq!(
            f.subgroup_generator(7),
            Err(FieldError::NotDivisor { m: 7, q: 81 })
        );
        assert_eq!(f.subgroup_generator(80).unwrap().multiplicative_order(), Ok(80));
    }

    #[test]
    fn frobenius_is_additive() {
        let f = FiniteField::new(2, 11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = f.random(&mut rng);
            let b = f.random(&mut rng);
            assert_eq!((&a + &b).frobenius(1), &a.frobenius(1) + &b.frobenius(1));
            assert_eq!(a.frobenius(11), a);
        }
    }

    #[test]
    fn index_round_trip() {
        let f = FiniteField::new(5, 2).unwrap();
        for n in 0..25 {
            assert_eq!(f.from_index(n).index(), n);
        }
    }

    #[test]
    fn tables_agree_with_arithmetic() {
        let f = FiniteField::new(2, 3).unwrap();
        let (add, mul) = f.tables();
        for i in 0..8u64 {
            for j in 0..8u64 {
                let (a, b) = (f.from_index(i), f.from_index(j));
                assert_eq!(add[(i * 8 + j) as usize] as u64, (&a + &b).index());
                assert_eq!(mul[(i * 8 + j) as usize] as u64, (&a * &b).index());
            }
        }
    }
}
