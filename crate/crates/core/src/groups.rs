//! Concrete groups: spectrum data for J4, explicit semidirect products over
//! finite fields, semilinear Frobenius groups, PSL(2, q) by enumeration, and
//! arithmetic checks on group orders.

use std::collections::BTreeSet;

use rand::Rng;
use thiserror::Error;

use crate::atlasdb::GroupRecord;
use crate::gf::{FieldError, FiniteField};
use crate::linact::{
    semidirect_element_order, semidirect_spectrum, Action, ActionError, ActionGroupElement,
    LinearAction, SemidirectPair,
};
use crate::orderset::{factorize, gcd, Factorization, OrderSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q = {0} is outside the enumerable range 2..=64")]
    OutOfRange(u64),
    #[error("subgroup order {sub} does not divide group order {group}")]
    NotDivisor { sub: String, group: String },
    #[error("complement order {c} does not divide the extension degree {k}")]
    BadComplement { c: u32, k: u32 },
}

/// Maximal element orders of J4; their divisors are exactly its spectrum.
pub const J4_MAXIMAL_ORDERS: [u64; 14] = [16, 23, 24, 28, 29, 30, 31, 35, 37, 40, 42, 43, 44, 66];

/// |J4| = 2^21 · 3^3 · 5 · 7 · 11^3 · 23 · 29 · 31 · 37 · 43.
pub const J4_ORDER: [(u64, u32); 10] = [
    (2, 21),
    (3, 3),
    (5, 1),
    (7, 1),
    (11, 3),
    (23, 1),
    (29, 1),
    (31, 1),
    (37, 1),
    (43, 1),
];

/// Primes of J4 that divide no element order together with 7.
pub const PI_1: [u64; 7] = [5, 11, 23, 29, 31, 37, 43];
/// Primes of J4 that divide no element order together with 5.
pub const PI_2: [u64; 7] = [7, 11, 23, 29, 31, 37, 43];

/// Element orders that an extension of an elementary abelian group by
/// `J4 × J4` would be forced to contain, one family per characteristic.
/// None of them lies in the spectrum of `J4 × J4`.
pub fn j4_extension_witness_orders() -> Vec<u64> {
    let mut out = vec![
        2 * 28 * 37,
        2 * 29 * 37,
        3 * 28 * 37,
        3 * 29 * 37,
        5 * 11 * 31,
        7 * 29 * 43,
        7 * 11 * 23,
        11 * 23 * 43,
        5 * 23 * 28,
        5 * 23 * 29,
        11 * 23 * 28,
        11 * 23 * 29,
        7 * 11 * 29,
        7 * 23 * 29,
        11 * 29 * 43,
        23 * 29 * 43,
        9,
        25,
        49,
        121,
    ];
    for p in [31, 37, 43] {
        out.extend([7 * 11 * p, 7 * 23 * p, 11 * 29 * p, 23 * 29 * p]);
    }
    out
}

pub fn j4_spectrum() -> OrderSet {
    OrderSet::from_generators(&J4_MAXIMAL_ORDERS).expect("static data")
}

pub fn j4_order() -> Factorization {
    Factorization::from_pairs(&J4_ORDER).expect("static data")
}

/// Spectrum of `J4 × J4`.
pub fn j4_squared_spectrum() -> OrderSet {
    j4_spectrum().product(&j4_spectrum()).expect("lcms are small")
}

/// `(summand index, cyclic subgroup order)`: the subgroup of that order in
/// the unit group of the summand multiplies there and acts trivially on all
/// other summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Actor {
    pub summand: usize,
    pub order: u64,
}

/// `(V_1 ⊕ ... ⊕ V_r) ⋊ (L_1 × ... × L_s)` with each `L_i` a cyclic group
/// of units acting on one summand.
#[derive(Debug, Clone)]
pub struct SemidirectSpec {
    pub summands: Vec<FiniteField>,
    pub actors: Vec<Actor>,
}

/// Outcome of comparing random elements against a structural spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub samples: usize,
    /// Orders found by direct multiplication that are missing from the spectrum.
    pub outside_spectrum: Vec<u64>,
    /// Samples where direct multiplication disagrees with the T-sum rule.
    pub dichotomy_failures: usize,
    pub orders_seen: BTreeSet<u64>,
}

impl SemidirectSpec {
    /// `(GF(3^16)⁺ ⊕ GF(3^4)⁺) ⋊ (C17 × C5)`: the units of order 17 act on
    /// the first summand, those of order 5 on the second.
    pub fn remark_group() -> Result<Self, GroupError> {
        Ok(Self {
            summands: vec![FiniteField::new(3, 16)?, FiniteField::new(3, 4)?],
            actors: vec![
                Actor {
                    summand: 0,
                    order: 17,
                },
                Actor {
                    summand: 1,
                    order: 5,
                },
            ],
        })
    }

    pub fn generators(&self) -> Result<Vec<ActionGroupElement>, GroupError> {
        self.actors
            .iter()
            .map(|actor| {
                let mut components: Vec<LinearAction> =
                    self.summands.iter().map(LinearAction::identity).collect();
                let field = &self.summands[actor.summand];
                let unit = field.subgroup_generator(actor.order)?;
                components[actor.summand] = LinearAction::multiplication(unit)?;
                Ok(ActionGroupElement::new(components))
            })
            .collect()
    }

    /// Every element of the (abelian) acting group, in mixed-radix order.
    pub fn acting_group(&self) -> Result<Vec<ActionGroupElement>, GroupError> {
        let mut elements = vec![ActionGroupElement::identity(&self.summands)];
        for (g, actor) in self.generators()?.iter().zip(&self.actors) {
            let powers: Vec<_> = (0..actor.order).map(|i| g.pow(i)).collect();
            elements = elements
                .iter()
                .flat_map(|e| powers.iter().map(move |g| e.compose(g)))
                .collect();
        }
        Ok(elements)
    }

    pub fn spectrum(&self) -> Result<OrderSet, GroupError> {
        Ok(semidirect_spectrum(&self.summands, &self.acting_group()?)?)
    }

    /// Draws `n` uniform elements `(v, h)` and computes each order twice:
    /// by repeated multiplication and by the T-sum rule.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        n: usize,
        rng: &mut R,
    ) -> Result<SampleReport, GroupError> {
        let spectrum = self.spectrum()?;
        let acting = self.acting_group()?;
        let mut report = SampleReport {
            samples: n,
            outside_spectrum: Vec::new(),
            dichotomy_failures: 0,
            orders_seen: BTreeSet::new(),
        };
        for _ in 0..n {
            let v: Vec<_> = self.summands.iter().map(|f| f.random(rng)).collect();
            let h = acting[rng.gen_range(0..acting.len())].clone();
            let by_rule = semidirect_element_order(&v, &h)?;
            let direct = SemidirectPair { v, h }.order_by_powers();
            if direct != by_rule {
                report.dichotomy_failures += 1;
            }
            if !spectrum.contains(direct) {
                report.outside_spectrum.push(direct);
            }
            report.orders_seen.insert(direct);
        }
        Ok(report)
    }
}

/// Descriptive evaluation of a spectrum against the hypotheses "for distinct
/// `p, q` in π: `p ∤ q − 1` and `pq ∈ ω`" and the bound `|π| ≤ 3`.
///
/// Solvability is not checked; it is the caller's assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    pub pi: Vec<u64>,
    pub sigma: usize,
    /// No `p` divides `q − 1`.
    pub cond1_ok: bool,
    /// Every product `pq` is an element order.
    pub cond2_ok: bool,
    pub bound_ok: bool,
    /// Ordered pairs `(p, q)` with `p | q − 1`.
    pub divisibility_violations: Vec<(u64, u64)>,
    /// Pairs `p < q` with `pq` missing.
    pub missing_products: Vec<(u64, u64)>,
}

impl PropositionReport {
    /// All hypotheses hold with σ = 2.
    pub fn hypotheses_hold(&self) -> bool {
        self.sigma == 2 && self.cond1_ok && self.cond2_ok
    }
}

pub fn check_proposition_hypotheses(spectrum: &OrderSet) -> PropositionReport {
    let pi = spectrum.pi();
    let mut divisibility_violations = Vec::new();
    let mut missing_products = Vec::new();
    for &p in &pi {
        for &q in &pi {
            if p != q && (q - 1) % p == 0 {
                divisibility_violations.push((p, q));
            }
            if p < q && !p.checked_mul(q).is_some_and(|pq| spectrum.contains(pq)) {
                missing_products.push((p, q));
            }
        }
    }
    PropositionReport {
        sigma: spectrum.sigma(),
        cond1_ok: divisibility_violations.is_empty(),
        cond2_ok: missing_products.is_empty(),
        bound_ok: pi.len() <= 3,
        pi,
        divisibility_violations,
        missing_products,
    }
}

/// `⟨ζ_m⟩ ⋊ ⟨φ^(k/c)⟩` inside ΓL₁(p^k): multiplications by `m`-th roots of
/// unity extended by a cyclic group of field automorphisms of order `c`.
#[derive(Debug, Clone)]
pub struct GammaFrobenius {
    pub field: FiniteField,
    pub kernel_order: u64,
    pub complement_order: u32,
    pub kernel_generator: LinearAction,
    pub complement_generator: LinearAction,
    /// All `m·c` elements `ζ^a φ^(j k/c)`.
    pub elements: Vec<LinearAction>,
}

/// The full semilinear extension, complement of order `k`.
pub fn build_gamma_frobenius(p: u64, k: u32, m: u64) -> Result<GammaFrobenius, GroupError> {
    build_gamma_frobenius_with_complement(p, k, m, k)
}

pub fn build_gamma_frobenius_with_complement(
    p: u64,
    k: u32,
    m: u64,
    c: u32,
) -> Result<GammaFrobenius, GroupError> {
    if c == 0 || !k.is_multiple_of(c) {
        return Err(GroupError::BadComplement { c, k });
    }
    let field = FiniteField::new(p, k)?;
    let zeta = LinearAction::multiplication(field.subgroup_generator(m)?)?;
    let sigma = LinearAction::galois(&field, k / c);
    let mut elements = Vec::with_capacity(m as usize * c as usize);
    for a in 0..m {
        let z = zeta.pow(a);
        for j in 0..c as u64 {
            elements.push(z.compose(&sigma.pow(j)));
        }
    }
    Ok(GammaFrobenius {
        field,
        kernel_order: m,
        complement_order: c,
        kernel_generator: zeta,
        complement_generator: sigma,
        elements,
    })
}

impl GammaFrobenius {
    /// Multiplicative order of `p` modulo the kernel order.
    pub fn ord_p_mod_m(&self) -> u64 {
        let p = self.field.characteristic() % self.kernel_order;
        if self.kernel_order == 1 {
            return 1;
        }
        let mut x = p;
        let mut n = 1;
        while x != 1 {
            x = x * p % self.kernel_order;
            n += 1;
        }
        n
    }

    /// Nontrivial complement, and no nontrivial complement element
    /// centralizes a nontrivial kernel element (checked by conjugating).
    pub fn is_frobenius(&self) -> bool {
        if self.complement_order < 2 || self.kernel_order < 2 {
            return false;
        }
        let kernel: Vec<_> = (1..self.kernel_order)
            .map(|a| self.kernel_generator.pow(a))
            .collect();
        (1..self.complement_order as u64).all(|j| {
            let s = self.complement_generator.pow(j);
            let s_inv = s.inverse();
            kernel
                .iter()
                .all(|z| s.compose(z).compose(&s_inv) != *z)
        })
    }

    pub fn kernel_elements(&self) -> Vec<ActionGroupElement> {
        (0..self.kernel_order)
            .map(|a| ActionGroupElement::new(vec![self.kernel_generator.pow(a)]))
            .collect()
    }

    pub fn complement_elements(&self) -> Vec<ActionGroupElement> {
        (0..self.complement_order as u64)
            .map(|j| ActionGroupElement::new(vec![self.complement_generator.pow(j)]))
            .collect()
    }

    pub fn acting_group(&self) -> Vec<ActionGroupElement> {
        self.elements
            .iter()
            .map(|h| ActionGroupElement::new(vec![h.clone()]))
            .collect()
    }

    /// Spectrum of `GF(p^k)⁺ ⋊ H` for the whole group `H`.
    pub fn affine_spectrum(&self) -> Result<OrderSet, GroupError> {
        Ok(semidirect_spectrum(
            std::slice::from_ref(&self.field),
            &self.acting_group(),
        )?)
    }
}

/// PSL(2, q) computed by enumerating SL(2, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psl2Report {
    pub q: u64,
    pub p: u64,
    /// |PSL(2, q)| counted from the enumeration.
    pub order: u64,
    pub spectrum: OrderSet,
}

impl Psl2Report {
    /// `q(q² − 1) / gcd(2, q − 1)`.
    pub fn closed_form_order(q: u64) -> u64 {
        q * (q * q - 1) / gcd(2, q - 1)
    }

    /// Every element order divides `p`, `(q−1)/d` or `(q+1)/d`, `d = gcd(2, q−1)`.
    pub fn classical_structure_holds(&self) -> bool {
        let d = gcd(2, self.q - 1);
        let tori = [self.p, (self.q - 1) / d, (self.q + 1) / d];
        self.spectrum
            .maximal_elements()
            .iter()
            .all(|&m| tori.iter().any(|&t| t % m == 0))
    }

    pub fn name(&self) -> String {
        format!("L2({})", self.q)
    }

    pub fn to_record(&self) -> GroupRecord {
        let spectrum = &self.spectrum;
        GroupRecord {
            name: self.name(),
            order: Some(factorize(self.order as u128).expect("order is positive")),
            pi: spectrum.pi(),
            mu: Some(spectrum.clone()),
            has9: Some(spectrum.contains(9)),
            has25: Some(spectrum.contains(25)),
            notes: vec!["spectrum verified by psl2 oracle".to_string()],
        }
    }
}

/// Splits a prime power into `(p, k)`.
pub fn prime_power(q: u64) -> Result<(u64, u32), GroupError> {
    let f = factorize(q as u128).map_err(|_| GroupError::NotPrimePower(q))?;
    match f.pairs() {
        [(p, k)] => Ok((*p, *k)),
        _ => Err(GroupError::NotPrimePower(q)),
    }
}

pub fn psl2_spectrum(q: u64) -> Result<Psl2Report, GroupError> {
    if !(2..=64).contains(&q) {
        return Err(GroupError::OutOfRange(q));
    }
    let (p, k) = prime_power(q)?;
    let field = FiniteField::new(p, k)?;
    let (add, mul) = field.tables();
    let qs = q as usize;
    let add = |a: u16, b: u16| add[a as usize * qs + b as usize];
    let mul = |a: u16, b: u16| mul[a as usize * qs + b as usize];
    let zero = 0u16;
    let one = 1u16;
    let neg = |a: u16| (0..q as u16).find(|&b| add(a, b) == zero).unwrap();
    let inv = |a: u16| (1..q as u16).find(|&b| mul(a, b) == one).unwrap();
    let minus_one = neg(one);

    let matmul = |x: [u16; 4], y: [u16; 4]| {
        [
            add(mul(x[0], y[0]), mul(x[1], y[2])),
            add(mul(x[0], y[1]), mul(x[1], y[3])),
            add(mul(x[2], y[0]), mul(x[3], y[2])),
            add(mul(x[2], y[1]), mul(x[3], y[3])),
        ]
    };
    let is_central = |x: [u16; 4]| {
        x[1] == zero && x[2] == zero && x[0] == x[3] && (x[0] == one || x[0] == minus_one)
    };

    let mut count = 0u64;
    let mut orders = BTreeSet::new();
    let mut visit = |m: [u16; 4]| {
        count += 1;
        let mut power = m;
        let mut e = 1u64;
        while !is_central(power) {
            power = matmul(power, m);
            e += 1;
        }
        orders.insert(e);
    };
    for a in 0..q as u16 {
        for b in 0..q as u16 {
            for c in 0..q as u16 {
                if a != zero {
                    // d = (1 + bc) / a
                    let d = mul(add(one, mul(b, c)), inv(a));
                    visit([a, b, c, d]);
                } else if b != zero && mul(b, c) == minus_one {
                    for d in 0..q as u16 {
                        visit([a, b, c, d]);
                    }
                }
            }
        }
    }
    let order = count / gcd(2, q - 1);
    let gens: Vec<u64> = orders.into_iter().collect();
    Ok(Psl2Report {
        q,
        p,
        order,
        spectrum: OrderSet::from_generators(&gens).expect("orders are positive"),
    })
}

/// Whether a subgroup of the given order would be a Hall subgroup, i.e.
/// its order is coprime to its index.
pub fn hall_check(group: &Factorization, subgroup: &Factorization) -> Result<bool, GroupError> {
    let index = group
        .quotient(subgroup)
        .ok_or_else(|| GroupError::NotDivisor {
            sub: subgroup.to_string(),
            group: group.to_string(),
        })?;
    Ok(subgroup.is_coprime_to(&index))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j4_order_reconstructs() {
        let n = j4_order().value().unwrap();
        assert_eq!(n, 86_775_571_046_077_562_880);
        assert_eq!(factorize(n).unwrap(), j4_order());
    }

    #[test]
    fn proposition_on_trivial_spectrum() {
        let r = check_proposition_hypotheses(&OrderSet::trivial());
        assert!(r.pi.is_empty());
        assert!(r.cond1_ok && r.cond2_ok && r.bound_ok);
        assert_eq!(r.sigma, 0);
    }

    #[test]
    fn proposition_on_j4_fails_parity() {
        let r = check_proposition_hypotheses(&j4_spectrum());
        assert!(!r.cond1_ok);
        assert!(r.divisibility_violations.contains(&(2, 3)));
        assert!(!r.cond2_ok);
        assert!(r.missing_products.contains(&(29, 31)));
        assert!(!r.bound_ok);
    }

    #[test]
    fn psl2_small_cases() {
        // PSL(2,2) = S3, PSL(2,3) = A4, PSL(2,4) = PSL(2,5) = A5
        assert_eq!(psl2_spectrum(2).unwrap().spectrum.expand(), vec![1, 2, 3]);
        assert_eq!(psl2_spectrum(3).unwrap().spectrum.expand(), vec![1, 2, 3]);
        let a5 = psl2_spectrum(4).unwrap();
        assert_eq!(a5.order, 60);
        assert_eq!(a5.spectrum.expand(), vec![1, 2, 3, 5]);
        assert_eq!(psl2_spectrum(5).unwrap().spectrum, a5.spectrum);
    }

    #[test]
    fn psl2_range() {
        assert_eq!(psl2_spectrum(65), Err(GroupError::OutOfRange(65)));
        assert_eq!(psl2_spectrum(1), Err(GroupError::OutOfRange(1)));
        assert_eq!(psl2_spectrum(6), Err(GroupError::NotPrimePower(6)));
    }

    #[test]
    fn hall_checks() {
        let l223: Factorization = "2^3 3 11 23".parse().unwrap();
        let f253: Factorization = "11 23".parse().unwrap();
        assert_eq!(hall_check(&l223, &f253), Ok(true));
        assert_eq!(hall_check(&l223, &l223), Ok(true));
        assert_eq!(hall_check(&l223, &"2 11".parse().unwrap()), Ok(false));
        assert!(hall_check(&l223, &"5".parse().unwrap()).is_err());
        let sylow2 = Factorization::from_pairs(&[(2, 21)]).unwrap();
        assert_eq!(hall_check(&j4_order(), &sylow2), Ok(true));
    }

    #[test]
    fn complement_must_divide_degree() {
        assert!(matches!(
            build_gamma_frobenius_with_complement(2, 11, 23, 3),
            Err(GroupError::BadComplement { c: 3, k: 11 })
        ));
        assert!(build_gamma_frobenius(2, 11, 24).is_err());
    }

    #[test]
    fn trivial_complement_is_cyclic_kernel() {
        let g = build_gamma_frobenius_with_complement(3, 16, 17, 1).unwrap();
        assert_eq!(g.elements.len(), 17);
        assert!(!g.is_frobenius());
        assert_eq!(g.kernel_generator.order(), 17);
    }
}
