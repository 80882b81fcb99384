//! Semilinear actions on the additive group of a finite field, viewed as
//! linear maps over the prime field, and element orders in the resulting
//! semidirect products `V ⋊ H`.
//!
//! Every action here has the normal form `v ↦ u · v^(p^e)`: a unit
//! multiplication composed with a power of the Frobenius automorphism. The
//! form is closed under composition, and the `k × k` matrix over GF(p) is
//! only materialized for rank and minimal-polynomial questions.
//!
//! For `h` of order `m` and `v ∈ V`, `(v, h)^m = (T_m(v), 1)` where
//! `T_m = 1 + h + ... + h^(m-1)`. Since `V` has exponent `p`, the pair has
//! order `m` when `T_m(v) = 0` and `p·m` otherwise.

use std::fmt;

use thiserror::Error;

use crate::gf::{FieldElement, FieldError, FiniteField};
use crate::orderset::{checked_lcm, gcd, is_prime, OrderSet};
use crate::poly::{inv_mod, Poly};

/// Largest acting group [`semidirect_spectrum`] will enumerate.
pub const MAX_ACTING_GROUP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{s} must be a prime equal to the order of the action, which is {order}")]
    NotPrimeOrder { s: u64, order: u64 },
    #[error("the identity has no nontrivial powers to test")]
    Identity,
    #[error("acting group has {0} elements, more than the supported {MAX_ACTING_GROUP}")]
    TooLarge(usize),
    #[error("acting group is empty")]
    Empty,
    #[error("action has {actual} components but the module has {expected} summands")]
    ComponentMismatch { expected: usize, actual: usize },
    #[error("summands have different characteristics")]
    MixedCharacteristic,
    #[error("element order overflows 64 bits")]
    Overflow,
}

/// A square matrix over GF(p).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    p: u64,
    rows: Vec<Vec<u64>>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    /// Row-major, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(p: u64, n: usize) -> Self {
        Self {
            p,
            rows: vec![vec![0; n]; n],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.rows[i][i] = 1 % p;
        }
        m
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<u64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            p,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(|c| c % p).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect())
            .collect();
        Self { p, rows }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect())
            .collect();
        Self { p, rows }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let p = self.p as u128;
        let mut out = Self::zero(self.p, n);
        for i in 0..n {
            for j in 0..n {
                let s: u128 = (0..n)
                    .map(|t| self.rows[i][t] as u128 * other.rows[t][j] as u128 % p)
                    .sum();
                out.rows[i][j] = (s % p) as u64;
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p as u128;
        self.rows
            .iter()
            .map(|row| {
                let s: u128 = row
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u128 * b as u128 % p)
                    .sum();
                (s % p) as u64
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.p, self.size());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut rows = self.rows.clone();
        let n = rows.len();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = inv_mod(rows[rank][col], p);
            for x in rows[rank].iter_mut() {
                *x = (*x as u128 * inv as u128 % p as u128) as u64;
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        let sub = (f as u128 * y as u128 % p as u128) as u64;
                        *x = (*x + p - sub) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Dimension of the kernel.
    pub fn nullity(&self) -> usize {
        self.size() - self.rank()
    }

    /// Minimal polynomial, as the lcm of the minimal polynomials of the
    /// Krylov sequences `e_j, M e_j, M^2 e_j, ...` of the standard basis.
    pub fn minimal_polynomial(&self) -> Poly {
        let n = self.size();
        let mut acc = Poly::one(self.p);
        for j in 0..n {
            let mut start = vec![0; n];
            start[j] = 1;
            acc = acc.lcm(&self.krylov_minpoly(start));
        }
        acc
    }

    fn krylov_minpoly(&self, start: Vec<u64>) -> Poly {
        let p = self.p;
        let n = self.size();
        // (pivot column, vector with 1 at pivot, combination of powers)
        let mut echelon: Vec<(usize, Vec<u64>, Poly)> = Vec::new();
        let mut current = start;
        for t in 0..=n {
            let mut w = current.clone();
            let mut combo = Poly::monomial(p, t);
            for (pivot, row, row_combo) in &echelon {
                let c = w[*pivot];
                if c != 0 {
                    for (x, &r) in w.iter_mut().zip(row) {
                        *x = (*x + p - (c as u128 * r as u128 % p as u128) as u64) % p;
                    }
                    combo = combo.sub(&row_combo.scale(c));
                }
            }
            match w.iter().position(|&x| x != 0) {
                None => return combo.monic(),
                Some(pivot) => {
                    let inv = inv_mod(w[pivot], p);
                    let row = w
                        .iter()
                        .map(|&x| (x as u128 * inv as u128 % p as u128) as u64)
                        .collect();
                    echelon.push((pivot, row, combo.scale(inv)));
                }
            }
            current = self.apply(&current);
        }
        unreachable!("n + 1 vectors in dimension n are dependent")
    }
}

/// The semilinear map `v ↦ unit · v^(p^galois)` on a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearAction {
    unit: FieldElement,
    galois: u32,
}

impl fmt::Debug for LinearAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·φ^{}", self.unit, self.galois)
    }
}

impl LinearAction {
    /// `unit · φ^galois`; the unit must be nonzero.
    pub fn new(unit: FieldElement, galois: u32) -> Result<Self, ActionError> {
        if unit.is_zero() {
            return Err(ActionError::Field(FieldError::ZeroInverse));
        }
        let k = unit.field().degree();
        Ok(Self {
            unit,
            galois: galois % k,
        })
    }

    pub fn identity(field: &FiniteField) -> Self {
        Self {
            unit: field.one(),
            galois: 0,
        }
    }

    pub fn multiplication(unit: FieldElement) -> Result<Self, ActionError> {
        Self::new(unit, 0)
    }

    pub fn galois(field: &FiniteField, e: u32) -> Self {
        Self {
            unit: field.one(),
            galois: e % field.degree(),
        }
    }

    pub fn field(&self) -> &FiniteField {
        self.unit.field()
    }

    pub fn unit(&self) -> &FieldElement {
        &self.unit
    }

    pub fn galois_exponent(&self) -> u32 {
        self.galois
    }

    pub fn apply(&self, v: &FieldElement) -> FieldElement {
        &self.unit * &v.frobenius(self.galois)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let k = self.field().degree();
        Self {
            unit: &self.unit * &other.unit.frobenius(self.galois),
            galois: (self.galois + other.galois) % k,
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(self.order() - 1)
    }

    /// Matrix over GF(p) in the polynomial basis; column `j` holds `h(x^j)`.
    pub fn matrix(&self) -> Matrix {
        let field = self.field();
        let k = field.degree() as usize;
        let mut m = Matrix::zero(field.characteristic(), k);
        for j in 0..k {
            let image = self.apply(&field.basis(j));
            for (i, &c) in image.coeffs().iter().enumerate() {
                m.rows[i][j] = c;
            }
        }
        m
    }

    pub fn minimal_polynomial(&self) -> Poly {
        self.matrix().minimal_polynomial()
    }

    /// Whether the minimal polynomial over GF(p) is exactly `x^s - 1`.
    /// Requires `s` prime and equal to the order of the action.
    pub fn minpoly_equals_xs_minus_1(&self, s: u64) -> Result<bool, ActionError> {
        let order = self.order();
        if !is_prime(s) || order != s {
            return Err(ActionError::NotPrimeOrder { s, order });
        }
        let target = Poly::x_pow_minus_one(self.field().characteristic(), s as usize);
        Ok(self.minimal_polynomial() == target)
    }

    /// `1 + h + ... + h^(m-1)` as a matrix.
    pub fn t_sum_matrix(&self, m: u64) -> Matrix {
        let h = self.matrix();
        let n = h.size();
        let p = self.field().characteristic();
        let mut acc = Matrix::zero(p, n);
        let mut power = Matrix::identity(p, n);
        for _ in 0..m {
            acc = acc.add(&power);
            power = power.mul(&h);
        }
        acc
    }
}

/// Shared behaviour of single actions and componentwise actions on a sum of
/// fields.
pub trait Action: Sized {
    fn order(&self) -> u64;
    fn pow(&self, n: u64) -> Self;
    fn is_identity(&self) -> bool;
    /// GF(p)-dimension of the fixed space.
    fn fixed_space_dim(&self) -> usize;

    /// Every nontrivial power fixes only zero.
    fn is_fixed_point_free(&self) -> Result<bool, ActionError> {
        if self.is_identity() {
            return Err(ActionError::Identity);
        }
        Ok((1..self.order()).all(|j| self.pow(j).fixed_space_dim() == 0))
    }
}

impl Action for LinearAction {
    /// Least `m` with `h^m = 1`. The Galois part has order `k / gcd(k, e)`;
    /// after that many steps only a unit multiplication remains.
    fn order(&self) -> u64 {
        let k = self.field().degree() as u64;
        let galois_order = k / gcd(k, self.galois as u64);
        let rest = self.pow(galois_order);
        debug_assert_eq!(rest.galois, 0);
        galois_order
            * rest
                .unit
                .multiplicative_order()
                .expect("units are nonzero")
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    fn is_identity(&self) -> bool {
        self.galois == 0 && self.unit.is_one()
    }

    fn fixed_space_dim(&self) -> usize {
        let m = self.matrix();
        m.sub(&Matrix::identity(m.p, m.size())).nullity()
    }
}

/// An element acting componentwise on `V_1 ⊕ ... ⊕ V_r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ActionGroupElement {
    components: Vec<LinearAction>,
}

impl ActionGroupElement {
    pub fn new(components: Vec<LinearAction>) -> Self {
        Self { components }
    }

    pub fn identity(summands: &[FiniteField]) -> Self {
        Self {
            components: summands.iter().map(LinearAction::identity).collect(),
        }
    }

    pub fn components(&self) -> &[LinearAction] {
        &self.components
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.compose(b))
                .collect(),
        }
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.components
            .iter()
            .zip(v)
            .map(|(h, x)| h.apply(x))
            .collect()
    }
}

impl Action for ActionGroupElement {
    fn order(&self) -> u64 {
        self.components
            .iter()
            .map(Action::order)
            .fold(1, |acc, m| checked_lcm(acc, m).expect("orders are small"))
    }

    fn pow(&self, n: u64) -> Self {
        Self {
            components: self.components.iter().map(|h| h.pow(n)).collect(),
        }
    }

    fn is_identity(&self) -> bool {
        self.components.iter().all(Action::is_identity)
    }

    fn fixed_space_dim(&self) -> usize {
        self.components.iter().map(Action::fixed_space_dim).sum()
    }
}

fn common_characteristic(summands: &[FiniteField]) -> Result<Option<u64>, ActionError> {
    let mut chars = summands.iter().map(FiniteField::characteristic);
    let Some(p) = chars.next() else {
        return Ok(None);
    };
    if chars.any(|q| q != p) {
        return Err(ActionError::MixedCharacteristic);
    }
    Ok(Some(p))
}

fn check_shape(summands: &[FiniteField], h: &ActionGroupElement) -> Result<(), ActionError> {
    if h.components.len() != summands.len() {
        return Err(ActionError::ComponentMismatch {
            expected: summands.len(),
            actual: h.components.len(),
        });
    }
    if h.components.iter().zip(summands).any(|(c, f)| c.field() != f) {
        return Err(ActionError::Field(FieldError::MixedFields));
    }
    Ok(())
}

/// Order of `(v, h)` in `V ⋊ ⟨h⟩`: `m` if `T_m(v) = 0`, else `p·m`.
pub fn semidirect_element_order(
    v: &[FieldElement],
    h: &ActionGroupElement,
) -> Result<u64, ActionError> {
    let summands: Vec<FiniteField> = v.iter().map(|x| x.field().clone()).collect();
    check_shape(&summands, h)?;
    let m = h.order();
    let Some(p) = common_characteristic(&summands)? else {
        return Ok(m);
    };
    let mut acc: Vec<FieldElement> = summands.iter().map(FiniteField::zero).collect();
    let mut w = v.to_vec();
    for _ in 0..m {
        acc = acc.iter().zip(&w).map(|(a, b)| a + b).collect();
        w = h.apply(&w);
    }
    if acc.iter().all(FieldElement::is_zero) {
        Ok(m)
    } else {
        p.checked_mul(m).ok_or(ActionError::Overflow)
    }
}

/// A pair `(v, h)` of the semidirect product, multiplied directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemidirectPair {
    pub v: Vec<FieldElement>,
    pub h: ActionGroupElement,
}

impl SemidirectPair {
    pub fn identity(summands: &[FiniteField]) -> Self {
        Self {
            v: summands.iter().map(FiniteField::zero).collect(),
            h: ActionGroupElement::identity(summands),
        }
    }

    /// `(v, h)(w, g) = (v + h(w), hg)`.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            v: self
                .v
                .iter()
                .zip(self.h.apply(&other.v))
                .map(|(a, b)| a + &b)
                .collect(),
            h: self.h.compose(&other.h),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.v.iter().all(FieldElement::is_zero) && self.h.is_identity()
    }

    /// Order by repeated multiplication, without using the T-sum shortcut.
    pub fn order_by_powers(&self) -> u64 {
        let mut power = self.clone();
        let mut n = 1;
        while !power.is_identity() {
            power = power.mul(self);
            n += 1;
        }
        n
    }
}

/// The spectrum of `V ⋊ H` for `V = V_1 ⊕ ... ⊕ V_r` and an explicitly
/// listed acting group `H`.
///
/// Collects `|h|` for every `h`, plus `p·|h|` whenever `T_|h|` is not the
/// zero map. The latter is decided on basis vectors of each summand, which
/// suffices because `T` is additive.
pub fn semidirect_spectrum(
    summands: &[FiniteField],
    acting: &[ActionGroupElement],
) -> Result<OrderSet, ActionError> {
    if acting.is_empty() {
        return Err(ActionError::Empty);
    }
    if acting.len() > MAX_ACTING_GROUP {
        return Err(ActionError::TooLarge(acting.len()));
    }
    let p = common_characteristic(summands)?;
    let mut gens = vec![1];
    if let Some(p) = p {
        gens.push(p);
    }
    for h in acting {
        check_shape(summands, h)?;
        let m = h.order();
        gens.push(m);
        if let Some(p) = p {
            if t_sum_is_nonzero(summands, h, m) {
                gens.push(p.checked_mul(m).ok_or(ActionError::Overflow)?);
            }
        }
    }
    Ok(OrderSet::from_generators(&gens).expect("generators are positive"))
}

fn t_sum_is_nonzero(summands: &[FiniteField], h: &ActionGroupElement, m: u64) -> bool {
    summands.iter().zip(&h.components).any(|(field, action)| {
        (0..field.degree() as usize).any(|i| {
            let mut w = field.basis(i);
            let mut acc = field.zero();
            for _ in 0..m {
                acc = &acc + &w;
                w = action.apply(&w);
            }
            !acc.is_zero()
        })
    })
}

/// Arithmetic shadow of a Frobenius group: the complement order divides
/// `|kernel| - 1`.
pub fn frobenius_arith_check(kernel_order: u64, complement_order: u64) -> bool {
    kernel_order >= 1 && complement_order >= 1 && (kernel_order - 1).is_multiple_of(complement_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2_11() -> FiniteField {
        FiniteField::new(2, 11).unwrap()
    }

    #[test]
    fn identity_action() {
        let f = gf2_11();
        let id = LinearAction::identity(&f);
        assert_eq!(id.fixed_space_dim(), 11);
        assert_eq!(id.order(), 1);
        assert_eq!(id.t_sum_matrix(1), Matrix::identity(2, 11));
        assert_eq!(id.is_fixed_point_free(), Err(ActionError::Identity));
        assert!(matches!(
            id.minpoly_equals_xs_minus_1(1),
            Err(ActionError::NotPrimeOrder { .. })
        ));
    }

    #[test]
    fn galois_map_on_gf2_11() {
        let f = gf2_11();
        let phi = LinearAction::galois(&f, 1);
        assert_eq!(phi.order(), 11);
        assert_eq!(phi.fixed_space_dim(), 1);
        assert_eq!(phi.minimal_polynomial(), Poly::x_pow_minus_one(2, 11));
        assert_eq!(phi.minpoly_equals_xs_minus_1(11), Ok(true));
        assert_eq!(phi.is_fixed_point_free(), Ok(false));
        assert!(matches!(
            phi.minpoly_equals_xs_minus_1(5),
            Err(ActionError::NotPrimeOrder { s: 5, order: 11 })
        ));
        // T_11 is the trace map onto GF(2): rank 1
        let trace = phi.t_sum_matrix(11);
        assert!(!trace.is_zero());
        assert_eq!(trace.rank(), 1);
    }

    #[test]
    fn order_23_unit_on_gf2_11() {
        let f = gf2_11();
        let z = LinearAction::multiplication(f.subgroup_generator(23).unwrap()).unwrap();
        assert_eq!(z.order(), 23);
        assert_eq!(z.fixed_space_dim(), 0);
        assert!(z.t_sum_matrix(23).is_zero());
        assert_eq!(z.is_fixed_point_free(), Ok(true));
        // degree at most 11 < 23
        assert_eq!(z.minpoly_equals_xs_minus_1(23), Ok(false));
    }

    #[test]
    fn order_5_unit_on_gf81_is_not_xs_minus_1() {
        let f = FiniteField::new(3, 4).unwrap();
        let h = LinearAction::multiplication(f.subgroup_generator(5).unwrap()).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.minpoly_equals_xs_minus_1(5), Ok(false));
        // x^5 - 1 = (x - 1)(x^4 + ... + 1) and h fixes nothing, so the
        // minimal polynomial is the quartic cofactor.
        assert_eq!(h.minimal_polynomial(), Poly::new(3, vec![1, 1, 1, 1, 1]));
    }

    #[test]
    fn composition_normal_form() {
        let f = gf2_11();
        let z = f.subgroup_generator(23).unwrap();
        let a = LinearAction::new(z.clone(), 3).unwrap();
        let b = LinearAction::new(z.pow(5), 7).unwrap();
        let ab = a.compose(&b);
        let x = f.from_index(1234);
        assert_eq!(ab.apply(&x), a.apply(&b.apply(&x)));
        assert_eq!(ab.matrix(), a.matrix().mul(&b.matrix()));
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(LinearAction::new(f.zero(), 0).is_err());
    }

    #[test]
    fn semidirect_orders() {
        let f = gf2_11();
        let phi = ActionGroupElement::new(vec![LinearAction::galois(&f, 1)]);
        // x^(2^11) = x, trace(x^j) for the first basis vector with odd trace
        let v = (0..11)
            .map(|i| f.basis(i))
            .find(|b| phi.components()[0].t_sum_matrix(11).apply(b.coeffs()) != vec![0; 11])
            .unwrap();
        assert_eq!(semidirect_element_order(std::slice::from_ref(&v), &phi), Ok(22));
        assert_eq!(semidirect_element_order(&[f.zero()], &phi), Ok(11));
        let id = ActionGroupElement::identity(std::slice::from_ref(&f));
        assert_eq!(semidirect_element_order(std::slice::from_ref(&v), &id), Ok(2));
        let pair = SemidirectPair {
            v: vec![v],
            h: phi,
        };
        assert_eq!(pair.order_by_powers(), 22);
    }

    #[test]
    fn shape_errors() {
        let f = gf2_11();
        let g = FiniteField::new(3, 2).unwrap();
        let id = ActionGroupElement::identity(std::slice::from_ref(&f));
        assert!(matches!(
            semidirect_element_order(&[f.one(), f.one()], &id),
            Err(ActionError::ComponentMismatch { .. })
        ));
        let both = ActionGroupElement::identity(&[f.clone(), g.clone()]);
        assert_eq!(
            semidirect_spectrum(&[f.clone(), g], &[both]),
            Err(ActionError::MixedCharacteristic)
        );
        assert_eq!(semidirect_spectrum(&[f], &[]), Err(ActionError::Empty));
    }

    #[test]
    fn empty_module_gives_acting_spectrum() {
        let f = FiniteField::new(7, 1).unwrap();
        let u = f.subgroup_generator(6).unwrap();
        let acting: Vec<_> = (0..6)
            .map(|i| ActionGroupElement::new(vec![LinearAction::multiplication(u.pow(i)).unwrap()]))
            .collect();
        // project away the module: no summands, orders of H only
        let bare: Vec<_> = acting
            .iter()
            .map(|_| ActionGroupElement::new(vec![]))
            .collect();
        assert_eq!(semidirect_spectrum(&[], &bare).unwrap().expand(), vec![1]);
        let full = semidirect_spectrum(&[f], &acting).unwrap();
        // AGL(1,7): orders 1,2,3,6 from H and 7 from translations
        assert_eq!(full.expand(), vec![1, 2, 3, 6, 7]);
    }

    #[test]
    fn frobenius_arithmetic() {
        assert!(frobenius_arith_check(2048, 23));
        assert!(frobenius_arith_check(23, 11));
        assert!(frobenius_arith_check(43_046_721, 17));
        assert!(frobenius_arith_check(9, 1));
        assert!(!frobenius_arith_check(2048, 11));
        assert!(!frobenius_arith_check(0, 1));
    }

    #[test]
    fn matrix_display() {
        let m = Matrix::from_rows(3, vec![vec![1, 2], vec![4, 0]]);
        assert_eq!(m.to_string(), "[1 2]\n[1 0]\n");
    }
}
