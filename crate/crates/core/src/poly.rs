//! Dense univariate polynomials over a prime field GF(p).

use std::fmt;

/// Coefficients ascending; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// `a^(p-2)`, i.e. the inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

impl Poly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut poly = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    /// `x^n`
    pub fn monomial(p: u64, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        Self::new(p, coeffs)
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(p: u64, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = p - 1;
        coeffs[n] = 1;
        Self::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.p - 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, coeffs)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("polynomial division by zero");
        let inv = inv_mod(divisor.lead(), self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let c = mul_mod(rem[top], inv, self.p);
            if c != 0 {
                let shift = top - d;
                quot[shift] = c;
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(c, b, self.p);
                    rem[shift + j] = (rem[shift + j] + self.p - sub) % self.p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Self::new(self.p, quot), Self::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let g = self.gcd(other);
        self.div_rem(&g).0.mul(other).monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// Irreducibility over GF(p) by the distinct-degree criterion: a monic
    /// `f` of degree `k` is irreducible iff `gcd(x^(p^i) - x, f) = 1` for
    /// every `1 <= i <= k/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(k) = self.degree() else {
            return false;
        };
        if k == 0 {
            return false;
        }
        if k == 1 {
            return true;
        }
        if self.coeffs[0] == 0 {
            return false;
        }
        let f = self.monic();
        let x = Self::monomial(self.p, 1);
        let mut frob = x.clone();
        for _ in 1..=k / 2 {
            frob = frob.pow_mod(self.p, &f);
            let g = frob.sub(&x).gcd(&f);
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let a = Poly::new(5, vec![1, 2, 3, 4, 1]);
        let b = Poly::new(5, vec![3, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_lcm() {
        // (x+1)(x+2) and (x+1)(x+3) over GF(7)
        let a = Poly::new(7, vec![1, 1]).mul(&Poly::new(7, vec![2, 1]));
        let b = Poly::new(7, vec![1, 1]).mul(&Poly::new(7, vec![3, 1]));
        assert_eq!(a.gcd(&b), Poly::new(7, vec![1, 1]));
        assert_eq!(a.lcm(&b).degree(), Some(3));
    }

    #[test]
    fn irreducibility_small_cases() {
        // x^2 + 1 is irreducible over GF(3) but not over GF(5) (2^2 = -1).
        assert!(Poly::new(3, vec![1, 0, 1]).is_irreducible());
        assert!(!Poly::new(5, vec![1, 0, 1]).is_irreducible());
        // x^4 + x + 1 over GF(2) is irreducible; (x^2+x+1)^2 = x^4+x^2+1 is not.
        assert!(Poly::new(2, vec![1, 1, 0, 0, 1]).is_irreducible());
        assert!(!Poly::new(2, vec![1, 0, 1, 0, 1]).is_irreducible());
        assert!(Poly::new(2, vec![0, 1]).is_irreducible());
        assert!(!Poly::zero(2).is_irreducible());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::x_pow_minus_one(2, 11).to_string(), "x^11 + 1");
        assert_eq!(Poly::new(3, vec![2, 1, 2]).to_string(), "2x^2 + x + 2");
        assert_eq!(Poly::zero(3).to_string(), "0");
    }
}
