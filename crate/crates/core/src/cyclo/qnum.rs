//! q-numbers, q-factorials and Gaussian binomials.
//!
//! Values at a specific `q` are computed with the Pascal recurrence
//! `binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)`, which never divides and
//! therefore stays valid at roots of unity. The integer-polynomial versions
//! (`*_poly`) work in ℤ[q] and use exact division, giving an independent route.

use alloc::vec;
use alloc::vec::Vec;

use super::field::CycScalar;
use crate::error::{AlgebraError, Result};

/// `(n)_q = 1 + q + … + q^{n-1}`, with `(0)_q = 1`.
pub fn q_number(n: u32, q: &CycScalar) -> CycScalar {
    let f = q.field();
    if n == 0 {
        return CycScalar::one(f);
    }
    let mut acc = CycScalar::zero(f);
    let mut p = CycScalar::one(f);
    for _ in 0..n {
        acc.add_assign(&p);
        p = p.mul(q);
    }
    acc
}

/// `(n)_q! = (0)_q (1)_q ⋯ (n)_q`.
pub fn q_factorial(n: u32, q: &CycScalar) -> CycScalar {
    let mut acc = CycScalar::one(q.field());
    for s in 1..=n {
        acc = acc.mul(&q_number(s, q));
    }
    acc
}

/// Gaussian binomial evaluated at `q` through the Pascal recurrence.
pub fn q_binomial(n: u32, k: u32, q: &CycScalar) -> CycScalar {
    let f = q.field();
    if k > n {
        return CycScalar::zero(f);
    }
    let mut qpow = Vec::with_capacity(k as usize + 1);
    let mut p = CycScalar::one(f);
    for _ in 0..=k {
        qpow.push(p.clone());
        p = p.mul(q);
    }
    // row[j] = binom(m, j) for the current m
    let mut row = vec![CycScalar::zero(f); k as usize + 1];
    row[0] = CycScalar::one(f);
    for m in 1..=n {
        let top = core::cmp::min(m, k) as usize;
        for j in (1..=top).rev() {
            let t = qpow[j].mul(&row[j]);
            row[j] = row[j - 1].add(&t);
        }
    }
    row[k as usize].clone()
}

/// `binom(n; i_1, …, i_k)_q` as a product of Pascal binomials.
pub fn q_multinomial(n: u32, parts: &[u32], q: &CycScalar) -> Result<CycScalar> {
    let total: u32 = parts.iter().sum();
    if total != n {
        return Err(AlgebraError::PartsMismatch { expected: n, got: total });
    }
    let mut acc = CycScalar::one(q.field());
    let mut remaining = n;
    for &p in parts {
        acc = acc.mul(&q_binomial(remaining, p, q));
        remaining -= p;
    }
    Ok(acc)
}

/// `ξ_i = 1 - q33^{-i}`.
pub fn xi(i: i64, q33: &CycScalar) -> CycScalar {
    let inv = q33.pow(-i).expect("q33 is a root of unity");
    CycScalar::one(q33.field()).sub(&inv)
}

/// `(β₁, β₂, β)` with `β₁ = 1/(1+q33)`, `β₂ = q33/(1+q33)`, `β = β₁β₂ξ₂`.
pub fn beta_scalars(q33: &CycScalar) -> Result<(CycScalar, CycScalar, CycScalar)> {
    let one_plus = CycScalar::one(q33.field()).add(q33);
    let inv = one_plus.inv()?;
    let b1 = inv.clone();
    let b2 = q33.mul(&inv);
    let b = b1.mul(&b2).mul(&xi(2, q33));
    Ok((b1, b2, b))
}

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZPoly(pub Vec<i128>);

impl ZPoly {
    pub fn constant(c: i128) -> ZPoly {
        ZPoly(vec![c]).trimmed()
    }

    fn trimmed(mut self) -> ZPoly {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0i128; n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        ZPoly(out).trimmed()
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::default();
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly(out).trimmed()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::default();
        }
        let mut out = vec![0i128; k];
        out.extend_from_slice(&self.0);
        ZPoly(out)
    }

    /// Exact quotient, `None` if the division leaves a remainder or is not integral.
    pub fn exact_div(&self, den: &ZPoly) -> Option<ZPoly> {
        let dd = den.degree()?;
        if self.is_zero() {
            return Some(ZPoly::default());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = den.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![0i128; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = rem[i + dd];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            quot[i] = c;
            for (j, d) in den.0.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return None;
        }
        Some(ZPoly(quot).trimmed())
    }

    pub fn eval(&self, q: &CycScalar) -> CycScalar {
        let f = q.field();
        let mut acc = CycScalar::zero(f);
        for c in self.0.iter().rev() {
            acc = acc.mul(q);
            let c = i64::try_from(*c).expect("coefficient fits in i64");
            acc.add_assign(&CycScalar::from_int(f, c));
        }
        acc
    }
}

pub fn q_number_poly(n: u32) -> ZPoly {
    if n == 0 {
        return ZPoly::constant(1);
    }
    ZPoly(vec![1; n as usize])
}

pub fn q_factorial_poly(n: u32) -> ZPoly {
    (1..=n).fold(ZPoly::constant(1), |acc, s| acc.mul(&q_number_poly(s)))
}

/// Gaussian binomial in ℤ[q] via exact division of factorials.
pub fn gaussian_binomial_poly(n: u32, k: u32) -> ZPoly {
    if k > n {
        return ZPoly::default();
    }
    let den = q_factorial_poly(k).mul(&q_factorial_poly(n - k));
    q_factorial_poly(n).exact_div(&den).expect("Gaussian binomials are polynomials")
}

/// Gaussian binomial in ℤ[q] via the Pascal recurrence.
pub fn pascal_binomial_poly(n: u32, k: u32) -> ZPoly {
    if k > n {
        return ZPoly::default();
    }
    let mut row = vec![ZPoly::default(); k as usize + 1];
    row[0] = ZPoly::constant(1);
    for m in 1..=n {
        let top = core::cmp::min(m, k) as usize;
        for j in (1..=top).rev() {
            row[j] = row[j - 1].add(&row[j].shift(j));
        }
    }
    row[k as usize].clone()
}

/// q-multinomial in ℤ[q] via exact division.
pub fn q_multinomial_poly(n: u32, parts: &[u32]) -> Result<ZPoly> {
    let total: u32 = parts.iter().sum();
    if total != n {
        return Err(AlgebraError::PartsMismatch { expected: n, got: total });
    }
    let den = parts.iter().fold(ZPoly::constant(1), |acc, &p| acc.mul(&q_factorial_poly(p)));
    Ok(q_factorial_poly(n).exact_div(&den).expect("q-multinomials are polynomials"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::field::field;

    #[test]
    fn q_number_conventions() {
        let f = field(3);
        let z = CycScalar::root_power(f, 1);
        assert!(q_number(0, &z).is_one());
        assert_eq!(q_number(2, &z), CycScalar::one(f).add(&z));
        for n in [3u32, 5, 7] {
            let f = field(n);
            assert!(q_number(n, &CycScalar::root_power(f, 1)).is_zero());
        }
    }

    #[test]
    fn four_choose_two_polynomial() {
        // (1 + q^2)(1 + q + q^2)
        let expect = ZPoly(vec![1, 0, 1]).mul(&ZPoly(vec![1, 1, 1]));
        assert_eq!(gaussian_binomial_poly(4, 2), expect);
        assert_eq!(pascal_binomial_poly(4, 2), expect);
    }

    #[test]
    fn vanishing_at_roots_of_unity() {
        let f = field(7);
        let z = CycScalar::root_power(f, 1);
        assert!(q_binomial(7, 3, &z).is_zero());
        assert!(gaussian_binomial_poly(7, 3).eval(&z).is_zero());
        assert!(q_binomial(7, 7, &z).is_one());
        assert!(q_binomial(7, 0, &z).is_one());
    }

    #[test]
    fn multinomial_parts_checked() {
        let f = field(5);
        let z = CycScalar::root_power(f, 1);
        assert_eq!(
            q_multinomial(4, &[1, 2], &z),
            Err(AlgebraError::PartsMismatch { expected: 4, got: 3 })
        );
        let m = q_multinomial(4, &[1, 2, 1], &z).unwrap();
        assert_eq!(m, q_multinomial_poly(4, &[1, 2, 1]).unwrap().eval(&z));
    }

    #[test]
    fn xi_and_beta() {
        let f = field(7);
        let z = CycScalar::root_power(f, 1);
        assert_eq!(xi(1, &z), CycScalar::one(f).sub(&CycScalar::root_power(f, -1)));
        assert!(xi(7, &z).is_zero());
        let (b1, b2, _) = beta_scalars(&z).unwrap();
        assert!(b1.add(&b2).is_one());
        let f3 = field(3);
        let z3 = CycScalar::root_power(f3, 1);
        assert_eq!(xi(2, &z3), CycScalar::one(f3).sub(&z3));
    }
}
