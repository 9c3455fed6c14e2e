//! Exact arithmetic in the cyclotomic field ℚ(ζ_M).
//!
//! Elements are stored densely in the power basis `1, ζ, …, ζ^{φ(M)-1}`,
//! i.e. as rational polynomials reduced modulo the M-th cyclotomic
//! polynomial. Each conductor gets one immutable [`CycField`] table, built
//! on first use and shared for the rest of the process.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use super::rat::Rat;
use crate::error::AlgebraError;

/// Reduction data for one conductor.
pub struct CycField {
    m: u32,
    phi: usize,
    /// `powers[e]` is ζ^e written in the power basis, for `0 <= e < m`.
    powers: Vec<Vec<i64>>,
}

/// Handle to an interned field table.
pub type Field = &'static CycField;

static REGISTRY: spin::Mutex<Vec<Field>> = spin::Mutex::new(Vec::new());

/// Returns the shared table for ℚ(ζ_m).
pub fn field(m: u32) -> Field {
    assert!(m >= 1, "conductor must be positive");
    let mut reg = REGISTRY.lock();
    if let Some(f) = reg.iter().find(|f| f.m == m) {
        return f;
    }
    let f: Field = Box::leak(Box::new(CycField::build(m)));
    reg.push(f);
    f
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 = prod_{d | n} Phi_d(x)
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div(&num, &div);
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    debug_assert!(lead == 1);
    let qlen = rem.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn] / lead;
        quot[i] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl CycField {
    fn build(m: u32) -> CycField {
        let phi_poly = cyclotomic_polynomial(m);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; phi.max(1)];
        if phi == 0 {
            unreachable!();
        }
        cur[0] = 1;
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x, then eliminate x^phi using the monic relation
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * phi_poly[i];
                }
            }
        }
        CycField { m, phi, powers }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    /// Degree φ(M) of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.phi
    }

    fn power_row(&self, e: i64) -> &[i64] {
        &self.powers[e.rem_euclid(self.m as i64) as usize]
    }
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for CycField {}

impl Hash for CycField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.m)
    }
}

/// An element of ℚ(ζ_M) in canonical power-basis form.
#[derive(Clone)]
pub struct CycScalar {
    field: Field,
    coeffs: Box<[Rat]>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

impl Hash for CycScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.m.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycScalar {
    pub fn zero(field: Field) -> CycScalar {
        CycScalar { field, coeffs: vec![Rat::ZERO; field.phi].into_boxed_slice() }
    }

    pub fn one(field: Field) -> CycScalar {
        CycScalar::from_rat(field, Rat::ONE)
    }

    pub fn from_int(field: Field, n: i64) -> CycScalar {
        CycScalar::from_rat(field, Rat::from_int(n))
    }

    pub fn from_rat(field: Field, r: Rat) -> CycScalar {
        let mut s = CycScalar::zero(field);
        s.coeffs[0] = r;
        s
    }

    /// ζ_M^k for any integer k.
    pub fn root_power(field: Field, k: i64) -> CycScalar {
        let row = field.power_row(k);
        CycScalar {
            field,
            coeffs: row.iter().map(|&c| Rat::from_int(c)).collect(),
        }
    }

    /// Builds an element from its power-basis coordinates (padded or reduced as needed).
    pub fn from_coeffs(field: Field, coeffs: &[Rat]) -> CycScalar {
        let mut out = CycScalar::zero(field);
        for (e, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple(e as i64, c);
            }
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// Returns the rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_field(&self, other: &CycScalar) {
        assert!(
            self.field.m == other.field.m,
            "mixed conductors {} and {}",
            self.field.m,
            other.field.m
        );
    }

    /// self += c * ζ^e
    fn add_root_multiple(&mut self, e: i64, c: &Rat) {
        let phi = self.field.phi as i64;
        let e = e.rem_euclid(self.field.m as i64);
        if e < phi {
            let slot = &mut self.coeffs[e as usize];
            *slot = slot.add(c);
            return;
        }
        let row = self.field.power_row(e);
        for (i, &r) in row.iter().enumerate() {
            if r != 0 {
                let slot = &mut self.coeffs[i];
                *slot = slot.add(&c.mul(&Rat::from_int(r)));
            }
        }
    }

    pub fn add(&self, other: &CycScalar) -> CycScalar {
        self.check_field(other);
        CycScalar {
            field: self.field,
            coeffs: self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &CycScalar) {
        self.check_field(other);
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            if !b.is_zero() {
                *a = a.add(b);
            }
        }
    }

    pub fn sub(&self, other: &CycScalar) -> CycScalar {
        self.check_field(other);
        CycScalar {
            field: self.field,
            coeffs: self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar { field: self.field, coeffs: self.coeffs.iter().map(Rat::neg).collect() }
    }

    pub fn mul(&self, other: &CycScalar) -> CycScalar {
        self.check_field(other);
        let phi = self.field.phi;
        if let Some(r) = other.as_rational() {
            return self.mul_rat(r);
        }
        if let Some(r) = self.as_rational() {
            return other.mul_rat(r);
        }
        let mut prod = vec![Rat::ZERO; 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].add(&a.mul(b));
                }
            }
        }
        let mut out = CycScalar::zero(self.field);
        for (e, c) in prod.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple(e as i64, c);
            }
        }
        out
    }

    pub fn mul_rat(&self, r: &Rat) -> CycScalar {
        if r.is_one() {
            return self.clone();
        }
        CycScalar { field: self.field, coeffs: self.coeffs.iter().map(|c| c.mul(r)).collect() }
    }

    /// Multiplies by ζ^k.
    pub fn mul_root(&self, k: i64) -> CycScalar {
        if k.rem_euclid(self.field.m as i64) == 0 {
            return self.clone();
        }
        let mut out = CycScalar::zero(self.field);
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple(e as i64 + k, c);
            }
        }
        out
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (k coprime to M).
    pub fn galois(&self, k: i64) -> CycScalar {
        let mut out = CycScalar::zero(self.field);
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple(e as i64 * k, c);
            }
        }
        out
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inv(&self) -> Result<CycScalar, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            let ri = r.inv().ok_or(AlgebraError::DivisionByZero)?;
            return Ok(CycScalar::from_rat(self.field, ri));
        }
        let m = self.field.m as i64;
        let mut conj = CycScalar::one(self.field);
        for k in 2..m {
            if gcd(k, m) == 1 {
                conj = conj.mul(&self.galois(k));
            }
        }
        let norm = self.mul(&conj);
        let n = norm.as_rational().expect("field norm is rational").clone();
        let ni = n.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(conj.mul_rat(&ni))
    }

    pub fn div(&self, other: &CycScalar) -> Result<CycScalar, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<CycScalar, AlgebraError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = CycScalar::one(self.field);
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// If the element is ±ζ^k, returns `(k, sign)`.
    pub fn as_signed_root(&self) -> Option<(u32, bool)> {
        let m = self.field.m;
        for k in 0..m {
            let r = CycScalar::root_power(self.field, k as i64);
            if &r == self {
                return Some((k, true));
            }
            if r.neg() == *self {
                return Some((k, false));
            }
        }
        None
    }

    /// Human-readable form as a polynomial in `q` (standing for ζ_M).
    pub fn to_q_string(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            match (e, abs.is_one()) {
                (0, _) => out.push_str(&abs.to_string_plain()),
                (1, true) => out.push('q'),
                (_, true) => out.push_str(&alloc::format!("q^{}", e)),
                (1, false) => out.push_str(&alloc::format!("{}*q", abs)),
                (_, false) => out.push_str(&alloc::format!("{}*q^{}", abs, e)),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)) * b
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_q_string())
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_q_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(f: Field, k: i64) -> CycScalar {
        CycScalar::root_power(f, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta3_times_zeta3_squared() {
        let f = field(3);
        assert!(z(f, 1).mul(&z(f, 2)).is_one());
        assert_eq!(z(f, 3), CycScalar::one(f));
        assert_eq!(z(f, -1), z(f, 2));
    }

    #[test]
    fn inverse_of_one_plus_zeta7() {
        let f = field(7);
        let a = CycScalar::one(f).add(&z(f, 1));
        let ai = a.inv().unwrap();
        assert!(ai.mul(&a).is_one());
        assert_eq!(CycScalar::zero(f).inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn composite_conductor_inverse() {
        let f = field(12);
        let a = z(f, 1).add(&CycScalar::from_int(f, 3)).add(&z(f, 5).mul_rat(&Rat::new(1, 2)));
        assert!(a.inv().unwrap().mul(&a).is_one());
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for m in [3u32, 5, 7, 9, 15] {
            let f = field(m);
            let mut s = CycScalar::zero(f);
            for k in 0..m as i64 {
                s = s.add(&z(f, k));
            }
            assert!(s.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn q_string() {
        let f = field(7);
        let a = CycScalar::one(f).sub(&z(f, 6));
        // ζ^6 = -(1 + ζ + ... + ζ^5)
        assert_eq!(a.to_q_string(), "2 + q + q^2 + q^3 + q^4 + q^5");
        assert_eq!(z(f, 2).neg().to_q_string(), "-q^2");
        assert_eq!(z(f, 2).as_signed_root(), Some((2, true)));
    }
}
