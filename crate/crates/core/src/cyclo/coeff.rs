use core::fmt;

use super::field::{CycScalar, Field};

/// Coefficient ring of the algebra engine.
///
/// Implemented by plain field elements and by μ-polynomials, so that one
/// straightening run covers either a fixed lifting or all of them at once.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_cyc(c: CycScalar) -> Self;
    fn field(&self) -> Field;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &CycScalar) -> Self;
    /// Multiplies by ζ_M^k.
    fn mul_root(&self, k: i64) -> Self;

    fn zero(field: Field) -> Self {
        Self::from_cyc(CycScalar::zero(field))
    }

    fn one(field: Field) -> Self {
        Self::from_cyc(CycScalar::one(field))
    }

    fn sub_assign(&mut self, other: &Self) {
        self.add_assign(&other.neg());
    }
}

impl Coeff for CycScalar {
    fn from_cyc(c: CycScalar) -> Self {
        c
    }

    fn field(&self) -> Field {
        CycScalar::field(self)
    }

    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }

    fn add_assign(&mut self, other: &Self) {
        CycScalar::add_assign(self, other)
    }

    fn neg(&self) -> Self {
        CycScalar::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        CycScalar::mul(self, other)
    }

    fn scale(&self, c: &CycScalar) -> Self {
        CycScalar::mul(self, c)
    }

    fn mul_root(&self, k: i64) -> Self {
        CycScalar::mul_root(self, k)
    }
}
