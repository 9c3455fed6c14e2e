//! Exact scalars: rationals, cyclotomic fields and the q-combinatorics layer.

mod coeff;
mod field;
mod mu;
mod qnum;
mod rat;

pub use coeff::Coeff;
pub use field::{cyclotomic_polynomial, field, CycField, CycScalar, Field};
pub(crate) use field::{gcd, lcm};
pub use mu::{MuExps, MuScalar};
pub use qnum::{
    beta_scalars, gaussian_binomial_poly, pascal_binomial_poly, q_binomial, q_factorial,
    q_factorial_poly, q_multinomial, q_multinomial_poly, q_number, q_number_poly, xi, ZPoly,
};
pub use rat::Rat;
