//! Exact symbolic engine for the Nichols algebras of Cartan type B3 and
//! their liftings over finite abelian groups.
//!
//! The crate is `no_std` (with `alloc`). Layers, bottom up:
//!
//! * [`cyclo`]: rationals, cyclotomic fields ℚ(ζ_M), μ-polynomials, q-numbers.
//! * [`datum`]: abelian groups, characters, Cartan data of type B3, roots.
//! * [`pbwalg`]: PBW monomials, the straightening engine, confluence checks
//!   and a free-algebra oracle.
//! * [`liftings`]: root vectors, deformation right sides `u_α(μ)`.
//! * [`hopfverify`]: coproducts in `A⊗A` and the verification suites.

#![no_std]

extern crate alloc;

pub mod cyclo;
pub mod datum;
pub mod error;
pub mod hopfverify;
pub mod liftings;
pub mod pbwalg;

pub use error::{AlgebraError, Result};
