//! Finite abelian groups, characters and Cartan data of type B3.

#[allow(clippy::module_inception)]
mod datum;
mod group;
mod roots;

pub use datum::{
    canonical_datum, extended_index, interval_degree, q_block, skewed_datum, validate_datum, Datum,
    ExtIndex, ValidationEntry, ValidationReport, Violation, CANONICAL_EXPONENTS, CARTAN_B3,
    SKEWED_EXPONENTS,
};
pub(crate) use datum::widen;
pub use group::{AbelianGroup, Character, GroupDisplay, GroupElement};
pub use roots::{Root, ROOT_DEGREES, ROOT_FILE_NAMES, ROOT_NAMES};
