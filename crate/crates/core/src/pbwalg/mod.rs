//! PBW-basis algebra engine: straightening rules, normal forms,
//! confluence checks and an independent free-algebra oracle.

mod confluence;
mod dims;
mod element;
mod normalize;
pub mod oracle;
mod rules;

pub use confluence::{ambiguities, check_ambiguities, check_local_confluence, resolve, Ambiguity, ConfluenceReport, Unresolved};
pub use dims::{dimension, enumerate_pbw_box, graded_dimension, pbw_words};
pub use element::{exps_degree, exps_height, AlgElement, Exps, Monomial, EMPTY};
pub(crate) use element::{render_coeff, render_monomial};
pub use normalize::{default_step_budget, set_default_step_budget, Normalizer, DEFAULT_STEP_BUDGET};
pub use rules::{remark_tail, PairRule, Powers, RewriteSystem, SystemKind};
