//! Deformations of the power relations: the μ parameters, the scalars λ,
//! the closed forms `u_α(μ)` and the recursive forms they come from.

mod forms;

pub use forms::{
    braided_commutator, build_lifting, build_partial_lifting, expand_recursion_check, lambda_scalars,
    recursion_terms, recursive_u_alpha, root_vector_def, u_alpha, LambdaScalars, MuFamily,
    RecursionMismatch, RecursionReport, RootVectorDef,
};
