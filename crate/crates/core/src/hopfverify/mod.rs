//! Coproducts in `A ⊗ A` and the verification suites built on them.

mod ideal;
mod report;
mod suites;
mod tensor;

pub use ideal::{hopf_jobs, run_hopf_job, verify_hopf_ideal, verify_hopf_ideal_system, HopfJob};
pub use report::{all_passed, failures, CheckRecord, Tier};
pub use tensor::{word, Hopf, TensorElement};
pub use suites::{
    antipode_check, antipode_checks, beta_adjudication, run_suite, run_suite_job, suite_jobs, SuiteJob, SUITES, doubled_beta_power, nu_check, power_split_check, verify_claim_relations,
    verify_power_coproduct, verify_power_formulas,
};
