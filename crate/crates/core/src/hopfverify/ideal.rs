use alloc::format;
use alloc::vec::Vec;

use super::report::CheckRecord;
use super::tensor::{Hopf, TensorElement};
use crate::cyclo::{Coeff, MuScalar};
use crate::datum::{Datum, Root};
use crate::liftings::{build_lifting, MuFamily};
use crate::pbwalg::{Monomial, RewriteSystem};
use crate::Result;

/// One independent piece of the Hopf-ideal verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfJob {
    /// The commutation rule for `y_b y_a` (`a` before `b`).
    Pair(Root, Root),
    /// The power rule `y_α^N → u_α`.
    Power(Root),
}

impl HopfJob {
    pub fn id(&self) -> alloc::string::String {
        match self {
            HopfJob::Pair(a, b) => format!("hopf-ideal.pair.{}.{}", b, a),
            HopfJob::Power(r) => format!("hopf-ideal.power.{}", r),
        }
    }

    /// Rough cost, used to schedule the heavy jobs first.
    pub fn weight(&self) -> u32 {
        match self {
            HopfJob::Pair(a, b) => a.height() + b.height(),
            HopfJob::Power(r) => 10 * r.height(),
        }
    }
}

pub fn hopf_jobs<C: Coeff>(rs: &RewriteSystem<C>) -> Vec<HopfJob> {
    let mut jobs = Vec::new();
    for rule in rs.pair_rules() {
        jobs.push(HopfJob::Pair(rule.a, rule.b));
    }
    for r in Root::ALL {
        if rs.is_truncated(r) {
            jobs.push(HopfJob::Power(r));
        }
    }
    jobs
}

fn delta_of_word<C: Coeff>(h: &mut Hopf<'_, C>, w: &crate::pbwalg::Exps) -> Result<TensorElement<C>> {
    h.coproduct_monomial(&Monomial::word(*w))
}

/// Checks `Δ(lhs) = Δ(rhs)` and `ε(lhs) = ε(rhs)` for one rule.
pub fn run_hopf_job<C: Coeff>(h: &mut Hopf<'_, C>, job: HopfJob) -> Result<CheckRecord> {
    let rs = h.system();
    let d = rs.datum();
    let f = d.field();
    let (diff, counit) = match job {
        HopfJob::Pair(a, b) => {
            let da = h.delta_root(a)?;
            let db = h.delta_root(b)?;
            let lhs = h.mul(&db, &da)?;
            let rule = rs.pair(a.index(), b.index());
            let mut rhs = TensorElement::zero(f);
            let mut rhs_counit = C::zero(f);
            for (w, c) in &rule.rhs {
                if w.iter().all(|&x| x == 0) {
                    rhs_counit.add_assign(&C::from_cyc(c.clone()));
                }
                rhs.add_assign(&delta_of_word(h, w)?.scale(c));
            }
            (lhs.sub(&rhs), rhs_counit)
        }
        HopfJob::Power(r) => {
            let u = rs.power_rhs(r).expect("power rule");
            let dr = h.delta_root(r)?;
            let lhs = h.power(&dr, rs.n())?;
            let rhs = h.coproduct(&u)?;
            (lhs.sub(&rhs), u.counit())
        }
    };
    let id = job.id();
    if !diff.is_zero() {
        return Ok(CheckRecord::fail(id, format!("Δ mismatch with {} terms", diff.len())));
    }
    if !counit.is_zero() {
        return Ok(CheckRecord::fail(id, format!("counit mismatch: {}", counit)));
    }
    Ok(CheckRecord::pass(id, "Δ and ε agree"))
}

/// Runs every job sequentially; the report lists only failures.
pub fn verify_hopf_ideal(d: &Datum, mu: &MuFamily) -> Result<Vec<CheckRecord>> {
    let rs = build_lifting(d, mu)?;
    verify_hopf_ideal_system(&rs)
}

pub fn verify_hopf_ideal_system(rs: &RewriteSystem<MuScalar>) -> Result<Vec<CheckRecord>> {
    let mut h = Hopf::new(rs);
    let mut out = Vec::new();
    for job in hopf_jobs(rs) {
        let rec = run_hopf_job(&mut h, job)?;
        if !rec.passed {
            out.push(rec);
        }
    }
    Ok(out)
}
