use std::fmt::Write as _;
use std::time::Instant;

use b3lift_core::cyclo::MuScalar;
use b3lift_core::datum::{canonical_datum, validate_datum, Datum, Root};
use b3lift_core::hopfverify::{run_suite_job, suite_jobs, CheckRecord, Hopf, SuiteJob, Tier};
use b3lift_core::liftings::{build_lifting, u_alpha, MuFamily};
use b3lift_core::pbwalg::oracle::Oracle;
use b3lift_core::pbwalg::{
    check_local_confluence, dimension, enumerate_pbw_box, graded_dimension, Normalizer, RewriteSystem,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::datum_file::{load, read, Loaded};
use crate::error::{CliError, EXIT_FAILED, EXIT_OK};
use crate::eval::eval;
use crate::expr::parse;
use crate::Mode;

/// What a subcommand produced: text for humans, a JSON body, and the exit code.
pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String, result: Value) -> Self {
        Outcome { text, result, code: EXIT_OK }
    }
}

pub fn datum_summary(d: &Datum) -> Value {
    json!({ "N": d.n(), "group_order": d.group_order(), "conductor": d.conductor() })
}

fn system(l: &Loaded, mode: Mode) -> Result<RewriteSystem<MuScalar>, CliError> {
    Ok(match mode {
        Mode::Serre => RewriteSystem::serre(&l.datum),
        Mode::Nichols => RewriteSystem::nichols(&l.datum),
        Mode::Lifting => build_lifting(&l.datum, &l.mu)?,
    })
}

pub fn validate(source: &str) -> Result<Outcome, CliError> {
    let (d, _) = read(source)?;
    let rep = validate_datum(&d);
    let mut text = String::new();
    let violations: Vec<Value> = rep
        .entries
        .iter()
        .map(|e| json!({ "violation": format!("{:?}", e.violation), "detail": e.detail }))
        .collect();
    if rep.is_valid() {
        let mask: Vec<&str> = Root::ALL.iter().filter(|r| d.mu_mask()[r.index()]).map(|r| r.file_name()).collect();
        writeln!(text, "valid datum: N = {}, |G| = {}, conductor {}", d.n(), d.group_order(), d.conductor()).unwrap();
        writeln!(text, "q33 = {}", d.q33().to_q_string()).unwrap();
        writeln!(text, "free mu: {}", if mask.is_empty() { "none".into() } else { mask.join(" ") }).unwrap();
        Ok(Outcome::ok(text, json!({ "valid": true, "free_mu": mask })))
    } else {
        for e in &rep.entries {
            writeln!(text, "violation {:?}: {}", e.violation, e.detail).unwrap();
        }
        Ok(Outcome { text, result: json!({ "valid": false, "violations": violations }), code: EXIT_FAILED })
    }
}

pub fn normalize(source: &str, expr: &str, mode: Mode) -> Result<Outcome, CliError> {
    let e = parse(expr)?;
    let l = load(source)?;
    let rs = system(&l, mode)?;
    let mut nz = Normalizer::new(&rs);
    let x = eval(&mut nz, &e)?;
    let nf = x.render(&l.datum);
    Ok(Outcome::ok(format!("{nf}\n"), json!({ "input": e.to_string(), "mode": mode.name(), "normal_form": nf })))
}

pub fn coproduct(source: &str, expr: &str, mode: Mode) -> Result<Outcome, CliError> {
    let e = parse(expr)?;
    let l = load(source)?;
    let rs = system(&l, mode)?;
    let mut h = Hopf::new(&rs);
    let x = eval(h.normalizer(), &e)?;
    let t = h.coproduct(&x)?.render(&l.datum);
    Ok(Outcome::ok(format!("{t}\n"), json!({ "input": e.to_string(), "mode": mode.name(), "coproduct": t })))
}

pub fn confluence(source: &str, mode: Mode) -> Result<Outcome, CliError> {
    let l = load(source)?;
    let rs = system(&l, mode)?;
    let rep = check_local_confluence(&rs)?;
    let mut text = format!(
        "{} ambiguities checked, {} unresolved\n",
        rep.checked,
        rep.unresolved.len() + rep.inhomogeneous.len()
    );
    for r in &rep.inhomogeneous {
        writeln!(text, "inhomogeneous rule {r}").unwrap();
    }
    let mut unresolved = Vec::new();
    for u in &rep.unresolved {
        let diff = u.difference.render(&l.datum);
        writeln!(text, "unresolved {}: {}", u.word, diff).unwrap();
        unresolved.push(json!({ "word": u.word, "difference": diff }));
    }
    let result = json!({
        "mode": mode.name(),
        "checked": rep.checked,
        "unresolved": unresolved,
        "inhomogeneous": rep.inhomogeneous,
    });
    let code = if rep.is_confluent() { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { text, result, code })
}

pub fn dims(source: &str, upto: u32, oracle: bool) -> Result<Outcome, CliError> {
    let l = load(source)?;
    let d = &l.datum;
    let nichols = RewriteSystem::<MuScalar>::nichols(d);
    let serre = RewriteSystem::<MuScalar>::serre(d);
    let mut text = String::new();
    let mut graded = Vec::new();
    let mut orc = oracle.then(|| Oracle::with_degree_bound(d, upto));
    let mut oracle_rows = Vec::new();
    for k in 0..=upto {
        let dk = graded_dimension(&nichols, k);
        graded.push(dk);
        write!(text, "degree {k}: {dk}").unwrap();
        if let Some(o) = orc.as_mut() {
            let od = o.dimension(k)?;
            let pd = graded_dimension(&serre, k);
            write!(text, "  (serre-only: pbw {pd}, oracle {od})").unwrap();
            oracle_rows.push(json!({ "degree": k, "pbw": pd, "oracle": od }));
        }
        text.push('\n');
    }
    let n = d.n() as u128;
    let box_count = enumerate_pbw_box(&nichols).expect("nichols system truncates every root");
    let total = dimension(&nichols).expect("nichols system truncates every root");
    writeln!(
        text,
        "dim A = N^9 * |G| = {}^9 * {} = {} * {} = {}",
        n,
        d.group_order(),
        n.pow(9),
        d.group_order(),
        total
    )
    .unwrap();
    writeln!(text, "pbw exponent box: {box_count} points").unwrap();
    let mut result = json!({
        "datum": datum_summary(d),
        "graded": graded,
        "pbw_box": box_count,
        "dimension": total.to_string(),
    });
    if oracle {
        result["oracle"] = Value::Array(oracle_rows);
    }
    Ok(Outcome::ok(text, result))
}

pub fn u_alpha_cmd(source: &str, root: &str) -> Result<Outcome, CliError> {
    let l = load(source)?;
    let roots: Vec<Root> = if root == "all" { Root::ALL.to_vec() } else { vec![Root::from_name(root)?] };
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in roots {
        let u = u_alpha(r, &l.mu, &l.datum)?.render(&l.datum);
        writeln!(text, "{r}^{} = {u}", l.datum.n()).unwrap();
        rows.push(json!({ "root": r.name(), "u": u }));
    }
    Ok(Outcome::ok(text, json!({ "closed_forms": rows })))
}

struct JobRun {
    job: SuiteJob,
    records: Result<Vec<CheckRecord>, CliError>,
    millis: f64,
}

/// Runs a suite with one rayon task per job; output order follows the job list.
pub fn verify(source: Option<&str>, suite: &str, tier: Tier, timings: bool) -> Result<Outcome, CliError> {
    let l = match source {
        Some(s) => load(s)?,
        None => {
            let datum = canonical_datum(tier.default_n())?;
            let mu = MuFamily::symbolic(&datum);
            Loaded { datum, mu }
        }
    };
    let start = Instant::now();
    let jobs = suite_jobs(suite, &l.datum)?;
    let runs: Vec<JobRun> = jobs
        .into_par_iter()
        .map(|job| {
            let t = Instant::now();
            let records = run_suite_job(&job, &l.datum, &l.mu).map_err(CliError::from);
            JobRun { job, records, millis: t.elapsed().as_secs_f64() * 1e3 }
        })
        .collect();
    let mut text = String::new();
    let mut checks = Vec::new();
    let mut jobs_json = Vec::new();
    let (mut passed, mut failed) = (0usize, 0usize);
    for run in runs {
        let records = run.records?;
        for r in &records {
            if r.passed {
                passed += 1;
            } else {
                failed += 1;
            }
            text.push_str(&r.to_string());
            text.push('\n');
            checks.push(json!({ "id": r.id, "passed": r.passed, "detail": r.detail, "job": run.job.id() }));
        }
        if timings {
            writeln!(text, "TIME {} {:.1} ms", run.job.id(), run.millis).unwrap();
        }
        jobs_json.push(json!({ "job": run.job.id(), "checks": records.len(), "millis": run.millis }));
    }
    let total_ms = start.elapsed().as_secs_f64() * 1e3;
    writeln!(
        text,
        "summary: suite {suite}, tier {}, N = {}: {} checks, {passed} passed, {failed} failed",
        tier.name(),
        l.datum.n(),
        passed + failed
    )
    .unwrap();
    let result = json!({
        "datum": datum_summary(&l.datum),
        "suite": suite,
        "tier": tier.name(),
        "checks": checks,
        "jobs": jobs_json,
        "summary": { "total": passed + failed, "passed": passed, "failed": failed, "millis": total_ms },
    });
    Ok(Outcome { text, result, code: if failed == 0 { EXIT_OK } else { EXIT_FAILED } })
}
