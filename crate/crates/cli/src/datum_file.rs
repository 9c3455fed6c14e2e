//! Datum files.
//!
//! ```json
//! {
//!   "N": 3,
//!   "invariant_factors": [9, 9, 9],
//!   "E": [[2, -1, 0], [-1, 2, -1], [0, -1, 1]],
//!   "g": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
//!   "chi": [[6, 6, 0], [6, 6, 6], [0, 6, 3]],
//!   "mu": { "a1": 1, "a21": "q^2 - 1", "at21": "sym" }
//! }
//! ```
//!
//! Without `mu` every unmasked parameter is an indeterminate. With `mu`,
//! listed roots take the given value (`"sym"` keeps the indeterminate) and
//! the others are zero. Instead of a path, `canonical:N` and `skewed:N`
//! name the built-in data.

use std::collections::BTreeMap;

use b3lift_core::cyclo::{Coeff, MuScalar};
use b3lift_core::datum::{canonical_datum, skewed_datum, validate_datum, Datum, Root};
use b3lift_core::liftings::MuFamily;
use b3lift_core::pbwalg::{Monomial, Normalizer, RewriteSystem};
use serde::Deserialize;

use crate::error::CliError;
use crate::eval::eval;
use crate::expr::parse;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum MuValue {
    Int(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    #[serde(rename = "N")]
    pub n: u32,
    pub invariant_factors: Vec<u32>,
    #[serde(rename = "E")]
    pub e: [[i64; 3]; 3],
    pub g: [Vec<i64>; 3],
    pub chi: [Vec<i64>; 3],
    #[serde(default)]
    pub mu: Option<BTreeMap<String, MuValue>>,
}

pub struct Loaded {
    pub datum: Datum,
    pub mu: MuFamily,
}

impl DatumFile {
    pub fn to_datum(&self) -> Result<Datum, CliError> {
        Ok(Datum::new(
            self.n,
            &self.invariant_factors,
            self.e,
            [&self.g[0], &self.g[1], &self.g[2]],
            [&self.chi[0], &self.chi[1], &self.chi[2]],
        )?)
    }
}

fn builtin(source: &str) -> Option<Result<Datum, CliError>> {
    let (kind, n) = source.split_once(':')?;
    let n: u32 = match n.parse() {
        Ok(n) => n,
        Err(_) => return Some(Err(CliError::Input(format!("bad order in `{source}`")))),
    };
    match kind {
        "canonical" => Some(canonical_datum(n).map_err(Into::into)),
        "skewed" => Some(skewed_datum(n).map_err(Into::into)),
        _ => None,
    }
}

/// Reads a datum without validating it.
pub fn read(source: &str) -> Result<(Datum, Option<BTreeMap<String, MuValue>>), CliError> {
    if let Some(d) = builtin(source) {
        return Ok((d?, None));
    }
    let text = std::fs::read_to_string(source).map_err(|e| CliError::Io { path: source.into(), source: e })?;
    let file: DatumFile = serde_json::from_str(&text)?;
    Ok((file.to_datum()?, file.mu))
}

/// Reads and validates a datum, then builds its μ family.
pub fn load(source: &str) -> Result<Loaded, CliError> {
    let (datum, mu) = read(source)?;
    let report = validate_datum(&datum);
    if !report.is_valid() {
        let first = &report.entries[0];
        return Err(CliError::Input(format!("invalid datum: {}", first.detail)));
    }
    let mu = match mu {
        None => MuFamily::symbolic(&datum),
        Some(map) => mu_family(&datum, &map)?,
    };
    Ok(Loaded { datum, mu })
}

fn mu_family(d: &Datum, map: &BTreeMap<String, MuValue>) -> Result<MuFamily, CliError> {
    let f = d.field();
    let rs = RewriteSystem::<MuScalar>::serre(d);
    let mut nz = Normalizer::new(&rs);
    let mut values: [MuScalar; 9] = std::array::from_fn(|_| MuScalar::zero(f));
    for (name, v) in map {
        let r = Root::from_name(name)?;
        values[r.index()] = match v {
            MuValue::Int(k) => MuScalar::constant(b3lift_core::cyclo::CycScalar::from_int(f, *k)),
            MuValue::Text(s) if s == "sym" => MuScalar::var(f, r.index()),
            MuValue::Text(s) => {
                let e = eval(&mut nz, &parse(s)?)?;
                let terms = e.sorted_terms();
                match terms.as_slice() {
                    [] => MuScalar::zero(f),
                    [(m, c)] if *m == Monomial::ONE => c.clone(),
                    _ => return Err(CliError::Input(format!("mu value for {name} is not a scalar"))),
                }
            }
        };
    }
    Ok(MuFamily::new(d, values)?)
}
