use b3lift_core::cyclo::{CycScalar, MuScalar, Rat};
use b3lift_core::datum::Datum;
use b3lift_core::liftings::braided_commutator;
use b3lift_core::pbwalg::{AlgElement, Monomial, Normalizer};
use b3lift_core::AlgebraError;

use crate::error::CliError;
use crate::expr::Expr;

/// Evaluates an expression to its normal form in the normalizer's system.
pub fn eval(nz: &mut Normalizer<'_, MuScalar>, e: &Expr) -> Result<AlgElement<MuScalar>, CliError> {
    let d = nz.system().datum().clone();
    let f = d.field();
    let scalar = |c: CycScalar| AlgElement::scalar(f, MuScalar::constant(c));
    Ok(match e {
        Expr::Int(n) => scalar(CycScalar::from_coeffs(f, &[rat(*n, 1)?])),
        Expr::Frac(n, m) => scalar(CycScalar::from_coeffs(f, &[rat(*n, *m)?])),
        Expr::Q => scalar(d.root_of_unity(1)),
        Expr::Gen(r) => AlgElement::generator(f, *r),
        Expr::Group(v) => {
            let rank = d.group().rank();
            if v.len() != rank {
                return Err(CliError::Input(format!(
                    "group element g[..] has {} entries, the group has rank {rank}",
                    v.len()
                )));
            }
            AlgElement::group_element(f, d.group().encode(v)?)
        }
        Expr::Mu(r) => AlgElement::scalar(f, MuScalar::var(f, r.index())),
        Expr::Neg(x) => eval(nz, x)?.neg(),
        Expr::Add(a, b) => eval(nz, a)?.add(&eval(nz, b)?),
        Expr::Sub(a, b) => eval(nz, a)?.sub(&eval(nz, b)?),
        Expr::Mul(a, b) => {
            let (x, y) = (eval(nz, a)?, eval(nz, b)?);
            nz.multiply(&x, &y)?
        }
        Expr::Pow(a, k) => {
            let mut x = eval(nz, a)?;
            if *k < 0 {
                x = invert(&d, &x)?;
            }
            nz.power(&x, k.unsigned_abs() as u32)?
        }
        Expr::Comm(a, b) => {
            let (x, y) = (eval(nz, a)?, eval(nz, b)?);
            braided_commutator(nz, &x, &y)?
        }
    })
}

fn rat(n: u64, m: u64) -> Result<Rat, CliError> {
    if m == 0 {
        return Err(AlgebraError::DivisionByZero.into());
    }
    let (n, m) = (i64::try_from(n), i64::try_from(m));
    match (n, m) {
        (Ok(n), Ok(m)) => Ok(Rat::new(n, m)),
        _ => Err(CliError::Input("integer literal exceeds 2^63".into())),
    }
}

/// Inverse of `c·g` with `c` a nonzero constant.
fn invert(d: &Datum, x: &AlgElement<MuScalar>) -> Result<AlgElement<MuScalar>, CliError> {
    let terms = x.sorted_terms();
    let [(m, c)] = terms.as_slice() else {
        return Err(CliError::Input("negative powers need a single invertible term".into()));
    };
    let c = c.as_constant().filter(|_| m.is_group_like());
    let Some(c) = c else {
        return Err(CliError::Input("negative powers need a scalar times a group element".into()));
    };
    let inv = c.inv()?;
    Ok(AlgElement::term(
        d.field(),
        Monomial::group(d.group().inv(m.group)),
        MuScalar::constant(inv),
    ))
}
