use alloc::vec::Vec;

use crate::cyclo::{Coeff, CycScalar, MuScalar};
use crate::datum::{Datum, Root};
use crate::pbwalg::{AlgElement, Monomial, Normalizer, Powers, RewriteSystem};
use crate::{AlgebraError, Result};

/// `y_α = [y_a, y_b]_c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootVectorDef {
    pub root: Root,
    pub left: Root,
    pub right: Root,
}

pub fn root_vector_def(r: Root) -> Option<RootVectorDef> {
    r.definition().map(|(left, right)| RootVectorDef { root: r, left, right })
}

/// `[a, b]_c = ab − q_{deg a, deg b} ba` for ℤ³-homogeneous `a`, `b`.
pub fn braided_commutator<C: Coeff>(
    nz: &mut Normalizer<'_, C>,
    a: &AlgElement<C>,
    b: &AlgElement<C>,
) -> Result<AlgElement<C>> {
    let da = a.homogeneous_degree().ok_or(AlgebraError::Inhomogeneous)?;
    let db = b.homogeneous_degree().ok_or(AlgebraError::Inhomogeneous)?;
    let q = nz.system().datum().bichar(&da, &db);
    let ab = nz.multiply(a, b)?;
    let ba = nz.multiply(b, a)?;
    Ok(ab.sub(&ba.scale(&q)))
}

/// The nine deformation parameters; masked entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct MuFamily {
    values: [MuScalar; 9],
}

impl MuFamily {
    /// Every unmasked μ_α as an independent indeterminate.
    pub fn symbolic(d: &Datum) -> MuFamily {
        let mask = d.mu_mask();
        let f = d.field();
        MuFamily {
            values: core::array::from_fn(|i| if mask[i] { MuScalar::var(f, i) } else { MuScalar::zero(f) }),
        }
    }

    pub fn zero(d: &Datum) -> MuFamily {
        MuFamily { values: core::array::from_fn(|_| MuScalar::zero(d.field())) }
    }

    /// Fails if a masked root receives a nonzero value.
    pub fn new(d: &Datum, values: [MuScalar; 9]) -> Result<MuFamily> {
        let mask = d.mu_mask();
        for r in Root::ALL {
            if !mask[r.index()] && !values[r.index()].is_zero() {
                return Err(AlgebraError::MaskViolation(r.file_name()));
            }
        }
        Ok(MuFamily { values })
    }

    pub fn from_constants(d: &Datum, values: [CycScalar; 9]) -> Result<MuFamily> {
        Self::new(d, values.map(MuScalar::constant))
    }

    pub fn get(&self, r: Root) -> &MuScalar {
        &self.values[r.index()]
    }

    pub fn values(&self) -> &[MuScalar; 9] {
        &self.values
    }

    /// Replaces one entry without re-checking the mask.
    pub fn with_value(mut self, r: Root, v: MuScalar) -> MuFamily {
        self.values[r.index()] = v;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LambdaScalars {
    pub lambda_t31: MuScalar,
    pub lambda_31: MuScalar,
    pub lambda_21: MuScalar,
    pub lambda_1: MuScalar,
}

struct Ctx<'a> {
    d: &'a Datum,
    mu: &'a MuFamily,
    xi1n: CycScalar,
    xi2n: CycScalar,
}

impl<'a> Ctx<'a> {
    fn new(d: &'a Datum, mu: &'a MuFamily) -> Self {
        let n = d.n() as i64;
        let xi1n = d.xi(1).pow(n).expect("nonnegative power");
        let xi2n = d.xi(2).pow(n).expect("nonnegative power");
        Ctx { d, mu, xi1n, xi2n }
    }

    fn m(&self, r: Root) -> MuScalar {
        self.mu.get(r).clone()
    }

    fn c(&self, x: &CycScalar) -> MuScalar {
        MuScalar::constant(x.clone())
    }

    fn int(&self, k: i64) -> MuScalar {
        MuScalar::constant(CycScalar::from_int(self.d.field(), k))
    }

    /// g_α^N − 1.
    fn g(&self, r: Root) -> AlgElement<MuScalar> {
        let f = self.d.field();
        let mut e = AlgElement::zero(f);
        e.add_term(Monomial::group(self.d.root_gn(r)), MuScalar::one(f));
        e.add_term(Monomial::ONE, MuScalar::constant(CycScalar::from_int(f, -1)));
        e
    }
}

fn prod(xs: &[&MuScalar]) -> MuScalar {
    let mut it = xs.iter();
    let first = (*it.next().expect("nonempty product")).clone();
    it.fold(first, |acc, x| acc.mul(x))
}

pub fn lambda_scalars(d: &Datum, mu: &MuFamily) -> LambdaScalars {
    use Root::*;
    let cx = Ctx::new(d, mu);
    let (x1, x2) = (cx.c(&cx.xi1n), cx.c(&cx.xi2n));
    let two = cx.int(2);
    let (m2, m3, m32, mt32) = (cx.m(Y2), cx.m(Y3), cx.m(Y32), cx.m(Yt32));
    LambdaScalars {
        lambda_t31: prod(&[&x2, &m2]),
        lambda_31: prod(&[&two, &x1]).mul(&prod(&[&x2, &m2, &m3]).sub(&m32)),
        lambda_21: x2.mul(
            &prod(&[&x1, &x2, &m2, &m3, &m3])
                .sub(&prod(&[&two, &x1, &m3, &m32]))
                .add(&mt32),
        ),
        lambda_1: x2.mul(&prod(&[&x2, &m2, &mt32]).sub(&prod(&[&x1, &m32, &m32]))),
    }
}

/// Closed form of the right side of `y_α^N` in the group algebra.
pub fn u_alpha(r: Root, mu: &MuFamily, d: &Datum) -> Result<AlgElement<MuScalar>> {
    use Root::*;
    let mask = d.mu_mask();
    for s in Root::ALL {
        if !mask[s.index()] && !mu.get(s).is_zero() {
            return Err(AlgebraError::MaskViolation(s.file_name()));
        }
    }
    let cx = Ctx::new(d, mu);
    let (x1, x2) = (cx.c(&cx.xi1n), cx.c(&cx.xi2n));
    let two = cx.int(2);
    let m = |r| cx.m(r);
    let g = |r| cx.g(r);
    let t = |c: MuScalar, r| g(r).mul_coeff(&c);
    let out = match r {
        Y1 | Y2 | Y3 => t(m(r), r),
        Y21 => t(m(Y21), Y21).sub(&t(prod(&[&x2, &m(Y2), &m(Y1)]), Y1)),
        Y32 => t(m(Y32), Y32).sub(&t(prod(&[&x2, &m(Y3), &m(Y2)]), Y2)),
        Y31 => t(m(Y31), Y31)
            .sub(&t(prod(&[&x2, &m(Y3), &m(Y21)]), Y21))
            .sub(&t(x2.mul(&m(Y32).sub(&prod(&[&x2, &m(Y3), &m(Y2)]))).mul(&m(Y1)), Y1)),
        Yt32 => t(m(Yt32), Yt32)
            .sub(&t(prod(&[&two, &x1, &m(Y3), &m(Y32)]), Y32))
            .add(&t(prod(&[&x1, &x2, &m(Y3), &m(Y3), &m(Y2)]), Y2)),
        Yt31 => {
            let inner = prod(&[&x1, &x2, &m(Y3), &m(Y3), &m(Y2)])
                .sub(&prod(&[&two, &x1, &m(Y3), &m(Y32)]))
                .add(&m(Yt32));
            t(m(Yt31), Yt31)
                .sub(&t(prod(&[&two, &x1, &m(Y3), &m(Y31)]), Y31))
                .add(&t(prod(&[&x1, &x2, &m(Y3), &m(Y3), &m(Y21)]), Y21))
                .sub(&t(prod(&[&x2, &inner, &m(Y1)]), Y1))
        }
        Yt21 => {
            let inner = prod(&[&x2, &m(Y2), &m(Yt32)]).sub(&prod(&[&x1, &m(Y32), &m(Y32)]));
            t(m(Yt21), Yt21)
                .sub(&t(prod(&[&x2, &m(Y2), &m(Yt31)]), Yt31))
                .add(&t(prod(&[&two, &x1, &m(Y32), &m(Y31)]), Y31))
                .sub(&t(prod(&[&x2, &m(Yt32), &m(Y21)]), Y21))
                .add(&t(prod(&[&x2, &inner, &m(Y1)]), Y1))
        }
    };
    Ok(out)
}

/// Coefficients `c_β` of `y_α^N = μ_α(g_α^N − 1) − Σ c_β y_β^N`.
pub fn recursion_terms(r: Root, mu: &MuFamily, d: &Datum) -> Vec<(Root, MuScalar)> {
    use Root::*;
    let cx = Ctx::new(d, mu);
    let (x1, x2) = (cx.c(&cx.xi1n), cx.c(&cx.xi2n));
    let two = cx.int(2);
    let m = |r| cx.m(r);
    match r {
        Y1 | Y2 | Y3 => Vec::new(),
        Y21 => alloc::vec![(Y1, prod(&[&x2, &m(Y2)]))],
        Y32 => alloc::vec![(Y2, prod(&[&x2, &m(Y3)]))],
        Y31 => alloc::vec![(Y21, prod(&[&x2, &m(Y3)])), (Y1, prod(&[&x2, &m(Y32)]))],
        Yt32 => alloc::vec![
            (Y32, prod(&[&two, &x1, &m(Y3)])),
            (Y2, prod(&[&x1, &x2, &m(Y3), &m(Y3)])),
        ],
        Yt31 => alloc::vec![
            (Y31, prod(&[&two, &x1, &m(Y3)])),
            (Y21, prod(&[&x1, &x2, &m(Y3), &m(Y3)])),
            (Y1, prod(&[&x2, &m(Yt32)])),
        ],
        Yt21 => {
            let l = lambda_scalars(d, mu);
            alloc::vec![(Yt31, l.lambda_t31), (Y31, l.lambda_31), (Y21, l.lambda_21), (Y1, l.lambda_1)]
        }
    }
}

/// Right side of `y_α^N` obtained by substituting the recursion into itself.
pub fn recursive_u_alpha(r: Root, mu: &MuFamily, d: &Datum) -> AlgElement<MuScalar> {
    let cx = Ctx::new(d, mu);
    let mut out = cx.g(r).mul_coeff(&cx.m(r));
    for (s, c) in recursion_terms(r, mu, d) {
        out.sub_assign(&recursive_u_alpha(s, mu, d).mul_coeff(&c));
    }
    out
}

#[derive(Clone, Debug)]
pub struct RecursionMismatch {
    pub root: Root,
    pub difference: AlgElement<MuScalar>,
}

#[derive(Clone, Debug, Default)]
pub struct RecursionReport {
    pub checked: Vec<Root>,
    pub mismatches: Vec<RecursionMismatch>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the recursive and closed forms for all nine roots with symbolic μ.
pub fn expand_recursion_check(d: &Datum) -> Result<RecursionReport> {
    let mu = MuFamily::symbolic(d);
    let mut rep = RecursionReport::default();
    for r in Root::ALL {
        let diff = recursive_u_alpha(r, &mu, d).sub(&u_alpha(r, &mu, d)?);
        rep.checked.push(r);
        if !diff.is_zero() {
            rep.mismatches.push(RecursionMismatch { root: r, difference: diff });
        }
    }
    Ok(rep)
}

/// `A(Γ, V, μ)`: all nine power rules deformed by the closed forms.
pub fn build_lifting(d: &Datum, mu: &MuFamily) -> Result<RewriteSystem<MuScalar>> {
    let mut powers: [Option<AlgElement<MuScalar>>; 9] = Default::default();
    for r in Root::ALL {
        powers[r.index()] = Some(u_alpha(r, mu, d)?);
    }
    Ok(RewriteSystem::build(d, Powers::Custom(powers)))
}

/// Deformed power rules only for roots of level below `level`.
pub fn build_partial_lifting(d: &Datum, mu: &MuFamily, level: u8) -> Result<RewriteSystem<MuScalar>> {
    let mut powers: [Option<AlgElement<MuScalar>>; 9] = Default::default();
    for r in Root::ALL {
        if r.level() < level {
            powers[r.index()] = Some(u_alpha(r, mu, d)?);
        }
    }
    Ok(RewriteSystem::build(d, Powers::Custom(powers)))
}
