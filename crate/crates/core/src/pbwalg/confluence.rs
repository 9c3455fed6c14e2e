use alloc::string::String;
use alloc::vec::Vec;

use super::element::{AlgElement, Monomial, EMPTY};
use super::normalize::Normalizer;
use super::rules::RewriteSystem;
use crate::cyclo::Coeff;
use crate::datum::Root;
use crate::Result;

/// An ambiguity whose two reductions disagree.
#[derive(Clone, Debug)]
pub struct Unresolved<C: Coeff> {
    /// The overlap word, e.g. `y1*y21*y3`.
    pub word: String,
    /// Left reduction minus right reduction.
    pub difference: AlgElement<C>,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport<C: Coeff> {
    pub checked: usize,
    pub unresolved: Vec<Unresolved<C>>,
    pub inhomogeneous: Vec<String>,
}

impl<C: Coeff> ConfluenceReport<C> {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty() && self.inhomogeneous.is_empty()
    }
}

/// Kind of overlap between two leading words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambiguity {
    /// `y_c y_b y_a` with `a < b < c` in factor order.
    Triple(Root, Root, Root),
    /// `y_b y_a^N` with `a < b`.
    PowerRight(Root, Root),
    /// `y_a^N y_b` with `b < a`.
    PowerLeft(Root, Root),
    /// `y_a^{N+1}`.
    SelfPower(Root),
}

impl Ambiguity {
    pub fn word(&self, n: u32) -> String {
        match self {
            Ambiguity::Triple(c, b, a) => alloc::format!("{}*{}*{}", c, b, a),
            Ambiguity::PowerRight(b, a) => alloc::format!("{}*{}^{}", b, a, n),
            Ambiguity::PowerLeft(a, b) => alloc::format!("{}^{}*{}", a, n, b),
            Ambiguity::SelfPower(a) => alloc::format!("{}^{}", a, n + 1),
        }
    }
}

/// All ambiguities of the system in a fixed order.
pub fn ambiguities<C: Coeff>(rs: &RewriteSystem<C>) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for c in Root::ALL {
        for b in Root::ALL {
            for a in Root::ALL {
                if a < b && b < c {
                    out.push(Ambiguity::Triple(c, b, a));
                }
            }
        }
    }
    for a in Root::ALL {
        if !rs.is_truncated(a) {
            continue;
        }
        for b in Root::ALL {
            if a < b {
                out.push(Ambiguity::PowerRight(b, a));
            } else if b < a {
                out.push(Ambiguity::PowerLeft(a, b));
            }
        }
        out.push(Ambiguity::SelfPower(a));
    }
    out
}

fn pair_rhs<C: Coeff>(rs: &RewriteSystem<C>, a: Root, b: Root) -> AlgElement<C> {
    let f = rs.datum().field();
    let mut e = AlgElement::zero(f);
    for (w, c) in &rs.pair(a.index(), b.index()).rhs {
        e.add_term(Monomial::word(*w), C::from_cyc(c.clone()));
    }
    e
}

fn gen<C: Coeff>(rs: &RewriteSystem<C>, r: Root, k: u8) -> AlgElement<C> {
    let mut e = EMPTY;
    e[r.index()] = k;
    AlgElement::monomial(rs.datum().field(), Monomial::word(e))
}

/// Difference of the two reductions of one ambiguity.
pub fn resolve<C: Coeff>(nz: &mut Normalizer<'_, C>, amb: Ambiguity) -> Result<AlgElement<C>> {
    let rs = nz.system();
    let n = rs.n() as u8;
    let (left, right) = match amb {
        Ambiguity::Triple(c, b, a) => {
            let l = nz.multiply(&pair_rhs(rs, b, c), &gen(rs, a, 1))?;
            let r = nz.multiply(&gen(rs, c, 1), &pair_rhs(rs, a, b))?;
            (l, r)
        }
        Ambiguity::PowerRight(b, a) => {
            let u = rs.power_rhs(a).expect("truncated root");
            let l = nz.multiply(&gen(rs, b, 1), &u)?;
            let r = nz.multiply(&pair_rhs(rs, a, b), &gen(rs, a, n - 1))?;
            (l, r)
        }
        Ambiguity::PowerLeft(a, b) => {
            let u = rs.power_rhs(a).expect("truncated root");
            let l = nz.multiply(&u, &gen(rs, b, 1))?;
            let r = nz.multiply(&gen(rs, a, n - 1), &pair_rhs(rs, b, a))?;
            (l, r)
        }
        Ambiguity::SelfPower(a) => {
            let u = rs.power_rhs(a).expect("truncated root");
            let l = nz.multiply(&u, &gen(rs, a, 1))?;
            let r = nz.multiply(&gen(rs, a, 1), &u)?;
            (l, r)
        }
    };
    Ok(left.sub(&right))
}

/// Checks every ambiguity of the system for local confluence.
pub fn check_local_confluence<C: Coeff>(rs: &RewriteSystem<C>) -> Result<ConfluenceReport<C>> {
    let mut nz = Normalizer::new(rs);
    check_ambiguities(&mut nz, &ambiguities(rs))
}

pub fn check_ambiguities<C: Coeff>(nz: &mut Normalizer<'_, C>, list: &[Ambiguity]) -> Result<ConfluenceReport<C>> {
    let rs = nz.system();
    let mut report = ConfluenceReport {
        checked: 0,
        unresolved: Vec::new(),
        inhomogeneous: rs.inhomogeneous_rules(),
    };
    for amb in list {
        let diff = resolve(nz, *amb)?;
        report.checked += 1;
        if !diff.is_zero() {
            report.unresolved.push(Unresolved { word: amb.word(rs.n()), difference: diff });
        }
    }
    Ok(report)
}
