use alloc::string::String;
use alloc::vec::Vec;

use super::element::{exps_degree, AlgElement, Exps, EMPTY};
use crate::cyclo::{Coeff, CycScalar};
use crate::datum::{widen, Datum, GroupElement, Root};

/// `[y_a, y_b]_c = tail` for a root `a` before `b` in the factor order.
#[derive(Clone, Debug)]
pub struct PairRule {
    pub a: Root,
    pub b: Root,
    /// Exponent of `q_{a,b} = χ_b(g_a)` as a power of ζ_M.
    pub q_exp: i64,
    pub tail: Vec<(Exps, CycScalar)>,
    /// Right side of `y_b y_a → q_{a,b}^{-1} (y_a y_b - tail)`.
    pub rhs: Vec<(Exps, CycScalar)>,
}

/// Which power-of-root-vector rules a system carries.
pub enum Powers<C: Coeff> {
    /// No power rules: the pre-Nichols algebra with Serre relations only.
    None,
    /// `y_α^N → 0` for all α.
    Nichols,
    /// `y_α^N → rhs` where given; `None` entries stay untruncated.
    Custom([Option<AlgElement<C>>; 9]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    Serre,
    Nichols,
    Lifting,
    Partial,
}

/// Straightening rules for `R#kΓ` or one of its quotients.
///
/// Immutable after construction; share it between threads and give each
/// thread its own [`Normalizer`](super::Normalizer).
#[derive(Clone)]
pub struct RewriteSystem<C: Coeff> {
    datum: Datum,
    pairs: Vec<Option<PairRule>>,
    powers: [Option<Vec<(GroupElement, C)>>; 9],
    kind: SystemKind,
}

fn word(pairs: &[(Root, u8)]) -> Exps {
    let mut e = EMPTY;
    for &(r, k) in pairs {
        e[r.index()] += k;
    }
    e
}

fn deg(r: Root) -> [i64; 3] {
    widen(r.degree())
}

/// The commutation table between root vectors, with the datum's scalars.
pub fn remark_tail(d: &Datum, a: Root, b: Root) -> Vec<(Exps, CycScalar)> {
    use Root::*;
    let f = d.field();
    let one = CycScalar::one(f);
    let q = |x: Root, y: Root| d.bichar(&deg(x), &deg(y));
    let xi1 = d.xi(1);
    let xi2 = d.xi(2);
    let q33 = d.q33();
    match (a, b) {
        (Y3, Y32) => alloc::vec![(word(&[(Yt32, 1)]), one)],
        (Y3, Y2) => alloc::vec![(word(&[(Y32, 1)]), one)],
        (Y3, Y21) => alloc::vec![(word(&[(Y31, 1)]), one)],
        (Y3, Y31) => alloc::vec![(word(&[(Yt31, 1)]), one)],
        (Y2, Y1) => alloc::vec![(word(&[(Y21, 1)]), one)],
        (Y2, Yt31) => alloc::vec![(word(&[(Yt21, 1)]), one)],
        (Y32, Y1) => alloc::vec![(word(&[(Y31, 1)]), one)],
        (Yt32, Y1) => alloc::vec![(word(&[(Yt31, 1)]), one)],
        (Yt32, Y2) => alloc::vec![(word(&[(Y32, 2)]), q(Y32, Y2).mul(&xi1))],
        (Y32, Y21) => alloc::vec![(word(&[(Y2, 1), (Y31, 1)]), q(Y32, Y2).mul(&xi2))],
        (Y32, Y31) => alloc::vec![
            (word(&[(Y2, 1), (Yt31, 1)]), q(Y32, Y2).mul(&xi2)),
            (word(&[(Yt21, 1)]), q(Y32, Y2).neg()),
        ],
        (Yt31, Y21) => alloc::vec![(word(&[(Y31, 2)]), q(Y31, Y21).mul(&xi1))],
        (Yt21, Y1) => alloc::vec![
            (word(&[(Yt31, 1), (Y21, 1)]), q(Y2, Yt21).mul(&xi2)),
            (word(&[(Y31, 2)]), q(Y31, Y1).mul(&q(Y2, Y32)).mul(&xi1).neg()),
        ],
        (Yt32, Y31) => alloc::vec![(word(&[(Y32, 1), (Yt31, 1)]), q(Yt32, Y32).mul(&xi2))],
        (Yt32, Y21) => {
            let c = q(Yt32, Y2).mul(&q33);
            alloc::vec![
                (word(&[(Y32, 1), (Y31, 1)]), q(Y32, Y2).mul(&xi2)),
                (word(&[(Y2, 1), (Yt31, 1)]), c.mul(&xi1).mul(&xi2).neg()),
                (word(&[(Yt21, 1)]), c),
            ]
        }
        _ => alloc::vec![],
    }
}

impl<C: Coeff> RewriteSystem<C> {
    pub fn build(d: &Datum, powers: Powers<C>) -> RewriteSystem<C> {
        let mut pairs = alloc::vec![None; 81];
        for a in Root::ALL {
            for b in Root::ALL {
                if a < b {
                    pairs[a.index() * 9 + b.index()] = Some(make_rule(d, a, b, remark_tail(d, a, b)));
                }
            }
        }
        let (powers, kind) = match powers {
            Powers::None => (Default::default(), SystemKind::Serre),
            Powers::Nichols => (core::array::from_fn(|_| Some(Vec::new())), SystemKind::Nichols),
            Powers::Custom(p) => {
                let full = p.iter().all(Option::is_some);
                let conv = p.map(|o| {
                    o.map(|e| {
                        let mut v: Vec<(GroupElement, C)> = e
                            .sorted_terms()
                            .into_iter()
                            .map(|(m, c)| {
                                assert!(m.is_group_like(), "power rules must land in the group algebra");
                                (m.group, c)
                            })
                            .collect();
                        v.sort_by_key(|t| t.0);
                        v
                    })
                });
                (conv, if full { SystemKind::Lifting } else { SystemKind::Partial })
            }
        };
        RewriteSystem { datum: d.clone(), pairs, powers, kind }
    }

    pub fn serre(d: &Datum) -> Self {
        Self::build(d, Powers::None)
    }

    pub fn nichols(d: &Datum) -> Self {
        Self::build(d, Powers::Nichols)
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.datum.n()
    }

    /// Rule for the out-of-order word `y_b y_a` (`a` before `b`).
    #[inline]
    pub fn pair(&self, a: usize, b: usize) -> &PairRule {
        self.pairs[a * 9 + b].as_ref().expect("pair rule for a < b")
    }

    pub fn pair_rules(&self) -> impl Iterator<Item = &PairRule> {
        self.pairs.iter().flatten()
    }

    /// Replaces the tail of one commutation rule (used to probe the checkers).
    pub fn set_tail(&mut self, a: Root, b: Root, tail: Vec<(Exps, CycScalar)>) {
        assert!(a < b, "rules are indexed by a before b");
        let rule = make_rule(&self.datum, a, b, tail);
        self.pairs[a.index() * 9 + b.index()] = Some(rule);
    }

    /// Right side of `y_α^N`, if that power is truncated.
    #[inline]
    pub fn power_rule(&self, r: usize) -> Option<&[(GroupElement, C)]> {
        self.powers[r].as_deref()
    }

    pub fn power_rhs(&self, r: Root) -> Option<AlgElement<C>> {
        let f = self.datum.field();
        self.powers[r.index()].as_ref().map(|v| {
            let mut e = AlgElement::zero(f);
            for (g, c) in v {
                e.add_term(super::Monomial::group(*g), c.clone());
            }
            e
        })
    }

    pub fn is_truncated(&self, r: Root) -> bool {
        self.powers[r.index()].is_some()
    }

    /// Rule descriptions whose sides differ in ℤ³-degree.
    pub fn inhomogeneous_rules(&self) -> Vec<String> {
        let mut out = Vec::new();
        for rule in self.pair_rules() {
            let target = exps_degree(&{
                let mut e = EMPTY;
                e[rule.a.index()] += 1;
                e[rule.b.index()] += 1;
                e
            });
            for (w, _) in &rule.tail {
                if exps_degree(w) != target {
                    out.push(alloc::format!("[{}, {}]_c", rule.a, rule.b));
                    break;
                }
            }
        }
        out
    }
}

fn make_rule(d: &Datum, a: Root, b: Root, tail: Vec<(Exps, CycScalar)>) -> PairRule {
    let q_exp = d.bichar_exp(&deg(a), &deg(b));
    let qinv = d.root_of_unity(-q_exp);
    let mut rhs = Vec::with_capacity(tail.len() + 1);
    rhs.push((word(&[(a, 1), (b, 1)]), qinv.clone()));
    for (w, c) in &tail {
        rhs.push((*w, c.mul(&qinv).neg()));
    }
    PairRule { a, b, q_exp, tail, rhs }
}
