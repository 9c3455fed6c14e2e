use alloc::rc::Rc;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use super::element::{exps_degree, AlgElement, Exps, Monomial, TermMap, EMPTY};
use super::rules::RewriteSystem;
use crate::cyclo::Coeff;
use crate::datum::GroupElement;
use crate::{AlgebraError, Result};

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

static STEP_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_STEP_BUDGET);

/// Budget used by [`Normalizer::new`] from now on, process-wide.
pub fn set_default_step_budget(budget: u64) {
    STEP_BUDGET.store(budget, Ordering::Relaxed);
}

pub fn default_step_budget() -> u64 {
    STEP_BUDGET.load(Ordering::Relaxed)
}

pub(crate) type Terms<C> = Rc<[(Monomial, C)]>;

/// Straightening engine with a per-instance product cache.
///
/// Each public entry point resets the step counter; exceeding the budget
/// yields [`AlgebraError::BudgetExceeded`].
pub struct Normalizer<'a, C: Coeff> {
    rs: &'a RewriteSystem<C>,
    cache: HashMap<(Exps, Exps), Terms<C>, FxBuildHasher>,
    steps: u64,
    budget: u64,
}

fn last_nonzero(e: &Exps) -> Option<usize> {
    (0..9).rev().find(|&i| e[i] != 0)
}

fn first_nonzero(e: &Exps) -> Option<usize> {
    (0..9).find(|&i| e[i] != 0)
}

impl<'a, C: Coeff> Normalizer<'a, C> {
    pub fn new(rs: &'a RewriteSystem<C>) -> Self {
        Self::with_budget(rs, default_step_budget())
    }

    pub fn with_budget(rs: &'a RewriteSystem<C>, budget: u64) -> Self {
        Normalizer { rs, cache: HashMap::default(), steps: 0, budget }
    }

    pub fn system(&self) -> &'a RewriteSystem<C> {
        self.rs
    }

    pub fn set_budget(&mut self, budget: u64) {
        self.budget = budget;
    }

    /// Rewrite steps used by the last top-level call.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn clear_cache(&mut self) {
        self.cache.clear();
    }

    fn one(&self) -> C {
        C::one(self.rs.datum().field())
    }

    /// Normal form of `y^a · y^b` for PBW words `a`, `b`.
    fn mul_words(&mut self, a: &Exps, b: &Exps) -> Result<Terms<C>> {
        if let Some(r) = self.cache.get(&(*a, *b)) {
            return Ok(r.clone());
        }
        let res: Terms<C> = self.mul_words_uncached(a, b)?.into();
        self.cache.insert((*a, *b), res.clone());
        Ok(res)
    }

    fn mul_words_uncached(&mut self, a: &Exps, b: &Exps) -> Result<Vec<(Monomial, C)>> {
        let (la, fb) = match (last_nonzero(a), first_nonzero(b)) {
            (None, _) => return Ok(alloc::vec![(Monomial::word(*b), self.one())]),
            (_, None) => return Ok(alloc::vec![(Monomial::word(*a), self.one())]),
            (Some(x), Some(y)) => (x, y),
        };
        if la <= fb {
            let mut e = *a;
            for i in fb..9 {
                e[i] = e[i].checked_add(b[i]).ok_or(AlgebraError::DegreeBudget {
                    got: 256,
                    budget: 255,
                })?;
            }
            let n = self.rs.n() as u8;
            if la == fb && e[la] >= n {
                if let Some(u) = self.rs.power_rule(la) {
                    e[la] -= n;
                    let mut tail = *b;
                    tail[la] = 0;
                    let tdeg = exps_degree(&tail);
                    let d = self.rs.datum();
                    let mut out = Vec::with_capacity(u.len());
                    for (h, c) in u {
                        let tw = d.degree_char_exp(&tdeg, *h);
                        out.push((Monomial::new(e, *h), c.mul_root(tw)));
                    }
                    return Ok(out);
                }
            }
            return Ok(alloc::vec![(Monomial::word(e), self.one())]);
        }
        self.steps += 1;
        if self.steps > self.budget {
            return Err(AlgebraError::BudgetExceeded(self.budget));
        }
        let mut a1 = *a;
        a1[la] -= 1;
        let mut b1 = *b;
        b1[fb] -= 1;
        let bdeg = exps_degree(&b1);
        let rs = self.rs;
        let group = rs.datum().group();
        let mut acc: TermMap<C> = TermMap::default();
        for (w, c) in rs.pair(fb, la).rhs.iter() {
            let left = self.mul_words(&a1, w)?;
            for (m1, c1) in left.iter() {
                let tw = rs.datum().degree_char_exp(&bdeg, m1.group);
                let c1 = c1.scale(c).mul_root(tw);
                let right = self.mul_words(&m1.exps, &b1)?;
                for (m2, c2) in right.iter() {
                    let g = group.mul(m1.group, m2.group);
                    add_to(&mut acc, Monomial::new(m2.exps, g), c1.mul(c2));
                }
            }
        }
        Ok(acc.into_iter().collect())
    }

    fn mul_into(&mut self, m1: &Monomial, c1: &C, m2: &Monomial, c2: &C, out: &mut AlgElement<C>) -> Result<()> {
        let d = self.rs.datum();
        let tw = d.degree_char_exp(&m2.degree(), m1.group);
        let c = c1.mul(c2).mul_root(tw);
        let g = d.group().mul(m1.group, m2.group);
        let words = self.mul_words(&m1.exps, &m2.exps)?;
        for (m, cw) in words.iter() {
            out.add_term(Monomial::new(m.exps, d.group().mul(m.group, g)), c.mul(cw));
        }
        Ok(())
    }

    pub(crate) fn reset_steps(&mut self) {
        self.steps = 0;
    }

    /// `m1 · m2 = ζ^tw · Σ c_w · w · g` with words `w` and `g` the product of the group parts.
    pub(crate) fn mul_monomials_raw(&mut self, m1: &Monomial, m2: &Monomial) -> Result<(i64, GroupElement, Terms<C>)> {
        let d = self.rs.datum();
        let tw = d.degree_char_exp(&m2.degree(), m1.group);
        let g = d.group().mul(m1.group, m2.group);
        let words = self.mul_words(&m1.exps, &m2.exps)?;
        Ok((tw, g, words))
    }

    pub fn multiply(&mut self, x: &AlgElement<C>, y: &AlgElement<C>) -> Result<AlgElement<C>> {
        self.steps = 0;
        self.multiply_inner(x, y)
    }

    fn multiply_inner(&mut self, x: &AlgElement<C>, y: &AlgElement<C>) -> Result<AlgElement<C>> {
        let mut out = AlgElement::zero(self.rs.datum().field());
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                self.mul_into(m1, c1, m2, c2, &mut out)?;
            }
        }
        Ok(out)
    }

    /// Product of monomials, each read as an ordered word.
    pub fn mul_monomials(&mut self, m1: &Monomial, m2: &Monomial) -> Result<AlgElement<C>> {
        self.steps = 0;
        let mut out = AlgElement::zero(self.rs.datum().field());
        let one = self.one();
        self.mul_into(m1, &one, m2, &one, &mut out)?;
        Ok(out)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&mut self, factors: &[&AlgElement<C>]) -> Result<AlgElement<C>> {
        self.steps = 0;
        let mut acc = AlgElement::one(self.rs.datum().field());
        for f in factors {
            acc = self.multiply_inner(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn power(&mut self, x: &AlgElement<C>, n: u32) -> Result<AlgElement<C>> {
        self.steps = 0;
        let mut acc = AlgElement::one(self.rs.datum().field());
        for _ in 0..n {
            acc = self.multiply_inner(&acc, x)?;
        }
        Ok(acc)
    }

    /// Rewrites an element whose monomials may violate the PBW bounds
    /// (for instance `y1^N` in a truncated system).
    pub fn normalize(&mut self, x: &AlgElement<C>) -> Result<AlgElement<C>> {
        self.steps = 0;
        let field = self.rs.datum().field();
        let n = self.rs.n() as u8;
        let mut out = AlgElement::zero(field);
        for (m, c) in x.terms() {
            let reduced = m
                .exps
                .iter()
                .enumerate()
                .all(|(i, &k)| k < n || self.rs.power_rule(i).is_none());
            if reduced {
                out.add_term(*m, c.clone());
                continue;
            }
            let mut acc = AlgElement::one(field);
            for i in 0..9 {
                for _ in 0..m.exps[i] {
                    let mut e = EMPTY;
                    e[i] = 1;
                    let g = AlgElement::monomial(field, Monomial::word(e));
                    acc = self.multiply_inner(&acc, &g)?;
                }
            }
            let tail = AlgElement::term(field, Monomial::group(m.group), c.clone());
            out.add_assign(&self.multiply_inner(&acc, &tail)?);
        }
        Ok(out)
    }

    /// `y^e` for a single root vector power, normalized.
    pub fn root_power(&mut self, r: usize, k: u32) -> Result<AlgElement<C>> {
        let field = self.rs.datum().field();
        let mut e = EMPTY;
        e[r] = 1;
        self.power(&AlgElement::monomial(field, Monomial::word(e)), k)
    }

    /// `g · x`.
    pub fn group_times(&self, g: GroupElement, x: &AlgElement<C>) -> AlgElement<C> {
        let d = self.rs.datum();
        let mut out = AlgElement::zero(d.field());
        for (m, c) in x.terms() {
            let tw = d.degree_char_exp(&m.degree(), g);
            out.add_term(Monomial::new(m.exps, d.group().mul(g, m.group)), c.mul_root(tw));
        }
        out
    }
}

pub(crate) fn add_to<C: Coeff>(acc: &mut TermMap<C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        hashbrown::hash_map::Entry::Occupied(mut o) => {
            o.get_mut().add_assign(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
        hashbrown::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

