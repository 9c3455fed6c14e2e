use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use crate::cyclo::{Coeff, CycScalar, Field};
use crate::datum::{Datum, GroupElement, Root};
use crate::pbwalg::{render_coeff, render_monomial, AlgElement, Monomial, Normalizer, RewriteSystem, EMPTY};
use crate::Result;

pub(crate) type TensorMap<C> = HashMap<(Monomial, Monomial), C, FxBuildHasher>;

/// Sparse element of `A ⊗ A`.
#[derive(Clone, Debug)]
pub struct TensorElement<C: Coeff> {
    field: Field,
    terms: TensorMap<C>,
}

impl<C: Coeff> PartialEq for TensorElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coeff> TensorElement<C> {
    pub fn zero(field: Field) -> Self {
        TensorElement { field, terms: TensorMap::default() }
    }

    pub fn one(field: Field) -> Self {
        Self::term(field, Monomial::ONE, Monomial::ONE, C::one(field))
    }

    pub fn term(field: Field, l: Monomial, r: Monomial, c: C) -> Self {
        let mut t = Self::zero(field);
        t.add_term(l, r, c);
        t
    }

    /// `a ⊗ b`.
    pub fn simple(a: &AlgElement<C>, b: &AlgElement<C>) -> Self {
        let mut t = Self::zero(a.field());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(*ma, *mb, ca.mul(cb));
            }
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &Monomial, r: &Monomial) -> Option<&C> {
        self.terms.get(&(*l, *r))
    }

    pub fn sorted_terms(&self) -> Vec<((Monomial, Monomial), C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| a.0 .1.cmp(&b.0 .1)));
        v
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((l, r)) {
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

    pub fn add_assign(&mut self, other: &Self) {
        for ((l, r), c) in other.terms.iter() {
            self.add_term(*l, *r, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for ((l, r), c) in other.terms.iter() {
            self.add_term(*l, *r, c.neg());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn mul_coeff(&self, s: &C) -> Self {
        let mut out = Self::zero(self.field);
        for ((l, r), c) in self.terms.iter() {
            out.add_term(*l, *r, c.mul(s));
        }
        out
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        self.mul_coeff(&C::from_cyc(s.clone()))
    }

    /// Groups the terms by their right leg, in printing order of that leg.
    pub fn split_by_right(&self) -> Vec<(Monomial, TensorElement<C>)> {
        let mut by: HashMap<Monomial, TensorElement<C>, FxBuildHasher> = HashMap::default();
        for ((l, r), c) in self.terms.iter() {
            by.entry(*r).or_insert_with(|| Self::zero(self.field)).add_term(*l, *r, c.clone());
        }
        let mut v: Vec<_> = by.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> AlgElement<C> {
        let mut out = AlgElement::zero(self.field);
        for ((l, r), c) in self.terms.iter() {
            if r.is_group_like() {
                out.add_term(*l, c.clone());
            }
        }
        out
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self) -> AlgElement<C> {
        let mut out = AlgElement::zero(self.field);
        for ((l, r), c) in self.terms.iter() {
            if l.is_group_like() {
                out.add_term(*r, c.clone());
            }
        }
        out
    }

    pub fn render(&self, d: &Datum) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, ((l, r), c)) in terms.iter().enumerate() {
            let (neg, coeff) = render_coeff(c);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !coeff.is_empty() {
                out.push_str(&coeff);
                out.push('*');
            }
            let ls = render_monomial(l, d);
            let rs = render_monomial(r, d);
            out.push('(');
            out.push_str(if ls.is_empty() { "1" } else { &ls });
            out.push_str(" ⊗ ");
            out.push_str(if rs.is_empty() { "1" } else { &rs });
            out.push(')');
        }
        out
    }
}

/// Coproduct, counit and antipode over one rewrite system.
///
/// Owns a [`Normalizer`]; not shared between threads.
pub struct Hopf<'a, C: Coeff> {
    nz: Normalizer<'a, C>,
    delta: [Option<TensorElement<C>>; 9],
    delta_pow: HashMap<(usize, u32), TensorElement<C>, FxBuildHasher>,
    antipode: [Option<AlgElement<C>>; 9],
}

impl<'a, C: Coeff> Hopf<'a, C> {
    pub fn new(rs: &'a RewriteSystem<C>) -> Self {
        Self::from_normalizer(Normalizer::new(rs))
    }

    pub fn from_normalizer(nz: Normalizer<'a, C>) -> Self {
        Hopf { nz, delta: Default::default(), delta_pow: HashMap::default(), antipode: Default::default() }
    }

    pub fn normalizer(&mut self) -> &mut Normalizer<'a, C> {
        &mut self.nz
    }

    pub fn system(&self) -> &'a RewriteSystem<C> {
        self.nz.system()
    }

    fn datum(&self) -> &'a Datum {
        self.nz.system().datum()
    }

    fn field(&self) -> Field {
        self.datum().field()
    }

    /// Product in `A ⊗ A`, restricted to the given terms of `x`.
    pub fn mul_terms(&mut self, x: &[((Monomial, Monomial), C)], y: &TensorElement<C>) -> Result<TensorElement<C>> {
        self.nz.reset_steps();
        let d = self.datum();
        let group = d.group();
        let mut out = TensorElement::zero(self.field());
        for ((l1, r1), c1) in x {
            for ((l2, r2), c2) in y.terms() {
                let (tl, gl, wl) = self.nz.mul_monomials_raw(l1, l2)?;
                let (tr, gr, wr) = self.nz.mul_monomials_raw(r1, r2)?;
                let c = c1.mul(c2).mul_root(tl + tr);
                for (a, ca) in wl.iter() {
                    let la = Monomial::new(a.exps, group.mul(a.group, gl));
                    let cca = c.mul(ca);
                    for (b, cb) in wr.iter() {
                        let rb = Monomial::new(b.exps, group.mul(b.group, gr));
                        out.add_term(la, rb, cca.mul(cb));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&mut self, x: &TensorElement<C>, y: &TensorElement<C>) -> Result<TensorElement<C>> {
        let xs: Vec<_> = x.terms().map(|(k, c)| (*k, c.clone())).collect();
        self.mul_terms(&xs, y)
    }

    pub fn power(&mut self, x: &TensorElement<C>, n: u32) -> Result<TensorElement<C>> {
        let mut acc = TensorElement::one(self.field());
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `[x, y]_c = xy − q·yx` with an explicit scalar.
    pub fn commutator(&mut self, x: &TensorElement<C>, y: &TensorElement<C>, q: &CycScalar) -> Result<TensorElement<C>> {
        let xy = self.mul(x, y)?;
        let yx = self.mul(y, x)?;
        Ok(xy.sub(&yx.scale(q)))
    }

    /// Δ(y_α), from `Δ(y_i) = y_i ⊗ 1 + g_i ⊗ y_i` through the commutator definitions.
    pub fn delta_root(&mut self, r: Root) -> Result<TensorElement<C>> {
        if let Some(t) = &self.delta[r.index()] {
            return Ok(t.clone());
        }
        let f = self.field();
        let t = match r.definition() {
            None => {
                let y = Monomial::root(r);
                let g = Monomial::group(self.datum().root_g(r));
                let mut t = TensorElement::term(f, y, Monomial::ONE, C::one(f));
                t.add_term(g, y, C::one(f));
                t
            }
            Some((a, b)) => {
                let da = self.delta_root(a)?;
                let db = self.delta_root(b)?;
                let q = self.datum().bichar(&widen(a), &widen(b));
                self.commutator(&da, &db, &q)?
            }
        };
        self.delta[r.index()] = Some(t.clone());
        Ok(t)
    }

    fn delta_root_pow(&mut self, i: usize, k: u32) -> Result<TensorElement<C>> {
        if k == 1 {
            return self.delta_root(Root::from_index(i));
        }
        if let Some(t) = self.delta_pow.get(&(i, k)) {
            return Ok(t.clone());
        }
        let prev = self.delta_root_pow(i, k - 1)?;
        let base = self.delta_root(Root::from_index(i))?;
        let t = self.mul(&prev, &base)?;
        self.delta_pow.insert((i, k), t.clone());
        Ok(t)
    }

    pub fn coproduct_monomial(&mut self, m: &Monomial) -> Result<TensorElement<C>> {
        let f = self.field();
        let mut acc = TensorElement::one(f);
        for i in 0..9 {
            if m.exps[i] > 0 {
                let p = self.delta_root_pow(i, m.exps[i] as u32)?;
                acc = if acc.len() == 1 && acc.coeff(&Monomial::ONE, &Monomial::ONE).is_some() {
                    p
                } else {
                    self.mul(&acc, &p)?
                };
            }
        }
        if !m.group.is_identity() {
            let g = Monomial::group(m.group);
            acc = self.mul(&acc, &TensorElement::term(f, g, g, C::one(f)))?;
        }
        Ok(acc)
    }

    pub fn coproduct(&mut self, e: &AlgElement<C>) -> Result<TensorElement<C>> {
        let mut out = TensorElement::zero(self.field());
        for (m, c) in e.sorted_terms() {
            out.add_assign(&self.coproduct_monomial(&m)?.mul_coeff(&c));
        }
        Ok(out)
    }

    /// `Some(g)` iff `Δ(e) = e ⊗ 1 + g ⊗ e`.
    pub fn is_skew_primitive(&mut self, e: &AlgElement<C>) -> Result<Option<GroupElement>> {
        if e.is_zero() {
            return Ok(None);
        }
        let f = self.field();
        let mut rest = self.coproduct(e)?;
        rest.sub_assign(&TensorElement::simple(e, &AlgElement::one(f)));
        let (m0, _) = e.sorted_terms()[0].clone();
        let mut candidates: Vec<GroupElement> = rest
            .terms()
            .filter(|((l, r), _)| *r == m0 && l.is_group_like())
            .map(|((l, _), _)| l.group)
            .collect();
        candidates.sort();
        for g in candidates {
            let ge = AlgElement::group_element(f, g);
            if rest == TensorElement::simple(&ge, e) {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// S(y_α), from `S(y_i) = −g_i^{-1} y_i` and anti-multiplicativity.
    pub fn antipode_root(&mut self, r: Root) -> Result<AlgElement<C>> {
        if let Some(s) = &self.antipode[r.index()] {
            return Ok(s.clone());
        }
        let d = self.datum();
        let f = self.field();
        let s = match r.definition() {
            None => {
                let ginv = d.group().inv(d.root_g(r));
                let y = AlgElement::generator(f, r);
                let g = AlgElement::group_element(f, ginv);
                self.nz.multiply(&g, &y)?.neg()
            }
            Some((a, b)) => {
                let sa = self.antipode_root(a)?;
                let sb = self.antipode_root(b)?;
                let q = d.bichar(&widen(a), &widen(b));
                let ba = self.nz.multiply(&sb, &sa)?;
                let ab = self.nz.multiply(&sa, &sb)?;
                ba.sub(&ab.scale(&q))
            }
        };
        self.antipode[r.index()] = Some(s.clone());
        Ok(s)
    }

    pub fn antipode_monomial(&mut self, m: &Monomial) -> Result<AlgElement<C>> {
        let d = self.datum();
        let f = self.field();
        let mut acc = AlgElement::group_element(f, d.group().inv(m.group));
        for i in (0..9).rev() {
            if m.exps[i] > 0 {
                let s = self.antipode_root(Root::from_index(i))?;
                for _ in 0..m.exps[i] {
                    acc = self.nz.multiply(&acc, &s)?;
                }
            }
        }
        Ok(acc)
    }

    pub fn antipode(&mut self, e: &AlgElement<C>) -> Result<AlgElement<C>> {
        let mut out = AlgElement::zero(self.field());
        for (m, c) in e.sorted_terms() {
            out.add_assign(&self.antipode_monomial(&m)?.mul_coeff(&c));
        }
        Ok(out)
    }

    /// `m(S ⊗ id)Δ(e)` and `m(id ⊗ S)Δ(e)`.
    pub fn antipode_sides(&mut self, e: &AlgElement<C>) -> Result<(AlgElement<C>, AlgElement<C>)> {
        let de = self.coproduct(e)?;
        let f = self.field();
        let mut left = AlgElement::zero(f);
        let mut right = AlgElement::zero(f);
        for ((l, r), c) in de.sorted_terms() {
            let ml = AlgElement::monomial(f, l);
            let mr = AlgElement::monomial(f, r);
            let sl = self.antipode_monomial(&l)?;
            let sr = self.antipode_monomial(&r)?;
            left.add_assign(&self.nz.multiply(&sl, &mr)?.mul_coeff(&c));
            right.add_assign(&self.nz.multiply(&ml, &sr)?.mul_coeff(&c));
        }
        Ok((left, right))
    }

    /// Product of elements of `A` through the owned normalizer.
    pub fn multiply(&mut self, a: &AlgElement<C>, b: &AlgElement<C>) -> Result<AlgElement<C>> {
        self.nz.multiply(a, b)
    }
}

fn widen(r: Root) -> [i64; 3] {
    let d = r.degree();
    [d[0] as i64, d[1] as i64, d[2] as i64]
}

/// `y^e` as a monomial, for building tensors by hand.
pub fn word(pairs: &[(Root, u8)]) -> Monomial {
    let mut e = EMPTY;
    for &(r, k) in pairs {
        e[r.index()] += k;
    }
    Monomial::word(e)
}
