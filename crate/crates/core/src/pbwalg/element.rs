use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use crate::cyclo::{Coeff, CycScalar, Field};
use crate::datum::{Datum, GroupElement, Root, ROOT_DEGREES};

/// Exponents of the nine root vectors in PBW factor order.
pub type Exps = [u8; 9];

pub const EMPTY: Exps = [0; 9];

/// `y3^{n9} yt32^{n8} … y1^{n1} · g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Exps,
    pub group: GroupElement,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: EMPTY, group: GroupElement::IDENTITY };

    pub fn new(exps: Exps, group: GroupElement) -> Monomial {
        Monomial { exps, group }
    }

    pub fn word(exps: Exps) -> Monomial {
        Monomial { exps, group: GroupElement::IDENTITY }
    }

    pub fn root(r: Root) -> Monomial {
        let mut e = EMPTY;
        e[r.index()] = 1;
        Monomial::word(e)
    }

    pub fn group(g: GroupElement) -> Monomial {
        Monomial { exps: EMPTY, group: g }
    }

    pub fn degree(&self) -> [i64; 3] {
        exps_degree(&self.exps)
    }

    /// ℤ-degree (sum of heights).
    pub fn height(&self) -> u32 {
        exps_height(&self.exps)
    }

    pub fn is_group_like(&self) -> bool {
        self.exps == EMPTY
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Printing order: ℤ-degree, then exponents in factor order, then group part.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.group.cmp(&other.group))
    }
}

pub fn exps_degree(e: &Exps) -> [i64; 3] {
    let mut d = [0i64; 3];
    for (i, &k) in e.iter().enumerate() {
        if k != 0 {
            for j in 0..3 {
                d[j] += k as i64 * ROOT_DEGREES[i][j] as i64;
            }
        }
    }
    d
}

pub fn exps_height(e: &Exps) -> u32 {
    e.iter()
        .enumerate()
        .map(|(i, &k)| k as u32 * Root::from_index(i).height())
        .sum()
}

pub(crate) type TermMap<C> = HashMap<Monomial, C, FxBuildHasher>;

/// Sparse linear combination of PBW monomials.
#[derive(Clone, Debug)]
pub struct AlgElement<C: Coeff> {
    field: Field,
    terms: TermMap<C>,
}

impl<C: Coeff> PartialEq for AlgElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coeff> AlgElement<C> {
    pub fn zero(field: Field) -> Self {
        AlgElement { field, terms: TermMap::default() }
    }

    pub fn one(field: Field) -> Self {
        Self::term(field, Monomial::ONE, C::one(field))
    }

    pub fn term(field: Field, m: Monomial, c: C) -> Self {
        let mut e = Self::zero(field);
        e.add_term(m, c);
        e
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        Self::term(field, m, C::one(field))
    }

    pub fn generator(field: Field, r: Root) -> Self {
        Self::monomial(field, Monomial::root(r))
    }

    pub fn group_element(field: Field, g: GroupElement) -> Self {
        Self::monomial(field, Monomial::group(g))
    }

    pub fn scalar(field: Field, c: C) -> Self {
        Self::term(field, Monomial::ONE, c)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Terms in printing order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, C)> {
        let mut v: Vec<(Monomial, C)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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
        for (m, c) in other.terms.iter() {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, c) in other.terms.iter() {
            self.add_term(*m, c.neg());
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

    pub fn neg(&self) -> Self {
        AlgElement {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        self.mul_coeff(&C::from_cyc(s.clone()))
    }

    pub fn mul_coeff(&self, s: &C) -> Self {
        let mut out = Self::zero(self.field);
        for (m, c) in self.terms.iter() {
            out.add_term(*m, c.mul(s));
        }
        out
    }

    /// Common ℤ³-degree of all terms, `None` if inhomogeneous. Zero has degree 0.
    pub fn homogeneous_degree(&self) -> Option<[i64; 3]> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.degree();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or([0; 3]))
    }

    /// Largest ℤ-degree among the terms.
    pub fn filtration_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.height()).max().unwrap_or(0)
    }

    /// Counit: every group element maps to 1, every root vector to 0.
    pub fn counit(&self) -> C {
        let mut acc = C::zero(self.field);
        for (m, c) in self.terms.iter() {
            if m.is_group_like() {
                acc.add_assign(c);
            }
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> AlgElement<D> {
        let mut out = AlgElement::zero(self.field);
        for (m, c) in self.terms.iter() {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Deterministic textual form, e.g. `(1 + q)*y32*y1 - y31*g[0,0,1]`.
    pub fn render(&self, d: &Datum) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let mono = render_monomial(m, d);
            let (neg, coeff) = render_coeff(c);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            match (coeff.is_empty(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => out.push_str(&coeff),
                (false, false) => {
                    out.push_str(&coeff);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

pub(crate) fn render_monomial(m: &Monomial, d: &Datum) -> String {
    let mut s = String::new();
    for (i, &k) in m.exps.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(Root::from_index(i).name());
        if k > 1 {
            let _ = write!(s, "^{}", k);
        }
    }
    if !m.group.is_identity() {
        if !s.is_empty() {
            s.push('*');
        }
        let _ = write!(s, "{}", d.group().display(m.group));
    }
    s
}

/// Splits off a leading sign for atomic coefficients; sums are parenthesized.
pub(crate) fn render_coeff<C: Coeff>(c: &C) -> (bool, String) {
    let text = alloc::format!("{}", c);
    if text.contains(' ') {
        return (false, alloc::format!("({})", text));
    }
    let (neg, rest) = match text.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, text.as_str()),
    };
    if rest == "1" {
        (neg, String::new())
    } else {
        (neg, String::from(rest))
    }
}
