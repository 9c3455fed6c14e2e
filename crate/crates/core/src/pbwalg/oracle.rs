//! Brute-force model of the pre-Nichols algebra as a quotient of the free
//! algebra on x1, x2, x3 by the two-sided ideal of the quantum Serre relations.
//! Shares nothing with the rewrite engine except the datum.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::element::AlgElement;
use crate::cyclo::{CycScalar, Field};
use crate::datum::{Datum, Root};
use crate::{AlgebraError, Result};

/// Word in the letters 0, 1, 2 standing for x1, x2, x3.
pub type Word = Vec<u8>;

/// Linear combination of free words.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeElement {
    field: Field,
    terms: BTreeMap<Word, CycScalar>,
}

impl FreeElement {
    pub fn zero(field: Field) -> Self {
        FreeElement { field, terms: BTreeMap::new() }
    }

    pub fn letter(field: Field, i: u8) -> Self {
        let mut e = Self::zero(field);
        e.add_term(alloc::vec![i], CycScalar::one(field));
        e
    }

    pub fn unit(field: Field) -> Self {
        let mut e = Self::zero(field);
        e.add_term(Vec::new(), CycScalar::one(field));
        e
    }

    pub fn terms(&self) -> &BTreeMap<Word, CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&CycScalar::from_int(self.field, -1)))
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        let mut out = Self::zero(self.field);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.mul(c2));
            }
        }
        out
    }

    /// Multidegree, `None` if inhomogeneous or zero.
    pub fn degree(&self) -> Option<[u32; 3]> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d = word_degree(w);
            if *deg.get_or_insert(d) != d {
                return None;
            }
        }
        deg
    }
}

fn word_degree(w: &[u8]) -> [u32; 3] {
    let mut d = [0u32; 3];
    for &l in w {
        d[l as usize] += 1;
    }
    d
}

fn as_i64(d: [u32; 3]) -> [i64; 3] {
    [d[0] as i64, d[1] as i64, d[2] as i64]
}

/// `[a, b]_c = ab − χ_b(g_a) ba` for homogeneous `a`, `b`.
pub fn free_commutator(d: &Datum, a: &FreeElement, b: &FreeElement) -> FreeElement {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(x), Some(y)) => (x, y),
        _ => return FreeElement::zero(d.field()),
    };
    let q = d.bichar(&as_i64(da), &as_i64(db));
    a.mul(b).sub(&b.mul(a).scale(&q))
}

/// Root vector expanded into x-words through its commutator definition.
pub fn root_vector_words(d: &Datum, r: Root) -> FreeElement {
    match r.definition() {
        None => FreeElement::letter(d.field(), (r.simple_index().expect("simple root") - 1) as u8),
        Some((a, b)) => free_commutator(d, &root_vector_words(d, a), &root_vector_words(d, b)),
    }
}

/// Image of a group-free PBW element in the free algebra.
pub fn pbw_to_words(d: &Datum, e: &AlgElement<CycScalar>) -> Result<FreeElement> {
    let f = d.field();
    let gens: Vec<FreeElement> = Root::ALL.iter().map(|&r| root_vector_words(d, r)).collect();
    let mut out = FreeElement::zero(f);
    for (m, c) in e.terms() {
        if !m.group.is_identity() {
            return Err(AlgebraError::Inhomogeneous);
        }
        let mut acc = FreeElement::unit(f);
        for (i, &k) in m.exps.iter().enumerate() {
            for _ in 0..k {
                acc = acc.mul(&gens[i]);
            }
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

/// Defining relations: `[x1, x3]_c` and `ad_c(x_i)^{1 − a_ij}(x_j)` for the
/// non-orthogonal pairs.
pub fn serre_relations(d: &Datum) -> Vec<FreeElement> {
    let f = d.field();
    let x = |i: u8| FreeElement::letter(f, i);
    let ad = |i: u8, j: u8, k: usize| {
        let mut acc = x(j);
        for _ in 0..k {
            acc = free_commutator(d, &x(i), &acc);
        }
        acc
    };
    alloc::vec![ad(0, 2, 1), ad(0, 1, 2), ad(1, 0, 2), ad(1, 2, 2), ad(2, 1, 3)]
}

fn words_of_degree(deg: [u32; 3]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: [u32; 3], cur: &mut Word, out: &mut Vec<Word>) {
        if left == [0; 3] {
            out.push(cur.clone());
            return;
        }
        for l in 0..3u8 {
            if left[l as usize] > 0 {
                let mut nl = left;
                nl[l as usize] -= 1;
                cur.push(l);
                rec(nl, cur, out);
                cur.pop();
            }
        }
    }
    rec(deg, &mut cur, &mut out);
    out
}

/// Echelon form of the relation span in one multidegree.
struct Space {
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    /// Rows sorted by pivot column; each pivot entry normalized to 1.
    rows: Vec<(usize, Vec<CycScalar>)>,
}

impl Space {
    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [CycScalar]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (k, r) in row.iter().enumerate().skip(*p) {
                if !r.is_zero() {
                    v[k] = v[k].sub(&c.mul(r));
                }
            }
        }
    }
}

/// Quotient of the free algebra by the Serre relations, degree by degree.
pub struct Oracle {
    datum: Datum,
    relations: Vec<FreeElement>,
    max_degree: u32,
    spaces: BTreeMap<[u32; 3], Space>,
}

pub const DEFAULT_ORACLE_DEGREE: u32 = 8;

impl Oracle {
    pub fn new(d: &Datum) -> Self {
        Self::with_degree_bound(d, DEFAULT_ORACLE_DEGREE)
    }

    pub fn with_degree_bound(d: &Datum, max_degree: u32) -> Self {
        Oracle { datum: d.clone(), relations: serre_relations(d), max_degree, spaces: BTreeMap::new() }
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    fn space(&mut self, deg: [u32; 3]) -> Result<&Space> {
        let total = deg.iter().sum::<u32>();
        if total > self.max_degree {
            return Err(AlgebraError::DegreeBudget { got: total, budget: self.max_degree });
        }
        if !self.spaces.contains_key(&deg) {
            let s = self.build(deg);
            self.spaces.insert(deg, s);
        }
        Ok(&self.spaces[&deg])
    }

    fn build(&self, deg: [u32; 3]) -> Space {
        let f = self.datum.field();
        let words = words_of_degree(deg);
        let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = words.len();
        let mut rows: Vec<(usize, Vec<CycScalar>)> = Vec::new();
        for r in &self.relations {
            let rd = match r.degree() {
                Some(x) => x,
                None => continue,
            };
            if (0..3).any(|i| rd[i] > deg[i]) {
                continue;
            }
            let rest = [deg[0] - rd[0], deg[1] - rd[1], deg[2] - rd[2]];
            let total: u32 = rest.iter().sum();
            for w in words_of_degree(rest) {
                for split in 0..=total as usize {
                    let (u, v) = w.split_at(split);
                    let mut vec = alloc::vec![CycScalar::zero(f); n];
                    for (rw, c) in r.terms() {
                        let mut full = u.to_vec();
                        full.extend_from_slice(rw);
                        full.extend_from_slice(v);
                        vec[index[&full]].add_assign(c);
                    }
                    insert_row(&mut rows, vec);
                }
            }
        }
        Space { words, index, rows }
    }

    /// Dimension of the quotient in multidegree `deg`.
    pub fn multidegree_dimension(&mut self, deg: [u32; 3]) -> Result<u64> {
        let s = self.space(deg)?;
        Ok((s.words.len() - s.rank()) as u64)
    }

    /// Dimension of the quotient in total degree `d`.
    pub fn dimension(&mut self, d: u32) -> Result<u64> {
        let mut acc = 0;
        for a in 0..=d {
            for b in 0..=d - a {
                acc += self.multidegree_dimension([a, b, d - a - b])?;
            }
        }
        Ok(acc)
    }

    /// Coordinates of `e` on the non-pivot words, one map per multidegree.
    /// All-zero (empty) exactly when `e` lies in the relation ideal.
    pub fn reduce(&mut self, e: &FreeElement) -> Result<BTreeMap<Word, CycScalar>> {
        let mut by_deg: BTreeMap<[u32; 3], Vec<(&Word, &CycScalar)>> = BTreeMap::new();
        for (w, c) in e.terms() {
            by_deg.entry(word_degree(w)).or_default().push((w, c));
        }
        let f = self.datum.field();
        let mut out = BTreeMap::new();
        for (deg, terms) in by_deg {
            let s = self.space(deg)?;
            let mut v = alloc::vec![CycScalar::zero(f); s.words.len()];
            for (w, c) in terms {
                v[s.index[w]].add_assign(c);
            }
            s.reduce(&mut v);
            for (i, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    out.insert(s.words[i].clone(), c);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&mut self, e: &FreeElement) -> Result<bool> {
        Ok(self.reduce(e)?.is_empty())
    }

    /// Rank of the images of the given PBW words (all of one multidegree).
    pub fn rank_of(&mut self, elems: &[FreeElement]) -> Result<usize> {
        let f = self.datum.field();
        let mut rows: Vec<(usize, Vec<CycScalar>)> = Vec::new();
        for e in elems {
            let red = self.reduce(e)?;
            let s = match e.degree() {
                Some(deg) => self.space(deg)?,
                None => continue,
            };
            let mut v = alloc::vec![CycScalar::zero(f); s.words.len()];
            for (w, c) in red {
                v[s.index[&w]] = c;
            }
            insert_row(&mut rows, v);
        }
        Ok(rows.len())
    }
}

/// Adds `v` to an echelon basis kept sorted by pivot column.
fn insert_row(rows: &mut Vec<(usize, Vec<CycScalar>)>, mut v: Vec<CycScalar>) {
    for (p, row) in rows.iter() {
        if v[*p].is_zero() {
            continue;
        }
        let c = v[*p].clone();
        for k in *p..v.len() {
            if !row[k].is_zero() {
                v[k] = v[k].sub(&c.mul(&row[k]));
            }
        }
    }
    let Some(p) = v.iter().position(|c| !c.is_zero()) else {
        return;
    };
    let inv = v[p].inv().expect("nonzero pivot");
    for c in v.iter_mut().skip(p) {
        if !c.is_zero() {
            *c = c.mul(&inv);
        }
    }
    let pos = rows.partition_point(|(q, _)| *q < p);
    rows.insert(pos, (p, v));
}

/// The graded identity `[y_a, y_b]_c − tail` of one commutation rule.
pub fn commutation_identity(d: &Datum, a: Root, b: Root, tail: &[(super::Exps, CycScalar)]) -> Result<FreeElement> {
    let lhs = free_commutator(d, &root_vector_words(d, a), &root_vector_words(d, b));
    let mut t = AlgElement::zero(d.field());
    for (w, c) in tail {
        t.add_term(super::Monomial::word(*w), c.clone());
    }
    Ok(lhs.sub(&pbw_to_words(d, &t)?))
}

