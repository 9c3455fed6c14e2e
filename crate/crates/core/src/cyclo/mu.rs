use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::coeff::Coeff;
use super::field::{CycScalar, Field};
use crate::datum::ROOT_FILE_NAMES;

/// Exponents of the nine μ indeterminates, indexed like the PBW factor order.
pub type MuExps = [u8; 9];

/// Polynomial in the commuting indeterminates μ_α with cyclotomic coefficients.
///
/// Terms are kept sorted by exponent vector and never carry a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MuScalar {
    field: Field,
    terms: Vec<(MuExps, CycScalar)>,
}

impl MuScalar {
    pub fn constant(c: CycScalar) -> MuScalar {
        let field = c.field();
        if c.is_zero() {
            MuScalar { field, terms: Vec::new() }
        } else {
            MuScalar { field, terms: alloc::vec![([0; 9], c)] }
        }
    }

    /// The indeterminate μ attached to the root with factor index `i`.
    pub fn var(field: Field, i: usize) -> MuScalar {
        let mut e = [0u8; 9];
        e[i] = 1;
        MuScalar { field, terms: alloc::vec![(e, CycScalar::one(field))] }
    }

    pub fn terms(&self) -> &[(MuExps, CycScalar)] {
        &self.terms
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (MuExps, CycScalar)>) -> MuScalar {
        let mut map: BTreeMap<MuExps, CycScalar> = BTreeMap::new();
        for (e, c) in terms {
            match map.get_mut(&e) {
                Some(slot) => slot.add_assign(&c),
                None => {
                    map.insert(e, c);
                }
            }
        }
        MuScalar { field, terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Returns the value if no indeterminate occurs.
    pub fn as_constant(&self) -> Option<CycScalar> {
        match self.terms.as_slice() {
            [] => Some(CycScalar::zero(self.field)),
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Substitutes values for the indeterminates that have one.
    pub fn specialize(&self, values: &[Option<CycScalar>; 9]) -> MuScalar {
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *e;
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    for _ in 0..e[i] {
                        coeff = coeff.mul(v);
                    }
                    rest[i] = 0;
                }
            }
            out.push((rest, coeff));
        }
        MuScalar::from_terms(self.field, out)
    }

    /// Indices of the indeterminates that actually occur.
    pub fn support(&self) -> [bool; 9] {
        let mut s = [false; 9];
        for (e, _) in &self.terms {
            for i in 0..9 {
                s[i] |= e[i] > 0;
            }
        }
        s
    }

    fn merge(&self, other: &MuScalar, negate: bool) -> MuScalar {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j == other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i == self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate { c.neg() } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate {
                    self.terms[i].1.sub(&other.terms[j].1)
                } else {
                    self.terms[i].1.add(&other.terms[j].1)
                };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        MuScalar { field: self.field, terms: out }
    }

    pub fn add(&self, other: &MuScalar) -> MuScalar {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MuScalar) -> MuScalar {
        self.merge(other, true)
    }

    pub fn to_display_string(&self) -> String {
        alloc::format!("{}", self)
    }
}

impl Coeff for MuScalar {
    fn from_cyc(c: CycScalar) -> Self {
        MuScalar::constant(c)
    }

    fn field(&self) -> Field {
        self.field
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign(&mut self, other: &Self) {
        if other.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = other.terms.clone();
            return;
        }
        *self = self.add(other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }

    fn neg(&self) -> Self {
        MuScalar {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.terms.is_empty() || other.terms.is_empty() {
            return MuScalar { field: self.field, terms: Vec::new() };
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = [0u8; 9];
                for k in 0..9 {
                    e[k] = ea[k] + eb[k];
                }
                prods.push((e, ca.mul(cb)));
            }
        }
        MuScalar::from_terms(self.field, prods)
    }

    fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return MuScalar { field: self.field, terms: Vec::new() };
        }
        if c.is_one() {
            return self.clone();
        }
        MuScalar {
            field: self.field,
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect(),
        }
    }

    fn mul_root(&self, k: i64) -> Self {
        MuScalar {
            field: self.field,
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul_root(k))).collect(),
        }
    }
}

fn write_mu_monomial(f: &mut fmt::Formatter<'_>, e: &MuExps) -> fmt::Result {
    let mut first = true;
    // print in the order a1, a2, ... (reverse factor order reads naturally)
    for i in (0..9).rev() {
        if e[i] == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "mu[{}]", ROOT_FILE_NAMES[i])?;
        if e[i] > 1 {
            write!(f, "^{}", e[i])?;
        }
    }
    Ok(())
}

impl fmt::Display for MuScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let constant = e.iter().all(|&x| x == 0);
            let text = c.to_q_string();
            let atomic = !text.contains(' ');
            match (constant, atomic) {
                (true, true) => f.write_str(&text)?,
                (true, false) if self.terms.len() == 1 => f.write_str(&text)?,
                (true, false) => write!(f, "({})", text)?,
                (false, _) if c.is_one() => write_mu_monomial(f, e)?,
                (false, true) if text == "-1" => {
                    f.write_str("-")?;
                    write_mu_monomial(f, e)?;
                }
                (false, true) => {
                    write!(f, "{}*", text)?;
                    write_mu_monomial(f, e)?;
                }
                (false, false) => {
                    write!(f, "({})*", text)?;
                    write_mu_monomial(f, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MuScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::field::field;

    #[test]
    fn polynomial_ring_basics() {
        let f = field(7);
        let m1 = MuScalar::var(f, 8);
        let m3 = MuScalar::var(f, 0);
        let s = m1.add(&m3);
        let sq = s.mul(&s);
        assert_eq!(sq.terms().len(), 3);
        let d = sq.sub(&m1.mul(&m1)).sub(&m3.mul(&m3));
        let two = CycScalar::from_int(f, 2);
        assert_eq!(d, m1.mul(&m3).scale(&two));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn specialization_evaluates() {
        let f = field(5);
        let m = MuScalar::var(f, 3).mul(&MuScalar::var(f, 3)).add(&MuScalar::var(f, 1));
        let mut vals: [Option<CycScalar>; 9] = Default::default();
        vals[3] = Some(CycScalar::from_int(f, 3));
        let partial = m.specialize(&vals);
        assert_eq!(partial.support(), {
            let mut s = [false; 9];
            s[1] = true;
            s
        });
        vals[1] = Some(CycScalar::root_power(f, 1));
        let full = m.specialize(&vals).as_constant().unwrap();
        assert_eq!(full, CycScalar::from_int(f, 9).add(&CycScalar::root_power(f, 1)));
    }
}
