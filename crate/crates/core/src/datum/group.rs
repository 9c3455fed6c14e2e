use alloc::vec::Vec;
use core::fmt;

use crate::error::{AlgebraError, Result};

/// Finite abelian group `ℤ_{m_1} × … × ℤ_{m_r}` with `m_1 | m_2 | … | m_r`.
///
/// Elements are packed into a single `u64` in mixed radix, so the group order
/// must stay below 2^63.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    strides: Vec<u64>,
    order: u64,
}

/// Packed exponent vector of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement(pub u64);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl AbelianGroup {
    pub fn new(factors: &[u32]) -> Result<AbelianGroup> {
        if factors.iter().any(|&m| m == 0) {
            return Err(AlgebraError::InvalidDatum("invariant factors must be positive".into()));
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(AlgebraError::InvalidDatum(alloc::format!(
                    "invariant factors {} and {} do not form a divisibility chain",
                    w[0],
                    w[1]
                )));
            }
        }
        let mut strides = Vec::with_capacity(factors.len());
        let mut acc: u64 = 1;
        for &m in factors {
            strides.push(acc);
            acc = acc
                .checked_mul(m as u64)
                .filter(|&o| o < (1u64 << 63))
                .ok_or_else(|| AlgebraError::InvalidDatum("group order exceeds 2^63".into()))?;
        }
        Ok(AbelianGroup { factors: factors.to_vec(), strides, order: acc })
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Least common multiple of the element orders (the last invariant factor).
    pub fn exponent(&self) -> u32 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// Packs an exponent vector, reducing each entry modulo its factor.
    pub fn encode(&self, exps: &[i64]) -> Result<GroupElement> {
        if exps.len() != self.factors.len() {
            return Err(AlgebraError::InvalidDatum(alloc::format!(
                "group element has {} entries, expected {}",
                exps.len(),
                self.factors.len()
            )));
        }
        let mut code = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            let m = self.factors[i] as i64;
            code += e.rem_euclid(m) as u64 * self.strides[i];
        }
        Ok(GroupElement(code))
    }

    pub fn decode(&self, g: GroupElement) -> Vec<u32> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| ((g.0 / s) % m as u64) as u32)
            .collect()
    }

    /// The i-th component of `g`.
    #[inline]
    pub fn component(&self, g: GroupElement, i: usize) -> u32 {
        ((g.0 / self.strides[i]) % self.factors[i] as u64) as u32
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let mut code = 0u64;
        for i in 0..self.factors.len() {
            let m = self.factors[i] as u64;
            let s = (self.component(a, i) as u64 + self.component(b, i) as u64) % m;
            code += s * self.strides[i];
        }
        GroupElement(code)
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        self.pow(a, -1)
    }

    pub fn pow(&self, a: GroupElement, k: i64) -> GroupElement {
        let mut code = 0u64;
        for i in 0..self.factors.len() {
            let m = self.factors[i] as i128;
            let s = (self.component(a, i) as i128 * k as i128).rem_euclid(m) as u64;
            code += s * self.strides[i];
        }
        GroupElement(code)
    }

    pub fn element_order(&self, a: GroupElement) -> u64 {
        let mut ord = 1u64;
        for i in 0..self.factors.len() {
            let m = self.factors[i] as i64;
            let e = self.component(a, i) as i64;
            let o = (m / crate::cyclo::gcd(e, m)) as u64;
            ord = crate::cyclo::lcm(ord as i64, o as i64) as u64;
        }
        ord
    }

    pub fn display(&self, g: GroupElement) -> GroupDisplay<'_> {
        GroupDisplay { group: self, g }
    }
}

/// Renders `g[e1,...,er]`.
pub struct GroupDisplay<'a> {
    group: &'a AbelianGroup,
    g: GroupElement,
}

impl fmt::Display for GroupDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("g[")?;
        for (i, e) in self.group.decode(self.g).iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e)?;
        }
        f.write_str("]")
    }
}

/// Character of Γ given by dual exponents: `χ(g) = exp(2πi Σ c_i e_i / m_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    exps: Vec<u32>,
}

impl Character {
    pub fn new(group: &AbelianGroup, exps: &[i64]) -> Result<Character> {
        if exps.len() != group.rank() {
            return Err(AlgebraError::InvalidDatum(alloc::format!(
                "character has {} entries, expected {}",
                exps.len(),
                group.rank()
            )));
        }
        Ok(Character {
            exps: exps
                .iter()
                .zip(group.factors())
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u32)
                .collect(),
        })
    }

    pub fn trivial(group: &AbelianGroup) -> Character {
        Character { exps: alloc::vec![0; group.rank()] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &Character, group: &AbelianGroup) -> Character {
        Character {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .zip(group.factors())
                .map(|((&a, &b), &m)| ((a as u64 + b as u64) % m as u64) as u32)
                .collect(),
        }
    }

    pub fn pow(&self, k: i64, group: &AbelianGroup) -> Character {
        Character {
            exps: self
                .exps
                .iter()
                .zip(group.factors())
                .map(|(&a, &m)| (a as i128 * k as i128).rem_euclid(m as i128) as u32)
                .collect(),
        }
    }

    /// Order of the character in the dual group.
    pub fn order(&self, group: &AbelianGroup) -> u64 {
        let mut ord = 1i64;
        for (&c, &m) in self.exps.iter().zip(group.factors()) {
            let m = m as i64;
            ord = crate::cyclo::lcm(ord, m / crate::cyclo::gcd(c as i64, m));
        }
        ord as u64
    }

    /// Value exponents `v_i` with `χ(g) = ζ_M^{Σ e_i v_i}`; `None` if χ does not
    /// take values in ℚ(ζ_M).
    pub fn value_exponents(&self, group: &AbelianGroup, m: u32) -> Option<Vec<i64>> {
        let m = m as i64;
        let mut out = Vec::with_capacity(self.exps.len());
        for (&c, &mi) in self.exps.iter().zip(group.factors()) {
            let num = c as i64 * m;
            if num % mi as i64 != 0 {
                return None;
            }
            out.push((num / mi as i64).rem_euclid(m));
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trips() {
        let g = AbelianGroup::new(&[3, 9, 9]).unwrap();
        let a = g.encode(&[2, 5, -1]).unwrap();
        assert_eq!(g.decode(a), alloc::vec![2, 5, 8]);
        let b = g.encode(&[1, 4, 1]).unwrap();
        assert!(g.mul(a, b).is_identity());
        assert_eq!(g.inv(a), b);
        assert_eq!(g.pow(a, 3), g.encode(&[0, 6, 6]).unwrap());
        assert_eq!(g.element_order(a), 9);
    }

    #[test]
    fn rejects_broken_chain() {
        assert!(AbelianGroup::new(&[2, 3]).is_err());
        assert!(AbelianGroup::new(&[0]).is_err());
    }
}
