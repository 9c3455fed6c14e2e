use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::group::{AbelianGroup, Character, GroupElement};
use super::roots::Root;
use crate::cyclo::{field, lcm, xi, CycScalar, Field};
use crate::error::{AlgebraError, Result};

/// Cartan matrix of type B3 (α3 short).
pub const CARTAN_B3: [[i64; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -2, 2]];

/// Braiding exponents of the canonical datum: `q_ij = ζ_N^{E_ij}`.
pub const CANONICAL_EXPONENTS: [[i64; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -1, 1]];

/// Same as [`CANONICAL_EXPONENTS`] but with `q13 = q31^{-1} ≠ 1`.
pub const SKEWED_EXPONENTS: [[i64; 3]; 3] = [[2, -1, 1], [-1, 2, -1], [-1, -1, 1]];

/// A datum of Cartan type B3 over a finite abelian group.
#[derive(Clone)]
pub struct Datum {
    group: AbelianGroup,
    n: u32,
    e: [[i64; 3]; 3],
    g: [GroupElement; 3],
    chi: [Character; 3],
    conductor: u32,
    field: Field,
    /// `chi_vals[j][k]`: χ_j(g) = ζ_M^{Σ_k e_k chi_vals[j][k]}
    chi_vals: [Vec<i64>; 3],
    root_g: [GroupElement; 9],
    root_gn: [GroupElement; 9],
}

impl fmt::Debug for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Datum")
            .field("N", &self.n)
            .field("invariant_factors", &self.group.factors())
            .field("E", &self.e)
            .field("conductor", &self.conductor)
            .finish()
    }
}

impl Datum {
    /// Builds a datum from raw exponent data; structural problems are errors,
    /// arithmetic conditions are left to [`validate_datum`].
    pub fn new(
        n: u32,
        invariant_factors: &[u32],
        e: [[i64; 3]; 3],
        g: [&[i64]; 3],
        chi: [&[i64]; 3],
    ) -> Result<Datum> {
        if n == 0 {
            return Err(AlgebraError::InvalidDatum("N must be positive".into()));
        }
        let group = AbelianGroup::new(invariant_factors)?;
        let g = [group.encode(g[0])?, group.encode(g[1])?, group.encode(g[2])?];
        let chi = [
            Character::new(&group, chi[0])?,
            Character::new(&group, chi[1])?,
            Character::new(&group, chi[2])?,
        ];
        let mut m = n as i64;
        for c in &chi {
            m = lcm(m, c.order(&group) as i64);
        }
        if m > 100_000 {
            return Err(AlgebraError::InvalidDatum(alloc::format!(
                "character values need conductor {m}, which is too large"
            )));
        }
        let conductor = m as u32;
        let vals = |c: &Character| {
            c.value_exponents(&group, conductor).ok_or_else(|| {
                AlgebraError::InvalidDatum("character values outside the conductor field".into())
            })
        };
        let chi_vals = [vals(&chi[0])?, vals(&chi[1])?, vals(&chi[2])?];
        let mut d = Datum {
            n,
            e,
            g,
            chi,
            conductor,
            field: field(conductor),
            chi_vals,
            root_g: [GroupElement::IDENTITY; 9],
            root_gn: [GroupElement::IDENTITY; 9],
            group,
        };
        for r in Root::ALL {
            let ga = d.group_of_degree(&widen(r.degree()));
            d.root_g[r.index()] = ga;
            d.root_gn[r.index()] = d.group.pow(ga, n as i64);
        }
        Ok(d)
    }

    /// Γ = (ℤ_{N²})³, `g_i` the unit vectors, `χ_j(g_i) = ζ_N^{E_ij}`.
    pub fn with_exponents(n: u32, e: [[i64; 3]; 3]) -> Result<Datum> {
        let n2 = (n as i64) * (n as i64);
        let units: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut chis = [[0i64; 3]; 3];
        for j in 0..3 {
            for i in 0..3 {
                chis[j][i] = (n as i64 * e[i][j]).rem_euclid(n2);
            }
        }
        let f = n2 as u32;
        Datum::new(
            n,
            &[f, f, f],
            e,
            [&units[0], &units[1], &units[2]],
            [&chis[0], &chis[1], &chis[2]],
        )
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> &[[i64; 3]; 3] {
        &self.e
    }

    pub fn generators(&self) -> &[GroupElement; 3] {
        &self.g
    }

    pub fn characters(&self) -> &[Character; 3] {
        &self.chi
    }

    /// Conductor M of the scalar field ℚ(ζ_M).
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// ζ_M^k.
    pub fn root_of_unity(&self, k: i64) -> CycScalar {
        CycScalar::root_power(self.field, k)
    }

    /// Exponent of χ_j(h) as a power of ζ_M (`j` zero based).
    #[inline]
    pub fn char_exp(&self, j: usize, h: GroupElement) -> i64 {
        if h.is_identity() {
            return 0;
        }
        let mut s = 0i64;
        for (k, v) in self.chi_vals[j].iter().enumerate() {
            s += self.group.component(h, k) as i64 * v;
        }
        s.rem_euclid(self.conductor as i64)
    }

    /// Exponent of χ_δ(h) for χ_δ = χ1^{δ1} χ2^{δ2} χ3^{δ3}.
    #[inline]
    pub fn degree_char_exp(&self, deg: &[i64; 3], h: GroupElement) -> i64 {
        if h.is_identity() {
            return 0;
        }
        let mut s = 0i64;
        for j in 0..3 {
            if deg[j] != 0 {
                s += deg[j] * self.char_exp(j, h);
            }
        }
        s.rem_euclid(self.conductor as i64)
    }

    /// g1^{δ1} g2^{δ2} g3^{δ3}.
    pub fn group_of_degree(&self, deg: &[i64; 3]) -> GroupElement {
        let mut acc = GroupElement::IDENTITY;
        for i in 0..3 {
            acc = self.group.mul(acc, self.group.pow(self.g[i], deg[i]));
        }
        acc
    }

    /// Exponent of `q_{a,b} = χ_b(g_a)` for ℤ³-degrees `a`, `b`.
    pub fn bichar_exp(&self, a: &[i64; 3], b: &[i64; 3]) -> i64 {
        let mut s = 0i64;
        for i in 0..3 {
            if a[i] == 0 {
                continue;
            }
            for j in 0..3 {
                if b[j] != 0 {
                    s += a[i] * b[j] * self.char_exp(j, self.g[i]);
                }
            }
        }
        s.rem_euclid(self.conductor as i64)
    }

    pub fn bichar(&self, a: &[i64; 3], b: &[i64; 3]) -> CycScalar {
        self.root_of_unity(self.bichar_exp(a, b))
    }

    /// `q_ij = χ_j(g_i)` with one-based indices as in the literature.
    pub fn q(&self, i: usize, j: usize) -> CycScalar {
        self.root_of_unity(self.char_exp(j - 1, self.g[i - 1]))
    }

    pub fn q33(&self) -> CycScalar {
        self.q(3, 3)
    }

    /// `ξ_i = 1 - q33^{-i}`.
    pub fn xi(&self, i: i64) -> CycScalar {
        xi(i, &self.q33())
    }

    /// `(g_α, χ_α)`.
    pub fn root_group_data(&self, r: Root) -> (GroupElement, Character) {
        let d = r.degree();
        let mut chi = Character::trivial(&self.group);
        for j in 0..3 {
            chi = chi.mul(&self.chi[j].pow(d[j] as i64, &self.group), &self.group);
        }
        (self.root_g[r.index()], chi)
    }

    #[inline]
    pub fn root_g(&self, r: Root) -> GroupElement {
        self.root_g[r.index()]
    }

    /// g_α^N.
    #[inline]
    pub fn root_gn(&self, r: Root) -> GroupElement {
        self.root_gn[r.index()]
    }

    /// `true` where μ_α may be nonzero: `g_α^N ≠ 1` and `χ_α^N = ε`.
    pub fn mu_mask(&self) -> [bool; 9] {
        let mut mask = [false; 9];
        for r in Root::ALL {
            let (_, chi) = self.root_group_data(r);
            mask[r.index()] = !self.root_gn(r).is_identity()
                && chi.pow(self.n as i64, &self.group).is_trivial();
        }
        mask
    }

    /// Number of elements of Γ.
    pub fn group_order(&self) -> u64 {
        self.group.order()
    }
}

pub(crate) fn widen(d: [u8; 3]) -> [i64; 3] {
    [d[0] as i64, d[1] as i64, d[2] as i64]
}

/// The canonical datum for odd `N ≥ 3`.
pub fn canonical_datum(n: u32) -> Result<Datum> {
    check_canonical_n(n)?;
    Datum::with_exponents(n, CANONICAL_EXPONENTS)
}

/// Canonical group and generators with `q13 = ζ_N`, `q31 = ζ_N^{-1}`.
pub fn skewed_datum(n: u32) -> Result<Datum> {
    check_canonical_n(n)?;
    Datum::with_exponents(n, SKEWED_EXPONENTS)
}

fn check_canonical_n(n: u32) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(AlgebraError::InvalidDatum(alloc::format!(
            "N must be odd and at least 3, got {n}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// N is even or equal to 1.
    OrderNotOdd,
    /// `q_ij q_ji = q_ii^{a_ij}` fails (indices one based).
    Cartan { i: usize, j: usize },
    /// `χ_j(g_i) ≠ ζ_N^{E_ij}`.
    CharacterValue { i: usize, j: usize },
    /// `q33` is not a primitive N-th root of unity.
    Q33Order,
    /// `q11 = q22 = q33²` fails.
    DiagonalPowers,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationEntry {
    pub violation: Violation,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn violates(&self, v: &Violation) -> bool {
        self.entries.iter().any(|e| &e.violation == v)
    }
}

/// Checks every defining condition of a B3 datum and lists the failures.
pub fn validate_datum(d: &Datum) -> ValidationReport {
    let mut entries = Vec::new();
    let n = d.n as i64;
    let e = &d.e;
    if n <= 1 || n % 2 == 0 {
        entries.push(ValidationEntry {
            violation: Violation::OrderNotOdd,
            detail: alloc::format!("N = {n} must be odd and greater than 1"),
        });
    }
    let modn = |x: i64| if n > 0 { x.rem_euclid(n) } else { x };
    for i in 0..3 {
        for j in i..3 {
            if i == j {
                continue;
            }
            let a = CARTAN_B3[i][j];
            let b = CARTAN_B3[j][i];
            let lhs = modn(e[i][j] + e[j][i]);
            for (row, aij) in [(i, a), (j, b)] {
                if lhs != modn(aij * e[row][row]) {
                    entries.push(ValidationEntry {
                        violation: Violation::Cartan { i: row + 1, j: if row == i { j + 1 } else { i + 1 } },
                        detail: alloc::format!(
                            "q{}{}*q{}{} = q{}{}^{} fails: E{}{} + E{}{} = {} but {}*E{}{} = {} (mod {})",
                            i + 1, j + 1, j + 1, i + 1, row + 1, row + 1, aij,
                            i + 1, j + 1, j + 1, i + 1, e[i][j] + e[j][i],
                            aij, row + 1, row + 1, aij * e[row][row], n
                        ),
                    });
                }
            }
        }
    }
    let m = d.conductor as i64;
    if n > 0 && m % n == 0 {
        let step = m / n;
        for i in 0..3 {
            for j in 0..3 {
                let got = d.char_exp(j, d.g[i]);
                let want = (e[i][j] * step).rem_euclid(m);
                if got != want {
                    entries.push(ValidationEntry {
                        violation: Violation::CharacterValue { i: i + 1, j: j + 1 },
                        detail: alloc::format!(
                            "chi{}(g{}) = zeta_{}^{} but E{}{} = {} asks for zeta_{}^{}",
                            j + 1, i + 1, m, got, i + 1, j + 1, e[i][j], m, want
                        ),
                    });
                }
            }
        }
    }
    if n > 0 && crate::cyclo::gcd(e[2][2], n) != 1 {
        entries.push(ValidationEntry {
            violation: Violation::Q33Order,
            detail: alloc::format!("q33 = zeta_{n}^{} does not have order {n}", e[2][2]),
        });
    }
    if n > 0 && (modn(e[0][0]) != modn(2 * e[2][2]) || modn(e[1][1]) != modn(2 * e[2][2])) {
        entries.push(ValidationEntry {
            violation: Violation::DiagonalPowers,
            detail: alloc::format!(
                "q11 = q22 = q33^2 fails: E11 = {}, E22 = {}, 2*E33 = {} (mod {})",
                e[0][0], e[1][1], 2 * e[2][2], n
            ),
        });
    }
    ValidationReport { entries }
}

/// Extended index set `1 < 2 < 3 < 3̃ < 2̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtIndex {
    One,
    Two,
    Three,
    TildeThree,
    TildeTwo,
}

impl ExtIndex {
    pub const ALL: [ExtIndex; 5] =
        [ExtIndex::One, ExtIndex::Two, ExtIndex::Three, ExtIndex::TildeThree, ExtIndex::TildeTwo];
}

/// `[j]`: drops the tilde.
pub fn extended_index(j: ExtIndex) -> usize {
    match j {
        ExtIndex::One => 1,
        ExtIndex::Two | ExtIndex::TildeTwo => 2,
        ExtIndex::Three | ExtIndex::TildeThree => 3,
    }
}

/// ℤ³-degree of the interval `a ≤ j ≤ b` of extended indices.
pub fn interval_degree(a: ExtIndex, b: ExtIndex) -> Result<[i64; 3]> {
    if a > b {
        return Err(AlgebraError::IndexOrder);
    }
    let mut d = [0i64; 3];
    for j in ExtIndex::ALL {
        if a <= j && j <= b {
            d[extended_index(j) - 1] += 1;
        }
    }
    Ok(d)
}

/// `q_{ba,dc} = ∏_{a≤i≤b, c≤j≤d} q_{[i][j]}`.
pub fn q_block(b: ExtIndex, a: ExtIndex, dd: ExtIndex, c: ExtIndex, d: &Datum) -> Result<CycScalar> {
    let rows = interval_degree(a, b)?;
    let cols = interval_degree(c, dd)?;
    Ok(d.bichar(&rows, &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_valid_and_small_conductor() {
        for n in [3u32, 5, 7, 9, 11] {
            let d = canonical_datum(n).unwrap();
            assert!(validate_datum(&d).is_valid(), "N = {n}");
            assert_eq!(d.conductor(), n);
            assert_eq!(d.mu_mask(), [true; 9]);
        }
        assert!(canonical_datum(4).is_err());
        assert!(canonical_datum(1).is_err());
    }

    #[test]
    fn diagonal_values() {
        let d = canonical_datum(7).unwrap();
        assert_eq!(d.q33(), d.root_of_unity(1));
        assert_eq!(d.q(1, 1), d.root_of_unity(2));
        assert_eq!(d.q(2, 2), d.q33().mul(&d.q33()));
        let g1 = d.generators()[0];
        assert!(!d.group().pow(g1, 7).is_identity());
    }

    #[test]
    fn broken_cartan_pair_is_named() {
        let mut e = CANONICAL_EXPONENTS;
        e[0][2] = 1;
        let d = Datum::with_exponents(7, e).unwrap();
        let r = validate_datum(&d);
        assert!(r.violates(&Violation::Cartan { i: 1, j: 3 }));
        assert!(!r.violates(&Violation::CharacterValue { i: 1, j: 3 }));
    }

    #[test]
    fn even_order_rejected() {
        let d = Datum::with_exponents(4, CANONICAL_EXPONENTS).unwrap();
        assert!(validate_datum(&d).violates(&Violation::OrderNotOdd));
    }

    #[test]
    fn q_block_rectangles() {
        use ExtIndex::*;
        let d = canonical_datum(7).unwrap();
        assert_eq!(q_block(Two, Two, One, One, &d).unwrap(), d.q(2, 1));
        assert_eq!(q_block(Three, Two, Two, Two, &d).unwrap(), d.q(3, 2).mul(&d.q(2, 2)));
        // {3, 3̃} × {2}: q32 q32
        assert_eq!(q_block(TildeThree, Three, Two, Two, &d).unwrap(), d.q(3, 2).mul(&d.q(3, 2)));
        assert_eq!(q_block(One, Two, One, One, &d), Err(AlgebraError::IndexOrder));
    }

    #[test]
    fn root_data_products() {
        let d = canonical_datum(5).unwrap();
        let grp = d.group();
        let (g, chi) = d.root_group_data(Root::Yt32);
        let [g1, g2, g3] = *d.generators();
        let _ = g1;
        assert_eq!(g, grp.mul(grp.pow(g3, 2), g2));
        let c = &d.characters();
        assert_eq!(chi, c[2].pow(2, grp).mul(&c[1], grp));
    }
}
