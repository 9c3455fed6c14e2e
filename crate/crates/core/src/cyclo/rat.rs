//! Exact rationals with an inline `i64` fast path.
//!
//! Almost every coefficient that shows up in the straightening engine is a
//! small integer, so values are kept as a reduced `i64` fraction and only
//! promoted to a heap-allocated [`BigRational`] when an intermediate result
//! no longer fits. The representation is canonical: a value that fits in the
//! small form is never stored as `Big`, so derived equality is exact.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    /// `num / den` with `den > 0`, `gcd(num, den) = 1` and `num != i64::MIN`.
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

const SMALL_MAX: i128 = i64::MAX as i128;

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat::Small { num: 0, den: 1 };
    pub const ONE: Rat = Rat::Small { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Rat {
        if n == i64::MIN {
            return Rat::Big(Box::new(BigRational::from_integer(BigInt::from(n))));
        }
        Rat::Small { num: n, den: 1 }
    }

    /// Builds `num / den`; panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n.abs() <= SMALL_MAX && d <= SMALL_MAX {
            Rat::Small { num: n as i64, den: d as i64 }
        } else {
            Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(r: BigRational) -> Rat {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rat::Small { num: n, den: d };
            }
        }
        Rat::Big(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small { den, .. } => *den == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small { num, .. } => *num < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                if *b == 1 && *d == 1 {
                    return Rat::from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Rat::from_i128(s, z),
                        None => Rat::from_big(self.to_big() + other.to_big()),
                    },
                    _ => Rat::from_big(self.to_big() + other.to_big()),
                }
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                if *a == 0 || *c == 0 {
                    return Rat::ZERO;
                }
                // both factors fit in 64 bits, so the products fit in 128
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small { num, den } => Rat::Small { num: -*num, den: *den },
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Rat> {
        match self {
            Rat::Small { num: 0, .. } => None,
            Rat::Small { num, den } => Some(Rat::from_i128(*den as i128, *num as i128)),
            Rat::Big(b) => Some(Rat::from_big(b.recip())),
        }
    }

    pub fn to_string_plain(&self) -> String {
        alloc::format!("{}", self)
    }

    /// Parses `a`, `-a` or `a/b`.
    pub fn parse(s: &str) -> Option<Rat> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::from_big(BigRational::new(n, d)))
    }

    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small { num, den: 1 } => write!(f, "{}", num),
            Rat::Small { num, den } => write!(f, "{}/{}", num, den),
            Rat::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat::new(1, 2));
        assert_eq!(a.add(&Rat::new(1, 2)), Rat::ONE);
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert_eq!(Rat::new(2, 3).mul(&Rat::new(3, 2)), Rat::ONE);
        assert!(Rat::ZERO.inv().is_none());
    }

    #[test]
    fn promotes_and_demotes() {
        let big = Rat::from_int(i64::MAX).add(&Rat::ONE);
        assert!(matches!(big, Rat::Big(_)));
        let back = big.sub(&Rat::ONE);
        assert_eq!(back, Rat::from_int(i64::MAX));
        assert!(matches!(back, Rat::Small { .. }));
        let sq = Rat::from_int(1 << 40).mul(&Rat::from_int(1 << 40));
        let r = sq.mul(&Rat::new(1, 1 << 40));
        assert_eq!(r, Rat::from_int(1 << 40));
    }

    #[test]
    fn min_value_is_never_small() {
        let m = Rat::from_int(i64::MIN);
        assert!(matches!(m, Rat::Big(_)));
        assert_eq!(m.neg().neg(), m);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Rat::parse("-3/6").unwrap(), Rat::new(-1, 2));
        assert_eq!(Rat::parse("7").unwrap().to_string_plain(), "7");
        assert!(Rat::parse("1/0").is_none());
        assert_eq!(Rat::new(-1, 2).to_string_plain(), "-1/2");
    }
}
