//! The nine positive roots of B3, listed in the PBW factor order
//! `y3 < yt32 < y32 < y2 < yt21 < yt31 < y31 < y21 < y1`.

use crate::error::{AlgebraError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Root {
    Y3 = 0,
    Yt32 = 1,
    Y32 = 2,
    Y2 = 3,
    Yt21 = 4,
    Yt31 = 5,
    Y31 = 6,
    Y21 = 7,
    Y1 = 8,
}

pub const ROOT_NAMES: [&str; 9] = ["y3", "yt32", "y32", "y2", "yt21", "yt31", "y31", "y21", "y1"];
pub const ROOT_FILE_NAMES: [&str; 9] =
    ["a3", "at32", "a32", "a2", "at21", "at31", "a31", "a21", "a1"];

/// Coefficients `(c1, c2, c3)` of `α = c1 α1 + c2 α2 + c3 α3`.
pub const ROOT_DEGREES: [[u8; 3]; 9] = [
    [0, 0, 1],
    [0, 1, 2],
    [0, 1, 1],
    [0, 1, 0],
    [1, 2, 2],
    [1, 1, 2],
    [1, 1, 1],
    [1, 1, 0],
    [1, 0, 0],
];

impl Root {
    pub const ALL: [Root; 9] = [
        Root::Y3,
        Root::Yt32,
        Root::Y32,
        Root::Y2,
        Root::Yt21,
        Root::Yt31,
        Root::Y31,
        Root::Y21,
        Root::Y1,
    ];

    pub const SIMPLE: [Root; 3] = [Root::Y1, Root::Y2, Root::Y3];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Root {
        Root::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ROOT_NAMES[self.index()]
    }

    pub fn file_name(self) -> &'static str {
        ROOT_FILE_NAMES[self.index()]
    }

    pub fn degree(self) -> [u8; 3] {
        ROOT_DEGREES[self.index()]
    }

    /// ℤ-degree (number of simple factors).
    pub fn height(self) -> u32 {
        self.degree().iter().map(|&d| d as u32).sum()
    }

    pub fn is_simple(self) -> bool {
        self.height() == 1
    }

    /// For a simple root, its Cartan index `1..=3`.
    pub fn simple_index(self) -> Option<usize> {
        match self {
            Root::Y1 => Some(1),
            Root::Y2 => Some(2),
            Root::Y3 => Some(3),
            _ => None,
        }
    }

    /// Accepts both generator names (`y21`) and root names (`a21`).
    pub fn from_name(s: &str) -> Result<Root> {
        ROOT_NAMES
            .iter()
            .position(|&n| n == s)
            .or_else(|| ROOT_FILE_NAMES.iter().position(|&n| n == s))
            .map(Root::from_index)
            .ok_or_else(|| AlgebraError::UnknownRoot(s.into()))
    }

    /// `(a, b)` with `y_α = [y_a, y_b]_c`; `None` for simple roots.
    pub fn definition(self) -> Option<(Root, Root)> {
        match self {
            Root::Y21 => Some((Root::Y2, Root::Y1)),
            Root::Y32 => Some((Root::Y3, Root::Y2)),
            Root::Y31 => Some((Root::Y3, Root::Y21)),
            Root::Yt32 => Some((Root::Y3, Root::Y32)),
            Root::Yt31 => Some((Root::Y3, Root::Y31)),
            Root::Yt21 => Some((Root::Y2, Root::Yt31)),
            _ => None,
        }
    }

    /// Lifting level: a root's power rule only involves roots of lower level.
    pub fn level(self) -> u8 {
        match self {
            Root::Y1 | Root::Y2 | Root::Y3 => 0,
            Root::Y21 | Root::Y32 => 1,
            Root::Y31 | Root::Yt32 => 2,
            Root::Yt31 => 3,
            Root::Yt21 => 4,
        }
    }
}

impl core::fmt::Display for Root {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_degrees() {
        assert_eq!(Root::from_name("at21").unwrap(), Root::Yt21);
        assert_eq!(Root::from_name("y32").unwrap(), Root::Y32);
        assert!(Root::from_name("y4").is_err());
        assert_eq!(Root::Yt21.height(), 5);
        assert_eq!(Root::Yt31.degree(), [1, 1, 2]);
        let total: u32 = Root::ALL.iter().map(|r| r.height()).sum();
        assert_eq!(total, 1 + 3 + 2 + 1 + 5 + 4 + 3 + 2 + 1);
    }
}
