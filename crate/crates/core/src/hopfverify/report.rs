use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Verification tier: `Fast` runs at N = 3, `Faithful` at N = 7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Fast,
    Faithful,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Fast => "fast",
            Tier::Faithful => "faithful",
        }
    }

    pub fn default_n(self) -> u32 {
        match self {
            Tier::Fast => 3,
            Tier::Faithful => 7,
        }
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckRecord { id: id.into(), passed, detail: detail.into() }
    }

    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(id, true, detail)
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(id, false, detail)
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {}", self.id, if self.passed { "PASS" } else { "FAIL" })?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

pub fn all_passed(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.passed)
}

pub fn failures(records: &[CheckRecord]) -> Vec<&CheckRecord> {
    records.iter().filter(|r| !r.passed).collect()
}
