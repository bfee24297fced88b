//! Pass/fail verdicts with the first offending basis tuple.

use std::fmt;

use serde::{Serialize, Serializer};

/// Basis tuple where an identity failed. Indices are 0-based; `Display` is 1-based
/// (`e1` for the first algebra basis vector, `u1` for the first module basis vector).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Pair(usize, usize),
    Triple(usize, usize, usize),
    /// An algebra basis vector together with a module basis vector.
    Mixed(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Pair(i, j) => write!(f, "(e{}, e{})", i + 1, j + 1),
            Witness::Triple(i, j, k) => write!(f, "(e{}, e{}, e{})", i + 1, j + 1, k + 1),
            Witness::Mixed(i, u) => write!(f, "(e{}, u{})", i + 1, u + 1),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome { holds: true, witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckOutcome { holds: false, witness: Some(witness) }
    }

    /// First failing item of an ordered search, or a pass.
    pub fn from_first_failure(witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => Self::fail(w),
            None => Self::pass(),
        }
    }
}
