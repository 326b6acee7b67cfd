//! Extended natural numbers for homological dimensions.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A dimension that may be infinite, or only bounded from below when a
/// cutoff-limited procedure gave up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtNat {
    Finite(u32),
    Infinite,
    /// The true value is `>= k` (possibly infinite); produced only at a cutoff.
    AtLeast(u32),
}

impl ExtNat {
    pub fn is_exact(self) -> bool {
        !matches!(self, ExtNat::AtLeast(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Finite(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinite)
    }

    /// Whether the value is `>= k`; `None` when undecided.
    pub fn at_least(self, k: u32) -> Option<bool> {
        match self {
            ExtNat::Finite(v) => Some(v >= k),
            ExtNat::Infinite => Some(true),
            ExtNat::AtLeast(v) if v >= k => Some(true),
            ExtNat::AtLeast(_) => None,
        }
    }

    /// Whether both values are certainly equal (`Some(true)`), certainly
    /// different (`Some(false)`) or undecided.
    pub fn same_as(self, other: ExtNat) -> Option<bool> {
        match (self, other) {
            (a, b) if a.is_exact() && b.is_exact() => Some(a == b),
            (ExtNat::AtLeast(k), ExtNat::Finite(v)) | (ExtNat::Finite(v), ExtNat::AtLeast(k)) => {
                if v < k {
                    Some(false)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn min(self, other: ExtNat) -> ExtNat {
        use ExtNat::*;
        match (self, other) {
            (Infinite, x) | (x, Infinite) => x,
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) => {
                if a <= b {
                    Finite(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }

    pub fn max(self, other: ExtNat) -> ExtNat {
        use ExtNat::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) => AtLeast(a.max(b)),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
        }
    }

    pub fn plus(self, k: u32) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v + k),
            ExtNat::Infinite => ExtNat::Infinite,
            ExtNat::AtLeast(v) => ExtNat::AtLeast(v + k),
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(k) => write!(f, "{k}"),
            ExtNat::Infinite => write!(f, "∞"),
            ExtNat::AtLeast(k) => write!(f, "≥{k} (cutoff)"),
        }
    }
}

/// How a reported quantity was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "method")]
pub enum Provenance {
    /// Exact combinatorial computation (Kupisch series calculus).
    Combinatorial,
    /// Linear-algebra computation that stops after `cutoff` steps.
    Bounded { cutoff: u32 },
}

/// A dimension together with the way it was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quantity {
    pub value: ExtNat,
    #[serde(flatten)]
    pub provenance: Provenance,
}

impl Quantity {
    pub fn exact(value: ExtNat) -> Self {
        Quantity {
            value,
            provenance: Provenance::Combinatorial,
        }
    }
    pub fn bounded(value: ExtNat, cutoff: u32) -> Self {
        Quantity {
            value,
            provenance: Provenance::Bounded { cutoff },
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A three-valued truth value for flags that may be cutoff-limited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn from_option(b: Option<bool>) -> Tri {
        match b {
            Some(true) => Tri::True,
            Some(false) => Tri::False,
            None => Tri::Unknown,
        }
    }
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::True, Tri::True) => Tri::True,
            _ => Tri::Unknown,
        }
    }
    pub fn is_true(self) -> bool {
        self == Tri::True
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "yes",
            Tri::False => "no",
            Tri::Unknown => "unknown",
        })
    }
}
