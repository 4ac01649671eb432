//! Extended non-negative reals [0, +∞] with the measure-theoretic conventions
//!
//! ```text
//! 0 · ∞ = 0          x + ∞ = ∞          x ≤ ∞ for all x
//! ```
//!
//! The type is a thin wrapper over `f64` whose invariant rules out NaN and
//! negative values, so the order is total. +∞ is an ordinary citizen: Young
//! functions take the value +∞ beyond their essential bound and norms of
//! functions outside a space are +∞, not errors.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal(0.0);
    pub const ONE: ExtReal = ExtReal(1.0);
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps a finite-or-infinite non-negative float; NaN and negatives are rejected.
    pub fn new(v: f64) -> Result<Self> {
        if v.is_nan() {
            Err(Error::domain("extended real cannot be NaN"))
        } else if v < 0.0 {
            Err(Error::domain(format!("extended real cannot be negative: {v}")))
        } else {
            Ok(ExtReal(v))
        }
    }

    /// Wrapper for values already known to be valid; NaN is mapped to +∞ and
    /// negatives are clamped, so internal numeric code never panics.
    pub(crate) fn saturating(v: f64) -> Self {
        if v.is_nan() {
            ExtReal(f64::INFINITY)
        } else {
            ExtReal(v.max(0.0))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    /// Product with `0 · ∞ = 0`.
    pub fn mul(self, rhs: ExtReal) -> ExtReal {
        if self.0 == 0.0 || rhs.0 == 0.0 {
            ExtReal::ZERO
        } else {
            ExtReal(self.0 * rhs.0)
        }
    }

    /// Sum with `x + ∞ = ∞`.
    pub fn add(self, rhs: ExtReal) -> ExtReal {
        ExtReal(self.0 + rhs.0)
    }

    /// Reciprocal with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> ExtReal {
        if self.0 == 0.0 {
            ExtReal::INFINITY
        } else if self.0.is_infinite() {
            ExtReal::ZERO
        } else {
            ExtReal(1.0 / self.0)
        }
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        // Total by invariant (no NaN).
        self.0.partial_cmp(&other.0).expect("ExtReal is NaN-free")
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl From<ExtReal> for f64 {
    fn from(v: ExtReal) -> f64 {
        v.0
    }
}

/// JSON has no ±∞ literal, so +∞ serializes as the string `"inf"` and finite
/// values as plain numbers.
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => ExtReal::new(v).map_err(DeError::custom),
            Raw::Text(t) if t == "inf" => Ok(ExtReal::INFINITY),
            Raw::Text(t) => Err(DeError::custom(format!(
                "expected a non-negative number or \"inf\", got {t:?}"
            ))),
        }
    }
}

/// Parses a CLI-style extended real: a plain number or the string `inf`.
pub fn parse_ext_real(text: &str) -> Result<ExtReal> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
        return Ok(ExtReal::INFINITY);
    }
    let v: f64 = t
        .parse()
        .map_err(|_| Error::domain(format!("cannot parse {t:?} as a non-negative real or 'inf'")))?;
    ExtReal::new(v)
}
