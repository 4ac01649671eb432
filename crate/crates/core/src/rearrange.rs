//! Distribution functions and decreasing rearrangements of simple functions.
//!
//! A [`MeasureStepFunction`] is the measure-theoretic skeleton of a
//! non-negative simple function: value/measure pairs with no geometry.
//! Everything rearrangement-invariant is computable from it exactly:
//!
//! ```text
//! m(f, t)  = measure { f > t }                  (distribution function)
//! f*(s)    = inf { t : m(f, t) <= s }           (decreasing rearrangement)
//! f**(t)   = (1/t) * integral_0^t f*(s) ds      (maximal average)
//! ```
//!
//! [`RearrangementStep`] is the result: a right-continuous, non-increasing
//! step function on [0, ∞) stored as (value, width) runs. Integrals of and
//! against such functions reduce to finite sums over merged breakpoints, so
//! the quantities above carry no quadrature error at all.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A non-negative simple function recorded as (value, measure) pairs.
///
/// Construction normalizes the representation: zero values and zero measures
/// are dropped, duplicates merged, values sorted descending. Two functions
/// with the same rearrangement therefore compare equal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureStepFunction {
    pairs: Vec<(f64, f64)>,
}

impl MeasureStepFunction {
    pub fn new(pairs: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut cleaned: Vec<(f64, f64)> = Vec::new();
        for (v, m) in pairs {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::invalid(
                    "step function",
                    format!("values must be finite and non-negative, got {v}"),
                ));
            }
            if !m.is_finite() || m < 0.0 {
                return Err(Error::invalid(
                    "step function",
                    format!("measures must be finite and non-negative, got {m}"),
                ));
            }
            if v > 0.0 && m > 0.0 {
                cleaned.push((v, m));
            }
        }
        cleaned.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for (v, m) in cleaned {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += m,
                _ => merged.push((v, m)),
            }
        }
        Ok(MeasureStepFunction { pairs: merged })
    }

    /// The indicator of a set of the given measure.
    pub fn indicator(measure: f64) -> Self {
        Self::scaled_indicator(1.0, measure)
    }

    /// c times the indicator of a set of the given measure.
    pub fn scaled_indicator(c: f64, measure: f64) -> Self {
        MeasureStepFunction::new([(c, measure)]).expect("scalar indicator data")
    }

    /// Normalized (value, measure) pairs, values strictly decreasing.
    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn max_value(&self) -> f64 {
        self.pairs.first().map_or(0.0, |p| p.0)
    }

    pub fn total_measure(&self) -> f64 {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// ∫ f dμ.
    pub fn integral(&self) -> f64 {
        self.pairs.iter().map(|p| p.0 * p.1).sum()
    }

    /// Distribution function m(f, t) = measure { f > t }.
    pub fn distribution(&self, t: f64) -> f64 {
        self.pairs.iter().filter(|p| p.0 > t).map(|p| p.1).sum()
    }

    /// measure { f >= v }; the level sets entering weak-norm suprema.
    pub fn measure_at_least(&self, v: f64) -> f64 {
        self.pairs.iter().filter(|p| p.0 >= v).map(|p| p.1).sum()
    }

    /// The function c·f.
    pub fn scale(&self, c: f64) -> Self {
        debug_assert!(c >= 0.0 && c.is_finite());
        MeasureStepFunction::new(self.pairs.iter().map(|&(v, m)| (c * v, m)))
            .expect("scaling preserves validity")
    }

    /// The decreasing rearrangement f*.
    pub fn decreasing_rearrangement(&self) -> RearrangementStep {
        // pairs are already sorted descending with distinct values.
        RearrangementStep {
            steps: self.pairs.clone(),
        }
    }
}

/// A right-continuous, non-increasing step function on [0, ∞), stored as
/// (value, width) runs starting at 0; zero beyond the total width.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RearrangementStep {
    steps: Vec<(f64, f64)>,
}

impl RearrangementStep {
    /// (value, width) runs, values strictly decreasing.
    pub fn steps(&self) -> &[(f64, f64)] {
        &self.steps
    }

    /// Right endpoint of the support.
    pub fn support_end(&self) -> f64 {
        self.steps.iter().map(|s| s.1).sum()
    }

    /// Cumulative breakpoints t_1 < t_2 < ... (ends of the runs).
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.steps
            .iter()
            .map(|s| {
                acc += s.1;
                acc
            })
            .collect()
    }

    /// f*(s); right-continuous, 0 past the support.
    pub fn value_at(&self, s: f64) -> f64 {
        debug_assert!(s >= 0.0);
        let mut acc = 0.0;
        for &(v, w) in &self.steps {
            acc += w;
            if s < acc {
                return v;
            }
        }
        0.0
    }

    /// ∫_0^t f*(s) ds, exact.
    pub fn integral_up_to(&self, t: f64) -> f64 {
        debug_assert!(t >= 0.0);
        let mut acc = 0.0;
        let mut left = t;
        for &(v, w) in &self.steps {
            if left <= 0.0 {
                break;
            }
            let seg = w.min(left);
            acc += v * seg;
            left -= seg;
        }
        acc
    }

    /// f**(t) = (1/t) ∫_0^t f*.
    pub fn double_star(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0);
        self.integral_up_to(t) / t
    }

    /// Realizes f* as a symmetric decreasing (radial) profile on the line:
    /// the i-th run occupies the shell radius ∈ [m_{i-1}/2, m_i/2), so shell
    /// widths are half the breakpoint gaps. Returns (shell end radius, value).
    pub fn radial_profile(&self) -> Vec<(f64, f64)> {
        let mut acc = 0.0;
        self.steps
            .iter()
            .map(|&(v, w)| {
                acc += w;
                (acc / 2.0, v)
            })
            .collect()
    }

    /// Rebuilds the rearrangement from a radial profile; inverse of
    /// [`Self::radial_profile`] (shell measure = 2 × radius gap).
    pub fn from_radial(profile: &[(f64, f64)]) -> Result<Self> {
        let mut prev = 0.0;
        let mut pairs = Vec::new();
        for &(radius, v) in profile {
            if radius <= prev {
                return Err(Error::invalid(
                    "radial profile",
                    "shell radii must be strictly increasing",
                ));
            }
            pairs.push((v, 2.0 * (radius - prev)));
            prev = radius;
        }
        let f = MeasureStepFunction::new(pairs)?;
        Ok(f.decreasing_rearrangement())
    }
}

/// ∫_0^∞ f*(s) g*(s) ds over merged breakpoints — the rearranged side of the
/// Hardy-Littlewood pairing bound — computed exactly.
pub fn rearranged_pairing(f: &RearrangementStep, g: &RearrangementStep) -> f64 {
    let mut total = 0.0;
    let mut fi = f.steps.iter().copied();
    let mut gi = g.steps.iter().copied();
    let mut fcur = fi.next();
    let mut gcur = gi.next();
    let (mut fleft, mut gleft) = (
        fcur.map_or(0.0, |s| s.1),
        gcur.map_or(0.0, |s| s.1),
    );
    while let (Some(fs), Some(gs)) = (fcur, gcur) {
        let seg = fleft.min(gleft);
        total += fs.0 * gs.0 * seg;
        fleft -= seg;
        gleft -= seg;
        if fleft <= 0.0 {
            fcur = fi.next();
            fleft = fcur.map_or(0.0, |s| s.1);
        }
        if gleft <= 0.0 {
            gcur = gi.next();
            gleft = gcur.map_or(0.0, |s| s.1);
        }
    }
    total
}
