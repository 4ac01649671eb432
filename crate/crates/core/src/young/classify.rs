//! Growth classification of Young functions: dilation indices and the
//! doubling / reverse-doubling flags, each backed by a numeric witness.
//!
//! Elasticity grid. Both indices come from the elasticity
//! e(t) = t Φ′(t)/Φ(t), sampled on a log grid [1e-8, 1e8] at 512 points per
//! decade, restricted to points where 0 < Φ(t) < ∞ and Φ′(t) is finite.
//!
//! * Upper index p₊ = sup e(t). Reported as ∞ when the degeneracy threshold
//!   is positive or the finiteness threshold is finite (both force
//!   super-power growth), when the sup exceeds the clamp 1e3, or when the
//!   per-decade maxima are still rising at the top of the grid (an
//!   exponential-type function whose elasticity only stops at f64 overflow).
//! * Lower index p₋ targets the t → ∞ limit: per-decade minima over the last
//!   six decades are fitted against 1/log t and p₋ is the intercept at
//!   1/log t = 0. Exact for powers, and extrapolates slowly-varying factors
//!   (e.g. t·log(3+t) has grid infimum ≈ 1.054 but true tail index 1).
//!   Reported as ∞ for a finite finiteness threshold or an explosive tail.
//!
//! Doubling flags. The flags are decided by direct witness search and
//! cross-checked against the indices; disagreement yields `Flag::Unknown`
//! rather than a guess.
//!
//! * Doubling (Φ(2r) ≤ k·Φ(r)): assessed globally on the grid. The witness k
//!   is the observed ratio sup, capped at 1e6.
//! * Reverse doubling (Φ(kr) ≥ 2k·Φ(r)): assessed from a scale upward. The
//!   witness records both k and `from_scale`; `from_scale` at the bottom of
//!   the grid means the bound held globally. Candidate k stop at 2e6, so
//!   exponents within ~5% of 1 can come back `Unknown` — honest output for
//!   a search that cannot distinguish them on a finite grid.

use super::YoungFunction;
use crate::extreal::ExtReal;
use crate::tol;
use serde::{Deserialize, Serialize};

/// A doubling-type witness: the inequality holds on the grid for all
/// r >= from_scale with constant k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Doubling {
    pub k: f64,
    pub from_scale: f64,
}

impl Doubling {
    /// True when the witness covers the whole assessment grid.
    pub fn is_global(&self) -> bool {
        self.from_scale <= tol::INDEX_GRID_LO * (1.0 + 1e-9)
    }
}

/// Outcome of a doubling-flag assessment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Flag {
    Holds { witness: Doubling },
    Fails,
    /// Witness search and index test disagree; neither verdict is safe.
    Unknown,
}

impl Flag {
    pub fn holds(&self) -> bool {
        matches!(self, Flag::Holds { .. })
    }

    pub fn witness(&self) -> Option<Doubling> {
        match self {
            Flag::Holds { witness } => Some(*witness),
            _ => None,
        }
    }

    /// Witness valid from the bottom of the grid (scale-free behaviour).
    pub fn global_witness(&self) -> Option<Doubling> {
        self.witness().filter(Doubling::is_global)
    }
}

/// Full classification of one Young function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyResult {
    pub label: String,
    /// Degeneracy threshold a = sup { t : Φ(t) = 0 }.
    pub a: f64,
    /// Finiteness threshold b = inf { t : Φ(t) = ∞ }.
    pub b: ExtReal,
    pub p_plus: ExtReal,
    pub p_minus: ExtReal,
    pub doubling: Flag,
    pub reverse_doubling: Flag,
}

/// One elasticity sample.
struct Sample {
    t: f64,
    e: f64,
}

/// Per-decade elasticity extrema.
struct DecadeStats {
    max_e: f64,
    min_e: f64,
    argmin_t: f64,
}

fn elasticity(phi: &YoungFunction, t: f64) -> Option<Sample> {
    let v = phi.eval(t);
    if !v.is_finite() || v.is_zero() {
        return None;
    }
    let d = phi.derivative(t);
    if !d.is_finite() {
        return None;
    }
    let e = t * d / v.get();
    if e.is_finite() {
        Some(Sample { t, e })
    } else {
        None
    }
}

fn decade_stats(phi: &YoungFunction) -> Vec<Option<DecadeStats>> {
    let lo_exp = tol::INDEX_GRID_LO.log10().round() as i32;
    let hi_exp = tol::INDEX_GRID_HI.log10().round() as i32;
    let per = tol::INDEX_POINTS_PER_DECADE;
    let mut out = Vec::new();
    for d in lo_exp..hi_exp {
        let mut stats: Option<DecadeStats> = None;
        for j in 0..per {
            let t = 10f64.powf(d as f64 + j as f64 / per as f64);
            if let Some(s) = elasticity(phi, t) {
                match &mut stats {
                    None => {
                        stats = Some(DecadeStats {
                            max_e: s.e,
                            min_e: s.e,
                            argmin_t: s.t,
                        })
                    }
                    Some(st) => {
                        if s.e > st.max_e {
                            st.max_e = s.e;
                        }
                        if s.e < st.min_e {
                            st.min_e = s.e;
                            st.argmin_t = s.t;
                        }
                    }
                }
            }
        }
        out.push(stats);
    }
    out
}

/// (p_plus, p_minus) for `phi`. Cheaper than [`classify`]: no witness scans.
pub fn indices(phi: &YoungFunction) -> (ExtReal, ExtReal) {
    let a = phi.a();
    let b = phi.b();
    let stats = decade_stats(phi);
    let valid: Vec<(usize, &DecadeStats)> = stats
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.as_ref().map(|st| (i, st)))
        .collect();

    // Upper index.
    let p_plus = if a > 0.0 || b.is_finite() || valid.is_empty() {
        ExtReal::INFINITY
    } else {
        let sup = valid.iter().map(|(_, s)| s.max_e).fold(0.0, f64::max);
        let rising_top = {
            let n = valid.len();
            n >= 3 && {
                let last = valid[n - 1].1.max_e;
                let back2 = valid[n - 3].1.max_e;
                valid[n - 1].0 == valid[n - 2].0 + 1
                    && valid[n - 2].0 == valid[n - 3].0 + 1
                    && last > 2.0 * back2
            }
        };
        if sup > tol::ELASTICITY_CLAMP || rising_top {
            ExtReal::INFINITY
        } else {
            ExtReal::saturating(sup)
        }
    };

    // Lower index: tail fit of decade minima against 1/log t.
    let p_minus = if b.is_finite() || valid.is_empty() {
        ExtReal::INFINITY
    } else {
        let n = valid.len();
        let last = valid[n - 1].1;
        let explosive = last.min_e > tol::ELASTICITY_CLAMP
            || (n >= 3 && last.min_e > 10.0 && last.min_e > 2.0 * valid[n - 3].1.min_e);
        if explosive {
            ExtReal::INFINITY
        } else {
            let tail: Vec<(f64, f64)> = valid
                .iter()
                .rev()
                .take(6)
                .map(|(_, s)| (1.0 / s.argmin_t.ln(), s.min_e))
                .collect();
            let fitted = if tail.len() >= 3 {
                let m = tail.len() as f64;
                let sx: f64 = tail.iter().map(|p| p.0).sum();
                let sy: f64 = tail.iter().map(|p| p.1).sum();
                let sxx: f64 = tail.iter().map(|p| p.0 * p.0).sum();
                let sxy: f64 = tail.iter().map(|p| p.0 * p.1).sum();
                let denom = m * sxx - sx * sx;
                if denom.abs() > 1e-30 {
                    let slope = (m * sxy - sx * sy) / denom;
                    (sy - slope * sx) / m
                } else {
                    sy / m
                }
            } else {
                tail.iter().map(|p| p.1).fold(f64::INFINITY, f64::min)
            };
            // Convexity with Φ(0) = 0 forces a tail index of at least 1.
            ExtReal::saturating(fitted.max(1.0))
        }
    };

    (p_plus, p_minus)
}

fn witness_grid(from: f64) -> impl Iterator<Item = f64> {
    let per = tol::WITNESS_POINTS_PER_DECADE as f64;
    let lo = from.log10();
    let hi = tol::INDEX_GRID_HI.log10();
    let steps = ((hi - lo) * per).ceil() as usize;
    (0..=steps).map(move |j| 10f64.powf(lo + j as f64 / per))
}

/// Global doubling witness: k = sup Φ(2r)/Φ(r) over the grid, if bounded.
fn doubling_witness(phi: &YoungFunction) -> Option<Doubling> {
    if phi.a() > 0.0 || phi.b().is_finite() {
        return None;
    }
    let mut k = 1.0f64;
    for r in witness_grid(tol::INDEX_GRID_LO) {
        let lo = phi.eval(r);
        let hi = phi.eval(2.0 * r);
        if lo.is_zero() || !hi.is_finite() {
            return None;
        }
        let ratio = hi.get() / lo.get();
        if !ratio.is_finite() {
            return None;
        }
        k = k.max(ratio);
        if k > tol::DOUBLING_K_CAP {
            return None;
        }
    }
    Some(Doubling {
        k,
        from_scale: tol::INDEX_GRID_LO,
    })
}

/// Reverse-doubling witness: the smallest (from_scale, k) pair on the
/// candidate grids with Φ(kr) ≥ 2kΦ(r) for all grid r ≥ from_scale.
fn reverse_doubling_witness(phi: &YoungFunction) -> Option<Doubling> {
    let scales = (-8..=2).map(|e| 10f64.powi(e));
    let ks: Vec<f64> = {
        let mut v = Vec::new();
        let mut k = 1.05f64;
        while k <= tol::WITNESS_K_CAP {
            v.push(k);
            k *= 1.1;
        }
        v
    };
    for from_scale in scales {
        for &k in &ks {
            let mut ok = true;
            for r in witness_grid(from_scale) {
                let lhs = phi.eval(k * r);
                let rhs = ExtReal::saturating(2.0 * k).mul(phi.eval(r));
                if lhs < rhs {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Some(Doubling { k, from_scale });
            }
        }
    }
    None
}

/// Classifies `phi`: endpoints, indices, and witnessed doubling flags.
///
/// Each flag is `Holds` only when the witness search succeeds AND the index
/// test agrees (p₊ < ∞ for doubling, p₋ > 1 for reverse doubling); pure
/// disagreement is surfaced as `Unknown`.
pub fn classify(phi: &YoungFunction) -> ClassifyResult {
    let (p_plus, p_minus) = indices(phi);

    let doubling = match (doubling_witness(phi), p_plus.is_finite()) {
        (Some(witness), true) => Flag::Holds { witness },
        (None, false) => Flag::Fails,
        _ => Flag::Unknown,
    };

    let index_says_reverse = p_minus > ExtReal::saturating(1.01);
    let reverse_doubling = match (reverse_doubling_witness(phi), index_says_reverse) {
        (Some(witness), true) => Flag::Holds { witness },
        (None, false) => Flag::Fails,
        _ => Flag::Unknown,
    };

    ClassifyResult {
        label: phi.label(),
        a: phi.a(),
        b: phi.b(),
        p_plus,
        p_minus,
        doubling,
        reverse_doubling,
    }
}
