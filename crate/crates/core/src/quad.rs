//! Adaptive quadrature with estimated error bounds and divergence detection.
//!
//! Three entry points:
//!
//! * [`adaptive`] — adaptive Simpson on a finite interval (plain `dt` measure).
//! * [`to_zero`] — ∫₀^hi g(t) dt for integrands that may be singular at 0.
//!   The interval is refined dyadically toward 0; chunks certify a geometric
//!   tail bound when their ratios stay below 1, and a chunk sequence that fails
//!   to decay by the refinement cap is declared divergent.
//! * [`to_infinity`] — ∫_lo^∞ g(t) dt by dyadic doubling: integration stops when
//!   the running increment falls below [`tol::TAIL_REL`] of the accumulated
//!   value, and is declared divergent after [`tol::DIVERGENCE_DEPTH`] doublings.
//!
//! Error accounting is honest but not interval-arithmetic rigor: per-panel
//! Simpson defects (|S₂ − S₁|/15) and tail bounds are accumulated into
//! [`Quad::err`]. Integrands evaluating to a non-finite value make the whole
//! integral +∞ (reported as [`Improper::Divergent`] by the improper drivers).

use crate::tol;

/// A computed integral with an estimated absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quad {
    pub value: f64,
    pub err: f64,
}

impl Quad {
    pub const ZERO: Quad = Quad { value: 0.0, err: 0.0 };

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }
}

/// Outcome of an improper integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Improper {
    Converged(Quad),
    Divergent,
}

impl Improper {
    pub fn value(&self) -> f64 {
        match self {
            Improper::Converged(q) => q.value,
            Improper::Divergent => f64::INFINITY,
        }
    }

    pub fn err(&self) -> f64 {
        match self {
            Improper::Converged(q) => q.err,
            Improper::Divergent => f64::INFINITY,
        }
    }
}

fn simpson(a: f64, fa: f64, fm: f64, b: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    g: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    rel: f64,
    depth: usize,
) -> Quad {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = g(lm);
    let frm = g(rm);
    let left = simpson(a, fa, flm, m, fm);
    let right = simpson(m, fm, frm, b, fb);
    let two = left + right;
    if !two.is_finite() {
        return Quad {
            value: f64::INFINITY,
            err: f64::INFINITY,
        };
    }
    let diff = two - whole;
    if depth == 0 || diff.abs() <= 15.0 * (rel * two.abs() + 1e-300) {
        return Quad {
            value: two + diff / 15.0,
            err: diff.abs() / 15.0 + 1e-300,
        };
    }
    let l = refine(g, a, fa, lm, flm, m, fm, left, rel, depth - 1);
    if !l.is_finite() {
        return l;
    }
    let r = refine(g, m, fm, rm, frm, b, fb, right, rel, depth - 1);
    Quad {
        value: l.value + r.value,
        err: l.err + r.err,
    }
}

/// Adaptive Simpson for ∫_a^b g(t) dt, a ≤ b, both finite.
///
/// `rel` is the per-panel relative acceptance target; the returned `err` is the
/// accumulated defect estimate. Non-finite integrand values yield an infinite
/// result rather than a panic.
pub fn adaptive<F: Fn(f64) -> f64>(g: &F, a: f64, b: f64, rel: f64) -> Quad {
    debug_assert!(a.is_finite() && b.is_finite() && a <= b);
    if a == b {
        return Quad::ZERO;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (g(a), g(m), g(b));
    if !(fa.is_finite() && fm.is_finite() && fb.is_finite()) {
        return Quad {
            value: f64::INFINITY,
            err: f64::INFINITY,
        };
    }
    let whole = simpson(a, fa, fm, b, fb);
    refine(g, a, fa, m, fm, b, fb, whole, rel, 28)
}

/// Adaptive quadrature for ∫_a^b g(t) dt/t, 0 < a ≤ b, evaluated under the
/// substitution t = e^x so that log-scale features are resolved uniformly.
pub fn adaptive_log<F: Fn(f64) -> f64>(g: &F, a: f64, b: f64, rel: f64) -> Quad {
    debug_assert!(a > 0.0 && a <= b && b.is_finite());
    let h = |x: f64| g(x.exp());
    adaptive(&h, a.ln(), b.ln(), rel)
}

/// Conservative geometric-tail factor: inflates an observed chunk ratio toward 1
/// so that mildly increasing ratio sequences stay covered by the bound.
fn safe_ratio(observed: f64) -> f64 {
    observed.max(1e-6).sqrt().min(0.999)
}

struct ChunkState {
    acc: f64,
    err: f64,
    prev: Option<f64>,
    ratios: Vec<f64>,
}

impl ChunkState {
    fn new() -> Self {
        ChunkState {
            acc: 0.0,
            err: 0.0,
            prev: None,
            ratios: Vec::new(),
        }
    }

    fn push(&mut self, q: Quad) {
        self.acc += q.value;
        self.err += q.err;
        if let Some(p) = self.prev {
            if p > 0.0 && q.value >= 0.0 {
                self.ratios.push(q.value / p);
                if self.ratios.len() > 5 {
                    self.ratios.remove(0);
                }
            }
        }
        self.prev = Some(q.value);
    }

    fn recent_ratio_max(&self) -> Option<f64> {
        if self.ratios.len() >= 3 {
            Some(self.ratios.iter().cloned().fold(0.0, f64::max))
        } else {
            None
        }
    }
}

/// ∫₀^hi g(t) dt with possible singularity (or essential mass) at 0.
///
/// Dyadic chunks [hi·2^{-j-1}, hi·2^{-j}] are integrated until either
/// * the certified geometric tail bound drops below `rel` of the accumulated
///   value (convergence; the bound is added to `err`), or
/// * the refinement cap is reached with chunks still failing to decay
///   geometrically (divergence).
pub fn to_zero<F: Fn(f64) -> f64>(g: &F, hi: f64, rel: f64) -> Improper {
    debug_assert!(hi > 0.0 && hi.is_finite());
    let mut st = ChunkState::new();
    let mut top = hi;
    let mut zero_run = 0usize;
    for j in 0..tol::REFINE_HARD_STOP {
        let bottom = 0.5 * top;
        let chunk = adaptive(g, bottom, top, rel * 0.25);
        if !chunk.is_finite() {
            return Improper::Divergent;
        }
        st.push(chunk);
        if chunk.value == 0.0 {
            zero_run += 1;
            if zero_run >= 12 {
                // Integrand numerically vanishes near 0 on twelve consecutive
                // octaves; accept what has accumulated.
                return Improper::Converged(Quad {
                    value: st.acc,
                    err: st.err,
                });
            }
        } else {
            zero_run = 0;
        }
        if let Some(rho) = st.recent_ratio_max() {
            if rho < 0.97 {
                let rs = safe_ratio(rho);
                let tail = chunk.value * rs / (1.0 - rs);
                if tail <= rel * st.acc.max(1e-300) {
                    return Improper::Converged(Quad {
                        value: st.acc,
                        err: st.err + tail,
                    });
                }
            } else if j >= tol::DIVERGENCE_DEPTH
                && chunk.value > tol::TAIL_REL * st.acc.max(1e-300)
            {
                // Past the refinement cap the chunks are still neither small
                // nor geometrically decaying: the mass at 0 does not close.
                return Improper::Divergent;
            }
        }
        top = bottom;
        if top < 1e-300 {
            break;
        }
    }
    // f64 scale exhausted. Accept only if the tail was decaying.
    match st.recent_ratio_max() {
        Some(rho) if rho < 0.97 => {
            let rs = safe_ratio(rho);
            let last = st.prev.unwrap_or(0.0);
            Improper::Converged(Quad {
                value: st.acc,
                err: st.err + last * rs / (1.0 - rs),
            })
        }
        _ => Improper::Divergent,
    }
}

/// ∫_lo^∞ g(t) dt by dyadic doubling from lo.
///
/// Converges when either a chunk is negligible outright or the chunks decay
/// geometrically and the certified tail bound chunk·ρ/(1-ρ) drops below
/// `rel` of the accumulated value. Declares divergence once
/// [`tol::DIVERGENCE_DEPTH`] doublings have passed with chunks neither small
/// nor decaying. Tails within a few hundredths of the critical exponent
/// (|g| ~ t^{-1-ε}, ε ≲ 0.03) are not resolvable by dyadic doubling inside
/// the f64 range and are reported as divergent.
pub fn to_infinity<F: Fn(f64) -> f64>(g: &F, lo: f64, rel: f64) -> Improper {
    debug_assert!(lo > 0.0 && lo.is_finite());
    let mut st = ChunkState::new();
    let mut cur = lo;
    for j in 0..tol::REFINE_HARD_STOP {
        let next = 2.0 * cur;
        let chunk = adaptive(g, cur, next, rel * 0.25);
        if !chunk.is_finite() {
            return Improper::Divergent;
        }
        st.push(chunk);
        if j >= 2 && chunk.value <= tol::TAIL_REL * st.acc.max(1e-300) {
            let rho = st.recent_ratio_max().unwrap_or(0.5);
            let rs = safe_ratio(rho.min(0.95));
            return Improper::Converged(Quad {
                value: st.acc,
                err: st.err + chunk.value * rs / (1.0 - rs),
            });
        }
        if let Some(rho) = st.recent_ratio_max() {
            if rho < 0.97 {
                let rs = safe_ratio(rho);
                let tail = chunk.value * rs / (1.0 - rs);
                if tail <= rel * st.acc.max(1e-300) {
                    return Improper::Converged(Quad {
                        value: st.acc,
                        err: st.err + tail,
                    });
                }
            } else if j >= tol::DIVERGENCE_DEPTH
                && chunk.value > tol::TAIL_REL * st.acc.max(1e-300)
            {
                return Improper::Divergent;
            }
        }
        cur = next;
        if cur > 1e305 {
            break;
        }
    }
    // f64 scale exhausted. Accept only if the tail was decaying.
    match st.recent_ratio_max() {
        Some(rho) if rho < 0.97 => {
            let rs = safe_ratio(rho);
            let last = st.prev.unwrap_or(0.0);
            Improper::Converged(Quad {
                value: st.acc,
                err: st.err + last * rs / (1.0 - rs),
            })
        }
        _ => Improper::Divergent,
    }
}
