//! Maximal operators on grid functions.
//!
//! Two operators are provided:
//!
//! * [`uncentered_maximal_at`] — the exact uncentered Hardy-Littlewood
//!   maximal function of a 1-D step function,
//!   Mf(x) = sup { (1/|I|) ∫_I |f| : I an interval containing x }.
//!   For a step function the average over [α, β] is, for each fixed
//!   endpoint, piecewise monotone in the other with breaks only where f
//!   breaks, so the supremum is attained with both endpoints in
//!   {cell edges} ∪ {x}. Scanning all such pairs with prefix sums gives the
//!   exact value, including at points far outside the support.
//! * [`dyadic_maximal`] — means over ancestor dyadic blocks on a 2^k-sided
//!   grid in dimension 1 to 3. Each cell's value is the max of |f|-means
//!   over the log2(side)+1 dyadic blocks containing it.
//!
//! [`maximal_1d`] samples either operator variant at a function's own cell
//! midpoints; [`herz_ratio`] compares the rearranged maximal function
//! (Mf)*(t) against the double-star average f**(t), a ratio that is bounded
//! above and below by dimensional constants and equals 1 at t = |E| for
//! indicators.
//!
//! [`weight_tail_and_head`] and [`weight_balance_sup`] evaluate the two
//! integral criteria that decide whether a non-decreasing weight φ behaves
//! like a power of strictly positive exponent:
//!
//! ```text
//!   tail(r)  = ∫_r^∞ (φ(t)/t)^q dt/t      head(r) = r^{-q} ∫_0^r φ(t)^q dt/t
//!   balance(t) = (φ(t)/t) ∫_0^t ds/φ(s)
//! ```
//!
//! For φ(t) = t^{1/p} the tail/head ratio is exactly 1/(p-1) and the
//! balance is the constant p′ = p/(p-1); for φ(t) = t both diverge.

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::grid::{GridFieldND, GridFunction1D, VectorField};
use crate::quad::{self, Improper};
use crate::tol;
use crate::weight::WeightFunction;

/// Exact uncentered maximal value of `f` at the point `x`.
///
/// Candidate interval endpoints are the grid edges on the matching side of
/// `x` together with `x` itself; the average over each candidate interval is
/// computed from exact prefix sums.
pub fn uncentered_maximal_at(f: &GridFunction1D, x: f64) -> f64 {
    let n = f.len();
    let w = f.cell_width();
    // prefix[i] = integral of |f| over the first i cells
    let mut prefix = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    prefix.push(0.0);
    for &v in f.values() {
        acc += v.abs() * w;
        prefix.push(acc);
    }
    let integral_to = |t: f64| -> f64 {
        // integral of |f| over (-inf, t], exact for t at cell edges
        if t <= f.origin() {
            return 0.0;
        }
        if t >= f.end() {
            return acc;
        }
        let idx = ((t - f.origin()) / w).floor() as usize;
        let idx = idx.min(n - 1);
        prefix[idx] + f.values()[idx].abs() * (t - f.edge(idx))
    };

    let mut left: Vec<f64> = (0..=n).map(|i| f.edge(i)).filter(|&e| e < x).collect();
    left.push(x);
    let mut right: Vec<f64> = (0..=n).map(|i| f.edge(i)).filter(|&e| e > x).collect();
    right.push(x);

    let mut best = 0.0f64;
    for &a in &left {
        let fa = integral_to(a);
        for &b in &right {
            if b <= a {
                continue;
            }
            best = best.max((integral_to(b) - fa) / (b - a));
        }
    }
    best
}

/// Exact maximal values at the midpoints of a fresh grid covering
/// [origin - pad, end + pad] with `cells` cells. The result samples Mf; it
/// is not a claim that Mf is constant on the cells.
pub fn maximal_window(f: &GridFunction1D, pad: f64, cells: usize) -> Result<GridFunction1D> {
    if !(pad >= 0.0) || !pad.is_finite() {
        return Err(Error::invalid("window pad", format!("got {pad}")));
    }
    if cells == 0 {
        return Err(Error::invalid("window cells", "need at least one cell"));
    }
    let lo = f.origin() - pad;
    let width = (f.end() + pad - lo) / cells as f64;
    let values = (0..cells)
        .map(|i| uncentered_maximal_at(f, lo + (i as f64 + 0.5) * width))
        .collect();
    GridFunction1D::new(lo, width, values)
}

/// Dyadic maximal function: per cell, the max of |f|-means over ancestor
/// dyadic blocks. Requires the side length to be a power of two.
pub fn dyadic_maximal(field: &GridFieldND) -> Result<GridFieldND> {
    let side = field.side();
    if !side.is_power_of_two() {
        return Err(Error::precondition(format!(
            "dyadic maximal needs a power-of-two side, got {side}"
        )));
    }
    let dim = field.dim();
    let levels = side.trailing_zeros() as usize; // blocks of side 2^l, l = 0..=levels

    // level_sums[l][block-index] = sum of |f| over the block (2^l per axis)
    let mut level_sums: Vec<Vec<f64>> = Vec::with_capacity(levels + 1);
    level_sums.push(field.values().iter().map(|v| v.abs()).collect());
    for l in 1..=levels {
        let prev_side = side >> (l - 1);
        let cur_side = side >> l;
        let prev = &level_sums[l - 1];
        let mut cur = vec![0.0f64; cur_side.pow(dim as u32)];
        for (i, s) in prev.iter().enumerate() {
            // coords of fine block i at level l-1, then its parent at level l
            let mut idx = i;
            let mut parent = 0usize;
            let mut stride = 1usize;
            for _ in 0..dim {
                let c = idx % prev_side;
                idx /= prev_side;
                parent += (c / 2) * stride;
                stride *= cur_side;
            }
            cur[parent] += s;
        }
        level_sums.push(cur);
    }

    let mut out = vec![0.0f64; field.len()];
    for (i, o) in out.iter_mut().enumerate() {
        let coords = field.coords(i);
        let mut best = 0.0f64;
        for (l, sums) in level_sums.iter().enumerate() {
            let cur_side = side >> l;
            let mut bidx = 0usize;
            let mut stride = 1usize;
            for &c in &coords {
                bidx += (c >> l) * stride;
                stride *= cur_side;
            }
            let count = 1usize << (l * dim);
            best = f64::max(best, sums[bidx] / count as f64);
        }
        *o = best;
    }
    field.with_values(out)
}

/// Componentwise dyadic maximal of a vector field.
pub fn vector_dyadic_maximal(vf: &VectorField) -> Result<VectorField> {
    vf.map(|c| dyadic_maximal(c))
}

/// How [`maximal_1d`] computes each sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximalMode {
    /// Prefix-sum endpoint scan (fast path).
    Exact,
    /// Direct summation over every candidate interval, accumulating cell
    /// overlaps one at a time. Same candidate set, no shared state; serves
    /// as an independent cross-check of the fast path.
    Oracle,
}

/// Direct-summation maximal value at `x`: every pair of candidate endpoints
/// (cell edges and `x` itself), each average built by walking the cells.
pub fn direct_maximal_at(f: &GridFunction1D, x: f64) -> f64 {
    let n = f.len();
    let mut cands: Vec<f64> = (0..=n).map(|i| f.edge(i)).collect();
    cands.push(x);
    let mut best = 0.0f64;
    for &a in &cands {
        for &b in &cands {
            if !(a <= x && x <= b && b > a) {
                continue;
            }
            let mut int = 0.0;
            for i in 0..n {
                let lo = f.edge(i).max(a);
                let hi = f.edge(i + 1).min(b);
                if hi > lo {
                    int += f.values()[i].abs() * (hi - lo);
                }
            }
            best = best.max(int / (b - a));
        }
    }
    best
}

/// Maximal function sampled at the midpoints of `f`'s own cells.
/// A function that vanishes identically maps to the zero samples.
pub fn maximal_1d(f: &GridFunction1D, mode: MaximalMode) -> Result<GridFunction1D> {
    let at = |x: f64| match mode {
        MaximalMode::Exact => uncentered_maximal_at(f, x),
        MaximalMode::Oracle => direct_maximal_at(f, x),
    };
    let w = f.cell_width();
    let values = (0..f.len())
        .map(|i| at(f.origin() + (i as f64 + 0.5) * w))
        .collect();
    GridFunction1D::new(f.origin(), w, values)
}

/// Pointwise lq-aggregate of the memberwise exact maximal values at `x`:
/// (sum_j (Mf_j)(x)^q)^{1/q}, or the max over members when q is infinite.
pub fn vector_maximal_at(members: &[GridFunction1D], q: ExtReal, x: f64) -> Result<f64> {
    if members.is_empty() {
        return Err(Error::invalid("vector maximal", "needs at least one member"));
    }
    if !(q > ExtReal::ZERO) {
        return Err(Error::invalid(
            "aggregate exponent",
            format!("need q > 0, got {q}"),
        ));
    }
    let vals = members.iter().map(|f| uncentered_maximal_at(f, x));
    if q.is_infinite() {
        Ok(vals.fold(0.0f64, f64::max))
    } else {
        let q = q.get();
        Ok(vals.map(|v| v.powf(q)).sum::<f64>().powf(1.0 / q))
    }
}

/// The tail and head integrals of the q-criterion at radius `r`:
/// tail = ∫_r^∞ (φ(t)/t)^q dt/t and head = r^{-q} ∫_0^r φ(t)^q dt/t.
/// A divergent integral is reported as an infinite value.
pub fn weight_tail_and_head(
    w: &WeightFunction,
    q: f64,
    r: f64,
) -> Result<(ExtReal, ExtReal)> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::invalid("criterion exponent", format!("got {q}")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::invalid("criterion radius", format!("got {r}")));
    }
    let tail_g = |t: f64| (w.eval(t) / t).powf(q) / t;
    let tail = match quad::to_infinity(&tail_g, r, tol::QUAD_REL) {
        Improper::Converged(v) => ExtReal::saturating(v.value),
        Improper::Divergent => ExtReal::INFINITY,
    };
    let head_g = |t: f64| w.eval(t).powf(q) / t;
    let head = match quad::to_zero(&head_g, r, tol::QUAD_REL) {
        Improper::Converged(v) => ExtReal::saturating(v.value / r.powf(q)),
        Improper::Divergent => ExtReal::INFINITY,
    };
    Ok((tail, head))
}

/// One radius of the q-criterion scan.
#[derive(Debug, Clone)]
pub struct CriterionSample {
    pub r: f64,
    pub tail: ExtReal,
    pub head: ExtReal,
    /// tail/head: infinite when the tail diverges, zero when only the head
    /// does, the plain quotient otherwise.
    pub ratio: ExtReal,
}

/// Tail/head scan of the q-criterion over a radius grid.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub sup_ratio: ExtReal,
    pub samples: Vec<CriterionSample>,
}

/// Evaluate the tail/head criterion at every radius and report the
/// supremum of the ratios. The weight behaves like a strictly positive
/// power exactly when sup_ratio is finite.
pub fn weight_criterion_q(w: &WeightFunction, q: f64, radii: &[f64]) -> Result<CriterionReport> {
    if radii.is_empty() {
        return Err(Error::invalid("criterion radii", "need at least one radius"));
    }
    let mut samples = Vec::with_capacity(radii.len());
    let mut sup = ExtReal::ZERO;
    for &r in radii {
        let (tail, head) = weight_tail_and_head(w, q, r)?;
        let ratio = if tail.is_infinite() {
            ExtReal::INFINITY
        } else if head.is_infinite() {
            ExtReal::ZERO
        } else {
            ExtReal::saturating(tail.get() / head.get())
        };
        if ratio > sup {
            sup = ratio;
        }
        samples.push(CriterionSample { r, tail, head, ratio });
    }
    Ok(CriterionReport { sup_ratio: sup, samples })
}

/// Cells used by [`herz_ratio`]'s maximal-function window.
const HERZ_WINDOW_CELLS: usize = 4096;

/// Ratios (Mf)*(t) / f**(t) over a grid of rearrangement times.
///
/// Mf is sampled on a window wide enough that its rearrangement is faithful
/// up to the largest requested t: pad = 2(t_max + span) + span on each side,
/// where span is the width of f's grid. The ratio is scale invariant in f
/// and, for an indicator, equals 1 at t = |E|.
pub fn herz_ratio(f: &GridFunction1D, t_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    let step = f.to_step();
    if step.is_zero() {
        return Err(Error::precondition(
            "herz ratio needs a function with nonzero support",
        ));
    }
    let mut t_max = 0.0f64;
    for &t in t_grid {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::invalid("rearrangement time", format!("got {t}")));
        }
        t_max = t_max.max(t);
    }
    let span = f.end() - f.origin();
    let pad = 2.0 * (t_max + span) + span;
    let m_star = maximal_window(f, pad, HERZ_WINDOW_CELLS)?
        .to_step()
        .decreasing_rearrangement();
    let f_star = step.decreasing_rearrangement();
    Ok(t_grid
        .iter()
        .map(|&t| (t, m_star.value_at(t) / f_star.double_star(t)))
        .collect())
}

/// sup over the sample radii of balance(t) = (φ(t)/t) ∫_0^t ds/φ(s);
/// infinite as soon as one inner integral diverges.
pub fn weight_balance_sup(w: &WeightFunction, radii: &[f64]) -> Result<ExtReal> {
    let mut sup = ExtReal::ZERO;
    for &t in radii {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::invalid("balance radius", format!("got {t}")));
        }
        let g = |s: f64| 1.0 / w.eval(s);
        let b = match quad::to_zero(&g, t, tol::QUAD_REL) {
            Improper::Converged(v) => ExtReal::saturating(w.eval(t) / t * v.value),
            Improper::Divergent => ExtReal::INFINITY,
        };
        if b > sup {
            sup = b;
        }
    }
    Ok(sup)
}
