//! Scaling transform of a Young function:
//!
//! ```text
//! Phi_theta(r) = integral_0^{r^theta} Phi(t)/t dt
//! ```
//!
//! The integrand Phi(t)/t is non-decreasing (convexity of Phi with
//! Phi(0) = 0), which gives two structural facts the evaluator leans on:
//!
//! * the integral always converges at 0 — the mass below `lo` is at most
//!   Phi(lo), so truncating at lo = upper·1e-14 discards a certified
//!   ≤ Phi(upper)·1e-14 sliver (convexity: Phi(lo) ≤ 1e-14·Phi(upper));
//! * Phi_theta is convex exactly when θ ≥ 1/p₋(Phi), since the derivative
//!   θ·Phi(r^θ)/r must be non-decreasing. The validating constructor
//!   enforces that precondition.
//!
//! Endpoints transform as a(Phi_theta) = a^{1/θ}, b(Phi_theta) = b^{1/θ},
//! and the transform multiplies both growth indices by θ.

use super::YoungFunction;
use crate::error::Result;
use crate::extreal::ExtReal;
use crate::{quad, tol};

/// Validating constructor: checks θ·p₋(base) ≥ 1 so the result is convex.
pub fn phi_theta(base: YoungFunction, theta: f64) -> Result<YoungFunction> {
    let out = YoungFunction::PhiTheta {
        base: Box::new(base),
        theta,
    };
    out.validate()?;
    Ok(out)
}

/// Phi_theta(r); see the module docs for the truncation argument.
pub fn eval(base: &YoungFunction, theta: f64, r: f64) -> ExtReal {
    debug_assert!(r >= 0.0 && theta > 0.0);
    if r == 0.0 {
        return ExtReal::ZERO;
    }
    let upper = r.powf(theta);
    if upper == 0.0 {
        return ExtReal::ZERO;
    }
    if !upper.is_finite() {
        return ExtReal::INFINITY;
    }
    let bb = base.b();
    if bb.is_finite() && upper > bb.get() {
        // The integrand is identically +∞ on (b, upper).
        return ExtReal::INFINITY;
    }
    let a = base.a();
    if upper <= a {
        return ExtReal::ZERO;
    }
    let lo = a.max(upper * 1e-14);
    let g = |t: f64| match base.eval(t) {
        v if v.is_finite() => v.get(),
        _ => f64::INFINITY,
    };
    let q = quad::adaptive_log(&g, lo, upper, tol::QUAD_REL);
    ExtReal::saturating(q.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::{check_invariants, indices};

    #[test]
    fn power_base_has_closed_form() {
        // base t^p: Phi_theta(r) = r^{theta p} / p
        let base = YoungFunction::Power { p: 2.0 };
        for &(theta, r) in &[(0.75, 4.0), (1.0, 2.0), (2.0, 1.3)] {
            let got = eval(&base, theta, r).get();
            let want = r.powf(theta * 2.0) / 2.0;
            assert!(
                (got - want).abs() <= 1e-7 * want,
                "theta={theta}, r={r}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn deadzone_base_matches_hand_integral() {
        // integral_1^{2.25} (t-1)/t dt = 1.25 - ln 2.25
        let base = YoungFunction::Deadzone;
        let got = eval(&base, 2.0, 1.5).get();
        let want = 1.25 - 2.25f64.ln();
        assert!((got - want).abs() <= 1e-8, "got {got}, want {want}");
        // Below the transformed degeneracy threshold 1^{1/2} = 1 the value is 0.
        assert!(eval(&base, 2.0, 0.99).is_zero());
    }

    #[test]
    fn capped_base_maps_the_jump() {
        let base = YoungFunction::Capped { b: 4.0 };
        let phi = YoungFunction::PhiTheta {
            base: Box::new(base),
            theta: 2.0,
        };
        // b(Phi_theta) = 4^{1/2} = 2.
        assert!((phi.b().get() - 2.0).abs() <= 1e-12);
        assert!(phi.eval(1.9).is_finite());
        assert!(phi.eval(2.1).is_infinite());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let base = YoungFunction::PowerLog;
        let phi = YoungFunction::PhiTheta {
            base: Box::new(base),
            theta: 1.5,
        };
        for &r in &[0.5, 1.0, 3.0] {
            let h = r * 1e-6;
            let num = (phi.eval(r + h).get() - phi.eval(r - h).get()) / (2.0 * h);
            let ana = phi.derivative(r);
            assert!(
                (num - ana).abs() <= 1e-4 * ana.abs().max(1.0),
                "r={r}: numeric {num}, analytic {ana}"
            );
        }
    }

    #[test]
    fn transform_scales_both_indices() {
        let phi = phi_theta(YoungFunction::Power { p: 2.0 }, 0.75).unwrap();
        let (hi, lo) = indices(&phi);
        assert!((hi.get() - 1.5).abs() <= 1e-2, "p_plus = {hi}");
        assert!((lo.get() - 1.5).abs() <= 1e-2, "p_minus = {lo}");
    }

    #[test]
    fn constructor_enforces_convexity_precondition() {
        assert!(phi_theta(YoungFunction::Power { p: 2.0 }, 0.4).is_err());
        let ok = phi_theta(YoungFunction::Power { p: 2.0 }, 0.75).unwrap();
        check_invariants(&ok).unwrap();
    }
}
