//! Young functions: convex Φ: [0,∞) → [0,∞] with Φ(0) = 0.
//!
//! Every variant satisfies the structural contract
//!
//! ```text
//! Φ convex, non-decreasing, Φ(0) = 0,
//! a(Φ) = sup { t : Φ(t) = 0 }      (degeneracy threshold),
//! b(Φ) = inf { t : Φ(t) = ∞ }      (finiteness threshold),
//! Φ(b) = lim_{t → b-} Φ(t)         (left continuity at the jump).
//! ```
//!
//! The catalog spans the qualitative landscape:
//!
//! | variant        | Φ(t)                | a | b  | behaviour              |
//! |----------------|---------------------|---|----|------------------------|
//! | `Power { p }`  | t^p, p ≥ 1          | 0 | ∞  | homogeneous            |
//! | `PowerLog`     | t·log(3 + t)        | 0 | ∞  | barely superlinear     |
//! | `ExpMinusOne`  | e^t − 1             | 0 | ∞  | faster than any power  |
//! | `Deadzone`     | max(t − 1, 0)       | 1 | ∞  | flat near 0            |
//! | `Capped { b }` | t for t ≤ b, else ∞ | 0 | b  | jumps to ∞             |
//! | `Conjugate`    | sup_s (ts − Φ(s))   | — | —  | Legendre transform     |
//! | `PhiTheta`     | ∫₀^{t^θ} Φ(s)/s ds  | — | —  | index-scaling transform|
//!
//! `Deadzone` and `Capped { b: 1 }` are mutually conjugate, which makes the
//! pair a useful end-to-end test of the transform machinery.

pub mod classify;
pub mod conjugate;
pub mod inverse;
pub mod phi_theta;

pub use classify::{classify, indices, ClassifyResult, Doubling, Flag};
pub use inverse::{gen_inverse, gen_inverse_f};
pub use phi_theta::phi_theta;

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use serde::{Deserialize, Serialize};

/// A Young function, represented symbolically so that evaluation, endpoint
/// queries, and derivatives stay exact where closed forms exist.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum YoungFunction {
    /// t^p with p ≥ 1.
    Power { p: f64 },
    /// t·log(3 + t); the log offset keeps the elasticity finite near 0.
    PowerLog,
    /// e^t − 1.
    ExpMinusOne,
    /// max(t − 1, 0); degenerate below 1.
    Deadzone,
    /// t for t ≤ b, +∞ beyond; left-continuous at the jump.
    Capped { b: f64 },
    /// The convex conjugate sup_s (ts − Φ(s)) of `base`.
    Conjugate { base: Box<YoungFunction> },
    /// The scaling transform r ↦ ∫₀^{r^θ} Φ(t)/t dt of `base`.
    PhiTheta { base: Box<YoungFunction>, theta: f64 },
}

impl YoungFunction {
    /// Evaluates Φ(t) for t ≥ 0. Values that overflow f64 saturate to +∞,
    /// which matches the extended-real semantics of the codomain.
    pub fn eval(&self, t: f64) -> ExtReal {
        debug_assert!(t >= 0.0, "Young functions take non-negative arguments");
        match self {
            YoungFunction::Power { p } => ExtReal::saturating(t.powf(*p)),
            YoungFunction::PowerLog => ExtReal::saturating(t * (3.0 + t).ln()),
            YoungFunction::ExpMinusOne => ExtReal::saturating(t.exp_m1()),
            YoungFunction::Deadzone => ExtReal::saturating((t - 1.0).max(0.0)),
            YoungFunction::Capped { b } => {
                if t <= *b {
                    ExtReal::saturating(t)
                } else {
                    ExtReal::INFINITY
                }
            }
            YoungFunction::Conjugate { base } => conjugate::eval(base, t),
            YoungFunction::PhiTheta { base, theta } => phi_theta::eval(base, *theta, t),
        }
    }

    /// a(Φ) = sup { t : Φ(t) = 0 }, the right edge of the degeneracy zone.
    pub fn a(&self) -> f64 {
        match self {
            YoungFunction::Power { .. } => 0.0,
            YoungFunction::PowerLog => 0.0,
            YoungFunction::ExpMinusOne => 0.0,
            YoungFunction::Deadzone => 1.0,
            YoungFunction::Capped { .. } => 0.0,
            // Φ*(r) = 0 exactly when r ≤ lim_{s→0} Φ(s)/s.
            YoungFunction::Conjugate { base } => match conjugate::slope_at_zero(base) {
                v if v.is_finite() => v.get(),
                _ => f64::INFINITY,
            },
            YoungFunction::PhiTheta { base, theta } => base.a().powf(1.0 / *theta),
        }
    }

    /// b(Φ) = inf { t : Φ(t) = ∞ }, the finiteness threshold.
    pub fn b(&self) -> ExtReal {
        match self {
            YoungFunction::Power { .. } => ExtReal::INFINITY,
            YoungFunction::PowerLog => ExtReal::INFINITY,
            YoungFunction::ExpMinusOne => ExtReal::INFINITY,
            YoungFunction::Deadzone => ExtReal::INFINITY,
            YoungFunction::Capped { b } => ExtReal::saturating(*b),
            // Φ* stays finite past any r when b(Φ) < ∞ (the sup is over a
            // compact interval); otherwise it blows up past lim Φ(s)/s.
            YoungFunction::Conjugate { base } => {
                if base.b().is_finite() {
                    ExtReal::INFINITY
                } else {
                    conjugate::slope_at_infinity(base)
                }
            }
            YoungFunction::PhiTheta { base, theta } => {
                let bb = base.b();
                if bb.is_finite() {
                    ExtReal::saturating(bb.get().powf(1.0 / *theta))
                } else {
                    ExtReal::INFINITY
                }
            }
        }
    }

    /// Right derivative Φ′(t) where Φ is finite; +∞ past b(Φ).
    ///
    /// Used by the index machinery through the elasticity t·Φ′(t)/Φ(t); for
    /// the transform variants the derivative has a closed form even though
    /// the value does not (envelope theorem for the conjugate, fundamental
    /// theorem of calculus for the scaling transform).
    pub fn derivative(&self, t: f64) -> f64 {
        debug_assert!(t >= 0.0);
        match self {
            YoungFunction::Power { p } => p * t.powf(p - 1.0),
            YoungFunction::PowerLog => (3.0 + t).ln() + t / (3.0 + t),
            YoungFunction::ExpMinusOne => t.exp(),
            YoungFunction::Deadzone => {
                if t < 1.0 {
                    0.0
                } else {
                    1.0
                }
            }
            YoungFunction::Capped { b } => {
                if t <= *b {
                    1.0
                } else {
                    f64::INFINITY
                }
            }
            YoungFunction::Conjugate { base } => conjugate::maximizer(base, t),
            YoungFunction::PhiTheta { base, theta } => {
                if t == 0.0 {
                    return 0.0;
                }
                let inner = base.eval(t.powf(*theta));
                if inner.is_finite() {
                    theta * inner.get() / t
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    /// Short human-readable label, e.g. `power(2)` or `conjugate(deadzone)`.
    pub fn label(&self) -> String {
        match self {
            YoungFunction::Power { p } => format!("power({p})"),
            YoungFunction::PowerLog => "power_log".to_string(),
            YoungFunction::ExpMinusOne => "exp_minus_one".to_string(),
            YoungFunction::Deadzone => "deadzone".to_string(),
            YoungFunction::Capped { b } => format!("capped({b})"),
            YoungFunction::Conjugate { base } => format!("conjugate({})", base.label()),
            YoungFunction::PhiTheta { base, theta } => {
                format!("phi_theta({},{theta})", base.label())
            }
        }
    }

    /// Validates parameters, including the convexity precondition
    /// θ·p₋(base) ≥ 1 for the scaling transform.
    pub fn validate(&self) -> Result<()> {
        match self {
            YoungFunction::Power { p } => {
                if !p.is_finite() || *p < 1.0 {
                    return Err(Error::invalid(
                        "power exponent",
                        format!("p must be finite and >= 1, got {p}"),
                    ));
                }
            }
            YoungFunction::PowerLog | YoungFunction::ExpMinusOne | YoungFunction::Deadzone => {}
            YoungFunction::Capped { b } => {
                if !b.is_finite() || *b <= 0.0 {
                    return Err(Error::invalid(
                        "cap height",
                        format!("b must be finite and positive, got {b}"),
                    ));
                }
            }
            YoungFunction::Conjugate { base } => base.validate()?,
            YoungFunction::PhiTheta { base, theta } => {
                base.validate()?;
                if !theta.is_finite() || *theta <= 0.0 {
                    return Err(Error::invalid(
                        "scaling exponent",
                        format!("theta must be finite and positive, got {theta}"),
                    ));
                }
                let p_minus = indices(base).1;
                let floor = p_minus.recip().get();
                if *theta < floor - 1e-9 {
                    return Err(Error::precondition(format!(
                        "phi_theta({}, {theta}) is not convex: requires theta >= {floor:.6} \
                         (reciprocal of the base's lower index)",
                        base.label()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Convenience constructor for the conjugate.
    pub fn conjugate(self) -> YoungFunction {
        YoungFunction::Conjugate { base: Box::new(self) }
    }
}

/// The default catalog: one representative per qualitative regime.
///
/// Order is stable; downstream suites index into it by position.
pub fn catalog() -> Vec<YoungFunction> {
    vec![
        YoungFunction::Power { p: 1.0 },
        YoungFunction::Power { p: 1.5 },
        YoungFunction::Power { p: 2.0 },
        YoungFunction::Power { p: 4.0 },
        YoungFunction::PowerLog,
        YoungFunction::ExpMinusOne,
        YoungFunction::Deadzone,
    ]
}

/// Spot-checks the structural contract on a log grid: Φ(0) = 0, monotone,
/// midpoint convex, degenerate exactly below a, infinite exactly above b,
/// left-continuous at a finite b.
pub fn check_invariants(phi: &YoungFunction) -> Result<()> {
    if !phi.eval(0.0).is_zero() {
        return Err(Error::invalid("young function", "Phi(0) != 0"));
    }
    let a = phi.a();
    let b = phi.b();
    let grid: Vec<f64> = (-60..=60).map(|i| 10f64.powf(i as f64 / 7.5)).collect();
    let mut prev = ExtReal::ZERO;
    for &t in &grid {
        let v = phi.eval(t);
        if v < prev {
            return Err(Error::invalid(
                "young function",
                format!("not monotone at t = {t}"),
            ));
        }
        prev = v;
        if t < a * (1.0 - 1e-12) && !v.is_zero() {
            return Err(Error::invalid(
                "young function",
                format!("positive below the degeneracy threshold at t = {t}"),
            ));
        }
        if b.is_finite() && t > b.get() * (1.0 + 1e-12) && v.is_finite() {
            return Err(Error::invalid(
                "young function",
                format!("finite above the finiteness threshold at t = {t}"),
            ));
        }
    }
    // Midpoint convexity on consecutive grid triples where all values are finite.
    for w in grid.windows(2) {
        let (s, t) = (w[0], w[1]);
        let m = 0.5 * (s + t);
        let (vs, vm, vt) = (phi.eval(s), phi.eval(m), phi.eval(t));
        if vs.is_finite() && vt.is_finite() && vm.is_finite() {
            let chord = 0.5 * (vs.get() + vt.get());
            if vm.get() > chord * (1.0 + 1e-9) + 1e-12 {
                return Err(Error::invalid(
                    "young function",
                    format!("midpoint convexity fails near t = {m}"),
                ));
            }
        }
    }
    // Left continuity at a finite jump: Φ(b) must equal the left limit.
    if b.is_finite() && b.get() > 0.0 {
        let bb = b.get();
        let at_b = phi.eval(bb);
        let near = phi.eval(bb * (1.0 - 1e-9));
        match (at_b.is_finite(), near.is_finite()) {
            (true, true) => {
                let gap = (at_b.get() - near.get()).abs();
                if gap > 1e-6 * (1.0 + at_b.get()) {
                    return Err(Error::invalid(
                        "young function",
                        "not left-continuous at the finiteness threshold",
                    ));
                }
            }
            (false, false) => {}
            _ => {
                return Err(Error::invalid(
                    "young function",
                    "not left-continuous at the finiteness threshold",
                ));
            }
        }
    }
    Ok(())
}
