//! Weight functions for generalized Lorentz quasi-norms.
//!
//! A weight here is a positive non-decreasing φ on (0, ∞). Two families:
//!
//! * `Power { alpha }` — φ(t) = t^alpha with alpha > 0; the classical
//!   Lorentz scale (alpha = 1/p).
//! * `OrliczEquivalent { phi }` — φ(t) = 1 / Phi^{-1}(1/t); the weight whose
//!   Lorentz space carries the same characteristic-function norms as the
//!   weak Orlicz space of Phi. For Phi(t) = t^p this reduces to t^{1/p}.
//!
//! Both variants are genuinely non-decreasing, so running suprema
//! sup_{s <= t} φ(s) collapse to φ(t); integral criteria exploit that.

use crate::error::{Error, Result};
use crate::young::{gen_inverse_f, YoungFunction};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightFunction {
    Power { alpha: f64 },
    OrliczEquivalent { phi: YoungFunction },
}

impl WeightFunction {
    pub fn validate(&self) -> Result<()> {
        match self {
            WeightFunction::Power { alpha } => {
                if !alpha.is_finite() || *alpha <= 0.0 {
                    return Err(Error::invalid(
                        "weight exponent",
                        format!("alpha must be finite and positive, got {alpha}"),
                    ));
                }
                Ok(())
            }
            WeightFunction::OrliczEquivalent { phi } => phi.validate(),
        }
    }

    /// φ(t) for t > 0. Finite and positive on (0, ∞) for valid parameters.
    pub fn eval(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0);
        match self {
            WeightFunction::Power { alpha } => t.powf(*alpha),
            WeightFunction::OrliczEquivalent { phi } => {
                let inv = gen_inverse_f(phi, 1.0 / t);
                if inv.is_infinite() {
                    0.0
                } else if inv.is_zero() {
                    f64::INFINITY
                } else {
                    1.0 / inv.get()
                }
            }
        }
    }

    /// sup_{s <= t} φ(s); trivial because both variants are non-decreasing.
    pub fn running_sup(&self, t: f64) -> f64 {
        self.eval(t)
    }

    pub fn label(&self) -> String {
        match self {
            WeightFunction::Power { alpha } => format!("t^{alpha}"),
            WeightFunction::OrliczEquivalent { phi } => {
                format!("1/inv_{}(1/t)", phi.label())
            }
        }
    }
}
