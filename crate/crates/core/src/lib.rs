//! Numerical toolkit for Orlicz-type function spaces at desk scale.
//!
//! The crate works with four kinds of objects:
//!
//! * **Young functions** Φ: [0,∞] → [0,∞] — convex, vanishing at 0, left-continuous
//!   where they jump to +∞ — given as closed-form evaluators ([`YoungFunction`])
//!   together with their generalized inverses, convex conjugates, doubling /
//!   reverse-doubling classification, and the integral transform
//!   Φ_θ(r) = ∫₀^(r^θ) Φ(t)/t dt.
//! * **Measurable-function surrogates**: non-negative step functions carrying
//!   explicit measures ([`MeasureStepFunction`]) and sampled grid functions
//!   ([`GridFunction1D`], [`GridFieldND`]), with exact distribution functions and
//!   decreasing rearrangements.
//! * **Quasi-norm evaluators**: the Luxemburg norm, three equivalent weak-Orlicz
//!   functionals, Orlicz-Lorentz norms L^{Φ,q}, and generalized Lorentz norms
//!   Λ^{φ,q}, each reporting a certified enclosure ([`NormResult`]).
//! * **Maximal operators**: the exact one-dimensional uncentered Hardy-Littlewood
//!   maximal operator (with an independent brute-force oracle), a dyadic surrogate
//!   in dimensions 1-3, vector-valued ℓ^q aggregates, the weight admissibility
//!   criteria used for maximal boundedness on Lorentz-type spaces, and the
//!   Herz-style comparison of (Mf)* with the running average of f*.
//!
//! The [`verify`] module packages all of the classical identities and inequalities
//! relating these objects into seeded, deterministic check suites and measures the
//! constants in the vector-valued (Fefferman-Stein style) maximal inequality
//! empirically on generated corpora.
//!
//! Numeric conventions: values live in [0, +∞] with `0·∞ = 0` and `x + ∞ = ∞`
//! (see [`ExtReal`]); inverses are resolved by bisection to 1e-12 relative
//! tolerance; integrals carry certified error bounds and report +∞ when a
//! divergence test trips.

pub mod error;
pub mod extreal;
pub mod grid;
pub mod io;
pub mod maximal;
pub mod norms;
pub mod quad;
pub mod rearrange;
pub mod tol;
pub mod verify;
pub mod weight;
pub mod young;

pub use error::{Error, Result};
pub use extreal::ExtReal;
pub use grid::{GridFieldND, GridFunction1D, VectorField};
pub use norms::{NormResult, WeakNorms};
pub use rearrange::{MeasureStepFunction, RearrangementStep};
pub use weight::WeightFunction;
pub use young::{ClassifyResult, YoungFunction};
