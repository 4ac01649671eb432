//! Central numeric tolerances and grid parameters.
//!
//! Every solver in the crate reads its tolerance from here so that the
//! verification harness can scale them uniformly (CLI `ORLICZ_KIT_TOL`).
//!
//! | constant | used by | value |
//! |---|---|---|
//! | `INVERSE_REL` | generalized-inverse bisection | 1e-12 |
//! | `NORM_BISECT_REL` | Luxemburg / weak-norm scale bisection | 1e-10 |
//! | `QUAD_REL` | adaptive quadrature target per piece | 1e-8 |
//! | `TAIL_REL` | tail-increment cutoff for improper integrals | 1e-10 |
//! | `DIVERGENCE_DEPTH` | dyadic refinement cap before the growth verdict | 60 |

/// Relative tolerance for the generalized-inverse bisection.
pub const INVERSE_REL: f64 = 1e-12;

/// Relative tolerance for norm-level bisections (Luxemburg, weak).
pub const NORM_BISECT_REL: f64 = 1e-10;

/// Relative error target for one quadrature piece.
pub const QUAD_REL: f64 = 1e-8;

/// A tail chunk below this fraction of the accumulated integral ends tail integration.
pub const TAIL_REL: f64 = 1e-10;

/// Dyadic refinement depth at which the divergence growth test is applied.
pub const DIVERGENCE_DEPTH: usize = 60;

/// Absolute refinement hard stop (f64 scale exhausted).
pub const REFINE_HARD_STOP: usize = 1000;

/// Index-estimation grid: decades covered and points per decade.
pub const INDEX_GRID_LO: f64 = 1e-8;
pub const INDEX_GRID_HI: f64 = 1e8;
pub const INDEX_POINTS_PER_DECADE: usize = 512;

/// Elasticity beyond this value is reported as an infinite growth index.
pub const ELASTICITY_CLAMP: f64 = 1e3;

/// Witness-scan grid density (points per decade) and the doubling-constant cap.
pub const WITNESS_POINTS_PER_DECADE: usize = 64;
pub const WITNESS_K_CAP: f64 = 2e6;

/// An observed ratio sup beyond this cap fails the doubling flag.
pub const DOUBLING_K_CAP: f64 = 1e6;

/// Agreement tolerance for the three weak-norm evaluators.
pub const WEAK_AGREEMENT_REL: f64 = 1e-8;

/// Default slack for "exact" inequality checks run on certified values.
pub const CHECK_SLACK: f64 = 1e-9;
