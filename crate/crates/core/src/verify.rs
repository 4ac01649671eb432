//! Seeded verification harness.
//!
//! [`run_suite`] runs named check suites over deterministic corpora and
//! returns a [`Report`]. Each suite exercises one identity, inequality, or
//! operator contract from the rest of the crate against independent
//! evaluations: closed forms where they exist, brute-force oracles, or the
//! same quantity computed along a second route.
//!
//! Two kinds of output appear in a [`CheckRecord`]:
//!
//! * **asserted cases** — inequalities with a mathematical proof behind
//!   them, checked at a stated tolerance. A failure marks the record (and
//!   the report) as failed and is written into `notes`.
//! * **measured constants** — quantities that are bounded but whose sharp
//!   value is not pinned down (operator norms, stability ratios, observed
//!   extremes). These land in `measured` and never fail a run by value;
//!   only structural expectations about them (finiteness, monotonicity,
//!   stability windows) are asserted.
//!
//! Checks whose hypotheses hold only from some scale upward (reverse
//! doubling for the exponential member, weight criteria for weights with a
//! linear regime) are scoped to the certified witness range or to members
//! whose witness is global; out-of-scope members are recorded as measured
//! with an explanatory note instead of being asserted.
//!
//! Determinism: every suite derives its generator from `seed ^ fnv1a(id)`,
//! so reports for one (seed, suite set, tol_scale) triple are byte
//! identical across runs and across suite selections.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::grid::{GridFieldND, GridFunction1D, VectorField};
use crate::maximal::{
    direct_maximal_at, dyadic_maximal, herz_ratio, maximal_1d, maximal_window,
    uncentered_maximal_at, vector_dyadic_maximal, vector_maximal_at, weight_balance_sup,
    weight_criterion_q, MaximalMode,
};
use crate::norms::{
    char_norm_bounds, characteristic_norm, luxemburg, lorentz_norm, orlicz_lorentz_norm,
    pairing_checks, weak_modular_sup, weak_norm, weak_norms,
};
use crate::rearrange::{rearranged_pairing, MeasureStepFunction, RearrangementStep};
use crate::weight::WeightFunction;
use crate::young::{
    catalog, check_invariants, classify, gen_inverse, gen_inverse_f, indices, phi_theta, Flag,
    YoungFunction,
};

/// Canonical suite order. Selections always run in this order regardless of
/// the order they were requested in.
pub const SUITE_IDS: [&str; 18] = [
    "inverse-sandwich",
    "inverse-product",
    "classification",
    "inverse-doubling",
    "scaling-comparison",
    "conjugate-indices",
    "phi-transform",
    "rearrangement",
    "weak-norm-equality",
    "characteristic-norms",
    "norm-axioms",
    "pairing-chain",
    "weight-criterion-integral",
    "weight-criterion-sup",
    "maximal-agreement",
    "herz-band",
    "maximal-orlicz-bound",
    "vector-maximal",
];

/// All suite ids as owned strings (the default selection).
pub fn all_suites() -> Vec<String> {
    SUITE_IDS.iter().map(|s| s.to_string()).collect()
}

/// Corpus sizes per suite family.
#[derive(Debug, Clone)]
pub struct Sizes {
    /// abstract step functions (rearrangement and norm suites)
    pub steps: usize,
    /// 1-D grid functions (maximal and pairing suites)
    pub grids: usize,
    /// grid functions fed to the rearranged-maximal band check
    pub herz: usize,
    /// vector-field families per constant estimate
    pub families: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes {
            steps: 100,
            grids: 100,
            herz: 200,
            families: 50,
        }
    }
}

/// Configuration for [`run_suite`].
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Multiplies every assertion tolerance; 1.0 is the calibrated default.
    pub tol_scale: f64,
    pub sizes: Sizes,
    /// Suites to run; see [`SUITE_IDS`].
    pub suites: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            tol_scale: 1.0,
            sizes: Sizes::default(),
            suites: all_suites(),
        }
    }
}

/// A labelled value recorded by a suite (never asserted by value).
#[derive(Debug, Clone, Serialize)]
pub struct Measurement {
    pub label: String,
    pub value: ExtReal,
}

const MAX_NOTES: usize = 8;

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub cases: usize,
    pub failures: usize,
    pub measured: Vec<Measurement>,
    pub notes: Vec<String>,
}

impl CheckRecord {
    fn new(id: &str) -> Self {
        CheckRecord {
            id: id.to_string(),
            cases: 0,
            failures: 0,
            measured: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    /// Records one asserted case; on failure the lazily built detail line
    /// goes into `notes` (first [`MAX_NOTES`] only).
    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.notes.len() < MAX_NOTES {
                self.notes.push(detail());
            }
        }
    }

    fn measure(&mut self, label: impl Into<String>, value: f64) {
        self.measured.push(Measurement {
            label: label.into(),
            value: ExtReal::saturating(value),
        });
    }

    fn measure_ext(&mut self, label: impl Into<String>, value: ExtReal) {
        self.measured.push(Measurement {
            label: label.into(),
            value,
        });
    }

    fn note(&mut self, text: impl Into<String>) {
        if self.notes.len() < MAX_NOTES {
            self.notes.push(text.into());
        }
    }
}

/// The full harness result; serializes deterministically.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    pub tol_scale: f64,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the requested suites in canonical order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    if !(cfg.tol_scale > 0.0) || !cfg.tol_scale.is_finite() {
        return Err(Error::invalid(
            "tolerance scale",
            format!("must be positive and finite, got {}", cfg.tol_scale),
        ));
    }
    for want in &cfg.suites {
        if !SUITE_IDS.contains(&want.as_str()) {
            return Err(Error::UnknownSuite(want.clone()));
        }
    }
    let mut checks = Vec::new();
    for id in SUITE_IDS {
        if cfg.suites.iter().any(|w| w == id) {
            checks.push(run_one(cfg, id)?);
        }
    }
    let pass = checks.iter().all(CheckRecord::pass);
    Ok(Report {
        seed: cfg.seed,
        tol_scale: cfg.tol_scale,
        checks,
        pass,
    })
}

fn run_one(cfg: &SuiteConfig, id: &str) -> Result<CheckRecord> {
    match id {
        "inverse-sandwich" => Ok(suite_inverse_sandwich(cfg)),
        "inverse-product" => Ok(suite_inverse_product(cfg)),
        "classification" => Ok(suite_classification(cfg)),
        "inverse-doubling" => Ok(suite_inverse_doubling(cfg)),
        "scaling-comparison" => suite_scaling_comparison(cfg),
        "conjugate-indices" => Ok(suite_conjugate_indices(cfg)),
        "phi-transform" => suite_phi_transform(cfg),
        "rearrangement" => suite_rearrangement(cfg),
        "weak-norm-equality" => suite_weak_norm_equality(cfg),
        "characteristic-norms" => suite_characteristic_norms(cfg),
        "norm-axioms" => suite_norm_axioms(cfg),
        "pairing-chain" => suite_pairing_chain(cfg),
        "weight-criterion-integral" => suite_weight_criterion_integral(cfg),
        "weight-criterion-sup" => suite_weight_criterion_sup(cfg),
        "maximal-agreement" => suite_maximal_agreement(cfg),
        "herz-band" => suite_herz_band(cfg),
        "maximal-orlicz-bound" => suite_maximal_orlicz_bound(cfg),
        "vector-maximal" => suite_vector_maximal(cfg),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

// ---------------------------------------------------------------------------
// corpora
// ---------------------------------------------------------------------------

fn fnv1a(text: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn suite_rng(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name))
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo * (hi / lo).powf(rng.gen::<f64>())
}

fn log_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1).max(1) as f64))
        .collect()
}

/// Abstract step function: 1-64 pieces, values and measures log-uniform
/// over [1e-3, 1e3].
fn random_step(rng: &mut ChaCha8Rng) -> MeasureStepFunction {
    let n = rng.gen_range(1..=64);
    let pairs: Vec<(f64, f64)> = (0..n)
        .map(|_| (log_uniform(rng, 1e-3, 1e3), log_uniform(rng, 1e-3, 1e3)))
        .collect();
    MeasureStepFunction::new(pairs).expect("corpus step data is valid")
}

/// 1-D grid function: up to 64 cells, about one cell in five empty.
fn random_grid(rng: &mut ChaCha8Rng) -> GridFunction1D {
    let n = rng.gen_range(1..=64);
    let origin = rng.gen_range(-2.0..=2.0);
    let width = log_uniform(rng, 1e-2, 1.0);
    let values: Vec<f64> = (0..n)
        .map(|_| {
            if rng.gen::<f64>() < 0.2 {
                0.0
            } else {
                log_uniform(rng, 1e-2, 1e2)
            }
        })
        .collect();
    GridFunction1D::new(origin, width, values).expect("corpus grid data is valid")
}

fn random_nonzero_grid(rng: &mut ChaCha8Rng) -> GridFunction1D {
    loop {
        let g = random_grid(rng);
        if g.values().iter().any(|&v| v > 0.0) {
            return g;
        }
    }
}

/// New values on the geometry of `like`.
fn random_values_like(rng: &mut ChaCha8Rng, like: &GridFunction1D) -> GridFunction1D {
    let values: Vec<f64> = (0..like.len())
        .map(|_| {
            if rng.gen::<f64>() < 0.2 {
                0.0
            } else {
                log_uniform(rng, 1e-2, 1e2)
            }
        })
        .collect();
    GridFunction1D::new(like.origin(), like.cell_width(), values)
        .expect("shared geometry is valid")
}

/// Dimension-1 dyadic field used by the maximal suites.
fn random_field1(rng: &mut ChaCha8Rng, side: usize) -> GridFieldND {
    let vol = log_uniform(rng, 1e-2, 1.0);
    let values: Vec<f64> = (0..side)
        .map(|_| {
            if rng.gen::<f64>() < 0.3 {
                0.0
            } else {
                log_uniform(rng, 1e-2, 1e2)
            }
        })
        .collect();
    GridFieldND::new(1, side, vol, values).expect("corpus field data is valid")
}

/// The catalog plus the capped member (finite b), which several suites need
/// as the jump-discontinuity representative.
fn members_with_capped() -> Vec<YoungFunction> {
    let mut v = catalog();
    v.push(YoungFunction::Capped { b: 1.0 });
    v
}

fn scale_measures(f: &MeasureStepFunction, s: f64) -> MeasureStepFunction {
    MeasureStepFunction::new(f.pairs().iter().map(|&(v, m)| (v, m * s)))
        .expect("measure dilation preserves validity")
}

// ---------------------------------------------------------------------------
// inverse-function suites
// ---------------------------------------------------------------------------

/// Phi(Phi^-1(u)) <= u <= Phi^-1(Phi(u)) across the catalog.
fn suite_inverse_sandwich(cfg: &SuiteConfig) -> CheckRecord {
    let mut rec = CheckRecord::new("inverse-sandwich");
    let slack = 1e-6 * cfg.tol_scale;
    let grid = log_points(1e-6, 1e6, 200);
    let mut worst_back = 0.0f64;
    let mut worst_fwd = f64::INFINITY;
    for phi in members_with_capped() {
        for &u in &grid {
            let t = gen_inverse_f(&phi, u);
            let back = phi.eval(t.get());
            if back.is_finite() {
                worst_back = worst_back.max(back.get() / u);
            }
            rec.case(back <= ExtReal::saturating(u * (1.0 + slack)), || {
                format!("{}: Phi(Phi^-1({u})) = {back} exceeds {u}", phi.label())
            });
        }
        for &t in &grid {
            let fwd = gen_inverse(&phi, phi.eval(t));
            if fwd.is_finite() {
                worst_fwd = worst_fwd.min(fwd.get() / t);
            }
            rec.case(fwd >= ExtReal::saturating(t * (1.0 - slack)), || {
                format!("{}: Phi^-1(Phi({t})) = {fwd} is below {t}", phi.label())
            });
        }
    }
    rec.measure("max Phi(Phi^-1(u))/u", worst_back);
    rec.measure("min Phi^-1(Phi(t))/t", worst_fwd);
    rec
}

/// r <= Phi^-1(r) * Phit^-1(r) <= 2r for the conjugate pair.
fn suite_inverse_product(cfg: &SuiteConfig) -> CheckRecord {
    let mut rec = CheckRecord::new("inverse-product");
    let slack = 1e-6 * cfg.tol_scale;
    let mut lo_seen = f64::INFINITY;
    let mut hi_seen = 0.0f64;
    for phi in members_with_capped() {
        let conj = phi.clone().conjugate();
        for &r in &log_points(1e-6, 1e6, 200) {
            let prod = gen_inverse_f(&phi, r).mul(gen_inverse_f(&conj, r));
            if prod.is_finite() {
                lo_seen = lo_seen.min(prod.get() / r);
                hi_seen = hi_seen.max(prod.get() / r);
            }
            let ok = prod >= ExtReal::saturating(r * (1.0 - slack))
                && prod <= ExtReal::saturating(2.0 * r * (1.0 + slack));
            rec.case(ok, || {
                format!(
                    "{}: inverse product at r = {r} is {prod}, outside [r, 2r]",
                    phi.label()
                )
            });
        }
    }
    rec.measure("min product/r", lo_seen);
    rec.measure("max product/r", hi_seen);
    rec
}

/// Independent maximization of the elasticity of t log(3 + t).
fn powerlog_upper_index_oracle() -> f64 {
    let g = |t: f64| 1.0 + t / ((3.0 + t) * (3.0 + t).ln());
    let (mut lo, mut hi) = (0.1f64, 1e3f64);
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if g(m1) < g(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    g(0.5 * (lo + hi))
}

/// Endpoints, indices, and doubling flags against the expected table.
fn suite_classification(cfg: &SuiteConfig) -> CheckRecord {
    let mut rec = CheckRecord::new("classification");
    let tol = 1e-3 * cfg.tol_scale;
    // (member, a, b finite?, doubling, reverse, p_plus, p_minus); None = infinite
    let expected: Vec<(YoungFunction, f64, Option<f64>, bool, bool, Option<f64>, Option<f64>)> = vec![
        (YoungFunction::Power { p: 1.0 }, 0.0, None, true, false, Some(1.0), Some(1.0)),
        (YoungFunction::Power { p: 1.5 }, 0.0, None, true, true, Some(1.5), Some(1.5)),
        (YoungFunction::Power { p: 2.0 }, 0.0, None, true, true, Some(2.0), Some(2.0)),
        (YoungFunction::Power { p: 4.0 }, 0.0, None, true, true, Some(4.0), Some(4.0)),
        (
            YoungFunction::PowerLog,
            0.0,
            None,
            true,
            false,
            Some(powerlog_upper_index_oracle()),
            Some(1.0),
        ),
        (YoungFunction::ExpMinusOne, 0.0, None, false, true, None, None),
        (YoungFunction::Deadzone, 1.0, None, false, false, None, Some(1.0)),
        (YoungFunction::Capped { b: 1.0 }, 0.0, Some(1.0), false, true, None, None),
    ];
    for (phi, a, b, d2, r2, pp, pm) in expected {
        rec.case(check_invariants(&phi).is_ok(), || {
            format!("{}: structural invariants fail", phi.label())
        });
        let c = classify(&phi);
        rec.case(c.a == a, || format!("{}: a = {}, want {a}", c.label, c.a));
        let b_ok = match b {
            Some(bv) => c.b.is_finite() && (c.b.get() - bv).abs() <= 1e-12,
            None => c.b.is_infinite(),
        };
        rec.case(b_ok, || format!("{}: b = {}", c.label, c.b));
        rec.case(c.doubling.holds() == d2, || {
            format!("{}: doubling flag is {:?}", c.label, c.doubling)
        });
        rec.case(c.reverse_doubling.holds() == r2, || {
            format!("{}: reverse-doubling flag is {:?}", c.label, c.reverse_doubling)
        });
        let pp_ok = match pp {
            Some(v) => c.p_plus.is_finite() && (c.p_plus.get() - v).abs() <= tol * v.max(1.0),
            None => c.p_plus.is_infinite(),
        };
        rec.case(pp_ok, || format!("{}: p_plus = {}", c.label, c.p_plus));
        let pm_ok = match pm {
            Some(v) => c.p_minus.is_finite()
                && (c.p_minus.get() - v).abs() <= (5e-3 * cfg.tol_scale) * v.max(1.0),
            None => c.p_minus.is_infinite(),
        };
        rec.case(pm_ok, || format!("{}: p_minus = {}", c.label, c.p_minus));
        rec.measure_ext(format!("{} p_plus", c.label), c.p_plus);
        rec.measure_ext(format!("{} p_minus", c.label), c.p_minus);
    }
    rec
}

/// The inverse-side doubling characterizations with witness transfer.
fn suite_inverse_doubling(cfg: &SuiteConfig) -> CheckRecord {
    let mut rec = CheckRecord::new("inverse-doubling");
    let slack = 1e-9 * cfg.tol_scale;
    for phi in members_with_capped() {
        let cls = classify(&phi);
        // Doubling transfers to Phi^-1(k u) >= 2 Phi^-1(u) with the same k.
        if let Some(w) = cls.doubling.witness() {
            for &u in &log_points(1e-6, 1e6, 200) {
                let lhs = gen_inverse_f(&phi, w.k * u);
                let rhs = gen_inverse_f(&phi, u);
                let ok = lhs >= ExtReal::saturating(2.0 * rhs.get() * (1.0 - slack));
                rec.case(ok, || {
                    format!(
                        "{}: Phi^-1({} u) = {lhs} < 2 Phi^-1(u) = {} at u = {u}",
                        cls.label,
                        w.k,
                        2.0 * rhs.get()
                    )
                });
            }
        }
        // Reverse doubling transfers to Phi^-1(2k u) <= k Phi^-1(u) for
        // u in the image of the witness range (where the inverse inverts
        // exactly: these members have no flat pieces above height zero).
        match cls.reverse_doubling {
            Flag::Holds { witness: w } => {
                let lo = w.from_scale.max(1e-6);
                for &r in &log_points(lo, 1e6, 200) {
                    let u = phi.eval(r);
                    if !u.is_finite() || u.is_zero() {
                        continue; // beyond b or inside the degeneracy zone
                    }
                    let lhs = gen_inverse_f(&phi, 2.0 * w.k * u.get());
                    let ok = lhs <= ExtReal::saturating(w.k * r * (1.0 + slack));
                    rec.case(ok, || {
                        format!(
                            "{}: Phi^-1(2k u) = {lhs} > k r = {} at r = {r}",
                            cls.label,
                            w.k * r
                        )
                    });
                }
            }
            Flag::Fails => {
                // Negation: for every k some u breaks the inverse inequality.
                for &k in &[2.0, 10.0, 100.0, 1e4, 1e6] {
                    let found = log_points(1e-6, 1e8 * k, 200).iter().any(|&u| {
                        let lhs = gen_inverse_f(&phi, 2.0 * k * u);
                        let rhs = gen_inverse_f(&phi, u);
                        lhs.get() > k * rhs.get() * (1.0 + 1e-9)
                    });
                    rec.case(found, || {
                        format!("{}: found no u violating the k = {k} inverse bound", cls.label)
                    });
                }
            }
            Flag::Unknown => rec.note(format!("{}: reverse-doubling undecided", cls.label)),
        }
    }
    rec
}

/// Almost-decreasing comparison of (1/t) Phi^-1(1/t)^{-q} at q = log2(k),
/// and the resulting two-sided transfer onto characteristic norms.
fn suite_scaling_comparison(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("scaling-comparison");
    let slack = 1e-9 * cfg.tol_scale;
    let mut rng = suite_rng(cfg.seed, "scaling-comparison");
    let mut worst_transfer = 0.0f64;
    for phi in catalog() {
        let cls = classify(&phi);
        let Some(w) = cls.doubling.global_witness() else {
            continue;
        };
        let q = w.k.log2();
        let weighted = |t: f64| gen_inverse_f(&phi, 1.0 / t).get().powf(-q) / t;
        for _ in 0..50 {
            let a = log_uniform(&mut rng, 1e-4, 1e4);
            let b = log_uniform(&mut rng, 1e-4, 1e4);
            let (t, s) = (a.min(b), a.max(b));
            let ok = weighted(t) <= w.k * weighted(s) * (1.0 + slack);
            rec.case(ok, || {
                format!(
                    "{}: comparison fails at t = {t}, s = {s} with k = {}, q = {q}",
                    cls.label, w.k
                )
            });
        }
        for &m in &[1e-3, 0.1, 1.0, 10.0, 1e3] {
            let b = char_norm_bounds(&phi, q, m)?;
            let cap = 2.0 * b.closed_form.get() * (1.0 + slack);
            rec.case(b.computed.lower <= cap, || {
                format!(
                    "{}: |E| = {m}: certified lower {} exceeds 2x closed form {}",
                    cls.label, b.computed.lower, b.closed_form
                )
            });
            if b.computed.value.is_finite() {
                worst_transfer = worst_transfer.max(b.computed.value.get() / b.closed_form.get());
            }
        }
    }
    rec.measure("max computed/closed at q = log2(k)", worst_transfer);
    Ok(rec)
}

/// Index duality under conjugation, scoped to members whose small-argument
/// and tail regimes agree; iff-consistency of flags and indices everywhere.
fn suite_conjugate_indices(cfg: &SuiteConfig) -> CheckRecord {
    let mut rec = CheckRecord::new("conjugate-indices");
    // Flags and index tests must agree member by member (no Unknown verdicts
    // in the catalog): the finiteness of p_plus decides doubling and
    // p_minus > 1 decides reverse doubling.
    for phi in members_with_capped() {
        let c = classify(&phi);
        rec.case(!matches!(c.doubling, Flag::Unknown), || {
            format!("{}: doubling witness and index test disagree", c.label)
        });
        rec.case(!matches!(c.reverse_doubling, Flag::Unknown), || {
            format!("{}: reverse witness and index test disagree", c.label)
        });
        rec.case(c.doubling.holds() == c.p_plus.is_finite(), || {
            format!("{}: doubling flag vs p_plus = {}", c.label, c.p_plus)
        });
        let threshold = ExtReal::saturating(1.0 + 5e-3 * cfg.tol_scale);
        rec.case(c.reverse_doubling.holds() == (c.p_minus > threshold), || {
            format!("{}: reverse flag vs p_minus = {}", c.label, c.p_minus)
        });
    }
    // Exact duality for the power family: both conjugate indices equal p'.
    for &p in &[1.5f64, 2.0, 4.0] {
        let conj = YoungFunction::Power { p }.conjugate();
        let (hi, lo) = indices(&conj);
        let want = p / (p - 1.0);
        let tol = 1e-3 * cfg.tol_scale;
        rec.case(hi.is_finite() && (hi.get() - want).abs() <= tol * want, || {
            format!("conj(t^{p}): p_plus = {hi}, want {want}")
        });
        rec.case(lo.is_finite() && (lo.get() - want).abs() <= tol * want, || {
            format!("conj(t^{p}): p_minus = {lo}, want {want}")
        });
        rec.measure_ext(format!("conj(t^{p}) p_plus"), hi);
        rec.measure_ext(format!("conj(t^{p}) p_minus"), lo);
    }
    // For t log(3+t) both the hypothesis (p_plus finite) and the conclusion
    // live in the tail regime, so the lower conjugate index must reach at
    // least the conjugate exponent of its upper index. The conjugate grows
    // almost exponentially, so an infinite lower index also qualifies.
    {
        let base = YoungFunction::PowerLog;
        let (bp, _) = indices(&base);
        let conj = base.conjugate();
        let (hi, lo) = indices(&conj);
        let want = bp.get() / (bp.get() - 1.0);
        rec.case(
            lo.is_infinite() || lo.get() >= want * (1.0 - 7e-2 * cfg.tol_scale),
            || format!("conj(t log(3+t)): p_minus = {lo}, expected at least about {want}"),
        );
        rec.measure_ext("conj(t log(3+t)) p_plus", hi);
        rec.measure_ext("conj(t log(3+t)) p_minus", lo);
    }
    // The remaining members mix a linear small-argument regime with a
    // different tail regime, so their conjugate indices are recorded but
    // not asserted against the duality exponents.
    for phi in [YoungFunction::ExpMinusOne, YoungFunction::Deadzone] {
        let conj = phi.clone().conjugate();
        let (hi, lo) = indices(&conj);
        rec.measure_ext(format!("conj({}) p_plus", phi.label()), hi);
        rec.measure_ext(format!("conj({}) p_minus", phi.label()), lo);
    }
    rec.note(
        "duality asserted where both regimes coincide (powers, and the \
         lower index of the log-perturbed conjugate); mixed-regime members \
         are measured only"
            .to_string(),
    );
    rec
}

/// The scaling transform: convexity/invariants, the theta = 1 sandwich,
/// and multiplicativity of the index interval.
fn suite_phi_transform(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("phi-transform");
    let members: Vec<(YoungFunction, f64)> = vec![
        (YoungFunction::Power { p: 2.0 }, 1.0),
        (YoungFunction::Power { p: 2.0 }, 2.0),
        (YoungFunction::PowerLog, 1.0),
    ];
    for (base, theta) in members {
        let pt = phi_theta(base.clone(), theta)?;
        rec.case(check_invariants(&pt).is_ok(), || {
            format!("{}: invariants fail", pt.label())
        });
        if theta == 1.0 {
            // Phi_1(r) <= Phi(r) <= Phi_1(2r): the transform changes the
            // function by at most a dilation factor of 2.
            let slack = 1e-6 * cfg.tol_scale;
            for &r in &log_points(1e-4, 1e4, 100) {
                let low = pt.eval(r);
                let mid = base.eval(r);
                let high = pt.eval(2.0 * r);
                rec.case(low <= mid.mul(ExtReal::saturating(1.0 + slack)), || {
                    format!("{}: transform exceeds the base at r = {r}", pt.label())
                });
                rec.case(mid <= high.mul(ExtReal::saturating(1.0 + slack)), || {
                    format!("{}: base exceeds the dilated transform at r = {r}", pt.label())
                });
            }
        }
        let (bp, bm) = indices(&base);
        let (tp, tm) = indices(&pt);
        let tol = 1e-2 * cfg.tol_scale;
        rec.case(tm <= tp, || {
            format!("{}: index interval inverted: [{tm}, {tp}]", pt.label())
        });
        let upper_ok = match (tp.is_finite(), bp.is_finite()) {
            (true, true) => tp.get() <= theta * bp.get() * (1.0 + tol),
            (_, false) => true,
            (false, true) => false,
        };
        rec.case(upper_ok, || {
            format!("{}: p_plus = {tp} exceeds theta * {bp}", pt.label())
        });
        let lower_ok = if bm.is_finite() {
            tm.get() >= theta * bm.get() * (1.0 - tol) || tm.is_infinite()
        } else {
            tm.is_infinite()
        };
        rec.case(lower_ok, || {
            format!("{}: p_minus = {tm} is below theta * {bm}", pt.label())
        });
        rec.measure_ext(format!("{} p_plus", pt.label()), tp);
        rec.measure_ext(format!("{} p_minus", pt.label()), tm);
    }
    Ok(rec)
}

// ---------------------------------------------------------------------------
// rearrangement and norm suites
// ---------------------------------------------------------------------------

fn star_distribution(star: &RearrangementStep, t: f64) -> f64 {
    star.steps().iter().filter(|&&(c, _)| c > t).map(|&(_, w)| w).sum()
}

/// Equimeasurability, monotonicity, the radial round trip, and the
/// Hardy-Littlewood pairing inequality.
fn suite_rearrangement(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("rearrangement");
    let mut rng = suite_rng(cfg.seed, "rearrangement");
    for _ in 0..cfg.sizes.steps {
        let f = random_step(&mut rng);
        let star = f.decreasing_rearrangement();
        // distribution functions agree at exact levels and between them
        let mut ok_dist = true;
        for &(v, _) in f.pairs() {
            for t in [v * 0.999, v, v * 1.001] {
                if (f.distribution(t) - star_distribution(&star, t)).abs()
                    > 1e-12 * f.total_measure()
                {
                    ok_dist = false;
                }
            }
        }
        rec.case(ok_dist, || "rearrangement is not equimeasurable".to_string());
        rec.case(
            (f.integral() - star.steps().iter().map(|&(c, w)| c * w).sum::<f64>()).abs()
                <= 1e-12 * f.integral(),
            || "rearrangement changes the integral".to_string(),
        );
        // monotone runs, strictly decreasing values
        rec.case(
            star.steps().windows(2).all(|w| w[0].0 > w[1].0),
            || "rearrangement runs are not strictly decreasing".to_string(),
        );
        // f** dominates f* and is non-increasing
        let times = log_points(
            star.support_end() * 1e-3,
            star.support_end() * 2.0,
            20,
        );
        let mut prev = f64::INFINITY;
        let mut ok_star = true;
        for &t in &times {
            let ds = star.double_star(t);
            if ds > prev * (1.0 + 1e-12) || ds < star.value_at(t) * (1.0 - 1e-12) {
                ok_star = false;
            }
            prev = ds;
        }
        rec.case(ok_star, || {
            "double-star average is not a non-increasing majorant".to_string()
        });
        // radial profile round trip: values survive exactly, shell widths
        // only up to the roundoff of the cumulative radii
        let back = RearrangementStep::from_radial(&star.radial_profile())?;
        let wtol = 1e-12 * f.total_measure();
        let round_trip_ok = back.steps().len() == star.steps().len()
            && back
                .steps()
                .iter()
                .zip(star.steps())
                .all(|(a, b)| a.0 == b.0 && (a.1 - b.1).abs() <= wtol);
        rec.case(round_trip_ok, || "radial round trip changes the runs".to_string());
    }
    // Hardy-Littlewood: the rearranged pairing dominates every realization.
    for _ in 0..cfg.sizes.steps / 2 {
        let f = random_nonzero_grid(&mut rng);
        let g = random_values_like(&mut rng, &f);
        let direct: f64 = f
            .values()
            .iter()
            .zip(g.values())
            .map(|(a, b)| a * b * f.cell_width())
            .sum();
        let paired = rearranged_pairing(
            &f.to_step().decreasing_rearrangement(),
            &g.to_step().decreasing_rearrangement(),
        );
        rec.case(direct <= paired * (1.0 + 1e-12) + 1e-300, || {
            format!("pairing {direct} exceeds rearranged pairing {paired}")
        });
    }
    Ok(rec)
}

/// The three weak-norm evaluators agree, and the norm value rescales the
/// weak modular to at most one.
fn suite_weak_norm_equality(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("weak-norm-equality");
    let tol = 1e-8 * cfg.tol_scale;
    let mut rng = suite_rng(cfg.seed, "weak-norm-equality");
    let members = members_with_capped();
    let mut worst_spread = 0.0f64;
    for _ in 0..cfg.sizes.steps {
        let f = random_step(&mut rng);
        for phi in &members {
            let w = weak_norms(phi, &f)?;
            let vals = [
                w.modular.value,
                w.inverse_level.value,
                w.rearrangement.value,
            ];
            let ok = if vals.iter().all(|v| v.is_finite()) {
                let hi = vals.iter().map(|v| v.get()).fold(0.0, f64::max);
                let lo = vals.iter().map(|v| v.get()).fold(f64::INFINITY, f64::min);
                let spread = if hi > 0.0 { (hi - lo) / hi } else { 0.0 };
                worst_spread = worst_spread.max(spread);
                spread <= tol
            } else {
                vals.iter().all(|v| v.is_infinite())
            };
            rec.case(ok, || {
                format!(
                    "{}: evaluators disagree: {} / {} / {}",
                    phi.label(),
                    vals[0],
                    vals[1],
                    vals[2]
                )
            });
            // normalization: just above the norm the weak modular is <= 1
            let v = w.inverse_level.value;
            if v.is_finite() && !v.is_zero() {
                let sup = weak_modular_sup(phi, &f, v.get() * (1.0 + 1e-8));
                rec.case(sup <= ExtReal::saturating(1.0 + 1e-9 * cfg.tol_scale), || {
                    format!("{}: weak modular at the norm is {sup}", phi.label())
                });
            }
        }
    }
    let zero = MeasureStepFunction::new([])?;
    let wz = weak_norms(&YoungFunction::Power { p: 2.0 }, &zero)?;
    rec.case(
        wz.modular.value.is_zero()
            && wz.inverse_level.value.is_zero()
            && wz.rearrangement.value.is_zero(),
        || "zero function has a nonzero weak norm".to_string(),
    );
    rec.measure("max evaluator spread", worst_spread);
    Ok(rec)
}

/// Indicator norms against closed forms in the weak and Lorentz scales.
fn suite_characteristic_norms(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("characteristic-norms");
    let mut rng = suite_rng(cfg.seed, "characteristic-norms");
    let members = members_with_capped();
    // 50 random measures: every weak evaluator and the Lorentz sup recover
    // 1 / Phi^-1(1/|E|).
    for _ in 0..50 {
        let m = log_uniform(&mut rng, 1e-4, 1e4);
        let ind = MeasureStepFunction::indicator(m);
        for phi in &members {
            let closed = characteristic_norm(phi, m);
            let w = weak_norms(phi, &ind)?;
            let sup_path = orlicz_lorentz_norm(phi, ExtReal::INFINITY, &ind)?;
            for (value, tag, tol) in [
                (w.inverse_level.value, "level formula", 1e-10),
                (w.rearrangement.value, "rearrangement formula", 1e-10),
                (sup_path.value, "lorentz sup", 1e-10),
                (w.modular.value, "modular bisection", 1.5e-10),
            ] {
                let ok = (value.get() - closed.get()).abs()
                    <= tol * cfg.tol_scale * closed.get();
                rec.case(ok, || {
                    format!(
                        "{}: {tag} gives {value} for |E| = {m}, closed form {closed}",
                        phi.label()
                    )
                });
            }
        }
    }
    // Degenerate member at q = 1: the norm is log(1 + |E|), not a power.
    let dz = YoungFunction::Deadzone;
    for &m in &[0.5, std::f64::consts::E - 1.0, 3.0, 10.0] {
        let got = char_norm_bounds(&dz, 1.0, m)?.computed;
        let want = (1.0 + m).ln();
        rec.case(
            got.value.is_finite()
                && (got.value.get() - want).abs() <= 1e-6 * cfg.tol_scale * want,
            || format!("deadzone q=1 at |E| = {m}: got {}, want {want}", got.value),
        );
    }
    // Exponential member at q = 1: the integral diverges at the origin.
    for &m in &[0.5, 2.0] {
        let got = char_norm_bounds(&YoungFunction::ExpMinusOne, 1.0, m)?.computed;
        rec.case(!got.is_finite(), || {
            format!("exp char norm at q=1, |E| = {m} came back finite: {}", got.value)
        });
    }
    // The q^{-1/q} lower bound holds across the catalog.
    for phi in &members {
        for &q in &[1.0, 2.0] {
            for &m in &[1e-3, 0.1, 1.0, 10.0, 1e3] {
                let b = char_norm_bounds(phi, q, m)?;
                let ok = b.computed.upper
                    >= ExtReal::saturating(b.lower * (1.0 - 1e-9 * cfg.tol_scale));
                rec.case(ok, || {
                    format!(
                        "{}: q = {q}, |E| = {m}: computed {} under lower bound {}",
                        phi.label(),
                        b.computed.value,
                        b.lower
                    )
                });
            }
        }
    }
    // The deadzone member shows the closed form and the q = 1 norm are not
    // equivalent: their ratio grows without bound.
    let ratios: Vec<f64> = [10.0, 1e3, 1e5]
        .iter()
        .map(|&m| {
            let b = char_norm_bounds(&dz, 1.0, m)?;
            Ok(b.computed.value.get() / b.closed_form.get())
        })
        .collect::<Result<_>>()?;
    rec.case(ratios[0] < ratios[1] && ratios[1] < ratios[2], || {
        format!("deadzone ratio not growing: {ratios:?}")
    });
    rec.measure("deadzone q=1 ratio at |E| = 1e5", ratios[2]);
    Ok(rec)
}

/// Quasi-norm axioms: homogeneity, monotonicity, dilation covariance, and
/// the power-weight consistency of the two Lorentz routes.
fn suite_norm_axioms(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("norm-axioms");
    let mut rng = suite_rng(cfg.seed, "norm-axioms");
    let q1 = ExtReal::ONE;
    let q2 = ExtReal::saturating(2.0);
    let sqrt_w = WeightFunction::Power { alpha: 0.5 };
    let oe_w = WeightFunction::OrliczEquivalent {
        phi: YoungFunction::Power { p: 1.5 },
    };
    let fast_tol = 1e-9 * cfg.tol_scale;
    let quad_tol = 1e-6 * cfg.tol_scale;
    let count = cfg.sizes.steps.min(20);
    for _ in 0..count {
        let f = random_step(&mut rng);
        // homogeneity across every evaluator
        for &c in &[1e-3, 7.0, 1e3] {
            let fc = f.scale(c);
            for phi in catalog() {
                let a = luxemburg(&phi, &fc)?.value;
                let b = luxemburg(&phi, &f)?.value;
                rec.case(homogeneous(a, b, c, fast_tol), || {
                    format!("{}: luxemburg not homogeneous at c = {c}", phi.label())
                });
                let a = weak_norm(&phi, &fc)?.value;
                let b = weak_norm(&phi, &f)?.value;
                rec.case(homogeneous(a, b, c, fast_tol), || {
                    format!("{}: weak norm not homogeneous at c = {c}", phi.label())
                });
            }
            for (w, q, tag) in [
                (&sqrt_w, q1, "lorentz sqrt q=1"),
                (&sqrt_w, q2, "lorentz sqrt q=2"),
                (&oe_w, q2, "orlicz-lorentz q=2"),
            ] {
                let a = lorentz_norm(w, q, &fc)?.value;
                let b = lorentz_norm(w, q, &f)?.value;
                rec.case(homogeneous(a, b, c, quad_tol), || {
                    format!("{tag}: not homogeneous at c = {c}")
                });
            }
        }
        // monotonicity: shrink values piecewise, norms cannot grow
        let smaller = MeasureStepFunction::new(
            f.pairs().iter().map(|&(v, m)| (v * rng.gen::<f64>(), m)),
        )?;
        for phi in [YoungFunction::Power { p: 2.0 }, YoungFunction::ExpMinusOne] {
            let small = luxemburg(&phi, &smaller)?.value;
            let big = luxemburg(&phi, &f)?.value;
            rec.case(small <= big.mul(ExtReal::saturating(1.0 + fast_tol)), || {
                format!("{}: luxemburg not monotone", phi.label())
            });
            let small = weak_norm(&phi, &smaller)?.value;
            let big = weak_norm(&phi, &f)?.value;
            rec.case(small <= big.mul(ExtReal::saturating(1.0 + fast_tol)), || {
                format!("{}: weak norm not monotone", phi.label())
            });
        }
        let small = lorentz_norm(&sqrt_w, q2, &smaller)?.value;
        let big = lorentz_norm(&sqrt_w, q2, &f)?.value;
        rec.case(small <= big.mul(ExtReal::saturating(1.0 + quad_tol)), || {
            "lorentz norm not monotone".to_string()
        });
        // power-weight dilation covariance: measures scaled by s multiply
        // the norm by s^alpha
        for &s in &[0.125, 32.0] {
            let fs = scale_measures(&f, s);
            let a = lorentz_norm(&sqrt_w, q2, &fs)?.value;
            let b = lorentz_norm(&sqrt_w, q2, &f)?.value;
            rec.case(homogeneous(a, b, s.powf(0.5), quad_tol), || {
                format!("dilation covariance fails at s = {s}")
            });
        }
    }
    // generalized route with w = t^{1/p} matches the induced-weight route
    // for Phi = t^p
    let p = 2.0;
    let phi_p = YoungFunction::Power { p };
    let w_p = WeightFunction::Power { alpha: 1.0 / p };
    for _ in 0..15 {
        let f = random_step(&mut rng);
        for q in [q1, q2] {
            let a = lorentz_norm(&w_p, q, &f)?.value;
            let b = orlicz_lorentz_norm(&phi_p, q, &f)?.value;
            rec.case(homogeneous(a, b, 1.0, quad_tol), || {
                format!("generalized and induced Lorentz routes differ: {a} vs {b}")
            });
        }
    }
    // zero function maps to zero everywhere
    let zero = MeasureStepFunction::new([])?;
    let all_zero = luxemburg(&phi_p, &zero)?.value.is_zero()
        && weak_norm(&phi_p, &zero)?.value.is_zero()
        && lorentz_norm(&sqrt_w, q2, &zero)?.value.is_zero()
        && lorentz_norm(&sqrt_w, ExtReal::INFINITY, &zero)?.value.is_zero();
    rec.case(all_zero, || "zero function has a nonzero norm".to_string());
    Ok(rec)
}

fn homogeneous(scaled: ExtReal, base: ExtReal, c: f64, tol: f64) -> bool {
    match (scaled.is_finite(), base.is_finite()) {
        (true, true) => {
            let want = c * base.get();
            (scaled.get() - want).abs() <= tol * want.max(1e-300)
        }
        (false, false) => true,
        _ => false,
    }
}

/// Pairing chain: realization <= rearranged pairing <= 2 norm product.
fn suite_pairing_chain(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("pairing-chain");
    let mut rng = suite_rng(cfg.seed, "pairing-chain");
    let phis = [
        YoungFunction::Power { p: 1.5 },
        YoungFunction::Power { p: 2.0 },
        YoungFunction::PowerLog,
    ];
    let mut vacuous = 0usize;
    let mut sharpest = 0.0f64;
    for _ in 0..cfg.sizes.steps {
        let f = random_nonzero_grid(&mut rng);
        let g = random_values_like(&mut rng, &f);
        for phi in &phis {
            let ch = pairing_checks(phi, &f, &g)?;
            rec.case(ch.holds(1e-9 * cfg.tol_scale), || {
                format!(
                    "{}: chain fails: {} / {} / {}",
                    phi.label(),
                    ch.inner_product,
                    ch.rearranged,
                    ch.bound
                )
            });
            if ch.vacuous {
                vacuous += 1;
            } else if ch.bound.is_finite() && ch.bound.get() > 0.0 {
                sharpest = sharpest.max(ch.rearranged / ch.bound.get());
            }
        }
    }
    // indicator pair with Phi = t^2: every link is known in closed form
    let ind = GridFunction1D::new(0.0, 0.25, vec![1.0; 4])?;
    let ch = pairing_checks(&YoungFunction::Power { p: 2.0 }, &ind, &ind)?;
    rec.case(
        (ch.inner_product - 1.0).abs() <= 1e-12
            && (ch.rearranged - 1.0).abs() <= 1e-12
            && ch.bound.is_finite()
            && (ch.bound.get() - 2.0).abs() <= 1e-6 * cfg.tol_scale,
        || {
            format!(
                "indicator chain drifted: {} / {} / {}",
                ch.inner_product, ch.rearranged, ch.bound
            )
        },
    );
    if vacuous > 0 {
        rec.note(format!("{vacuous} pairs had an infinite right-hand side"));
    }
    rec.measure("sharpest rearranged/bound ratio", sharpest);
    Ok(rec)
}

// ---------------------------------------------------------------------------
// weight-criterion suites
// ---------------------------------------------------------------------------

/// Tail/head integral criterion: exact ratios for powers, divergence for
/// the linear weight, finiteness for globally reverse-doubling induced
/// weights.
fn suite_weight_criterion_integral(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("weight-criterion-integral");
    let radii = [0.1, 1.0, 10.0];
    for &(p, q) in &[(2.0, 1.0), (2.0, 2.0), (3.0, 2.0), (1.5, 1.0)] {
        let w = WeightFunction::Power { alpha: 1.0 / p };
        let report = weight_criterion_q(&w, q, &radii)?;
        let want = 1.0 / (p - 1.0);
        for s in &report.samples {
            rec.case(
                s.ratio.is_finite()
                    && (s.ratio.get() - want).abs() <= 1e-4 * cfg.tol_scale * want,
                || {
                    format!(
                        "t^(1/{p}), q = {q}: ratio at r = {} is {}, want {want}",
                        s.r, s.ratio
                    )
                },
            );
        }
    }
    let linear = WeightFunction::Power { alpha: 1.0 };
    let bad = weight_criterion_q(&linear, 1.0, &radii)?;
    rec.case(bad.sup_ratio.is_infinite(), || {
        format!("linear weight criterion came back finite: {}", bad.sup_ratio)
    });
    // induced weights of globally reverse-doubling members stay finite
    for &p in &[1.5, 2.0, 4.0] {
        let w = WeightFunction::OrliczEquivalent {
            phi: YoungFunction::Power { p },
        };
        for &q in &[1.0, 2.0] {
            let report = weight_criterion_q(&w, q, &radii)?;
            rec.case(report.sup_ratio.is_finite(), || {
                format!("induced weight of t^{p} diverges at q = {q}")
            });
            rec.measure_ext(format!("induced t^{p} sup ratio q={q}"), report.sup_ratio);
        }
    }
    // members whose reverse-doubling witness is not global have a linear
    // regime, and there the tail genuinely diverges: asserted as the
    // negative counterpart of the scoping rule
    for phi in [YoungFunction::ExpMinusOne, YoungFunction::Capped { b: 1.0 }] {
        let w = WeightFunction::OrliczEquivalent { phi: phi.clone() };
        let report = weight_criterion_q(&w, 1.0, &[1.0])?;
        rec.case(report.sup_ratio.is_infinite(), || {
            format!(
                "induced weight of {} should diverge in its linear regime",
                phi.label()
            )
        });
    }
    rec.note(
        "induced-weight finiteness is asserted only for members whose \
         reverse-doubling witness covers all scales"
            .to_string(),
    );
    Ok(rec)
}

/// Balance criterion (phi(t)/t) integral of 1/phi: the constant p' for
/// powers, divergence for the linear weight, growth in the linear regime.
fn suite_weight_criterion_sup(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("weight-criterion-sup");
    let radii = [0.01, 0.1, 1.0, 10.0, 1e3];
    for &p in &[1.5, 2.0, 4.0] {
        let w = WeightFunction::Power { alpha: 1.0 / p };
        let got = weight_balance_sup(&w, &radii)?;
        let want = p / (p - 1.0);
        rec.case(
            got.is_finite() && (got.get() - want).abs() <= 1e-4 * cfg.tol_scale * want,
            || format!("balance of t^(1/{p}) is {got}, want {want}"),
        );
        let induced = WeightFunction::OrliczEquivalent {
            phi: YoungFunction::Power { p },
        };
        let got = weight_balance_sup(&induced, &radii)?;
        rec.case(
            got.is_finite() && (got.get() - want).abs() <= 1e-3 * cfg.tol_scale * want,
            || format!("balance of the induced t^{p} weight is {got}, want {want}"),
        );
    }
    let linear = WeightFunction::Power { alpha: 1.0 };
    rec.case(weight_balance_sup(&linear, &[1.0])?.is_infinite(), || {
        "balance of the linear weight came back finite".to_string()
    });
    // the exponential member's induced weight balances like log t: finite
    // at every radius but growing, so the sup over all scales is infinite
    let exp_w = WeightFunction::OrliczEquivalent {
        phi: YoungFunction::ExpMinusOne,
    };
    let b10 = weight_balance_sup(&exp_w, &[10.0])?;
    let b100 = weight_balance_sup(&exp_w, &[100.0])?;
    let b1000 = weight_balance_sup(&exp_w, &[1000.0])?;
    rec.case(
        b10.is_finite()
            && b100.is_finite()
            && b1000.is_finite()
            && b100 > b10
            && b1000.get() > 1.5 * b10.get(),
        || format!("exp-induced balance growth looks wrong: {b10}, {b100}, {b1000}"),
    );
    rec.measure_ext("exp-induced balance at r = 1e3", b1000);
    // monotone weights report their own value as the running sup
    let w = WeightFunction::Power { alpha: 0.5 };
    let sup_ok = log_points(1e-4, 1e4, 50)
        .iter()
        .all(|&t| (w.running_sup(t) - w.eval(t)).abs() <= 1e-12 * w.eval(t));
    rec.case(sup_ok, || {
        "running sup of a monotone weight differs from the weight".to_string()
    });
    Ok(rec)
}

// ---------------------------------------------------------------------------
// maximal-operator suites
// ---------------------------------------------------------------------------

/// The two 1-D evaluation modes agree; closed forms, sublinearity, and the
/// dyadic/vector variants behave.
fn suite_maximal_agreement(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("maximal-agreement");
    let mut rng = suite_rng(cfg.seed, "maximal-agreement");
    for _ in 0..cfg.sizes.grids {
        let f = random_grid(&mut rng);
        let fast = maximal_1d(&f, MaximalMode::Exact)?;
        let slow = maximal_1d(&f, MaximalMode::Oracle)?;
        let agree = fast
            .values()
            .iter()
            .zip(slow.values())
            .all(|(a, b)| (a - b).abs() <= 1e-12 * b.max(1.0));
        rec.case(agree, || "endpoint scan and direct oracle disagree".to_string());
        let dominates = fast
            .values()
            .iter()
            .zip(f.values())
            .all(|(m, v)| *m >= v * (1.0 - 1e-12));
        rec.case(dominates, || "maximal function fails to dominate |f|".to_string());
    }
    // sublinearity at sample points
    for _ in 0..cfg.sizes.grids / 2 {
        let f = random_nonzero_grid(&mut rng);
        let g = random_values_like(&mut rng, &f);
        let sum_vals: Vec<f64> = f.values().iter().zip(g.values()).map(|(a, b)| a + b).collect();
        let sum = GridFunction1D::new(f.origin(), f.cell_width(), sum_vals)?;
        let span = f.end() - f.origin();
        let ok = (0..8).all(|i| {
            let x = f.origin() - span + (i as f64 / 7.0) * 3.0 * span;
            uncentered_maximal_at(&sum, x)
                <= uncentered_maximal_at(&f, x) + uncentered_maximal_at(&g, x) + 1e-12
        });
        rec.case(ok, || "sublinearity fails".to_string());
    }
    // indicator closed form at points far outside the support
    let ind = GridFunction1D::new(0.0, 1.0 / 16.0, vec![1.0; 16])?;
    for &(x, want) in &[(-3.0, 0.25), (0.5, 1.0), (1.25, 0.8), (5.0, 0.2)] {
        let got = uncentered_maximal_at(&ind, x);
        rec.case((got - want).abs() <= 1e-12, || {
            format!("indicator maximal at x = {x}: got {got}, want {want}")
        });
        let oracle = direct_maximal_at(&ind, x);
        rec.case((oracle - want).abs() <= 1e-12, || {
            format!("oracle drifts from the closed form at x = {x}")
        });
    }
    // dyadic tower on a single occupied cell
    let spike = GridFieldND::new(1, 4, 1.0, vec![1.0, 0.0, 0.0, 0.0])?;
    let m = dyadic_maximal(&spike)?;
    let want = [1.0, 0.5, 0.25, 0.25];
    rec.case(
        m.values().iter().zip(&want).all(|(a, b)| (a - b).abs() <= 1e-15),
        || format!("dyadic tower gives {:?}, want {want:?}", m.values()),
    );
    // constants are fixed points
    let flat = GridFieldND::new(2, 4, 0.5, vec![3.0; 16])?;
    let mf = dyadic_maximal(&flat)?;
    rec.case(mf.values().iter().all(|&v| (v - 3.0).abs() <= 1e-15), || {
        "dyadic maximal moves a constant field".to_string()
    });
    // dyadic block means never beat the exact uncentered supremum
    for _ in 0..20 {
        let field = random_field1(&mut rng, 64);
        let dy = dyadic_maximal(&field)?;
        let as_grid = GridFunction1D::new(0.0, field.cell_volume(), field.values().to_vec())?;
        let ok = dy.values().iter().enumerate().all(|(i, &v)| {
            let x = (i as f64 + 0.5) * field.cell_volume();
            v <= uncentered_maximal_at(&as_grid, x) * (1.0 + 1e-12) + 1e-300
        });
        rec.case(ok, || "a dyadic block mean exceeds the exact maximal".to_string());
    }
    // vector variants: duplicate members change nothing under the sup
    let base = random_field1(&mut rng, 16);
    let single = VectorField::new(vec![base.clone()])?;
    let doubled = VectorField::new(vec![base.clone(), base.clone()])?;
    let a = vector_dyadic_maximal(&single)?.lq_aggregate(ExtReal::INFINITY)?;
    let b = vector_dyadic_maximal(&doubled)?.lq_aggregate(ExtReal::INFINITY)?;
    rec.case(a.values() == b.values(), || {
        "sup aggregate is not idempotent under member duplication".to_string()
    });
    // two displaced indicators: the pointwise l2 aggregate in closed form
    let left = GridFunction1D::new(0.0, 0.5, vec![1.0, 1.0])?;
    let right = GridFunction1D::new(1.0, 0.5, vec![1.0, 1.0])?;
    let got = vector_maximal_at(
        &[left.clone(), right.clone()],
        ExtReal::saturating(2.0),
        3.0,
    )?;
    let want = (1.0f64 / 9.0 + 1.0 / 4.0).sqrt();
    rec.case((got - want).abs() <= 1e-12, || {
        format!("l2 aggregate at x = 3: got {got}, want {want}")
    });
    let got = vector_maximal_at(&[left, right], ExtReal::INFINITY, 3.0)?;
    rec.case((got - 0.5).abs() <= 1e-12, || {
        format!("sup aggregate at x = 3: got {got}, want 0.5")
    });
    Ok(rec)
}

/// Band recorded by the ten-seed calibration sweep (see
/// examples/calibrate.rs, observed extremes [0.795, 1.907]), widened by
/// ten percent on each side before freezing. The rearranged maximal
/// function stays within dimensional constants of the double-star average;
/// this band pins the implementation, not the sharp constants. The high
/// end approaches 2 because an uncentered interval maximal of a narrow
/// spike decays like twice the spike mass over the distance.
const HERZ_BAND: (f64, f64) = (0.72, 2.10);

/// (Mf)*(t) / f**(t) lies in the frozen band; equals 1 for indicators at
/// t = |E|.
fn suite_herz_band(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("herz-band");
    let mut rng = suite_rng(cfg.seed, "herz-band");
    let mut lo_seen = f64::INFINITY;
    let mut hi_seen = 0.0f64;
    for _ in 0..cfg.sizes.herz {
        let f = random_nonzero_grid(&mut rng);
        let support = f.to_step().total_measure();
        let ts = [0.25 * support, support, 4.0 * support];
        for (t, ratio) in herz_ratio(&f, &ts)? {
            lo_seen = lo_seen.min(ratio);
            hi_seen = hi_seen.max(ratio);
            rec.case(ratio >= HERZ_BAND.0 && ratio <= HERZ_BAND.1, || {
                format!("ratio {ratio} at t = {t} leaves the band {HERZ_BAND:?}")
            });
        }
    }
    let ind = GridFunction1D::new(0.0, 0.125, vec![1.0; 8])?;
    let (_, anchor) = herz_ratio(&ind, &[1.0])?[0];
    rec.case((anchor - 1.0).abs() <= 0.02 * cfg.tol_scale, || {
        format!("indicator anchor ratio at t = |E| is {anchor}")
    });
    rec.measure("band low", lo_seen);
    rec.measure("band high", hi_seen);
    Ok(rec)
}

/// Weak and Orlicz-Lorentz operator ratios of the maximal function stay
/// finite for reverse-doubling members and are dilation invariant for
/// powers.
fn suite_maximal_orlicz_bound(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("maximal-orlicz-bound");
    let mut rng = suite_rng(cfg.seed, "maximal-orlicz-bound");
    // sampled maximal windows, shared across members
    let mut corpus: Vec<(MeasureStepFunction, MeasureStepFunction)> = Vec::new();
    for _ in 0..cfg.sizes.grids {
        let f = random_nonzero_grid(&mut rng);
        let span = f.end() - f.origin();
        let m = maximal_window(&f, 2.0 * span, 256)?;
        corpus.push((f.to_step(), m.to_step()));
    }
    let powers = [1.5f64, 2.0, 4.0];
    let q2 = ExtReal::saturating(2.0);

    // weak-scale ratios for every reverse-doubling member
    let mut weak_members: Vec<YoungFunction> =
        powers.iter().map(|&p| YoungFunction::Power { p }).collect();
    weak_members.push(YoungFunction::ExpMinusOne);
    for phi in &weak_members {
        let mut cmax = 0.0f64;
        let mut ok = true;
        for (f, m) in &corpus {
            let lhs = weak_norm(phi, m)?.value;
            let rhs = weak_norm(phi, f)?.value;
            if !lhs.is_finite() || !rhs.is_finite() || rhs.is_zero() {
                ok = false;
                break;
            }
            cmax = cmax.max(lhs.get() / rhs.get());
        }
        rec.case(ok && cmax.is_finite() && cmax > 0.0, || {
            format!("{}: weak ratio degenerate", phi.label())
        });
        rec.measure(format!("{} weak ratio", phi.label()), cmax);
    }

    // Lorentz-scale ratios need doubling as well: the power members
    let finite_sub = corpus.len().min(24);
    for &p in &powers {
        let phi = YoungFunction::Power { p };
        for q in [ExtReal::ONE, q2] {
            let mut cmax = 0.0f64;
            let mut ok = true;
            for (f, m) in corpus.iter().take(finite_sub) {
                let lhs = orlicz_lorentz_norm(&phi, q, m)?.value;
                let rhs = orlicz_lorentz_norm(&phi, q, f)?.value;
                if !lhs.is_finite() || !rhs.is_finite() || rhs.is_zero() {
                    ok = false;
                    break;
                }
                cmax = cmax.max(lhs.get() / rhs.get());
            }
            rec.case(ok && cmax.is_finite() && cmax > 0.0, || {
                format!("t^{p}: lorentz ratio degenerate at q = {q}")
            });
            rec.measure(format!("t^{p} lorentz ratio q={q}"), cmax);
        }
    }
    // the exponential member leaves the q = 1 space entirely: vacuous
    let (f0, _) = &corpus[0];
    let exp_rhs = orlicz_lorentz_norm(&YoungFunction::ExpMinusOne, ExtReal::ONE, f0)?;
    rec.case(!exp_rhs.is_finite(), || {
        "exp member unexpectedly has a finite q = 1 norm".to_string()
    });
    rec.note("exp member skipped at finite q: the right-hand norm is infinite".to_string());

    // dilation invariance of the measured constant for power members
    let invariance_sub = corpus.len().min(12);
    for &p in &powers {
        let phi = YoungFunction::Power { p };
        for q in [ExtReal::INFINITY, q2] {
            let constant = |scale: f64| -> Result<f64> {
                let mut c = 0.0f64;
                for (f, m) in corpus.iter().take(invariance_sub) {
                    let fs = scale_measures(f, scale);
                    let ms = scale_measures(m, scale);
                    let lhs = if q.is_infinite() {
                        weak_norm(&phi, &ms)?.value
                    } else {
                        orlicz_lorentz_norm(&phi, q, &ms)?.value
                    };
                    let rhs = if q.is_infinite() {
                        weak_norm(&phi, &fs)?.value
                    } else {
                        orlicz_lorentz_norm(&phi, q, &fs)?.value
                    };
                    c = c.max(lhs.get() / rhs.get());
                }
                Ok(c)
            };
            let base = constant(1.0)?;
            for &s in &[1e-3, 1e3] {
                let scaled = constant(s)?;
                rec.case((scaled / base - 1.0).abs() <= 0.25 * cfg.tol_scale, || {
                    format!("t^{p}: constant moved by {} at scale {s}, q = {q}", scaled / base)
                });
            }
        }
    }
    Ok(rec)
}

// ---------------------------------------------------------------------------
// vector-maximal constants
// ---------------------------------------------------------------------------

/// Corpus shape for [`estimate_constant`].
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub seed: u64,
    /// independent vector-field families
    pub families: usize,
    /// components per family
    pub members: usize,
    /// cells per axis (power of two)
    pub side: usize,
    /// ratio between the largest and smallest cell volumes drawn
    pub scale_span: f64,
    /// skip the doubling-hypothesis gate and measure anyway
    pub allow_unverified: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0,
            families: 50,
            members: 8,
            side: 64,
            scale_span: 100.0,
            allow_unverified: false,
        }
    }
}

/// A measured aggregate-maximal constant with its cross-seed stability.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantEstimate {
    /// max over the seed corpus of weak(aggregate of M f_j) / weak(aggregate of f_j)
    pub constant: f64,
    /// ratio against the constant of the disjoint seed+1 corpus
    pub stability: f64,
    pub families_scored: usize,
    pub families_vacuous: usize,
}

fn random_vector_field(
    rng: &mut ChaCha8Rng,
    members: usize,
    side: usize,
    span: f64,
) -> Result<VectorField> {
    let vol = log_uniform(rng, 1.0 / span.sqrt(), span.sqrt());
    let comps: Result<Vec<GridFieldND>> = (0..members)
        .map(|_| {
            let values: Vec<f64> = (0..side)
                .map(|_| {
                    if rng.gen::<f64>() < 0.3 {
                        0.0
                    } else {
                        log_uniform(rng, 1e-2, 1e2)
                    }
                })
                .collect();
            GridFieldND::new(1, side, vol, values)
        })
        .collect();
    VectorField::new(comps?)
}

fn corpus_constant(
    phi: &YoungFunction,
    q: ExtReal,
    spec: &CorpusSpec,
    seed: u64,
) -> Result<(f64, usize, usize)> {
    let mut rng = suite_rng(seed, "fs-corpus");
    let mut best = 0.0f64;
    let mut scored = 0usize;
    let mut vacuous = 0usize;
    for _ in 0..spec.families {
        let vf = random_vector_field(&mut rng, spec.members, spec.side, spec.scale_span)?;
        let m = vector_dyadic_maximal(&vf)?;
        let lhs = weak_norm(phi, &m.lq_aggregate(q)?.to_step())?.value;
        let rhs = weak_norm(phi, &vf.lq_aggregate(q)?.to_step())?.value;
        if rhs.is_zero() || rhs.is_infinite() || lhs.is_infinite() {
            vacuous += 1;
            continue;
        }
        scored += 1;
        best = best.max(lhs.get() / rhs.get());
    }
    Ok((best, scored, vacuous))
}

/// Measures the weak-norm constant of the aggregated dyadic maximal
/// operator over a seeded corpus of vector fields.
///
/// The sup aggregate (q = ∞) requires a reverse-doubling member; finite q
/// additionally requires doubling. `allow_unverified` bypasses the gate
/// for negative controls, in which case the constant is a measurement
/// without a theorem behind it.
pub fn estimate_constant(
    phi: &YoungFunction,
    q: ExtReal,
    spec: &CorpusSpec,
) -> Result<ConstantEstimate> {
    if spec.families == 0 || spec.members == 0 {
        return Err(Error::invalid(
            "corpus shape",
            "families and members must both be positive",
        ));
    }
    if !spec.side.is_power_of_two() {
        return Err(Error::invalid(
            "corpus shape",
            format!("side must be a power of two, got {}", spec.side),
        ));
    }
    if !(spec.scale_span >= 1.0) || !spec.scale_span.is_finite() {
        return Err(Error::invalid(
            "corpus shape",
            format!("scale span must be finite and at least 1, got {}", spec.scale_span),
        ));
    }
    if q < ExtReal::ONE {
        return Err(Error::invalid(
            "aggregate exponent",
            format!("q must be at least 1, got {q}"),
        ));
    }
    if !spec.allow_unverified {
        let cls = classify(phi);
        if q.is_infinite() {
            if !cls.reverse_doubling.holds() {
                return Err(Error::precondition(format!(
                    "{}: the sup aggregate needs a reverse-doubling member \
                     (set allow_unverified to measure anyway)",
                    cls.label
                )));
            }
        } else if !(cls.doubling.holds() && cls.reverse_doubling.holds()) {
            return Err(Error::precondition(format!(
                "{}: finite aggregates need doubling and reverse doubling \
                 (set allow_unverified to measure anyway)",
                cls.label
            )));
        }
    }
    let (constant, scored, vacuous) = corpus_constant(phi, q, spec, spec.seed)?;
    let (other, _, _) = corpus_constant(phi, q, spec, spec.seed.wrapping_add(1))?;
    let stability = if other > 0.0 {
        constant / other
    } else {
        f64::INFINITY
    };
    Ok(ConstantEstimate {
        constant,
        stability,
        families_scored: scored,
        families_vacuous: vacuous,
    })
}

/// Deterministic multi-level member for the unboundedness control.
fn pyramid_grid() -> GridFunction1D {
    let values: Vec<f64> = (0..16)
        .map(|i| {
            let d = if i < 8 { i } else { 15 - i };
            2f64.powi(d as i32)
        })
        .collect();
    GridFunction1D::new(0.0, 1.0 / 16.0, values).expect("pyramid data is valid")
}

/// Aggregated constants: finite and seed-stable where the hypotheses hold,
/// growing without bound for the linear member in the strong scale.
fn suite_vector_maximal(cfg: &SuiteConfig) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("vector-maximal");
    let spec_for = |members: usize| CorpusSpec {
        seed: cfg.seed,
        families: cfg.sizes.families,
        members,
        side: 64,
        scale_span: 100.0,
        allow_unverified: false,
    };
    // sup aggregate across member counts
    for phi in [YoungFunction::Power { p: 2.0 }, YoungFunction::ExpMinusOne] {
        for members in [1usize, 2, 8, 32] {
            let est = estimate_constant(&phi, ExtReal::INFINITY, &spec_for(members))?;
            rec.case(est.constant.is_finite() && est.constant > 0.0, || {
                format!("{}: sup constant degenerate at {members} members", phi.label())
            });
            rec.case(est.stability >= 0.5 && est.stability <= 2.0, || {
                format!(
                    "{}: sup constant unstable across seeds: {}",
                    phi.label(),
                    est.stability
                )
            });
            rec.measure(
                format!("{} sup constant, {members} members", phi.label()),
                est.constant,
            );
        }
    }
    // l2 aggregate for doubling-and-reverse-doubling members
    let q2 = ExtReal::saturating(2.0);
    for &p in &[1.5, 2.0, 3.0] {
        let phi = YoungFunction::Power { p };
        for members in [1usize, 2, 8, 32] {
            let est = estimate_constant(&phi, q2, &spec_for(members))?;
            rec.case(est.constant.is_finite() && est.constant > 0.0, || {
                format!("t^{p}: l2 constant degenerate at {members} members")
            });
            rec.case(est.stability >= 0.5 && est.stability <= 2.0, || {
                format!("t^{p}: l2 constant unstable across seeds: {}", est.stability)
            });
            rec.measure(format!("t^{p} l2 constant, {members} members"), est.constant);
        }
    }
    // a single member under the sup aggregate is the scalar operator
    {
        let phi = YoungFunction::Power { p: 2.0 };
        let spec = spec_for(1);
        let est = estimate_constant(&phi, ExtReal::INFINITY, &spec)?;
        let mut rng = suite_rng(spec.seed, "fs-corpus");
        let mut direct = 0.0f64;
        for _ in 0..spec.families {
            let vf = random_vector_field(&mut rng, 1, spec.side, spec.scale_span)?;
            let m = dyadic_maximal(&vf.components()[0])?;
            let lhs = weak_norm(&phi, &m.to_step())?.value;
            let rhs = weak_norm(&phi, &vf.components()[0].to_step())?.value;
            if rhs.is_zero() || rhs.is_infinite() {
                continue;
            }
            direct = direct.max(lhs.get() / rhs.get());
        }
        rec.case((est.constant - direct).abs() <= 1e-12 * direct, || {
            format!(
                "single-member aggregate constant {} differs from the scalar {direct}",
                est.constant
            )
        });
    }
    // hypothesis gate: the linear member is refused unless overridden
    {
        let linear = YoungFunction::Power { p: 1.0 };
        let refused = estimate_constant(&linear, ExtReal::INFINITY, &spec_for(4));
        rec.case(
            matches!(refused, Err(Error::Precondition(_))),
            || "linear member passed the hypothesis gate".to_string(),
        );
        let mut spec = spec_for(4);
        spec.allow_unverified = true;
        spec.families = cfg.sizes.families.min(10);
        let measured = estimate_constant(&linear, ExtReal::INFINITY, &spec)?;
        rec.case(measured.constant.is_finite(), || {
            "override run failed to produce a measurement".to_string()
        });
        rec.measure("linear member weak-scale constant (override)", measured.constant);
        rec.note(
            "the weak-scale constant of the linear member stays bounded \
             (weak-type estimate); its unboundedness shows in the strong \
             scale below"
                .to_string(),
        );
    }
    // negative control: the strong-scale ratio of the linear member grows
    // with the window span
    {
        let mut rng = suite_rng(cfg.seed, "vector-maximal-control");
        let mut members = vec![
            GridFunction1D::new(0.0, 0.125, vec![1.0; 8])?,
            pyramid_grid(),
        ];
        members.push(random_nonzero_grid(&mut rng));
        members.push(random_nonzero_grid(&mut rng));
        // One sampling of Mf per member on the widest window, integrated
        // over nested sub-windows. Re-sampling per span would coarsen the
        // near-field cells as the span grows and the lost spike mass can
        // cancel most of the tail gain; with a shared sampling the
        // near-field error is identical across spans and the increments
        // measure pure tail growth, about 2 ln 10 per decade of span.
        let spans = [10.0, 100.0, 1000.0];
        let mut constants = vec![0.0f64; spans.len()];
        for f in &members {
            let m = maximal_window(f, spans[spans.len() - 1], 4096)?;
            for (slot, &span) in constants.iter_mut().zip(&spans) {
                let mut acc = 0.0;
                for (i, &v) in m.values().iter().enumerate() {
                    let x = m.origin() + (i as f64 + 0.5) * m.cell_width();
                    if x >= f.origin() - span && x <= f.end() + span {
                        acc += v * m.cell_width();
                    }
                }
                *slot = slot.max(acc / f.integral());
            }
        }
        rec.case(
            constants[1] > constants[0] + 1.0 && constants[2] > constants[1] + 1.0,
            || format!("strong-scale control is not growing: {constants:?}"),
        );
        rec.measure("linear strong-scale ratio, span 10", constants[0]);
        rec.measure("linear strong-scale ratio, span 100", constants[1]);
        rec.measure("linear strong-scale ratio, span 1000", constants[2]);
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_cfg(suites: &[&str]) -> SuiteConfig {
        SuiteConfig {
            seed: 0,
            tol_scale: 1.0,
            sizes: Sizes {
                steps: 6,
                grids: 6,
                herz: 3,
                families: 3,
            },
            suites: suites.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn unknown_suite_id_is_rejected() {
        let cfg = tiny_cfg(&["no-such-suite"]);
        assert!(matches!(run_suite(&cfg), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn bad_tolerance_scale_is_rejected() {
        let mut cfg = tiny_cfg(&["inverse-sandwich"]);
        cfg.tol_scale = 0.0;
        assert!(run_suite(&cfg).is_err());
    }

    #[test]
    fn single_suite_runs_and_passes() {
        let report = run_suite(&tiny_cfg(&["inverse-sandwich"])).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].id, "inverse-sandwich");
        assert!(report.checks[0].cases > 0);
    }

    #[test]
    fn selection_runs_in_canonical_order() {
        let report = run_suite(&tiny_cfg(&["weak-norm-equality", "inverse-sandwich"])).unwrap();
        let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["inverse-sandwich", "weak-norm-equality"]);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = tiny_cfg(&["rearrangement", "weak-norm-equality"]);
        let a = run_suite(&cfg).unwrap().to_json();
        let b = run_suite(&cfg).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn constant_estimate_gates_on_hypotheses() {
        let spec = CorpusSpec {
            families: 3,
            ..CorpusSpec::default()
        };
        let linear = YoungFunction::Power { p: 1.0 };
        assert!(matches!(
            estimate_constant(&linear, ExtReal::INFINITY, &spec),
            Err(Error::Precondition(_))
        ));
        // reverse doubling alone is not enough for a finite aggregate
        assert!(matches!(
            estimate_constant(&YoungFunction::ExpMinusOne, ExtReal::ONE, &spec),
            Err(Error::Precondition(_))
        ));
        let mut open = spec.clone();
        open.allow_unverified = true;
        assert!(estimate_constant(&linear, ExtReal::INFINITY, &open).is_ok());
    }

    #[test]
    fn constant_estimate_rejects_bad_shapes() {
        let phi = YoungFunction::Power { p: 2.0 };
        let mut spec = CorpusSpec {
            families: 2,
            ..CorpusSpec::default()
        };
        spec.side = 48;
        assert!(estimate_constant(&phi, ExtReal::INFINITY, &spec).is_err());
        spec.side = 64;
        spec.members = 0;
        assert!(estimate_constant(&phi, ExtReal::INFINITY, &spec).is_err());
        spec.members = 2;
        assert!(
            estimate_constant(&phi, ExtReal::saturating(0.5), &spec).is_err(),
            "aggregation below q = 1 must be rejected"
        );
    }

    #[test]
    fn sup_constant_is_at_least_one_and_stable() {
        let spec = CorpusSpec {
            families: 8,
            members: 2,
            ..CorpusSpec::default()
        };
        let est =
            estimate_constant(&YoungFunction::Power { p: 2.0 }, ExtReal::INFINITY, &spec)
                .unwrap();
        // M f >= f cellwise, so the aggregate ratio can never drop below 1
        assert!(est.constant >= 1.0 - 1e-12, "constant = {}", est.constant);
        assert!(est.stability > 0.3 && est.stability < 3.0);
        assert_eq!(est.families_scored + est.families_vacuous, 8);
    }
}
