//! Acceptance gate: eleven release criteria, one test (and one pass/fail
//! line) apiece, each at its stated tolerance and time budget. These are
//! deliberately end-to-end: they exercise the public API the way a user
//! would and hard-code the closed forms they check against.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orlicz_kit::extreal::ExtReal;
use orlicz_kit::grid::GridFunction1D;
use orlicz_kit::maximal::{
    herz_ratio, maximal_1d, maximal_window, weight_balance_sup, weight_criterion_q,
    MaximalMode,
};
use orlicz_kit::norms::{
    char_norm_bounds, characteristic_norm, lorentz_norm, pairing_checks, weak_norm,
    weak_norms,
};
use orlicz_kit::rearrange::MeasureStepFunction;
use orlicz_kit::verify::{estimate_constant, run_suite, CorpusSpec, SuiteConfig};
use orlicz_kit::weight::WeightFunction;
use orlicz_kit::young::{
    catalog, check_invariants, classify, gen_inverse_f, indices, phi_theta,
    YoungFunction,
};

fn log_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let u: f64 = rng.gen();
    lo * (hi / lo).powf(u)
}

fn random_step(rng: &mut ChaCha8Rng) -> MeasureStepFunction {
    let n = rng.gen_range(1..=64usize);
    let pairs: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            (
                log_uniform(rng, 1e-3, 1e3),
                log_uniform(rng, 1e-3, 1e3),
            )
        })
        .collect();
    MeasureStepFunction::new(pairs).expect("positive pairs are valid")
}

fn random_grid(rng: &mut ChaCha8Rng) -> GridFunction1D {
    loop {
        let cells = rng.gen_range(1..=64usize);
        let origin = rng.gen_range(-2.0..2.0);
        let width = log_uniform(rng, 1e-2, 1.0);
        let values: Vec<f64> = (0..cells)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    0.0
                } else {
                    log_uniform(rng, 1e-2, 1e2)
                }
            })
            .collect();
        if values.iter().any(|&v| v > 0.0) {
            return GridFunction1D::new(origin, width, values).expect("valid grid");
        }
    }
}

fn values_like(rng: &mut ChaCha8Rng, f: &GridFunction1D) -> GridFunction1D {
    let values: Vec<f64> = (0..f.len())
        .map(|_| {
            if rng.gen_bool(0.2) {
                0.0
            } else {
                log_uniform(rng, 1e-2, 1e2)
            }
        })
        .collect();
    GridFunction1D::new(f.origin(), f.cell_width(), values).expect("valid grid")
}

fn ext(v: f64) -> ExtReal {
    ExtReal::new(v).expect("finite non-negative value")
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

/// Criterion 1: inverse sandwich and conjugate product sandwich, every
/// catalog member, 200 log-spaced points, relative slack 1e-6, under 5 s.
#[test]
fn criterion_01_inverse_and_product_sandwiches() {
    let start = Instant::now();
    let slack = 1e-6;
    for phi in catalog() {
        let conj = phi.clone().conjugate();
        let a = phi.a();
        let b = phi.b();
        for &t in &log_points(1e-6, 1e6, 200) {
            // Phi(Phi^-1(u)) <= u
            let inv = gen_inverse_f(&phi, t);
            if inv.is_finite() {
                let back = phi.eval(inv.get());
                assert!(
                    back <= ext(t * (1.0 + slack)),
                    "{}: Phi(Phi^-1({t})) = {back} overshoots",
                    phi.label()
                );
            }
            // t <= Phi^-1(Phi(t)) for t strictly inside (a, b)
            if t > a && ext(t) < b {
                let v = phi.eval(t);
                if v.is_finite() && v.get() > 0.0 {
                    let fwd = gen_inverse_f(&phi, v.get());
                    assert!(
                        ext(t) <= fwd.mul(ext(1.0 + slack)),
                        "{}: Phi^-1(Phi({t})) = {fwd} undershoots",
                        phi.label()
                    );
                }
            }
            // r <= Phi^-1(r) * conj^-1(r) <= 2r
            let product = gen_inverse_f(&phi, t).mul(gen_inverse_f(&conj, t));
            assert!(
                product.is_finite(),
                "{}: inverse product infinite at {t}",
                phi.label()
            );
            assert!(
                t <= product.get() * (1.0 + slack),
                "{}: inverse product {} below r = {t}",
                phi.label(),
                product.get()
            );
            assert!(
                product.get() <= 2.0 * t * (1.0 + slack),
                "{}: inverse product {} above 2r = {}",
                phi.label(),
                product.get(),
                2.0 * t
            );
        }
    }
    assert!(
        start.elapsed().as_secs_f64() < 5.0,
        "sandwich sweep took {:?}",
        start.elapsed()
    );
}

/// Criterion 2: the five doubling/reverse-doubling example rows, and
/// p+ = p- = p within 1e-3 for the power members.
#[test]
fn criterion_02_classification_table() {
    // row 1: t^p is doubling for every p >= 1
    for p in [1.0, 1.5, 2.0, 4.0] {
        let c = classify(&YoungFunction::Power { p });
        assert!(c.doubling.holds(), "power({p}) should be doubling");
    }
    // row 2: t^p is reverse-doubling for p > 1
    for p in [1.5, 2.0, 4.0] {
        let c = classify(&YoungFunction::Power { p });
        assert!(c.reverse_doubling.holds(), "power({p}) should be reverse-doubling");
    }
    // row 3: t itself is not reverse-doubling
    let linear = classify(&YoungFunction::Power { p: 1.0 });
    assert!(!linear.reverse_doubling.holds(), "t must not be reverse-doubling");
    // row 4: t log(3+t) is doubling but not reverse-doubling
    let pl = classify(&YoungFunction::PowerLog);
    assert!(pl.doubling.holds(), "power-log should be doubling");
    assert!(!pl.reverse_doubling.holds(), "power-log must not be reverse-doubling");
    // row 5: e^t - 1 is reverse-doubling but not doubling
    let ex = classify(&YoungFunction::ExpMinusOne);
    assert!(!ex.doubling.holds(), "exp must not be doubling");
    assert!(ex.reverse_doubling.holds(), "exp should be reverse-doubling");
    assert!(ex.p_plus.is_infinite(), "exp upper index should be infinite");

    for p in [1.0, 1.5, 2.0, 4.0] {
        let (p_plus, p_minus) = indices(&YoungFunction::Power { p });
        assert!(
            (p_plus.get() - p).abs() <= 1e-3,
            "p+ of power({p}) is {p_plus}"
        );
        assert!(
            (p_minus.get() - p).abs() <= 1e-3,
            "p- of power({p}) is {p_minus}"
        );
    }
}

/// Criterion 3: the classify witnesses transfer to the generalized
/// inverse and to the scaling comparison, 200 sampled points per member.
#[test]
fn criterion_03_witness_transfer() {
    let slack = 1e-9;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for phi in catalog() {
        let cls = classify(&phi);
        // doubling witness: Phi^-1(k u) >= 2 Phi^-1(u)
        if let Some(w) = cls.doubling.witness() {
            for &u in &log_points(1e-6, 1e6, 200) {
                let lhs = gen_inverse_f(&phi, w.k * u);
                let rhs = gen_inverse_f(&phi, u);
                assert!(
                    lhs >= ext(2.0 * rhs.get() * (1.0 - slack)),
                    "{}: Phi^-1({}u) < 2 Phi^-1(u) at u = {u}",
                    cls.label,
                    w.k
                );
            }
        }
        // reverse-doubling witness: Phi^-1(2k u) <= k Phi^-1(u) at heights
        // u = Phi(r) sampled from the witness range
        if let Some(w) = cls.reverse_doubling.witness() {
            for &r in &log_points(w.from_scale.max(1e-6), 1e6, 200) {
                let u = phi.eval(r);
                if !u.is_finite() || u.is_zero() {
                    continue;
                }
                let lhs = gen_inverse_f(&phi, 2.0 * w.k * u.get());
                assert!(
                    lhs <= ext(w.k * r * (1.0 + slack)),
                    "{}: Phi^-1(2ku) > k r at r = {r}",
                    cls.label
                );
            }
        }
        // scaling comparison from a global doubling witness: with
        // q = log2(k), the map t -> Phi^-1(1/t)^{-q}/t is k-almost
        // decreasing; 200 sampled ordered pairs
        if let Some(w) = cls.doubling.global_witness() {
            let q = w.k.log2();
            let weighted = |t: f64| gen_inverse_f(&phi, 1.0 / t).get().powf(-q) / t;
            for _ in 0..200 {
                let a = log_uniform(&mut rng, 1e-4, 1e4);
                let b = log_uniform(&mut rng, 1e-4, 1e4);
                let (t, s) = (a.min(b), a.max(b));
                assert!(
                    weighted(t) <= w.k * weighted(s) * (1.0 + slack),
                    "{}: scaling comparison fails at t = {t}, s = {s}",
                    cls.label
                );
            }
        }
    }
}

/// Criterion 4: the growth rescaling keeps the structural invariants, its
/// indices multiply by theta within 1e-2, and the theta = 1 transform
/// sandwiches the original at 100 points.
#[test]
fn criterion_04_growth_rescaling() {
    let cases = [
        (YoungFunction::Power { p: 2.0 }, 1.0),
        (YoungFunction::Power { p: 2.0 }, 2.0),
        (YoungFunction::PowerLog, 1.0),
    ];
    for (base, theta) in cases {
        let scaled = phi_theta(base.clone(), theta).expect("theta above hypothesis");
        check_invariants(&scaled).expect("rescaled function passes invariants");
        let (bp_plus, bp_minus) = indices(&base);
        let (sp_plus, sp_minus) = indices(&scaled);
        let tol = 1e-2;
        assert!(
            theta * bp_minus.get() <= sp_minus.get() + tol,
            "{} theta {theta}: lower index sandwich fails: {} vs {}",
            base.label(),
            theta * bp_minus.get(),
            sp_minus
        );
        assert!(
            sp_minus <= sp_plus,
            "{} theta {theta}: indices out of order",
            base.label()
        );
        assert!(
            sp_plus.get() <= theta * bp_plus.get() + tol,
            "{} theta {theta}: upper index sandwich fails: {} vs {}",
            base.label(),
            sp_plus,
            theta * bp_plus.get()
        );
    }
    // Phi_1(r) <= Phi(r) <= Phi_1(2r)
    for base in [YoungFunction::Power { p: 2.0 }, YoungFunction::PowerLog] {
        let one = phi_theta(base.clone(), 1.0).expect("theta = 1 is admissible");
        for &r in &log_points(1e-3, 1e3, 100) {
            let lo = one.eval(r);
            let mid = base.eval(r);
            let hi = one.eval(2.0 * r);
            let slack = ext(1.0 + 1e-8);
            assert!(
                lo <= mid.mul(slack),
                "{}: Phi_1({r}) = {lo} above Phi({r}) = {mid}",
                base.label()
            );
            assert!(
                mid <= hi.mul(slack),
                "{}: Phi({r}) = {mid} above Phi_1(2r) = {hi}",
                base.label()
            );
        }
    }
}

/// Criterion 5: indicator closed forms. Weak norm equals the inverse
/// closed form to 1e-10; the deadzone Lorentz q = 1 value is
/// log(1 + |E|) to 1e-6; the exponential member diverges at q = 1; the
/// q^{-1/q} lower bound is never violated.
#[test]
fn criterion_05_indicator_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let measures: Vec<f64> = (0..50).map(|_| log_uniform(&mut rng, 1e-4, 1e4)).collect();
    for phi in catalog() {
        for &m in &measures {
            let f = MeasureStepFunction::indicator(m);
            let weak = weak_norm(&phi, &f).expect("weak norm evaluates");
            let closed = characteristic_norm(&phi, m);
            assert!(
                rel_close(weak.value.get(), closed.get(), 1e-10),
                "{}: weak indicator norm {} vs closed form {closed} at |E| = {m}",
                phi.label(),
                weak.value
            );
        }
    }
    let deadzone = YoungFunction::Deadzone;
    for &m in &measures {
        let f = MeasureStepFunction::indicator(m);
        let got = lorentz_norm(
            &WeightFunction::OrliczEquivalent { phi: deadzone.clone() },
            ExtReal::ONE,
            &f,
        )
        .expect("deadzone Lorentz norm evaluates");
        let want = (1.0 + m).ln();
        assert!(
            rel_close(got.value.get(), want, 1e-6),
            "deadzone: got {} want log(1+{m}) = {want}",
            got.value
        );
    }
    for &m in &[1e-3, 1.0, 1e3] {
        let f = MeasureStepFunction::indicator(m);
        let got = lorentz_norm(
            &WeightFunction::OrliczEquivalent { phi: YoungFunction::ExpMinusOne },
            ExtReal::ONE,
            &f,
        )
        .expect("exp Lorentz norm evaluates");
        assert!(
            got.value.is_infinite(),
            "exp indicator at q = 1 should diverge, got {}",
            got.value
        );
    }
    for phi in catalog() {
        for &q in &[1.0, 1.5, 2.0, 4.0] {
            for &m in &measures[..10] {
                let b = char_norm_bounds(&phi, q, m).expect("bounds evaluate");
                // the bound is achieved with equality for t at q = 1, so
                // judge violations against the certified upper end of the
                // quadrature interval rather than its midpoint
                assert!(
                    b.computed.upper >= ext(b.lower * (1.0 - 1e-12)),
                    "{}: q = {q}, |E| = {m}: certified upper {} below lower bound {}",
                    phi.label(),
                    b.computed.upper,
                    b.lower
                );
            }
        }
    }
}

/// Criterion 6: the three weak-norm evaluators agree to 1e-8 relative on
/// 100 random step functions per catalog member, under 30 s.
#[test]
fn criterion_06_weak_norm_evaluators_agree() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let f = random_step(&mut rng);
        for phi in catalog() {
            let three = weak_norms(&phi, &f).expect("weak norms evaluate");
            let a = three.modular.value.get();
            let b = three.inverse_level.value.get();
            let c = three.rearrangement.value.get();
            assert!(
                rel_close(a, b, 1e-8) && rel_close(b, c, 1e-8) && rel_close(a, c, 1e-8),
                "{}: evaluators disagree: {a} / {b} / {c}",
                phi.label()
            );
        }
    }
    assert!(
        start.elapsed().as_secs_f64() < 30.0,
        "weak agreement sweep took {:?}",
        start.elapsed()
    );
}

/// Criterion 7: the pairing chain holds on 100 random grid pairs for the
/// three designated members, with certified quadrature slack.
#[test]
fn criterion_07_pairing_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let phis = [
        YoungFunction::Power { p: 1.5 },
        YoungFunction::Power { p: 2.0 },
        YoungFunction::PowerLog,
    ];
    for _ in 0..100 {
        let f = random_grid(&mut rng);
        let g = values_like(&mut rng, &f);
        for phi in &phis {
            let chain = pairing_checks(phi, &f, &g).expect("chain evaluates");
            assert!(
                chain.holds(1e-9),
                "{}: pairing chain fails: inner {} rearranged {} bound {}",
                phi.label(),
                chain.inner_product,
                chain.rearranged,
                chain.bound
            );
        }
    }
}

/// Criterion 8: exact and oracle maximal evaluation agree to 1e-12 on 100
/// random grids, and the indicator closed form (1/(1-x), 1, 1/x) is
/// reproduced at the cell midpoints.
#[test]
fn criterion_08_maximal_agreement_and_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let f = random_grid(&mut rng);
        let fast = maximal_1d(&f, MaximalMode::Exact).expect("exact mode runs");
        let slow = maximal_1d(&f, MaximalMode::Oracle).expect("oracle mode runs");
        for (a, b) in fast.values().iter().zip(slow.values()) {
            assert!(
                rel_close(*a, *b, 1e-12),
                "maximal modes disagree: {a} vs {b}"
            );
        }
    }
    // chi_[0,1] on a dyadic grid over [-2, 3]
    let h = 0.125;
    let values: Vec<f64> = (0..40)
        .map(|i| {
            let left = -2.0 + i as f64 * h;
            if left >= 0.0 && left < 1.0 { 1.0 } else { 0.0 }
        })
        .collect();
    let chi = GridFunction1D::new(-2.0, h, values).expect("valid grid");
    let m = maximal_1d(&chi, MaximalMode::Exact).expect("exact mode runs");
    for (i, &got) in m.values().iter().enumerate() {
        let x = -2.0 + (i as f64 + 0.5) * h;
        let want = if x < 0.0 {
            1.0 / (1.0 - x)
        } else if x <= 1.0 {
            1.0
        } else {
            1.0 / x
        };
        assert!(
            (got - want).abs() <= h,
            "indicator maximal at x = {x}: got {got}, closed form {want}"
        );
    }
}

/// Criterion 9: weight criteria. The square-root power weight at q = 2
/// meets its closed-form supremum 1/(p-1) = 1 within 1e-4; the linear
/// weight diverges; inverse-derived weights of reverse-doubling members
/// stay finite under both criteria.
#[test]
fn criterion_09_weight_criteria() {
    let radii = log_points(1e-3, 1e3, 21);
    for (p, q) in [(2.0, 2.0), (1.5, 2.0), (4.0, 3.0)] {
        let w = WeightFunction::Power { alpha: 1.0 / p };
        let report = weight_criterion_q(&w, q, &radii).expect("criterion evaluates");
        let want = 1.0 / (p - 1.0);
        assert!(
            report.sup_ratio.is_finite()
                && (report.sup_ratio.get() - want).abs() <= 1e-4 * want.max(1.0),
            "alpha = 1/{p}, q = {q}: sup ratio {} vs closed form {want}",
            report.sup_ratio
        );
    }
    let linear = WeightFunction::Power { alpha: 1.0 };
    let report = weight_criterion_q(&linear, 2.0, &radii).expect("criterion evaluates");
    assert!(
        report.sup_ratio.is_infinite(),
        "linear weight should diverge, got {}",
        report.sup_ratio
    );
    // inverse-derived weights: finite under both criteria for members
    // whose reverse-doubling witness covers all scales
    for p in [1.5, 2.0, 4.0] {
        let phi = YoungFunction::Power { p };
        let w = WeightFunction::OrliczEquivalent { phi: phi.clone() };
        for &q in &[1.0, 2.0] {
            let report = weight_criterion_q(&w, q, &radii).expect("criterion evaluates");
            assert!(
                report.sup_ratio.is_finite(),
                "{}: integral criterion diverges at q = {q}",
                phi.label()
            );
        }
        let balance = weight_balance_sup(&w, &radii).expect("balance evaluates");
        assert!(
            balance.is_finite(),
            "{}: balance criterion diverges",
            phi.label()
        );
    }
    // the exponential member is reverse-doubling only from a scale up: its
    // induced weight is linear near infinity, so the q-tail diverges there
    // while the balance quantity stays finite at each fixed radius
    let exp_w = WeightFunction::OrliczEquivalent { phi: YoungFunction::ExpMinusOne };
    let exp_tail = weight_criterion_q(&exp_w, 1.0, &[1.0]).expect("criterion evaluates");
    assert!(
        exp_tail.sup_ratio.is_infinite(),
        "exp-induced weight should diverge in its linear regime, got {}",
        exp_tail.sup_ratio
    );
    for &r in &[1.0, 10.0, 1e3] {
        let b = weight_balance_sup(&exp_w, &[r]).expect("balance evaluates");
        assert!(b.is_finite(), "exp-induced balance at r = {r} should be finite, got {b}");
    }
}

/// Criterion 10: a fresh 200-function corpus stays inside the frozen
/// calibration band, and the indicator anchor ratio at t = |E| is 1
/// within grid resolution.
#[test]
fn criterion_10_herz_regression() {
    let cfg = SuiteConfig {
        seed: 42,
        suites: vec!["herz-band".to_string()],
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg).expect("herz suite runs");
    assert!(report.pass, "fresh corpus left the frozen band:\n{}", report.to_json());

    let chi = GridFunction1D::new(0.0, 1.0 / 64.0, vec![1.0; 64]).expect("valid grid");
    let anchored = herz_ratio(&chi, &[1.0]).expect("ratio evaluates");
    assert!(
        (anchored[0].1 - 1.0).abs() <= 0.02,
        "indicator anchor ratio at t = 1: {}",
        anchored[0].1
    );
}

/// Criterion 11: aggregated maximal constants are finite and seed-stable
/// for the hypotheses-satisfying members (sup aggregate for the
/// reverse-doubling catalog, square-sum aggregate for power members up to
/// 32 components), and the linear member's strong-scale ratio grows
/// monotonically across window spans 10, 100, 1000. Under 5 minutes.
#[test]
fn criterion_11_aggregated_maximal_constants() {
    let start = Instant::now();
    let base = CorpusSpec {
        seed: 1,
        families: 20,
        members: 32,
        ..CorpusSpec::default()
    };
    // sup aggregate across member counts for one member, then the full
    // reverse-doubling roster at the largest count
    for members in [1, 2, 8, 32] {
        let spec = CorpusSpec { members, ..base.clone() };
        let est = estimate_constant(&YoungFunction::Power { p: 2.0 }, ExtReal::INFINITY, &spec)
            .expect("hypotheses hold");
        assert!(est.constant.is_finite() && est.constant > 0.0);
        assert!(
            (0.5..=2.0).contains(&est.stability),
            "power(2) sup, {members} members: stability {}",
            est.stability
        );
    }
    for phi in [
        YoungFunction::Power { p: 1.5 },
        YoungFunction::Power { p: 4.0 },
        YoungFunction::ExpMinusOne,
    ] {
        let est = estimate_constant(&phi, ExtReal::INFINITY, &base).expect("hypotheses hold");
        assert!(est.constant.is_finite() && est.constant > 0.0);
        assert!(
            (0.5..=2.0).contains(&est.stability),
            "{} sup aggregate: stability {}",
            phi.label(),
            est.stability
        );
    }
    // square-sum aggregate for power members
    for p in [1.5, 2.0, 3.0] {
        for members in [8, 32] {
            let spec = CorpusSpec { members, ..base.clone() };
            let est = estimate_constant(
                &YoungFunction::Power { p },
                ExtReal::new(2.0).expect("2 is a valid exponent"),
                &spec,
            )
            .expect("hypotheses hold");
            assert!(est.constant.is_finite() && est.constant > 0.0);
            assert!(
                (0.5..=2.0).contains(&est.stability),
                "power({p}) square-sum, {members} members: stability {}",
                est.stability
            );
        }
    }
    // negative control: the linear member is unbounded on the strong
    // scale; its windowed ratio grows with the span. Sample the maximal
    // function once on the widest window and integrate nested sub-windows
    // so the near-field discretization error cancels.
    let flat = GridFunction1D::new(0.0, 0.125, vec![1.0; 8]).expect("valid grid");
    let pyramid = GridFunction1D::new(
        0.0,
        0.0625,
        (0..16)
            .map(|i: usize| (2.0f64).powi(i.min(15 - i) as i32))
            .collect(),
    )
    .expect("valid grid");
    let spans = [10.0, 100.0, 1000.0];
    let mut ratios = vec![0.0f64; spans.len()];
    for f in [&flat, &pyramid] {
        let m = maximal_window(f, spans[2], 4096).expect("window evaluates");
        for (slot, &span) in ratios.iter_mut().zip(&spans) {
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
    assert!(
        ratios[0] < ratios[1] && ratios[1] < ratios[2],
        "linear strong-scale ratios fail to grow: {ratios:?}"
    );
    assert!(
        start.elapsed().as_secs_f64() < 300.0,
        "constant sweep took {:?}",
        start.elapsed()
    );
}
