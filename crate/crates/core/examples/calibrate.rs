//! Calibration runs behind the frozen constants in the verify module.
//!
//! Prints the observed rearranged-maximal band over several seeds (the
//! basis for the frozen band in the herz suite), the conjugate index
//! values the duality suite asserts against, and per-suite timings for
//! the default configuration.
//!
//!     cargo run --release --example calibrate

use std::time::Instant;

use orlicz_kit::verify::{run_suite, SuiteConfig, SUITE_IDS};
use orlicz_kit::young::{classify, indices, YoungFunction};

fn main() {
    banner("conjugate indices");
    for p in [1.5f64, 2.0, 4.0] {
        let conj = YoungFunction::Power { p }.conjugate();
        let (hi, lo) = indices(&conj);
        let want = p / (p - 1.0);
        println!("conj(t^{p}): p_plus = {hi}, p_minus = {lo}, dual exponent = {want}");
    }
    let base = YoungFunction::PowerLog;
    let (bp, bm) = indices(&base);
    let conj = base.conjugate();
    let (hi, lo) = indices(&conj);
    println!("t log(3+t): p_plus = {bp}, p_minus = {bm}");
    println!(
        "conj(t log(3+t)): p_plus = {hi}, p_minus = {lo}, dual of base p_plus = {}",
        bp.get() / (bp.get() - 1.0)
    );

    banner("power lower indices");
    for p in [1.5f64, 2.0, 4.0] {
        let c = classify(&YoungFunction::Power { p });
        println!(
            "t^{p}: p_minus = {} (error {:.3e})",
            c.p_minus,
            (c.p_minus.get() - p).abs()
        );
    }

    banner("rearranged-maximal ratio extremes across seeds");
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for seed in 0..10u64 {
        let cfg = SuiteConfig {
            seed,
            suites: vec!["herz-band".to_string()],
            ..SuiteConfig::default()
        };
        let report = run_suite(&cfg).expect("herz suite runs");
        let mut seed_lo = f64::NAN;
        let mut seed_hi = f64::NAN;
        for m in &report.checks[0].measured {
            match m.label.as_str() {
                "band low" => seed_lo = m.value.get(),
                "band high" => seed_hi = m.value.get(),
                _ => {}
            }
        }
        lo = lo.min(seed_lo);
        hi = hi.max(seed_hi);
        println!("seed {seed}: [{seed_lo:.4}, {seed_hi:.4}]");
    }
    println!("overall: [{lo:.4}, {hi:.4}]");

    banner("per-suite timing and outcome (default sizes, seed 0)");
    let mut failures = 0usize;
    for id in SUITE_IDS {
        let cfg = SuiteConfig {
            suites: vec![id.to_string()],
            ..SuiteConfig::default()
        };
        let start = Instant::now();
        match run_suite(&cfg) {
            Ok(report) => {
                let c = &report.checks[0];
                failures += c.failures;
                println!(
                    "{:>28}  {:>7.2?}  cases {:>5}  failures {:>3}",
                    id,
                    start.elapsed(),
                    c.cases,
                    c.failures
                );
                for m in &c.measured {
                    println!("{:>32}{} = {}", "", m.label, m.value);
                }
                for n in &c.notes {
                    println!("{:>32}note: {n}", "");
                }
            }
            Err(e) => {
                failures += 1;
                println!("{id:>28}  ERROR: {e}");
            }
        }
    }
    println!("\ntotal assertion failures: {failures}");
}

fn banner(title: &str) {
    println!("\n=== {title} ===");
}
