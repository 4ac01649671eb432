//! Command-line front end for the orlicz-kit library.
//!
//! Subcommands map one-to-one onto library entry points: `norm` evaluates
//! quasi-norms of grid functions, `conjugate` samples or emits the convex
//! conjugate, `classify` reports endpoints with growth indices and
//! doubling flags, `maximal` evaluates maximal operators, `fs-constant`
//! measures aggregated maximal constants over a seeded corpus, and
//! `verify` runs the named check suites.
//!
//! Output is JSON by default, CSV with `--format csv`. Exit codes: 0 on
//! success or a passing report, 1 when a check or hypothesis fails, 2 on
//! usage errors (including malformed input files, which are reported with
//! a line/column diagnostic). `ORLICZ_KIT_TOL` scales the verification
//! tolerances (default 1.0).

mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use orlicz_kit::error::Error;
use orlicz_kit::extreal::{parse_ext_real, ExtReal};
use orlicz_kit::grid::{GridFieldND, GridFunction1D};
use orlicz_kit::maximal::{dyadic_maximal, maximal_1d, MaximalMode};
use orlicz_kit::norms::{lorentz_norm, luxemburg, orlicz_lorentz_norm, weak_norm, NormResult};
use orlicz_kit::verify::{all_suites, estimate_constant, run_suite, CorpusSpec, SuiteConfig};
use orlicz_kit::young::{classify, phi_theta, Flag, YoungFunction};

#[derive(Parser)]
#[command(name = "orlicz-kit", version, about = "Young-function calculus, Orlicz-scale norms, maximal operators, and verification suites")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a quasi-norm of a grid function.
    Norm(NormArgs),
    /// Sample the convex conjugate, or emit its description JSON.
    Conjugate(ConjugateArgs),
    /// Report endpoints, growth indices, and doubling flags.
    Classify(ClassifyArgs),
    /// Evaluate a maximal operator over a grid function.
    Maximal(MaximalArgs),
    /// Measure the aggregated maximal constant over a seeded corpus.
    FsConstant(FsConstantArgs),
    /// Run verification suites and report pass/fail per suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct NormArgs {
    /// Young-function description: inline JSON or a path to a JSON file.
    #[arg(long)]
    phi: Option<String>,
    /// Grid CSV: rows `x,value` over uniform cells (left edges).
    #[arg(long)]
    f: String,
    /// Function scale to evaluate in.
    #[arg(long, value_enum)]
    space: Space,
    /// Secondary exponent for the Lorentz scales: a real >= 1 or `inf`.
    #[arg(long)]
    q: Option<String>,
    /// Weight description for the generalized Lorentz scale.
    #[arg(long)]
    weight: Option<String>,
    /// Growth rescaling applied to the Young function before use.
    #[arg(long)]
    theta: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Space {
    Luxemburg,
    Weak,
    Lorentz,
    GenLorentz,
}

#[derive(Args)]
struct ConjugateArgs {
    /// Young-function description: inline JSON or a path to a JSON file.
    #[arg(long)]
    phi: String,
    /// Growth rescaling applied before conjugation.
    #[arg(long)]
    theta: Option<f64>,
    /// Emit the conjugate's description JSON instead of samples.
    #[arg(long)]
    emit_desc: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Young-function description: inline JSON or a path to a JSON file.
    #[arg(long)]
    phi: String,
    /// Growth rescaling applied before classification.
    #[arg(long)]
    theta: Option<f64>,
}

#[derive(Args)]
struct MaximalArgs {
    /// Grid CSV: rows `x,value` over uniform cells (left edges).
    #[arg(long)]
    f: String,
    /// Evaluation mode; `dyadic` needs a power-of-two cell count.
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    Exact,
    Oracle,
    Dyadic,
}

#[derive(Args)]
struct FsConstantArgs {
    /// Young-function description: inline JSON or a path to a JSON file.
    #[arg(long)]
    phi: String,
    /// Aggregation exponent: a real >= 1 or `inf`.
    #[arg(long)]
    q: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vector-field families in the corpus.
    #[arg(long, default_value_t = 50)]
    families: usize,
    /// Components per family.
    #[arg(long, default_value_t = 8)]
    members: usize,
    /// Cells per axis (power of two).
    #[arg(long, default_value_t = 64)]
    side: usize,
    /// Ratio between the largest and smallest cell volumes drawn.
    #[arg(long, default_value_t = 100.0)]
    scale_span: f64,
    /// Measure even when the doubling hypotheses fail.
    #[arg(long)]
    allow_unverified: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suite ids, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Domain(_) | Error::Precondition(_) => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Norm(args) => cmd_norm(args, cli.format),
        Command::Conjugate(args) => cmd_conjugate(args, cli.format),
        Command::Classify(args) => cmd_classify(args, cli.format),
        Command::Maximal(args) => cmd_maximal(args, cli.format),
        Command::FsConstant(args) => cmd_fs_constant(args, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
    }
}

// ---------------------------------------------------------------------------
// shared pieces
// ---------------------------------------------------------------------------

fn load_phi(arg: &str, theta: Option<f64>) -> Result<YoungFunction, CliError> {
    let phi = input::load_young(arg)?;
    match theta {
        Some(theta) => Ok(phi_theta(phi, theta)?),
        None => Ok(phi),
    }
}

fn parse_q(text: &str) -> Result<ExtReal, CliError> {
    let q = parse_ext_real(text)
        .map_err(|_| CliError::usage(format!("--q expects a real >= 1 or `inf`, got {text:?}")))?;
    if q < ExtReal::ONE {
        return Err(CliError::usage(format!("--q must be at least 1, got {q}")));
    }
    Ok(q)
}

fn ext_text(v: ExtReal) -> String {
    if v.is_finite() {
        format!("{}", v.get())
    } else {
        "inf".to_string()
    }
}

fn json_line(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

fn render_norm(result: &NormResult, format: Format) -> String {
    match format {
        Format::Json => {
            let mut text =
                serde_json::to_string_pretty(result).expect("norm result serializes");
            text.push('\n');
            text
        }
        Format::Csv => {
            format!(
                "value,lower,upper,method\n{},{},{},{}\n",
                ext_text(result.value),
                result.lower,
                ext_text(result.upper),
                result.method
            )
        }
    }
}

fn cmd_norm(args: NormArgs, format: Format) -> Result<Output, CliError> {
    let f = input::read_grid_csv(&args.f)?.to_step();
    let need_phi = || -> Result<YoungFunction, CliError> {
        let desc = args
            .phi
            .as_deref()
            .ok_or_else(|| CliError::usage("this space needs --phi"))?;
        load_phi(desc, args.theta)
    };
    let need_q = || -> Result<ExtReal, CliError> {
        parse_q(
            args.q
                .as_deref()
                .ok_or_else(|| CliError::usage("the Lorentz scales need --q"))?,
        )
    };
    let result = match args.space {
        Space::Luxemburg | Space::Weak => {
            if args.q.is_some() {
                return Err(CliError::usage("--q only applies to the Lorentz scales"));
            }
            if args.weight.is_some() {
                return Err(CliError::usage("--weight only applies to gen-lorentz"));
            }
            let phi = need_phi()?;
            if args.space == Space::Luxemburg {
                luxemburg(&phi, &f)?
            } else {
                weak_norm(&phi, &f)?
            }
        }
        Space::Lorentz => {
            if args.weight.is_some() {
                return Err(CliError::usage("--weight only applies to gen-lorentz"));
            }
            orlicz_lorentz_norm(&need_phi()?, need_q()?, &f)?
        }
        Space::GenLorentz => {
            if args.phi.is_some() {
                return Err(CliError::usage(
                    "gen-lorentz takes --weight (use kind orlicz_equivalent to derive one from a Young function)",
                ));
            }
            let desc = args
                .weight
                .as_deref()
                .ok_or_else(|| CliError::usage("gen-lorentz needs --weight"))?;
            lorentz_norm(&input::load_weight(desc)?, need_q()?, &f)?
        }
    };
    Ok(Output::ok(render_norm(&result, format)))
}

fn cmd_conjugate(args: ConjugateArgs, format: Format) -> Result<Output, CliError> {
    let conj = load_phi(&args.phi, args.theta)?.conjugate();
    if args.emit_desc {
        let mut text =
            serde_json::to_string_pretty(&conj).expect("description serializes");
        text.push('\n');
        return Ok(Output::ok(text));
    }
    let points: Vec<f64> = (0..25)
        .map(|i| 1e-4 * (1e8f64).powf(i as f64 / 24.0))
        .collect();
    match format {
        Format::Json => {
            let samples: Vec<serde_json::Value> = points
                .iter()
                .map(|&t| json!({ "t": t, "value": conj.eval(t) }))
                .collect();
            Ok(Output::ok(json_line(&json!({
                "label": conj.label(),
                "samples": samples,
            }))))
        }
        Format::Csv => {
            let mut text = String::from("t,value\n");
            for &t in &points {
                let _ = writeln!(text, "{t},{}", ext_text(conj.eval(t)));
            }
            Ok(Output::ok(text))
        }
    }
}

fn flag_entry(flag: &Flag) -> (serde_json::Value, serde_json::Value) {
    match flag {
        Flag::Holds { witness } => (
            json!(true),
            json!({ "k": witness.k, "from_scale": witness.from_scale }),
        ),
        Flag::Fails => (json!(false), serde_json::Value::Null),
        Flag::Unknown => (serde_json::Value::Null, serde_json::Value::Null),
    }
}

fn flag_text(flag: &Flag) -> &'static str {
    match flag {
        Flag::Holds { .. } => "true",
        Flag::Fails => "false",
        Flag::Unknown => "unknown",
    }
}

fn cmd_classify(args: ClassifyArgs, format: Format) -> Result<Output, CliError> {
    let phi = load_phi(&args.phi, args.theta)?;
    let c = classify(&phi);
    match format {
        Format::Json => {
            let (delta2, delta2_witness) = flag_entry(&c.doubling);
            let (nabla2, nabla2_witness) = flag_entry(&c.reverse_doubling);
            Ok(Output::ok(json_line(&json!({
                "label": c.label,
                "a": c.a,
                "b": c.b,
                "delta2": delta2,
                "delta2_witness": delta2_witness,
                "nabla2": nabla2,
                "nabla2_witness": nabla2_witness,
                "p_plus": c.p_plus,
                "p_minus": c.p_minus,
            }))))
        }
        Format::Csv => Ok(Output::ok(format!(
            "label,a,b,delta2,nabla2,p_plus,p_minus\n{},{},{},{},{},{},{}\n",
            c.label,
            c.a,
            ext_text(c.b),
            flag_text(&c.doubling),
            flag_text(&c.reverse_doubling),
            ext_text(c.p_plus),
            ext_text(c.p_minus),
        ))),
    }
}

fn render_grid(g: &GridFunction1D, format: Format) -> String {
    match format {
        Format::Json => json_line(&json!({
            "origin": g.origin(),
            "cell_width": g.cell_width(),
            "values": g.values(),
        })),
        Format::Csv => {
            let mut text = String::from("x,value\n");
            for (i, v) in g.values().iter().enumerate() {
                let _ = writeln!(text, "{},{v}", g.origin() + i as f64 * g.cell_width());
            }
            text
        }
    }
}

fn cmd_maximal(args: MaximalArgs, format: Format) -> Result<Output, CliError> {
    let f = input::read_grid_csv(&args.f)?;
    let out = match args.mode {
        Mode::Exact => maximal_1d(&f, MaximalMode::Exact)?,
        Mode::Oracle => maximal_1d(&f, MaximalMode::Oracle)?,
        Mode::Dyadic => {
            let field =
                GridFieldND::new(1, f.len(), f.cell_width(), f.values().to_vec())?;
            let m = dyadic_maximal(&field)?;
            GridFunction1D::new(f.origin(), f.cell_width(), m.values().to_vec())?
        }
    };
    Ok(Output::ok(render_grid(&out, format)))
}

fn cmd_fs_constant(args: FsConstantArgs, format: Format) -> Result<Output, CliError> {
    let phi = input::load_young(&args.phi)?;
    let q = parse_q(&args.q)?;
    let spec = CorpusSpec {
        seed: args.seed,
        families: args.families,
        members: args.members,
        side: args.side,
        scale_span: args.scale_span,
        allow_unverified: args.allow_unverified,
    };
    let est = estimate_constant(&phi, q, &spec)?;
    match format {
        Format::Json => {
            let mut text =
                serde_json::to_string_pretty(&est).expect("estimate serializes");
            text.push('\n');
            Ok(Output::ok(text))
        }
        Format::Csv => Ok(Output::ok(format!(
            "constant,stability,families_scored,families_vacuous\n{},{},{},{}\n",
            est.constant, est.stability, est.families_scored, est.families_vacuous
        ))),
    }
}

fn tol_scale_from_env() -> Result<f64, CliError> {
    match std::env::var("ORLICZ_KIT_TOL") {
        Ok(text) => {
            let v: f64 = text.trim().parse().map_err(|_| {
                CliError::usage(format!(
                    "ORLICZ_KIT_TOL expects a positive real, got {text:?}"
                ))
            })?;
            if !v.is_finite() || v <= 0.0 {
                return Err(CliError::usage(format!(
                    "ORLICZ_KIT_TOL must be positive and finite, got {v}"
                )));
            }
            Ok(v)
        }
        Err(_) => Ok(1.0),
    }
}

fn cmd_verify(args: VerifyArgs, format: Format) -> Result<Output, CliError> {
    let suites = if args.suite.trim() == "all" {
        all_suites()
    } else {
        args.suite
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    };
    if suites.is_empty() {
        return Err(CliError::usage("--suite needs at least one suite id"));
    }
    let cfg = SuiteConfig {
        seed: args.seed,
        tol_scale: tol_scale_from_env()?,
        suites,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg)?;
    let text = match format {
        Format::Json => {
            let mut text = report.to_json();
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut text = String::from("id,cases,failures,pass\n");
            for c in &report.checks {
                let _ = writeln!(text, "{},{},{},{}", c.id, c.cases, c.failures, c.pass());
            }
            text
        }
    };
    Ok(Output {
        text,
        failed: !report.pass,
    })
}
