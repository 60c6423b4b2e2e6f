//! The `reesmult` command-line front end.
//!
//! Ideals are given with `-i` as inline JSON (`{"nvars":2,"generators":[[2,0],[0,3]]}`
//! or just the generator rows `[[2,0],[0,3]]`) or as a path to a JSON file;
//! local models likewise with `-m`. Rationals are always `p/q` strings.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypersurface::{verify_local_decomposition, LocalBox, LocalHypersurfaceModel};
use crate::ideals::{self, JumpReport, MonomialIdeal, MonomialModule};
use crate::lattice::{format_inequality, ExponentVector, HalfSpace, LatticeBox, RationalVector};
use crate::num::{self, parse_rational, Rational};
use crate::rees::{self, GradedToricAlgebra};
use crate::report::{ReportBox, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "reesmult", version, about = "Multiplier modules of monomial ideals and their Rees algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct IdealArg {
    /// Inline JSON or a path to a JSON file.
    #[arg(short = 'i', long = "input")]
    ideal: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    /// R[at]
    Rees,
    /// R[at, 1/t]
    Extended,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irredundant facets of the Newton polyhedron.
    Newton(IdealArg),
    /// Multiplier module J(omega, a^lambda) or multiplier ideal J(a^lambda).
    Multiplier {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Report the multiplier module (default).
        #[arg(long, conflicts_with = "ideal_version")]
        module: bool,
        /// Report the multiplier ideal instead.
        #[arg(long = "ideal")]
        ideal_version: bool,
    },
    /// Log canonical threshold.
    Lct(IdealArg),
    /// Jumping numbers in (0, max].
    Jumps {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, allow_hyphen_values = true)]
        max: String,
        /// Upper corner U of the box [0, U]^n.
        #[arg(long = "box")]
        bounds: Option<i64>,
    },
    /// Canonical module of the (extended) Rees algebra.
    Canonical {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Extended)]
        algebra: AlgebraArg,
    },
    /// Cone model of the Rees algebra R[at].
    ReesCone(IdealArg),
    /// Cone model of the extended Rees algebra R[at, 1/t].
    ExtReesCone(IdealArg),
    /// A t-degree slice of J(omega_T, (1/t)^lambda) or of J(omega_S, (aS)^lambda).
    GradedPiece {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Extended)]
        algebra: AlgebraArg,
    },
    /// Run a verifier; exits 0 when it holds and 1 when it does not.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Graded decomposition of the Rees multiplier module.
    #[value(name = "B1")]
    B1,
    /// Graded decomposition of the extended Rees multiplier module.
    #[value(name = "B2")]
    B2,
    /// Pair rationality: T <=> (R and S).
    #[value(name = "A")]
    A,
    /// Section identity on the local model xy = s^a.
    #[value(name = "local")]
    Local,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Ideal as JSON, a generator-rows array, or a file path (B1, B2, A)
    #[arg(short = 'i', long = "input")]
    ideal: Option<String>,
    /// Local model as JSON {"n","m","exps"} or a file path (local)
    #[arg(short = 'm', long = "model")]
    model: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    lambda: String,
    /// Degree range lo..hi (t-degrees for B2 and local, n for B1).
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Upper corner U of the box [0, U]^n (for local: the bound on s-exponents).
    #[arg(long = "box")]
    bounds: Option<i64>,
    /// Bound on x and y exponents for the local model.
    #[arg(long)]
    deg: Option<i64>,
    /// Replace a non-normal ideal by its integral closure.
    #[arg(long)]
    closure: bool,
}

/// Runs the binary with the process arguments; returns the exit code.
pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Runs with explicit arguments (the first is the program name).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => match emit(&cli, &outcome.text, &outcome.json) {
            Ok(()) => outcome.code,
            Err(e) => report_error(&e),
        },
        Err(e) => report_error(&e),
    }
}

fn report_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    if matches!(e, Error::Domain(m) if m.contains("ideal not normal")) {
        eprintln!("hint: pass --closure to replace a by its integral closure");
    }
    e.exit_code()
}

struct Outcome {
    json: String,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok<T: Serialize>(value: &T, text: String) -> Result<Outcome> {
        Ok(Outcome { json: to_json(value)?, text, code: 0 })
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

fn emit(cli: &Cli, text: &str, json: &str) -> Result<()> {
    let body = match cli.format {
        Format::Json => json,
        Format::Text => text,
    };
    match &cli.output {
        Some(path) => fs::write(path, format!("{body}\n"))
            .map_err(|e| Error::Resource(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{body}").map_err(|e| Error::Resource(format!("cannot write output: {e}")))
        }
    }
}

fn read_source(src: &str) -> Result<String> {
    let trimmed = src.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(src.to_string());
    }
    fs::read_to_string(src).map_err(|e| Error::Parse(format!("cannot read {src}: {e}")))
}

fn parse_json(src: &str) -> Result<Value> {
    serde_json::from_str(&read_source(src)?).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

#[derive(Deserialize)]
struct RawIdeal {
    nvars: Option<usize>,
    generators: Vec<ExponentVector>,
}

/// Parses an ideal; malformed JSON is a parse error, an empty or
/// inconsistent generator list a domain error.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let raw: RawIdeal = match parse_json(src)? {
        Value::Array(rows) => RawIdeal {
            nvars: None,
            generators: serde_json::from_value(Value::Array(rows))
                .map_err(|e| Error::Parse(format!("invalid generator rows: {e}")))?,
        },
        v => serde_json::from_value(v).map_err(|e| Error::Parse(format!("invalid ideal: {e}")))?,
    };
    match raw.nvars {
        Some(n) => MonomialIdeal::new(n, raw.generators),
        None => ideals::minimalize(raw.generators),
    }
}

/// Parses a local model `{"n":..,"m":..,"exps":[..]}`.
pub fn parse_model(src: &str) -> Result<LocalHypersurfaceModel> {
    #[derive(Deserialize)]
    struct Raw {
        n: usize,
        m: usize,
        exps: Vec<i64>,
    }
    let raw: Raw = serde_json::from_value(parse_json(src)?).map_err(|e| Error::Parse(format!("invalid model: {e}")))?;
    LocalHypersurfaceModel::new(raw.n, raw.m, raw.exps)
}

/// Parses `lo..hi` (either bound may be negative).
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected a range lo..hi, got {s:?}")))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad range bound {t:?}")));
    Ok((p(lo)?, p(hi)?))
}

fn parse_lambda(s: &str) -> Result<Rational> {
    let q = parse_rational(s)?;
    if q < Rational::from_integer(0.into()) {
        return Err(Error::Domain(format!("lambda must be nonnegative, got {}", num::format_rational(&q))));
    }
    Ok(q)
}

fn warn_unit(a: &MonomialIdeal) {
    if a.is_unit() {
        eprintln!("warning: ht(a)=0: a is the unit ideal, outside the positive-height hypothesis");
    }
}

#[derive(Serialize)]
struct NewtonOutput<'a> {
    ideal: &'a MonomialIdeal,
    facets: &'a [HalfSpace],
    inequalities: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<&'a [RationalVector]>,
}

#[derive(Serialize)]
struct LctOutput<'a> {
    ideal: &'a MonomialIdeal,
    #[serde(with = "crate::num::serde_rational")]
    lct: Rational,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct JumpsOutput<'a> {
    #[serde(flatten)]
    report: &'a JumpReport,
    #[serde(with = "crate::num::serde_rational_vec")]
    periodicity_failures: Vec<Rational>,
}

fn halfspace_text(h: &HalfSpace) -> String {
    let t = h.threshold();
    if t.is_integer() {
        format_inequality(h.normal(), &t.to_integer())
    } else {
        format!("{}>={}", format_inequality(h.normal(), &0.into()).trim_end_matches(">=0"), num::format_rational(t))
    }
}

fn module_text(m: &MonomialModule) -> String {
    format!("{} {:?}", m.system, m.ambient)
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Newton(input) => {
            let a = parse_ideal(&input.ideal)?;
            warn_unit(&a);
            let p = a.newton()?;
            let inequalities: Vec<String> = p.facets().iter().map(halfspace_text).collect();
            let text = format!("Newt{a}: {}", inequalities.join(", "));
            Outcome::ok(&NewtonOutput { ideal: &a, facets: p.facets(), inequalities, vertices: p.vertices() }, text)
        }
        Command::Multiplier { input, lambda, ideal_version, .. } => {
            let a = parse_ideal(&input.ideal)?;
            let lambda = parse_lambda(lambda)?;
            warn_unit(&a);
            let m = if *ideal_version {
                ideals::multiplier_ideal(&a, &lambda)?
            } else {
                ideals::multiplier_module(&a, &lambda)?
            };
            let text = module_text(&m);
            Outcome::ok(&m, text)
        }
        Command::Lct(input) => {
            let a = parse_ideal(&input.ideal)?;
            let lct = ideals::lct(&a)?;
            let text = format!("lct{a} = {}", num::format_rational(&lct));
            Outcome::ok(&LctOutput { ideal: &a, lct }, text)
        }
        Command::Jumps { input, max, bounds } => {
            let a = parse_ideal(&input.ideal)?;
            let max = parse_lambda(max)?;
            warn_unit(&a);
            let b = bounds.map(|u| LatticeBox::cube(a.nvars(), 0, u)).transpose()?;
            let report = ideals::jumping_numbers(&a, &max, b)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let failures = report.periodicity_failures();
            let jumps: Vec<String> = report.jumps.iter().map(num::format_rational).collect();
            let mut text = format!("jumping numbers of {a} in (0, {}]: {}", num::format_rational(&max), jumps.join(", "));
            if failures.is_empty() {
                text.push_str("\nperiodicity: every jump j <= max-1 has j+1 as a jump");
            } else {
                let f: Vec<String> = failures.iter().map(num::format_rational).collect();
                text.push_str(&format!("\nperiodicity fails at: {}", f.join(", ")));
            }
            Outcome::ok(&JumpsOutput { report: &report, periodicity_failures: failures }, text)
        }
        Command::Canonical { input, algebra } => {
            let a = parse_ideal(&input.ideal)?;
            let alg = build_algebra(&a, *algebra)?;
            let omega = rees::canonical_module(&alg);
            let text = format!("{}: {}", omega.tag, omega.system);
            Outcome::ok(&omega, text)
        }
        Command::ReesCone(input) => algebra_outcome(&parse_ideal(&input.ideal)?, AlgebraArg::Rees),
        Command::ExtReesCone(input) => algebra_outcome(&parse_ideal(&input.ideal)?, AlgebraArg::Extended),
        Command::GradedPiece { input, lambda, k, algebra } => {
            let a = parse_ideal(&input.ideal)?;
            let lambda = parse_lambda(lambda)?;
            let alg = build_algebra(&a, *algebra)?;
            let module = match algebra {
                AlgebraArg::Extended => rees::multiplier_module_principal(&alg, &alg.t_inverse(), &lambda)?,
                AlgebraArg::Rees => rees::multiplier_module_general(&alg, &alg.ideal_generators(), &lambda)?,
            };
            let piece = rees::graded_piece(&module, *k)?;
            let text = format!("[{}]_{k}: {}", module.tag, module_text(&piece));
            Outcome::ok(&piece, text)
        }
        Command::Verify(args) => verify(args),
    }
}

fn build_algebra(a: &MonomialIdeal, kind: AlgebraArg) -> Result<GradedToricAlgebra> {
    warn_unit(a);
    match kind {
        AlgebraArg::Rees => rees::rees_cone(a),
        AlgebraArg::Extended => rees::extended_rees_cone(a),
    }
}

fn algebra_outcome(a: &MonomialIdeal, kind: AlgebraArg) -> Result<Outcome> {
    let alg = build_algebra(a, kind)?;
    let rays: Vec<String> = alg.rays.iter().map(ToString::to_string).collect();
    let text = format!("cone: {}\nrays: {}", alg.cone, rays.join(", "));
    Outcome::ok(&alg, text)
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let lambda = parse_lambda(&args.lambda)?;
    let range = args.k.as_deref().map(parse_range).transpose()?;
    let report = match args.check {
        Check::Local => {
            let src = args.model.as_deref().ok_or_else(|| Error::Parse("verify local needs -m MODEL".into()))?;
            let model = parse_model(src)?;
            let defaults = LocalBox::default();
            let bounds = LocalBox { deg: args.deg.unwrap_or(defaults.deg), c: args.bounds.unwrap_or(defaults.c) };
            verify_local_decomposition(&model, &lambda, bounds, range)?
        }
        check => {
            let src = args.ideal.as_deref().ok_or_else(|| Error::Parse("verify needs -i IDEAL".into()))?;
            let mut a = parse_ideal(src)?;
            warn_unit(&a);
            if args.closure {
                if let Some(k) = a.normality_defect(None)? {
                    eprintln!("notice: a is not normal (closure differs at power {k}); verifying its integral closure instead");
                    a = a.integral_closure()?;
                    if a.normality_defect(None)?.is_some() {
                        eprintln!("notice: the closure itself is not normal");
                    }
                }
            }
            let b = args.bounds.map(|u| LatticeBox::cube(a.nvars(), 0, u)).transpose()?;
            match check {
                Check::B1 => rees::verify_theorem_b_s(&a, &lambda, range, b)?,
                Check::B2 => rees::verify_theorem_b_t(&a, &lambda, range, b)?,
                _ => {
                    if range.is_some() {
                        eprintln!("warning: --k is ignored by verify A");
                    }
                    rees::verify_theorem_a(&a, &lambda, b)?
                }
            }
        }
    };
    let text = report_text(&report);
    Ok(Outcome { json: report.to_json(), text, code: if report.overall { 0 } else { 1 } })
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!("check {} at lambda = {}", r.theorem, num::format_rational(&r.lambda));
    if let Some(a) = &r.ideal {
        s.push_str(&format!(" for a = {a}"));
    }
    if let Some(m) = &r.model {
        s.push_str(&format!(" for {m}"));
    }
    match &r.bounds {
        ReportBox::Lattice(b) => s.push_str(&format!("\nbox: {:?}..{:?}", b.lower, b.upper)),
        ReportBox::Local { deg, c } => s.push_str(&format!("\nbox: deg <= {deg}, c <= {c}")),
    }
    for e in &r.per_k {
        s.push_str(&format!(
            "\n  k={:>3}  lhs={:<6} rhs={:<6} {}",
            e.k,
            e.lhs_count,
            e.rhs_count,
            if e.equal { "equal".to_string() } else { format!("DIFFER at {}", e.witness.as_ref().map_or("?".into(), ToString::to_string)) }
        ));
    }
    if let Some(p) = &r.pairs {
        s.push_str(&format!(
            "\n  R rational: {}\n  S rational: {}\n  T rational: {}",
            p.base.rational, p.rees.rational, p.extended.rational
        ));
    }
    if let Some(inc) = &r.inconclusive {
        if !inc.is_empty() {
            s.push_str(&format!("\ninconclusive k: {inc:?}"));
        }
    }
    if let Some(sym) = r.symbolic_identity {
        s.push_str(&format!("\nthreshold identity: {sym}"));
    }
    s.push_str(&format!("\noverall: {}", r.overall));
    s
}
