//! The `koebe` command line.
//!
//! Exit codes: `0` success, `1` verification found violations, `2` usage or
//! domain error, `3` output could not be written.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::bounds::{ratio_modulus, two_point_bounds};
use crate::complex_core::{BoundaryPoint, DiskPoint, OrderParameter};
use crate::extremal::{CandidateFunction, CandidateKind};
use crate::format::{fmt_sig, round_sig};
use crate::koebe::{boundary_profile, koebe_radius, MontelConfig};
use crate::verify::{self, VerificationReport, DEFAULT_TOLERANCE};
use crate::KoebeError;

pub const SCHEMA: &str = "koebe/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OUTPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "koebe",
    version,
    about = "Koebe domains and distortion bounds for starlike functions of complex order"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary radius R(θ) of the Montel-normalized Koebe domain.
    Radius(RadiusArgs),
    /// Sample R(θ) on a uniform grid over [0, 2π).
    Boundary(BoundaryArgs),
    /// Two-point bounds on |f(u)/f(v)| with the extremal ratio.
    Bounds(BoundsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OrderArgs {
    /// Real part of the order parameter b.
    #[arg(long = "b-re", default_value_t = 1.0, allow_negative_numbers = true)]
    pub b_re: f64,
    /// Imaginary part of the order parameter b.
    #[arg(long = "b-im", default_value_t = 0.0, allow_negative_numbers = true)]
    pub b_im: f64,
}

impl OrderArgs {
    fn order(&self) -> Result<OrderParameter, KoebeError> {
        OrderParameter::new(Complex64::new(self.b_re, self.b_im))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub theta: f64,
    #[arg(long)]
    pub r0: f64,
    #[command(flatten)]
    pub order: OrderArgs,
    /// Read --theta in degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long)]
    pub r0: f64,
    #[command(flatten)]
    pub order: OrderArgs,
    #[arg(long, default_value_t = 360)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long = "u-re", allow_negative_numbers = true)]
    pub u_re: f64,
    #[arg(long = "u-im", default_value_t = 0.0, allow_negative_numbers = true)]
    pub u_im: f64,
    #[arg(long = "v-re", allow_negative_numbers = true)]
    pub v_re: f64,
    #[arg(long = "v-im", default_value_t = 0.0, allow_negative_numbers = true)]
    pub v_im: f64,
    #[command(flatten)]
    pub order: OrderArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Starlike,
    TwoPoint,
    Growth,
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CandidateArg {
    Identity,
    Extremal,
    Rotated,
}

impl From<CandidateArg> for CandidateKind {
    fn from(c: CandidateArg) -> Self {
        match c {
            CandidateArg::Identity => CandidateKind::Identity,
            CandidateArg::Extremal => CandidateKind::Extremal,
            CandidateArg::Rotated => CandidateKind::RotatedExtremal,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, value_enum, default_value_t = CandidateArg::Extremal)]
    pub candidate: CandidateArg,
    /// Rotation angle of the rotated candidate.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub rotation: f64,
    #[command(flatten)]
    pub order: OrderArgs,
    /// Grid size, pair count, radius count or direction count, by suite.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, env = "KOEBE_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Montel point, required by the limit suite.
    #[arg(long)]
    pub r0: Option<f64>,
    #[arg(long)]
    pub degrees: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

impl Suite {
    fn default_n(self) -> usize {
        match self {
            Suite::Starlike => 64,
            Suite::TwoPoint => 10_000,
            Suite::Growth => 64,
            Suite::Limit => 16,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Output(String),
}

impl From<KoebeError> for Failure {
    fn from(e: KoebeError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Radius(a) => cmd_radius(&a, stdout),
        Command::Boundary(a) => cmd_boundary(&a, stdout),
        Command::Bounds(a) => cmd_bounds(&a, stdout),
        Command::Verify(a) => cmd_verify(&a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Output(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_OUTPUT
        }
    }
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| Failure::Output(format!("cannot write to standard output: {e}")))
}

fn finite(name: &str, x: f64) -> Result<f64, Failure> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Failure::Usage(format!("{name} must be finite")))
    }
}

fn montel(r0: f64, order: &OrderArgs) -> Result<MontelConfig, Failure> {
    let b = order.order()?;
    Ok(MontelConfig::new(r0, b)?)
}

fn cmd_radius(a: &RadiusArgs, stdout: &mut dyn Write) -> CmdResult {
    let cfg = montel(a.r0, &a.order)?;
    let theta = finite("theta", a.theta)?;
    let theta = if a.degrees { theta.to_radians() } else { theta };
    let r = koebe_radius(BoundaryPoint::new(theta), &cfg);
    emit(stdout, &format!("{}\n", fmt_sig(r)))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ComplexRecord {
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct ProfileDocument<'a> {
    schema: &'static str,
    r0: f64,
    b: ComplexRecord,
    samples: &'a [crate::koebe::ProfileSample],
}

/// Recursively round every number to 12 significant digits.
fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if !(n.is_i64() || n.is_u64()) => serde_json::Number::from_f64(round_sig(x))
                .map(Value::Number)
                .unwrap_or(Value::Null),
            _ => Value::Number(n),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let v = serde_json::to_value(doc).expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&round_json(v)).expect("values serialize");
    s.push('\n');
    s
}

pub fn profile_csv(profile: &crate::koebe::KoebeProfile) -> String {
    let mut s = String::from("theta,radius\n");
    for p in &profile.samples {
        s.push_str(&fmt_sig(p.theta));
        s.push(',');
        s.push_str(&fmt_sig(p.radius));
        s.push('\n');
    }
    s
}

pub fn profile_json(profile: &crate::koebe::KoebeProfile) -> String {
    let b = profile.config.order();
    to_json(&ProfileDocument {
        schema: SCHEMA,
        r0: profile.config.r0(),
        b: ComplexRecord {
            re: b.re(),
            im: b.im(),
        },
        samples: &profile.samples,
    })
}

fn cmd_boundary(a: &BoundaryArgs, stdout: &mut dyn Write) -> CmdResult {
    let cfg = montel(a.r0, &a.order)?;
    let profile = boundary_profile(&cfg, a.samples)?;
    let text = match a.format {
        OutputFormat::Csv => profile_csv(&profile),
        OutputFormat::Json => profile_json(&profile),
    };
    match &a.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Output(format!("cannot write {}: {e}", path.display())))?,
        None => emit(stdout, &text)?,
    }
    Ok(EXIT_OK)
}

fn disk_point(name: &str, re: f64, im: f64) -> Result<DiskPoint, Failure> {
    DiskPoint::from_parts(finite(name, re)?, finite(name, im)?)
        .map_err(|_| Failure::Usage(format!("{name} must lie inside the open unit disk")))
}

fn cmd_bounds(a: &BoundsArgs, stdout: &mut dyn Write) -> CmdResult {
    let b = a.order.order()?;
    let u = disk_point("u", a.u_re, a.u_im)?;
    let v = disk_point("v", a.v_re, a.v_im)?;
    let pair = two_point_bounds(u, v, b)?;
    let middle = ratio_modulus(&CandidateFunction::extremal(b), u, v)?;
    emit(
        stdout,
        &format!(
            "{} {} {}\n",
            fmt_sig(pair.lower),
            fmt_sig(middle),
            fmt_sig(pair.upper)
        ),
    )?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema: &'static str,
    #[serde(flatten)]
    report: &'a VerificationReport,
    passed: bool,
}

pub fn report_json(report: &VerificationReport) -> String {
    to_json(&ReportDocument {
        schema: SCHEMA,
        report,
        passed: report.passed(),
    })
}

pub fn report_csv(r: &VerificationReport) -> String {
    format!(
        "suite,candidate,b_re,b_im,n_checks,n_skipped,n_violations,worst_margin,tolerance,seed,passed\n\
         {},{},{},{},{},{},{},{},{},{},{}\n",
        r.suite,
        r.candidate.as_deref().unwrap_or(""),
        fmt_sig(r.b.re),
        fmt_sig(r.b.im),
        r.n_checks,
        r.n_skipped,
        r.n_violations,
        fmt_sig(r.worst_margin),
        fmt_sig(r.tolerance),
        r.seed,
        r.passed()
    )
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> CmdResult {
    let b = a.order.order()?;
    let n = a.n.unwrap_or_else(|| a.suite.default_n());
    let rotation = finite("rotation", a.rotation)?;
    let rotation = if a.degrees {
        rotation.to_radians()
    } else {
        rotation
    };
    let f = CandidateFunction::new(a.candidate.into(), b, rotation)?;
    let report = match a.suite {
        Suite::Starlike => verify::verify_starlikeness(&f, n, a.tol, a.seed)?,
        Suite::TwoPoint => verify::verify_two_point(&f, n, a.seed, a.tol)?,
        Suite::Growth => verify::verify_growth(&f, n, a.tol, a.seed)?,
        Suite::Limit => {
            let r0 =
                a.r0.ok_or_else(|| Failure::Usage("--r0 is required for the limit suite".into()))?;
            verify::verify_limit(&montel(r0, &a.order)?, n, a.tol, a.seed)?
        }
    };
    let text = match a.format {
        OutputFormat::Json => report_json(&report),
        OutputFormat::Csv => report_csv(&report),
    };
    emit(stdout, &text)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    })
}
