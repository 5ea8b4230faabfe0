//! The `lspec` command line: argument parsing, output rendering, the result
//! cache and the exit-code contract.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 precision or budget shortfall (partial results are still printed),
//! 4 target orbit-equivalent to `α`.

mod analysis;
mod cf;
pub mod input;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::Field;
use crate::error::Error;
use crate::spectrum::SearchBudget;

pub use verify::Suite;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "lspec", version, about = "Continued fractions and quadratic Lagrange spectra over F_q((1/Y))")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Field order (a prime power); defaults to 3.
    #[arg(long, global = true)]
    pub q: Option<u32>,
    /// Field characteristic, with --ext-degree and --modulus.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    #[arg(long = "ext-degree", global = true)]
    pub ext_degree: Option<u32>,
    /// Irreducible modulus, as `t^2+t+2` or low-to-high coefficients `2,1,1`.
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Entry-degree bound for group enumeration.
    #[arg(long = "degree-bound", global = true, default_value_t = 1)]
    pub degree_bound: usize,
    /// Continued fraction coefficients examined on streamed targets.
    #[arg(long, global = true, default_value_t = 48)]
    pub horizon: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Continued fraction expansions and evaluation.
    #[command(subcommand)]
    Cf(CfCommand),
    /// The approximation constant `c_α(x)`.
    Constant {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        x: String,
        /// Estimate from the first --horizon coefficients of x even when x is quadratic.
        #[arg(long)]
        stream: bool,
    },
    /// A sample of the spectrum of α.
    Spectrum {
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        targets: TargetArgs,
    },
    /// The Hurwitz constant of α with its bounds.
    Hurwitz {
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        targets: TargetArgs,
    },
    /// The constants ℓ, k, κ, m of α and a prefix realizing overlaps of length m.
    Hall {
        #[arg(long)]
        alpha: String,
        /// Overlap length; defaults to m_α.
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, default_value_t = 4)]
        rounds: usize,
    },
    /// Run a verification suite; exit 1 on any mismatch.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        mmax: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CfCommand {
    /// Expansion of P/Q.
    Rational { numerator: String, denominator: String },
    /// Expansion of the root of A x^2 + B x + C closest to --approx.
    Quadratic {
        #[arg(long)]
        minpoly: String,
        /// Series JSON, or a polynomial giving the integral part.
        #[arg(long)]
        approx: String,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
    },
    /// Value of a word: a rational function or a quadratic irrational.
    Eval { word: String },
}

#[derive(Args, Debug, Clone)]
pub struct TargetArgs {
    #[arg(long = "max-degree", default_value_t = 2)]
    pub max_degree: usize,
    #[arg(long = "max-period", default_value_t = 2)]
    pub max_period: usize,
    #[arg(long = "max-targets", default_value_t = 64)]
    pub max_targets: usize,
}

/// Validated configuration shared by all commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: Field,
    pub budget: SearchBudget,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<RunConfig, Error> {
        let field = match (g.q, g.p) {
            (Some(_), Some(_)) => return Err(Error::Parse("give either --q or --p, not both".into())),
            (Some(q), None) => {
                if g.ext_degree.is_some() || g.modulus.is_some() {
                    return Err(Error::Parse("--ext-degree and --modulus go with --p".into()));
                }
                Field::with_order(q)?
            }
            (None, Some(p)) => {
                let modulus = g.modulus.as_deref().map(|m| input::parse_modulus(p, m)).transpose()?;
                Field::new(p, g.ext_degree.unwrap_or(1), modulus)?
            }
            (None, None) => Field::prime(3)?,
        };
        if g.horizon < 2 {
            return Err(Error::Parse("--horizon must be at least 2".into()));
        }
        let budget = SearchBudget { degree_bound: g.degree_bound, stream_horizon: g.horizon, ..SearchBudget::default() };
        Ok(RunConfig { field, budget, format: g.format, seed: g.seed })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.field.p(),
            "ext_degree": self.field.e(),
            "q": self.field.q(),
            "modulus": self.field.modulus(),
            "degree_bound": self.budget.degree_bound,
            "horizon": self.budget.stream_horizon,
            "format": match self.format { Format::Json => "json", Format::Csv => "csv" },
            "seed": self.seed,
        })
    }
}

/// A command's product before rendering.
#[derive(Debug, Default)]
pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    /// CSV header and rows.
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub exit: i32,
}

pub const VALUE_COLUMNS: [&str; 4] = ["alpha_id", "x_id", "exponent", "certificate_kind"];

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidField(_)
        | Error::Domain(_)
        | Error::NotQuadratic
        | Error::NotARoot
        | Error::SizeCap(_)
        | Error::Precondition(_) => 2,
        Error::InsufficientPrecision(_) | Error::RootNotIsolated | Error::BudgetExceeded { .. } => 3,
        Error::OrbitEquivalent => 4,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        2 => "invalid-input",
        3 => "budget",
        _ => "orbit-equivalent",
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Cf(CfCommand::Rational { .. }) => "cf rational",
        Command::Cf(CfCommand::Quadratic { .. }) => "cf quadratic",
        Command::Cf(CfCommand::Eval { .. }) => "cf eval",
        Command::Constant { .. } => "constant",
        Command::Spectrum { .. } => "spectrum",
        Command::Hurwitz { .. } => "hurwitz",
        Command::Hall { .. } => "hall",
        Command::Verify { .. } => "verify",
    }
}

fn dispatch(cfg: &RunConfig, cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Cf(c) => cf::run(cfg, c),
        Command::Constant { alpha, x, stream } => analysis::constant(cfg, alpha, x, *stream),
        Command::Spectrum { alpha, targets } => analysis::spectrum(cfg, alpha, targets),
        Command::Hurwitz { alpha, targets } => analysis::hurwitz(cfg, alpha, targets),
        Command::Hall { alpha, m, rounds } => analysis::hall(cfg, alpha, *m, *rounds),
        Command::Verify { suite, mmax, k, trials } => verify::run(cfg, *suite, *mmax, *k, *trials),
    }
}

fn render(cfg: &RunConfig, header: &Value, out: &Outcome, error: Option<&Error>) -> String {
    match cfg.format {
        Format::Json => {
            let mut doc = json!({"header": header, "result": out.result});
            if let Some(e) = error {
                doc["error"] = json!({"kind": error_kind(e), "message": e.to_string()});
            }
            serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
        }
        Format::Csv => {
            let mut s = format!("# {}\n", serde_json::to_string(header).expect("JSON values serialize"));
            if let Some(e) = error {
                s.push_str(&format!("# error ({}): {}\n", error_kind(e), e));
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            if !out.columns.is_empty() {
                w.write_record(&out.columns).expect("in-memory write");
            }
            for r in &out.rows {
                w.write_record(r).expect("in-memory write");
            }
            s.push_str(&String::from_utf8(w.into_inner().expect("in-memory write")).expect("UTF-8 rows"));
            s
        }
    }
}

fn cacheable(c: &Command) -> bool {
    matches!(c, Command::Constant { .. } | Command::Spectrum { .. } | Command::Hurwitz { .. } | Command::Hall { .. })
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    let dir = std::env::var_os("LSPEC_CACHE_DIR")?;
    let mut h = Sha256::new();
    h.update(VERSION.as_bytes());
    h.update([0]);
    h.update(format!("{:?}|{:?}", cli.global, cli.command).as_bytes());
    let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    Some(PathBuf::from(dir).join(format!("{hex}.json")))
}

/// Runs the CLI on `args` (program name first) and returns the exit code and
/// the text for standard output.
pub fn run_to_string<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let cache = if cacheable(&cli.command) { cache_path(&cli) } else { None };
    if let Some(p) = &cache {
        if let Some(hit) = std::fs::read_to_string(p).ok().and_then(|s| serde_json::from_str::<Value>(&s).ok()) {
            if let (Some(code), Some(out)) = (hit["exit"].as_i64(), hit["stdout"].as_str()) {
                return (code as i32, out.to_string());
            }
        }
    }
    let mut header = json!({"lspec_version": VERSION, "command": command_name(&cli.command)});
    let cfg = match RunConfig::from_args(&cli.global) {
        Ok(c) => c,
        Err(e) => {
            let fallback = RunConfig {
                field: Field::prime(3).expect("F_3"),
                budget: SearchBudget::default(),
                format: cli.global.format,
                seed: cli.global.seed,
            };
            return (exit_code(&e), render(&fallback, &header, &Outcome::default(), Some(&e)));
        }
    };
    header["config"] = cfg.to_json();
    let (code, text) = match dispatch(&cfg, &cli.command) {
        Ok(out) => {
            header["inputs"] = out.inputs.clone();
            (out.exit, render(&cfg, &header, &out, None))
        }
        Err(e) => (exit_code(&e), render(&cfg, &header, &Outcome::default(), Some(&e))),
    };
    if let Some(p) = cache {
        if let Some(dir) = p.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let _ = std::fs::write(&p, serde_json::to_string(&json!({"exit": code, "stdout": text})).expect("JSON values serialize"));
    }
    (code, text)
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, text) = run_to_string(args);
    print!("{text}");
    code
}
