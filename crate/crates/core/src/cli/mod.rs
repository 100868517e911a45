//! Command-line front end: JSON models, the built-in catalog, and report
//! rendering. Exit codes: 0 success, 1 input or parse error, 2 non-regular
//! space, 3 inconclusive computation or failed catalog check.

pub mod catalog;
pub mod model;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::engines::{
    intersection, ml_degree, reciprocal_degree, zero_test, EngineChoice, MLReport, MlConfig, MlValue, ReciprocalMethod,
    ZeroTestReport,
};
use crate::error::Error;
use crate::exactmath::random_prime;
use crate::groebner::{GbConfig, HilbertData, DEFAULT_PAIR_BUDGET};
use crate::spaces::LinearMatrixSpace;

pub use catalog::{builtin_catalog, load_catalog, run_catalog, CatalogEntry, EntryResult, Expected, Provenance};
pub use model::{ModelSpec, SpaceSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NON_REGULAR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mldeg", version, about = "ML degrees of linear concentration models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Model file in JSON.
    #[arg(short, long, global = true, value_name = "FILE")]
    model: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Trials in the first round of the modular consensus.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Bit length of the random primes.
    #[arg(long, global = true, default_value_t = 31)]
    prime_bits: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Pair budget per Groebner basis; exhausting it makes a trial inconclusive.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    max_pairs: usize,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Auto,
    Critical,
    Hyperplane,
    Diagonal,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Slice,
    Implicitize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ML degree of the model.
    Compute,
    /// Randomized test for ML degree zero.
    ZeroTest,
    /// Degree of the reciprocal variety.
    Reciprocal {
        #[arg(long, value_enum, default_value_t = MethodArg::Slice)]
        method: MethodArg,
    },
    /// Hilbert data of the reciprocal variety cut with the annihilator.
    IntersectionDegree,
    /// Segre symbol of a pencil, or of the annihilator when that is a pencil.
    SegreSymbol,
    /// Check a catalog of models against expected values.
    Catalog {
        /// Catalog file; the built-in catalog when absent.
        file: Option<PathBuf>,
        /// Let conjectural entries fail the run.
        #[arg(long)]
        strict: bool,
    },
}

impl Common {
    fn config(&self) -> MlConfig {
        let engine = match self.engine {
            EngineArg::Auto => EngineChoice::Auto,
            EngineArg::Critical => EngineChoice::Critical,
            EngineArg::Hyperplane => EngineChoice::Hyperplane,
            EngineArg::Diagonal => EngineChoice::Diagonal,
        };
        let trials = self.trials.max(1);
        MlConfig {
            engine,
            trials,
            max_trials: trials.max(5).max(trials + 2),
            prime_bits: self.prime_bits,
            seed: self.seed,
            gb: GbConfig { max_pairs: self.max_pairs },
            ..MlConfig::default()
        }
    }

    fn space(&self) -> Result<LinearMatrixSpace, Error> {
        let path = self.model.as_ref().ok_or_else(|| Error::InvalidInput("--model FILE is required".into()))?;
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        ModelSpec::from_json(&text)?.to_space()
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonRegular | Error::SingularPencil => EXIT_NON_REGULAR,
        Error::Inconclusive(_) | Error::BadReduction(_) | Error::CapExceeded { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_INPUT,
    }
}

/// Parses `argv` (program name first), runs the command and writes its
/// report to `out`; diagnostics go to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let common = &cli.common;
    let config = common.config();
    let emit = |out: &mut dyn Write, text: String| -> Result<(), Error> {
        writeln!(out, "{text}").map_err(|e| Error::InvalidInput(format!("writing output: {e}")))
    };
    match &cli.command {
        Command::Compute => {
            let report = ml_degree(&common.space()?, &config)?;
            emit(out, render_ml(&report, "ml degree", common.json))?;
            Ok(value_code(report.value))
        }
        Command::Reciprocal { method } => {
            let method = match method {
                MethodArg::Slice => ReciprocalMethod::Slice,
                MethodArg::Implicitize => ReciprocalMethod::Implicitize,
            };
            let report = reciprocal_degree(&common.space()?, method, &config)?;
            emit(out, render_ml(&report, "reciprocal degree", common.json))?;
            Ok(value_code(report.value))
        }
        Command::ZeroTest => {
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(config.seed);
            let prime = random_prime(&mut rng, config.prime_bits)?;
            let report = zero_test(&common.space()?, prime, config.trials, config.seed)?;
            emit(out, render_zero(&report, common.json))?;
            Ok(EXIT_OK)
        }
        Command::IntersectionDegree => {
            let h = intersection(&common.space()?, &config)?;
            emit(out, render_hilbert(&h, common.json))?;
            Ok(EXIT_OK)
        }
        Command::SegreSymbol => {
            let symbol = catalog::pencil_symbol(&common.space()?)?;
            let text = if common.json { json(&serde_json::json!({ "segre_symbol": symbol })) } else { symbol };
            emit(out, text)?;
            Ok(EXIT_OK)
        }
        Command::Catalog { file, strict } => {
            let entries = match file {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    load_catalog(&text)?
                }
                None => builtin_catalog(),
            };
            let results = run_catalog(&entries, &config);
            let text = if common.json { json(&results) } else { catalog::render_table(&results) };
            emit(out, text.trim_end().to_string())?;
            Ok(if results.iter().any(|r| r.fails(*strict)) { EXIT_INCONCLUSIVE } else { EXIT_OK })
        }
    }
}

fn value_code(value: MlValue) -> i32 {
    match value {
        MlValue::Count(_) => EXIT_OK,
        MlValue::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize")
}

pub fn render_ml(report: &MLReport, label: &str, as_json: bool) -> String {
    if as_json {
        return json(report);
    }
    let mut lines = vec![format!("{label}: {}", report.value), format!("engine: {}", report.engine)];
    if !report.trials.is_empty() {
        lines.push(format!("consensus: {}/{}", report.consensus, report.trials.len()));
    }
    for t in &report.trials {
        let count = t.count.map_or("-".to_string(), |c| c.to_string());
        lines.push(format!("  p={} seed={} count={count}", t.prime, t.seed));
    }
    lines.extend(report.warnings.iter().map(|w| format!("warning: {w}")));
    lines.join("\n")
}

pub fn render_zero(report: &ZeroTestReport, as_json: bool) -> String {
    if as_json {
        return json(report);
    }
    [
        format!("ml degree zero: {}", report.is_zero),
        format!("method: {}", report.method),
        format!("p: {}", report.p),
        format!("evaluations: {}", report.witnesses.len()),
        format!("failure bound per evaluation: {}", report.failure_bound),
    ]
    .join("\n")
}

#[derive(Serialize)]
struct HilbertSummary<'a> {
    projective_dimension: i64,
    projective_degree: i64,
    #[serde(flatten)]
    data: &'a HilbertData,
}

pub fn render_hilbert(h: &HilbertData, as_json: bool) -> String {
    let summary = HilbertSummary { projective_dimension: h.projective_dimension(), projective_degree: h.projective_degree(), data: h };
    if as_json {
        return json(&summary);
    }
    let numerator: Vec<String> = h.numerator.iter().map(i64::to_string).collect();
    let status = if summary.projective_dimension < 0 { " (empty)" } else { "" };
    [
        format!("projective dimension: {}{status}", summary.projective_dimension),
        format!("degree: {}", summary.projective_degree),
        format!("hilbert numerator: [{}]", numerator.join(", ")),
    ]
    .join("\n")
}
