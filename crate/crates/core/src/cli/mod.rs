//! The `degbern` command line: `compute`, `verify` and `export`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, config or I/O error.

pub mod format;
pub mod table;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::verify::{explain_failure, parse_selection, run_suite, IdentityReport, SuiteConfig};
use crate::Rational;
use table::{render_csv, render_pretty, FamilyName, TableRequest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_MAX_N: usize = 12;
const DEFAULT_MAX_P: usize = 4;
const DEFAULT_TRUNCATION: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "degbern", version, about = "Exact degenerate Bernoulli, Stirling and Eulerian tables")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Print a family table.
    Compute(TableArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Write a family table as JSON or CSV.
    Export(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug, Default)]
struct CommonArgs {
    #[arg(long)]
    max_n: Option<usize>,
    /// Series truncation order.
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_parser = clap::value_parser!(FamilyName))]
    family: Option<FamilyName>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long)]
    r: Option<usize>,
    /// Exact rational `a/b` substituted for λ.
    #[arg(long)]
    lambda: Option<String>,
    /// Keep λ symbolic (the default).
    #[arg(long)]
    symbolic: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or a comma-separated list of identity names.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    max_p: Option<usize>,
    /// Let the Remark-mult readings decide the exit status too.
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    common: CommonArgs,
}

/// Keys accepted in a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct FileConfig {
    family: Option<FamilyName>,
    #[serde(alias = "max_n")]
    max_n: Option<usize>,
    p: Option<i64>,
    r: Option<usize>,
    lambda: Option<String>,
    symbolic: Option<bool>,
    truncation: Option<usize>,
    format: Option<OutputFormat>,
    output: Option<PathBuf>,
    suite: Option<String>,
    #[serde(alias = "max_p")]
    max_p: Option<usize>,
    strict: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compute,
    Verify,
    Export,
}

/// Fully resolved invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    pub family: Option<FamilyName>,
    pub max_n: usize,
    pub p: Option<i64>,
    pub r: Option<usize>,
    pub lambda: Option<Rational>,
    pub truncation: usize,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
    pub suite: String,
    pub max_p: usize,
    pub strict: bool,
}

struct UsageError(String);

impl From<crate::Error> for UsageError {
    fn from(e: crate::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn load_file(path: Option<&Path>) -> Result<FileConfig, UsageError> {
    let Some(path) = path else { return Ok(FileConfig::default()) };
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| UsageError(format!("invalid config {}: {e}", path.display())))
}

fn parse_lambda(s: &str) -> Result<Rational, UsageError> {
    format::parse_rational(s).ok_or_else(|| UsageError(format!("invalid lambda literal: {s}")))
}

fn resolve(cli: Cli) -> Result<CliConfig, UsageError> {
    let (command, common) = match &cli.command {
        CommandArgs::Compute(a) => (Command::Compute, &a.common),
        CommandArgs::Export(a) => (Command::Export, &a.common),
        CommandArgs::Verify(a) => (Command::Verify, &a.common),
    };
    let file = load_file(common.config.as_deref())?;
    let default_format = match command {
        Command::Compute | Command::Verify => OutputFormat::Pretty,
        Command::Export => OutputFormat::Json,
    };
    let mut config = CliConfig {
        command,
        family: None,
        max_n: common.max_n.or(file.max_n).unwrap_or(DEFAULT_MAX_N),
        p: None,
        r: None,
        lambda: None,
        truncation: common.truncation.or(file.truncation).unwrap_or(DEFAULT_TRUNCATION),
        format: common.format.or(file.format).unwrap_or(default_format),
        output: common.output.clone().or(file.output),
        suite: "all".into(),
        max_p: DEFAULT_MAX_P,
        strict: false,
    };
    match cli.command {
        CommandArgs::Compute(a) | CommandArgs::Export(a) => {
            config.family = Some(a.family.or(file.family).ok_or_else(|| UsageError("a family is required".into()))?);
            config.p = a.p.or(file.p);
            config.r = a.r.or(file.r);
            let symbolic = a.symbolic || file.symbolic.unwrap_or(false);
            config.lambda = match (a.lambda.or(file.lambda), symbolic) {
                (Some(_), true) => return Err(UsageError("--lambda and --symbolic are exclusive".into())),
                (Some(s), false) => Some(parse_lambda(&s)?),
                (None, _) => None,
            };
        }
        CommandArgs::Verify(a) => {
            config.suite = a.suite.or(file.suite).unwrap_or_else(|| "all".into());
            config.max_p = a.max_p.or(file.max_p).unwrap_or(DEFAULT_MAX_P);
            config.strict = a.strict || file.strict.unwrap_or(false);
        }
    }
    Ok(config)
}

/// Writes through a temporary file in the target directory, renamed into place on success.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit(config: &CliConfig, text: &str, stdout: &mut dyn Write) -> Result<(), UsageError> {
    match &config.output {
        Some(path) => write_atomic(path, text).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| UsageError(format!("cannot write output: {e}"))),
    }
}

fn table_request(config: &CliConfig) -> TableRequest {
    TableRequest {
        family: config.family.expect("resolved for table commands"),
        max_n: config.max_n,
        p: config.p,
        r: config.r,
        lambda: config.lambda.clone(),
    }
}

fn cmd_table(config: &CliConfig, stdout: &mut dyn Write) -> Result<i32, UsageError> {
    let request = table_request(config);
    let text = match config.format {
        OutputFormat::Json => request.export()?.to_json(),
        OutputFormat::Csv => render_csv(&request.rows()?),
        OutputFormat::Pretty => render_pretty(&request.rows()?),
    };
    emit(config, &text, stdout)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReportRecord {
    identity: String,
    domain: String,
    cases_run: usize,
    cases_passed: usize,
    passed: bool,
    informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<FailureRecord>,
}

#[derive(Serialize)]
struct FailureRecord {
    assignment: BTreeMap<String, i64>,
    lhs: String,
    rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch_index: Option<usize>,
}

impl From<&IdentityReport> for ReportRecord {
    fn from(r: &IdentityReport) -> Self {
        ReportRecord {
            identity: r.identity.to_string(),
            domain: r.identity.domain().to_string(),
            cases_run: r.cases_run,
            cases_passed: r.cases_passed,
            passed: r.passed(),
            informational: r.identity.is_informational(),
            first_failure: r.first_failure.as_ref().map(|f| FailureRecord {
                assignment: f.assignment.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                lhs: f.lhs.to_string(),
                rhs: f.rhs.to_string(),
                mismatch_index: f.mismatch_index,
            }),
        }
    }
}

fn status(r: &IdentityReport) -> &'static str {
    match (r.passed(), r.identity.is_informational()) {
        (true, _) => "PASS",
        (false, true) => "INFO",
        (false, false) => "FAIL",
    }
}

fn render_reports(reports: &[IdentityReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
            let mut s = serde_json::to_string_pretty(&records).expect("reports are always serializable");
            s.push('\n');
            s
        }
        OutputFormat::Csv => reports
            .iter()
            .map(|r| format!("{}, {}, {}, {}\n", r.identity, r.cases_run, r.cases_passed, status(r)))
            .collect(),
        OutputFormat::Pretty => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "{} {:<16} {}/{} cases ({:.1?})\n",
                    status(r),
                    r.identity.name(),
                    r.cases_passed,
                    r.cases_run,
                    r.elapsed
                ));
                if let Ok(text) = explain_failure(r) {
                    for line in text.lines() {
                        out.push_str(&format!("    {line}\n"));
                    }
                }
            }
            out
        }
    }
}

fn cmd_verify(config: &CliConfig, stdout: &mut dyn Write) -> Result<i32, UsageError> {
    let selection = parse_selection(&config.suite)?;
    let suite = SuiteConfig::new(config.max_n, config.max_p, config.truncation);
    let reports = run_suite(&selection, &suite)?;
    emit(config, &render_reports(&reports, config.format), stdout)?;
    let failed = reports
        .iter()
        .any(|r| !r.passed() && (config.strict || !r.identity.is_informational()));
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = resolve(cli).and_then(|config| match config.command {
        Command::Compute | Command::Export => cmd_table(&config, stdout),
        Command::Verify => cmd_verify(&config, stdout),
    });
    match outcome {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
