//! Batch command-line front end.
//!
//! ```text
//! missint table  [--family F] [--j J] --nmax N [--closed] [--format csv|json] [--output PATH]
//! missint series NAME [--family F] [--k K] [--m M] --nmax N [--format csv|json|bfile] [--output PATH]
//! missint oeis   NAME ...            (series with b-file output by default)
//! missint verify CHECK [--family F] [--j J] [--k K] [--k-max K] --nmax N [--threads T] [--no-timing]
//! missint scan   SCAN  [--family F] --nmax N [--threads T] [--no-timing]
//! ```
//!
//! Exit status: 0 on success or a passing verdict, 1 on a failing verdict,
//! 2 on invalid arguments, 3 on I/O errors. Progress goes to standard error.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::error::Error;
use crate::gfs::{
    gf_distinct, gf_gapfree, gf_missing_closed, gf_missing_table, gf_nu_d_lt_k, gf_one_missing, gf_parity_diff,
    gf_parts_equal_k, gf_total, gf_total_parts, Family, GfSpec,
};
use crate::verify::{self, VerdictReport};
use crate::{BiSeries, Series};

#[derive(Debug, Parser)]
#[command(
    name = "missint",
    version,
    about = "Missing integers in partitions and overpartitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the table of counts by number of missing integers, rows (n, m, count).
    Table(TableArgs),
    /// Emit the coefficients a(0..N) of a generating function.
    Series(SeriesArgs),
    /// Like `series`, defaulting to b-file output.
    Oeis(SeriesArgs),
    /// Run a theorem check or cross check; exit 0 iff it passes.
    Verify(VerifyArgs),
    /// Run a conjecture scan; exit 0 iff no counterexample lies above the threshold.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file (atomically) instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value = "partitions")]
    pub family: Family,
    /// Count only missing integers >= j.
    #[arg(long, default_value_t = 1)]
    pub j: usize,
    #[arg(long)]
    pub nmax: usize,
    /// Use the closed product (j = 1 only) instead of the largest-part sum.
    #[arg(long)]
    pub closed: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// Even minus odd number of missing integers.
    ParityDiff,
    /// No missing integers.
    Gapfree,
    /// Exactly one missing integer.
    OneMissing,
    /// Exactly `--m` missing integers.
    MissingRow,
    /// p(n) or the overpartition count.
    Total,
    /// Partitions into distinct parts.
    Distinct,
    /// Integers up to the largest part occurring fewer than `--k` times, summed.
    NuDLtK,
    /// Parts equal to `--k`, summed over all partitions.
    PartsEqualK,
    /// Number of parts, summed over all partitions.
    TotalParts,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    pub name: SeriesName,
    #[arg(long, default_value = "partitions")]
    pub family: Family,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long)]
    pub nmax: usize,
    /// Defaults to csv for `series` and bfile for `oeis`.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Mod3,
    Mod4,
    CrosscheckTable,
    CrosscheckOneDouble,
    CrosscheckNu,
    ClosedForms,
    Trivariate,
    Preliminaries,
    Euler,
    Jtpi,
    QBinomial,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub check: CheckName,
    #[arg(long, default_value = "partitions")]
    pub family: Family,
    #[arg(long, default_value_t = 1)]
    pub j: usize,
    /// Multiplicity threshold for `trivariate`.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Largest multiplicity threshold for `crosscheck-nu`.
    #[arg(long, default_value_t = 5)]
    pub k_max: usize,
    #[arg(long)]
    pub nmax: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanName {
    Bias,
    DistinctBound,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub scan: ScanName,
    #[arg(long, default_value = "partitions")]
    pub family: Family,
    #[arg(long)]
    pub nmax: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, A>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 2;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            3
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Table(args) => {
            let text = render_table(&args)?;
            emit(&text, args.out.output.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Series(args) => {
            let text = render_series(&args, args.format.unwrap_or(Format::Csv))?;
            emit(&text, args.out.output.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Oeis(args) => {
            let text = render_series(&args, args.format.unwrap_or(Format::Bfile))?;
            emit(&text, args.out.output.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Verify(args) => {
            writeln!(stderr, "running {:?} up to n = {}", args.check, args.nmax)?;
            let report = in_pool(args.run.threads, || run_check(&args))??;
            finish_report(report, &args.run, stdout, stderr)
        }
        Command::Scan(args) => {
            writeln!(stderr, "scanning {:?} up to n = {}", args.scan, args.nmax)?;
            let report = in_pool(args.run.threads, || match args.scan {
                ScanName::Bias => verify::scan_bias(args.family, args.nmax),
                ScanName::DistinctBound => verify::scan_bound_vs_distinct(args.nmax),
            })?;
            finish_report(report, &args.run, stdout, stderr)
        }
    }
}

fn in_pool<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(pool.install(f))
}

fn run_check(args: &VerifyArgs) -> Result<VerdictReport, Failure> {
    let n = args.nmax;
    Ok(match args.check {
        CheckName::Mod3 => verify::check_congruence_mod3(n),
        CheckName::Mod4 => verify::check_congruence_mod4(n),
        CheckName::CrosscheckTable => verify::crosscheck_missing_tables(args.family, args.j, n)?,
        CheckName::CrosscheckOneDouble => verify::crosscheck_one_double(args.family, n),
        CheckName::CrosscheckNu => verify::crosscheck_nu_identity(args.k_max, n)?,
        CheckName::ClosedForms => verify::crosscheck_closed_forms(args.family, n, n),
        CheckName::Trivariate => verify::crosscheck_trivariate(args.k, n)?,
        CheckName::Preliminaries => verify::check_preliminaries(n),
        CheckName::Euler => verify::check_euler(n),
        CheckName::Jtpi => verify::check_jtpi(n),
        CheckName::QBinomial => verify::check_q_binomial(n),
    })
}

fn finish_report(
    report: VerdictReport,
    run: &RunArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    writeln!(stderr, "{}", report.summary())?;
    let report = if run.no_timing { report.without_timing() } else { report };
    let mut text = report.to_json();
    text.push('\n');
    emit(&text, run.out.output.as_deref(), stdout)?;
    Ok(if report.passed { 0 } else { 1 })
}

/// Rows `(n, m, count)` for `0 <= n <= nmax` and `0 <= m <= max(n,1) - 1`.
pub fn render_table(args: &TableArgs) -> Result<String, Error> {
    let table: BiSeries = if args.closed {
        if args.j != 1 {
            return Err(Error::param("j", args.j, "the closed product only covers j = 1"));
        }
        gf_missing_closed(args.family, args.nmax)
    } else {
        gf_missing_table(&GfSpec::new(args.family, args.j, args.nmax)?)?
    };
    let rows: Vec<(usize, usize, BigInt)> = (0..=args.nmax)
        .flat_map(|n| (0..n.max(1)).map(move |m| (n, m)))
        .map(|(n, m)| (n, m, table.coeff(m, n)))
        .collect();
    match args.format {
        Format::Csv => {
            let mut s = String::from("n,m,count\n");
            for (n, m, c) in &rows {
                s.push_str(&format!("{n},{m},{c}\n"));
            }
            Ok(s)
        }
        Format::Json => Ok(json_array(
            rows.iter()
                .map(|(n, m, c)| format!("{{\"n\":{n},\"m\":{m},\"count\":{c}}}")),
        )),
        Format::Bfile => Err(Error::param(
            "format",
            0,
            "tables are emitted as csv or json; b-files hold one sequence",
        )),
    }
}

/// Coefficients `a(0..=nmax)` of the selected series.
pub fn series_values(args: &SeriesArgs) -> Result<Series, Error> {
    let (f, n) = (args.family, args.nmax);
    Ok(match args.name {
        SeriesName::ParityDiff => gf_parity_diff(f, n),
        SeriesName::Gapfree => gf_gapfree(f, n),
        SeriesName::OneMissing => gf_one_missing(f, n),
        SeriesName::MissingRow => gf_missing_closed::<BigInt>(f, n).row(args.m),
        SeriesName::Total => gf_total(f, n),
        SeriesName::Distinct => gf_distinct(n),
        SeriesName::NuDLtK => gf_nu_d_lt_k(args.k, n)?,
        SeriesName::PartsEqualK => gf_parts_equal_k(args.k, n)?,
        SeriesName::TotalParts => gf_total_parts(n),
    })
}

pub fn render_series(args: &SeriesArgs, format: Format) -> Result<String, Error> {
    let values = series_values(args)?;
    let name = args
        .name
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, a) in values.coeffs().iter().enumerate() {
                s.push_str(&format!("{n},{a}\n"));
            }
            s
        }
        Format::Bfile => {
            let mut s = String::new();
            for (n, a) in values.coeffs().iter().enumerate() {
                s.push_str(&format!("{n} {a}\n"));
            }
            s
        }
        Format::Json => {
            let mut s = format!(
                "{{\n  \"series\": \"{name}\",\n  \"family\": \"{}\",\n  \"values\": ",
                args.family
            );
            s.push_str(&inline_array(values.coeffs()));
            s.push_str("\n}\n");
            s
        }
    })
}

fn inline_array<D: Display>(items: &[D]) -> String {
    let body: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    format!("[{}]", body.join(","))
}

fn json_array(items: impl Iterator<Item = String>) -> String {
    let body: Vec<String> = items.map(|s| format!("  {s}")).collect();
    if body.is_empty() {
        return "[]\n".to_string();
    }
    format!("[\n{}\n]\n", body.join(",\n"))
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> io::Result<()> {
    let Some(path) = path else {
        stdout.write_all(text.as_bytes())?;
        return stdout.flush();
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
