//! Command-line surface: expression parsing, subcommands, sweep runner, and
//! machine-readable output.
//!
//! Result lines go to standard output, diagnostics to standard error.
//! Sweeps stream one line per n in ascending order; bodies may fan out to a
//! worker pool (`--jobs`) but results are buffered per chunk and emitted in
//! order, so output is byte-identical at any parallelism. Exit codes:
//! 0 all computations and verifications succeeded, 1 a verification
//! returned false, 2 input or precondition error.

use crate::domino::{domino_enumerate, domino_table, parity_sums, DominoError};
use crate::expr::{parse_poly, render, ParseError};
use crate::norms::{
    norm_primitive, product_all_roots_report, theorem1_verify, theorem2_verify, unit_quadratic,
    NormError, NormReport,
};
use crate::polyring::{is_prime, IntPoly};
use crate::quadfield::{
    class_number_imaginary, gauss_period_relnorm, legendre, verify_imag_relnorm,
    verify_real_relnorm, QuadElem, QuadError,
};
use crate::sequences::lucas;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde_json::json;
use std::io::{self, Write};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "cyclonorm",
    version,
    about = "Exact norms of integer polynomials at roots of unity, with identity verifiers"
)]
struct Cli {
    /// Output format for result lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweep bodies (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Norm of a polynomial at the primitive n-th roots of unity, or the
    /// product over all k in [1, n-1] with --all-roots.
    Norm {
        /// Polynomial in x, e.g. "1-x+x^2".
        #[arg(long)]
        poly: String,
        /// Root-of-unity modulus, at least 2.
        #[arg(long)]
        n: u64,
        /// Product over all nontrivial roots instead of only primitive ones.
        #[arg(long)]
        all_roots: bool,
    },
    /// Verify one of the identities over a range.
    Verify {
        #[command(subcommand)]
        check: VerifyCmd,
    },
    /// Domino placement counts on a cycle.
    Domino {
        /// Cycle length.
        #[arg(long)]
        n: u64,
        /// Exhaustive enumeration (3 <= n <= 30) instead of the closed form.
        #[arg(long)]
        brute_force: bool,
    },
    /// A Lucas number.
    Lucas {
        /// Index.
        #[arg(long)]
        m: u64,
    },
    /// Streaming per-n sweeps.
    Sweep {
        #[command(subcommand)]
        sweep: SweepCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Unit identity for 1 - x + x^2: all-roots product 1 and primitive
    /// norm a unit, for every n in range with n > 4, gcd(n, 6) = 1.
    Theorem1 {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
    },
    /// Lucas norm identity for 1 - x - x^2 and 1 + x - x^2, for every odd
    /// prime up to the bound.
    Theorem2 {
        #[arg(long)]
        max_prime: u64,
    },
    /// Domino parity identity for every n in range with n >= 5,
    /// gcd(n, 6) = 1.
    Corollary {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
    },
    /// Relative norm of 1 - zeta over the quadratic subfield.
    Relnorm {
        /// Primes p = 1 (mod 4): check relnorm = sqrt(p) eps^(+-h).
        #[arg(long, conflicts_with = "imag", required_unless_present = "imag")]
        real: bool,
        /// Primes p = 3 (mod 4): check relnorm = s sqrt(-p) with the
        /// Legendre sign formula.
        #[arg(long)]
        imag: bool,
        #[arg(long)]
        max_prime: u64,
        /// Check every k in [1, p-1] instead of k = 1 only.
        #[arg(long, requires = "imag")]
        all_k: bool,
    },
}

#[derive(Subcommand)]
enum SweepCmd {
    /// Primitive-roots norm report for each n in range.
    Unit {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Norm(#[from] NormError),
    #[error("{0}")]
    Domino(#[from] DominoError),
    #[error("{0}")]
    Quad(#[from] QuadError),
    #[error("{0}")]
    Io(#[from] io::Error),
}

enum RowValue {
    None,
    Int(BigInt),
    Elem(QuadElem),
    Counts(Vec<BigInt>),
}

/// One result line; the JSON key set is fixed across all commands.
struct Row {
    command: &'static str,
    n: Option<u64>,
    poly: Option<String>,
    value: RowValue,
    unit: Option<bool>,
    method: Option<&'static str>,
    ok: Option<bool>,
    text: String,
}

struct Emitter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    csv_header_done: bool,
}

impl<'a> Emitter<'a> {
    fn new(out: &'a mut dyn Write, format: Format) -> Self {
        Emitter {
            out,
            format,
            csv_header_done: false,
        }
    }

    fn emit(&mut self, row: &Row) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{}", row.text),
            Format::Json => {
                let value = match &row.value {
                    RowValue::None => serde_json::Value::Null,
                    RowValue::Int(v) => json!(v.to_string()),
                    RowValue::Elem(e) => json!({
                        "a": e.a().to_string(),
                        "b": e.b().to_string(),
                        "den": e.den().to_string(),
                        "dstar": e.dstar().to_string(),
                    }),
                    RowValue::Counts(cs) => {
                        json!(cs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                    }
                };
                let obj = json!({
                    "command": row.command,
                    "n": row.n,
                    "poly": row.poly,
                    "value": value,
                    "unit": row.unit,
                    "method": row.method,
                    "ok": row.ok,
                });
                writeln!(self.out, "{obj}")
            }
            Format::Csv => {
                if !self.csv_header_done {
                    writeln!(self.out, "command,n,poly,value,unit,method,ok")?;
                    self.csv_header_done = true;
                }
                let value = match &row.value {
                    RowValue::None => String::new(),
                    RowValue::Int(v) => v.to_string(),
                    RowValue::Elem(e) => e.to_string(),
                    RowValue::Counts(cs) => {
                        let joined = cs
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        format!("\"[{joined}]\"")
                    }
                };
                let optu64 = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
                let optb = |v: Option<bool>| v.map(|x| x.to_string()).unwrap_or_default();
                writeln!(
                    self.out,
                    "{},{},{},{},{},{},{}",
                    row.command,
                    optu64(row.n),
                    row.poly.as_deref().unwrap_or(""),
                    value,
                    optb(row.unit),
                    row.method.unwrap_or(""),
                    optb(row.ok),
                )
            }
        }
    }
}

fn norm_report_row(command: &'static str, report: &NormReport, ok: Option<bool>) -> Row {
    let poly_text = render(&report.poly);
    Row {
        command,
        n: Some(report.n),
        poly: Some(poly_text.clone()),
        value: RowValue::Int(report.value.clone()),
        unit: Some(report.is_unit),
        method: Some(report.method.as_str()),
        ok,
        text: format!(
            "n={} value={} unit={} method={} poly={}",
            report.n, report.value, report.is_unit, report.method, poly_text
        ),
    }
}

/// Run `f` over `items` on the pool, chunked, emitting results in input order.
fn run_ordered<T, F>(
    pool: &rayon::ThreadPool,
    items: &[u64],
    f: F,
    mut emit: impl FnMut(u64, T) -> Result<(), CliError>,
) -> Result<(), CliError>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    for chunk in items.chunks(512) {
        let results: Vec<(u64, T)> =
            pool.install(|| chunk.par_iter().map(|&n| (n, f(n))).collect());
        for (n, t) in results {
            emit(n, t)?;
        }
    }
    Ok(())
}

fn range_items(min: u64, max: u64, admissible: impl Fn(u64) -> bool) -> Result<Vec<u64>, CliError> {
    if min > max {
        return Err(CliError::Input(format!(
            "empty range: --min {min} exceeds --max {max}"
        )));
    }
    Ok((min..=max).filter(|&n| admissible(n)).collect())
}

fn parse_nonzero_poly(source: &str) -> Result<IntPoly, CliError> {
    let p = parse_poly(source)?;
    if p.is_zero() {
        return Err(CliError::Input(
            "the zero polynomial has no norm".to_string(),
        ));
    }
    Ok(p)
}

fn build_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Input(format!("cannot build worker pool: {e}")))
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let mut emitter = Emitter::new(out, cli.format);
    let pool = build_pool(cli.jobs)?;
    match cli.command {
        Cmd::Norm { poly, n, all_roots } => {
            let r = parse_nonzero_poly(&poly)?;
            if n < 2 {
                return Err(CliError::Input(format!(
                    "precondition violated: --n must be at least 2, got {n}"
                )));
            }
            let report = if all_roots {
                product_all_roots_report(&r, n)
            } else {
                norm_primitive(&r, n)
            };
            emitter.emit(&norm_report_row("norm", &report, None))?;
            Ok(0)
        }
        Cmd::Domino { n, brute_force } => {
            if n == 0 {
                return Err(CliError::Input(
                    "precondition violated: --n must be positive".to_string(),
                ));
            }
            let (table, method) = if brute_force {
                (domino_enumerate(n)?, "brute_force")
            } else {
                (domino_table(n), "closed_form")
            };
            let joined = table
                .counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            emitter.emit(&Row {
                command: "domino",
                n: Some(n),
                poly: None,
                value: RowValue::Counts(table.counts.clone()),
                unit: None,
                method: Some(method),
                ok: None,
                text: format!("n={n} counts=[{joined}] method={method}"),
            })?;
            Ok(0)
        }
        Cmd::Lucas { m } => {
            let value = lucas(m);
            emitter.emit(&Row {
                command: "lucas",
                n: Some(m),
                poly: None,
                value: RowValue::Int(value.clone()),
                unit: None,
                method: None,
                ok: None,
                text: format!("m={m} lucas={value}"),
            })?;
            Ok(0)
        }
        Cmd::Sweep {
            sweep: SweepCmd::Unit { poly, min, max },
        } => {
            let r = parse_nonzero_poly(&poly)?;
            let items = range_items(min.max(2), max, |_| true)?;
            run_ordered(
                &pool,
                &items,
                |n| norm_primitive(&r, n),
                |_, report| {
                    emitter
                        .emit(&norm_report_row("sweep unit", &report, None))
                        .map_err(CliError::from)
                },
            )?;
            Ok(0)
        }
        Cmd::Verify { check } => verify(check, &pool, &mut emitter, err),
    }
}

fn verify(
    check: VerifyCmd,
    pool: &rayon::ThreadPool,
    emitter: &mut Emitter<'_>,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut all_ok = true;
    let mut checked = 0u64;
    match check {
        VerifyCmd::Theorem1 { min, max } => {
            let items = range_items(min, max, |n| n > 4 && n.gcd(&6) == 1)?;
            run_ordered(pool, &items, theorem1_verify, |n, outcome| {
                let ok = outcome?;
                all_ok &= ok;
                checked += 1;
                emitter.emit(&Row {
                    command: "verify theorem1",
                    n: Some(n),
                    poly: Some(render(&unit_quadratic())),
                    value: RowValue::None,
                    unit: None,
                    method: None,
                    ok: Some(ok),
                    text: format!("n={n} ok={ok}"),
                })?;
                Ok(())
            })?;
            writeln!(
                err,
                "theorem1: {checked} admissible n checked, all_ok={all_ok}"
            )?;
        }
        VerifyCmd::Theorem2 { max_prime } => {
            if max_prime < 3 {
                return Err(CliError::Input(format!(
                    "precondition violated: --max-prime must be at least 3, got {max_prime}"
                )));
            }
            let items = range_items(3, max_prime, is_prime)?;
            run_ordered(
                pool,
                &items,
                |p| theorem2_verify(p).map(|ok| (ok, lucas(p))),
                |p, outcome| {
                    let (ok, l) = outcome?;
                    all_ok &= ok;
                    checked += 1;
                    emitter.emit(&Row {
                        command: "verify theorem2",
                        n: Some(p),
                        poly: None,
                        value: RowValue::Int(l.clone()),
                        unit: None,
                        method: None,
                        ok: Some(ok),
                        text: format!("p={p} lucas={l} ok={ok}"),
                    })?;
                    Ok(())
                },
            )?;
            writeln!(
                err,
                "theorem2: {checked} odd primes checked, all_ok={all_ok}"
            )?;
        }
        VerifyCmd::Corollary { min, max } => {
            let items = range_items(min, max, |n| n >= 5 && n.gcd(&6) == 1)?;
            run_ordered(pool, &items, corollary_row_data, |n, outcome| {
                let (ok, even, odd, signed) = outcome?;
                all_ok &= ok;
                checked += 1;
                emitter.emit(&Row {
                    command: "verify corollary",
                    n: Some(n),
                    poly: None,
                    value: RowValue::Int(signed.clone()),
                    unit: None,
                    method: None,
                    ok: Some(ok),
                    text: format!("n={n} even={even} odd={odd} signed={signed} ok={ok}"),
                })?;
                Ok(())
            })?;
            writeln!(
                err,
                "corollary: {checked} admissible n checked, all_ok={all_ok}"
            )?;
        }
        VerifyCmd::Relnorm {
            real,
            imag,
            max_prime,
            all_k,
        } => {
            let floor = if real { 5 } else { 7 };
            if max_prime < floor {
                return Err(CliError::Input(format!(
                    "precondition violated: --max-prime must be at least {floor} for this mode, got {max_prime}"
                )));
            }
            if real {
                let items = range_items(5, max_prime, |p| p % 4 == 1 && is_prime(p))?;
                run_ordered(pool, &items, verify_real_relnorm, |p, outcome| {
                    let check = outcome?;
                    all_ok &= check.ok;
                    checked += 1;
                    emitter.emit(&Row {
                        command: "verify relnorm real",
                        n: Some(p),
                        poly: None,
                        value: RowValue::Elem(check.relnorm.clone()),
                        unit: None,
                        method: None,
                        ok: Some(check.ok),
                        text: format!(
                            "p={p} relnorm={} m={} h={} ok={}",
                            check.relnorm, check.m, check.h, check.ok
                        ),
                    })?;
                    Ok(())
                })?;
                writeln!(
                    err,
                    "relnorm real: {checked} primes checked, all_ok={all_ok}"
                )?;
            }
            if imag {
                let items = range_items(7, max_prime, |p| p % 4 == 3 && is_prime(p))?;
                type ImagRows = Vec<(u64, bool, i32, u32, QuadElem)>;
                run_ordered(
                    pool,
                    &items,
                    |p| -> Result<ImagRows, QuadError> {
                        let h = class_number_imaginary(p)?;
                        let sign_h = if h.div_ceil(2) % 2 == 1 { -1 } else { 1 };
                        let ks: Vec<u64> = if all_k { (1..p).collect() } else { vec![1] };
                        ks.into_iter()
                            .map(|k| {
                                let ok = verify_imag_relnorm(p, k)?;
                                let s = legendre(k as i64, p) * sign_h;
                                let value = gauss_period_relnorm(p, k)?;
                                Ok((k, ok, s, h, value))
                            })
                            .collect()
                    },
                    |p, outcome| {
                        for (k, ok, s, h, value) in outcome? {
                            all_ok &= ok;
                            checked += 1;
                            emitter.emit(&Row {
                                command: "verify relnorm imag",
                                n: Some(p),
                                poly: None,
                                value: RowValue::Elem(value.clone()),
                                unit: None,
                                method: None,
                                ok: Some(ok),
                                text: format!("p={p} k={k} s={s} h={h} relnorm={value} ok={ok}"),
                            })?;
                        }
                        Ok(())
                    },
                )?;
                writeln!(
                    err,
                    "relnorm imag: {checked} (p, k) pairs checked, all_ok={all_ok}"
                )?;
            }
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

type CorollaryData = Result<(bool, BigInt, BigInt, BigInt), DominoError>;

fn corollary_row_data(n: u64) -> CorollaryData {
    let ok = crate::domino::corollary_verify(n)?;
    let (even, odd) = parity_sums(n);
    // sum_k (-1)^k D(n, k) = 1 + even - odd, the k = 0 term being 1
    let signed = BigInt::from(1) + &even - &odd;
    Ok((ok, even, odd, signed))
}

/// Parse `args` (without the binary name) and run, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run(args: &[&str], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("cyclonorm").chain(args.iter().copied());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(&arg_refs, &mut stdout.lock(), &mut stderr.lock())
}
