//! Command-line front end for `ringel-core`.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use ringel_core::distributions::{
    closed_coefficients, closed_form_poly, recurrence_poly, total_embedding_poly,
    total_embedding_poly_brute, total_embedding_poly_closed,
};
use ringel_core::oracle::{total_poly_by_tracing, TraceConfig};
use ringel_core::overlap::{brute_rank_distribution, EnumConfig};
use ringel_core::parallel::default_workers;
use ringel_core::report::{self, VerifyConfig, VerifyReport};
use ringel_core::{
    DistError, EnumError, Family, GraphError, LadderGraph, Method, OracleError, Poly,
    ReportError, TotalPoly,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "ringel", version, about = "Embedding distributions of Ringel ladders")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a rank-distribution or total embedding polynomial
    Dist(DistArgs),
    /// Cross-check every method against the others
    Verify(VerifyArgs),
    /// Recompute the reference total embedding polynomials of R_1..R_5
    #[command(alias = "paper-check")]
    TableCheck,
    /// Report misprinted formulas with their smallest witnesses
    Errata,
    /// Print a ladder graph in Graphviz format
    Dot(DotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    #[value(name = "O")]
    O,
    #[value(name = "L")]
    L,
    #[value(name = "P")]
    P,
    #[value(name = "R")]
    R,
    #[value(name = "total")]
    Total,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Bruteforce,
    Recurrence,
    Closed,
    Trace,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Bruteforce => Method::BruteForce,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Trace => Method::FaceTracing,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct DistArgs {
    /// O, L, P, R, or total
    #[arg(long)]
    family: Target,
    /// For O/L/P/R: the matrix dimension of the family polynomial (R with
    /// --n 3 counts 3x3 matrices). For total: the ladder parameter n, which
    /// builds the graph R_{n-1} with (n+1)x(n+1) overlap matrices.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "recurrence")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for brute force and tracing; results do not depend on it
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_n_brute: usize,
    #[arg(long, default_value_t = 5)]
    max_n_trace: usize,
    #[arg(long, default_value_t = 40)]
    max_n_closed: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Swap in the L coefficient formula with a flipped sign (test fixture)
    #[arg(long, hide = true)]
    corrupt_l_coefficients: bool,
}

#[derive(Debug, Args)]
struct DotArgs {
    /// Ladder parameter: R_{n-1} by default, L_n with --closed-end
    #[arg(long)]
    n: usize,
    #[arg(long)]
    closed_end: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
}

/// One computed distribution. Coefficients are decimal strings, constant
/// term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub n: usize,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscap: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<String>>,
    pub elapsed_ms: u64,
    #[serde(default)]
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub family: String,
    pub n: usize,
    pub rank: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCheckRecord {
    pub name: String,
    pub scope: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub passed: bool,
    pub checks: Vec<VerifyCheckRecord>,
}

impl From<&VerifyReport> for VerifyRecord {
    fn from(r: &VerifyReport) -> Self {
        VerifyRecord {
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| VerifyCheckRecord {
                    name: c.name.clone(),
                    scope: c.scope.clone(),
                    passed: c.passed(),
                    counterexample: c.counterexample.as_ref().map(|ce| CounterexampleRecord {
                        family: ce.family.clone(),
                        n: ce.n,
                        rank: ce.rank,
                        expected: ce.expected.clone(),
                        got: ce.got.clone(),
                    }),
                    failure: c.failure.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<DistError> for Failure {
    fn from(e: DistError) -> Self {
        let code = match &e {
            DistError::BelowRange { .. }
            | DistError::TotalBelowRange(_)
            | DistError::Enum(EnumError::BelowRange { .. } | EnumError::Infeasible { .. }) => {
                EXIT_INFEASIBLE
            }
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        DistError::Enum(e).into()
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match &e {
            OracleError::OverBudget { .. } | OracleError::Graph(GraphError::RingelTooSmall(_)) => {
                EXIT_INFEASIBLE
            }
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure {
            code: EXIT_INFEASIBLE,
            message: e.to_string(),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Infeasible(m) => Failure {
                code: EXIT_INFEASIBLE,
                message: m,
            },
            ReportError::Dist(e) => e.into(),
            ReportError::Oracle(e) => e.into(),
            ReportError::Enum(e) => e.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: e.to_string(),
        }
    }
}

enum Computed {
    Family(Family, Poly),
    Total(TotalPoly),
}

fn family_of(t: Target) -> Option<Family> {
    match t {
        Target::O => Some(Family::O),
        Target::L => Some(Family::L),
        Target::P => Some(Family::P),
        Target::R => Some(Family::R),
        Target::Total => None,
    }
}

fn pow2(e: u32) -> BigInt {
    BigInt::from(1u8) << e as usize
}

fn compute(args: &DistArgs, workers: usize) -> Result<Computed, Failure> {
    let method = Method::from(args.method);
    let enum_cfg = EnumConfig::with_workers(workers);
    match family_of(args.family) {
        Some(family) => {
            let k = args.n;
            if k < family.min_index() {
                return Err(DistError::BelowRange {
                    family,
                    k,
                    min: family.min_index(),
                }
                .into());
            }
            let poly = match method {
                Method::BruteForce => {
                    brute_rank_distribution(family, family.param(k), &enum_cfg)?.as_poly()
                }
                Method::Recurrence => recurrence_poly(family, k)?,
                Method::ClosedForm => Poly::from_ints(closed_coefficients(family, k)?),
                Method::FaceTracing => {
                    return Err(Failure::usage(
                        "--method trace only applies to --family total",
                    ))
                }
            };
            Ok(Computed::Family(family, poly))
        }
        None => {
            let n = args.n;
            let total = match method {
                Method::BruteForce => total_embedding_poly_brute(n, &enum_cfg)?,
                Method::Recurrence => total_embedding_poly(n)?,
                Method::ClosedForm => total_embedding_poly_closed(n)?,
                Method::FaceTracing => {
                    if n < 2 {
                        return Err(DistError::TotalBelowRange(n).into());
                    }
                    total_poly_by_tracing(n, &TraceConfig::with_workers(workers))?
                }
            };
            Ok(Computed::Total(total))
        }
    }
}

fn checks_for(args: &DistArgs, computed: &Computed) -> Result<Vec<CheckResult>, Failure> {
    let check = |name: &str, passed: bool| CheckResult {
        name: name.to_string(),
        passed,
    };
    Ok(match computed {
        Computed::Family(family, poly) => {
            let coeffs = poly.to_integers().map_err(|e| Failure {
                code: EXIT_FAIL,
                message: e.to_string(),
            })?;
            let bits = family.free_bits(family.param(args.n));
            let sum_ok = coeffs.iter().sum::<BigInt>() == pow2(bits);
            let zero = BigInt::from(0u8);
            let parity_ok =
                !family.zero_diagonal() || coeffs.iter().skip(1).step_by(2).all(|c| *c == zero);
            let mut out = vec![
                check("coefficient sum", sum_ok),
                check("odd ranks vanish", parity_ok),
            ];
            if args.method == MethodArg::Closed {
                let cheb = closed_form_poly(*family, args.n)?;
                out.push(check("Chebyshev closed form agrees", &cheb == poly));
            }
            out
        }
        Computed::Total(t) => {
            let n = args.n as u32;
            let g = BigInt::from(t.genus_sum()) == pow2(2 * n);
            let c = BigInt::from(t.crosscap_sum()) == (pow2(n + 1) - 1) * pow2(2 * n);
            vec![check("genus sum", g), check("crosscap sum", c)]
        }
    })
}

fn coeff_strings(p: &Poly) -> Result<Vec<String>, Failure> {
    let ints = p.to_integers().map_err(|e| Failure {
        code: EXIT_FAIL,
        message: e.to_string(),
    })?;
    let mut s: Vec<String> = ints.iter().map(|c| c.to_string()).collect();
    if s.is_empty() {
        s.push("0".to_string());
    }
    Ok(s)
}

fn render_total_counts(t: &TotalPoly) -> (Vec<String>, Vec<String>) {
    let g = t.genus_counts().iter().map(|c| c.to_string()).collect();
    let c = t.crosscap_counts().iter().map(|c| c.to_string()).collect();
    (g, c)
}

fn cmd_dist(args: &DistArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let workers = args.workers.unwrap_or_else(default_workers);
    let start = Instant::now();
    let computed = compute(args, workers)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let checks = checks_for(args, &computed)?;
    let method = Method::from(args.method).name().to_string();

    let mut record = OutputRecord {
        family: match args.family {
            Target::Total => "total".to_string(),
            t => family_of(t).expect("family target").symbol().to_string(),
        },
        n: args.n,
        method,
        genus: None,
        crosscap: None,
        coeffs: None,
        elapsed_ms,
        checks,
    };
    match &computed {
        Computed::Family(_, p) => record.coeffs = Some(coeff_strings(p)?),
        Computed::Total(t) => {
            let (g, c) = render_total_counts(t);
            record.genus = Some(g);
            record.crosscap = Some(c);
        }
    }

    match args.format {
        Format::Text => match &computed {
            Computed::Family(_, p) => writeln!(out, "{p}")?,
            Computed::Total(t) => writeln!(out, "{}", t.render())?,
        },
        Format::Json => {
            let s = serde_json::to_string(&record).map_err(|e| Failure {
                code: EXIT_FAIL,
                message: e.to_string(),
            })?;
            writeln!(out, "{s}")?;
        }
        Format::Csv => write_csv(&record, out)?,
    }

    if let Some(bad) = record.checks.iter().find(|c| !c.passed) {
        return Err(Failure {
            code: EXIT_FAIL,
            message: format!("invariant failed: {}", bad.name),
        });
    }
    Ok(EXIT_OK)
}

fn write_csv(record: &OutputRecord, out: &mut dyn Write) -> Result<(), Failure> {
    let to_failure = |e: csv::Error| Failure {
        code: EXIT_FAIL,
        message: e.to_string(),
    };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["part", "exponent", "count"]).map_err(to_failure)?;
    let parts: Vec<(&str, &Vec<String>)> = [
        (record.family.as_str(), record.coeffs.as_ref()),
        ("genus", record.genus.as_ref()),
        ("crosscap", record.crosscap.as_ref()),
    ]
    .into_iter()
    .filter_map(|(name, v)| v.map(|v| (name, v)))
    .collect();
    for (name, values) in parts {
        for (i, c) in values.iter().enumerate() {
            w.write_record([name, &i.to_string(), c]).map_err(to_failure)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = VerifyConfig {
        max_n_brute: args.max_n_brute,
        max_n_trace: args.max_n_trace,
        max_n_closed: args.max_n_closed,
        workers: args.workers.unwrap_or_else(default_workers),
        corrupt_l_coefficients: args.corrupt_l_coefficients,
    };
    let report = report::verify(&cfg)?;
    match args.format {
        Format::Json => {
            let s = serde_json::to_string(&VerifyRecord::from(&report)).map_err(|e| Failure {
                code: EXIT_FAIL,
                message: e.to_string(),
            })?;
            writeln!(out, "{s}")?;
        }
        Format::Text | Format::Csv => {
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                write!(out, "{status} {} ({})", c.name, c.scope)?;
                if let Some(ce) = &c.counterexample {
                    write!(out, ": counterexample {ce}")?;
                }
                if let Some(f) = &c.failure {
                    write!(out, ": {f}")?;
                }
                writeln!(out)?;
            }
        }
    }
    match report.first_failure() {
        None => Ok(EXIT_OK),
        Some(c) => Err(Failure {
            code: EXIT_FAIL,
            message: match &c.counterexample {
                Some(ce) => format!("first counterexample {ce} in {}", c.name),
                None => format!("{} failed", c.name),
            },
        }),
    }
}

fn cmd_table_check(out: &mut dyn Write) -> Result<i32, Failure> {
    let lines = report::table_check()?;
    for l in &lines {
        let status = if l.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} I_{{{}}} = {}", l.graph, l.computed)?;
        if !l.passed() {
            writeln!(out, "     expected {}", l.expected)?;
        }
    }
    Ok(if lines.iter().all(|l| l.passed()) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn cmd_errata(out: &mut dyn Write) -> Result<i32, Failure> {
    let entries = report::errata()?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "{e}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_dot(args: &DotArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = if args.closed_end {
        LadderGraph::closed_end(args.n)?
    } else {
        LadderGraph::ringel(args.n)?
    };
    write!(out, "{}", g.to_dot())?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Dist(a) => cmd_dist(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::TableCheck => cmd_table_check(out),
        Command::Errata => cmd_errata(out),
        Command::Dot(a) => cmd_dot(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
