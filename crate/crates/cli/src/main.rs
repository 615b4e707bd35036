//! `blockderange`: count derangements that ascend or descend in prescribed blocks.

use std::io::{self, Write};
use std::process::ExitCode;

use blockderange::counters::{count_recursion, count_sum};
use blockderange::density::density_table;
use blockderange::lambda::efw_polynomial;
use blockderange::ornaments::{count_satisfactory, phi, psi, symmetry_order};
use blockderange::perm::format_cycles;
use blockderange::series::count_genfunc;
use blockderange::verify::sweep;
use blockderange::{oracle, BlockSpec, Error, Execution, Limits};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

const EXIT_IDENTITY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

const VERIFY_MAX_N: usize = 9;

#[derive(Parser, Debug)]
#[command(name = "blockderange", version, about = "Count (A,S)-derangements and check the identities around them")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Raise (or lower) the size cap of every exhaustive method to this n.
    #[arg(long, global = true)]
    limit_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Sum,
    Recursion,
    Series,
    Oracle,
    Ornaments,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Sum => "sum",
            Method::Recursion => "recursion",
            Method::Series => "series",
            Method::Oracle => "oracle",
            Method::Ornaments => "ornaments",
            Method::All => "all",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count (A,S)-derangements.
    Count {
        /// Comma-separated block sizes, e.g. 2,2.
        #[arg(long)]
        blocks: String,
        /// Comma-separated 1-based descending blocks; empty for none.
        #[arg(long, default_value = "")]
        descending: String,
        #[arg(long, value_enum, default_value_t = Method::Sum)]
        method: Method,
    },
    /// Cross-check every method and identity on all small block systems.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
    /// Print the alternating λ-polynomial for all-descending blocks.
    Lambda {
        #[arg(long)]
        blocks: String,
    },
    /// Derangement density of the scaled block systems c·A for c = 1..scale-max.
    Density {
        #[arg(long)]
        blocks: String,
        #[arg(long, default_value = "")]
        descending: String,
        #[arg(long, default_value_t = 8)]
        scale_max: usize,
    },
    /// Print a worked example.
    Fixture { name: String },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn identity(message: impl Into<String>) -> Self {
        Failure { code: EXIT_IDENTITY, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            Error::IdentityFailed(_) | Error::InexactDivision(_) => EXIT_IDENTITY,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_IDENTITY, message: e.to_string() }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure { code: EXIT_IDENTITY, message: e.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Failure::usage(format!("{what}: '{t}' is not a nonnegative integer")))
        })
        .collect()
}

fn parse_spec(blocks: &str, descending: &str) -> Result<BlockSpec, Failure> {
    let sizes = parse_list(blocks, "--blocks")?;
    let desc = parse_list(descending, "--descending")?;
    Ok(BlockSpec::new(sizes, desc)?)
}

/// One JSON line per count; field order is part of the output contract.
#[derive(Serialize)]
struct CountLine<'a> {
    blocks: &'a [usize],
    descending: &'a [usize],
    method: &'a str,
    count: String,
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn run_method(spec: &BlockSpec, method: Method, limits: &Limits) -> blockderange::Result<BigInt> {
    Ok(match method {
        Method::Sum => count_sum(spec),
        Method::Recursion => count_recursion(spec),
        Method::Series => count_genfunc(spec),
        Method::Oracle => oracle::count_derangements_oracle(spec, limits)?,
        Method::Ornaments => count_satisfactory(spec, limits)?,
        Method::All => unreachable!("expanded by the caller"),
    })
}

fn cmd_count(out: &mut dyn Write, format: Format, spec: &BlockSpec, method: Method, limits: &Limits) -> CmdResult {
    let methods: Vec<Method> = if method == Method::All {
        let n = spec.n();
        let mut m = vec![Method::Sum, Method::Recursion, Method::Series];
        if n <= limits.enumeration {
            m.push(Method::Oracle);
        }
        if n <= limits.ornaments {
            m.push(Method::Ornaments);
        }
        m
    } else {
        vec![method]
    };
    let mut results = Vec::new();
    for m in &methods {
        results.push((*m, run_method(spec, *m, limits)?));
    }

    match format {
        Format::Plain if method != Method::All => writeln!(out, "{}", results[0].1)?,
        Format::Plain => {
            for (m, c) in &results {
                writeln!(out, "{} {}", m.name(), c)?;
            }
        }
        Format::Json => {
            for (m, c) in &results {
                let line = CountLine {
                    blocks: spec.sizes(),
                    descending: spec.descending(),
                    method: m.name(),
                    count: c.to_string(),
                };
                writeln!(out, "{}", serde_json::to_string(&line).expect("plain data serializes"))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["blocks", "descending", "method", "count"])?;
            for (m, c) in &results {
                w.write_record([join(spec.sizes()), join(spec.descending()), m.name().to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }

    let first = &results[0].1;
    if let Some((m, c)) = results.iter().find(|(_, c)| c != first) {
        return Err(Failure::identity(format!(
            "methods disagree: {} gives {first}, {} gives {c}",
            results[0].0.name(),
            m.name()
        )));
    }
    Ok(())
}

fn cmd_verify(out: &mut dyn Write, format: Format, max_n: usize, max_k: usize, limits: &Limits) -> CmdResult {
    if max_n > VERIFY_MAX_N {
        return Err(Failure {
            code: EXIT_LIMIT,
            message: format!("verify needs --max-n ≤ {VERIFY_MAX_N} (got {max_n})"),
        });
    }
    let report = sweep(max_n, max_k, limits, Execution::default())?;
    match format {
        Format::Plain => {
            for o in &report.outcomes {
                writeln!(out, "{} {} [{}]", o.spec, o.count, o.checks.join(","))?;
            }
            for f in report.failures() {
                writeln!(out, "FAIL {f}")?;
            }
            if report.passed() {
                writeln!(out, "all identities hold: {} specs, {} checks", report.outcomes.len(), report.check_count())?;
            }
        }
        Format::Json => {
            for o in &report.outcomes {
                let line = CountLine {
                    blocks: o.spec.sizes(),
                    descending: o.spec.descending(),
                    method: "verify",
                    count: o.count.to_string(),
                };
                writeln!(out, "{}", serde_json::to_string(&line).expect("plain data serializes"))?;
            }
            let summary = serde_json::json!({
                "passed": report.passed(),
                "specs": report.outcomes.len(),
                "checks": report.check_count(),
                "failures": report.failures().collect::<Vec<_>>(),
            });
            writeln!(out, "{summary}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["blocks", "descending", "count", "checks", "passed"])?;
            for o in &report.outcomes {
                w.write_record([
                    join(o.spec.sizes()),
                    join(o.spec.descending()),
                    o.count.to_string(),
                    o.checks.join(";"),
                    o.failures.is_empty().to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    if !report.passed() {
        return Err(Failure::identity(format!("{} identity failures", report.failures().count())));
    }
    Ok(())
}

fn cmd_lambda(out: &mut dyn Write, format: Format, blocks: &str) -> CmdResult {
    let sizes = parse_list(blocks, "--blocks")?;
    let spec = BlockSpec::all_descending(sizes.clone())?;
    let poly = efw_polynomial(&sizes)?;
    let count = count_sum(&spec);
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    match format {
        Format::Plain => {
            writeln!(out, "coefficients [{}]", coeffs.join(","))?;
            writeln!(out, "polynomial {poly}")?;
            if poly.is_constant() {
                writeln!(out, "constant {}", poly.constant_term())?;
            }
            writeln!(out, "descending derangements {count}")?;
        }
        Format::Json => {
            let v = serde_json::json!({
                "blocks": sizes,
                "coefficients": coeffs,
                "constant": poly.is_constant(),
                "descending_derangements": count.to_string(),
            });
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["blocks", "coefficients", "constant", "descending_derangements"])?;
            w.write_record([join(&sizes), coeffs.join(";"), poly.is_constant().to_string(), count.to_string()])?;
            w.flush()?;
        }
    }
    if !poly.is_constant() {
        return Err(Failure::identity(format!("λ-polynomial {poly} is not constant")));
    }
    if poly.constant_term() != count {
        return Err(Failure::identity(format!("constant {} != count {count}", poly.constant_term())));
    }
    Ok(())
}

fn cmd_density(out: &mut dyn Write, format: Format, spec: &BlockSpec, scale_max: usize) -> CmdResult {
    let rows = density_table(spec, scale_max)?;
    match format {
        Format::Plain => {
            for r in &rows {
                writeln!(
                    out,
                    "({}) {} {} {} {:.12}",
                    join(&r.sizes),
                    r.derangements,
                    r.total,
                    r.ratio,
                    r.distance_from_inverse_e
                )?;
            }
        }
        Format::Json => {
            for r in &rows {
                let v = serde_json::json!({
                    "blocks": r.sizes,
                    "descending": spec.descending(),
                    "derangements": r.derangements.to_string(),
                    "total": r.total.to_string(),
                    "ratio": r.ratio,
                    "distance_from_inverse_e": format!("{:.12}", r.distance_from_inverse_e),
                });
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["blocks", "descending", "derangements", "total", "ratio", "distance_from_inverse_e"])?;
            for r in &rows {
                w.write_record([
                    join(&r.sizes),
                    join(spec.descending()),
                    r.derangements.to_string(),
                    r.total.to_string(),
                    r.ratio.clone(),
                    format!("{:.12}", r.distance_from_inverse_e),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_fixture(out: &mut dyn Write, name: &str) -> CmdResult {
    if name != "figure1" {
        return Err(Failure::usage(format!("unknown fixture '{name}' (known: figure1)")));
    }
    let (spec, p) = blockderange::figure1_permutation();
    let ornament = phi(&spec, &p)?;
    let aug = psi(&ornament);
    writeln!(out, "spec {spec}")?;
    writeln!(out, "permutation {}", p.images().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))?;
    writeln!(out, "as-permutation {}", spec.is_as_permutation(&p)?)?;
    writeln!(out, "cycles {}", format_cycles(&p.cycles()))?;
    writeln!(out, "ornament {ornament}")?;
    writeln!(out, "symmetry order {}", symmetry_order(&ornament))?;
    writeln!(out, "augmentation {aug}")?;
    for (period, partition) in aug.entries() {
        // repetition counts in the order the ornament lists its cycles
        let reps: Vec<String> = ornament
            .cycles()
            .iter()
            .filter(|(w, _)| &w.fundamental_period().0 == period)
            .flat_map(|(w, m)| std::iter::repeat_n(w.fundamental_period().1.to_string(), *m))
            .collect();
        writeln!(out, "period {period} partition {partition} repetitions ({})", reps.join(","))?;
    }
    writeln!(out, "augmented symmetry order {}", aug.symmetry_order())?;
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let limits = cli.limit_n.map(Limits::uniform).unwrap_or_default();
    match cli.command {
        Command::Count { blocks, descending, method } => {
            let spec = parse_spec(&blocks, &descending)?;
            cmd_count(out, cli.format, &spec, method, &limits)
        }
        Command::Verify { max_n, max_k } => cmd_verify(out, cli.format, max_n, max_k, &limits),
        Command::Lambda { blocks } => cmd_lambda(out, cli.format, &blocks),
        Command::Density { blocks, descending, scale_max } => {
            let spec = parse_spec(&blocks, &descending)?;
            cmd_density(out, cli.format, &spec, scale_max)
        }
        Command::Fixture { name } => cmd_fixture(out, &name),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
