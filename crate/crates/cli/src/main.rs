//! Command line front end.
//!
//! Four subcommands: `exact` prints a single count, `asym` prints a
//! log-scale estimate with its saddle data, `compare` tabulates both sides
//! as CSV, and `check` runs a named property suite.  Structured output is
//! JSON on stdout; diagnostics go to stderr.  Exit codes: 0 success, 1 a
//! check suite found a counterexample, 2 bad usage or arguments out of
//! range, 3 an enumeration limit was exceeded.

use std::f64::consts::LN_2;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use excedance::asym::{
    diagonal_estimate, log_estimate_block, log_of_count, q_specialized, saddle_point,
};
use excedance::count::{
    count_block_word, count_stretch_free_cycles, count_vincular_avoiders_bruteforce,
    count_word_bruteforce, DEFAULT_BRUTE_FORCE_LIMIT,
};
use excedance::perm::ExcedanceWord;
use excedance::series::count_block_word_via_series;
use excedance::verify::{all_passed, run_suite, Suite};
use excedance::Error;

/// Largest size accepted by `compare`; exact counts stay cheap below it.
const MAX_COMPARE_SIZE: usize = 2000;

#[derive(Parser)]
#[command(
    name = "excedance",
    version,
    about = "Count permutations by excedance word and estimate the counts asymptotically"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact counts: block words, arbitrary words, stretch-free cycles, avoiders
    Exact(ExactArgs),
    /// Saddle-point estimate of a count, on the log scale
    Asym(AsymArgs),
    /// Exact versus estimated counts as CSV, one row per size
    Compare(CompareArgs),
    /// Run a named property suite and report each property
    Check(CheckArgs),
}

#[derive(Args)]
struct ExactArgs {
    /// Length of the leading b-run of a block word (with --s)
    #[arg(long)]
    r: Option<usize>,
    /// Length of the trailing a-run of a block word (with --r)
    #[arg(long)]
    s: Option<usize>,
    /// Count permutations with exactly this excedance word, by enumeration
    #[arg(long)]
    word: Option<String>,
    /// Count stretch-free full cycles on this many elements
    #[arg(long)]
    cstar: Option<usize>,
    /// Count permutations of this size avoiding both vincular patterns
    #[arg(long)]
    alpha: Option<usize>,
    /// Route the block count through the generating-function recurrence
    #[arg(long)]
    series: bool,
    /// Largest ground set the enumerating modes will accept
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct AsymArgs {
    /// First direction index; the target block word has r-1 b's and s a's
    #[arg(long)]
    r: Option<usize>,
    /// Second direction index, the length of the a-run
    #[arg(long)]
    s: Option<usize>,
    /// Estimate the middle count for permutations of this size instead
    #[arg(long)]
    diag: Option<usize>,
}

#[derive(Args)]
struct CompareArgs {
    /// Take the middle column of the triangle at each size
    #[arg(long)]
    diag: bool,
    /// Fixed direction A:B; A+B must divide each size
    #[arg(long, value_name = "A:B")]
    ray: Option<String>,
    /// Comma-separated sizes, each between 2 and 2000
    #[arg(long = "n-list", value_name = "N1,N2,...")]
    n_list: String,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: bijections, counting, minimality, series, monotone
    #[arg(long)]
    suite: String,
    /// Size budget handed to the suite
    #[arg(long = "max-n")]
    max_n: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Exact(args) => run_exact(args),
        Command::Asym(args) => run_asym(args),
        Command::Compare(args) => run_compare(args),
        Command::Check(args) => run_check(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::LimitExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit(inputs: serde_json::Value, result: serde_json::Value, warnings: Vec<String>) {
    let doc = json!({
        "inputs": inputs,
        "result": result,
        "warnings": warnings,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
}

fn usage(message: &str) -> Error {
    Error::Parse(message.to_string())
}

fn run_exact(args: ExactArgs) -> Result<ExitCode, Error> {
    let limit = args.limit.unwrap_or(DEFAULT_BRUTE_FORCE_LIMIT);
    let block = match (args.r, args.s) {
        (Some(r), Some(s)) => Some((r, s)),
        (None, None) => None,
        _ => return Err(usage("--r and --s must be given together")),
    };
    let selectors =
        block.is_some() as u8 + args.word.is_some() as u8 + args.cstar.is_some() as u8 + args.alpha.is_some() as u8;
    if selectors != 1 {
        return Err(usage(
            "choose exactly one of --r/--s, --word, --cstar, --alpha",
        ));
    }
    if args.series && block.is_none() {
        return Err(usage("--series applies only to --r/--s block counts"));
    }

    let (inputs, count, method) = if let Some((r, s)) = block {
        if args.series {
            (
                json!({"mode": "block", "r": r, "s": s}),
                count_block_word_via_series(r, s)?,
                "series",
            )
        } else {
            (
                json!({"mode": "block", "r": r, "s": s}),
                count_block_word(r, s),
                "formula",
            )
        }
    } else if let Some(text) = args.word {
        let word: ExcedanceWord = text.parse()?;
        let count = count_word_bruteforce(&word, limit)?;
        (
            json!({"mode": "word", "word": word.to_string(), "limit": limit}),
            count,
            "bruteforce",
        )
    } else if let Some(m) = args.cstar {
        (
            json!({"mode": "cstar", "m": m}),
            count_stretch_free_cycles(m)?,
            "formula",
        )
    } else {
        let n = args.alpha.expect("selector counted above");
        (
            json!({"mode": "alpha", "n": n, "limit": limit}),
            count_vincular_avoiders_bruteforce(n, limit)?,
            "bruteforce",
        )
    };

    emit(
        inputs,
        json!({"count": count.to_string(), "method": method}),
        Vec::new(),
    );
    Ok(ExitCode::SUCCESS)
}

fn run_asym(args: AsymArgs) -> Result<ExitCode, Error> {
    let block = match (args.r, args.s) {
        (Some(r), Some(s)) => Some((r, s)),
        (None, None) => None,
        _ => return Err(usage("--r and --s must be given together")),
    };
    match (block, args.diag) {
        (Some(_), Some(_)) | (None, None) => {
            return Err(usage("choose exactly one of --r/--s or --diag"));
        }
        (Some((r, s)), None) => {
            let estimate = log_estimate_block(r, s)?;
            let sp = saddle_point(r, s)?;
            let (mantissa, exponent10) = estimate.scientific();
            let mut warnings = Vec::new();
            if !estimate.in_sector {
                warnings.push(format!(
                    "direction ({r}, {s}) lies outside the verified sector; the estimate is an extrapolation"
                ));
            }
            emit(
                json!({"mode": "block", "r": r, "s": s}),
                json!({
                    "x": sp.x,
                    "y": sp.y,
                    "q": q_specialized(sp.x, sp.y),
                    "log_estimate": estimate.log_value,
                    "log_factorials": estimate.log_factorials,
                    "log_power_term": estimate.log_power_term,
                    "log_prefactor": estimate.log_prefactor,
                    "leading_coefficient": estimate.leading_coefficient,
                    "outside_sector": !estimate.in_sector,
                    "scientific": {"mantissa": mantissa, "exponent10": exponent10},
                }),
                warnings,
            );
        }
        (None, Some(n)) => {
            let estimate = diagonal_estimate(n)?;
            let (mantissa, exponent10) = estimate.scientific();
            emit(
                json!({"mode": "diag", "n": n}),
                json!({
                    "x": LN_2,
                    "y": LN_2,
                    "q": q_specialized(LN_2, LN_2),
                    "log_estimate": estimate.log_value,
                    "leading_coefficient": estimate.leading_coefficient,
                    "outside_sector": false,
                    "scientific": {"mantissa": mantissa, "exponent10": exponent10},
                }),
                Vec::new(),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

enum CompareMode {
    Diag,
    Ray { a: usize, b: usize },
}

/// One CSV row; `r + s = n` and the ratio is estimate minus exact.
struct ComparisonRow {
    n: usize,
    r: usize,
    s: usize,
    log_exact: f64,
    log_estimate: f64,
}

impl ComparisonRow {
    fn log_ratio(&self) -> f64 {
        self.log_estimate - self.log_exact
    }
}

impl CompareMode {
    fn split(&self, n: usize) -> Result<(usize, usize), Error> {
        match *self {
            CompareMode::Diag => {
                let r = (n - 1) / 2 + 1;
                Ok((r, n - r))
            }
            CompareMode::Ray { a, b } => {
                if !n.is_multiple_of(a + b) {
                    return Err(usage(&format!(
                        "size {n} is not divisible by {} for ray {a}:{b}",
                        a + b
                    )));
                }
                let r = n / (a + b) * a;
                Ok((r, n - r))
            }
        }
    }
}

fn parse_ray(text: &str) -> Result<CompareMode, Error> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| usage("ray must look like A:B"))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| usage("ray components must be positive integers"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| usage("ray components must be positive integers"))?;
    if a == 0 || b == 0 {
        return Err(usage("ray components must be positive integers"));
    }
    Ok(CompareMode::Ray { a, b })
}

fn run_compare(args: CompareArgs) -> Result<ExitCode, Error> {
    let mode = match (args.diag, args.ray) {
        (true, None) => CompareMode::Diag,
        (false, Some(text)) => parse_ray(&text)?,
        _ => return Err(usage("choose exactly one of --diag or --ray")),
    };
    let mut sizes = Vec::new();
    for part in args.n_list.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|_| usage(&format!("bad size {:?} in --n-list", part.trim())))?;
        if !(2..=MAX_COMPARE_SIZE).contains(&n) {
            return Err(usage(&format!(
                "size {n} outside the supported range 2..={MAX_COMPARE_SIZE}"
            )));
        }
        sizes.push(n);
    }
    if sizes.is_empty() {
        return Err(usage("--n-list must contain at least one size"));
    }

    // Validate every row before printing anything, so a bad size cannot
    // leave a truncated table behind.
    let mut rows = Vec::new();
    for &n in &sizes {
        let (r, s) = mode.split(n)?;
        let exact = log_of_count(&count_block_word(r - 1, s))?;
        let estimate = match mode {
            CompareMode::Diag => diagonal_estimate(n)?,
            CompareMode::Ray { .. } => log_estimate_block(r, s)?,
        };
        if !estimate.in_sector {
            eprintln!(
                "warning: direction ({r}, {s}) lies outside the verified sector; the estimate is an extrapolation"
            );
        }
        rows.push(ComparisonRow {
            n,
            r,
            s,
            log_exact: exact,
            log_estimate: estimate.log_value,
        });
    }

    println!("n,r,s,log_exact,log_estimate,log_ratio");
    for row in rows {
        println!(
            "{},{},{},{},{},{}",
            row.n,
            row.r,
            row.s,
            row.log_exact,
            row.log_estimate,
            row.log_ratio()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(args: CheckArgs) -> Result<ExitCode, Error> {
    let suite = Suite::parse(&args.suite)?;
    let max_n = args.max_n.unwrap_or_else(|| suite.default_max_n());
    let checks = run_suite(suite, max_n);
    let passed = all_passed(&checks);
    let properties: Vec<serde_json::Value> = checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "instances": c.instances,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    emit(
        json!({"suite": suite.name(), "max_n": max_n}),
        json!({"passed": passed, "properties": properties}),
        Vec::new(),
    );
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
