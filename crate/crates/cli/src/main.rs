//! `rrverify`: enumeration tables, single-identity verification, and
//! full-suite runs over the exact q-series identity registry.
//!
//! Exit codes: 0 on success (all comparisons MATCH), 1 on any MISMATCH,
//! 2 on usage errors, 3 on budget or parameter errors.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rrverify_core::error::Error;
use rrverify_core::partition::{count_lambda, count_lambda_omega, EnumBudget};
use rrverify_core::registry::{registry, verify, Params, Status, VerifyOptions};
use rrverify::format::{
    report_to_json, report_to_text, series_to_json, series_to_text, table_to_csv, table_to_json,
    table_to_text, TableRows,
};
use rrverify::runner::run_all;
use rrverify::series_cmd::{build as build_series, SeriesRequest, SERIES_NAMES};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "rrverify",
    version,
    about = "Exact verification of q-series identities for restricted multipartition families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every registered identity with parameters and defaults.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify a single identity, comparing both sides exactly.
    Verify {
        /// Identity id (see `list`).
        #[arg(long)]
        id: String,
        /// Truncation order (defaults to the entry's default order).
        #[arg(long)]
        order: Option<i64>,
        /// Extra parameter assignment `name=value` (repeatable).
        #[arg(long = "param", value_parser = parse_assignment)]
        params: Vec<(String, i64)>,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        omega: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the enumeration ceiling.
        #[arg(long)]
        budget: Option<i64>,
        /// Also recompute the enumeration-side oracle where registered.
        #[arg(long)]
        oracle: bool,
    },
    /// Count restricted multipartitions of n.
    Count {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<i64>,
    },
    /// Table of counts for n = 0..=max_n, optionally split by the statistic.
    Table {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        max_n: i64,
        #[arg(long)]
        by_omega: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<i64>,
    },
    /// Run the whole registry at default parameters.
    All {
        /// Override every entry's default order.
        #[arg(long)]
        order: Option<i64>,
        /// Worker pool size.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<i64>,
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate a named series and print it.
    Series {
        /// Series name (see `list --format text` footer or the README).
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 20)]
        order: i64,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        omega: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        budget: Option<i64>,
    },
}

fn parse_assignment(s: &str) -> Result<(String, i64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let value: i64 = value
        .trim()
        .parse()
        .map_err(|e| format!("bad value in `{s}`: {e}"))?;
    Ok((name.trim().to_string(), value))
}

fn resolve_budget(flag: Option<i64>) -> EnumBudget {
    if let Some(n) = flag {
        return EnumBudget::with_ceiling(n);
    }
    if let Ok(value) = std::env::var("RRVERIFY_BUDGET") {
        if let Ok(n) = value.trim().parse() {
            return EnumBudget::with_ceiling(n);
        }
        eprintln!("warning: ignoring unparsable RRVERIFY_BUDGET = {value:?}");
    }
    EnumBudget::default()
}

fn error_exit(err: &Error) -> i32 {
    eprintln!("error: {err}");
    3
}

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::List { format } => cmd_list(format),
        Command::Verify {
            id,
            order,
            params,
            a,
            m,
            n,
            omega,
            format,
            budget,
            oracle,
        } => {
            let mut assignments = Params::new();
            for (name, value) in params {
                assignments.insert(name, value);
            }
            for (name, value) in [("a", a), ("m", m), ("n", n), ("omega", omega)] {
                if let Some(v) = value {
                    assignments.insert(name.to_string(), v);
                }
            }
            cmd_verify(&id, order, assignments, format, budget, oracle)
        }
        Command::Count {
            a,
            m,
            n,
            format,
            budget,
        } => cmd_count(a, m, n, format, budget),
        Command::Table {
            a,
            m,
            max_n,
            by_omega,
            format,
            budget,
        } => cmd_table(a, m, max_n, by_omega, format, budget),
        Command::All {
            order,
            jobs,
            format,
            budget,
            oracle,
        } => cmd_all(order, jobs, format, budget, oracle),
        Command::Series {
            id,
            order,
            a,
            m,
            n,
            omega,
            format,
            budget,
        } => cmd_series(&id, order, SeriesRequest { a, m, n, omega }, format, budget),
    }
}

fn cmd_list(format: Format) -> i32 {
    let entries = registry();
    match format {
        Format::Json => {
            let values: Vec<serde_json::Value> = entries
                .iter()
                .map(|spec| {
                    serde_json::json!({
                        "id": spec.id,
                        "params": spec.params.iter().map(|p| serde_json::json!({
                            "name": p.name, "min": p.min, "max": p.max, "default": p.default,
                        })).collect::<Vec<_>>(),
                        "default_order": spec.default_order,
                        "tags": spec.tags,
                        "uses_enumeration": spec.uses_enumeration,
                        "has_oracle": spec.has_oracle(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(values));
        }
        _ => {
            println!("{:28} {:>5}  {:32} tags", "id", "order", "parameters");
            for spec in &entries {
                let params: Vec<String> = spec
                    .params
                    .iter()
                    .map(|p| format!("{}={} in {}..={}", p.name, p.default, p.min, p.max))
                    .collect();
                println!(
                    "{:28} {:>5}  {:32} {}",
                    spec.id,
                    spec.default_order,
                    params.join(" "),
                    spec.tags.join(",")
                );
            }
            println!("\n{} identities registered.", entries.len());
            println!("\nseries names for `series --id`:");
            for (name, help) in SERIES_NAMES {
                println!("  {name:14} {help}");
            }
        }
    }
    0
}

fn cmd_verify(
    id: &str,
    order: Option<i64>,
    params: Params,
    format: Format,
    budget: Option<i64>,
    oracle: bool,
) -> i32 {
    let opts = VerifyOptions {
        budget: resolve_budget(budget),
        oracle,
    };
    let order = match order {
        Some(n) => n,
        None => match rrverify_core::registry::find(id) {
            Ok(spec) => spec.default_order,
            Err(e) => return error_exit(&e),
        },
    };
    let start = Instant::now();
    match verify(id, &params, order, &opts) {
        Ok(mut report) => {
            report.elapsed = Some(start.elapsed());
            match format {
                Format::Json => println!("{}", report_to_json(&report)),
                _ => println!("{}", report_to_text(&report)),
            }
            if report.status == Status::Match {
                0
            } else {
                1
            }
        }
        Err(e) => error_exit(&e),
    }
}

fn cmd_count(a: i64, m: i64, n: i64, format: Format, budget: Option<i64>) -> i32 {
    let budget = resolve_budget(budget);
    match count_lambda(a, m, n, &budget) {
        Ok(count) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"a": a, "m": m, "n": n, "count": count})
                ),
                Format::Csv => {
                    println!("a,m,n,count");
                    println!("{a},{m},{n},{count}");
                }
                Format::Text => println!("{count}"),
            }
            0
        }
        Err(e) => error_exit(&e),
    }
}

fn cmd_table(a: i64, m: i64, max_n: i64, by_omega: bool, format: Format, budget: Option<i64>) -> i32 {
    let budget = resolve_budget(budget);
    let mut rows: TableRows = Vec::new();
    for n in 0..=max_n {
        if by_omega {
            match count_lambda_omega(a, m, n, &budget) {
                Ok(counts) => {
                    for (omega, count) in counts {
                        rows.push((n, count, Some(omega)));
                    }
                }
                Err(e) => return error_exit(&e),
            }
        } else {
            match count_lambda(a, m, n, &budget) {
                Ok(count) => rows.push((n, count, None)),
                Err(e) => return error_exit(&e),
            }
        }
    }
    match format {
        Format::Json => println!("{}", table_to_json(&rows)),
        Format::Csv => print!("{}", table_to_csv(&rows, by_omega)),
        Format::Text => print!("{}", table_to_text(&rows, by_omega)),
    }
    0
}

fn cmd_all(
    order: Option<i64>,
    jobs: usize,
    format: Format,
    budget: Option<i64>,
    oracle: bool,
) -> i32 {
    let opts = VerifyOptions {
        budget: resolve_budget(budget),
        oracle,
    };
    let results = run_all(order, jobs, &opts);
    let mut mismatched = 0usize;
    let mut errored = 0usize;
    for (id, outcome) in &results {
        match outcome {
            Ok(report) => {
                if report.status != Status::Match {
                    mismatched += 1;
                }
                match format {
                    Format::Json => println!("{}", report_to_json(report)),
                    _ => println!("{}", report_to_text(report)),
                }
            }
            Err(e) => {
                errored += 1;
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({"id": id, "status": "ERROR", "error": e.to_string()})
                    ),
                    _ => println!("{id}: ERROR ({e})"),
                }
            }
        }
    }
    if format != Format::Json {
        println!(
            "\n{} entries: {} MATCH, {} MISMATCH, {} ERROR",
            results.len(),
            results.len() - mismatched - errored,
            mismatched,
            errored
        );
    }
    if mismatched > 0 {
        1
    } else if errored > 0 {
        3
    } else {
        0
    }
}

fn cmd_series(
    id: &str,
    order: i64,
    request: SeriesRequest,
    format: Format,
    budget: Option<i64>,
) -> i32 {
    if order < 0 {
        return error_exit(&Error::BadParameters("order must be nonnegative"));
    }
    let budget = resolve_budget(budget);
    match build_series(id, &request, order, &budget) {
        Ok(series) => {
            match format {
                Format::Json => println!("{}", series_to_json(&series)),
                Format::Csv => {
                    println!("q_exp,x_exp,coeff");
                    for (q, x, c) in series.terms() {
                        println!("{q},{x},{}/{}", c.numer(), c.denom());
                    }
                }
                Format::Text => println!("{}", series_to_text(&series)),
            }
            0
        }
        Err(e) => error_exit(&e),
    }
}
