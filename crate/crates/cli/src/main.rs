//! `caput-kit`: partitions, class data and induced-character tables of `S_n`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

mod render;

use std::process::ExitCode;

use caput_core::oracle::{Oracle, DEFAULT_ORACLE_MAX};
use caput_core::{
    caput_combinations, caput_combinations_all_sizes, caput_variations, character_matrix, class_size,
    enumerate_partitions, group_order, induced_value_quotient, intersection_count, verify, young_order, CaputQuery,
    CycleType, Error, Partition,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::render::join;

/// Largest `n` accepted by `table`.
const TABLE_MAX: usize = 20;
/// Largest `n` accepted by `partitions` and `induce`.
const PARTITIONS_MAX: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "caput-kit", version, about = "Induced characters of Young subgroups of S_n")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n, largest first part first.
    Partitions {
        #[arg(value_parser = clap::value_parser!(u32).range(0..=PARTITIONS_MAX as i64))]
        n: u32,
    },
    /// Print the p(n) x p(n) table of induced characters.
    Table {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=TABLE_MAX as i64))]
        n: u32,
    },
    /// Induced character of one Young subgroup, on one class or on all.
    Induce {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=PARTITIONS_MAX as i64))]
        n: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long = "class")]
        class: Option<String>,
        /// Print the orders that make up the quotient.
        #[arg(long)]
        show_work: bool,
    },
    /// Count variations with a prescribed caput.
    Caput {
        #[command(subcommand)]
        query: CaputCommand,
    },
    /// Cross-check formulas against brute force for every n up to N_MAX.
    Verify { n_max: u32 },
}

#[derive(Debug, Subcommand)]
enum CaputCommand {
    /// Elements of class rho fixing an ordered set partition of shape lambda.
    Variations {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=PARTITIONS_MAX as i64))]
        n: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long = "class")]
        class: String,
    },
    /// k-subsets of an n-set containing a fixed c-subset: `N K C`, or
    /// `N C --all-sizes` for subsets of every size.
    Combinations {
        #[arg(num_args = 2..=3, required = true)]
        numbers: Vec<usize>,
        #[arg(long)]
        all_sizes: bool,
    },
}

/// A failed command and its exit status.
struct Failure {
    code: u8,
    message: String,
    /// A report meant for stdout rather than an error for stderr.
    report: bool,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
            report: false,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Integrity(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
            report: false,
        }
    }
}

type CmdResult = Result<String, Failure>;

fn parse_weighted(flag: &str, text: &str, n: usize) -> Result<Partition, Failure> {
    let p: Partition = text
        .parse()
        .map_err(|e: Error| Failure::usage(format!("--{flag} `{text}`: {e}")))?;
    if p.weight() != n {
        return Err(Failure::usage(format!(
            "--{flag} `{text}` has weight {}, expected n = {n}",
            p.weight()
        )));
    }
    Ok(p)
}

fn cmd_partitions(n: usize, format: OutputFormat) -> CmdResult {
    let ps = enumerate_partitions(n);
    Ok(match format {
        OutputFormat::Text => render::partitions_text(&ps),
        OutputFormat::Csv => render::partitions_csv(&ps),
        OutputFormat::Json => render::partitions_json(&ps) + "\n",
    })
}

fn cmd_table(n: usize, format: OutputFormat) -> CmdResult {
    let m = character_matrix(n)?;
    Ok(match format {
        OutputFormat::Text => render::table_text(&m),
        OutputFormat::Csv => render::table_csv(&m),
        OutputFormat::Json => render::table_json(&m) + "\n",
    })
}

struct Work {
    group_order: BigUint,
    young_order: BigUint,
    class_size: BigUint,
    intersection_count: BigUint,
    value: BigUint,
}

fn work(n: usize, lambda: &Partition, rho: &CycleType) -> Result<Work, Failure> {
    Ok(Work {
        group_order: group_order(n),
        young_order: young_order(lambda),
        class_size: class_size(n, rho)?,
        intersection_count: intersection_count(lambda, rho)?,
        value: induced_value_quotient(lambda, rho)?,
    })
}

fn cmd_induce(n: usize, lambda: &str, class: Option<&str>, show_work: bool, format: OutputFormat) -> CmdResult {
    let lambda = parse_weighted("lambda", lambda, n)?;
    let rhos: Vec<CycleType> = match class {
        Some(text) => vec![parse_weighted("class", text, n)?.to_cycle_type()],
        None => enumerate_partitions(n)
            .iter()
            .rev()
            .map(Partition::to_cycle_type)
            .collect(),
    };
    let works = rhos
        .iter()
        .map(|rho| work(n, &lambda, rho))
        .collect::<Result<Vec<_>, _>>()?;
    let values: Vec<&BigUint> = works.iter().map(|w| &w.value).collect();

    let out = match format {
        OutputFormat::Json => {
            let mut doc = json!({
                "classes": rhos.iter().map(|r| r.to_partition().parts().to_vec()).collect::<Vec<_>>(),
                "lambda": lambda.parts(),
                "n": n,
                "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            if show_work {
                doc["work"] = works
                    .iter()
                    .map(|w| {
                        json!({
                            "class_size": w.class_size.to_string(),
                            "group_order": w.group_order.to_string(),
                            "intersection_count": w.intersection_count.to_string(),
                            "young_order": w.young_order.to_string(),
                        })
                    })
                    .collect();
            }
            doc.to_string() + "\n"
        }
        OutputFormat::Csv if !show_work => {
            let header: Vec<String> = rhos.iter().map(|r| render::csv_field(&r.class_label())).collect();
            format!("{}\n{}\n", header.join(","), join(&values, ","))
        }
        OutputFormat::Text if !show_work => format!("{}\n", join(&values, " ")),
        _ => {
            let sep = if format == OutputFormat::Csv { "," } else { "\t" };
            let mut out = [
                "class",
                "group_order",
                "young_order",
                "class_size",
                "intersection_count",
                "value",
            ]
            .join(sep);
            out.push('\n');
            for (rho, w) in rhos.iter().zip(&works) {
                let label = match format {
                    OutputFormat::Csv => render::csv_field(&rho.class_label()),
                    _ => rho.class_label(),
                };
                let cells = [
                    &w.group_order,
                    &w.young_order,
                    &w.class_size,
                    &w.intersection_count,
                    &w.value,
                ];
                out.push_str(&format!("{label}{sep}{}\n", join(&cells, sep)));
            }
            out
        }
    };
    Ok(out)
}

fn single_value(value: &BigUint, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", json!({ "value": value.to_string() })),
        _ => format!("{value}\n"),
    }
}

fn cmd_caput(query: &CaputCommand, format: OutputFormat) -> CmdResult {
    let value = match query {
        CaputCommand::Variations { n, lambda, class } => {
            let n = *n as usize;
            let lambda = parse_weighted("lambda", lambda, n)?;
            let rho = parse_weighted("class", class, n)?.to_cycle_type();
            caput_variations(&CaputQuery::new(n, lambda, rho)?)?.value
        }
        CaputCommand::Combinations { numbers, all_sizes } => match (numbers.as_slice(), all_sizes) {
            (&[n, c], true) => caput_combinations_all_sizes(n, c)?,
            (&[n, k, c], false) => caput_combinations(n, k, c)?,
            (_, true) => return Err(Failure::usage("with --all-sizes give exactly two numbers: N C")),
            (_, false) => return Err(Failure::usage("give three numbers: N K C")),
        },
    };
    Ok(single_value(&value, format))
}

fn oracle_from_env() -> Result<Oracle, Failure> {
    match std::env::var("CAPUT_ORACLE_MAX") {
        Ok(v) => v
            .parse()
            .map(Oracle::with_bound)
            .map_err(|_| Failure::usage(format!("CAPUT_ORACLE_MAX `{v}` is not a non-negative integer"))),
        Err(_) => Ok(Oracle::with_bound(DEFAULT_ORACLE_MAX)),
    }
}

fn cmd_verify(n_max: usize, format: OutputFormat) -> CmdResult {
    let oracle = oracle_from_env()?;
    verify_outcome(&verify::run(n_max, &oracle)?, format)
}

fn verify_outcome(report: &verify::VerifyReport, format: OutputFormat) -> CmdResult {
    let out = match format {
        OutputFormat::Json => {
            let levels: Vec<_> = report
                .levels
                .iter()
                .map(|l| {
                    json!({
                        "failure": l.failure.as_ref().map(ToString::to_string),
                        "n": l.n,
                        "pairs": l.pairs,
                        "passed": l.passed(),
                        "table_match": l.table_match,
                    })
                })
                .collect();
            json!({ "levels": levels, "passed": report.passed() }).to_string() + "\n"
        }
        _ => {
            let mut out = String::new();
            for l in &report.levels {
                match &l.failure {
                    None => {
                        out.push_str(&format!("n={}: pass ({} pairs)", l.n, l.pairs));
                        if l.table_match == Some(true) {
                            out.push_str(", matches built-in n=5 table");
                        }
                        out.push('\n');
                    }
                    Some(f) => out.push_str(&format!("n={}: FAIL {f}\n", l.n)),
                }
            }
            out.push_str(if report.passed() {
                "all checks passed\n"
            } else {
                "verification failed\n"
            });
            out
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure {
            code: 1,
            message: out,
            report: true,
        })
    }
}

fn run(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Partitions { n } => cmd_partitions(*n as usize, format),
        Command::Table { n } => cmd_table(*n as usize, format),
        Command::Induce {
            n,
            lambda,
            class,
            show_work,
        } => cmd_induce(*n as usize, lambda, class.as_deref(), *show_work, format),
        Command::Caput { query } => cmd_caput(query, format),
        Command::Verify { n_max } => cmd_verify(*n_max as usize, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure {
            code,
            message,
            report: true,
        }) => {
            print!("{message}");
            ExitCode::from(code)
        }
        Err(Failure { code, message, .. }) => {
            eprintln!("error: {}", message.trim_end());
            ExitCode::from(code)
        }
    }
}
