//! `symconj`: decompositions of the conjugation action of `S_n`, global-class
//! checks, Littlewood–Richardson coefficients and odd-prime decompositions.
//!
//! Exit codes: 0 success (or global), 1 definite negative verdict, 2 usage
//! error, 3 scale guard, 4 internal integrity failure.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symconj::conjrep::{a_n, class_characteristic, f_n_schur, g_n, w_lambda};
use symconj::globalcheck::{dressler_decomposition, is_global, seed_partition, verify_characterization};
use symconj::schur::{lr_coefficient, missing_irreducibles};
use symconj::{charcalc, json, oracle, profile, Error, Partition, Schur};

const EXPAND_CEILING: usize = 14;
const VERIFY_CEILING: usize = 12;
const ORACLE_CEILING: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "symconj", version, about = "Conjugation action of the symmetric group on its classes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Use the sign-twisted conjugation action.
    #[arg(long, global = true)]
    twisted: bool,

    /// Compute class expansions by brute-force group enumeration.
    #[arg(long, global = true)]
    oracle: bool,

    /// Lift the default size ceilings.
    #[arg(long, global = true)]
    allow_slow: bool,

    /// Print time spent per phase on stderr.
    #[arg(long, global = true)]
    profile: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    /// f_n, the module on n-cycles (argument: n)
    Fn,
    /// A_n, every irreducible once (argument: n)
    An,
    /// g_n (argument: n)
    Gn,
    /// The module on the class of a cycle type (argument: partition)
    Class,
    /// Product of g over the parts (argument: partition)
    Wlambda,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Schur expansion.
    Expand {
        #[arg(value_enum)]
        target: Target,
        /// n for fn/an/gn, a partition such as 5,3,1 for class/wlambda.
        value: String,
    },
    /// Decide whether a class contains every irreducible.
    CheckGlobal {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Sweep every class for each n and compare with the odd-distinct-parts rule.
    Verify {
        #[arg(long, default_value_t = VERIFY_CEILING)]
        max_n: usize,
    },
    /// Littlewood–Richardson coefficient c^lambda_{mu,nu}.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Write n as a sum of distinct odd primes.
    Dressler {
        n: usize,
        /// Print a seed class (odd distinct parts from 1 and odd primes) instead.
        #[arg(long)]
        seed: bool,
    },
    /// Dump the character table of S_n.
    CharacterTable { n: usize },
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse::<Partition>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Scale(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ScaleGuard { .. } => Failure::Scale(e.to_string()),
            Error::ParsePartition { .. } | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.profile {
        profile::enable();
    }
    let outcome = run(&cli);
    if cli.profile {
        for (phase, elapsed) in profile::report() {
            eprintln!("profile: {:<22} {:>10.3} ms", phase.name(), elapsed.as_secs_f64() * 1e3);
        }
    }
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Scale(msg)) => {
            eprintln!("error: {msg} (use --allow-slow to raise the limit)");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Expand { target, value } => expand(cli, *target, value),
        Command::CheckGlobal { partition } => check_global(cli, partition),
        Command::Verify { max_n } => verify(cli, *max_n),
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(lambda, mu, nu);
            match cli.format {
                Format::Table => println!("{c}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "lambda": lambda.parts(), "mu": mu.parts(), "nu": nu.parts(), "coefficient": c
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dressler { n, seed } => {
            if *n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            let found = if *seed { seed_partition(*n) } else { dressler_decomposition(*n) };
            match cli.format {
                Format::Table => println!("{}", found.as_ref().map_or("none".to_string(), Partition::to_text)),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "n": n, "seed": seed, "partition": found.as_ref().map(|p| p.parts().to_vec()) })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CharacterTable { n } => {
            guard(*n, EXPAND_CEILING, cli.allow_slow)?;
            let table = charcalc::character_table(*n);
            match cli.format {
                Format::Json => println!("{}", json::character_table_to_json(&table)),
                Format::Table => {
                    for shape in table.partitions() {
                        let row: Vec<String> = table
                            .partitions()
                            .iter()
                            .map(|mu| table.get(shape, mu).expect("entry").to_string())
                            .collect();
                        println!("{:<24} {}", shape.to_string(), row.join(" "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn guard(n: usize, ceiling: usize, allow_slow: bool) -> Result<(), Failure> {
    if n > ceiling && !allow_slow {
        return Err(Error::ScaleGuard { n, limit: ceiling }.into());
    }
    Ok(())
}

fn expand(cli: &Cli, target: Target, value: &str) -> Result<ExitCode, Failure> {
    let expansion = match target {
        Target::Fn | Target::An | Target::Gn => {
            let n: usize = value
                .parse()
                .map_err(|_| Failure::Usage(format!("expected a nonnegative integer, got {value:?}")))?;
            guard(n, EXPAND_CEILING, cli.allow_slow)?;
            match target {
                Target::Fn if n == 0 => return Err(Failure::Usage("f_n needs n >= 1".into())),
                Target::Fn => (*f_n_schur(n)?).clone(),
                Target::An => (*a_n(n)).clone(),
                _ => (*g_n(n)).clone(),
            }
        }
        Target::Class | Target::Wlambda => {
            let lambda: Partition = value.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            if lambda.is_empty() {
                return Err(Failure::Usage("partition must be nonempty".into()));
            }
            guard(lambda.size(), EXPAND_CEILING, cli.allow_slow)?;
            if target == Target::Wlambda {
                w_lambda(&lambda)
            } else if cli.oracle {
                let ceiling = if cli.allow_slow { oracle::MAX_N } else { ORACLE_CEILING };
                if lambda.size() > ceiling {
                    return Err(Error::ScaleGuard { n: lambda.size(), limit: ceiling }.into());
                }
                oracle::brute_multiplicities(&lambda, cli.twisted)?
            } else {
                class_characteristic(&lambda, cli.twisted)?.expansion
            }
        }
    };
    let missing = missing_irreducibles(&expansion)?;
    match cli.format {
        Format::Json => println!("{}", json::schur_to_json(&expansion)),
        Format::Table => print_schur(&expansion, &missing),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_schur(a: &Schur, missing: &BTreeSet<Partition>) {
    for (lambda, c) in a.terms() {
        println!("s{:<24} {c}", lambda.to_string());
    }
    println!("missing: {}", format_set(missing));
}

fn format_set(ps: &BTreeSet<Partition>) -> String {
    if ps.is_empty() {
        "none".to_string()
    } else {
        ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn check_global(cli: &Cli, lambda: &Partition) -> Result<ExitCode, Failure> {
    if lambda.is_empty() {
        return Err(Failure::Usage("partition must be nonempty".into()));
    }
    guard(lambda.size(), EXPAND_CEILING, cli.allow_slow)?;
    let verdict = is_global(lambda, cli.twisted)?;
    match cli.format {
        Format::Json => println!("{}", json::verdict_to_json(&verdict)),
        Format::Table => {
            let kind = if verdict.is_global { "global" } else { "not global" };
            println!("class {lambda}: {kind}");
            if !verdict.is_global {
                println!("missing: {}", format_set(&verdict.missing));
            }
        }
    }
    Ok(if verdict.is_global { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify(cli: &Cli, max_n: usize) -> Result<ExitCode, Failure> {
    if max_n < 2 {
        return Err(Failure::Usage(format!("--max-n must be at least 2, got {max_n}")));
    }
    guard(max_n, VERIFY_CEILING, cli.allow_slow)?;
    let mut reports = Vec::new();
    for n in 2..=max_n {
        reports.push(verify_characterization(n, cli.twisted)?);
    }
    match cli.format {
        Format::Json => println!("{}", json::reports_to_json(&reports)),
        Format::Table => {
            for r in &reports {
                println!(
                    "n={:<3} computed: {:<28} predicted: {:<28} discrepancies: {}",
                    r.n,
                    format_set(&r.computed_global),
                    format_set(&r.predicted_global),
                    format_set(&r.discrepancies)
                );
            }
        }
    }
    let ok = reports.iter().all(|r| r.is_consistent());
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
