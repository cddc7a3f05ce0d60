//! Command-line front end: run verification suites, list the registry,
//! inspect named product series, and tabulate partition statistics.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcrank::partitions::{enumerate, stats, Stat};
use qcrank::products::{named_product, ProductName};
use qcrank::verify::{registry, run_suite, IdentityReport};

const ORDER_CAP: i64 = 200;

#[derive(Parser)]
#[command(name = "qcrank", about = "q-series identity verifier for rank and crank congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks and report pass/fail per check.
    Verify(VerifyArgs),
    /// Print the registry catalogue: id, statement, description.
    List,
    /// Print the coefficients of a named infinite product.
    Series(SeriesArgs),
    /// Partition statistics by enumeration.
    Partitions {
        #[command(subcommand)]
        command: PartitionsCommand,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every check carrying this tag (base, oracle, mod5, mod7, products, appell, all).
    #[arg(long, conflicts_with = "id")]
    suite: Option<String>,
    /// Run one check by id (repeatable).
    #[arg(long)]
    id: Vec<String>,
    /// Truncation order override (default: each check's own order).
    #[arg(long)]
    order: Option<i64>,
    /// Allow orders above the safety cap of 200.
    #[arg(long)]
    unlimited_order: bool,
    /// Lowest exponent compared (default: each check's own policy).
    #[arg(long)]
    min_exp: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: available cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// List the selected checks instead of running them.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SeriesArgs {
    /// Product name: euler, g, h, l, n, q, a, b, c, d, e.
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 20)]
    order: i64,
}

#[derive(Subcommand)]
enum PartitionsCommand {
    /// Tabulate a statistic over the partitions of n, by residue mod k.
    Stats {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// rank, crank, or ones (one-counts by crank class).
        #[arg(long)]
        stat: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders --help/--version on stdout with success status
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::List => {
            list_identities();
            Ok(ExitCode::SUCCESS)
        }
        Command::Series(args) => series(args),
        Command::Partitions { command: PartitionsCommand::Stats { n, k, stat } } => {
            partition_stats(n, k, &stat)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if let Some(order) = args.order {
        if order < 1 {
            return Err("--order must be at least 1".into());
        }
        if order > ORDER_CAP && !args.unlimited_order {
            return Err(format!(
                "--order {order} exceeds the safety cap of {ORDER_CAP}; pass --unlimited-order to override"
            ));
        }
    }
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }

    let all = registry();
    let known_tags = ["base", "oracle", "mod5", "mod7", "products", "appell", "all"];
    let selected: Vec<_> = if let Some(suite) = &args.suite {
        if !known_tags.contains(&suite.as_str()) {
            return Err(format!("unknown suite '{suite}' (expected one of {})", known_tags.join(", ")));
        }
        all.into_iter()
            .filter(|c| suite == "all" || c.tags.contains(&suite.as_str()))
            .collect()
    } else if !args.id.is_empty() {
        let mut picked = Vec::new();
        for id in &args.id {
            let pos = all.iter().position(|c| c.id == id.as_str());
            match pos {
                Some(_) => {}
                None => return Err(format!("unknown id '{id}'")),
            }
        }
        for c in all {
            if args.id.iter().any(|id| id == c.id) {
                picked.push(c);
            }
        }
        picked
    } else {
        all
    };

    if args.list {
        for c in &selected {
            println!("{:<24} {}", c.id, c.anchor);
        }
        return Ok(ExitCode::SUCCESS);
    }

    eprintln!("running {} checks", selected.len());
    let reports = run_suite(&selected, args.order, args.min_exp);
    let overall = reports.iter().all(|r| r.passed || r.informational);

    match args.format {
        Format::Text => print_text(&reports),
        Format::Json => print_json(&reports)?,
    }
    Ok(if overall { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_text(reports: &[IdentityReport]) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for r in reports {
        let status = match (r.passed, r.informational) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "INFO pass",
            (false, true) => "INFO fail",
        };
        let _ = write!(out, "{:<24} {:<9} order {:>4}  {:>6} ms", r.id, status, r.effective_order, r.runtime_ms);
        if let Some(m) = &r.first_mismatch {
            let _ = write!(out, "  first mismatch at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs);
        }
        if let Some(e) = &r.error {
            let _ = write!(out, "  error: {e}");
        }
        let _ = writeln!(out);
    }
}

fn print_json(reports: &[IdentityReport]) -> Result<(), String> {
    let s = serde_json::to_string_pretty(reports).map_err(|e| e.to_string())?;
    println!("{s}");
    Ok(())
}

fn list_identities() {
    for c in registry() {
        let marker = if c.description.contains("open") || c.description.contains("unproven") {
            " [unproven]"
        } else if c.informational {
            " [informational]"
        } else {
            ""
        };
        println!("{}{}", c.id, marker);
        println!("    {}", c.anchor);
        println!("    {}", c.description);
    }
}

fn series(args: SeriesArgs) -> Result<ExitCode, String> {
    if args.order < 1 {
        return Err("--order must be at least 1".into());
    }
    if args.order > ORDER_CAP {
        return Err(format!("--order exceeds the safety cap of {ORDER_CAP}"));
    }
    let name = match args.name.to_ascii_lowercase().as_str() {
        "euler" => ProductName::Euler,
        "g" => ProductName::G,
        "h" => ProductName::H,
        "l" => ProductName::L,
        "n" => ProductName::N,
        "q" => ProductName::Q,
        "a" => ProductName::A,
        "b" => ProductName::B,
        "c" => ProductName::C,
        "d" => ProductName::D,
        "e" => ProductName::E,
        other => return Err(format!("unknown product '{other}'")),
    };
    let s = named_product(name, args.order);
    for e in s.lower()..=s.order() {
        println!("q^{e}: {}", s.coeff(e));
    }
    Ok(ExitCode::SUCCESS)
}

fn partition_stats(n: u32, k: u32, stat: &str) -> Result<ExitCode, String> {
    if k < 2 {
        return Err("--k must be at least 2".into());
    }
    let stat = match stat {
        "rank" => Stat::N,
        "parts" => Stat::Nt,
        "crank" | "ones" => Stat::MOmega,
        other => return Err(format!("unknown stat '{other}' (expected rank, parts, crank, or ones)")),
    };
    if n <= 30 {
        println!("partitions of {n}:");
        for p in enumerate(n) {
            let parts = p
                .parts
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("+");
            println!(
                "  {:<20} rank {:>3}  crank {:>3}  ones {:>2}",
                parts,
                p.rank(),
                p.crank(),
                p.ones()
            );
        }
    }
    let t = stats(n, k, stat);
    let label = match stat {
        Stat::N => "N (partitions by rank class)",
        Stat::Nt => "NT (parts by rank class)",
        Stat::MOmega => "M_omega (ones by crank class)",
    };
    println!("{label}, n = {n}, mod {k}:");
    for r in 0..k as i64 {
        println!("  class {r}: {}", t.count(r));
    }
    Ok(ExitCode::SUCCESS)
}
