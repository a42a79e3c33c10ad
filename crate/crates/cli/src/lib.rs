//! Argument parsing and dispatch for the `pslb` command.

mod output;

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pslb_core::audit::{audit, audit_all, ClaimId, Scale, ScaleConfig, Status};
use pslb_core::goldbach::{goldbach_pairs, goldbach_solve, SolveOptions};
use pslb_core::primes::{
    primes_up_to, read_cache, seed_prime_set, smallest_primorial_at_least, write_cache, Primorial,
};
use pslb_core::signatures::is_potential_prime;
use pslb_core::tables::{self, Cell, Table};
use pslb_core::{Budget, Error, Result};

pub use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "pslb",
    version,
    about = "Primorial signatures, prime censuses and Goldbach pairs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Decimal places for real columns; defaults to each column's own
    #[arg(long, global = true)]
    precision: Option<usize>,
    /// Write data here instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Largest limit for factor-resolved sieves
    #[arg(long, global = true, env = "PSLB_SIEVE_BUDGET")]
    sieve_budget: Option<u64>,
    /// Largest limit for primality-only sieves
    #[arg(long, global = true, env = "PSLB_PRIMALITY_BUDGET")]
    primality_budget: Option<u64>,
    /// Worker threads; all cores when omitted
    #[arg(long, global = true)]
    threads: Option<usize>,
}

impl Global {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            sieve: self.sieve_budget.unwrap_or(d.sieve),
            primality: self.primality_budget.unwrap_or(d.primality),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reproduce a numbered table (1 to 21)
    Table { n: u32 },
    /// Emit a figure series (1 or 2)
    Figure {
        n: u32,
        /// Primorial for figure 1, as a value or `P#`
        #[arg(long, default_value = "30030")]
        primorial: String,
        /// Largest even number for figure 2
        #[arg(long, default_value_t = 210)]
        upper: u64,
    },
    /// Modular signature of an integer under a primorial's seed primes
    Signature {
        z: u64,
        #[arg(long, default_value = "2310")]
        primorial: String,
    },
    /// Per-cycle potential prime and twin census
    Census {
        #[arg(long, default_value = "2310")]
        inner: String,
        #[arg(long, default_value = "30030")]
        outer: String,
    },
    /// Primorial scaffold tables 17 to 21
    Scaffold {
        #[arg(long, value_parser = clap::value_parser!(u32).range(17..=21))]
        table: u32,
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Solve or enumerate Goldbach pairs
    Goldbach(GoldbachArgs),
    /// True twin primes below a bound
    Twins {
        #[arg(long)]
        below: u64,
        /// Print only the count
        #[arg(long)]
        count: bool,
    },
    /// Audit the claims at a finite scale
    Audit {
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, default_value = "default")]
        scale: String,
    },
    /// Build or verify a sieve cache file
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
struct GoldbachArgs {
    #[command(subcommand)]
    table: Option<GoldbachTable>,
    /// Even number to solve
    e: Option<u64>,
    /// List every pair
    #[arg(long, conflicts_with = "first")]
    all: bool,
    /// Report the constructive solution (the default)
    #[arg(long)]
    first: bool,
    /// Emit residue comparison rows for the chosen pair
    #[arg(long)]
    explain: bool,
}

#[derive(Debug, Subcommand)]
enum GoldbachTable {
    /// Pair counts per even number
    Table {
        #[arg(long, default_value_t = 210)]
        upper: u64,
    },
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    Build {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        out: PathBuf,
    },
    Verify {
        path: PathBuf,
    },
}

/// Runs one invocation; returns the process exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 2;
        }
    };
    // Buffered so the work can run inside the pool; the writers need not be Send.
    let mut data = Vec::new();
    let mut diag = Vec::new();
    let result = pool
        .install(|| dispatch(&cli, &mut data, &mut diag))
        .and_then(|code| {
            match &cli.global.output {
                Some(path) => std::fs::write(path, &data)?,
                None => out.write_all(&data)?,
            }
            Ok(code)
        });
    let _ = err.write_all(&diag);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource() {
                2
            } else {
                1
            }
        }
    }
}

fn parse_primorial(s: &str) -> Result<Primorial> {
    let bad = || Error::Domain(format!("not a primorial: {s}"));
    match s.strip_suffix('#') {
        Some(p) => Primorial::of_prime(p.parse().map_err(|_| bad())?),
        None => Primorial::from_value(s.parse().map_err(|_| bad())?),
    }
}

fn emit(cli: &Cli, t: &Table, out: &mut dyn Write) -> Result<i32> {
    output::write_table(t, cli.global.format, cli.global.precision, out)?;
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let budget = cli.global.budget();
    match &cli.command {
        Command::Table { n } => emit(cli, &tables::table(*n, &budget)?, out),
        Command::Figure {
            n,
            primorial,
            upper,
        } => {
            let t = match n {
                1 => tables::figure1(&parse_primorial(primorial)?, &budget)?,
                2 => tables::figure2(*upper, &budget)?,
                _ => tables::figure(*n, &budget)?,
            };
            emit(cli, &t, out)
        }
        Command::Signature { z, primorial } => {
            let sps = seed_prime_set(&parse_primorial(primorial)?)?;
            emit(cli, &tables::signature_table(*z, sps.seeds()), out)
        }
        Command::Census { inner, outer } => emit(
            cli,
            &tables::census_table(&parse_primorial(inner)?, &parse_primorial(outer)?, &budget)?,
            out,
        ),
        Command::Scaffold { table, rows } => {
            let rows = rows.unwrap_or_else(|| tables::default_scaffold_rows(*table));
            emit(cli, &tables::scaffold_table(*table, rows, &budget)?, out)
        }
        Command::Goldbach(args) => goldbach(cli, args, &budget, out),
        Command::Twins { below, count } => emit(cli, &twins(*below, *count, &budget)?, out),
        Command::Audit { claim, scale } => {
            let scale: Scale = scale.parse()?;
            let mut cfg = ScaleConfig::new(scale);
            if cli.global.sieve_budget.is_some() || cli.global.primality_budget.is_some() {
                cfg.budget = budget;
            }
            let reports = match claim {
                Some(c) => vec![audit(c.parse::<ClaimId>()?, &cfg)],
                None => audit_all(&cfg),
            };
            output::write_reports(&reports, cli.global.format, out)?;
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            if failed > 0 {
                writeln!(err, "{failed} claim(s) failed")?;
                return Ok(1);
            }
            Ok(0)
        }
        Command::Cache { action } => cache(cli, action, &budget, out),
    }
}

fn goldbach(cli: &Cli, args: &GoldbachArgs, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    if let Some(GoldbachTable::Table { upper }) = &args.table {
        return emit(cli, &tables::goldbach_count_table(*upper, budget)?, out);
    }
    let Some(e) = args.e else {
        return Err(Error::Domain(
            "goldbach needs an even number or `table`".into(),
        ));
    };
    if args.all {
        let pairs = goldbach_pairs(e, budget)?;
        if args.explain {
            for p in &pairs {
                emit(cli, &tables::residue_comparison_table(e, p.p1)?, out)?;
            }
            return Ok(0);
        }
        let mut t = pairs_table(e);
        for p in pairs {
            t.rows
                .push(vec![Cell::Int(p.e), Cell::Int(p.p1), Cell::Int(p.p2)]);
        }
        return emit(cli, &t, out);
    }
    let s = goldbach_solve(e, SolveOptions::default(), budget)?;
    if args.explain {
        return emit(cli, &tables::residue_comparison_table(e, s.pair.p1)?, out);
    }
    let anchor = |f: fn(&pslb_core::goldbach::ScaffoldAnchor) -> u64| {
        s.anchor.as_ref().map_or(Cell::Empty, |a| Cell::Int(f(a)))
    };
    let t = Table {
        id: "goldbach-solution".into(),
        title: format!("Goldbach solution for {e}"),
        headers: [
            "Even",
            "P1",
            "P2",
            "Case",
            "Certification",
            "A",
            "P_B",
            "P_Z",
            "P_Z^2",
            "Seed Rule Divergence",
        ]
        .map(String::from)
        .to_vec(),
        rows: vec![vec![
            Cell::Int(e),
            Cell::Int(s.pair.p1),
            Cell::Int(s.pair.p2),
            Cell::Text(s.case.to_string()),
            Cell::Text(
                match s.certification {
                    pslb_core::goldbach::Certification::ScaffoldBound => "scaffold-bound",
                    pslb_core::goldbach::Certification::Sieve => "sieve",
                }
                .into(),
            ),
            anchor(|a| a.a.value()),
            anchor(|a| a.p_b),
            anchor(|a| a.p_z),
            anchor(|a| a.p_z_squared),
            Cell::Text(s.seed_rule_divergence.to_string()),
        ]],
    };
    emit(cli, &t, out)
}

fn pairs_table(e: u64) -> Table {
    Table {
        id: "goldbach-pairs".into(),
        title: format!("Goldbach pairs of {e}"),
        headers: ["Even", "P1", "P2"].map(String::from).to_vec(),
        rows: Vec::new(),
    }
}

/// True twin primes `(z - 2, z)` with `z < below`, counted as in the cycle
/// census: both members must be potential primes under the core seed primes
/// of the smallest primorial of at least `below`.
pub fn true_twins(below: u64, budget: &Budget) -> Result<Vec<(u64, u64)>> {
    budget.check_primality("twin prime sieve", below)?;
    let sps = seed_prime_set(&smallest_primorial_at_least(below.max(30))?)?;
    let table = primes_up_to(below.max(2))?;
    let core = sps.core();
    Ok((5..below)
        .step_by(2)
        .filter(|&z| {
            table.is_prime(z)
                && table.is_prime(z - 2)
                && is_potential_prime(z, core)
                && is_potential_prime(z - 2, core)
        })
        .map(|z| (z - 2, z))
        .collect())
}

fn twins(below: u64, count: bool, budget: &Budget) -> Result<Table> {
    let pairs = true_twins(below, budget)?;
    let mut t = Table {
        id: "twins".into(),
        title: format!("True twin primes below {below}"),
        headers: Vec::new(),
        rows: Vec::new(),
    };
    if count {
        t.headers = ["Below", "True Twins"].map(String::from).to_vec();
        t.rows
            .push(vec![Cell::Int(below), Cell::Int(pairs.len() as u64)]);
    } else {
        t.headers = ["Lower", "Upper"].map(String::from).to_vec();
        t.rows = pairs
            .into_iter()
            .map(|(a, b)| vec![Cell::Int(a), Cell::Int(b)])
            .collect();
    }
    Ok(t)
}

fn cache(cli: &Cli, action: &CacheAction, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let (path, table, verified) = match action {
        CacheAction::Build { limit, out: path } => {
            budget.check_primality("sieve cache", *limit)?;
            let table = primes_up_to(*limit)?;
            let mut w = BufWriter::new(File::create(path)?);
            write_cache(&table, &mut w)?;
            w.flush()?;
            (path, table, false)
        }
        CacheAction::Verify { path } => {
            let table = read_cache(BufReader::new(File::open(path)?))?;
            budget.check_primality("sieve cache verification", table.limit())?;
            if primes_up_to(table.limit().max(2))?.odd_bits() != table.odd_bits() {
                return Err(Error::Cache(format!(
                    "{} disagrees with a fresh sieve",
                    path.display()
                )));
            }
            (path, table, true)
        }
    };
    let t = Table {
        id: "cache".into(),
        title: format!("Sieve cache {}", path.display()),
        headers: ["Path", "Limit", "Primes", "Verified"]
            .map(String::from)
            .to_vec(),
        rows: vec![vec![
            Cell::Text(path.display().to_string()),
            Cell::Int(table.limit()),
            Cell::Int(table.count() as u64),
            Cell::Text(verified.to_string()),
        ]],
    };
    emit(cli, &t, out)
}
