//! Thin command-line front end over the verification suites.

use clap::{Args, Parser, Subcommand};
use hankel::groebner::DiskCache;
use hankel::verify::{self, SuiteConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hankel", version, about = "Verify structural results on Hankel determinantal rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over a (t, n, p, k) grid and emit a JSON report.
    Check(CheckArgs),
    /// Print what a suite verifies and how.
    Explain { suite: String },
    /// Manage the Groebner basis disk cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Delete every cached basis file.
    Clear {
        #[arg(long, value_name = "DIR")]
        cache_dir: PathBuf,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Key-value config file; command-line flags win on conflict.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Suites to run (comma separated), or `all`.
    #[arg(long, value_delimiter = ',')]
    suite: Option<Vec<String>>,
    /// Row sizes t (comma separated).
    #[arg(long, value_delimiter = ',')]
    t: Option<Vec<usize>>,
    /// Column sizes n (comma separated).
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Primes for the characteristic-p suites.
    #[arg(long, value_delimiter = ',')]
    prime: Option<Vec<u64>>,
    /// Largest Frobenius exponent e (q = p^e).
    #[arg(long)]
    e_max: Option<u32>,
    /// Symbolic-power exponents k to include (default: all valid).
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    /// Groebner reduction-step budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Seed for the sampled checks (recorded in the report).
    #[arg(long)]
    seed: Option<u64>,
    /// Report file; stdout when omitted.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (0 = scheduler default).
    #[arg(long)]
    workers: Option<usize>,
    /// Groebner disk cache directory.
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Include per-record timings (breaks byte-for-byte reproducibility).
    #[arg(long)]
    timings: bool,
}

impl CheckArgs {
    fn into_config(self) -> Result<SuiteConfig, hankel::Error> {
        let mut cfg = SuiteConfig::default();
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)?;
            cfg.apply_kv_text(&text)?;
        }
        if let Some(v) = self.suite {
            cfg.suites = v;
        }
        if let Some(v) = self.t {
            cfg.t_values = v;
            cfg.extra_pairs.clear();
        }
        if let Some(v) = self.n {
            cfg.n_values = v;
            cfg.extra_pairs.clear();
        }
        if let Some(v) = self.prime {
            cfg.primes = v;
        }
        if let Some(v) = self.e_max {
            cfg.e_max = v;
        }
        if let Some(v) = self.k {
            cfg.k_values = Some(v);
        }
        if let Some(v) = self.budget {
            cfg.budget = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.out {
            cfg.out = Some(v);
        }
        if let Some(v) = self.workers {
            cfg.workers = v;
        }
        if let Some(v) = self.cache_dir {
            cfg.cache_dir = Some(v);
        }
        if self.timings {
            cfg.include_timings = true;
        }
        Ok(cfg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, hankel::Error> {
    match cli.command {
        Command::Check(args) => {
            let cfg = args.into_config()?;
            let doc = verify::run_to_document(&cfg)?;
            let text = verify::render_and_write(&cfg, &doc)?;
            if cfg.out.is_none() {
                print!("{text}");
            } else {
                eprintln!(
                    "report written to {} ({} records)",
                    cfg.out.as_ref().unwrap().display(),
                    doc.summary.total
                );
            }
            let s = &doc.summary;
            eprintln!(
                "pass {} / fail {} / not-applicable {} / budget-exhausted {}",
                s.pass, s.fail, s.not_applicable, s.budget_exhausted
            );
            if s.budget_exhausted > 0 {
                eprintln!(
                    "warning: {} record(s) stopped at the step budget; raise --budget to finish them",
                    s.budget_exhausted
                );
            }
            Ok(if s.fail == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Explain { suite } => {
            print!("{}", verify::explain(&suite)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cache { action } => match action {
            CacheAction::Clear { cache_dir } => {
                let cache = DiskCache::new(&cache_dir)?;
                let removed = cache.clear()?;
                eprintln!("removed {removed} cached bases from {}", cache_dir.display());
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}
