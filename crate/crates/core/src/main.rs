use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use indep_core::cli::{
    cmd_artin, cmd_bounds, cmd_factors, cmd_indep, cmd_jordan, cmd_scenario, cmd_sigma,
    parse_bound, OutputMode, RunConfig,
};
use indep_core::jordan::DEFAULT_SQRT_BITS;
use indep_core::{Error, Result, DEFAULT_ORDER_CAP};

#[derive(Parser)]
#[command(
    name = "indep",
    version,
    about = "Independence of finite group homomorphism families, Jordan bounds and Lie-type order catalogues"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group order any enumeration may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orders of simple groups in characteristic ELL up to BOUND.
    Sigma {
        #[arg(long)]
        ell: u64,
        /// Decimal, or a product like 3*10^7.
        #[arg(long, value_parser = bound)]
        bound: BigUint,
    },
    /// Pairwise order coincidences between catalogues.
    Artin {
        #[arg(long, value_delimiter = ',', required = true)]
        ells: Vec<u64>,
        #[arg(long, value_parser = bound)]
        bound: BigUint,
    },
    /// Independence report for a family file.
    Indep {
        family: PathBuf,
        /// Inertia assignment; adds the semistable decomposition.
        #[arg(long)]
        inertia: Option<PathBuf>,
    },
    /// Composition factors of a group file.
    Factors { group: PathBuf },
    /// Least index of an abelian normal subgroup.
    Jordan {
        group: PathBuf,
        #[arg(long, value_parser = bound)]
        d: Option<BigUint>,
    },
    /// Explicit Jordan constants for GL_n.
    Bounds {
        #[arg(long)]
        n: u64,
        /// Initial guard bits for the square root bracket.
        #[arg(long, default_value_t = DEFAULT_SQRT_BITS)]
        bits: u64,
    },
    /// The truncated cyclic family of order p^M.
    Scenario {
        #[arg(long)]
        p: u64,
        #[arg(long = "M", alias = "m")]
        m: u32,
        /// Also write the family file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn bound(s: &str) -> std::result::Result<BigUint, String> {
    parse_bound(s).map_err(|e| e.to_string())
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<String> {
    let mut cfg = RunConfig {
        order_cap: cli.cap,
        seed: cli.seed,
        output_mode: if cli.machine {
            OutputMode::Machine
        } else {
            OutputMode::Table
        },
        ..RunConfig::default()
    };
    if let Command::Bounds { bits, .. } = &cli.command {
        cfg.sqrt_bits = *bits;
    }
    cfg.validate()?;
    match &cli.command {
        Command::Sigma { ell, bound } => cmd_sigma(&cfg, *ell, bound),
        Command::Artin { ells, bound } => cmd_artin(&cfg, ells, bound),
        Command::Indep { family, inertia } => {
            let inertia = inertia.as_ref().map(read).transpose()?;
            cmd_indep(&cfg, &read(family)?, inertia.as_deref())
        }
        Command::Factors { group } => cmd_factors(&cfg, &read(group)?),
        Command::Jordan { group, d } => cmd_jordan(&cfg, &read(group)?, d.as_ref()),
        Command::Bounds { n, .. } => cmd_bounds(&cfg, *n),
        Command::Scenario { p, m, out } => cmd_scenario(&cfg, *p, *m, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}
