mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homtool_core::Budget;
use serde_json::json;

/// Graph homomorphisms, hom-complexity and edge covering numbers.
#[derive(Parser, Debug)]
#[command(name = "homtool", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Write a single JSON document to standard output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Wall-clock limit for the whole run, in seconds.
    #[arg(long, global = true, value_name = "SECONDS")]
    pub time_limit: Option<f64>,

    /// Edge limit for the exhaustive partition and cover searches.
    #[arg(long, global = true, value_name = "N")]
    pub max_edges: Option<usize>,
}

impl Global {
    pub fn budget(&self) -> anyhow::Result<Budget> {
        let mut b = Budget::default();
        if let Some(n) = self.max_edges {
            b = b.with_max_edges(n);
        }
        if let Some(secs) = self.time_limit {
            let d = Duration::try_from_secs_f64(secs)
                .map_err(|_| homtool_core::Error::InvalidParameter(format!("bad time limit {secs}")))?;
            b = b.with_time_limit(d);
        }
        Ok(b)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether G → H; exit 1 when there is no homomorphism.
    Hom {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        injective: bool,
    },
    /// Hom-complexity C(G;H), or IC(G;H) with --injective.
    Complexity {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        injective: bool,
        #[arg(long, default_value = "auto", value_parser = ["auto", "formula", "orpower", "partition"])]
        method: String,
        /// Write the certificate plan here.
        #[arg(long, value_name = "PATH")]
        cert: Option<PathBuf>,
    },
    /// Graph invariants.
    Invariant {
        #[arg(value_enum)]
        which: InvariantKind,
        g: PathBuf,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Edge covering numbers.
    Cover {
        #[arg(value_enum)]
        which: CoverKind,
        g: PathBuf,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Build an optimal quasi-homomorphism from G's chromatic structure.
    Design {
        g: PathBuf,
        #[arg(long, value_name = "H.hgf", conflicts_with = "target_complete", required_unless_present = "target_complete")]
        target: Option<PathBuf>,
        #[arg(long, value_name = "L")]
        target_complete: Option<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check a plan file against G and H; exit 1 when it fails.
    Verify {
        plan: PathBuf,
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        injective: bool,
        /// Also require the piece count to equal the exact complexity.
        #[arg(long)]
        check_optimal: bool,
    },
    /// Generate a graph: complete N, path M, cycle N, edgeless N,
    /// multipartite A B .., grotzsch, kneser N K, random N P, loop.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum InvariantKind {
    Chromatic,
    Clique,
    Core,
    Lpartite,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum CoverKind {
    Cc,
    Particity,
    Bipdim,
}

pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<homtool_core::Error>() {
        Some(e) if e.is_budget() => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.global.json;
    match commands::run(&cli) {
        Ok(out) => {
            if json_mode {
                emit(&format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serialisable")));
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.code)
        }
        Err(err) => {
            let code = exit_code(&err);
            if json_mode {
                let doc = json!({ "error": format!("{err:#}"), "exit_code": code });
                emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("serialisable")));
            } else {
                eprintln!("homtool: {err:#}");
            }
            ExitCode::from(code)
        }
    }
}
