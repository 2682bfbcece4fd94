use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use logmap_core::simulate::DEFAULT_BURN_IN;
use logmap_core::{DistSpec, MapParam};

use crate::error::CliError;

pub const DEFAULT_GRID: usize = 1024;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_ITERATE_STEPS: usize = 4;
pub const DEFAULT_ORBIT_STEPS: usize = 1_000_000;
pub const DEFAULT_PUSH_STEPS: usize = 2;

#[derive(Debug, Parser)]
#[command(
    name = "logmap",
    version,
    about = "Propagate distributions through the logistic map f_r(x) = r x (1 - x)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Tabulate D_0 .. D_steps, the iterates of the initial CDF.
    Iterate,
    /// Emit the iterates D_0..D_4 of the uniform law next to U, K(1/2,1/2), B(1/2,1/2).
    Figure,
    /// Run every verification check; exit code 0 iff all pass.
    Verify,
    /// Empirical state distribution from a long orbit or an ensemble.
    Simulate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// One long orbit from a seeded random start.
    Orbit,
    /// Many initial states drawn from --init, each pushed --push-steps times.
    Ensemble,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Logistic map parameter, 0 < r <= 4.
    #[arg(long, global = true, default_value_t = 4.0)]
    pub r: f64,

    /// Initial distribution: uniform, arcsine, beta:A,B, kumaraswamy:A,B, empirical:X1,X2,...
    #[arg(long, global = true, default_value = "uniform")]
    pub init: String,

    /// Iterations (iterate) or post-burn-in orbit length (simulate).
    #[arg(long, global = true)]
    pub steps: Option<usize>,

    /// Number of intervals of the output grid.
    #[arg(long, global = true, default_value_t = DEFAULT_GRID)]
    pub grid: usize,

    /// Ensemble size.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub n: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Mode::Orbit)]
    pub mode: Mode,

    /// Map applications per ensemble member.
    #[arg(long, global = true, default_value_t = DEFAULT_PUSH_STEPS)]
    pub push_steps: usize,

    #[arg(long, global = true, default_value_t = DEFAULT_BURN_IN)]
    pub burn_in: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            r: 4.0,
            init: "uniform".into(),
            steps: None,
            grid: DEFAULT_GRID,
            n: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            format: Format::Csv,
            out: None,
            mode: Mode::Orbit,
            push_steps: DEFAULT_PUSH_STEPS,
            burn_in: DEFAULT_BURN_IN,
        }
    }
}

impl RunConfig {
    pub fn map_param(&self) -> Result<MapParam, CliError> {
        MapParam::new(self.r).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn init_dist(&self) -> Result<DistSpec, CliError> {
        self.init
            .parse()
            .map_err(|e: logmap_core::Error| CliError::Usage(e.to_string()))
    }

    pub fn grid_size(&self) -> Result<usize, CliError> {
        if self.grid < 2 {
            return Err(CliError::Usage(format!(
                "--grid must be at least 2, got {}",
                self.grid
            )));
        }
        Ok(self.grid)
    }
}
