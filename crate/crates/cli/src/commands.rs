use logmap_core::analysis::{ks_band_99, ks_statistic};
use logmap_core::simulate::{ensemble_push, ergodic_empirical, Degeneracy};
use logmap_core::{iterate_pushforward, standard_grid, tabulate, CdfFn, MapParam};
use serde_json::json;

use crate::config::{Command, Mode, RunConfig, DEFAULT_ITERATE_STEPS, DEFAULT_ORBIT_STEPS};
use crate::error::CliError;
use crate::output::{meta, Output, Table};
use crate::verify;

/// Number of iterates shown by `figure`.
pub const FIGURE_ITERATES: usize = 4;

pub fn run(command: Command, config: &RunConfig) -> Result<Output, CliError> {
    Ok(match command {
        Command::Iterate => Output::Table(iterate(config)?),
        Command::Figure => Output::Table(figure(config)?),
        Command::Simulate => Output::Table(simulate(config)?),
        Command::Verify => Output::Report(verify::run(config)?),
    })
}

/// Values of `cdf` on the grid, validated as a CDF table.
fn column(cdf: &CdfFn, m: usize) -> Result<Vec<f64>, CliError> {
    Ok(tabulate(cdf, m)?.values().to_vec())
}

fn iterate_columns(
    table: &mut Table,
    base: &CdfFn,
    r: MapParam,
    steps: usize,
    m: usize,
) -> Result<(), CliError> {
    for n in 0..=steps {
        let d = iterate_pushforward(base, r, n)?;
        table.push_column(format!("D{n}"), column(d.cdf(), m)?);
    }
    Ok(())
}

/// Columns `y, D0 .. D<steps>`.
pub fn iterate(config: &RunConfig) -> Result<Table, CliError> {
    let r = config.map_param()?;
    let m = config.grid_size()?;
    let base = CdfFn::Closed(config.init_dist()?);
    let steps = config.steps.unwrap_or(DEFAULT_ITERATE_STEPS);

    let mut table = Table::new(meta(Command::Iterate, config));
    table.push_column("y", standard_grid(m)?);
    iterate_columns(&mut table, &base, r, steps, m)?;
    Ok(table)
}

/// Columns `y, D0..D4, U, K, B`: iterates of the uniform law at the
/// configured r next to the uniform, Kumaraswamy(1/2, 1/2) and
/// Beta(1/2, 1/2) CDFs.
pub fn figure(config: &RunConfig) -> Result<Table, CliError> {
    let r = config.map_param()?;
    let m = config.grid_size()?;
    let uniform = CdfFn::uniform();

    let mut table = Table::new(meta(Command::Figure, config));
    table.push_column("y", standard_grid(m)?);
    iterate_columns(&mut table, &uniform, r, FIGURE_ITERATES, m)?;
    table.push_column("U", column(&uniform, m)?);
    table.push_column("K", column(&CdfFn::kumaraswamy(0.5, 0.5)?, m)?);
    table.push_column("B", column(&CdfFn::beta(0.5, 0.5)?, m)?);
    Ok(table)
}

/// Empirical CDF on the grid next to its reference CDF, with the KS
/// statistic and the 99% band as footer records.
///
/// Orbit mode compares one long orbit to the arcsine law; ensemble mode
/// compares `--n` states pushed `--push-steps` times to the exact iterate
/// of `--init`.
pub fn simulate(config: &RunConfig) -> Result<Table, CliError> {
    let r = config.map_param()?;
    let m = config.grid_size()?;
    let mut table = Table::new(meta(Command::Simulate, config));

    let (ecdf, reference) = match config.mode {
        Mode::Orbit => {
            let steps = config.steps.unwrap_or(DEFAULT_ORBIT_STEPS);
            let run = ergodic_empirical(r, steps, config.burn_in, config.seed)?;
            table.meta.insert("x0".into(), json!(run.x0));
            table.meta.insert("reseeds".into(), json!(run.reseeds));
            if let Some(Degeneracy::PeriodicAttractor { period }) = run.attractor {
                let notice = format!(
                    "degenerate attractor: orbit settled on a period-{period} cycle at r = {r}; \
                     the arcsine reference only applies at r = 4"
                );
                eprintln!("notice: {notice}");
                table.meta.insert("notice".into(), json!(notice));
            }
            (run.ecdf, CdfFn::arcsine())
        }
        Mode::Ensemble => {
            let dist = config.init_dist()?;
            let ecdf = ensemble_push(&dist, r, config.push_steps, config.n, config.seed)?;
            let reference = iterate_pushforward(&CdfFn::Closed(dist), r, config.push_steps)?;
            (ecdf, reference.into_cdf())
        }
    };

    let grid = standard_grid(m)?;
    let empirical = grid
        .iter()
        .map(|&y| ecdf.eval(y))
        .collect::<Result<Vec<_>, _>>()?;
    let reference_col = column(&reference, m)?;
    table.push_column("y", grid);
    table.push_column("empirical", empirical);
    table.push_column("reference", reference_col);
    table
        .footer
        .push(("ks".into(), ks_statistic(&ecdf, &reference)?));
    table
        .footer
        .push(("ks_band_99".into(), ks_band_99(ecdf.len())));
    Ok(table)
}
