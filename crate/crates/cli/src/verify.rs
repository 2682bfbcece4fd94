//! The verification suite behind `logmap verify` and the acceptance tests.
//!
//! Every check is a deterministic function of the run configuration; the
//! wall-clock budgets are enforced by the acceptance test target, not by
//! the report, so identical flags give byte-identical reports.

use std::time::Duration;

use logmap_core::analysis::{
    fixed_point_residual, ks_band_99, ks_statistic, propagation_ks, sup_distance,
    PROPAGATION_GRID,
};
use logmap_core::dist::{cdf_arcsine, cdf_beta};
use logmap_core::grid::MONOTONE_TOLERANCE;
use logmap_core::simulate::{ergodic_empirical, DEFAULT_BURN_IN};
use logmap_core::{
    iterate_pushforward, pushforward_cdf, standard_grid, CdfFn, DistSpec, EmpiricalCdf, MapParam,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::figure;
use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::output::{meta, CheckRecord, VerifyReport};

pub const CLOSED_FORM_GRID: usize = 4096;
pub const CLOSED_FORM_TOL: f64 = 1e-12;
pub const FIXED_POINT_TOL: f64 = 1e-10;
pub const BETA_ARCSINE_TOL: f64 = 1e-10;
pub const FIGURE_TOL: f64 = 1e-10;
pub const IDENTITY_TOL: f64 = 1e-12;
pub const ENSEMBLE_SIZE: usize = 100_000;
pub const ORBIT_LENGTH: usize = 1_000_000;
pub const ORBIT_SEEDS: u64 = 10;
pub const ORBIT_KS_MAX: f64 = 0.01;
pub const ORBIT_MIN_PASSING: usize = 9;
pub const VALIDITY_PAIRS: usize = 50;
pub const VALIDITY_GRID: usize = 10_000;

/// Measured value of one check and whether it met its threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub measured: f64,
    pub relation: &'static str,
    pub threshold: f64,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn at_most(measured: f64, threshold: f64, detail: String) -> Self {
        Self {
            measured,
            relation: "<=",
            threshold,
            passed: measured <= threshold,
            detail,
        }
    }

    fn below(measured: f64, threshold: f64, detail: String) -> Self {
        Self {
            measured,
            relation: "<",
            threshold,
            passed: measured < threshold,
            detail,
        }
    }
}

pub struct Check {
    pub id: usize,
    pub name: &'static str,
    /// Wall-clock budget in an optimized build.
    pub budget: Duration,
    pub run: fn(&RunConfig) -> Result<Outcome, CliError>,
}

pub fn checks() -> Vec<Check> {
    let secs = Duration::from_secs;
    vec![
        Check { id: 1, name: "one-step image of U is 1 - sqrt(1 - y)", budget: secs(1), run: one_step_closed_form },
        Check { id: 2, name: "two-step image of U is Kumaraswamy(1/2, 1/2)", budget: secs(1), run: two_step_kumaraswamy },
        Check { id: 3, name: "arcsine law is a fixed point", budget: secs(1), run: arcsine_fixed_point },
        Check { id: 4, name: "Beta(1/2, 1/2) CDF equals arcsine CDF", budget: secs(1), run: beta_is_arcsine },
        Check { id: 5, name: "propagation matches Monte Carlo (KS, 99%)", budget: secs(10), run: propagation_ensembles },
        Check { id: 6, name: "X^a is Beta(1, b) for X ~ Kumaraswamy(a, b)", budget: secs(2), run: power_transform },
        Check { id: 7, name: "long orbits follow the arcsine law", budget: secs(10), run: ergodic_orbits },
        Check { id: 8, name: "figure data: D0 = U, D2 = K, D_n -> B", budget: secs(5), run: figure_properties },
        Check { id: 9, name: "half-angle and two-step square identities", budget: secs(1), run: identities },
        Check { id: 10, name: "pushforward preserves CDF validity", budget: secs(30), run: cdf_validity },
    ]
}

pub fn run(config: &RunConfig) -> Result<VerifyReport, CliError> {
    config.map_param()?;
    let mut records = Vec::new();
    for check in checks() {
        let o = (check.run)(config)?;
        records.push(CheckRecord {
            id: check.id,
            name: check.name.to_string(),
            measured: o.measured,
            relation: o.relation,
            threshold: o.threshold,
            passed: o.passed,
            detail: o.detail,
        });
    }
    Ok(VerifyReport {
        meta: meta(Command::Verify, config),
        checks: records,
    })
}

fn one_step_closed_form(_: &RunConfig) -> Result<Outcome, CliError> {
    let d1 = pushforward_cdf(CdfFn::uniform(), MapParam::FOUR);
    let mut sup = 0.0_f64;
    for y in standard_grid(CLOSED_FORM_GRID)? {
        sup = sup.max((d1.eval(y)? - (1.0 - (1.0 - y).sqrt())).abs());
    }
    Ok(Outcome::at_most(sup, CLOSED_FORM_TOL, format!("r = 4, m = {CLOSED_FORM_GRID}")))
}

fn two_step_kumaraswamy(_: &RunConfig) -> Result<Outcome, CliError> {
    let d2 = iterate_pushforward(&CdfFn::uniform(), MapParam::FOUR, 2)?;
    let k = CdfFn::kumaraswamy(0.5, 0.5)?;
    let sup = sup_distance(d2.cdf(), &k, CLOSED_FORM_GRID)?;
    Ok(Outcome::at_most(sup, CLOSED_FORM_TOL, format!("r = 4, m = {CLOSED_FORM_GRID}")))
}

fn arcsine_fixed_point(config: &RunConfig) -> Result<Outcome, CliError> {
    let r = config.map_param()?;
    let residual = fixed_point_residual(&CdfFn::arcsine(), r, CLOSED_FORM_GRID)?;
    Ok(Outcome::at_most(residual, FIXED_POINT_TOL, format!("r = {r}, m = {CLOSED_FORM_GRID}")))
}

fn beta_is_arcsine(_: &RunConfig) -> Result<Outcome, CliError> {
    let mut sup = 0.0_f64;
    for i in 0..1000 {
        let y = (i as f64 + 0.5) / 1000.0;
        sup = sup.max((cdf_beta(0.5, 0.5, y)? - cdf_arcsine(y)?).abs());
    }
    Ok(Outcome::at_most(sup, BETA_ARCSINE_TOL, "1000 midpoints".into()))
}

fn propagation_ensembles(config: &RunConfig) -> Result<Outcome, CliError> {
    let bases = [
        DistSpec::Uniform,
        DistSpec::Arcsine,
        DistSpec::kumaraswamy(2.0, 3.0)?,
    ];
    let band = ks_band_99(ENSEMBLE_SIZE);
    let mut worst = 0.0_f64;
    let mut failures = Vec::new();
    let mut case = 0u64;
    for base in &bases {
        for r in [2.0, 3.5, 4.0] {
            let seed = config.seed.wrapping_add(case);
            case += 1;
            let d = propagation_ks(base, MapParam::new(r)?, 1, ENSEMBLE_SIZE, seed, PROPAGATION_GRID)?;
            worst = worst.max(d);
            if d >= band {
                failures.push(format!("{base} r={r} D={d:.6}"));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("{case} cases, n = {ENSEMBLE_SIZE}")
    } else {
        format!("failing: {}", failures.join("; "))
    };
    Ok(Outcome::below(worst, band, detail))
}

fn power_transform(config: &RunConfig) -> Result<Outcome, CliError> {
    let (alpha, beta) = (0.5, 2.0);
    let xs = DistSpec::kumaraswamy(alpha, beta)?.sample(ENSEMBLE_SIZE, config.seed)?;
    let e = EmpiricalCdf::new(xs.into_iter().map(|x| x.powf(alpha)).collect())?;
    let d = ks_statistic(&e, &CdfFn::beta(1.0, beta)?)?;
    Ok(Outcome::below(d, ks_band_99(ENSEMBLE_SIZE), format!("K({alpha},{beta}), n = {ENSEMBLE_SIZE}")))
}

fn ergodic_orbits(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut passing = 0;
    let mut stats = Vec::new();
    for k in 0..ORBIT_SEEDS {
        let run = ergodic_empirical(MapParam::FOUR, ORBIT_LENGTH, DEFAULT_BURN_IN, config.seed.wrapping_add(k))?;
        let d = ks_statistic(&run.ecdf, &CdfFn::arcsine())?;
        if d <= ORBIT_KS_MAX {
            passing += 1;
        }
        stats.push(format!("{d:.5}"));
    }
    Ok(Outcome {
        measured: passing as f64,
        relation: ">=",
        threshold: ORBIT_MIN_PASSING as f64,
        passed: passing >= ORBIT_MIN_PASSING,
        detail: format!("seeds with KS <= {ORBIT_KS_MAX}: KS = [{}]", stats.join(" ")),
    })
}

fn figure_properties(config: &RunConfig) -> Result<Outcome, CliError> {
    let figure_config = RunConfig {
        r: 4.0,
        ..config.clone()
    };
    let table = figure(&figure_config)?;
    let col = |name: &str| {
        table
            .column(name)
            .ok_or_else(|| CliError::Usage(format!("figure output lacks column {name}")))
    };
    let sup = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);

    let d0_is_u = col("D0")? == col("U")?;
    let d2_k = sup(col("D2")?, col("K")?);
    let to_b: Vec<f64> = ["D2", "D3", "D4"]
        .iter()
        .map(|n| Ok(sup(col(n)?, col("B")?)))
        .collect::<Result<_, CliError>>()?;
    let decreasing = to_b.windows(2).all(|w| w[1] < w[0]);

    let mut o = Outcome::at_most(
        d2_k,
        FIGURE_TOL,
        format!(
            "D0==U: {d0_is_u}; sup|D_n - B| n=2,3,4: {:.3e} {:.3e} {:.3e}",
            to_b[0], to_b[1], to_b[2]
        ),
    );
    o.passed &= d0_is_u && decreasing;
    Ok(o)
}

fn identities(_: &RunConfig) -> Result<Outcome, CliError> {
    let mut half_angle = 0.0_f64;
    let mut square = 0.0_f64;
    for i in 1..=1000 {
        let y = i as f64 / 1001.0;
        let w = (1.0 - y).sqrt();
        let lhs = y.sqrt().asin();
        let rhs = 2.0 * ((1.0 - w) / 2.0).sqrt().asin();
        half_angle = half_angle.max((lhs - rhs).abs());
        let s = ((1.0 + w) / 2.0).sqrt() - ((1.0 - w) / 2.0).sqrt();
        square = square.max((s * s - (1.0 - y.sqrt())).abs());
    }
    Ok(Outcome::at_most(
        half_angle.max(square),
        IDENTITY_TOL,
        format!("half-angle {half_angle:.3e}, s^2 {square:.3e}"),
    ))
}

fn random_cdf(rng: &mut ChaCha8Rng) -> Result<CdfFn, CliError> {
    let mut param = || rng.gen_range(0.2..5.0);
    let (a, b) = (param(), param());
    Ok(match rng.gen_range(0..4) {
        0 => CdfFn::uniform(),
        1 => CdfFn::arcsine(),
        2 => CdfFn::kumaraswamy(a, b)?,
        _ => CdfFn::beta(a, b)?,
    })
}

fn cdf_validity(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let grid = standard_grid(VALIDITY_GRID)?;
    let mut worst = 0.0_f64;
    for _ in 0..VALIDITY_PAIRS {
        let base = random_cdf(&mut rng)?;
        let r = MapParam::new(rng.gen_range(0.05..=4.0))?;
        let f = pushforward_cdf(base, r);
        let values = grid.iter().map(|&y| f.eval(y)).collect::<Result<Vec<_>, _>>()?;
        worst = worst
            .max(values[0].abs())
            .max((values[values.len() - 1] - 1.0).abs());
        for w in values.windows(2) {
            worst = worst.max(w[0] - w[1]);
        }
    }
    Ok(Outcome::at_most(
        worst,
        MONOTONE_TOLERANCE,
        format!("{VALIDITY_PAIRS} random (F, r) pairs, m = {VALIDITY_GRID}"),
    ))
}
