//! Logistic-map orbits and Monte Carlo ensembles.
//!
//! At r = 4 the map doubles rounding errors every step, so a computed
//! orbit only shadows some true orbit. Nothing here should be compared
//! pointwise against another orbit; only distributional statistics of the
//! visited states are meaningful.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use crate::dist::EmpiricalCdf;
use crate::dist::DistSpec;
use crate::error::{unit, Error, Result};
use crate::pushforward::MapParam;

pub const DEFAULT_BURN_IN: usize = 1000;
/// Tail length inspected for degeneracy.
pub const DEGENERACY_WINDOW: usize = 100;
/// A tail whose range is below this is treated as stuck.
pub const DEGENERACY_RANGE: f64 = 1e-15;
/// Longest cycle reported as a periodic attractor for r < 4.
pub const MAX_ATTRACTOR_PERIOD: usize = 64;
const ATTRACTOR_TOLERANCE: f64 = 1e-9;
pub const MAX_RESEEDS: usize = 16;
pub const MIN_ENSEMBLE_SIZE: usize = 100;
pub const MIN_ERGODIC_STEPS: usize = 10_000;
/// Initial states of ergodic runs are drawn uniformly from this range.
pub const ERGODIC_START: (f64, f64) = (0.01, 0.99);

/// f_r(x) = r x (1 − x).
pub fn logistic_step(r: MapParam, x: f64) -> Result<f64> {
    unit("x", x)?;
    Ok(step(r.value(), x))
}

#[inline]
fn step(r: f64, x: f64) -> f64 {
    (r * x * (1.0 - x)).min(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Degeneracy {
    /// The orbit reached 0 or 1 at r = 4 and is stuck at 0 from there on.
    Absorbed,
    /// The tail is constant up to [`DEGENERACY_RANGE`] at r = 4, e.g. the
    /// unstable fixed point 3/4.
    Collapsed,
    /// For r < 4, the tail sits on an attracting cycle.
    PeriodicAttractor { period: usize },
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub r: MapParam,
    pub x0: f64,
    pub burn_in: usize,
    /// states[0] is the state after `burn_in` steps from `x0`.
    pub states: Vec<f64>,
    pub degeneracy: Option<Degeneracy>,
}

impl Trajectory {
    pub fn is_degenerate(&self) -> bool {
        self.degeneracy.is_some()
    }

    /// Fails if every recorded state is identical, which means the orbit
    /// carries no distributional information and should be reseeded.
    pub fn ensure_mixing(&self) -> Result<&Self> {
        let first = self.states[0];
        if self.states.iter().all(|&x| x == first) {
            return Err(Error::DegenerateOrbit(format!(
                "orbit from x0 = {} at r = {} is constant at {first}",
                self.x0, self.r
            )));
        }
        Ok(self)
    }
}

pub fn trajectory(r: MapParam, x0: f64, steps: usize, burn_in: usize) -> Result<Trajectory> {
    unit("x0", x0)?;
    if steps == 0 {
        return Err(Error::Parameter {
            name: "steps",
            value: 0.0,
            reason: "need at least one recorded state",
        });
    }
    let rv = r.value();
    let mut x = x0;
    let mut absorbed = false;
    for _ in 0..burn_in {
        absorbed |= x == 0.0 || x == 1.0;
        x = step(rv, x);
    }
    let mut states = Vec::with_capacity(steps);
    for _ in 0..steps {
        absorbed |= x == 0.0 || x == 1.0;
        states.push(x);
        x = step(rv, x);
    }
    let degeneracy = classify(rv, &states, absorbed);
    Ok(Trajectory {
        r,
        x0,
        burn_in,
        states,
        degeneracy,
    })
}

fn classify(r: f64, states: &[f64], absorbed: bool) -> Option<Degeneracy> {
    let tail = &states[states.len().saturating_sub(DEGENERACY_WINDOW)..];
    if r == 4.0 {
        if absorbed {
            return Some(Degeneracy::Absorbed);
        }
        let (min, max) = tail
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        return (max - min < DEGENERACY_RANGE).then_some(Degeneracy::Collapsed);
    }
    (1..=MAX_ATTRACTOR_PERIOD)
        .filter(|&p| p < tail.len())
        .find(|&p| {
            tail.iter()
                .zip(&tail[p..])
                .all(|(a, b)| (a - b).abs() <= ATTRACTOR_TOLERANCE)
        })
        .map(|period| Degeneracy::PeriodicAttractor { period })
}

/// Empirical law of f_r^n_steps(X) for X drawn from `dist`.
pub fn ensemble_push(
    dist: &DistSpec,
    r: MapParam,
    n_steps: usize,
    n_samples: usize,
    seed: u64,
) -> Result<EmpiricalCdf> {
    if n_samples < MIN_ENSEMBLE_SIZE {
        return Err(Error::Parameter {
            name: "n_samples",
            value: n_samples as f64,
            reason: "ensemble needs at least 100 samples",
        });
    }
    let rv = r.value();
    let states = dist
        .sample(n_samples, seed)?
        .into_iter()
        .map(|x0| (0..n_steps).fold(x0, |x, _| step(rv, x)))
        .collect();
    EmpiricalCdf::new(states)
}

#[derive(Debug, Clone)]
pub struct ErgodicRun {
    pub ecdf: EmpiricalCdf,
    pub x0: f64,
    /// Number of rejected degenerate starts before `x0`.
    pub reseeds: usize,
    /// Set when r < 4 and the orbit settled on a short attracting cycle.
    pub attractor: Option<Degeneracy>,
}

/// Visited-state distribution of one long orbit from a seeded start.
///
/// At r = 4, absorbed or collapsed orbits are rejected and restarted up
/// to [`MAX_RESEEDS`] times. For r < 4 a periodic attractor is the
/// genuine long-run behaviour and is returned flagged instead.
pub fn ergodic_empirical(
    r: MapParam,
    total_steps: usize,
    burn_in: usize,
    seed: u64,
) -> Result<ErgodicRun> {
    if total_steps < MIN_ERGODIC_STEPS {
        return Err(Error::Parameter {
            name: "total_steps",
            value: total_steps as f64,
            reason: "ergodic runs need at least 10^4 steps",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for reseeds in 0..=MAX_RESEEDS {
        let x0 = rng.gen_range(ERGODIC_START.0..ERGODIC_START.1);
        let traj = trajectory(r, x0, total_steps, burn_in)?;
        match traj.degeneracy {
            Some(Degeneracy::Absorbed | Degeneracy::Collapsed) => continue,
            attractor => {
                return Ok(ErgodicRun {
                    ecdf: EmpiricalCdf::new(traj.states)?,
                    x0,
                    reseeds,
                    attractor,
                })
            }
        }
    }
    Err(Error::DegenerateOrbit(format!(
        "every start of {} attempts at r = {r} degenerated",
        MAX_RESEEDS + 1
    )))
}
