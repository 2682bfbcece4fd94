//! Distributions on the unit interval: closed-form CDFs, quantiles and
//! inversion sampling.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{positive, unit, Error, Result};
use crate::special::inc_beta_reg;

/// Absolute tolerance of the bisection fallback used for quantiles
/// without a closed form.
pub const BISECTION_TOLERANCE: f64 = 1e-12;

/// U(y) = y.
pub fn cdf_uniform(y: f64) -> Result<f64> {
    unit("y", y)
}

/// A(y) = (2/π) asin(√y), the Beta(1/2, 1/2) CDF.
pub fn cdf_arcsine(y: f64) -> Result<f64> {
    unit("y", y)?;
    // asin is ill-conditioned near 1, so reflect the upper half
    if y <= 0.5 {
        Ok(FRAC_2_PI * y.sqrt().asin())
    } else {
        Ok(1.0 - FRAC_2_PI * (1.0 - y).sqrt().asin())
    }
}

/// K(α, β)(y) = 1 − (1 − y^α)^β.
pub fn cdf_kumaraswamy(alpha: f64, beta: f64, y: f64) -> Result<f64> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    unit("y", y)?;
    let ya = if y == 0.0 { 0.0 } else { y.powf(alpha) };
    Ok(-(beta * (-ya).ln_1p()).exp_m1())
}

/// Closed-form inverse of [`cdf_kumaraswamy`].
pub fn quantile_kumaraswamy(alpha: f64, beta: f64, p: f64) -> Result<f64> {
    positive("alpha", alpha)?;
    positive("beta", beta)?;
    unit("p", p)?;
    let inner = -((-p).ln_1p() / beta).exp_m1();
    if inner == 0.0 {
        return Ok(0.0);
    }
    Ok(inner.powf(1.0 / alpha).clamp(0.0, 1.0))
}

/// Regularized incomplete beta I_y(α, β).
pub fn cdf_beta(alpha: f64, beta: f64, y: f64) -> Result<f64> {
    inc_beta_reg(alpha, beta, y)
}

/// Sorted sample set with the right-continuous step CDF
/// F(y) = #{x_i ≤ y} / n.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    samples: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(mut samples: Vec<f64>) -> Result<Self> {
        for &x in &samples {
            unit("sample", x)?;
        }
        samples.sort_by(f64::total_cmp);
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn eval(&self, y: f64) -> Result<f64> {
        if self.samples.is_empty() {
            return Err(Error::EmptySample);
        }
        let count = self.samples.partition_point(|&x| x <= y);
        Ok(count as f64 / self.samples.len() as f64)
    }

    /// Smallest sample x with F(x) ≥ p.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        unit("p", p)?;
        let n = self.samples.len();
        if n == 0 {
            return Err(Error::EmptySample);
        }
        let k = ((p * n as f64).ceil() as usize).clamp(1, n);
        Ok(self.samples[k - 1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Uniform,
    Beta,
    Kumaraswamy,
    Arcsine,
    Empirical,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Uniform => "uniform",
            Family::Beta => "beta",
            Family::Kumaraswamy => "kumaraswamy",
            Family::Arcsine => "arcsine",
            Family::Empirical => "empirical",
        })
    }
}

/// Symbolic description of a distribution on [0, 1].
///
/// Parameters are validated on construction; use the constructors or
/// [`FromStr`] (`uniform`, `arcsine`, `beta:a,b`, `kumaraswamy:a,b`,
/// `empirical:x1,x2,...`).
#[derive(Debug, Clone, PartialEq)]
pub enum DistSpec {
    Uniform,
    Beta { alpha: f64, beta: f64 },
    Kumaraswamy { alpha: f64, beta: f64 },
    Arcsine,
    Empirical(EmpiricalCdf),
}

impl DistSpec {
    pub fn beta(alpha: f64, beta: f64) -> Result<Self> {
        Ok(DistSpec::Beta {
            alpha: positive("alpha", alpha)?,
            beta: positive("beta", beta)?,
        })
    }

    pub fn kumaraswamy(alpha: f64, beta: f64) -> Result<Self> {
        Ok(DistSpec::Kumaraswamy {
            alpha: positive("alpha", alpha)?,
            beta: positive("beta", beta)?,
        })
    }

    pub fn empirical(samples: Vec<f64>) -> Result<Self> {
        let ecdf = EmpiricalCdf::new(samples)?;
        if ecdf.is_empty() {
            return Err(Error::EmptySample);
        }
        Ok(DistSpec::Empirical(ecdf))
    }

    pub fn family(&self) -> Family {
        match self {
            DistSpec::Uniform => Family::Uniform,
            DistSpec::Beta { .. } => Family::Beta,
            DistSpec::Kumaraswamy { .. } => Family::Kumaraswamy,
            DistSpec::Arcsine => Family::Arcsine,
            DistSpec::Empirical(_) => Family::Empirical,
        }
    }

    pub fn cdf(&self, y: f64) -> Result<f64> {
        match self {
            DistSpec::Uniform => cdf_uniform(y),
            DistSpec::Beta { alpha, beta } => cdf_beta(*alpha, *beta, y),
            DistSpec::Kumaraswamy { alpha, beta } => cdf_kumaraswamy(*alpha, *beta, y),
            DistSpec::Arcsine => cdf_arcsine(y),
            DistSpec::Empirical(e) => {
                unit("y", y)?;
                e.eval(y)
            }
        }
    }

    /// Inverse CDF. Families without a closed form fall back to bisection.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        unit("p", p)?;
        match self {
            DistSpec::Uniform => Ok(p),
            DistSpec::Kumaraswamy { alpha, beta } => quantile_kumaraswamy(*alpha, *beta, p),
            DistSpec::Arcsine => Ok((FRAC_PI_2 * p).sin().powi(2).min(1.0)),
            DistSpec::Beta { .. } => bisect_quantile(|y| self.cdf(y), p),
            DistSpec::Empirical(e) => e.quantile(p),
        }
    }

    /// `n` deterministic draws for `seed`. Closed-form families use
    /// inversion of a uniform variate, empirical specs resample with
    /// replacement.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        if n == 0 {
            return Err(Error::Parameter {
                name: "n",
                value: 0.0,
                reason: "sample count must be at least 1",
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match self {
            DistSpec::Empirical(e) => {
                let xs = e.samples();
                Ok((0..n).map(|_| xs[rng.gen_range(0..xs.len())]).collect())
            }
            _ => (0..n).map(|_| self.quantile(rng.gen::<f64>())).collect(),
        }
    }
}

/// Convenience wrapper over [`DistSpec::sample`].
pub fn sample(dist: &DistSpec, n: usize, seed: u64) -> Result<Vec<f64>> {
    dist.sample(n, seed)
}

fn bisect_quantile(cdf: impl Fn(f64) -> Result<f64>, p: f64) -> Result<f64> {
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if cdf(mid)? < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

impl fmt::Display for DistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistSpec::Uniform | DistSpec::Arcsine => write!(f, "{}", self.family()),
            DistSpec::Beta { alpha, beta } | DistSpec::Kumaraswamy { alpha, beta } => {
                write!(f, "{}:{alpha},{beta}", self.family())
            }
            DistSpec::Empirical(e) => {
                write!(f, "empirical:")?;
                for (i, x) in e.samples().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for DistSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (family, params) = match s.trim().split_once(':') {
            Some((f, p)) => (f.trim().to_ascii_lowercase(), Some(p)),
            None => (s.trim().to_ascii_lowercase(), None),
        };
        let numbers = |p: &str| -> Result<Vec<f64>> {
            p.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|_| parse_err(&format!("{t:?} is not a number")))
                })
                .collect()
        };
        let pair = |params: Option<&str>| -> Result<(f64, f64)> {
            let values = numbers(params.ok_or_else(|| parse_err("expected two parameters"))?)?;
            match values.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(parse_err("expected exactly two parameters")),
            }
        };
        match family.as_str() {
            "uniform" | "u" if params.is_none() => Ok(DistSpec::Uniform),
            "arcsine" | "a" if params.is_none() => Ok(DistSpec::Arcsine),
            "uniform" | "u" | "arcsine" | "a" => Err(parse_err("family takes no parameters")),
            "beta" | "b" => {
                let (a, b) = pair(params)?;
                DistSpec::beta(a, b)
            }
            "kumaraswamy" | "k" => {
                let (a, b) = pair(params)?;
                DistSpec::kumaraswamy(a, b)
            }
            "empirical" => {
                let values = numbers(params.ok_or_else(|| parse_err("expected samples"))?)?;
                DistSpec::empirical(values)
            }
            _ => Err(parse_err("unknown family")),
        }
    }
}
