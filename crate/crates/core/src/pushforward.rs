//! The induced map on CDFs: if X ~ F then f_r(X) ~ T_r F with
//!
//! ```text
//! (T_r F)(y) = F(1/2 − q) + 1 − F(1/2 + q),   q = √(1/4 − y/r)   (y < r/4)
//! (T_r F)(y) = 1                                                  (y ≥ r/4)
//! ```

use std::fmt;
use std::sync::Arc;

use crate::cdf::CdfFn;
use crate::error::{unit, Error, Result};
use crate::grid::tabulate;

/// Iterates up to this depth are evaluated by exact recursion, which
/// costs 2^n base evaluations per point.
pub const EXACT_DEPTH_LIMIT: usize = 12;

/// Grid size used when an iterate deeper than [`EXACT_DEPTH_LIMIT`] is
/// requested without an explicit strategy.
pub const DEFAULT_ITERATE_GRID: usize = 4096;

/// Logistic map parameter r ∈ (0, 4].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MapParam(f64);

impl MapParam {
    pub const FOUR: MapParam = MapParam(4.0);

    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && r > 0.0 && r <= 4.0 {
            Ok(MapParam(r))
        } else {
            Err(Error::Parameter {
                name: "r",
                value: r,
                reason: "logistic map parameter must lie in (0, 4]",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Maximum of f_r on [0, 1], attained at x = 1/2.
    pub fn peak(self) -> f64 {
        self.0 / 4.0
    }
}

impl fmt::Display for MapParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Half-distance between the two preimages of y under f_r.
pub fn q_r(r: MapParam, y: f64) -> Result<f64> {
    unit("y", y)?;
    if y > r.peak() {
        return Ok(0.0);
    }
    Ok((0.25 - y / r.value()).max(0.0).sqrt())
}

/// The two solutions of f_r(x) = min(y, r/4), symmetric about 1/2.
///
/// `lo` uses lo = (y/r) / (1/2 + q), the product-of-roots form, which
/// keeps full relative precision as y → 0.
pub fn preimage_pair(r: MapParam, y: f64) -> Result<(f64, f64)> {
    let q = q_r(r, y)?;
    if q == 0.0 {
        return Ok((0.5, 0.5));
    }
    let hi = 0.5 + q;
    let lo = (y / r.value()) / hi;
    Ok((lo, hi))
}

/// Wraps `cdf` in one application of the propagation operator.
pub fn pushforward_cdf(cdf: CdfFn, r: MapParam) -> CdfFn {
    CdfFn::Pushforward {
        inner: Arc::new(cdf),
        r,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Nested closed-form recursion.
    Exact,
    /// Tabulate each intermediate iterate on the standard grid with `m`
    /// intervals; the final step is applied exactly to the last table.
    Grid { m: usize },
}

/// The n-th iterate T_r^n F0.
#[derive(Debug, Clone)]
pub struct IterateCdf {
    base: CdfFn,
    r: MapParam,
    n: usize,
    strategy: Strategy,
    cdf: CdfFn,
}

impl IterateCdf {
    pub fn base(&self) -> &CdfFn {
        &self.base
    }

    pub fn r(&self) -> MapParam {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn cdf(&self) -> &CdfFn {
        &self.cdf
    }

    pub fn into_cdf(self) -> CdfFn {
        self.cdf
    }

    pub fn eval(&self, y: f64) -> Result<f64> {
        self.cdf.eval(y)
    }
}

/// n-fold pushforward, exact up to [`EXACT_DEPTH_LIMIT`] and on a grid of
/// [`DEFAULT_ITERATE_GRID`] intervals beyond.
pub fn iterate_pushforward(base: &CdfFn, r: MapParam, n: usize) -> Result<IterateCdf> {
    let strategy = if n <= EXACT_DEPTH_LIMIT {
        Strategy::Exact
    } else {
        Strategy::Grid {
            m: DEFAULT_ITERATE_GRID,
        }
    };
    iterate_pushforward_with(base, r, n, strategy)
}

pub fn iterate_pushforward_with(
    base: &CdfFn,
    r: MapParam,
    n: usize,
    strategy: Strategy,
) -> Result<IterateCdf> {
    let cdf = match strategy {
        _ if n == 0 => base.clone(),
        Strategy::Exact => {
            if n > EXACT_DEPTH_LIMIT {
                return Err(Error::Resource {
                    n,
                    limit: EXACT_DEPTH_LIMIT,
                });
            }
            (0..n).fold(base.clone(), |f, _| pushforward_cdf(f, r))
        }
        Strategy::Grid { m } => {
            let mut current = base.clone();
            for _ in 1..n {
                current = tabulate(&pushforward_cdf(current, r), m)?.into();
            }
            pushforward_cdf(current, r)
        }
    };
    Ok(IterateCdf {
        base: base.clone(),
        r,
        n,
        strategy,
        cdf,
    })
}
