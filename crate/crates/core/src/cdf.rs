use std::fmt;
use std::sync::Arc;

use crate::dist::{DistSpec, Family};
use crate::error::{unit, Result};
use crate::grid::GridCdf;
use crate::pushforward::{preimage_pair, MapParam};

/// An evaluatable CDF on [0, 1].
///
/// Cloning is cheap for the pushforward and grid variants, which share
/// their inner data.
#[derive(Debug, Clone)]
pub enum CdfFn {
    Closed(DistSpec),
    /// y ↦ F(lo) + 1 − F(hi), where lo, hi are the preimages of y.
    Pushforward {
        inner: Arc<CdfFn>,
        r: MapParam,
    },
    Grid(Arc<GridCdf>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    ClosedForm(Family),
    /// `depth` consecutive pushforwards of a non-pushforward `base`.
    Pushforward {
        r: f64,
        depth: usize,
        base: Box<Provenance>,
    },
    Grid {
        knots: usize,
    },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::ClosedForm(family) => write!(f, "closed-form {family}"),
            Provenance::Pushforward { r, depth, base } => {
                write!(f, "pushforward^{depth} (r = {r}) of {base}")
            }
            Provenance::Grid { knots } => write!(f, "grid interpolant ({knots} knots)"),
        }
    }
}

impl CdfFn {
    pub fn uniform() -> Self {
        CdfFn::Closed(DistSpec::Uniform)
    }

    pub fn arcsine() -> Self {
        CdfFn::Closed(DistSpec::Arcsine)
    }

    pub fn beta(alpha: f64, beta: f64) -> Result<Self> {
        DistSpec::beta(alpha, beta).map(CdfFn::Closed)
    }

    pub fn kumaraswamy(alpha: f64, beta: f64) -> Result<Self> {
        DistSpec::kumaraswamy(alpha, beta).map(CdfFn::Closed)
    }

    pub fn eval(&self, y: f64) -> Result<f64> {
        match self {
            CdfFn::Closed(d) => d.cdf(y),
            CdfFn::Pushforward { inner, r } => {
                unit("y", y)?;
                if y >= r.peak() {
                    return Ok(1.0);
                }
                let (lo, hi) = preimage_pair(*r, y)?;
                let v = (1.0 - inner.eval(hi)?) + inner.eval(lo)?;
                Ok(v.clamp(0.0, 1.0))
            }
            CdfFn::Grid(g) => g.eval(y),
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            CdfFn::Closed(d) => Provenance::ClosedForm(d.family()),
            CdfFn::Pushforward { inner, r } => match inner.provenance() {
                Provenance::Pushforward { depth, base, .. } => Provenance::Pushforward {
                    r: r.value(),
                    depth: depth + 1,
                    base,
                },
                other => Provenance::Pushforward {
                    r: r.value(),
                    depth: 1,
                    base: Box::new(other),
                },
            },
            CdfFn::Grid(g) => Provenance::Grid { knots: g.knots() },
        }
    }
}

impl From<DistSpec> for CdfFn {
    fn from(d: DistSpec) -> Self {
        CdfFn::Closed(d)
    }
}

impl From<GridCdf> for CdfFn {
    fn from(g: GridCdf) -> Self {
        CdfFn::Grid(Arc::new(g))
    }
}
