//! Tabulated CDFs on sorted knot sets over [0, 1].

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;

use crate::cdf::CdfFn;
use crate::error::{Error, Result};

/// Largest monotonicity or endpoint violation tolerated when tabulating.
/// Anything below is rounding noise and is smoothed out; anything above
/// is an [`Error::Integrity`].
pub const MONOTONE_TOLERANCE: f64 = 1e-9;

/// Knots y_i = sin²(π i / (2m)), i = 0..=m.
///
/// Uniform in the arcsine coordinate θ = asin(√y), so the spacing in y
/// shrinks quadratically towards both endpoints.
pub fn standard_grid(m: usize) -> Result<Vec<f64>> {
    if m < 2 {
        return Err(Error::Parameter {
            name: "m",
            value: m as f64,
            reason: "grid needs at least two intervals",
        });
    }
    let half = |i: usize| (FRAC_PI_2 * i as f64 / m as f64).sin().powi(2);
    // mirror the upper half so that y_{m-i} = 1 - y_i
    Ok((0..=m)
        .map(|i| match (2 * i).cmp(&m) {
            Ordering::Less => half(i),
            Ordering::Equal => 0.5,
            Ordering::Greater => 1.0 - half(m - i),
        })
        .collect())
}

/// θ = asin(√y), reflected above 1/2 to stay well conditioned.
pub(crate) fn arcsine_coord(y: f64) -> f64 {
    if y <= 0.5 {
        y.sqrt().asin()
    } else {
        FRAC_PI_2 - (1.0 - y).sqrt().asin()
    }
}

/// CDF values on a knot set, interpolated piecewise-linearly in the
/// arcsine coordinate θ = asin(√y).
///
/// The standard grid is uniform in θ, and the CDFs this crate deals with
/// (the arcsine law and the logistic-map iterates of smooth laws) are
/// smooth in θ even where their densities blow up at 0 and 1. Linear in a
/// monotone coordinate is still monotone, so any nondecreasing table
/// yields a valid CDF.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCdf {
    grid: Vec<f64>,
    theta: Vec<f64>,
    values: Vec<f64>,
}

impl GridCdf {
    /// Validates and builds a table.
    ///
    /// Knots must be strictly increasing from 0 to 1; values must start at
    /// 0, end at 1 and be nondecreasing up to [`MONOTONE_TOLERANCE`].
    pub fn new(grid: Vec<f64>, mut values: Vec<f64>) -> Result<Self> {
        if grid.len() < 2 || grid.len() != values.len() {
            return Err(Error::Integrity(format!(
                "grid has {} knots but {} values",
                grid.len(),
                values.len()
            )));
        }
        if grid[0] != 0.0 || grid[grid.len() - 1] != 1.0 {
            return Err(Error::Integrity("grid must span [0, 1]".into()));
        }
        // negated so that NaN knots are rejected too
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if let Some(i) = grid.windows(2).position(|w| !(w[0] < w[1])) {
            return Err(Error::Integrity(format!(
                "grid not strictly increasing at knot {}",
                i + 1
            )));
        }
        if values[0] != 0.0 || values[values.len() - 1] != 1.0 {
            return Err(Error::Integrity(format!(
                "endpoint values are {} and {}, expected 0 and 1",
                values[0],
                values[values.len() - 1]
            )));
        }
        let mut running = 0.0_f64;
        for (i, v) in values.iter_mut().enumerate() {
            if !v.is_finite() || *v < -MONOTONE_TOLERANCE || *v > 1.0 + MONOTONE_TOLERANCE {
                return Err(Error::Integrity(format!(
                    "value {v} at y = {} is not a probability",
                    grid[i]
                )));
            }
            if *v < running - MONOTONE_TOLERANCE {
                return Err(Error::Integrity(format!(
                    "CDF decreases by {:e} at y = {}",
                    running - *v,
                    grid[i]
                )));
            }
            running = running.max(*v).min(1.0);
            *v = running;
        }
        let theta = grid.iter().map(|&y| arcsine_coord(y)).collect();
        Ok(Self {
            grid,
            theta,
            values,
        })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn knots(&self) -> usize {
        self.grid.len()
    }

    pub fn eval(&self, y: f64) -> Result<f64> {
        crate::error::unit("y", y)?;
        let th = arcsine_coord(y);
        let n = self.theta.len();
        let i = self.theta.partition_point(|&t| t <= th).clamp(1, n - 1);
        let (t0, t1) = (self.theta[i - 1], self.theta[i]);
        let (v0, v1) = (self.values[i - 1], self.values[i]);
        if th >= t1 {
            return Ok(v1);
        }
        let w = (th - t0) / (t1 - t0);
        Ok(v0 + w * (v1 - v0))
    }
}

/// Tabulates `cdf` on the standard grid with `m` intervals.
pub fn tabulate(cdf: &CdfFn, m: usize) -> Result<GridCdf> {
    tabulate_on(cdf, standard_grid(m)?)
}

/// Tabulates `cdf` on an arbitrary knot set spanning [0, 1].
///
/// Endpoint values within [`MONOTONE_TOLERANCE`] of 0 and 1 are snapped;
/// larger deviations mean `cdf` is not a CDF on [0, 1] and are reported.
pub fn tabulate_on(cdf: &CdfFn, grid: Vec<f64>) -> Result<GridCdf> {
    let mut values = grid
        .iter()
        .map(|&y| cdf.eval(y))
        .collect::<Result<Vec<_>>>()?;
    if let (Some(first), Some(last)) = (values.first().copied(), values.last().copied()) {
        if first.abs() > MONOTONE_TOLERANCE || (last - 1.0).abs() > MONOTONE_TOLERANCE {
            return Err(Error::Integrity(format!(
                "{} has F(0) = {first}, F(1) = {last}",
                cdf.provenance()
            )));
        }
        values[0] = 0.0;
        let n = values.len();
        values[n - 1] = 1.0;
    }
    GridCdf::new(grid, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::DistSpec;

    #[test]
    fn standard_grid_shape() {
        let g = standard_grid(4).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[4], 1.0);
        assert_eq!(g[2], 0.5);
        let g = standard_grid(9).unwrap();
        for i in 0..=9 {
            assert!((g[i] + g[9 - i] - 1.0).abs() < 1e-16);
        }
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(standard_grid(1).is_err());
    }

    #[test]
    fn tabulated_uniform_matches_knots() {
        let t = tabulate(&CdfFn::uniform(), 4).unwrap();
        assert_eq!(t.values(), t.grid());
    }

    #[test]
    fn kumaraswamy_one_half_knots() {
        let k = CdfFn::from(DistSpec::kumaraswamy(1.0, 0.5).unwrap());
        let t = tabulate(&k, 1000).unwrap();
        for (&y, &v) in t.grid().iter().zip(t.values()) {
            assert!((v - (1.0 - (1.0 - y).sqrt())).abs() < 1e-14);
        }
    }

    #[test]
    fn arcsine_is_interpolated_exactly() {
        let t = tabulate(&CdfFn::arcsine(), 64).unwrap();
        for i in 0..=997 {
            let y = i as f64 / 997.0;
            let exact = crate::dist::cdf_arcsine(y).unwrap();
            assert!((t.eval(y).unwrap() - exact).abs() < 1e-14);
        }
    }

    #[test]
    fn eval_hits_knots_and_endpoints() {
        let t = tabulate(&CdfFn::kumaraswamy(2.0, 3.0).unwrap(), 16).unwrap();
        for (&y, &v) in t.grid().iter().zip(t.values()) {
            assert_eq!(t.eval(y).unwrap(), v);
        }
        assert_eq!(t.eval(0.0).unwrap(), 0.0);
        assert_eq!(t.eval(1.0).unwrap(), 1.0);
        assert!(t.eval(1.5).is_err());
    }

    #[test]
    fn rejects_decreasing_tables() {
        let grid = vec![0.0, 0.3, 0.6, 1.0];
        assert!(matches!(
            GridCdf::new(grid.clone(), vec![0.0, 0.5, 0.4, 1.0]),
            Err(Error::Integrity(_))
        ));
        // rounding-level dips are absorbed
        let ok = GridCdf::new(grid.clone(), vec![0.0, 0.5, 0.5 - 1e-12, 1.0]).unwrap();
        assert_eq!(ok.values()[2], 0.5);
        assert!(GridCdf::new(grid.clone(), vec![0.1, 0.5, 0.6, 1.0]).is_err());
        assert!(GridCdf::new(vec![0.0, 0.5, 0.5, 1.0], vec![0.0, 0.2, 0.3, 1.0]).is_err());
    }

    #[test]
    fn tabulating_a_non_cdf_fails() {
        // atom at 0 means F(0) = 1/2
        let e = CdfFn::from(DistSpec::empirical(vec![0.0, 0.7]).unwrap());
        assert!(matches!(tabulate(&e, 8), Err(Error::Integrity(_))));
    }
}
