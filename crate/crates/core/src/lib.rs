//! Propagation of probability distributions through the logistic map
//! f_r(x) = r x (1 − x) on [0, 1].
//!
//! The central object is the exact CDF pushforward
//! ([`pushforward::pushforward_cdf`]): if X has CDF F then f_r(X) has CDF
//! y ↦ F(1/2 − q) + 1 − F(1/2 + q) with q = √(1/4 − y/r). At r = 4 it
//! sends the uniform law to Kumaraswamy(1, 1/2) and then to
//! Kumaraswamy(1/2, 1/2), and leaves the arcsine law Beta(1/2, 1/2)
//! invariant. [`simulate`] provides the Monte Carlo side and
//! [`analysis`] the distances used to compare the two.

pub mod analysis;
pub mod cdf;
pub mod dist;
pub mod error;
pub mod grid;
pub mod pushforward;
pub mod simulate;
pub mod special;

pub use cdf::{CdfFn, Provenance};
pub use dist::{DistSpec, EmpiricalCdf, Family};
pub use error::{Error, Result};
pub use grid::{standard_grid, tabulate, GridCdf};
pub use pushforward::{iterate_pushforward, pushforward_cdf, IterateCdf, MapParam, Strategy};
