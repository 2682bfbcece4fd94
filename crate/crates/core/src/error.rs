use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the unit interval")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    Parameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("incomplete beta continued fraction did not converge after {iterations} iterations (a={a}, b={b}, x={x})")]
    NonConvergence {
        a: f64,
        b: f64,
        x: f64,
        iterations: usize,
    },

    #[error("exact evaluation of iterate n={n} exceeds the recursion limit {limit}")]
    Resource { n: usize, limit: usize },

    #[error("numerical integrity failure: {0}")]
    Integrity(String),

    #[error("empirical sample set is empty")]
    EmptySample,

    #[error("degenerate orbit: {0}")]
    DegenerateOrbit(String),

    #[error("cannot parse distribution spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Checks `value` lies in [0, 1].
pub(crate) fn unit(what: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Parameter {
            name,
            value,
            reason: "must be a finite positive number",
        })
    }
}
