use thiserror::Error;

use crate::grey::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument fell outside its admissible range.
    #[error("{name} = {value} is outside {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// Coefficient or matrix shapes do not line up.
    #[error("dimension mismatch: {0}")]
    Structural(String),

    #[error("invalid grey problem: {0}")]
    InvalidProblem(ValidationReport),

    #[error("simplex exceeded its iteration cap of {cap} pivots")]
    IterationLimit { cap: usize },

    #[error("linear program contains a non-finite entry")]
    NonFinite,

    /// The whitened program has no finite optimum, so degrees are undefined.
    #[error("positioned program is unbounded")]
    Unbounded,

    #[error("positioned program is infeasible")]
    Infeasible,

    #[error("division by a non-positive quantity: {0}")]
    DivisionDomain(String),

    /// f lies outside [critical, ideal] by more than the clamping tolerance.
    #[error("optimal value {f} lies outside [{critical}, {ideal}]")]
    Inconsistent { f: f64, critical: f64, ideal: f64 },
}

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            range: "[0, 1]",
        })
    }
}
