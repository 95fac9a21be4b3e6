//! Linear programming with grey (interval) parameters.
//!
//! * [`grey`] holds the problem model and turns a grey problem into a white
//!   ("positioned") LP for chosen position coefficients.
//! * [`simplex`] solves the positioned LP; [`oracle`] re-solves small
//!   instances by vertex enumeration for cross-checking.
//! * [`satisfaction`] computes the critical and ideal optimal values and
//!   grades a positioned optimum with the pleased degree and the
//!   λ-satisfaction degree.
//! * [`analysis`] sweeps uniform settings, checks monotonicity empirically and
//!   searches for satisfactory settings; [`render`] prints the results.
//!
//! ```
//! use greylp::{bounds, lambda_satisfaction, uniform_value, GreyLP, Interval};
//!
//! let iv = Interval::new;
//! let p = GreyLP::new(
//!     vec![iv(600.0, 800.0), iv(900.0, 1500.0)],
//!     vec![
//!         vec![iv(3.0, 5.0), iv(3.5, 6.5)],
//!         vec![iv(7.0, 11.0), iv(3.0, 5.0)],
//!         vec![iv(2.5, 3.5), iv(8.0, 12.0)],
//!     ],
//!     vec![iv(150.0, 235.0), iv(280.0, 360.0), iv(270.0, 330.0)],
//! )?;
//! let vb = bounds(&p)?;
//! let f = uniform_value(&p, 0.6, 0.6, 0.6)?;
//! let degree = lambda_satisfaction(f, vb, 0.5)?;
//! assert!((degree.value - 0.3659).abs() < 2e-4);
//! # Ok::<(), greylp::Error>(())
//! ```

pub mod analysis;
pub mod error;
pub mod grey;
pub mod oracle;
pub mod render;
pub mod satisfaction;
pub mod simplex;

pub use analysis::{
    check_monotonicity, find_satisfactory, grid_sweep, grid_values, lambda_sweep, Axis, MonotonicityReport,
    SatisfactionRecord, SatisfactoryPoint, SweepTable, Trend, UniformTriple,
};
pub use error::{Error, Result};
pub use grey::{
    build_positioned, theta_coefficients, uniform_coefficients, validate_problem, whiten, GreyLP, Interval,
    PositionCoefficients, ValidationReport, Violation, WhiteLP,
};
pub use oracle::enumerate_vertices_oracle;
pub use render::{render_table, RenderOptions, TableFormat, TableLayout};
pub use satisfaction::{
    bounds, is_lambda_satisfactory, is_pleased, lambda_satisfaction, pleased_degree, positioned_value, uniform_value,
    DegreeQuery, SatisfactionDegree, ValueBounds,
};
pub use simplex::{solve_max, LpSolution, LpStatus};
