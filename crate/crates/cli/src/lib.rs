//! Command-line front end: problem files, subcommand dispatch and the bundled
//! reference example.

mod app;
pub mod problem_file;
pub mod reference;

pub use app::{run, EXIT_INVALID, EXIT_OK, EXIT_SOLVE, EXIT_USAGE};
pub use problem_file::{load_problem, parse_problem, serialize_problem, ProblemFile, ProblemFileError};
