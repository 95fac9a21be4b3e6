//! JSON problem files.
//!
//! ```json
//! {
//!   "name": "optional",
//!   "description": "optional",
//!   "objective": [[lo, hi], ...],
//!   "matrix": [[[lo, hi], ...], ...],
//!   "rhs": [[lo, hi], ...]
//! }
//! ```

use std::fs;
use std::path::Path;

use greylp::{validate_problem, GreyLP, Interval, ValidationReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProblemFileError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid problem: {0}")]
    Invalid(ValidationReport),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A grey problem plus its optional metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub name: Option<String>,
    pub description: Option<String>,
    pub problem: GreyLP,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    objective: Vec<[f64; 2]>,
    matrix: Vec<Vec<[f64; 2]>>,
    rhs: Vec<[f64; 2]>,
}

fn to_interval(pair: [f64; 2]) -> Interval {
    Interval::new(pair[0], pair[1])
}

fn to_pair(iv: &Interval) -> [f64; 2] {
    [iv.lo, iv.hi]
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ProblemFileError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| ProblemFileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let problem = GreyLP {
        objective: raw.objective.into_iter().map(to_interval).collect(),
        matrix: raw
            .matrix
            .into_iter()
            .map(|row| row.into_iter().map(to_interval).collect())
            .collect(),
        rhs: raw.rhs.into_iter().map(to_interval).collect(),
    };
    let report = validate_problem(&problem);
    if !report.is_empty() {
        return Err(ProblemFileError::Invalid(report));
    }
    Ok(ProblemFile {
        name: raw.name,
        description: raw.description,
        problem,
    })
}

pub fn load_problem(path: &Path) -> Result<ProblemFile, ProblemFileError> {
    let text = fs::read_to_string(path).map_err(|source| ProblemFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_problem(&text)
}

/// Pretty-printed JSON that [`parse_problem`] reads back unchanged.
pub fn serialize_problem(file: &ProblemFile) -> String {
    let p = &file.problem;
    let raw = RawProblem {
        name: file.name.clone(),
        description: file.description.clone(),
        objective: p.objective.iter().map(to_pair).collect(),
        matrix: p.matrix.iter().map(|row| row.iter().map(to_pair).collect()).collect(),
        rhs: p.rhs.iter().map(to_pair).collect(),
    };
    let mut text = serde_json::to_string_pretty(&raw).expect("problem serialises to json");
    text.push('\n');
    text
}
