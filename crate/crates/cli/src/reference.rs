//! The bundled two-variable example and its reference results.

use greylp::{bounds, lambda_satisfaction, pleased_degree, uniform_value, UniformTriple};

use crate::problem_file::{parse_problem, ProblemFile};

pub const EXAMPLE_JSON: &str = include_str!("../data/two_product_plan.json");

pub const F_TOL: f64 = 0.01;
pub const MU_TOL: f64 = 1e-4;
pub const MU_TILDE_TOL: f64 = 2e-4;

/// Settings with their reference optimal value and pleased degree.
pub const VALUE_TABLE: [((f64, f64, f64), f64, f64); 6] = [
    ((1.0, 1.0, 0.0), 74783.51, 0.86188),
    ((0.0, 0.0, 1.0), 20657.71, 0.13812),
    ((0.6, 0.6, 0.6), 42995.88, 0.54724),
    ((0.7, 0.9, 0.5), 51643.20, 0.64528),
    ((0.5, 0.9, 0.4), 50124.28, 0.62906),
    ((0.7, 0.5, 0.3), 50377.88, 0.63179),
];

/// Column settings of the λ-satisfaction table.
pub const LAMBDA_SETTINGS: [(f64, f64, f64); 4] = [(0.6, 0.6, 0.6), (0.7, 0.9, 0.5), (0.5, 0.9, 0.4), (0.7, 0.5, 0.3)];

/// Rows `lambda = 0, 0.1, ..., 1`; one column per entry of [`LAMBDA_SETTINGS`].
pub const LAMBDA_TABLE: [[f64; 4]; 11] = [
    [0.2600, 0.4010, 0.3740, 0.3785],
    [0.2843, 0.4293, 0.4019, 0.4064],
    [0.3072, 0.4558, 0.4281, 0.4326],
    [0.3285, 0.4802, 0.4523, 0.4569],
    [0.3482, 0.5023, 0.4743, 0.4789],
    [0.3659, 0.5221, 0.4939, 0.4986],
    [0.3813, 0.5390, 0.5108, 0.5155],
    [0.3942, 0.5529, 0.5248, 0.5295],
    [0.4040, 0.5635, 0.5353, 0.5400],
    [0.4104, 0.5701, 0.5420, 0.5467],
    [0.4127, 0.5725, 0.5444, 0.5491],
];

pub fn example() -> ProblemFile {
    parse_problem(EXAMPLE_JSON).expect("bundled example is valid")
}

pub fn lambda_grid() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

pub fn triple((a, b, g): (f64, f64, f64)) -> UniformTriple {
    UniformTriple::new(a, b, g).expect("reference settings lie in [0, 1]")
}

/// One recomputed table cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellCheck {
    pub label: String,
    pub expected: f64,
    pub actual: Option<f64>,
    pub tolerance: f64,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.actual.is_some_and(|a| (a - self.expected).abs() <= self.tolerance)
    }
}

/// Recomputes every cell of both reference tables from the bundled file.
pub fn verify_example() -> Vec<CellCheck> {
    let p = example().problem;
    let vb = bounds(&p).ok();
    let f_of = |t: (f64, f64, f64)| uniform_value(&p, t.0, t.1, t.2).ok();
    let mut checks = Vec::new();

    for (setting, f, mu) in VALUE_TABLE {
        let label = triple(setting).to_string();
        let actual_f = f_of(setting);
        checks.push(CellCheck {
            label: format!("f{label}"),
            expected: f,
            actual: actual_f,
            tolerance: F_TOL,
        });
        let actual_mu = actual_f.zip(vb).and_then(|(f, vb)| pleased_degree(f, vb).ok());
        checks.push(CellCheck {
            label: format!("mu{label}"),
            expected: mu,
            actual: actual_mu,
            tolerance: MU_TOL,
        });
    }

    for (row, lambda) in LAMBDA_TABLE.iter().zip(lambda_grid()) {
        for (&expected, setting) in row.iter().zip(LAMBDA_SETTINGS) {
            let actual = f_of(setting)
                .zip(vb)
                .and_then(|(f, vb)| lambda_satisfaction(f, vb, lambda).ok())
                .map(|d| d.value);
            checks.push(CellCheck {
                label: format!("mu_tilde[lambda={lambda}]{}", triple(setting)),
                expected,
                actual,
                tolerance: MU_TILDE_TOL,
            });
        }
    }
    checks
}
