//! Sweeps over uniform `(alpha, beta, gamma)` settings, empirical monotonicity
//! checks and satisfactory-region search.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_unit, Error, Result};
use crate::grey::{GreyLP, PositionCoefficients};
use crate::satisfaction::{bounds, lambda_satisfaction, pleased_degree, uniform_value, ValueBounds};

/// Relative tolerance for ordering checks between positioned values.
pub const MONOTONICITY_TOL: f64 = 1e-6;

/// Default grid spacing for sweeps.
pub const DEFAULT_STEP: f64 = 0.1;

/// One uniform setting: every alpha, beta and gamma share a value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformTriple {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl UniformTriple {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_unit("alpha", alpha)?;
        check_unit("beta", beta)?;
        check_unit("gamma", gamma)?;
        Ok(Self { alpha, beta, gamma })
    }

    pub fn theta(theta: f64) -> Result<Self> {
        Self::new(theta, theta, theta)
    }

    pub fn coefficients(&self, m: usize, n: usize) -> Result<PositionCoefficients> {
        PositionCoefficients::uniform(self.alpha, self.beta, self.gamma, m, n)
    }

    /// `Some(theta)` when all three coefficients coincide.
    pub fn as_theta(&self) -> Option<f64> {
        (self.alpha == self.beta && self.beta == self.gamma).then_some(self.alpha)
    }

    pub fn get(&self, axis: Axis) -> f64 {
        match axis {
            Axis::Alpha => self.alpha,
            Axis::Beta => self.beta,
            Axis::Gamma => self.gamma,
        }
    }

    pub fn lexicographic(&self, other: &Self) -> Ordering {
        self.alpha
            .total_cmp(&other.alpha)
            .then(self.beta.total_cmp(&other.beta))
            .then(self.gamma.total_cmp(&other.gamma))
    }
}

impl fmt::Display for UniformTriple {
    /// `(0.6)` for a θ setting, `(0.7,0.9,0.5)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_theta() {
            Some(t) => write!(f, "({t})"),
            None => write!(f, "({},{},{})", self.alpha, self.beta, self.gamma),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SatisfactionRecord {
    pub setting: UniformTriple,
    /// Positioned optimal value; `None` when the positioned program has no optimum.
    pub f: Option<f64>,
    pub mu: Option<f64>,
    /// `(lambda, mu~_lambda)` in the order the lambdas were requested.
    pub mu_tilde: Vec<(f64, f64)>,
    /// Why some values are missing, when they are.
    pub flag: Option<String>,
}

impl SatisfactionRecord {
    pub fn is_flagged(&self) -> bool {
        self.flag.is_some()
    }

    pub fn mu_tilde_at(&self, lambda: f64) -> Option<f64> {
        self.mu_tilde.iter().find(|(l, _)| *l == lambda).map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub axis_labels: Vec<String>,
    pub lambdas: Vec<f64>,
    /// `None` when the critical or ideal program is unbounded.
    pub bounds: Option<ValueBounds>,
    pub rows: Vec<SatisfactionRecord>,
}

impl SweepTable {
    pub fn empty(lambdas: Vec<f64>) -> Self {
        Self {
            axis_labels: axis_labels(),
            lambdas,
            bounds: None,
            rows: Vec::new(),
        }
    }

    pub fn record(&self, setting: UniformTriple) -> Option<&SatisfactionRecord> {
        self.rows.iter().find(|r| r.setting == setting)
    }
}

fn axis_labels() -> Vec<String> {
    ["alpha", "beta", "gamma"].map(String::from).to_vec()
}

/// Grid `{0, step, 2 step, ..., 1}`, always including both endpoints.
pub fn grid_values(step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step <= 0.5) {
        return Err(Error::Domain {
            name: "step",
            value: step,
            range: "(0, 0.5]",
        });
    }
    // Snapping keeps 0.1 * 6 at 0.6 instead of 0.6000000000000001.
    let snap = |v: f64| (v * 1e12).round() / 1e12;
    let mut values: Vec<f64> = (0..)
        .map(|k| snap(k as f64 * step))
        .take_while(|&v| v < 1.0 - 1e-9)
        .collect();
    values.push(1.0);
    Ok(values)
}

fn evaluate_record(
    p: &GreyLP,
    setting: UniformTriple,
    bounds: &std::result::Result<ValueBounds, Error>,
    lambdas: &[f64],
) -> SatisfactionRecord {
    let mut record = SatisfactionRecord {
        setting,
        f: None,
        mu: None,
        mu_tilde: Vec::new(),
        flag: None,
    };
    let f = match uniform_value(p, setting.alpha, setting.beta, setting.gamma) {
        Ok(f) => f,
        Err(e) => {
            record.flag = Some(e.to_string());
            return record;
        }
    };
    record.f = Some(f);
    let vb = match bounds {
        Ok(vb) => *vb,
        Err(e) => {
            record.flag = Some(format!("bounds undefined: {e}"));
            return record;
        }
    };
    match pleased_degree(f, vb) {
        Ok(mu) => record.mu = Some(mu),
        Err(e) => record.flag = Some(e.to_string()),
    }
    for &lambda in lambdas {
        match lambda_satisfaction(f, vb, lambda) {
            Ok(d) => {
                record.mu_tilde.push((lambda, d.value));
                if d.effectively_white && record.flag.is_none() {
                    record.flag = Some("effectively white problem".into());
                }
            }
            Err(e) => {
                record.flag = Some(e.to_string());
                break;
            }
        }
    }
    record
}

fn sweep(p: &GreyLP, settings: &[UniformTriple], lambdas: &[f64]) -> Result<SweepTable> {
    p.ensure_valid()?;
    for &l in lambdas {
        check_unit("lambda", l)?;
    }
    let vb = bounds(p);
    let rows = settings.iter().map(|&s| evaluate_record(p, s, &vb, lambdas)).collect();
    Ok(SweepTable {
        axis_labels: axis_labels(),
        lambdas: lambdas.to_vec(),
        bounds: vb.ok(),
        rows,
    })
}

/// Evaluates `f`, `mu` and `mu~_lambda` for each requested setting, keeping
/// the caller's setting order. Settings whose values cannot be computed are
/// flagged rather than aborting the sweep.
pub fn lambda_sweep(p: &GreyLP, settings: &[UniformTriple], lambdas: &[f64]) -> Result<SweepTable> {
    sweep(p, settings, lambdas)
}

/// Every uniform setting on the cubic grid, in lexicographic order.
pub fn grid_sweep(p: &GreyLP, step: f64, lambdas: &[f64]) -> Result<SweepTable> {
    let grid = grid_values(step)?;
    let mut settings = Vec::with_capacity(grid.len().pow(3));
    for &alpha in &grid {
        for &beta in &grid {
            for &gamma in &grid {
                settings.push(UniformTriple { alpha, beta, gamma });
            }
        }
    }
    sweep(p, &settings, lambdas)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Alpha,
    Beta,
    Gamma,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Alpha, Axis::Beta, Axis::Gamma];

    /// Raising alpha or beta can only help; raising gamma tightens every row.
    pub fn expected_trend(self) -> Trend {
        match self {
            Axis::Alpha | Axis::Beta => Trend::Nondecreasing,
            Axis::Gamma => Trend::Nonincreasing,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Alpha => "alpha",
            Axis::Beta => "beta",
            Axis::Gamma => "gamma",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Nondecreasing,
    Nonincreasing,
}

/// Two grid points adjacent along the probed axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub lower: UniformTriple,
    pub upper: UniformTriple,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityViolation {
    pub probe: Probe,
    pub f_lower: f64,
    pub f_upper: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport {
    pub axis: Axis,
    pub expected: Trend,
    pub grid: Vec<Probe>,
    pub violations: Vec<MonotonicityViolation>,
    /// Probes where either program had no optimum.
    pub skipped: Vec<Probe>,
    /// Probes where `f` rose by more than the tolerance.
    pub rises: usize,
    /// Probes where `f` fell by more than the tolerance.
    pub falls: usize,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// The direction the data supports, if any; `None` when `f` both rose and fell.
    pub fn observed(&self) -> Option<Trend> {
        match (self.rises, self.falls) {
            (_, 0) => Some(Trend::Nondecreasing),
            (0, _) => Some(Trend::Nonincreasing),
            _ => None,
        }
    }
}

/// Probes adjacent grid values along `axis` with the other two coefficients
/// fixed at every grid combination.
pub fn check_monotonicity(p: &GreyLP, axis: Axis, step: f64) -> Result<MonotonicityReport> {
    p.ensure_valid()?;
    let grid = grid_values(step)?;
    let len = grid.len();
    let at = |i: usize, j: usize, k: usize| UniformTriple {
        alpha: grid[i],
        beta: grid[j],
        gamma: grid[k],
    };

    let mut values = vec![None; len * len * len];
    for i in 0..len {
        for j in 0..len {
            for k in 0..len {
                let t = at(i, j, k);
                values[(i * len + j) * len + k] = uniform_value(p, t.alpha, t.beta, t.gamma).ok();
            }
        }
    }
    let scale = values.iter().flatten().fold(1.0_f64, |acc, f| acc.max(f.abs()));
    let tol = MONOTONICITY_TOL * scale;
    let expected = axis.expected_trend();

    let mut report = MonotonicityReport {
        axis,
        expected,
        grid: Vec::new(),
        violations: Vec::new(),
        skipped: Vec::new(),
        rises: 0,
        falls: 0,
    };
    for u in 0..len {
        for v in 0..len {
            for s in 0..len - 1 {
                let (lo, hi) = match axis {
                    Axis::Alpha => ((s, u, v), (s + 1, u, v)),
                    Axis::Beta => ((u, s, v), (u, s + 1, v)),
                    Axis::Gamma => ((u, v, s), (u, v, s + 1)),
                };
                let probe = Probe {
                    lower: at(lo.0, lo.1, lo.2),
                    upper: at(hi.0, hi.1, hi.2),
                };
                report.grid.push(probe);
                let f_lower = values[(lo.0 * len + lo.1) * len + lo.2];
                let f_upper = values[(hi.0 * len + hi.1) * len + hi.2];
                let (Some(f_lower), Some(f_upper)) = (f_lower, f_upper) else {
                    report.skipped.push(probe);
                    continue;
                };
                let diff = f_upper - f_lower;
                if diff > tol {
                    report.rises += 1;
                } else if diff < -tol {
                    report.falls += 1;
                }
                let broken = match expected {
                    Trend::Nondecreasing => diff < -tol,
                    Trend::Nonincreasing => diff > tol,
                };
                if broken {
                    report.violations.push(MonotonicityViolation {
                        probe,
                        f_lower,
                        f_upper,
                    });
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SatisfactoryPoint {
    pub setting: UniformTriple,
    pub mu_tilde: f64,
}

/// Grid settings whose λ-satisfaction degree reaches `mu0`, best first.
pub fn find_satisfactory(p: &GreyLP, mu0: f64, lambda: f64, step: f64) -> Result<Vec<SatisfactoryPoint>> {
    check_unit("mu0", mu0)?;
    check_unit("lambda", lambda)?;
    let table = grid_sweep(p, step, &[lambda])?;
    let mut hits: Vec<SatisfactoryPoint> = table
        .rows
        .iter()
        .filter_map(|r| {
            let mu_tilde = r.mu_tilde_at(lambda)?;
            (mu_tilde >= mu0).then_some(SatisfactoryPoint {
                setting: r.setting,
                mu_tilde,
            })
        })
        .collect();
    hits.sort_by(|a, b| {
        b.mu_tilde
            .total_cmp(&a.mu_tilde)
            .then_with(|| a.setting.lexicographic(&b.setting))
    });
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grey::Interval;
    use approx::assert_abs_diff_eq;

    fn example() -> GreyLP {
        let iv = Interval::new;
        GreyLP::new(
            vec![iv(600.0, 800.0), iv(900.0, 1500.0)],
            vec![
                vec![iv(3.0, 5.0), iv(3.5, 6.5)],
                vec![iv(7.0, 11.0), iv(3.0, 5.0)],
                vec![iv(2.5, 3.5), iv(8.0, 12.0)],
            ],
            vec![iv(150.0, 235.0), iv(280.0, 360.0), iv(270.0, 330.0)],
        )
        .unwrap()
    }

    fn white() -> GreyLP {
        let pt = Interval::point;
        GreyLP::new(
            vec![pt(2.0), pt(3.0)],
            vec![vec![pt(1.0), pt(1.0)], vec![pt(1.0), pt(3.0)]],
            vec![pt(4.0), pt(6.0)],
        )
        .unwrap()
    }

    fn tenths() -> Vec<f64> {
        (0..=10).map(|k| k as f64 / 10.0).collect()
    }

    #[test]
    fn grid_values_snap_and_include_one() {
        assert_eq!(grid_values(0.5).unwrap(), vec![0.0, 0.5, 1.0]);
        let g = grid_values(0.1).unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[6], 0.6);
        assert_eq!(grid_values(0.3).unwrap(), vec![0.0, 0.3, 0.6, 0.9, 1.0]);
        assert!(grid_values(0.0).is_err());
        assert!(grid_values(0.7).is_err());
    }

    #[test]
    fn theta_column_of_lambda_table() {
        let expected = [
            0.2600, 0.2843, 0.3072, 0.3285, 0.3482, 0.3659, 0.3813, 0.3942, 0.4040, 0.4104, 0.4127,
        ];
        let t = lambda_sweep(&example(), &[UniformTriple::theta(0.6).unwrap()], &tenths()).unwrap();
        let got: Vec<f64> = t.rows[0].mu_tilde.iter().map(|(_, v)| *v).collect();
        for (g, e) in got.iter().zip(expected) {
            assert_abs_diff_eq!(*g, e, epsilon = 2e-4);
        }
    }

    #[test]
    fn optimistic_pessimistic_ends() {
        let s = UniformTriple::new(0.7, 0.9, 0.5).unwrap();
        let t = lambda_sweep(&example(), &[s], &[0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(t.rows[0].mu_tilde[0].1, 0.4010, epsilon = 2e-4);
        assert_abs_diff_eq!(t.rows[0].mu_tilde[1].1, 0.5725, epsilon = 2e-4);
    }

    #[test]
    fn ideal_setting_is_fully_satisfactory() {
        let t = lambda_sweep(&example(), &[UniformTriple::new(1.0, 1.0, 0.0).unwrap()], &tenths()).unwrap();
        assert!(t.rows[0].mu_tilde.iter().all(|(_, v)| *v == 1.0));
    }

    #[test]
    fn coarse_grid_sweep() {
        let t = grid_sweep(&example(), 0.5, &[0.5]).unwrap();
        assert_eq!(t.rows.len(), 27);
        let ideal = t.record(UniformTriple::new(1.0, 1.0, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(ideal.f.unwrap(), 74783.51, epsilon = 0.01);
        let critical = t.record(UniformTriple::new(0.0, 0.0, 1.0).unwrap()).unwrap();
        assert_abs_diff_eq!(critical.f.unwrap(), 20657.71, epsilon = 0.01);
        assert!(t
            .rows
            .windows(2)
            .all(|w| w[0].setting.lexicographic(&w[1].setting) == Ordering::Less));
    }

    #[test]
    fn white_problem_sweep_shares_one_value() {
        let t = grid_sweep(&white(), 0.5, &[0.0, 1.0]).unwrap();
        let f0 = t.rows[0].f.unwrap();
        assert!(t.rows.iter().all(|r| r.f == Some(f0)));
        assert!(t.rows.iter().all(|r| r.mu_tilde.iter().all(|(_, v)| *v == 1.0)));
        assert_eq!(t.rows[0].flag.as_deref(), Some("effectively white problem"));
    }

    #[test]
    fn unbounded_rows_are_flagged() {
        // The ideal program has a zero column with a positive cost.
        let iv = Interval::new;
        let p = GreyLP::new(vec![iv(1.0, 2.0)], vec![vec![iv(0.0, 1.0)]], vec![iv(1.0, 2.0)]).unwrap();
        let t = grid_sweep(&p, 0.5, &[0.5]).unwrap();
        assert_eq!(t.rows.len(), 27);
        assert!(t.bounds.is_none());
        assert!(t.rows.iter().all(|r| r.is_flagged()));
        let zero_gamma = t.rows.iter().filter(|r| r.setting.gamma == 0.0);
        assert!(zero_gamma.into_iter().all(|r| r.f.is_none()));
    }

    #[test]
    fn monotone_along_each_axis() {
        let p = example();
        for axis in Axis::ALL {
            let r = check_monotonicity(&p, axis, 0.25).unwrap();
            assert!(r.holds(), "{axis}: {:?}", r.violations);
            assert_eq!(r.grid.len(), 25 * 4);
            assert!(r.skipped.is_empty());
            assert_eq!(r.observed(), Some(axis.expected_trend()));
        }
    }

    #[test]
    fn white_problem_is_flat() {
        let r = check_monotonicity(&white(), Axis::Beta, 0.5).unwrap();
        assert!(r.holds());
        assert_eq!(r.rises + r.falls, 0);
    }

    #[test]
    fn satisfactory_search() {
        let p = example();
        let theta = UniformTriple::theta(0.6).unwrap();
        let strict = find_satisfactory(&p, 0.5, 0.5, 0.1).unwrap();
        assert!(!strict.iter().any(|s| s.setting == theta));
        assert!(strict.windows(2).all(|w| w[0].mu_tilde >= w[1].mu_tilde));
        assert!(strict.iter().all(|s| s.mu_tilde >= 0.5));

        let loose = find_satisfactory(&p, 0.4, 0.8, 0.1).unwrap();
        let hit = loose.iter().find(|s| s.setting == theta).unwrap();
        assert_abs_diff_eq!(hit.mu_tilde, 0.4040, epsilon = 2e-4);

        assert_eq!(find_satisfactory(&p, 0.0, 0.3, 0.5).unwrap().len(), 27);
    }

    #[test]
    fn labels() {
        assert_eq!(UniformTriple::theta(0.6).unwrap().to_string(), "(0.6)");
        assert_eq!(UniformTriple::new(1.0, 1.0, 0.0).unwrap().to_string(), "(1,1,0)");
    }
}
