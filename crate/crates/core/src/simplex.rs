//! Dense primal simplex for `max c.x  s.t.  A x <= b, x >= 0`.
//!
//! The tableau starts from the all-slack basis. When some `b_i < 0` a phase I
//! with a single artificial column finds a feasible basis first. Entering and
//! leaving variables follow Bland's rule throughout, so degenerate pivots
//! cannot cycle.

// Indexed loops read better for tableau updates.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::grey::WhiteLP;

/// Reduced-cost and pivot-element tolerance.
pub const OPTIMALITY_TOL: f64 = 1e-9;
/// Tolerance for post-hoc feasibility checks of a reported optimum.
pub const FEASIBILITY_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal point; empty unless `status` is `Optimal`.
    pub x: Vec<f64>,
    /// `c.x` at the optimum; `None` unless `status` is `Optimal`.
    pub objective: Option<f64>,
    /// For `Unbounded`: a direction `d >= 0` with `A d <= 0` and `c.d > 0`.
    pub ray: Option<Vec<f64>>,
}

impl LpSolution {
    pub(crate) fn optimal(lp: &WhiteLP, x: Vec<f64>) -> Self {
        let objective = lp.objective_at(&x);
        Self {
            status: LpStatus::Optimal,
            x,
            objective: Some(objective),
            ray: None,
        }
    }

    pub(crate) fn unbounded(ray: Vec<f64>) -> Self {
        Self {
            status: LpStatus::Unbounded,
            x: Vec::new(),
            objective: None,
            ray: Some(ray),
        }
    }

    pub(crate) fn infeasible() -> Self {
        Self {
            status: LpStatus::Infeasible,
            x: Vec::new(),
            objective: None,
            ray: None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    /// The optimal value, or the matching error for unbounded or infeasible programs.
    pub fn value(&self) -> Result<f64> {
        match self.status {
            LpStatus::Optimal => Ok(self.objective.expect("optimal solution carries an objective")),
            LpStatus::Unbounded => Err(Error::Unbounded),
            LpStatus::Infeasible => Err(Error::Infeasible),
        }
    }
}

/// Pivot budget shared by both phases.
pub fn iteration_cap(m: usize, n: usize) -> usize {
    50 * (m + n)
}

struct Tableau {
    /// `m` constraint rows; the last entry of each row is its right-hand side.
    rows: Vec<Vec<f64>>,
    /// Reduced costs; the last entry is minus the current objective value.
    cost: Vec<f64>,
    basis: Vec<usize>,
    /// Columns that may not enter (a retired artificial).
    blocked: Option<usize>,
    pivots: usize,
    cap: usize,
}

enum Outcome {
    Optimal,
    /// Entering column with no positive entry.
    Unbounded(usize),
}

impl Tableau {
    fn width(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let rhs = self.width();
        let p = self.rows[r][j];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        self.rows[r][j] = 1.0;
        let pivot_row = self.rows[r].clone();

        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[j];
            if factor != 0.0 {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= factor * pv;
                }
                row[j] = 0.0;
                if row[rhs] < 0.0 && row[rhs] > -OPTIMALITY_TOL {
                    row[rhs] = 0.0;
                }
            }
        }
        let factor = self.cost[j];
        if factor != 0.0 {
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                *v -= factor * pv;
            }
            self.cost[j] = 0.0;
        }
        self.basis[r] = j;
        self.pivots += 1;
    }

    /// Bland's rule: lowest-index improving column.
    fn entering(&self) -> Option<usize> {
        (0..self.width()).find(|&j| Some(j) != self.blocked && self.cost[j] > OPTIMALITY_TOL)
    }

    /// Minimum ratio row; near-ties go to the lowest basic-variable index.
    fn leaving(&self, j: usize) -> Option<usize> {
        let rhs = self.width();
        let mut best: Option<(usize, f64)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            let a = row[j];
            if a <= OPTIMALITY_TOL {
                continue;
            }
            let ratio = row[rhs] / a;
            best = match best {
                None => Some((r, ratio)),
                Some((br, bratio)) => {
                    let slack = OPTIMALITY_TOL * bratio.abs().max(1.0);
                    if ratio < bratio - slack || (ratio <= bratio + slack && self.basis[r] < self.basis[br]) {
                        Some((r, ratio))
                    } else {
                        Some((br, bratio))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }

    fn run(&mut self) -> Result<Outcome> {
        while let Some(j) = self.entering() {
            let Some(r) = self.leaving(j) else {
                return Ok(Outcome::Unbounded(j));
            };
            if self.pivots >= self.cap {
                return Err(Error::IterationLimit { cap: self.cap });
            }
            self.pivot(r, j);
        }
        Ok(Outcome::Optimal)
    }

    fn basic_values(&self, count: usize) -> Vec<f64> {
        let rhs = self.width();
        let mut x = vec![0.0; count];
        for (r, &var) in self.basis.iter().enumerate() {
            if var < count {
                x[var] = self.rows[r][rhs].max(0.0);
            }
        }
        x
    }

    /// Improving direction over the first `n` columns when column `j` is unbounded.
    fn ray(&self, j: usize, n: usize) -> Vec<f64> {
        let mut d = vec![0.0; n];
        if j < n {
            d[j] = 1.0;
        }
        for (r, &var) in self.basis.iter().enumerate() {
            if var < n {
                d[var] = (-self.rows[r][j]).max(0.0);
            }
        }
        d
    }
}

/// Solves `max c.x  s.t.  A x <= b, x >= 0` with a deterministic dense simplex.
pub fn solve_max(lp: &WhiteLP) -> Result<LpSolution> {
    lp.check_shape()?;
    lp.check_finite()?;

    let m = lp.m();
    let n = lp.n();
    let needs_phase_one = lp.b.iter().any(|&b| b < 0.0);

    // Columns: n structural, m slack, then the artificial if phase I runs.
    let artificial = n + m;
    let width = if needs_phase_one { n + m + 1 } else { n + m };
    let rows = (0..m)
        .map(|i| {
            let mut row = vec![0.0; width + 1];
            row[..n].copy_from_slice(&lp.a[i]);
            row[n + i] = 1.0;
            if needs_phase_one {
                row[artificial] = -1.0;
            }
            row[width] = lp.b[i];
            row
        })
        .collect();
    let mut t = Tableau {
        rows,
        cost: vec![0.0; width + 1],
        basis: (n..n + m).collect(),
        blocked: None,
        pivots: 0,
        cap: iteration_cap(m, n),
    };

    if needs_phase_one {
        // max -x0; bring x0 in on the most negative right-hand side.
        t.cost[artificial] = -1.0;
        let worst = (0..m)
            .min_by(|&a, &b| lp.b[a].total_cmp(&lp.b[b]).then(a.cmp(&b)))
            .expect("m >= 1 when some b is negative");
        t.pivot(worst, artificial);
        t.run()?;
        let infeasibility = t.cost[width];
        // cost[rhs] = -(phase I objective) = x0 at optimum
        if infeasibility > FEASIBILITY_TOL * lp.b.iter().fold(1.0_f64, |acc, b| acc.max(b.abs())) {
            return Ok(LpSolution::infeasible());
        }
        if let Some(r) = t.basis.iter().position(|&v| v == artificial) {
            let j = (0..artificial)
                .find(|&j| t.rows[r][j].abs() > OPTIMALITY_TOL)
                .expect("slack identity keeps every row nonzero");
            t.pivot(r, j);
        }
        t.blocked = Some(artificial);
        for row in &mut t.rows {
            row[artificial] = 0.0;
        }
        // Price out the true objective against the feasible basis.
        let mut cost = vec![0.0; width + 1];
        cost[..n].copy_from_slice(&lp.c);
        for (r, &var) in t.basis.iter().enumerate() {
            let cb = if var < n { lp.c[var] } else { 0.0 };
            if cb != 0.0 {
                for (v, a) in cost.iter_mut().zip(&t.rows[r]) {
                    *v -= cb * a;
                }
            }
        }
        t.cost = cost;
    } else {
        t.cost[..n].copy_from_slice(&lp.c);
    }

    match t.run()? {
        Outcome::Optimal => Ok(LpSolution::optimal(lp, t.basic_values(n))),
        Outcome::Unbounded(j) => Ok(LpSolution::unbounded(t.ray(j, n))),
    }
}
