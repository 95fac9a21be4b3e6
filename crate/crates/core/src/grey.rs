//! Grey problem data model and positioned whitening.
//!
//! A grey linear program is `max C(x)X  s.t.  A(x)X <= b(x), X >= 0` where every
//! parameter is only known to lie in a closed interval with a nonnegative lower
//! bound. Choosing a position coefficient `t` in `[0, 1]` for each parameter
//! whitens it to `t * hi + (1 - t) * lo`, which turns the grey problem into an
//! ordinary ("positioned") linear program.

use std::fmt;

use crate::error::{check_unit, Error, Result};

/// A closed range `[lo, hi]` holding one grey parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    /// A degenerate interval, i.e. a white number.
    pub const fn point(value: f64) -> Self {
        Self { lo: value, hi: value }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_white(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Whitened value `t * hi + (1 - t) * lo` of a grey parameter.
pub fn whiten(iv: Interval, t: f64) -> Result<f64> {
    check_unit("position coefficient", t)?;
    Ok(whiten_unchecked(iv, t))
}

#[inline]
fn whiten_unchecked(iv: Interval, t: f64) -> f64 {
    // Both endpoints are reproduced exactly at t = 0 and t = 1.
    t * iv.hi + (1.0 - t) * iv.lo
}

/// Linear program with grey parameters.
///
/// Fields are public so that malformed data can be held and reported by
/// [`validate_problem`]; every operation that needs a well-formed problem
/// validates it first.
#[derive(Debug, Clone, PartialEq)]
pub struct GreyLP {
    /// One interval per decision variable.
    pub objective: Vec<Interval>,
    /// `m` rows of `n` intervals.
    pub matrix: Vec<Vec<Interval>>,
    /// One interval per constraint row.
    pub rhs: Vec<Interval>,
}

impl GreyLP {
    /// Builds a problem and rejects it unless it passes validation.
    pub fn new(objective: Vec<Interval>, matrix: Vec<Vec<Interval>>, rhs: Vec<Interval>) -> Result<Self> {
        let p = Self { objective, matrix, rhs };
        p.ensure_valid()?;
        Ok(p)
    }

    /// Number of decision variables.
    pub fn n(&self) -> usize {
        self.objective.len()
    }

    /// Number of constraint rows.
    pub fn m(&self) -> usize {
        self.rhs.len()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = validate_problem(self);
        if report.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidProblem(report))
        }
    }

    /// True when every parameter is a degenerate interval.
    pub fn is_white(&self) -> bool {
        self.objective.iter().all(Interval::is_white)
            && self.rhs.iter().all(Interval::is_white)
            && self.matrix.iter().flatten().all(Interval::is_white)
    }
}

/// Where in a [`GreyLP`] a parameter lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Objective(usize),
    Matrix(usize, usize),
    Rhs(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Objective(j) => write!(f, "objective[{j}]"),
            Location::Matrix(i, j) => write!(f, "matrix[{i}][{j}]"),
            Location::Rhs(i) => write!(f, "rhs[{i}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// `lo > hi`.
    Reversed {
        at: Location,
        interval: Interval,
    },
    NegativeLower {
        at: Location,
        interval: Interval,
    },
    NonFinite {
        at: Location,
        interval: Interval,
    },
    Dimension(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Reversed { at, interval } => write!(f, "{at}: lo > hi in {interval}"),
            Violation::NegativeLower { at, interval } => {
                write!(f, "{at}: negative lower bound in {interval}")
            }
            Violation::NonFinite { at, interval } => write!(f, "{at}: non-finite entry in {interval}"),
            Violation::Dimension(msg) => write!(f, "dimension mismatch: {msg}"),
        }
    }
}

/// Every violation found in a problem; empty iff the problem is valid.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.violations {
            if !first {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

fn check_interval(at: Location, iv: Interval, out: &mut Vec<Violation>) {
    if !iv.lo.is_finite() || !iv.hi.is_finite() {
        out.push(Violation::NonFinite { at, interval: iv });
        return;
    }
    if iv.lo > iv.hi {
        out.push(Violation::Reversed { at, interval: iv });
    }
    if iv.lo < 0.0 {
        out.push(Violation::NegativeLower { at, interval: iv });
    }
}

/// Collects every violated invariant instead of stopping at the first.
pub fn validate_problem(p: &GreyLP) -> ValidationReport {
    let mut violations = Vec::new();
    let n = p.objective.len();
    let m = p.rhs.len();

    if n == 0 {
        violations.push(Violation::Dimension("objective has no variables".into()));
    }
    if m == 0 {
        violations.push(Violation::Dimension("problem has no constraint rows".into()));
    }
    if p.matrix.len() != m {
        violations.push(Violation::Dimension(format!(
            "matrix has {} rows but rhs has {m} entries",
            p.matrix.len()
        )));
    }
    for (i, row) in p.matrix.iter().enumerate() {
        if row.len() != n {
            violations.push(Violation::Dimension(format!(
                "matrix row {i} has {} entries but objective has {n}",
                row.len()
            )));
        }
    }

    for (j, iv) in p.objective.iter().enumerate() {
        check_interval(Location::Objective(j), *iv, &mut violations);
    }
    for (i, row) in p.matrix.iter().enumerate() {
        for (j, iv) in row.iter().enumerate() {
            check_interval(Location::Matrix(i, j), *iv, &mut violations);
        }
    }
    for (i, iv) in p.rhs.iter().enumerate() {
        check_interval(Location::Rhs(i), *iv, &mut violations);
    }

    ValidationReport { violations }
}

/// Per-entry position coefficients: one alpha per objective coefficient, one
/// beta per right-hand side, one gamma per matrix entry.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionCoefficients {
    alphas: Vec<f64>,
    betas: Vec<f64>,
    gammas: Vec<Vec<f64>>,
}

impl PositionCoefficients {
    pub fn new(alphas: Vec<f64>, betas: Vec<f64>, gammas: Vec<Vec<f64>>) -> Result<Self> {
        for &a in &alphas {
            check_unit("alpha", a)?;
        }
        for &b in &betas {
            check_unit("beta", b)?;
        }
        if gammas.len() != betas.len() {
            return Err(Error::Structural(format!(
                "{} gamma rows for {} betas",
                gammas.len(),
                betas.len()
            )));
        }
        for row in &gammas {
            if row.len() != alphas.len() {
                return Err(Error::Structural(format!(
                    "gamma row of length {} for {} alphas",
                    row.len(),
                    alphas.len()
                )));
            }
            for &g in row {
                check_unit("gamma", g)?;
            }
        }
        Ok(Self { alphas, betas, gammas })
    }

    /// The same alpha, beta and gamma for every entry of an `m x n` problem.
    pub fn uniform(alpha: f64, beta: f64, gamma: f64, m: usize, n: usize) -> Result<Self> {
        check_unit("alpha", alpha)?;
        check_unit("beta", beta)?;
        check_unit("gamma", gamma)?;
        Ok(Self {
            alphas: vec![alpha; n],
            betas: vec![beta; m],
            gammas: vec![vec![gamma; n]; m],
        })
    }

    /// A single coefficient shared by every entry.
    pub fn theta(theta: f64, m: usize, n: usize) -> Result<Self> {
        check_unit("theta", theta)?;
        Self::uniform(theta, theta, theta, m, n)
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    pub fn gammas(&self) -> &[Vec<f64>] {
        &self.gammas
    }

    fn check_shape(&self, p: &GreyLP) -> Result<()> {
        if self.alphas.len() != p.n() || self.betas.len() != p.m() {
            return Err(Error::Structural(format!(
                "coefficients are {}x{} but problem is {}x{}",
                self.betas.len(),
                self.alphas.len(),
                p.m(),
                p.n()
            )));
        }
        Ok(())
    }
}

/// Convenience constructor for [`PositionCoefficients::uniform`].
pub fn uniform_coefficients(alpha: f64, beta: f64, gamma: f64, m: usize, n: usize) -> Result<PositionCoefficients> {
    PositionCoefficients::uniform(alpha, beta, gamma, m, n)
}

/// Convenience constructor for [`PositionCoefficients::theta`].
pub fn theta_coefficients(theta: f64, m: usize, n: usize) -> Result<PositionCoefficients> {
    PositionCoefficients::theta(theta, m, n)
}

/// A concrete maximisation LP: `max c.x  s.t.  A x <= b, x >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct WhiteLP {
    pub c: Vec<f64>,
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
}

impl WhiteLP {
    pub fn new(c: Vec<f64>, a: Vec<Vec<f64>>, b: Vec<f64>) -> Result<Self> {
        let lp = Self { c, a, b };
        lp.check_shape()?;
        Ok(lp)
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub(crate) fn check_shape(&self) -> Result<()> {
        if self.a.len() != self.b.len() {
            return Err(Error::Structural(format!(
                "{} matrix rows for {} right-hand sides",
                self.a.len(),
                self.b.len()
            )));
        }
        if let Some(row) = self.a.iter().find(|row| row.len() != self.c.len()) {
            return Err(Error::Structural(format!(
                "matrix row of length {} for {} variables",
                row.len(),
                self.c.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_finite(&self) -> Result<()> {
        let finite = self
            .c
            .iter()
            .chain(&self.b)
            .chain(self.a.iter().flatten())
            .all(|v| v.is_finite());
        if finite {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn objective_at(&self, x: &[f64]) -> f64 {
        self.c.iter().zip(x).map(|(c, x)| c * x).sum()
    }

    /// Largest amount by which `x` violates `A x <= b` or `x >= 0`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rows = self.a.iter().zip(&self.b).map(|(row, b)| {
            let lhs: f64 = row.iter().zip(x).map(|(a, x)| a * x).sum();
            lhs - b
        });
        rows.chain(x.iter().map(|v| -v)).fold(0.0, f64::max)
    }
}

/// Whitens every parameter of `p` with its own coefficient from `k`.
pub fn build_positioned(p: &GreyLP, k: &PositionCoefficients) -> Result<WhiteLP> {
    p.ensure_valid()?;
    k.check_shape(p)?;

    let c = p
        .objective
        .iter()
        .zip(&k.alphas)
        .map(|(iv, &t)| whiten_unchecked(*iv, t))
        .collect();
    let a = p
        .matrix
        .iter()
        .zip(&k.gammas)
        .map(|(row, gs)| row.iter().zip(gs).map(|(iv, &t)| whiten_unchecked(*iv, t)).collect())
        .collect();
    let b = p
        .rhs
        .iter()
        .zip(&k.betas)
        .map(|(iv, &t)| whiten_unchecked(*iv, t))
        .collect();

    Ok(WhiteLP { c, a, b })
}
