//! Critical and ideal optimal values, the pleased degree and the
//! λ-satisfaction degree of a positioned optimal value.
//!
//! With `S_lo = f(0,0,1)` (critical) and `S_hi = f(1,1,0)` (ideal):
//!
//! ```text
//! pleased      mu      = 1/2 (1 - S_lo / f) + 1/2 f / S_hi
//! satisfaction mu~_lam = lam (f - S_lo) / (S_hi - S_lo)
//!                      + (1 - lam) (f - S_lo) / (S_hi - S_lo + (1 - lam)(S_hi - f))
//! ```
//!
//! The pleased degree never reaches 0 or 1; the λ-satisfaction degree is 0 at
//! the critical value and 1 at the ideal value for every λ.

use crate::error::{check_unit, Error, Result};
use crate::grey::{build_positioned, GreyLP, PositionCoefficients};
use crate::simplex::solve_max;

/// Relative tolerance for clamping `f` into `[critical, ideal]`.
pub const CLAMP_TOL: f64 = 1e-6;
/// Relative width below which the bounds are treated as coincident.
pub const DEGENERATE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueBounds {
    /// `f(0,0,1)`, the most pessimistic whitening.
    pub critical: f64,
    /// `f(1,1,0)`, the most optimistic whitening.
    pub ideal: f64,
}

impl ValueBounds {
    pub fn new(critical: f64, ideal: f64) -> Self {
        Self { critical, ideal }
    }

    /// `max(1, ideal)`; tolerances scale with it.
    pub fn scale(&self) -> f64 {
        self.ideal.abs().max(1.0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.ideal - self.critical <= DEGENERATE_TOL * self.scale()
    }

    /// Pulls `f` into `[critical, ideal]` when it is off by solver noise only.
    pub fn clamp(&self, f: f64) -> Result<f64> {
        let tol = CLAMP_TOL * self.scale();
        if !f.is_finite() || f < self.critical - tol || f > self.ideal + tol {
            return Err(Error::Inconsistent {
                f,
                critical: self.critical,
                ideal: self.ideal,
            });
        }
        Ok(f.max(self.critical).min(self.ideal.max(self.critical)))
    }
}

/// A user's evaluation settings for one positioned optimal value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeQuery {
    pub f: f64,
    pub lambda: f64,
    pub mu0: f64,
}

impl DegreeQuery {
    pub fn new(f: f64, lambda: f64, mu0: f64) -> Result<Self> {
        check_unit("lambda", lambda)?;
        check_unit("mu0", mu0)?;
        Ok(Self { f, lambda, mu0 })
    }
}

/// A λ-satisfaction degree together with the coincident-bounds flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SatisfactionDegree {
    pub value: f64,
    /// Set when `ideal - critical` vanishes: every whitening attains the ideal
    /// value and the degree is reported as 1.
    pub effectively_white: bool,
}

/// Optimal value of the positioned program `LP(k)`.
pub fn positioned_value(p: &GreyLP, k: &PositionCoefficients) -> Result<f64> {
    let lp = build_positioned(p, k)?;
    solve_max(&lp)?.value()
}

/// Optimal value of the uniform `(alpha, beta, gamma)`-positioned program.
pub fn uniform_value(p: &GreyLP, alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    let k = PositionCoefficients::uniform(alpha, beta, gamma, p.m(), p.n())?;
    positioned_value(p, &k)
}

/// Critical value `f(0,0,1)` and ideal value `f(1,1,0)`.
pub fn bounds(p: &GreyLP) -> Result<ValueBounds> {
    let critical = uniform_value(p, 0.0, 0.0, 1.0)?;
    let ideal = uniform_value(p, 1.0, 1.0, 0.0)?;
    Ok(ValueBounds { critical, ideal })
}

/// Pleased degree `1/2 (1 - S_lo / f) + 1/2 f / S_hi`.
///
/// When the critical value is 0 the first term is taken as its limit 1/2,
/// which also covers `f = 0`.
pub fn pleased_degree(f: f64, vb: ValueBounds) -> Result<f64> {
    if vb.ideal <= 0.0 {
        return Err(Error::DivisionDomain(format!(
            "ideal value {} is not positive",
            vb.ideal
        )));
    }
    let f = vb.clamp(f)?;
    let lower_term = if vb.critical == 0.0 {
        0.5
    } else if f <= 0.0 {
        return Err(Error::DivisionDomain(format!("optimal value {f} is not positive")));
    } else {
        0.5 * (1.0 - vb.critical / f)
    };
    Ok(lower_term + 0.5 * f / vb.ideal)
}

/// λ-satisfaction degree of `f`, in `[0, 1]`.
pub fn lambda_satisfaction(f: f64, vb: ValueBounds, lambda: f64) -> Result<SatisfactionDegree> {
    check_unit("lambda", lambda)?;
    let f = vb.clamp(f)?;
    if vb.is_degenerate() {
        return Ok(SatisfactionDegree {
            value: 1.0,
            effectively_white: true,
        });
    }
    let span = vb.ideal - vb.critical;
    let gain = f - vb.critical;
    let linear = gain / span;
    let damped = gain / (span + (1.0 - lambda) * (vb.ideal - f));
    let value = lambda * linear + (1.0 - lambda) * damped;
    Ok(SatisfactionDegree {
        value: value.clamp(0.0, 1.0),
        effectively_white: false,
    })
}

/// Evaluates both degrees and both grey-target tests for one query.
pub fn evaluate(query: DegreeQuery, vb: ValueBounds) -> Result<Evaluation> {
    let mu = pleased_degree(query.f, vb)?;
    let mu_tilde = lambda_satisfaction(query.f, vb, query.lambda)?;
    Ok(Evaluation {
        mu,
        mu_tilde,
        pleased: is_pleased(mu, query.mu0),
        satisfactory: is_lambda_satisfactory(mu_tilde.value, query.mu0),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub mu: f64,
    pub mu_tilde: SatisfactionDegree,
    pub pleased: bool,
    pub satisfactory: bool,
}

/// Whether a pleased degree lands in the grey target `[mu0, 1]`.
pub fn is_pleased(mu: f64, mu0: f64) -> bool {
    mu >= mu0
}

/// Whether a λ-satisfaction degree lands in the grey target `[mu0, 1]`.
pub fn is_lambda_satisfactory(mu_tilde: f64, mu0: f64) -> bool {
    mu_tilde >= mu0
}
