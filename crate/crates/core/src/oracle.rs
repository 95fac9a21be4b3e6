//! Brute-force vertex enumeration, used to cross-check the simplex solver.
//!
//! The feasible region `{x : A x <= b, x >= 0}` lives in the nonnegative
//! orthant, so it is pointed: when nonempty it has a vertex, and its recession
//! cone `{d >= 0 : A d <= 0}` is generated by its extreme rays. Both are found
//! by intersecting every choice of hyperplanes from the constraint rows and the
//! coordinate planes.

// Indexed loops read better for elimination.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::grey::WhiteLP;
use crate::simplex::{LpSolution, FEASIBILITY_TOL};

/// Largest variable count the oracle accepts.
pub const MAX_ORACLE_VARIABLES: usize = 4;

/// Hyperplane `h . x = rhs`.
struct Plane {
    normal: Vec<f64>,
    rhs: f64,
}

fn planes(lp: &WhiteLP) -> Vec<Plane> {
    let n = lp.n();
    let rows = lp.a.iter().zip(&lp.b).map(|(row, &b)| Plane {
        normal: row.clone(),
        rhs: b,
    });
    let axes = (0..n).map(|j| {
        let mut normal = vec![0.0; n];
        normal[j] = 1.0;
        Plane { normal, rhs: 0.0 }
    });
    rows.chain(axes).collect()
}

/// All `k`-element index subsets of `0..len`, in lexicographic order.
fn subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Gaussian elimination with partial pivoting; `None` when singular.
fn solve_square(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = rhs.len();
    let scale = m.iter().flatten().fold(0.0_f64, |acc, v| acc.max(v.abs())).max(1.0);
    for col in 0..n {
        let pivot = (col..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[pivot][col].abs() <= 1e-12 * scale {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in col + 1..n {
            let factor = m[r][col] / m[col][col];
            if factor != 0.0 {
                for c in col..n {
                    m[r][c] -= factor * m[col][c];
                }
                rhs[r] -= factor * rhs[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let tail: f64 = (r + 1..n).map(|c| m[r][c] * x[c]).sum();
        x[r] = (rhs[r] - tail) / m[r][r];
    }
    Some(x)
}

fn determinant(m: &[Vec<f64>]) -> f64 {
    match m.len() {
        0 => 1.0,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<f64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
                sign * m[0][c] * determinant(&minor)
            })
            .sum(),
    }
}

/// Generalised cross product: a vector orthogonal to the `n - 1` given rows.
fn null_direction(rows: &[&[f64]], n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let minor: Vec<Vec<f64>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != k)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * determinant(&minor)
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(a, b)| a * b).sum()
}

/// Finds an extreme ray of the recession cone that strictly improves `c`.
fn improving_ray(lp: &WhiteLP, all: &[Plane]) -> Option<Vec<f64>> {
    let n = lp.n();
    for choice in subsets(all.len(), n - 1) {
        let rows: Vec<&[f64]> = choice.iter().map(|&i| all[i].normal.as_slice()).collect();
        let d = null_direction(&rows, n);
        let norm = d.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
        if norm <= 1e-12 {
            continue;
        }
        for sign in [1.0, -1.0] {
            let d: Vec<f64> = d.iter().map(|v| sign * v / norm).collect();
            let nonneg = d.iter().all(|&v| v >= -1e-9);
            let recedes =
                lp.a.iter()
                    .all(|row| dot(row, &d) <= 1e-9 * row.iter().fold(1.0_f64, |acc, v| acc.max(v.abs())));
            if nonneg && recedes && dot(&lp.c, &d) > 1e-9 * lp.c.iter().fold(1.0_f64, |acc, v| acc.max(v.abs())) {
                return Some(d.iter().map(|v| v.max(0.0)).collect());
            }
        }
    }
    None
}

/// Solves a small LP by enumerating every vertex of its feasible region.
pub fn enumerate_vertices_oracle(lp: &WhiteLP) -> Result<LpSolution> {
    lp.check_shape()?;
    lp.check_finite()?;
    let n = lp.n();
    if n == 0 || n > MAX_ORACLE_VARIABLES {
        return Err(Error::Domain {
            name: "variable count",
            value: n as f64,
            range: "1..=4",
        });
    }

    let all = planes(lp);
    let scale = lp.b.iter().fold(1.0_f64, |acc, b| acc.max(b.abs()));
    let mut best: Option<(f64, Vec<f64>)> = None;
    for choice in subsets(all.len(), n) {
        let m = choice.iter().map(|&i| all[i].normal.clone()).collect();
        let rhs = choice.iter().map(|&i| all[i].rhs).collect();
        let Some(x) = solve_square(m, rhs) else {
            continue;
        };
        if lp.max_violation(&x) > FEASIBILITY_TOL * scale {
            continue;
        }
        let value = lp.objective_at(&x);
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, x));
        }
    }

    let Some((_, x)) = best else {
        return Ok(LpSolution::infeasible());
    };
    if let Some(ray) = improving_ray(lp, &all) {
        return Ok(LpSolution::unbounded(ray));
    }
    let x = x.into_iter().map(|v| v.max(0.0)).collect();
    Ok(LpSolution::optimal(lp, x))
}
