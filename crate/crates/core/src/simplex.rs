//! Small dense two-phase simplex for standard-form problems
//! `min c'x  s.t.  A x = b, x >= 0`.
//!
//! Bland's rule on both phases keeps pivoting deterministic and cycle-free.
//! Sized for problems with few rows and possibly many columns; the tableau
//! is dense and reduced costs are recomputed per column from the basis costs.

use crate::error::{Error, Result};

const PIVOT_EPS: f64 = 1e-11;
const COST_EPS: f64 = 1e-9;
const FEAS_EPS: f64 = 1e-7;

#[derive(Debug, Clone)]
pub(crate) struct LpSolution {
    pub x: Vec<f64>,
    pub value: f64,
    /// One dual price per constraint row.
    pub dual: Vec<f64>,
}

#[derive(Debug, Clone)]
pub(crate) enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: usize,
    cols: usize, // structural + artificial
    structural: usize,
    t: Vec<Vec<f64>>, // rows x (cols + 1), rhs last
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.t[i][self.cols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let scale = self.t[row][col];
        for v in self.t[row].iter_mut() {
            *v /= scale;
        }
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let factor = self.t[i][col];
            if factor == 0.0 {
                continue;
            }
            let pivot_row = self.t[row].clone();
            for (v, p) in self.t[i].iter_mut().zip(pivot_row.iter()) {
                *v -= factor * p;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule iteration until optimality for the given costs over the
    /// allowed columns. Returns false on unboundedness.
    fn optimize(&mut self, cost: &[f64], allowed: usize, max_pivots: usize) -> Result<bool> {
        for _ in 0..max_pivots {
            let basis_cost: Vec<f64> = self.basis.iter().map(|&j| cost[j]).collect();
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j];
                for i in 0..self.rows {
                    reduced -= basis_cost[i] * self.t[i][j];
                }
                if reduced < -COST_EPS {
                    entering = Some(j);
                    break; // smallest improving index
                }
            }
            let Some(col) = entering else {
                return Ok(true);
            };
            let mut leaving: Option<(usize, f64)> = None;
            for i in 0..self.rows {
                let coef = self.t[i][col];
                if coef > PIVOT_EPS {
                    let ratio = self.rhs(i) / coef;
                    let better = match leaving {
                        None => true,
                        Some((best_row, best)) => {
                            ratio < best - PIVOT_EPS
                                || (ratio <= best + PIVOT_EPS
                                    && self.basis[i] < self.basis[best_row])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return Ok(false);
            };
            self.pivot(row, col);
        }
        Err(Error::NoConvergence(format!(
            "simplex exceeded {max_pivots} pivots"
        )))
    }
}

/// Solves `min c'x  s.t.  A x = b, x >= 0`, returning the optimum with dual
/// prices, or infeasibility/unboundedness.
pub(crate) fn solve_standard(
    c: &[f64],
    a: &[Vec<f64>],
    b: &[f64],
    max_pivots: usize,
) -> Result<LpOutcome> {
    let rows = a.len();
    let structural = c.len();
    let cols = structural + rows;
    let mut t = vec![vec![0.0; cols + 1]; rows];
    for i in 0..rows {
        debug_assert_eq!(a[i].len(), structural);
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..structural {
            t[i][j] = flip * a[i][j];
        }
        t[i][structural + i] = 1.0;
        t[i][cols] = flip * b[i];
    }
    let mut tab = Tableau { rows, cols, structural, t, basis: (structural..cols).collect() };

    // phase 1: drive the artificials to zero
    let mut phase1_cost = vec![0.0; cols];
    for j in structural..cols {
        phase1_cost[j] = 1.0;
    }
    if !tab.optimize(&phase1_cost, cols, max_pivots)? {
        return Err(Error::Inconsistency("phase-1 objective is bounded below".into()));
    }
    let infeas: f64 = (0..rows)
        .filter(|&i| tab.basis[i] >= structural)
        .map(|i| tab.rhs(i))
        .sum();
    if infeas > FEAS_EPS {
        return Ok(LpOutcome::Infeasible);
    }
    // pivot lingering artificials out where possible
    for i in 0..rows {
        if tab.basis[i] >= structural {
            if let Some(j) = (0..structural)
                .find(|&j| !tab.basis.contains(&j) && tab.t[i][j].abs() > PIVOT_EPS)
            {
                tab.pivot(i, j);
            }
        }
    }

    // phase 2 over structural columns only
    let mut phase2_cost = vec![0.0; cols];
    phase2_cost[..structural].copy_from_slice(c);
    if !tab.optimize(&phase2_cost, structural, max_pivots)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut x = vec![0.0; structural];
    for i in 0..rows {
        if tab.basis[i] < structural {
            x[tab.basis[i]] = tab.rhs(i);
        }
    }
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();

    // dual prices: solve B' y = c_B with the original basis columns
    // (an artificial basis column is the i-th unit vector with cost zero)
    let mut bt = vec![vec![0.0; rows + 1]; rows];
    for (i, &j) in tab.basis.iter().enumerate() {
        for r in 0..rows {
            // transpose: row i of B' is the basis column j of A
            bt[i][r] = if j < structural {
                let flip = if b[r] < 0.0 { -1.0 } else { 1.0 };
                flip * a[r][j]
            } else if j - structural == r {
                1.0
            } else {
                0.0
            };
        }
        bt[i][rows] = phase2_cost[j];
    }
    let mut dual = gaussian_solve(&mut bt)
        .ok_or_else(|| Error::Inconsistency("singular basis while extracting duals".into()))?;
    // undo the row sign flips applied for nonnegative rhs
    for (r, d) in dual.iter_mut().enumerate() {
        if b[r] < 0.0 {
            *d = -*d;
        }
    }
    Ok(LpOutcome::Optimal(LpSolution { x, value, dual }))
}

/// Gaussian elimination with partial pivoting on an augmented square system.
fn gaussian_solve(aug: &mut [Vec<f64>]) -> Option<Vec<f64>> {
    let n = aug.len();
    for col in 0..n {
        let pivot_row = (col..n).max_by(|&i, &j| {
            aug[i][col].abs().partial_cmp(&aug[j][col].abs()).unwrap()
        })?;
        if aug[pivot_row][col].abs() < 1e-12 {
            return None;
        }
        aug.swap(col, pivot_row);
        for i in 0..n {
            if i == col {
                continue;
            }
            let factor = aug[i][col] / aug[col][col];
            if factor == 0.0 {
                continue;
            }
            let pivot = aug[col].clone();
            for (v, p) in aug[i].iter_mut().zip(pivot.iter()) {
                *v -= factor * p;
            }
        }
    }
    Some((0..n).map(|i| aug[i][n] / aug[i][i]).collect())
}
