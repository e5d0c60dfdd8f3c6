//! Dense two-phase primal simplex with Bland's anti-cycling rule.
//!
//! Problems here are tiny (at most a few thousand tableau entries), and
//! bit-reproducibility of the acceptance suite matters more than speed, so a
//! full-tableau textbook method is the right tool. Constraints are
//! `G x <= h` over free or nonnegative variables; equalities are split by the
//! callers into two inequalities.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone)]
pub struct LPProblem {
    pub sense: Sense,
    /// Objective coefficients, one per variable.
    pub objective: Vec<f64>,
    /// Constraint rows `G`; each row has `objective.len()` entries.
    pub rows: Vec<Vec<f64>>,
    /// Right-hand sides `h` with `G x <= h`.
    pub rhs: Vec<f64>,
    /// When true the variables are constrained `x >= 0`; otherwise free.
    pub var_nonneg: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LPStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct LPResult {
    pub status: LPStatus,
    /// Objective value in the problem's own sense; meaningful for `Optimal`.
    pub optimum: f64,
    /// Optimal point (original variables); meaningful for `Optimal`.
    pub argument: Vec<f64>,
    pub iterations: usize,
}

const EPS: f64 = 1e-9;
const PIVOT_EPS: f64 = 1e-11;

impl LPProblem {
    fn validate(&self) -> Result<()> {
        let d = self.objective.len();
        if self.rows.len() != self.rhs.len() {
            return Err(Error::LengthMismatch);
        }
        for r in &self.rows {
            if r.len() != d {
                return Err(Error::LengthMismatch);
            }
            if r.iter().any(|v| !v.is_finite()) {
                return Err(Error::Invalid("non-finite constraint entry".into()));
            }
        }
        if self.objective.iter().any(|v| !v.is_finite())
            || self.rhs.iter().any(|v| !v.is_finite())
        {
            return Err(Error::Invalid("non-finite objective or rhs entry".into()));
        }
        Ok(())
    }
}

/// Solve an LP; `Unbounded`/`Infeasible` are reported in the result status,
/// `Err` is reserved for malformed input and pivot-limit breakdown.
pub fn lp_solve(p: &LPProblem) -> Result<LPResult> {
    p.validate()?;
    let d = p.objective.len();
    let m = p.rows.len();

    // Internal variables: either x (nonneg) or the split x = u - v.
    let nv = if p.var_nonneg { d } else { 2 * d };
    // Columns: structural + slack per row + artificial per negative-rhs row.
    let n_slack = m;
    let mut n_art = 0;
    let mut row_flip = vec![false; m];
    for i in 0..m {
        if p.rhs[i] < 0.0 {
            row_flip[i] = true;
            n_art += 1;
        }
    }
    let n = nv + n_slack + n_art;

    // Tableau: m constraint rows + 1 objective row; n columns + rhs.
    let width = n + 1;
    let mut t = vec![0.0; (m + 1) * width];
    let idx = |r: usize, c: usize| r * width + c;

    let structural = |row: &[f64], j: usize| -> f64 {
        if p.var_nonneg {
            row[j]
        } else if j < d {
            row[j]
        } else {
            -row[j - d]
        }
    };

    let mut basis = vec![0usize; m];
    let mut art_col = nv + n_slack;
    for i in 0..m {
        let sign = if row_flip[i] { -1.0 } else { 1.0 };
        for j in 0..nv {
            t[idx(i, j)] = sign * structural(&p.rows[i], j);
        }
        t[idx(i, nv + i)] = sign; // slack
        t[idx(i, n)] = sign * p.rhs[i];
        if row_flip[i] {
            t[idx(i, art_col)] = 1.0;
            basis[i] = art_col;
            art_col += 1;
        } else {
            basis[i] = nv + i;
        }
    }

    let max_iter = 50_000 + 50 * (m + n);
    let mut iterations = 0usize;

    // The objective row stores reduced costs c_j - z_j with the negated
    // objective value in the corner; entering columns have negative entries.

    // Phase 1: minimize the sum of artificials.
    if n_art > 0 {
        for j in 0..=n {
            t[idx(m, j)] = if (nv + n_slack..n).contains(&j) { 1.0 } else { 0.0 };
        }
        for i in 0..m {
            if basis[i] >= nv + n_slack {
                for j in 0..=n {
                    t[idx(m, j)] -= t[idx(i, j)];
                }
            }
        }
        run_simplex(&mut t, m, n, nv + n_slack, &mut basis, &mut iterations, max_iter)?;
        if -t[idx(m, n)] > 1e-7 {
            return Ok(LPResult {
                status: LPStatus::Infeasible,
                optimum: f64::NAN,
                argument: vec![],
                iterations,
            });
        }
        // Drive any remaining artificials out of the basis where possible.
        for i in 0..m {
            if basis[i] >= nv + n_slack {
                if let Some(j) = (0..nv + n_slack).find(|&j| t[idx(i, j)].abs() > 1e-8) {
                    pivot(&mut t, m, n, i, j);
                    basis[i] = j;
                }
                // otherwise the row is redundant; the artificial stays basic at 0
            }
        }
    }

    // Phase 2 objective: minimize c'.x (flip sign for Max).
    let obj_sign = match p.sense {
        Sense::Min => 1.0,
        Sense::Max => -1.0,
    };
    for j in 0..=n {
        t[idx(m, j)] = 0.0;
    }
    for j in 0..nv {
        t[idx(m, j)] = obj_sign * structural(&p.objective, j);
    }
    // Price out basic columns so reduced costs of the basis are zero.
    for i in 0..m {
        let bj = basis[i];
        let coef = t[idx(m, bj)];
        if coef != 0.0 {
            for j in 0..=n {
                t[idx(m, j)] -= coef * t[idx(i, j)];
            }
        }
    }

    let status = run_simplex(&mut t, m, n, nv + n_slack, &mut basis, &mut iterations, max_iter)?;
    if status == LPStatus::Unbounded {
        return Ok(LPResult {
            status,
            optimum: f64::NAN,
            argument: vec![],
            iterations,
        });
    }

    // Recover original variables.
    let mut xs = vec![0.0; nv];
    for i in 0..m {
        if basis[i] < nv {
            xs[basis[i]] = t[idx(i, n)];
        }
    }
    let argument: Vec<f64> = if p.var_nonneg {
        xs
    } else {
        (0..d).map(|j| xs[j] - xs[j + d]).collect()
    };
    let optimum: f64 = argument
        .iter()
        .zip(&p.objective)
        .map(|(x, c)| x * c)
        .sum();

    Ok(LPResult {
        status: LPStatus::Optimal,
        optimum,
        argument,
        iterations,
    })
}

/// Bland-rule simplex over the prepared tableau. Columns `>= forbid_from`
/// (artificials) may not enter.
fn run_simplex(
    t: &mut [f64],
    m: usize,
    n: usize,
    forbid_from: usize,
    basis: &mut [usize],
    iterations: &mut usize,
    max_iter: usize,
) -> Result<LPStatus> {
    let width = n + 1;
    let idx = |r: usize, c: usize| r * width + c;
    loop {
        // Bland: smallest column with negative reduced cost. The objective row
        // stores z_j - c_j negated such that a negative entry improves.
        let mut enter = None;
        for j in 0..n {
            if j >= forbid_from {
                continue;
            }
            if t[idx(m, j)] < -EPS {
                enter = Some(j);
                break;
            }
        }
        let Some(j) = enter else {
            return Ok(LPStatus::Optimal);
        };

        // Ratio test; Bland tie-break on the smallest basis variable index.
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            let a = t[idx(i, j)];
            if a > PIVOT_EPS {
                let ratio = t[idx(i, n)] / a;
                let better = match leave {
                    None => true,
                    Some(l) => {
                        ratio < best - PIVOT_EPS
                            || (ratio < best + PIVOT_EPS && basis[i] < basis[l])
                    }
                };
                if better {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(i) = leave else {
            return Ok(LPStatus::Unbounded);
        };

        pivot(t, m, n, i, j);
        basis[i] = j;

        *iterations += 1;
        if *iterations > max_iter {
            return Err(Error::NumericalBreakdown(*iterations));
        }
    }
}

fn pivot(t: &mut [f64], m: usize, n: usize, pr: usize, pc: usize) {
    let width = n + 1;
    let idx = |r: usize, c: usize| r * width + c;
    let pv = t[idx(pr, pc)];
    for j in 0..=n {
        t[idx(pr, j)] /= pv;
    }
    t[idx(pr, pc)] = 1.0;
    for r in 0..=m {
        if r == pr {
            continue;
        }
        let f = t[idx(r, pc)];
        if f != 0.0 {
            for j in 0..=n {
                t[idx(r, j)] -= f * t[idx(pr, j)];
            }
            t[idx(r, pc)] = 0.0;
        }
    }
}

/// Equality row helper: emits the two inequality rows for `row . x = rhs`.
pub fn equality_rows(row: Vec<f64>, rhs: f64) -> [(Vec<f64>, f64); 2] {
    let neg: Vec<f64> = row.iter().map(|v| -v).collect();
    [(row, rhs), (neg, -rhs)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_with_lower_bound() {
        // min x s.t. x >= 3  (as -x <= -3)
        let p = LPProblem {
            sense: Sense::Min,
            objective: vec![1.0],
            rows: vec![vec![-1.0]],
            rhs: vec![-3.0],
            var_nonneg: false,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Optimal);
        assert!((r.optimum - 3.0).abs() < 1e-9);
        assert!((r.argument[0] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn unbounded_above() {
        // max x s.t. x >= 0
        let p = LPProblem {
            sense: Sense::Max,
            objective: vec![1.0],
            rows: vec![vec![-1.0]],
            rhs: vec![0.0],
            var_nonneg: false,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Unbounded);
    }

    #[test]
    fn infeasible_pair() {
        // x <= -1 and x >= 1
        let p = LPProblem {
            sense: Sense::Min,
            objective: vec![0.0],
            rows: vec![vec![1.0], vec![-1.0]],
            rhs: vec![-1.0, -1.0],
            var_nonneg: false,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Infeasible);
    }

    #[test]
    fn two_variable_vertex() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0 -> (8/5, 6/5), value 14/5
        let p = LPProblem {
            sense: Sense::Max,
            objective: vec![1.0, 1.0],
            rows: vec![vec![1.0, 2.0], vec![3.0, 1.0]],
            rhs: vec![4.0, 6.0],
            var_nonneg: true,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Optimal);
        assert!((r.optimum - 14.0 / 5.0).abs() < 1e-9);
        assert!((r.argument[0] - 8.0 / 5.0).abs() < 1e-9);
        assert!((r.argument[1] - 6.0 / 5.0).abs() < 1e-9);
    }

    #[test]
    fn equality_via_rows() {
        // min x + y s.t. x + y = 2, x,y >= 0
        let [r1, r2] = equality_rows(vec![1.0, 1.0], 2.0);
        let p = LPProblem {
            sense: Sense::Min,
            objective: vec![1.0, 1.0],
            rows: vec![r1.0, r2.0],
            rhs: vec![r1.1, r2.1],
            var_nonneg: true,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Optimal);
        assert!((r.optimum - 2.0).abs() < 1e-9);
    }

    #[test]
    fn free_variable_equality() {
        // min 2x - y  s.t. x + y = 1, x - y <= 0, free vars -> x=0.? ...
        // x + y = 1, x <= y; optimum pushes x down; with free vars LP is
        // unbounded (x -> -inf, y -> +inf keeps both constraints, obj -> -inf).
        let [r1, r2] = equality_rows(vec![1.0, 1.0], 1.0);
        let p = LPProblem {
            sense: Sense::Min,
            objective: vec![2.0, -1.0],
            rows: vec![r1.0, r2.0, vec![1.0, -1.0]],
            rhs: vec![r1.1, r2.1, 0.0],
            var_nonneg: false,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Unbounded);
    }

    #[test]
    fn feasible_solution_satisfies_constraints() {
        let p = LPProblem {
            sense: Sense::Min,
            objective: vec![1.0, 2.0, -1.0],
            rows: vec![
                vec![-1.0, -1.0, 0.0],
                vec![0.0, 1.0, 1.0],
                vec![1.0, 0.0, 2.0],
            ],
            rhs: vec![-1.0, 3.0, 4.0],
            var_nonneg: false,
        };
        let r = lp_solve(&p).unwrap();
        assert_eq!(r.status, LPStatus::Optimal);
        for (row, h) in p.rows.iter().zip(&p.rhs) {
            let lhs: f64 = row.iter().zip(&r.argument).map(|(a, x)| a * x).sum();
            assert!(lhs <= h + 1e-9);
        }
    }
}
