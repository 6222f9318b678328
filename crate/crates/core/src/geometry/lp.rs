use num_traits::{Signed, Zero};

use super::{GeometryError, Rational};

/// Result of a feasibility query `{x >= 0 : A x = b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

/// Decides `{x >= 0 : A x = b}` exactly with a phase-one simplex.
///
/// One artificial variable per row; the sum of artificials is minimised with
/// Bland's rule (lowest-index entering column, ties in the ratio test broken
/// by lowest basic variable index), so the method terminates and is
/// deterministic for a fixed row and column order.
pub fn lp_feasible(a: &[Vec<Rational>], b: &[Rational], num_vars: usize) -> Result<LpOutcome, GeometryError> {
    if a.len() != b.len() {
        return Err(GeometryError::DimensionMismatch(format!(
            "{} constraint rows but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    if let Some((i, row)) = a.iter().enumerate().find(|(_, row)| row.len() != num_vars) {
        return Err(GeometryError::DimensionMismatch(format!(
            "row {i} has {} entries, expected {num_vars}",
            row.len()
        )));
    }
    let rows = a.len();
    let cols = num_vars + rows;

    // tableau rows: [A | I | b] with b made non-negative
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vec<Rational> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        t.extend((0..rows).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
        t.push(if flip { -rhs } else { rhs.clone() });
        tableau.push(t);
    }
    let mut basis: Vec<usize> = (num_vars..cols).collect();

    // reduced costs of the phase-one objective; last entry is -(objective)
    let mut cost = vec![Rational::zero(); cols + 1];
    for row in &tableau {
        for (j, c) in cost.iter_mut().enumerate() {
            if j < num_vars || j == cols {
                *c -= &row[j];
            }
        }
    }

    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[cols] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // the phase-one objective is bounded below by zero
        let (pivot_row, _) = leave.expect("phase-one simplex cannot be unbounded");
        pivot(&mut tableau, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    if !cost[cols].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    let mut x = vec![Rational::zero(); num_vars];
    for (i, &var) in basis.iter().enumerate() {
        if var < num_vars {
            x[var] = tableau[i][cols].clone();
        }
    }
    Ok(LpOutcome::Feasible(x))
}

fn pivot(tableau: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let inv = tableau[row][col].recip();
    for v in tableau[row].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tableau[row].clone();
    for (i, other) in tableau.iter_mut().enumerate() {
        if i == row || other[col].is_zero() {
            continue;
        }
        let factor = other[col].clone();
        for (v, p) in other.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    }
    if !cost[col].is_zero() {
        let factor = cost[col].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, ratio};

    #[test]
    fn single_variable() {
        assert_eq!(lp_feasible(&[vec![int(1)]], &[int(1)], 1).unwrap(), LpOutcome::Feasible(vec![int(1)]));
        assert_eq!(lp_feasible(&[vec![int(1)]], &[int(-1)], 1).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn symmetric_pair() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let out = lp_feasible(&a, &[int(1), int(0)], 2).unwrap();
        assert_eq!(out, LpOutcome::Feasible(vec![ratio(1, 2), ratio(1, 2)]));
    }

    #[test]
    fn redundant_and_degenerate_rows() {
        // duplicated row leaves an artificial basic at zero
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        let LpOutcome::Feasible(x) = lp_feasible(&a, &[int(2), int(4)], 2).unwrap() else { panic!() };
        assert_eq!(&x[0] + int(2) * &x[1], int(2));
        // inconsistent system
        assert_eq!(lp_feasible(&a, &[int(2), int(5)], 2).unwrap(), LpOutcome::Infeasible);
        // no constraints at all
        assert_eq!(lp_feasible(&[], &[], 3).unwrap(), LpOutcome::Feasible(vec![Rational::zero(); 3]));
    }

    #[test]
    fn dimension_errors() {
        assert!(lp_feasible(&[vec![int(1)]], &[], 1).is_err());
        assert!(lp_feasible(&[vec![int(1), int(2)]], &[int(1)], 1).is_err());
    }

    #[test]
    fn feasible_points_satisfy_system() {
        // small deterministic family with mixed signs
        for seed in 0..40i64 {
            let a: Vec<Vec<Rational>> =
                (0..3).map(|i| (0..5).map(|j| int((seed * 7 + i * 13 + j * 5) % 9 - 4)).collect()).collect();
            let b: Vec<Rational> = (0..3).map(|i| int((seed + i * 3) % 7 - 3)).collect();
            if let LpOutcome::Feasible(x) = lp_feasible(&a, &b, 5).unwrap() {
                assert!(x.iter().all(|v| !v.is_negative()));
                for (row, rhs) in a.iter().zip(&b) {
                    let lhs: Rational = row.iter().zip(&x).map(|(p, q)| p * q).sum();
                    assert_eq!(&lhs, rhs);
                }
            }
        }
    }
}
