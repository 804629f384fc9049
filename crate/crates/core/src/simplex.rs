//! Dense exact-rational simplex for small LPs in the form
//! `max cᵀy  s.t.  Ay ≤ b, y ≥ 0` with `b ≥ 0`, so the slack basis is
//! feasible from the start. Bland's rule guarantees termination.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::rational::Rational;

pub struct SimplexSolution {
    pub value: Rational,
    #[allow(dead_code)]
    pub primal: Vec<Rational>,
    /// Dual value per constraint (nonnegative at optimality).
    pub duals: Vec<Rational>,
}

pub fn solve_max(
    c: &[Rational],
    a: &[Vec<Rational>],
    b: &[Rational],
) -> Result<SimplexSolution, Error> {
    let m = a.len();
    let n = c.len();
    debug_assert!(b.iter().all(|x| !x.is_negative()));
    let cols = n + m; // structural + slack
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        debug_assert_eq!(a[i].len(), n);
        let mut row: Vec<Rational> = Vec::with_capacity(cols + 1);
        row.extend(a[i].iter().cloned());
        for j in 0..m {
            row.push(if i == j { Rational::from_integer(1.into()) } else { Rational::zero() });
        }
        row.push(b[i].clone());
        tableau.push(row);
    }
    // Reduced-cost row; last cell holds the negated objective value.
    let mut obj: Vec<Rational> = Vec::with_capacity(cols + 1);
    obj.extend(c.iter().cloned());
    obj.extend(core::iter::repeat(Rational::zero()).take(m + 1));

    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering column = smallest index with positive reduced cost.
        let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) else {
            break;
        };
        // Ratio test; Bland tie-break on the smallest basic variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tableau[i][enter].is_positive() {
                let ratio = &tableau[i][cols] / &tableau[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::DomainError(alloc::format!(
                "unbounded LP (column {enter})"
            )));
        };

        // Pivot.
        let pivot = tableau[row][enter].clone();
        for cell in tableau[row].iter_mut() {
            *cell = &*cell / &pivot;
        }
        for i in 0..m {
            if i != row && !tableau[i][enter].is_zero() {
                let factor = tableau[i][enter].clone();
                for j in 0..=cols {
                    let delta = &factor * &tableau[row][j];
                    tableau[i][j] = &tableau[i][j] - &delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..=cols {
                let delta = &factor * &tableau[row][j];
                obj[j] = &obj[j] - &delta;
            }
        }
        basis[row] = enter;
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            primal[bj] = tableau[i][cols].clone();
        }
    }
    let value = -obj[cols].clone();
    let duals: Vec<Rational> = (0..m).map(|i| -obj[n + i].clone()).collect();
    Ok(SimplexSolution { value, primal, duals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn tiny_lp() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6 → optimum 14/5 at (8/5, 6/5).
        let c = alloc::vec![rat_int(1), rat_int(1)];
        let a = alloc::vec![
            alloc::vec![rat_int(1), rat_int(2)],
            alloc::vec![rat_int(3), rat_int(1)],
        ];
        let b = alloc::vec![rat_int(4), rat_int(6)];
        let s = solve_max(&c, &a, &b).unwrap();
        assert_eq!(s.value, rat(14, 5));
        assert_eq!(s.primal, alloc::vec![rat(8, 5), rat(6, 5)]);
        // Strong duality: bᵀw equals the optimum.
        let dual_value: Rational =
            s.duals.iter().zip(&b).map(|(w, bi)| w * bi).sum();
        assert_eq!(dual_value, s.value);
    }

    #[test]
    fn degenerate_lp_terminates() {
        // Redundant constraints exercising Bland's rule.
        let c = alloc::vec![rat_int(1)];
        let a = alloc::vec![
            alloc::vec![rat_int(1)],
            alloc::vec![rat_int(1)],
            alloc::vec![rat_int(2)],
        ];
        let b = alloc::vec![rat_int(1), rat_int(1), rat_int(2)];
        let s = solve_max(&c, &a, &b).unwrap();
        assert_eq!(s.value, rat_int(1));
    }
}
