//! Exact simplex solver for small linear programs over the rationals.
//!
//! Maximizes c^T x subject to A x <= b and x >= 0, where every entry of b
//! is nonnegative, so the all-slack basis is feasible and no first phase is
//! needed. Pivoting follows Bland's smallest-index rule, which cannot cycle.

use crate::rat::Rational;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Optimal {
        objective: Rational,
        point: Vec<Rational>,
    },
    Unbounded,
}

pub(crate) fn maximize(
    objective: &[Rational],
    constraints: &[(Vec<Rational>, Rational)],
) -> LpOutcome {
    let n = objective.len();
    let m = constraints.len();
    let width = n + m + 1;
    // Rows 0..m hold the constraints with their slack columns; the last row
    // is the objective in the form z - c^T x = 0, so its right-hand entry
    // ends up holding the optimal value.
    let mut tableau = Vec::with_capacity(m + 1);
    for (i, (row, rhs)) in constraints.iter().enumerate() {
        assert_eq!(row.len(), n, "constraint width must match objective");
        assert!(!rhs.is_negative(), "slack basis needs nonnegative rhs");
        let mut t = vec![Rational::zero(); width];
        t[..n].clone_from_slice(row);
        t[n + i] = Rational::one();
        t[width - 1] = rhs.clone();
        tableau.push(t);
    }
    let mut zrow = vec![Rational::zero(); width];
    for (j, c) in objective.iter().enumerate() {
        zrow[j] = -c.clone();
    }
    tableau.push(zrow);
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| tableau[m][j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if !tableau[i][enter].is_positive() {
                continue;
            }
            let ratio = &tableau[i][width - 1] / &tableau[i][enter];
            let better = match &best {
                None => true,
                Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        let Some(leave) = leave else {
            return LpOutcome::Unbounded;
        };
        pivot(&mut tableau, leave, enter);
        basis[leave] = enter;
    }

    let mut point = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            point[b] = tableau[i][width - 1].clone();
        }
    }
    LpOutcome::Optimal {
        objective: tableau[m][width - 1].clone(),
        point,
    }
}

fn pivot(tableau: &mut [Vec<Rational>], row: usize, col: usize) {
    let width = tableau[row].len();
    let scale = tableau[row][col].clone();
    for entry in &mut tableau[row] {
        *entry = &*entry / &scale;
    }
    for r in 0..tableau.len() {
        if r == row {
            continue;
        }
        let factor = tableau[r][col].clone();
        if factor.is_zero() {
            continue;
        }
        for j in 0..width {
            let delta = &factor * &tableau[row][j];
            tableau[r][j] = &tableau[r][j] - delta;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| rat_int(n)).collect()
    }

    #[test]
    fn box_corner() {
        let out = maximize(
            &ints(&[1, 1]),
            &[(ints(&[1, 0]), rat_int(2)), (ints(&[0, 1]), rat_int(3))],
        );
        assert_eq!(
            out,
            LpOutcome::Optimal {
                objective: rat_int(5),
                point: ints(&[2, 3]),
            }
        );
    }

    #[test]
    fn chained_bound() {
        // x <= y <= 1, maximize x.
        let out = maximize(
            &ints(&[1, 0]),
            &[(ints(&[1, -1]), rat_int(0)), (ints(&[0, 1]), rat_int(1))],
        );
        assert_eq!(
            out,
            LpOutcome::Optimal {
                objective: rat_int(1),
                point: ints(&[1, 1]),
            }
        );
    }

    #[test]
    fn fractional_optimum() {
        let out = maximize(
            &ints(&[2, 3]),
            &[
                (ints(&[1, 1]), rat(3, 2)),
                (ints(&[1, 0]), rat_int(1)),
            ],
        );
        match out {
            LpOutcome::Optimal { objective, point } => {
                assert_eq!(objective, rat(9, 2));
                assert_eq!(point, vec![rat_int(0), rat(3, 2)]);
            }
            LpOutcome::Unbounded => panic!("bounded program"),
        }
    }

    #[test]
    fn unbounded_detected() {
        let out = maximize(&ints(&[1, 0]), &[(ints(&[0, 1]), rat_int(1))]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn beale_degenerate_terminates() {
        // Beale's cycling example; Bland's rule must still reach the optimum
        // 1/20 at (1/25, 0, 1, 0).
        let out = maximize(
            &[rat(3, 4), rat_int(-150), rat(1, 50), rat_int(-6)],
            &[
                (
                    vec![rat(1, 4), rat_int(-60), rat(-1, 25), rat_int(9)],
                    rat_int(0),
                ),
                (
                    vec![rat(1, 2), rat_int(-90), rat(-1, 50), rat_int(3)],
                    rat_int(0),
                ),
                (ints(&[0, 0, 1, 0]), rat_int(1)),
            ],
        );
        match out {
            LpOutcome::Optimal { objective, point } => {
                assert_eq!(objective, rat(1, 20));
                assert_eq!(point, vec![rat(1, 25), rat_int(0), rat_int(1), rat_int(0)]);
            }
            LpOutcome::Unbounded => panic!("bounded program"),
        }
    }

    #[test]
    fn zero_objective_is_immediate() {
        let out = maximize(&ints(&[0]), &[(ints(&[1]), rat_int(4))]);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                objective: rat_int(0),
                point: ints(&[0]),
            }
        );
    }
}
