//! Exact two-phase simplex over rationals.
//!
//! Sized for the weight-system feasibility problems (at most a dozen rows),
//! where the outcome is a yes/no certificate and floating point would leave
//! the strict-positivity question open. Bland's rule keeps pivoting finite.

use crate::exact::RatMat;
use crate::scalar::Rat;
use num::{Signed, Zero};

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Optimal { objective: Rat, solution: Vec<Rat> },
    Infeasible,
    Unbounded,
}

/// Minimize `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn solve_min(a: &RatMat, b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.rows;
    let n = a.cols;
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);

    // tableau with artificial variables: columns [x | artificial | rhs]
    let total = n + m;
    let mut t = RatMat::zeros(m, total + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        for j in 0..n {
            t[(i, j)] = if flip { -a[(i, j)].clone() } else { a[(i, j)].clone() };
        }
        t[(i, n + i)] = Rat::from_integer(1.into());
        t[(i, total)] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // phase 1: minimize the sum of artificials
    let phase1: Vec<Rat> = (0..total)
        .map(|j| {
            if j >= n {
                Rat::from_integer(1.into())
            } else {
                Rat::zero()
            }
        })
        .collect();
    if !simplex(&mut t, &mut basis, &phase1, total) {
        unreachable!("phase 1 is bounded below by 0");
    }
    let phase1_obj: Rat = basis
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= n)
        .map(|(i, _)| t[(i, total)].clone())
        .fold(Rat::zero(), |s, x| s + x);
    if !phase1_obj.is_zero() {
        return LpOutcome::Infeasible;
    }
    // pivot remaining artificials out of the basis where possible
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[(i, j)].is_zero()) {
                pivot(&mut t, &mut basis, i, j);
            }
            // else: the row is all zeros on structural columns (redundant equation)
        }
    }

    // phase 2
    let mut cost = vec![Rat::zero(); total];
    cost[..n].clone_from_slice(c);
    if !simplex(&mut t, &mut basis, &cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[(i, t.cols - 1)].clone();
        }
    }
    let objective = c
        .iter()
        .zip(&x)
        .map(|(ci, xi)| ci * xi)
        .fold(Rat::zero(), |s, v| s + v);
    LpOutcome::Optimal { objective, solution: x }
}

/// Run simplex to optimality with Bland's rule. Only columns `< enterable`
/// may enter the basis (phase 2 locks the artificials out). `cost` covers all
/// structural-plus-artificial columns. Returns false when unbounded.
fn simplex(t: &mut RatMat, basis: &mut [usize], cost: &[Rat], enterable: usize) -> bool {
    let m = t.rows;
    let rhs = t.cols - 1;
    loop {
        // reduced costs: c_j - c_B · B⁻¹A_j, read off the current tableau
        let mut entering = None;
        for j in 0..enterable {
            if basis.contains(&j) {
                continue;
            }
            let mut red = cost[j].clone();
            for i in 0..m {
                let cb = &cost[basis[i]];
                if !cb.is_zero() && !t[(i, j)].is_zero() {
                    red -= cb * &t[(i, j)];
                }
            }
            if red.is_negative() {
                entering = Some(j);
                break; // Bland: first improving column
            }
        }
        let Some(e) = entering else { return true };
        // ratio test
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[(i, e)].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = &t[(i, rhs)] / &t[(i, e)];
                        let best = &t[(l, rhs)] / &t[(l, e)];
                        cur < best || (cur == best && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else { return false };
        pivot(t, basis, l, e);
    }
}

fn pivot(t: &mut RatMat, basis: &mut [usize], row: usize, col: usize) {
    let inv = t[(row, col)].clone().recip();
    for j in 0..t.cols {
        let v = &t[(row, j)] * &inv;
        t[(row, j)] = v;
    }
    for i in 0..t.rows {
        if i != row && !t[(i, col)].is_zero() {
            let f = t[(i, col)].clone();
            for j in 0..t.cols {
                let v = &t[(i, j)] - &f * &t[(row, j)];
                t[(i, j)] = v;
            }
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn mat(rows: &[&[i64]]) -> RatMat {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn basic_feasible() {
        // min -x1 - x2  s.t. x1 + x2 + s = 2
        let a = mat(&[&[1, 1, 1]]);
        let b = vec![rat(2, 1)];
        let c = vec![rat(-1, 1), rat(-1, 1), rat(0, 1)];
        match solve_min(&a, &b, &c) {
            LpOutcome::Optimal { objective, .. } => assert_eq!(objective, rat(-2, 1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        // x1 = -1 with x1 ≥ 0
        let a = mat(&[&[1]]);
        let b = vec![rat(-1, 1)];
        let c = vec![rat(0, 1)];
        assert!(matches!(solve_min(&a, &b, &c), LpOutcome::Infeasible));
    }

    #[test]
    fn unbounded_detected() {
        // min -x1 s.t. x1 - x2 = 0
        let a = mat(&[&[1, -1]]);
        let b = vec![rat(0, 1)];
        let c = vec![rat(-1, 1), rat(0, 1)];
        assert!(matches!(solve_min(&a, &b, &c), LpOutcome::Unbounded));
    }

    #[test]
    fn degenerate_cycling_guard() {
        // a classic degenerate instance; Bland's rule must terminate
        let a = mat(&[&[1, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 0], &[0, 0, 1, 0, 0, 1]]);
        let b = vec![rat(0, 1), rat(0, 1), rat(1, 1)];
        let c = vec![rat(-3, 4), rat(150, 1), rat(-1, 50), rat(6, 1), rat(0, 1), rat(0, 1)];
        assert!(matches!(solve_min(&a, &b, &c), LpOutcome::Optimal { .. }));
    }
}
