//! Dense linear algebra over exact rationals.
//!
//! Everything here is plain Gaussian elimination on [`Rat`] entries; the
//! systems are small (at most a few hundred rows) and the payoff is exact
//! ranks, kernels and solution sets where the pipeline needs certificates
//! rather than approximations.

use crate::scalar::{rat_to_f64, Rat};
use num::{One, Signed, Zero};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| rat_to_f64(&self[(i, j)]))
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).fold(Rat::zero(), |a, x| a + x)
    }
}

impl std::ops::Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut RatMat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        // partial pivot: any nonzero will do over exact rationals, but pick
        // the largest magnitude to keep intermediate fractions tame
        let mut best: Option<usize> = None;
        for i in r..m.rows {
            if !m[(i, c)].is_zero() {
                let better = match best {
                    None => true,
                    Some(b) => m[(i, c)].abs() > m[(b, c)].abs(),
                };
                if better {
                    best = Some(i);
                }
            }
        }
        let Some(p) = best else { continue };
        if p != r {
            for j in 0..m.cols {
                let t = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = t;
            }
        }
        let inv = m[(r, c)].clone().recip();
        for j in c..m.cols {
            let v = &m[(r, j)] * &inv;
            m[(r, j)] = v;
        }
        for i in 0..m.rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMat) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of the right kernel.
pub fn nullspace(m: &RatMat) -> Vec<Vec<Rat>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); m.cols];
            v[fc] = Rat::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -w[(ri, fc)].clone();
            }
            v
        })
        .collect()
}

/// General solution of `A x = b`: `Some((particular, nullspace_basis))` when
/// consistent, `None` otherwise.
pub fn solve_general(a: &RatMat, b: &[Rat]) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    assert_eq!(a.rows, b.len());
    let mut aug = RatMat::zeros(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols)] = b[i].clone();
    }
    let pivots = rref(&mut aug);
    if pivots.contains(&a.cols) {
        return None; // pivot in the constant column: inconsistent
    }
    let mut part = vec![Rat::zero(); a.cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        part[pc] = aug[(ri, a.cols)].clone();
    }
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let null = free
        .iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); a.cols];
            v[fc] = Rat::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -aug[(ri, fc)].clone();
            }
            v
        })
        .collect();
    Some((part, null))
}

/// Exact inverse; `None` when singular.
pub fn inverse(m: &RatMat) -> Option<RatMat> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut aug = RatMat::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = Rat::one();
    }
    let pivots = rref(&mut aug);
    if pivots.len() != n {
        return None;
    }
    let mut inv = RatMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = aug[(i, n + j)].clone();
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(rows: &[&[i64]]) -> RatMat {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        for i in 0..3 {
            let dot = a
                .row(i)
                .iter()
                .zip(v)
                .map(|(x, y)| x * y)
                .fold(Rat::zero(), |s, t| s + t);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn general_solution_and_inverse() {
        let a = m(&[&[3, 1], &[1, 3]]);
        let (p, ns) = solve_general(&a, &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(p, vec![rat(1, 4), rat(1, 4)]);
        assert!(ns.is_empty());
        let inv = inverse(&a).unwrap();
        assert_eq!(inv.mul(&a), RatMat::identity(2));
        assert!(solve_general(&m(&[&[1, 1], &[1, 1]]), &[rat(0, 1), rat(1, 1)]).is_none());
        assert!(inverse(&m(&[&[1, 1], &[1, 1]])).is_none());
    }
}
