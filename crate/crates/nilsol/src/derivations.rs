//! Derivation algebras: the kernel of `D ↦ D[·,·] − [D·,·] − [·,D·]`.

use crate::algebra::{complex_rank, Field, NilpotentAlgebra, C64, RANK_TOL};
use crate::exact::{self, RatMat};
use crate::scalar::Rat;
use nalgebra::DMatrix;
use num::Zero;

/// Basis of `Der(𝔫)`, numeric plus an exact rational copy when available.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub dimension: usize,
    pub basis: Vec<DMatrix<C64>>,
    /// Exact rational basis (same span) when the constants are rational.
    pub exact: Option<Vec<RatMat>>,
    pub field: Field,
}

impl DerivationSpace {
    /// Max Leibniz residual over the basis, for sanity reporting.
    pub fn worst_leibniz_residual(&self, alg: &NilpotentAlgebra) -> f64 {
        self.basis
            .iter()
            .map(|d| leibniz_residual(alg, d))
            .fold(0.0, f64::max)
    }
}

/// `max_(i<j) ‖D[e_i,e_j] − [De_i,e_j] − [e_i,De_j]‖∞`.
pub fn leibniz_residual(alg: &NilpotentAlgebra, d: &DMatrix<C64>) -> f64 {
    let n = alg.dim();
    let t = alg.tensor();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            for m in 0..n {
                let mut acc = C64::zero();
                for k in 0..n {
                    acc += t[(i * n + j) * n + k] * d[(m, k)];
                }
                for a in 0..n {
                    acc -= d[(a, i)] * t[(a * n + j) * n + m];
                    acc -= d[(a, j)] * t[(i * n + a) * n + m];
                }
                worst = worst.max(acc.norm());
            }
        }
    }
    worst
}

/// Rows of the Leibniz constraint operator on `n²` unknowns `D_{m,k}`.
fn constraint_rows_complex(alg: &NilpotentAlgebra) -> DMatrix<C64> {
    let n = alg.dim();
    let t = alg.tensor();
    let mut rows: Vec<Vec<C64>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for m in 0..n {
                let mut row = vec![C64::zero(); n * n];
                for k in 0..n {
                    row[m * n + k] += t[(i * n + j) * n + k];
                }
                for a in 0..n {
                    row[a * n + i] -= t[(a * n + j) * n + m];
                    row[a * n + j] -= t[(i * n + a) * n + m];
                }
                rows.push(row);
            }
        }
    }
    DMatrix::from_fn(rows.len(), n * n, |r, c| rows[r][c])
}

fn constraint_rows_rat(alg: &NilpotentAlgebra) -> Option<RatMat> {
    let n = alg.dim();
    let t = alg.tensor_rat()?;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for m in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                for k in 0..n {
                    row[m * n + k] += t[(i * n + j) * n + k].clone();
                }
                for a in 0..n {
                    row[a * n + i] -= t[(a * n + j) * n + m].clone();
                    row[a * n + j] -= t[(i * n + a) * n + m].clone();
                }
                rows.push(row);
            }
        }
    }
    Some(RatMat::from_rows(rows))
}

/// Compute `Der(𝔫)`: exact kernel over ℚ when the constants are rational,
/// SVD kernel otherwise (threshold [`RANK_TOL`] relative).
pub fn derivation_algebra(alg: &NilpotentAlgebra) -> DerivationSpace {
    let n = alg.dim();
    if alg.field() == Field::Real && alg.is_rational() {
        let a = constraint_rows_rat(alg).expect("rational tensor");
        let kernel = exact::nullspace(&a);
        let basis: Vec<DMatrix<C64>> = kernel
            .iter()
            .map(|v| {
                DMatrix::from_fn(n, n, |m, k| {
                    C64::new(crate::scalar::rat_to_f64(&v[m * n + k]), 0.0)
                })
            })
            .collect();
        let exact_basis = kernel
            .into_iter()
            .map(|v| {
                let mut m = RatMat::zeros(n, n);
                for r in 0..n {
                    for c in 0..n {
                        m[(r, c)] = v[r * n + c].clone();
                    }
                }
                m
            })
            .collect();
        return DerivationSpace {
            dimension: basis.len(),
            basis,
            exact: Some(exact_basis),
            field: alg.field(),
        };
    }
    let a = constraint_rows_complex(alg);
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.expect("svd with v_t");
    let rank = {
        let max = svd.singular_values.max();
        if max <= 0.0 {
            0
        } else {
            svd.singular_values
                .iter()
                .filter(|&&s| s > RANK_TOL * max)
                .count()
        }
    };
    let mut basis = Vec::new();
    for r in rank..v_t.nrows() {
        let row = v_t.row(r);
        basis.push(DMatrix::from_fn(n, n, |m, k| row[m * n + k].conj()));
    }
    // real algebras have real kernels; strip the numeric imaginary dust so
    // downstream projections stay real
    if alg.field() == Field::Real {
        let real_basis = realify(&basis, n);
        return DerivationSpace {
            dimension: real_basis.len(),
            basis: real_basis,
            exact: None,
            field: alg.field(),
        };
    }
    DerivationSpace {
        dimension: basis.len(),
        basis,
        exact: None,
        field: alg.field(),
    }
}

/// Re-extract a real orthonormal basis from complex kernel vectors of a real
/// operator (the span is closed under conjugation).
fn realify(basis: &[DMatrix<C64>], n: usize) -> Vec<DMatrix<C64>> {
    let mut cols: Vec<f64> = Vec::new();
    let mut count = 0;
    for b in basis {
        for part in [b.map(|c| c.re), b.map(|c| c.im)] {
            if part.norm() > 1e-12 {
                cols.extend(part.iter());
                count += 1;
            }
        }
    }
    if count == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_vec(n * n, count, cols);
    let svd = m.clone().svd(true, false);
    let max = svd.singular_values.max();
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOL * max)
        .count();
    let u = svd.u.expect("svd with u");
    (0..rank)
        .map(|c| DMatrix::from_fn(n, n, |i, j| C64::new(u[(i * n + j, c)], 0.0)))
        .collect()
}

/// Complex dimension of `Der` for complex algebras, real dimension otherwise.
pub fn derivation_dimension(alg: &NilpotentAlgebra) -> usize {
    if alg.field() == Field::Real && alg.is_rational() {
        let a = constraint_rows_rat(alg).expect("rational tensor");
        return alg.dim() * alg.dim() - exact::rank(&a);
    }
    let a = constraint_rows_complex(alg);
    alg.dim() * alg.dim() - complex_rank(&a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Bracket, NilpotentAlgebra};
    use crate::scalar::RadicalScalar;

    #[test]
    fn abelian_has_full_gl() {
        let alg = NilpotentAlgebra::abelian(7);
        let ders = derivation_algebra(&alg);
        assert_eq!(ders.dimension, 49);
        assert!(ders.exact.is_some());
        assert!(ders.worst_leibniz_residual(&alg) < 1e-10);
    }

    #[test]
    fn heisenberg_exact_and_numeric_agree() {
        let exact_alg = NilpotentAlgebra::new(
            3,
            vec![Bracket { i: 0, j: 1, k: 2, coeff: RadicalScalar::one() }],
            crate::algebra::Field::Real,
        )
        .unwrap();
        let radical_alg = NilpotentAlgebra::new(
            3,
            vec![Bracket { i: 0, j: 1, k: 2, coeff: "1/2*sqrt(2)".parse().unwrap() }],
            crate::algebra::Field::Real,
        )
        .unwrap();
        let d1 = derivation_algebra(&exact_alg);
        let d2 = derivation_algebra(&radical_alg);
        assert_eq!(d1.dimension, 6);
        assert_eq!(d2.dimension, 6);
        assert!(d1.exact.is_some());
        assert!(d2.exact.is_none());
        assert!(d2.worst_leibniz_residual(&radical_alg) < 1e-10);
    }
}
