//! Ricci operator and moment map of the canonical inner product.
//!
//! With `⟨,⟩` the canonical inner product on ℝⁿ (Hermitian on ℂⁿ),
//!
//! ```text
//! ⟨Ric x, y⟩ = −½ Σᵢ ⟨[x,eᵢ],[y,eᵢ]⟩ + ¼ Σᵢⱼ ⟨[eᵢ,eⱼ],x⟩⟨[eᵢ,eⱼ],y⟩
//! ```
//!
//! and the moment map of the bracket is `m(μ) = 4·Ric`. For a bracket whose
//! support pairs each hit a single target, `m` is diagonal and equals
//! `2·Σ |c|²·(E_kk − E_ii − E_jj)` per structure constant; the factor 2 is
//! [`MOMENT_MASS_FACTOR`], shared with the diagonal soliton solver so the two
//! sides cannot drift apart.

use crate::algebra::{Field, NilpotentAlgebra, C64};
use crate::derivations::DerivationSpace;
use nalgebra::DMatrix;

/// The constant in `m(μ) = MOMENT_MASS_FACTOR · Σ |c_α|²·α` on nice bases.
pub const MOMENT_MASS_FACTOR: f64 = 2.0;

/// Default Frobenius tolerance for certifying a distinguished point.
pub const SOLITON_TOL: f64 = 1e-9;

/// Moment-map value `m(μ) = 4·Ric(μ)`; real symmetric for both fields.
#[derive(Clone, Debug)]
pub struct MomentMapValue {
    pub matrix: DMatrix<f64>,
}

/// Least-squares decomposition `m(μ) ≈ c·I + D` with `D ∈ span(Der)`.
#[derive(Clone, Debug)]
pub struct SolitonResidual {
    pub c: f64,
    pub derivation: DMatrix<C64>,
    /// Frobenius norm of `m − c·I − D`.
    pub residual: f64,
}

impl SolitonResidual {
    pub fn is_distinguished(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// Ricci operator of the metric algebra `(𝔫, ⟨,⟩)`.
pub fn ricci_operator(alg: &NilpotentAlgebra) -> DMatrix<f64> {
    let n = alg.dim();
    let t = alg.tensor();
    let at = |i: usize, j: usize, k: usize| t[(i * n + j) * n + k];
    let mut ric = DMatrix::<f64>::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            let mut s1 = 0.0;
            for i in 0..n {
                for k in 0..n {
                    // ⟨[e_a,e_i],[e_b,e_i]⟩ (Hermitian: conjugate the second slot)
                    s1 += (at(a, i, k) * at(b, i, k).conj()).re;
                }
            }
            let mut s2 = 0.0;
            for i in 0..n {
                for j in 0..n {
                    s2 += (at(i, j, a) * at(i, j, b).conj()).re;
                }
            }
            let v = -0.5 * s1 + 0.25 * s2;
            ric[(a, b)] = v;
            ric[(b, a)] = v;
        }
    }
    ric
}

/// `m(μ) = 4·Ric(μ)`.
pub fn moment_map(alg: &NilpotentAlgebra) -> MomentMapValue {
    MomentMapValue {
        matrix: ricci_operator(alg) * 4.0,
    }
}

/// `tr Ric`; equals `−½ Σ_(i<j) ‖[e_i,e_j]‖²`.
pub fn scalar_curvature(alg: &NilpotentAlgebra) -> f64 {
    ricci_operator(alg).trace()
}

/// Project `m(μ)` onto `span{I} ⊕ span(Der)` in the Frobenius inner product.
///
/// Degenerate spans (e.g. `I ∈ Der` on abelian algebras) go through the
/// pseudo-inverse, which picks the minimum-norm coefficients.
pub fn soliton_residual(alg: &NilpotentAlgebra, ders: &DerivationSpace) -> SolitonResidual {
    let n = alg.dim();
    let m = moment_map(alg).matrix;
    // real vectorization: [Re; Im] stacked, so complex spans project correctly
    let dim_v = 2 * n * n;
    let vec_of = |mat: &DMatrix<C64>| -> Vec<f64> {
        let mut v = Vec::with_capacity(dim_v);
        for i in 0..n {
            for j in 0..n {
                v.push(mat[(i, j)].re);
            }
        }
        for i in 0..n {
            for j in 0..n {
                v.push(mat[(i, j)].im);
            }
        }
        v
    };
    let eye = DMatrix::<C64>::identity(n, n);
    let mut columns: Vec<Vec<f64>> = vec![vec_of(&eye)];
    for d in &ders.basis {
        columns.push(vec_of(d));
        if alg.field() == Field::Complex {
            columns.push(vec_of(&d.map(|c| c * C64::new(0.0, 1.0))));
        }
    }
    let a = DMatrix::<f64>::from_fn(dim_v, columns.len(), |r, c| columns[c][r]);
    let target_mat = m.map(|x| C64::new(x, 0.0));
    let b = nalgebra::DVector::<f64>::from_vec(vec_of(&target_mat));
    let svd = a.clone().svd(true, true);
    let coeffs = svd.solve(&b, 1e-12).expect("svd solve");
    let c = coeffs[0];
    let mut derivation = DMatrix::<C64>::zeros(n, n);
    let mut idx = 1;
    for d in &ders.basis {
        derivation += d * C64::new(coeffs[idx], 0.0);
        idx += 1;
        if alg.field() == Field::Complex {
            derivation += d * C64::new(0.0, coeffs[idx]);
            idx += 1;
        }
    }
    let mut resid = target_mat - &eye * C64::new(c, 0.0) - &derivation;
    let residual = resid.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    resid.fill(C64::new(0.0, 0.0));
    SolitonResidual {
        c,
        derivation,
        residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Bracket, NilpotentAlgebra};
    use crate::derivations::derivation_algebra;
    use crate::scalar::RadicalScalar;

    fn heisenberg(c: &str) -> NilpotentAlgebra {
        NilpotentAlgebra::new(
            3,
            vec![Bracket { i: 0, j: 1, k: 2, coeff: c.parse().unwrap() }],
            Field::Real,
        )
        .unwrap()
    }

    #[test]
    fn abelian_is_flat() {
        let alg = NilpotentAlgebra::abelian(7);
        assert_eq!(ricci_operator(&alg), DMatrix::zeros(7, 7));
        assert_eq!(scalar_curvature(&alg), 0.0);
    }

    #[test]
    fn heisenberg_by_hand() {
        // [e1,e2] = c·e3 gives Ric = diag(−c²/2, −c²/2, c²/2)
        let alg = heisenberg("1/1");
        let ric = ricci_operator(&alg);
        let expect = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![-0.5, -0.5, 0.5]));
        assert!((ric - expect).norm() < 1e-14);
        assert!((scalar_curvature(&alg) + 0.5).abs() < 1e-14);
        let m = moment_map(&alg).matrix;
        let expect4 = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![-2.0, -2.0, 2.0]));
        assert!((m - expect4).norm() < 1e-14);
    }

    fn entry_17() -> NilpotentAlgebra {
        let c: RadicalScalar = "1/6*sqrt(6)".parse().unwrap();
        NilpotentAlgebra::new(
            7,
            vec![
                Bracket { i: 0, j: 1, k: 6, coeff: c.clone() },
                Bracket { i: 2, j: 3, k: 6, coeff: c.clone() },
                Bracket { i: 4, j: 5, k: 6, coeff: c },
            ],
            Field::Real,
        )
        .unwrap()
    }

    #[test]
    fn catalog_17_moment_map() {
        let m = moment_map(&entry_17()).matrix;
        let want = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            -1.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            1.0,
        ]));
        assert!((m - want).norm() < 1e-12);
        assert!((scalar_curvature(&entry_17()) + 0.25).abs() < 1e-14);
    }

    #[test]
    fn trace_identity() {
        let alg = entry_17();
        let lhs = scalar_curvature(&alg);
        let rhs: f64 = -0.5
            * alg
                .brackets()
                .iter()
                .map(|b| b.coeff.to_complex().norm_sqr())
                .sum::<f64>();
        assert!((lhs - rhs).abs() < 1e-14);
    }

    #[test]
    fn abelian_residual_zero() {
        let alg = NilpotentAlgebra::abelian(5);
        let ders = derivation_algebra(&alg);
        let sr = soliton_residual(&alg, &ders);
        assert!(sr.residual < 1e-12);
        assert!(sr.c.abs() < 1e-12);
        assert!(sr.derivation.norm() < 1e-12);
    }
}
