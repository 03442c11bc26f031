//! Nilpotent Lie algebras presented by structure constants.
//!
//! An algebra is a dimension, a field marker and a sparse list of brackets
//! `[e_i, e_j] = Σ c·e_k` stored only for `i < j`. Coefficients are
//! [`RadicalScalar`]s; numerically produced algebras store their doubles as
//! exact dyadic rationals and drop the `exact` flag, so every downstream
//! computation sees one representation.

use crate::exact::{self, RatMat};
use crate::scalar::{rat_from_f64, rat_to_f64, Radical, RadicalScalar, RadicalSum, Rat};
use nalgebra::{Complex, DMatrix};
use num::Zero;

/// Relative singular-value cutoff for all numeric rank decisions.
pub const RANK_TOL: f64 = 1e-9;

/// Tolerance for double-precision Jacobi residuals.
pub const JACOBI_TOL: f64 = 1e-12;

pub type C64 = Complex<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Field {
    Real,
    Complex,
}

/// One structure constant: `[e_i, e_j] ∋ coeff·e_k`, indices 0-based, `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: RadicalScalar,
}

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("bracket index out of range: [e_{i}, e_{j}] -> e_{k} in dimension {dim}")]
    IndexRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("bracket indices must satisfy i < j, got [e_{i}, e_{j}]")]
    NotOrdered { i: usize, j: usize },
    #[error("duplicate bracket key [e_{i}, e_{j}] -> e_{k}")]
    Duplicate { i: usize, j: usize, k: usize },
    #[error("dimension must be at least 1")]
    ZeroDim,
    #[error("singular basis change")]
    Singular,
    #[error("complex coefficients require the complex field marker")]
    FieldMismatch,
}

#[derive(Clone, Debug)]
pub struct NilpotentAlgebra {
    dim: usize,
    brackets: Vec<Bracket>,
    field: Field,
    exact: bool,
}

impl NilpotentAlgebra {
    /// Build and canonicalize (sort, reject malformed indices and duplicates).
    pub fn new(dim: usize, mut brackets: Vec<Bracket>, field: Field) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDim);
        }
        brackets.retain(|b| !b.coeff.is_zero());
        for b in &brackets {
            if b.i >= b.j {
                return Err(AlgebraError::NotOrdered { i: b.i + 1, j: b.j + 1 });
            }
            if b.j >= dim || b.k >= dim {
                return Err(AlgebraError::IndexRange {
                    i: b.i + 1,
                    j: b.j + 1,
                    k: b.k + 1,
                    dim,
                });
            }
            if field == Field::Real && !b.coeff.is_real() {
                return Err(AlgebraError::FieldMismatch);
            }
        }
        brackets.sort_by_key(|b| (b.i, b.j, b.k));
        for w in brackets.windows(2) {
            if (w[0].i, w[0].j, w[0].k) == (w[1].i, w[1].j, w[1].k) {
                return Err(AlgebraError::Duplicate {
                    i: w[0].i + 1,
                    j: w[0].j + 1,
                    k: w[0].k + 1,
                });
            }
        }
        Ok(NilpotentAlgebra {
            dim,
            brackets,
            field,
            exact: true,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        NilpotentAlgebra::new(dim, Vec::new(), Field::Real).expect("abelian")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Whether all coefficients arose from closed radical forms (as opposed
    /// to re-encoded doubles from a numeric path).
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub(crate) fn mark_inexact(mut self) -> Self {
        self.exact = false;
        self
    }

    pub fn is_zero_bracket(&self) -> bool {
        self.brackets.is_empty()
    }

    /// All coefficients plain rationals (radicand 1, real)?
    pub fn is_rational(&self) -> bool {
        self.brackets
            .iter()
            .all(|b| b.coeff.is_real() && b.coeff.re.is_rational())
    }

    /// Dense structure tensor `t[i][j][k] = ⟨[e_i,e_j], e_k⟩` over ℂ.
    pub fn tensor(&self) -> Vec<C64> {
        let n = self.dim;
        let mut t = vec![C64::zero(); n * n * n];
        for b in &self.brackets {
            let c = b.coeff.to_complex();
            t[(b.i * n + b.j) * n + b.k] += c;
            t[(b.j * n + b.i) * n + b.k] -= c;
        }
        t
    }

    /// Exact rational structure tensor, when [`is_rational`](Self::is_rational).
    pub fn tensor_rat(&self) -> Option<Vec<Rat>> {
        if !self.is_rational() {
            return None;
        }
        let n = self.dim;
        let mut t = vec![Rat::zero(); n * n * n];
        for b in &self.brackets {
            let c = b.coeff.re.as_rat().unwrap().clone();
            t[(b.i * n + b.j) * n + b.k] += c.clone();
            t[(b.j * n + b.i) * n + b.k] -= c;
        }
        Some(t)
    }

    /// Signed coefficient lookup: `⟨[e_a, e_b], e_k⟩` for any order of `a, b`.
    pub fn coeff(&self, a: usize, b: usize, k: usize) -> RadicalScalar {
        let (i, j, neg) = if a < b { (a, b, false) } else { (b, a, true) };
        if a == b {
            return RadicalScalar::zero();
        }
        for br in &self.brackets {
            if (br.i, br.j, br.k) == (i, j, k) {
                return if neg { br.coeff.neg() } else { br.coeff.clone() };
            }
        }
        RadicalScalar::zero()
    }

    /// Flip the field marker to ℂ, keeping the constants.
    pub fn complexify(&self) -> NilpotentAlgebra {
        let mut out = self.clone();
        out.field = Field::Complex;
        out
    }

    /// Frobenius norm of the bracket as a vector of structure constants.
    pub fn norm(&self) -> f64 {
        self.brackets
            .iter()
            .map(|b| b.coeff.to_complex().norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Scale every coefficient by a real radical (`λ·μ`).
    pub fn scale(&self, lambda: &Radical) -> NilpotentAlgebra {
        let mut out = self.clone();
        for b in &mut out.brackets {
            b.coeff = b.coeff.scale(lambda);
        }
        out.brackets.retain(|b| !b.coeff.is_zero());
        out
    }
}

// ---------------------------------------------------------------------------
// linear maps
// ---------------------------------------------------------------------------

/// Square matrix with [`RadicalScalar`] entries; doubles are carried as exact
/// dyadic rationals so one type serves exact and numeric paths.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    n: usize,
    entries: Vec<RadicalScalar>,
}

impl LinearMap {
    pub fn identity(n: usize) -> Self {
        let mut m = LinearMap::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = RadicalScalar::one();
        }
        m
    }

    pub fn zeros(n: usize) -> Self {
        LinearMap {
            n,
            entries: vec![RadicalScalar::zero(); n * n],
        }
    }

    pub fn diagonal(diag: Vec<RadicalScalar>) -> Self {
        let n = diag.len();
        let mut m = LinearMap::zeros(n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn from_entries(n: usize, entries: Vec<RadicalScalar>) -> Self {
        assert_eq!(entries.len(), n * n);
        LinearMap { n, entries }
    }

    pub fn from_f64(m: &DMatrix<f64>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        LinearMap {
            n: m.nrows(),
            entries: (0..m.nrows())
                .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
                .map(|(i, j)| RadicalScalar::from_f64(m[(i, j)]))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &RadicalScalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RadicalScalar) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entries[i * self.n + j].is_zero()))
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_real)
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(|e| e.is_real() && e.re.is_rational())
    }

    pub fn to_complex(&self) -> DMatrix<C64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.entries[i * self.n + j].to_complex())
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.entries[i * self.n + j].to_complex().re)
    }

    pub fn to_ratmat(&self) -> Option<RatMat> {
        if !self.is_rational() {
            return None;
        }
        let mut m = RatMat::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m[(i, j)] = self.entries[i * self.n + j].re.as_rat().unwrap().clone();
            }
        }
        Some(m)
    }

    /// Basis permutation matrix: `e_i ↦ e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = LinearMap::zeros(n);
        for (i, &p) in perm.iter().enumerate() {
            m.entries[p * n + i] = RadicalScalar::one();
        }
        m
    }

    pub fn mul(&self, other: &LinearMap) -> LinearMap {
        // numeric product; exact products are only needed for diagonal maps
        let a = self.to_complex();
        let b = other.to_complex();
        LinearMap::from_complex(&(a * b))
    }

    pub fn from_complex(m: &DMatrix<C64>) -> Self {
        LinearMap {
            n: m.nrows(),
            entries: (0..m.nrows())
                .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
                .map(|(i, j)| {
                    RadicalScalar::new(
                        Radical::from_rat(rat_from_f64(m[(i, j)].re)),
                        Radical::from_rat(rat_from_f64(m[(i, j)].im)),
                    )
                })
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

/// Outcome of [`validate`]: Jacobi residual plus nilpotency class.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ValidationReport {
    /// Max |Jacobi| over all triples, in double evaluation (0.0 when the
    /// exact accumulator cancelled identically).
    pub jacobi_residual: f64,
    /// Whether the Jacobi identity cancelled exactly in radical arithmetic.
    pub jacobi_exact: bool,
    /// Steps of the lower central series until 0; `None` when it stalls.
    pub nilpotency_class: Option<usize>,
    pub passes: bool,
}

/// Check the Jacobi identity and nilpotency.
///
/// Jacobi is accumulated exactly per radicand, so for closed-form constants
/// the verdict is exact; the reported residual is the double evaluation of
/// whatever failed to cancel.
pub fn validate(alg: &NilpotentAlgebra) -> ValidationReport {
    let n = alg.dim;
    let mut worst = 0.0f64;
    let mut exact_zero = true;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for m in 0..n {
                    let mut acc = RadicalSum::new();
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [[e_x, e_y], e_z] = Σ_l c(x,y,l)·c(l,z,·)
                        for l in 0..n {
                            let c1 = alg.coeff(x, y, l);
                            if c1.is_zero() {
                                continue;
                            }
                            let c2 = alg.coeff(l, z, m);
                            if !c2.is_zero() {
                                acc.add_product(&c1, &c2);
                            }
                        }
                    }
                    if !acc.is_zero() {
                        exact_zero = false;
                        worst = worst.max(acc.to_complex().norm());
                    }
                }
            }
        }
    }
    let class = nilpotency_class(alg);
    ValidationReport {
        jacobi_residual: worst,
        jacobi_exact: exact_zero,
        nilpotency_class: class,
        passes: worst <= JACOBI_TOL && class.is_some(),
    }
}

/// Length of the lower central series, or `None` if it never reaches zero.
pub fn nilpotency_class(alg: &NilpotentAlgebra) -> Option<usize> {
    let n = alg.dim;
    if let Some(t) = alg.tensor_rat() {
        // exact path
        let mut current: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut v = vec![Rat::zero(); n];
                v[i] = num::One::one();
                v
            })
            .collect();
        for class in 1..=n + 1 {
            if current.is_empty() {
                return Some(class - 1);
            }
            let mut next = Vec::new();
            for x in 0..n {
                for v in &current {
                    let mut w = vec![Rat::zero(); n];
                    for (j, vj) in v.iter().enumerate() {
                        if vj.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            let c = &t[(x * n + j) * n + k];
                            if !c.is_zero() {
                                w[k] += c * vj;
                            }
                        }
                    }
                    if w.iter().any(|x| !x.is_zero()) {
                        next.push(w);
                    }
                }
            }
            let dim_next = if next.is_empty() {
                0
            } else {
                exact::rank(&RatMat::from_rows(next.clone()))
            };
            let dim_cur = exact::rank(&RatMat::from_rows(current.clone()));
            if dim_next >= dim_cur {
                return None; // series stalled: not nilpotent
            }
            if dim_next == 0 {
                return Some(class);
            }
            current = next;
        }
        None
    } else {
        let t = alg.tensor();
        let mut current = DMatrix::<C64>::identity(n, n);
        let mut dim_cur = n;
        for class in 1..=n + 1 {
            let mut cols: Vec<DMatrix<C64>> = Vec::new();
            for x in 0..n {
                for c in 0..current.ncols() {
                    let mut w = DMatrix::<C64>::zeros(n, 1);
                    for j in 0..n {
                        let vj = current[(j, c)];
                        if vj.norm() < 1e-300 {
                            continue;
                        }
                        for k in 0..n {
                            w[(k, 0)] += t[(x * n + j) * n + k] * vj;
                        }
                    }
                    cols.push(w);
                }
            }
            let stacked = if cols.is_empty() {
                DMatrix::<C64>::zeros(n, 0)
            } else {
                DMatrix::from_columns(&cols.iter().map(|c| c.column(0).into_owned()).collect::<Vec<_>>())
            };
            let dim_next = complex_rank(&stacked);
            if dim_next >= dim_cur {
                return None;
            }
            if dim_next == 0 {
                return Some(class);
            }
            dim_cur = dim_next;
            current = column_space_basis(&stacked, dim_next);
        }
        None
    }
}

/// Numeric rank with the shared relative threshold.
pub fn complex_rank(m: &DMatrix<C64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let svd = m.clone().svd(false, false);
    let max = svd.singular_values.max();
    if max <= 0.0 {
        return 0;
    }
    svd.singular_values.iter().filter(|&&s| s > RANK_TOL * max).count()
}

pub fn real_rank(m: &DMatrix<f64>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let svd = m.clone().svd(false, false);
    let max = svd.singular_values.max();
    if max <= 0.0 {
        return 0;
    }
    svd.singular_values.iter().filter(|&&s| s > RANK_TOL * max).count()
}

fn column_space_basis(m: &DMatrix<C64>, rank: usize) -> DMatrix<C64> {
    let svd = m.clone().svd(true, false);
    let u = svd.u.as_ref().expect("svd with u");
    u.columns(0, rank).into_owned()
}

// ---------------------------------------------------------------------------
// basis change
// ---------------------------------------------------------------------------

/// Pull the bracket through an invertible basis change:
/// `(g·μ)(x, y) = g·μ(g⁻¹x, g⁻¹y)`.
///
/// Exactness is preserved for real diagonal radical maps and for fully
/// rational maps; anything else goes through doubles and drops the flag.
pub fn act(g: &LinearMap, alg: &NilpotentAlgebra) -> Result<NilpotentAlgebra, AlgebraError> {
    assert_eq!(g.n(), alg.dim());
    let n = alg.dim();
    // exact diagonal path: c' = c · g_k / (g_i g_j)
    if g.is_diagonal() && g.is_real() && alg.exact {
        let diag: Vec<Radical> = (0..n).map(|i| g.entry(i, i).re.clone()).collect();
        if diag.iter().any(Radical::is_zero) {
            return Err(AlgebraError::Singular);
        }
        let brackets = alg
            .brackets
            .iter()
            .map(|b| Bracket {
                i: b.i,
                j: b.j,
                k: b.k,
                coeff: b.coeff.scale(&diag[b.k]).div_real(&diag[b.i]).div_real(&diag[b.j]),
            })
            .collect();
        return NilpotentAlgebra::new(n, brackets, alg.field);
    }
    // exact rational path
    if g.is_rational() && alg.is_rational() && alg.exact {
        let gm = g.to_ratmat().unwrap();
        let inv = exact::inverse(&gm).ok_or(AlgebraError::Singular)?;
        let t = alg.tensor_rat().unwrap();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let mut out = vec![Rat::zero(); n];
                for i in 0..n {
                    if inv[(i, a)].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if inv[(j, b)].is_zero() {
                            continue;
                        }
                        let f = &inv[(i, a)] * &inv[(j, b)];
                        for k in 0..n {
                            let c = &t[(i * n + j) * n + k];
                            if !c.is_zero() {
                                for m in 0..n {
                                    if !gm[(m, k)].is_zero() {
                                        out[m] += &f * c * &gm[(m, k)];
                                    }
                                }
                            }
                        }
                    }
                }
                for (m, v) in out.into_iter().enumerate() {
                    if !v.is_zero() {
                        brackets.push(Bracket {
                            i: a,
                            j: b,
                            k: m,
                            coeff: RadicalScalar::real(Radical::from_rat(v)),
                        });
                    }
                }
            }
        }
        return NilpotentAlgebra::new(n, brackets, alg.field);
    }
    // numeric path
    let gm = g.to_complex();
    let inv = gm.clone().try_inverse().ok_or(AlgebraError::Singular)?;
    let t = alg.tensor();
    let mut raw: Vec<(usize, usize, usize, C64)> = Vec::new();
    let mut maxc = 0.0f64;
    for a in 0..n {
        for b in (a + 1)..n {
            let mut out = vec![C64::zero(); n];
            for i in 0..n {
                let fa = inv[(i, a)];
                if fa.norm() < 1e-300 {
                    continue;
                }
                for j in 0..n {
                    let f = fa * inv[(j, b)];
                    if f.norm() < 1e-300 {
                        continue;
                    }
                    for k in 0..n {
                        let c = t[(i * n + j) * n + k];
                        if c.norm() > 0.0 {
                            for m in 0..n {
                                out[m] += f * c * gm[(m, k)];
                            }
                        }
                    }
                }
            }
            for (m, v) in out.into_iter().enumerate() {
                maxc = maxc.max(v.norm());
                raw.push((a, b, m, v));
            }
        }
    }
    let brackets = raw
        .into_iter()
        .filter(|(_, _, _, v)| v.norm() > 1e-13 * maxc.max(1e-300))
        .map(|(i, j, k, v)| Bracket {
            i,
            j,
            k,
            coeff: RadicalScalar::new(
                Radical::from_rat(rat_from_f64(v.re)),
                Radical::from_rat(rat_from_f64(v.im)),
            ),
        })
        .collect();
    let field = if alg.field == Field::Complex || !g.is_real() {
        Field::Complex
    } else {
        Field::Real
    };
    Ok(NilpotentAlgebra::new(n, brackets, field)?.mark_inexact())
}

/// `λ·μ` with an `f64` factor, used by the numeric flows.
pub fn scale_f64(alg: &NilpotentAlgebra, lambda: f64) -> NilpotentAlgebra {
    let mut out = alg.clone();
    for b in &mut out.brackets {
        let v = b.coeff.to_complex() * lambda;
        b.coeff = RadicalScalar::new(
            Radical::from_rat(rat_from_f64(v.re)),
            Radical::from_rat(rat_from_f64(v.im)),
        );
    }
    out.brackets.retain(|b| !b.coeff.is_zero());
    out.mark_inexact()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    pub(crate) fn heisenberg(c: RadicalScalar) -> NilpotentAlgebra {
        NilpotentAlgebra::new(3, vec![Bracket { i: 0, j: 1, k: 2, coeff: c }], Field::Real).unwrap()
    }

    fn sqrt6_over_6() -> RadicalScalar {
        "1/6*sqrt(6)".parse().unwrap()
    }

    fn alg_37a() -> NilpotentAlgebra {
        // [e1,e2]=√6/6 e5, [e2,e3]=√6/6 e6, [e2,e4]=√6/6 e7
        NilpotentAlgebra::new(
            7,
            vec![
                Bracket { i: 0, j: 1, k: 4, coeff: sqrt6_over_6() },
                Bracket { i: 1, j: 2, k: 5, coeff: sqrt6_over_6() },
                Bracket { i: 1, j: 3, k: 6, coeff: sqrt6_over_6() },
            ],
            Field::Real,
        )
        .unwrap()
    }

    #[test]
    fn abelian_validates_class_one() {
        let rep = validate(&NilpotentAlgebra::abelian(7));
        assert!(rep.passes);
        assert!(rep.jacobi_exact);
        assert_eq!(rep.nilpotency_class, Some(1));
    }

    #[test]
    fn catalog_entry_validates() {
        let rep = validate(&alg_37a());
        assert!(rep.passes, "{rep:?}");
        assert!(rep.jacobi_exact);
        assert_eq!(rep.nilpotency_class, Some(2));
    }

    #[test]
    fn retargeted_bracket_breaks_nilpotency() {
        // [e1,e2] -> e2 keeps e2 in every term of the series
        let alg = NilpotentAlgebra::new(
            7,
            vec![
                Bracket { i: 0, j: 1, k: 1, coeff: sqrt6_over_6() },
                Bracket { i: 1, j: 2, k: 5, coeff: sqrt6_over_6() },
                Bracket { i: 1, j: 3, k: 6, coeff: sqrt6_over_6() },
            ],
            Field::Real,
        )
        .unwrap();
        let rep = validate(&alg);
        assert_eq!(rep.nilpotency_class, None);
        assert!(!rep.passes);
    }

    #[test]
    fn identity_acts_trivially() {
        let alg = alg_37a();
        let out = act(&LinearMap::identity(7), &alg).unwrap();
        assert_eq!(out.brackets(), alg.brackets());
        assert!(out.is_exact());
    }

    #[test]
    fn scalar_matrix_scales_inverse() {
        // g = λ·I multiplies every coefficient by 1/λ: gμ(g⁻¹x,g⁻¹y) = λ⁻¹μ(x,y)
        let lam = Radical::from_rat(rat(3, 1));
        let g = LinearMap::diagonal(vec![RadicalScalar::real(lam); 7]);
        let alg = alg_37a();
        let out = act(&g, &alg).unwrap();
        for (a, b) in out.brackets().iter().zip(alg.brackets()) {
            assert_eq!(a.coeff, b.coeff.div_real(&Radical::from_rat(rat(3, 1))));
        }
    }

    #[test]
    fn singular_map_rejected() {
        let g = LinearMap::zeros(7);
        assert!(matches!(act(&g, &alg_37a()), Err(AlgebraError::Singular)));
    }

    #[test]
    fn complexify_preserves_constants() {
        let alg = alg_37a();
        let c = alg.complexify();
        assert_eq!(c.field(), Field::Complex);
        assert_eq!(c.brackets(), alg.brackets());
    }

    #[test]
    fn duplicate_keys_rejected() {
        let err = NilpotentAlgebra::new(
            3,
            vec![
                Bracket { i: 0, j: 1, k: 2, coeff: RadicalScalar::one() },
                Bracket { i: 0, j: 1, k: 2, coeff: RadicalScalar::one() },
            ],
            Field::Real,
        );
        assert!(matches!(err, Err(AlgebraError::Duplicate { .. })));
    }
}
