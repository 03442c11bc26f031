//! Betti numbers of the Chevalley–Eilenberg complex with trivial coefficients.

use crate::algebra::{complex_rank, NilpotentAlgebra, C64};
use crate::exact::{self, RatMat};
use crate::scalar::Rat;
use nalgebra::DMatrix;
use num::Zero;

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // next lexicographic combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Sign of sorting the concatenation `two ++ rest` (entries distinct).
fn merge_sign(two: (usize, usize), rest: &[usize]) -> i32 {
    let mut arr = vec![two.0, two.1];
    arr.extend_from_slice(rest);
    let mut sign = 1;
    for x in 0..arr.len() {
        for y in x + 1..arr.len() {
            if arr[x] > arr[y] {
                sign = -sign;
            }
        }
    }
    sign
}

struct Complexes {
    subsets: Vec<Vec<Vec<usize>>>,
    index: Vec<std::collections::BTreeMap<Vec<usize>, usize>>,
}

fn build_subsets(n: usize) -> Complexes {
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| combinations(n, k)).collect();
    let index = subsets
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect()
        })
        .collect();
    Complexes { subsets, index }
}

/// Entries of `d_k : Λᵏ𝔫* → Λᵏ⁺¹𝔫*` as `(row, col, i, j, source, sign)`
/// where the value is `sign · (−C_{ij}^{source})`.
fn differential_support(
    n: usize,
    k: usize,
    cx: &Complexes,
) -> Vec<(usize, usize, usize, usize, usize, i32)> {
    let mut out = Vec::new();
    for (col, s) in cx.subsets[k].iter().enumerate() {
        for (r, &sr) in s.iter().enumerate() {
            let rest: Vec<usize> = s.iter().copied().filter(|&x| x != sr).collect();
            for i in 0..n {
                for j in i + 1..n {
                    if rest.contains(&i) || rest.contains(&j) {
                        continue;
                    }
                    let mut tgt: Vec<usize> = rest.clone();
                    tgt.push(i);
                    tgt.push(j);
                    tgt.sort_unstable();
                    let row = cx.index[k + 1][&tgt];
                    let sign = if r % 2 == 0 { 1 } else { -1 } * merge_sign((i, j), &rest);
                    out.push((row, col, i, j, sr, sign));
                }
            }
        }
    }
    out
}

/// `(b₁, …, b_n)` of the Chevalley–Eilenberg complex; exact ranks over ℚ for
/// rational constants, numeric SVD ranks otherwise.
pub fn betti_numbers(alg: &NilpotentAlgebra) -> Vec<usize> {
    let n = alg.dim();
    let cx = build_subsets(n);
    let mut ranks = vec![0usize; n + 1];
    if let Some(t) = alg.tensor_rat() {
        for k in 1..n {
            let rows = cx.subsets[k + 1].len();
            let cols = cx.subsets[k].len();
            let mut d = RatMat::zeros(rows, cols);
            for (row, col, i, j, src, sign) in differential_support(n, k, &cx) {
                let c = &t[(i * n + j) * n + src];
                if !c.is_zero() {
                    let v = -c * Rat::from_integer(sign.into());
                    d[(row, col)] += v;
                }
            }
            ranks[k] = exact::rank(&d);
        }
    } else {
        let t = alg.tensor();
        for k in 1..n {
            let rows = cx.subsets[k + 1].len();
            let cols = cx.subsets[k].len();
            let mut d = DMatrix::<C64>::zeros(rows, cols);
            for (row, col, i, j, src, sign) in differential_support(n, k, &cx) {
                let c = t[(i * n + j) * n + src];
                if c.norm() > 0.0 {
                    d[(row, col)] += -c * sign as f64;
                }
            }
            ranks[k] = complex_rank(&d);
        }
    }
    (1..=n)
        .map(|k| binomial(n, k) - ranks[k] - ranks[k - 1])
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Bracket, Field, NilpotentAlgebra};

    #[test]
    fn abelian_betti_is_binomial() {
        let alg = NilpotentAlgebra::abelian(7);
        assert_eq!(betti_numbers(&alg), vec![7, 21, 35, 35, 21, 7, 1]);
    }

    #[test]
    fn heisenberg_in_dim_three() {
        let alg = NilpotentAlgebra::new(
            3,
            vec![Bracket { i: 0, j: 1, k: 2, coeff: crate::scalar::RadicalScalar::one() }],
            Field::Real,
        )
        .unwrap();
        // H¹ = 2 (duals of e1,e2), H² = 2, H³ = 1
        assert_eq!(betti_numbers(&alg), vec![2, 2, 1]);
    }

    #[test]
    fn exact_and_numeric_paths_agree() {
        // same algebra with rational vs radical scaling of the constants
        let rational = NilpotentAlgebra::new(
            7,
            vec![
                Bracket { i: 0, j: 1, k: 4, coeff: crate::scalar::RadicalScalar::one() },
                Bracket { i: 1, j: 2, k: 5, coeff: crate::scalar::RadicalScalar::one() },
                Bracket { i: 1, j: 3, k: 6, coeff: crate::scalar::RadicalScalar::one() },
            ],
            Field::Real,
        )
        .unwrap();
        let radical = NilpotentAlgebra::new(
            7,
            rational
                .brackets()
                .iter()
                .map(|b| Bracket {
                    i: b.i,
                    j: b.j,
                    k: b.k,
                    coeff: "1/6*sqrt(6)".parse().unwrap(),
                })
                .collect(),
            Field::Real,
        )
        .unwrap();
        assert_eq!(betti_numbers(&rational), betti_numbers(&radical));
        assert_eq!(betti_numbers(&rational), vec![4, 12, 18, 18, 12, 4, 1]);
    }
}
