//! Néron–Severi classes on `A = E × E` and exact lattice invariants.
//!
//! A class is the Hermitian matrix `[[α, β], [β̄, δ]]` over `End(E)`,
//! normalized so that `{0} × E` is `[[1, 0], [0, 0]]` and `E × {0}` is
//! `[[0, 0], [0, 1]]`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::names::{CurveKind, CurveName, Family};
use crate::quatorder::{GeneratorSolution, Quat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NsClass {
    pub alpha: i64,
    pub beta: Quat,
    pub delta: i64,
}

impl NsClass {
    pub fn new(alpha: i64, beta: Quat, delta: i64) -> Self {
        NsClass { alpha, beta, delta }
    }

    pub fn gamma(&self) -> Quat {
        self.beta.conj()
    }

    /// `α₁δ₂ + α₂δ₁ − γ₁β₂ − γ₂β₁`.
    pub fn try_intersection(&self, other: &NsClass) -> Result<i64> {
        let cross = self.gamma() * other.beta + other.gamma() * self.beta;
        let cross = cross
            .as_integer()
            .ok_or_else(|| Error::Model(format!("pairing term {cross} is not an integer")))?;
        Ok(self.alpha * other.delta + other.alpha * self.delta - cross)
    }

    /// Panics if the pairing is not a rational integer.
    pub fn intersection(&self, other: &NsClass) -> i64 {
        self.try_intersection(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `2(αδ − γβ)`.
    pub fn self_intersection(&self) -> i64 {
        let gb = (self.gamma() * self.beta)
            .as_integer()
            .unwrap_or_else(|| panic!("γβ is not an integer for {self:?}"));
        2 * (self.alpha * self.delta - gb)
    }
}

/// The principal polarization `{0} × E + E × {0}`.
pub fn x_class() -> NsClass {
    NsClass::new(1, Quat::ZERO, 1)
}

/// `{0} × E`, whose pairing with a class reads off `δ`.
pub fn vertical_class() -> NsClass {
    NsClass::new(1, Quat::ZERO, 0)
}

/// `E × {0}`, whose pairing with a class reads off `α`.
pub fn horizontal_class() -> NsClass {
    NsClass::new(0, Quat::ZERO, 1)
}

/// `(a₁ × a₂)^* Δ`: `[[ā₁a₁, ā₁a₂], [ā₂a₁, ā₂a₂]]`.
pub fn delta_class(a1: Quat, a2: Quat) -> NsClass {
    NsClass::new(a1.nrd(), a1.conj() * a2, a2.nrd())
}

/// Class of one of the 24 curves. Translates share their base's class.
pub fn curve_class(name: CurveName, sol: &GeneratorSolution) -> NsClass {
    let (s, s2, f, v, pi) = (sol.sigma, sol.sigma_sq(), sol.frob, sol.ver(), sol.pi());
    match (name.family, name.kind) {
        (Family::First, CurveKind::E) => vertical_class(),
        (Family::First, CurveKind::F) => delta_class(s2, v),
        (Family::First, CurveKind::V) => delta_class(s, f),
        (Family::First, CurveKind::Pi) => delta_class(-pi, f),
        (Family::Second, CurveKind::E) => horizontal_class(),
        (Family::Second, CurveKind::F) => delta_class(v, s),
        (Family::Second, CurveKind::V) => delta_class(f, s2),
        (Family::Second, CurveKind::Pi) => delta_class(v, -pi),
    }
}

pub fn base_classes(sol: &GeneratorSolution) -> [NsClass; 8] {
    CurveName::base_curves().map(|n| curve_class(n, sol))
}

/// Pairings of `E₀, F₀, V₀, π₀, E₀′, F₀′, V₀′, π₀′`.
pub fn intersection_table(sol: &GeneratorSolution) -> [[i64; 8]; 8] {
    let classes = base_classes(sol);
    let mut out = [[0; 8]; 8];
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            out[i][j] = a.intersection(b);
        }
    }
    out
}

/// Rank, Smith invariants and the discriminant of a rank-deficient Gram
/// matrix, computed on the quotient by its radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramData {
    pub matrix: Vec<Vec<i64>>,
    pub rank: usize,
    /// Nonzero Smith invariants in divisibility order.
    pub elementary_divisors: Vec<i64>,
    pub discriminant: i64,
}

impl GramData {
    /// `√(disc / expected)` when it is a positive integer: the index of the
    /// span in a lattice of discriminant `expected` containing it.
    pub fn index_in(&self, expected: i64) -> Option<i64> {
        if expected == 0 || self.discriminant % expected != 0 {
            return None;
        }
        let q = self.discriminant / expected;
        if q <= 0 {
            return None;
        }
        let r = (q as f64).sqrt().round() as i64;
        (r * r == q).then_some(r)
    }
}

/// Gram matrix of smooth rational curves: the incidence with `-2` on the
/// diagonal.
pub fn gram_from_incidence(incidence: &[Vec<i64>]) -> Vec<Vec<i64>> {
    incidence
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &v)| if i == j { -2 } else { v })
                .collect()
        })
        .collect()
}

pub fn gram_and_discriminant(incidence: &[Vec<i64>]) -> GramData {
    let matrix = gram_from_incidence(incidence);
    analyze_gram(matrix)
}

/// Exact invariants of a symmetric integer matrix.
pub fn analyze_gram(matrix: Vec<Vec<i64>>) -> GramData {
    let g = to_big(&matrix);
    let rank = rank(&g);
    let elementary_divisors: Vec<i64> = smith_invariants(&g)
        .iter()
        .map(|d| d.to_i64().expect("elementary divisor fits in i64"))
        .collect();
    let disc = radical_quotient_discriminant(&g);
    GramData {
        matrix,
        rank,
        elementary_divisors,
        discriminant: disc.to_i64().expect("discriminant fits in i64"),
    }
}

type BigMatrix = Vec<Vec<BigInt>>;

fn to_big(m: &[Vec<i64>]) -> BigMatrix {
    m.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Rank by fraction-free elimination.
pub fn rank(m: &BigMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn determinant(m: &BigMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Nonzero Smith invariants `d₁ | d₂ | …`.
pub fn smith_invariants(m: &BigMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for k in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block as pivot
            let pivot = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()));
            let Some((pi, pj)) = pivot else {
                return finish_smith(out);
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..rows {
                let q = &a[i][k] / &a[k][k];
                if !q.is_zero() {
                    for j in k..cols {
                        let t = &q * &a[k][j];
                        a[i][j] -= t;
                    }
                }
                clean &= a[i][k].is_zero();
            }
            for j in k + 1..cols {
                let q = &a[k][j] / &a[k][k];
                if !q.is_zero() {
                    for i in k..rows {
                        let t = &q * &a[i][k];
                        a[i][j] -= t;
                    }
                }
                clean &= a[k][j].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !(&a[i][j] % &a[k][k]).is_zero()));
            match bad {
                Some(i) => {
                    for j in k..cols {
                        let t = a[i][j].clone();
                        a[k][j] += t;
                    }
                }
                None => {
                    out.push(a[k][k].abs());
                    break;
                }
            }
        }
    }
    finish_smith(out)
}

fn finish_smith(out: Vec<BigInt>) -> Vec<BigInt> {
    debug_assert!(out.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    out
}

/// Column operations bringing `m` to echelon form, with the accumulated
/// unimodular transform. Returns `(U, r)`: the first `r` columns of `U` map
/// to the pivots and the rest span the integer kernel.
fn column_echelon(m: &BigMatrix) -> (BigMatrix, usize) {
    let n = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let mut u: BigMatrix = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let swap_cols = |x: &mut BigMatrix, p: usize, q: usize| {
        for row in x.iter_mut() {
            row.swap(p, q);
        }
    };
    // col_j -= q·col_c
    let axpy = |x: &mut BigMatrix, j: usize, c: usize, q: &BigInt| {
        for row in x.iter_mut() {
            let t = q * &row[c];
            row[j] -= t;
        }
    };
    let mut c = 0;
    for i in 0..a.len() {
        if c == n {
            break;
        }
        loop {
            let Some(p) = (c..n)
                .filter(|&j| !a[i][j].is_zero())
                .min_by(|&x, &y| a[i][x].abs().cmp(&a[i][y].abs()))
            else {
                break;
            };
            swap_cols(&mut a, c, p);
            swap_cols(&mut u, c, p);
            let mut done = true;
            for j in c + 1..n {
                if a[i][j].is_zero() {
                    continue;
                }
                let q = &a[i][j] / &a[i][c];
                axpy(&mut a, j, c, &q);
                axpy(&mut u, j, c, &q);
                done &= a[i][j].is_zero();
            }
            if done {
                c += 1;
                break;
            }
        }
    }
    (u, c)
}

/// Determinant of the form induced on `Zⁿ / rad`.
pub fn radical_quotient_discriminant(g: &BigMatrix) -> BigInt {
    let (u, r) = column_echelon(g);
    let n = g.len();
    // G' = U₁ᵀ G U₁ with U₁ the first r columns of U
    let gu: BigMatrix = (0..n)
        .map(|i| {
            (0..r)
                .map(|j| (0..n).map(|k| &g[i][k] * &u[k][j]).sum())
                .collect()
        })
        .collect();
    let reduced: BigMatrix = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..n).map(|k| &u[k][i] * &gu[k][j]).sum())
                .collect()
        })
        .collect();
    determinant(&reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatorder::{designated, solve_generators};

    fn name(s: &str) -> CurveName {
        s.parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        let sol = designated();
        let c = |s| curve_class(name(s), &sol);
        assert_eq!(c("E0").intersection(&c("E0'")), 1);
        assert_eq!(c("F0").intersection(&c("F0'")), 3);
        assert_eq!(c("E0").intersection(&c("E0")), 0);
        assert_eq!(x_class().self_intersection(), 2);
        assert_eq!(c("E0").self_intersection(), 0);
    }

    #[test]
    fn delta_class_examples() {
        let sol = designated();
        let d = delta_class(Quat::ONE, Quat::ONE);
        assert_eq!((d.alpha, d.beta, d.delta), (1, Quat::ONE, 1));
        assert_eq!(delta_class(sol.sigma_sq(), sol.ver()), curve_class(name("F0"), &sol));
        let p = delta_class(sol.ver(), -sol.pi());
        assert_eq!((p.alpha, p.delta), (2, 3));
        for a in crate::quatorder::units() {
            assert_eq!(delta_class(a, sol.frob).self_intersection(), 0);
        }
    }

    #[test]
    fn curve_class_examples() {
        let sol = designated();
        assert_eq!(curve_class(name("E1"), &sol), curve_class(name("E0"), &sol));
        assert_eq!(curve_class(name("pi2'"), &sol), curve_class(name("pi0'"), &sol));
        let pi0 = curve_class(name("pi0"), &sol);
        assert_eq!((pi0.alpha, pi0.delta), (3, 2));
        let e0p = curve_class(name("E0'"), &sol);
        assert_eq!((e0p.alpha, e0p.beta, e0p.delta), (0, Quat::ZERO, 1));
    }

    #[test]
    fn pairing_reads_off_diagonal() {
        let sol = designated();
        for l in base_classes(&sol) {
            assert_eq!(l.intersection(&horizontal_class()), l.alpha);
            assert_eq!(l.intersection(&vertical_class()), l.delta);
            assert_eq!(l.self_intersection(), l.intersection(&l));
            assert_eq!(l.self_intersection() % 2, 0);
        }
    }

    #[test]
    fn table_is_symmetric_and_solution_independent() {
        let sols = solve_generators().unwrap();
        let t = intersection_table(&sols[0]);
        for i in 0..8 {
            assert_eq!(t[i][i], 0);
            for j in 0..8 {
                assert_eq!(t[i][j], t[j][i]);
            }
        }
        assert_eq!(t[3][4], 3);
        assert_eq!(t[2][6], 3);
        for s in &sols {
            assert_eq!(intersection_table(s), t);
        }
    }

    fn big(m: &[&[i64]]) -> BigMatrix {
        to_big(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn linear_algebra_small_cases() {
        let a = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(smith_invariants(&a), vec![2.into(), 6.into(), 12.into()]);
        assert_eq!(determinant(&a), BigInt::from(-144));
        assert_eq!(rank(&a), 3);
        let s = big(&[&[1, 1], &[1, 1]]);
        assert_eq!(rank(&s), 1);
        assert_eq!(smith_invariants(&s), vec![BigInt::one()]);
        assert_eq!(radical_quotient_discriminant(&s), BigInt::one());
        // A2 ⊕ radical
        let a2 = big(&[&[-2, 1, 0], &[1, -2, 0], &[0, 0, 0]]);
        assert_eq!(radical_quotient_discriminant(&a2), BigInt::from(3));
        let z = big(&[&[0, 0], &[0, 0]]);
        assert_eq!(rank(&z), 0);
        assert!(smith_invariants(&z).is_empty());
    }

    #[test]
    fn gram_data_on_hyperbolic_plane_with_radical() {
        let m = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 2]];
        let g = analyze_gram(m);
        assert_eq!(g.rank, 2);
        assert_eq!(g.discriminant, -1);
        assert_eq!(g.elementary_divisors, vec![1, 1]);
        assert_eq!(g.index_in(-1), Some(1));
    }
}
