//! Exact dense linear algebra over the Gaussian rationals.
//!
//! The central operation is [`congruence_diagonalize`]: given a Hermitian
//! matrix `C` it produces an invertible `P` and a real diagonal `D` with
//! `P† C P = D`, staying inside the Gaussian rationals throughout. By
//! Sylvester's law of inertia the sign counts of `D` do not depend on the
//! elimination order, so [`signature`] is well defined.
//!
//! [`Matrix::rank`] is an independent fraction-preserving Gaussian
//! elimination; it never goes through the congruence path and serves as an
//! oracle for `p + q`.

use crate::arith::{GaussianRational, Rational};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: entry ({row},{col}) is not the conjugate of ({col},{row})")]
    NotHermitian { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A dense rectangular matrix with Gaussian-rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in Matrix::from_rows"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch ({}x{} * {}x{})",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    /// Exact rank via fraction-preserving Gaussian elimination with
    /// smallest-bit-size pivoting.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(pivot_row) = best_pivot_row(&a, rank, c) else {
                continue;
            };
            a.swap_rows(rank, pivot_row);
            let pivot = a.at(rank, c).clone();
            for r in rank + 1..a.rows {
                if a.at(r, c).is_zero() {
                    continue;
                }
                let factor = a.at(r, c) / &pivot;
                for cc in c..a.cols {
                    let delta = &factor * a.at(rank, cc);
                    let idx = r * a.cols + cc;
                    a.data[idx] -= &delta;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel `{x : A·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let mut a = self.clone();
        // reduced row echelon form
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = best_pivot_row(&a, r, c) else {
                continue;
            };
            a.swap_rows(r, pr);
            let pivot = a.at(r, c).clone();
            for cc in c..a.cols {
                let idx = r * a.cols + cc;
                let v = a.data[idx].checked_div(&pivot).unwrap();
                a.data[idx] = v;
            }
            for rr in 0..a.rows {
                if rr == r || a.at(rr, c).is_zero() {
                    continue;
                }
                let factor = a.at(rr, c).clone();
                for cc in c..a.cols {
                    let delta = &factor * a.at(r, cc);
                    let idx = rr * a.cols + cc;
                    a.data[idx] -= &delta;
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let free_cols: Vec<usize> = (0..a.cols).filter(|c| !pivot_cols.contains(c)).collect();
        free_cols
            .into_iter()
            .map(|f| {
                let mut v = vec![GaussianRational::zero(); a.cols];
                v[f] = GaussianRational::one();
                for (i, &p) in pivot_cols.iter().enumerate() {
                    v[p] = -a.at(i, f);
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + c1, r * self.cols + c2);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn best_pivot_row(a: &Matrix, from_row: usize, col: usize) -> Option<usize> {
    let mut best: Option<(usize, u64)> = None;
    for r in from_row..a.rows {
        let v = a.at(r, col);
        if v.is_zero() {
            continue;
        }
        let size = v.bit_size();
        match best {
            Some((_, s)) if s <= size => {}
            _ => best = Some((r, size)),
        }
    }
    best.map(|(r, _)| r)
}

/// A square matrix equal to its own conjugate transpose. Diagonal entries
/// are necessarily real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianMatrix {
    dim: usize,
    mat: Matrix,
}

impl HermitianMatrix {
    /// Validates the Hermitian symmetry `entries[j][i] = conj(entries[i][j])`.
    pub fn new(mat: Matrix) -> Result<Self, LinalgError> {
        if mat.rows != mat.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "Hermitian matrix must be square, got {}x{}",
                mat.rows, mat.cols
            )));
        }
        for i in 0..mat.rows {
            for j in i..mat.cols {
                if *mat.at(j, i) != mat.at(i, j).conj() {
                    return Err(LinalgError::NotHermitian { row: j, col: i });
                }
            }
        }
        Ok(HermitianMatrix { dim: mat.rows, mat })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, LinalgError> {
        Self::new(Matrix::from_rows(rows))
    }

    /// Diagonal matrix with the given real entries.
    pub fn diagonal(entries: &[Rational]) -> Self {
        let dim = entries.len();
        let mut mat = Matrix::zeros(dim, dim);
        for (i, v) in entries.iter().enumerate() {
            mat.set(i, i, v.clone().into());
        }
        HermitianMatrix { dim, mat }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &GaussianRational {
        self.mat.at(i, j)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    /// Principal submatrix on the given index set. Symmetric selection
    /// preserves the Hermitian invariant.
    pub fn principal_submatrix(&self, keep: &[usize]) -> HermitianMatrix {
        let mat = Matrix::from_fn(keep.len(), keep.len(), |r, c| {
            self.mat.at(keep[r], keep[c]).clone()
        });
        HermitianMatrix {
            dim: keep.len(),
            mat,
        }
    }
}

/// Inertia of a Hermitian matrix: counts of positive, negative and zero
/// entries of any congruence diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.p + self.q + self.z
    }

    /// `R = p + q`, the rank.
    pub fn rank(&self) -> usize {
        self.p + self.q
    }

    fn from_diagonal(diag: &[Rational]) -> Signature {
        let mut sig = Signature { p: 0, q: 0, z: 0 };
        for d in diag {
            match d.sign() {
                1 => sig.p += 1,
                -1 => sig.q += 1,
                _ => sig.z += 1,
            }
        }
        sig
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.z)
    }
}

/// Result of [`congruence_diagonalize`]: `transform† · C · transform = diag`,
/// with `transform` invertible and `transform_inv` its exact inverse.
#[derive(Debug, Clone)]
pub struct CongruenceDiagonalization {
    pub transform: Matrix,
    pub transform_inv: Matrix,
    pub diagonal: Vec<Rational>,
}

impl CongruenceDiagonalization {
    pub fn signature(&self) -> Signature {
        Signature::from_diagonal(&self.diagonal)
    }
}

#[derive(Clone, Copy, PartialEq)]
pub(crate) enum Track {
    None,
    InverseOnly,
    Full,
}

pub(crate) struct Eliminated {
    pub diagonal: Vec<Rational>,
    pub transform: Option<Matrix>,
    pub transform_inv: Option<Matrix>,
}

/// Symmetric elimination on a Hermitian matrix.
///
/// At step `k`: if a nonzero diagonal entry exists in the trailing block,
/// the one of smallest bit size is swapped to the front and its row/column
/// cleared by simultaneous row and column operations. If the trailing
/// diagonal is entirely zero but some off-diagonal `c = A[i][j]` is not,
/// the basis vector `e_i` is replaced by `e_i + λ·e_j` with `λ = 1` when
/// `Re(c) ≠ 0` and `λ = i` otherwise, producing the real nonzero diagonal
/// entry `2·Re(λc)`. All arithmetic stays in the Gaussian rationals.
pub(crate) fn symmetric_eliminate(h: &HermitianMatrix, track: Track) -> Eliminated {
    let m = h.dim;
    let mut a = h.mat.clone();
    let mut transform = match track {
        Track::Full => Some(Matrix::identity(m)),
        _ => None,
    };
    let mut transform_inv = match track {
        Track::None => None,
        _ => Some(Matrix::identity(m)),
    };
    let mut diagonal = vec![Rational::zero(); m];

    for k in 0..m {
        // Pivot: nonzero diagonal entry of smallest bit size.
        let mut pivot: Option<(usize, u64)> = None;
        for i in k..m {
            let v = a.at(i, i);
            if v.is_zero() {
                continue;
            }
            let size = v.bit_size();
            match pivot {
                Some((_, s)) if s <= size => {}
                _ => pivot = Some((i, size)),
            }
        }
        let pivot_idx = match pivot {
            Some((i, _)) => i,
            None => {
                // Trailing diagonal is zero; repair from the first nonzero
                // off-diagonal entry, or stop if the whole block is zero.
                let mut found = None;
                'scan: for i in k..m {
                    for j in i + 1..m {
                        if !a.at(i, j).is_zero() {
                            found = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    break;
                };
                let c = a.at(i, j);
                let lambda = if c.re().is_zero() {
                    GaussianRational::i()
                } else {
                    GaussianRational::one()
                };
                apply_repair(&mut a, k, i, j, &lambda);
                if let Some(p) = transform.as_mut() {
                    // col_i += λ · col_j
                    for r in 0..m {
                        let delta = &lambda * p.at(r, j);
                        let idx = r * m + i;
                        p.data[idx] += &delta;
                    }
                }
                if let Some(pi) = transform_inv.as_mut() {
                    // row_j -= λ · row_i
                    for c2 in 0..m {
                        let delta = &lambda * pi.at(i, c2);
                        let idx = j * m + c2;
                        pi.data[idx] -= &delta;
                    }
                }
                i
            }
        };

        if pivot_idx != k {
            a.swap_rows(k, pivot_idx);
            a.swap_cols(k, pivot_idx);
            if let Some(p) = transform.as_mut() {
                p.swap_cols(k, pivot_idx);
            }
            if let Some(pi) = transform_inv.as_mut() {
                pi.swap_rows(k, pivot_idx);
            }
        }

        let d = a.at(k, k).clone();
        debug_assert!(d.im().is_zero(), "Hermitian pivot must be real");
        diagonal[k] = d.re().clone();

        // Multipliers μ_b = A[k][b] / d; clearing column and row k leaves
        // A'[a][b] = A[a][b] - μ_b · A[a][k] on the trailing block.
        let mut multipliers: Vec<(usize, GaussianRational)> = Vec::new();
        for b in k + 1..m {
            let v = a.at(k, b);
            if !v.is_zero() {
                multipliers.push((b, v.checked_div(&d).unwrap()));
            }
        }
        if !multipliers.is_empty() {
            let col_k: Vec<GaussianRational> =
                (k + 1..m).map(|r| a.at(r, k).clone()).collect();
            for (b, mu) in &multipliers {
                // upper triangle a ≤ b, then mirror
                for r in k + 1..=*b {
                    let delta = mu * &col_k[r - k - 1];
                    if delta.is_zero() {
                        continue;
                    }
                    let idx = r * m + b;
                    a.data[idx] -= &delta;
                    if r != *b {
                        a.data[*b * m + r] = a.data[idx].conj();
                    }
                }
            }
            if let Some(p) = transform.as_mut() {
                let p_col_k: Vec<GaussianRational> = (0..m).map(|r| p.at(r, k).clone()).collect();
                for (b, mu) in &multipliers {
                    for r in 0..m {
                        if p_col_k[r].is_zero() {
                            continue;
                        }
                        let delta = mu * &p_col_k[r];
                        let idx = r * m + b;
                        p.data[idx] -= &delta;
                    }
                }
            }
            if let Some(pi) = transform_inv.as_mut() {
                // row_k += Σ_b μ_b · row_b
                let mut acc: Vec<GaussianRational> = pi.row(k).to_vec();
                for (b, mu) in &multipliers {
                    for c2 in 0..m {
                        let v = pi.at(*b, c2);
                        if v.is_zero() {
                            continue;
                        }
                        acc[c2] += &(mu * v);
                    }
                }
                for (c2, v) in acc.into_iter().enumerate() {
                    pi.set(k, c2, v);
                }
            }
            for b in k + 1..m {
                a.set(k, b, GaussianRational::zero());
                a.set(b, k, GaussianRational::zero());
            }
        }
    }

    Eliminated {
        diagonal,
        transform,
        transform_inv,
    }
}

fn apply_repair(a: &mut Matrix, k: usize, i: usize, j: usize, lambda: &GaussianRational) {
    let m = a.cols;
    // col_i += λ · col_j, then row_i += conj(λ) · row_j
    for r in k..m {
        let delta = lambda * a.at(r, j);
        if !delta.is_zero() {
            let idx = r * m + i;
            a.data[idx] += &delta;
        }
    }
    let lconj = lambda.conj();
    for c in k..m {
        let delta = &lconj * a.at(j, c);
        if !delta.is_zero() {
            let idx = i * m + c;
            a.data[idx] += &delta;
        }
    }
}

/// Exact congruence diagonalization `P† C P = diag(D)` with `P` invertible.
pub fn congruence_diagonalize(c: &HermitianMatrix) -> CongruenceDiagonalization {
    let e = symmetric_eliminate(c, Track::Full);
    CongruenceDiagonalization {
        transform: e.transform.unwrap(),
        transform_inv: e.transform_inv.unwrap(),
        diagonal: e.diagonal,
    }
}

/// Inertia of a Hermitian matrix via symmetric elimination; well defined by
/// Sylvester's law of inertia.
pub fn signature(c: &HermitianMatrix) -> Signature {
    let e = symmetric_eliminate(c, Track::None);
    Signature::from_diagonal(&e.diagonal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, im)
    }

    fn check_diagonalization(c: &HermitianMatrix, d: &CongruenceDiagonalization) {
        // P† C P = diag(D)
        let lhs = d
            .transform
            .conj_transpose()
            .mul(c.matrix())
            .mul(&d.transform);
        let expected = HermitianMatrix::diagonal(&d.diagonal);
        assert_eq!(lhs, *expected.matrix());
        // P · P⁻¹ = I
        assert!(d.transform.mul(&d.transform_inv).is_identity());
        // (P†)⁻¹ · D · P⁻¹ = C
        let rec = d
            .transform_inv
            .conj_transpose()
            .mul(expected.matrix())
            .mul(&d.transform_inv);
        assert_eq!(rec, *c.matrix());
    }

    #[test]
    fn diagonal_input_is_fixed_point() {
        let c = HermitianMatrix::diagonal(&[
            Rational::from_integer(2),
            Rational::from_integer(-3),
            Rational::zero(),
        ]);
        let d = congruence_diagonalize(&c);
        assert_eq!(
            d.diagonal,
            vec![
                Rational::from_integer(2),
                Rational::from_integer(-3),
                Rational::zero()
            ]
        );
        assert!(d.transform.is_identity());
        assert_eq!(signature(&c), Signature { p: 1, q: 1, z: 1 });
        check_diagonalization(&c, &d);
    }

    #[test]
    fn off_diagonal_repair_real() {
        // [[0,1],[1,0]] has eigenvalues ±1; the λ=1 repair produces the
        // weights (2, -1/2).
        let c = HermitianMatrix::from_rows(vec![vec![gi(0, 0), gi(1, 0)], vec![gi(1, 0), gi(0, 0)]])
            .unwrap();
        let d = congruence_diagonalize(&c);
        assert_eq!(
            d.diagonal,
            vec![Rational::from_integer(2), Rational::from_pair(-1, 2).unwrap()]
        );
        assert_eq!(signature(&c), Signature { p: 1, q: 1, z: 0 });
        check_diagonalization(&c, &d);
    }

    #[test]
    fn off_diagonal_repair_imaginary() {
        // [[0,i],[-i,0]] also has signature (1,1,0).
        let c = HermitianMatrix::from_rows(vec![vec![gi(0, 0), gi(0, 1)], vec![gi(0, -1), gi(0, 0)]])
            .unwrap();
        let d = congruence_diagonalize(&c);
        assert_eq!(signature(&c), Signature { p: 1, q: 1, z: 0 });
        check_diagonalization(&c, &d);
    }

    #[test]
    fn identity_signature() {
        for n in 1..5 {
            let c = HermitianMatrix::diagonal(&vec![Rational::one(); n]);
            assert_eq!(signature(&c), Signature { p: n, q: 0, z: 0 });
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let err = HermitianMatrix::from_rows(vec![
            vec![gi(0, 0), gi(1, 0)],
            vec![gi(2, 0), gi(0, 0)],
        ])
        .unwrap_err();
        assert_eq!(err, LinalgError::NotHermitian { row: 1, col: 0 });
        // a non-real diagonal entry is equally rejected
        let err = HermitianMatrix::from_rows(vec![vec![gi(0, 1)]]).unwrap_err();
        assert_eq!(err, LinalgError::NotHermitian { row: 0, col: 0 });
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::identity(5).rank(), 5);
        let m = Matrix::from_rows(vec![vec![gi(1, 0), gi(2, 0)], vec![gi(2, 0), gi(4, 0)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_is_exact_kernel() {
        let m = Matrix::from_rows(vec![vec![gi(1, 0), gi(2, 0), gi(3, 0)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mut sum = GaussianRational::zero();
            for (c, x) in v.iter().enumerate() {
                sum += &(m.at(0, c) * x);
            }
            assert!(sum.is_zero());
        }
    }

    fn random_hermitian(rng: &mut impl Rng, dim: usize, range: i64) -> HermitianMatrix {
        let mut mat = Matrix::zeros(dim, dim);
        for i in 0..dim {
            mat.set(i, i, gi(rng.gen_range(-range..=range), 0));
            for j in i + 1..dim {
                let v = gi(
                    rng.gen_range(-range..=range),
                    rng.gen_range(-range..=range),
                );
                mat.set(j, i, v.conj());
                mat.set(i, j, v);
            }
        }
        HermitianMatrix::new(mat).unwrap()
    }

    fn random_invertible(rng: &mut impl Rng, dim: usize, range: i64) -> Matrix {
        loop {
            let m = Matrix::from_fn(dim, dim, |_, _| {
                gi(
                    rng.gen_range(-range..=range),
                    rng.gen_range(-range..=range),
                )
            });
            if m.rank() == dim {
                return m;
            }
        }
    }

    #[test]
    fn sylvester_invariance_smoke() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let dim = rng.gen_range(1..=6);
            let c = random_hermitian(&mut rng, dim, 4);
            let sig = signature(&c);
            let s = random_invertible(&mut rng, dim, 3);
            let congruent =
                HermitianMatrix::new(s.conj_transpose().mul(c.matrix()).mul(&s)).unwrap();
            assert_eq!(signature(&congruent), sig);
            // rank from the signature agrees with the independent row rank
            assert_eq!(sig.rank(), c.matrix().rank());
            check_diagonalization(&c, &congruence_diagonalize(&c));
        }
    }
}
