//! Dense complex matrices and graded operators `M o K^e`.
//!
//! A [`MagOp`] with grade 1 is the antilinear map `v -> M * conj(v)`. Composing
//! two graded operators conjugates the right factor when the left one is
//! antilinear, which makes the pairs `(M, e)` a semidirect product
//! `GL(n) x| Z/2` isomorphic to the invertible (anti)linear maps of `C^n`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

pub type C64 = Complex64;

/// Relative singular-value cutoff for rank decisions.
pub const RANK_CUTOFF: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
}

/// Square complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix(DMatrix<C64>);

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn scalar(z: C64) -> Self {
        Self(DMatrix::from_element(1, 1, z))
    }

    /// Builds from rows; panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let d = rows.len();
        assert!(rows.iter().all(|r| r.len() == d), "matrix must be square");
        Self(DMatrix::from_fn(d, d, |i, j| rows[i][j]))
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let d = rows.len();
        assert!(rows.iter().all(|r| r.len() == d), "matrix must be square");
        Self(DMatrix::from_fn(d, d, |i, j| C64::new(rows[i][j], 0.0)))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(dim, dim, f))
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let d = entries.len();
        Self::from_fn(d, |i, j| {
            if i == j {
                entries[i]
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    /// Entries drawn uniformly from the unit square in both parts.
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        Self::from_fn(dim, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        let x = Self::random(dim, rng);
        Self(&x.0 + x.0.adjoint())
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn inner(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<C64> {
        self.0
    }

    pub fn from_inner(m: DMatrix<C64>) -> Self {
        assert_eq!(m.nrows(), m.ncols(), "matrix must be square");
        Self(m)
    }

    /// Entrywise complex conjugate, i.e. `K M K`.
    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(&self.0 * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// Max absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.dist(&Self::identity(self.dim())) <= tol
    }

    pub fn try_inverse(&self) -> Result<Self, LinalgError> {
        self.0
            .clone()
            .try_inverse()
            .map(Self)
            .ok_or(LinalgError::Singular)
    }

    pub fn singular_values(&self) -> Vec<f64> {
        self.0.singular_values().iter().copied().collect()
    }

    /// Invertible when the smallest singular value exceeds the relative rank cutoff.
    pub fn is_invertible(&self) -> bool {
        let sv = self.singular_values();
        let max = sv.iter().copied().fold(0.0, f64::max);
        let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
        max > 0.0 && min > RANK_CUTOFF * max
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (self * &self.adjoint()).is_identity(tol)
    }

    pub fn block_diag(blocks: &[&CMatrix]) -> Self {
        let d: usize = blocks.iter().map(|b| b.dim()).sum();
        let mut out = DMatrix::zeros(d, d);
        let mut off = 0;
        for b in blocks {
            out.view_mut((off, off), (b.dim(), b.dim())).copy_from(&b.0);
            off += b.dim();
        }
        Self(out)
    }

    /// `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn block2(a: &CMatrix, b: &CMatrix, c: &CMatrix, d: &CMatrix) -> Self {
        let n = a.dim();
        assert!([b.dim(), c.dim(), d.dim()].iter().all(|&m| m == n));
        let mut out = DMatrix::zeros(2 * n, 2 * n);
        out.view_mut((0, 0), (n, n)).copy_from(&a.0);
        out.view_mut((0, n), (n, n)).copy_from(&b.0);
        out.view_mut((n, 0), (n, n)).copy_from(&c.0);
        out.view_mut((n, n), (n, n)).copy_from(&d.0);
        Self(out)
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.0[(i, j)]).collect())
            .collect()
    }

    pub fn matvec(&self, v: &[C64]) -> Result<Vec<C64>, LinalgError> {
        if v.len() != self.dim() {
            return Err(LinalgError::DimMismatch(self.dim(), v.len()));
        }
        let out = &self.0 * DVector::from_column_slice(v);
        Ok(out.iter().copied().collect())
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, idx: (usize, usize)) -> &mut C64 {
        &mut self.0[idx]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        CMatrix(&self.0 * &rhs.0)
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        CMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        CMatrix(&self.0 - &rhs.0)
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix(-&self.0)
    }
}

/// `K^e` applied to a matrix: conjugate when `grade == 1`.
pub fn conj_pow(m: &CMatrix, grade: u8) -> CMatrix {
    if grade == 1 {
        m.conj()
    } else {
        m.clone()
    }
}

pub fn conj(m: &CMatrix) -> CMatrix {
    m.conj()
}

/// The graded operator `matrix o K^grade`.
#[derive(Debug, Clone, PartialEq)]
pub struct MagOp {
    pub matrix: CMatrix,
    pub grade: u8,
}

impl MagOp {
    pub fn new(matrix: CMatrix, grade: u8) -> Self {
        debug_assert!(grade <= 1);
        Self { matrix, grade }
    }

    pub fn linear(matrix: CMatrix) -> Self {
        Self::new(matrix, 0)
    }

    pub fn antilinear(matrix: CMatrix) -> Self {
        Self::new(matrix, 1)
    }

    pub fn identity(dim: usize) -> Self {
        Self::linear(CMatrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn compose(&self, rhs: &MagOp) -> Result<MagOp, LinalgError> {
        if self.dim() != rhs.dim() {
            return Err(LinalgError::DimMismatch(self.dim(), rhs.dim()));
        }
        Ok(MagOp {
            matrix: &self.matrix * &conj_pow(&rhs.matrix, self.grade),
            grade: self.grade ^ rhs.grade,
        })
    }

    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>, LinalgError> {
        if self.grade == 1 {
            let cv: Vec<C64> = v.iter().map(|z| z.conj()).collect();
            self.matrix.matvec(&cv)
        } else {
            self.matrix.matvec(v)
        }
    }

    /// `k`-fold composition; `k = 0` gives the identity.
    pub fn power(&self, k: usize) -> MagOp {
        let mut acc = MagOp::identity(self.dim());
        for _ in 0..k {
            acc = acc.compose(self).expect("same dimension");
        }
        acc
    }

    pub fn dist(&self, other: &MagOp) -> f64 {
        if self.grade != other.grade || self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.matrix.dist(&other.matrix)
    }
}

pub fn compose(a: &MagOp, b: &MagOp) -> Result<MagOp, LinalgError> {
    a.compose(b)
}

pub fn apply(op: &MagOp, v: &[C64]) -> Result<Vec<C64>, LinalgError> {
    op.apply(v)
}

pub fn power(op: &MagOp, k: usize) -> MagOp {
    op.power(k)
}

/// Orthonormal basis of the null space of a real matrix, one vector per
/// returned entry. Singular values at or below `RANK_CUTOFF * sigma_max`
/// count as zero.
pub fn real_nullspace(a: &DMatrix<f64>) -> Vec<DVector<f64>> {
    let cols = a.ncols();
    if cols == 0 {
        return Vec::new();
    }
    // Pad to at least as many rows as columns so the SVD returns a full V.
    let padded;
    let a = if a.nrows() < cols {
        padded = {
            let mut p = DMatrix::zeros(cols, cols);
            p.view_mut((0, 0), (a.nrows(), cols)).copy_from(a);
            p
        };
        &padded
    } else {
        a
    };
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let max = svd.singular_values.iter().copied().fold(0.0, f64::max);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| max == 0.0 || s <= RANK_CUTOFF * max)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect()
}
