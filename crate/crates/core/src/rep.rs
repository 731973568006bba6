//! Complex representations of the kernel `G0`.
//!
//! Matrices are keyed by ambient element index so that `a^{-1} g a` is a
//! table lookup. Irreducibles are found numerically: the commutant of the
//! regular representation is sampled by group-averaging a random Hermitian
//! matrix, and its eigenspaces split the space until every block has
//! character norm one.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::group::MagneticGroup;
use crate::linalg::{CMatrix, C64};

/// Tolerance for identifying characters and integrality.
pub const CHAR_TOL: f64 = 1e-6;
/// Tolerance for structural identities (homomorphism laws, intertwining).
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Fresh random samples tried before a randomized step gives up.
pub const RETRY_BUDGET: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("expected {expected} matrices (one per kernel element), got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("matrix for element {g} has dimension {found}, expected {expected}")]
    DimMismatch {
        g: usize,
        expected: usize,
        found: usize,
    },
    #[error("identity is not mapped to I (residual {residual:.3e})")]
    IdentityNotTrivial { residual: f64 },
    #[error("rho({g})rho({h}) != rho({g}*{h}) (residual {residual:.3e})")]
    NotHomomorphism { g: usize, h: usize, residual: f64 },
    #[error("could not split a reducible block after {RETRY_BUDGET} random samples")]
    SplitFailure,
    #[error("irreducible dimensions give sum d^2 = {found}, expected |G0| = {expected}")]
    Incomplete { expected: usize, found: usize },
    #[error("group averaging stayed degenerate after {RETRY_BUDGET} samples despite matching characters")]
    AveragingDegenerate,
    #[error("representation is not irreducible")]
    NotIrreducible,
    #[error("S*conj(S)*rho(a^2)^-1 is not scalar (residual {residual:.3e})")]
    NotScalar { residual: f64 },
    #[error("S*conj(S)*rho(a^2)^-1 has non-real scalar (imaginary part {im:.3e})")]
    ComplexScalar { im: f64 },
}

/// A linear representation of `G0`.
#[derive(Debug, Clone)]
pub struct Rep {
    mg: Arc<MagneticGroup>,
    dim: usize,
    mats: Vec<CMatrix>,
}

impl Rep {
    /// Validates that `mats` (in kernel order) form a homomorphism.
    pub fn new(mg: Arc<MagneticGroup>, mats: Vec<CMatrix>) -> Result<Self, RepError> {
        let rep = Self::from_parts(mg, mats)?;
        rep.check()?;
        Ok(rep)
    }

    pub fn from_fn(
        mg: Arc<MagneticGroup>,
        mut f: impl FnMut(usize) -> CMatrix,
    ) -> Result<Self, RepError> {
        let mats = mg.kernel().iter().map(|&g| f(g)).collect();
        Self::new(mg, mats)
    }

    /// Shape checks only.
    pub(crate) fn from_parts(mg: Arc<MagneticGroup>, mats: Vec<CMatrix>) -> Result<Self, RepError> {
        let expected = mg.kernel().len();
        if mats.len() != expected {
            return Err(RepError::WrongLength {
                expected,
                found: mats.len(),
            });
        }
        let dim = mats[0].dim();
        for (m, &g) in mats.iter().zip(mg.kernel()) {
            if m.dim() != dim {
                return Err(RepError::DimMismatch {
                    g,
                    expected: dim,
                    found: m.dim(),
                });
            }
        }
        Ok(Self { mg, dim, mats })
    }

    pub fn trivial(mg: Arc<MagneticGroup>) -> Self {
        let mats = vec![CMatrix::identity(1); mg.kernel().len()];
        Self { mg, dim: 1, mats }
    }

    /// Left-regular representation of `G0` on `C[G0]`, basis in kernel order.
    pub fn regular(mg: Arc<MagneticGroup>) -> Self {
        let k = mg.kernel();
        let n = k.len();
        let mats = k
            .iter()
            .map(|&g| {
                let mut p = CMatrix::zeros(n);
                for (col, &h) in k.iter().enumerate() {
                    let row = mg.kernel_position(mg.mul(g, h)).expect("kernel is closed");
                    p[(row, col)] = C64::new(1.0, 0.0);
                }
                p
            })
            .collect();
        Self { mg, dim: n, mats }
    }

    pub fn mg(&self) -> &Arc<MagneticGroup> {
        &self.mg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Image of the kernel element `g` (ambient index). Panics if `g` is not in `G0`.
    pub fn matrix(&self, g: usize) -> &CMatrix {
        let pos = self
            .mg
            .kernel_position(g)
            .unwrap_or_else(|| panic!("element {g} is not in the kernel"));
        &self.mats[pos]
    }

    /// Matrices in kernel order.
    pub fn matrices(&self) -> &[CMatrix] {
        &self.mats
    }

    /// Largest homomorphism residual over all kernel pairs.
    pub fn residual(&self) -> f64 {
        let mg = &self.mg;
        let mut worst = self.mats[0].dist(&CMatrix::identity(self.dim));
        for &g in mg.kernel() {
            for &h in mg.kernel() {
                let r = (self.matrix(g) * self.matrix(h)).dist(self.matrix(mg.mul(g, h)));
                worst = worst.max(r);
            }
        }
        worst
    }

    fn check(&self) -> Result<(), RepError> {
        let residual = self.mats[0].dist(&CMatrix::identity(self.dim));
        if residual > RESIDUAL_TOL {
            return Err(RepError::IdentityNotTrivial { residual });
        }
        let mg = &self.mg;
        for &g in mg.kernel() {
            for &h in mg.kernel() {
                let residual = (self.matrix(g) * self.matrix(h)).dist(self.matrix(mg.mul(g, h)));
                if residual > RESIDUAL_TOL {
                    return Err(RepError::NotHomomorphism { g, h, residual });
                }
            }
        }
        Ok(())
    }

    pub fn is_unitary(&self) -> bool {
        self.mats.iter().all(|m| m.is_unitary(RESIDUAL_TOL))
    }

    /// Equivalent unitary representation, by averaging the standard inner
    /// product over `G0` and changing to an orthonormal basis for it.
    pub fn unitarized(&self) -> Self {
        let n = self.mats.len() as f64;
        let mut gram = DMatrix::<C64>::zeros(self.dim, self.dim);
        for m in &self.mats {
            gram += m.inner().adjoint() * m.inner();
        }
        gram /= C64::new(n, 0.0);
        let chol = gram
            .cholesky()
            .expect("averaged Gram matrix is positive definite");
        let l_adj = chol.l().adjoint();
        let l_adj_inv = l_adj
            .clone()
            .try_inverse()
            .expect("Cholesky factor is invertible");
        let mats = self
            .mats
            .iter()
            .map(|m| CMatrix::from_inner(&l_adj * m.inner() * &l_adj_inv))
            .collect();
        Self {
            mg: self.mg.clone(),
            dim: self.dim,
            mats,
        }
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert!(Arc::ptr_eq(&self.mg, &other.mg) || self.mg == other.mg);
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| CMatrix::block_diag(&[a, b]))
            .collect();
        Rep {
            mg: self.mg.clone(),
            dim: self.dim + other.dim,
            mats,
        }
    }
}

/// Trace of a representation on each kernel element (kernel order).
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    values: Vec<C64>,
}

impl Character {
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Max absolute difference of values.
    pub fn dist(&self, other: &Character) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn degree(&self) -> f64 {
        self.values[0].re
    }

    pub fn add(&self, other: &Character) -> Character {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

pub fn character(rep: &Rep) -> Character {
    Character {
        values: rep.mats.iter().map(CMatrix::trace).collect(),
    }
}

/// `(1/|G0|) sum_g x(g) conj(y(g))`.
pub fn char_inner(x: &Character, y: &Character) -> C64 {
    let n = x.values.len() as f64;
    x.values
        .iter()
        .zip(&y.values)
        .map(|(a, b)| a * b.conj())
        .sum::<C64>()
        / n
}

pub fn is_irreducible_rep(rep: &Rep) -> bool {
    let chi = character(rep);
    (char_inner(&chi, &chi) - 1.0).norm() <= CHAR_TOL
}

/// `rho*(g) = conj(rho(a^{-1} g a))`.
pub fn conjugate_rep(rep: &Rep) -> Rep {
    let mg = rep.mg.clone();
    let mats = mg
        .kernel()
        .iter()
        .map(|&g| rep.matrix(mg.conjugate_by_a(g)).conj())
        .collect();
    Rep {
        mg,
        dim: rep.dim,
        mats,
    }
}

/// A nonzero `S` with `S r2(g) = r1(g) S` for every kernel `g`, or `None`
/// when the characters differ. `S` is the group average of
/// `r1(g) X r2(g)^{-1}` over a random `X`.
pub fn intertwiner(r1: &Rep, r2: &Rep, seed: u64) -> Result<Option<CMatrix>, RepError> {
    if r1.dim != r2.dim || character(r1).dist(&character(r2)) > CHAR_TOL {
        return Ok(None);
    }
    let mg = &r1.mg;
    let scale = C64::new(1.0 / mg.kernel().len() as f64, 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let x = CMatrix::random(r1.dim, &mut rng);
        let mut s = CMatrix::zeros(r1.dim);
        for &g in mg.kernel() {
            s = &s + &(&(r1.matrix(g) * &x) * r2.matrix(mg.inv(g)));
        }
        let s = s.scale(scale);
        if s.max_abs() >= CHAR_TOL {
            return Ok(Some(s));
        }
    }
    Err(RepError::AveragingDegenerate)
}

/// The three Wigner types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WignerType {
    Real,
    Complex,
    Quaternionic,
}

impl WignerType {
    pub fn tag(self) -> &'static str {
        match self {
            WignerType::Real => "R",
            WignerType::Complex => "C",
            WignerType::Quaternionic => "H",
        }
    }

    /// Real dimension of the endomorphism algebra of the irreducible corep.
    pub fn endo_dim(self) -> usize {
        match self {
            WignerType::Real => 1,
            WignerType::Complex => 2,
            WignerType::Quaternionic => 4,
        }
    }
}

/// `T: rho* -> rho` with `T conj(T) = +rho(a^2)` (real) or `-rho(a^2)` (quaternionic);
/// complex when `rho* !~ rho`.
#[derive(Debug, Clone, PartialEq)]
pub enum WignerIndicator {
    Complex,
    Real(CMatrix),
    Quaternionic(CMatrix),
}

impl WignerIndicator {
    pub fn kind(&self) -> WignerType {
        match self {
            WignerIndicator::Complex => WignerType::Complex,
            WignerIndicator::Real(_) => WignerType::Real,
            WignerIndicator::Quaternionic(_) => WignerType::Quaternionic,
        }
    }

    pub fn intertwiner(&self) -> Option<&CMatrix> {
        match self {
            WignerIndicator::Complex => None,
            WignerIndicator::Real(t) | WignerIndicator::Quaternionic(t) => Some(t),
        }
    }
}

pub fn wigner_indicator(rep: &Rep, seed: u64) -> Result<WignerIndicator, RepError> {
    if !is_irreducible_rep(rep) {
        return Err(RepError::NotIrreducible);
    }
    let conj = conjugate_rep(rep);
    // S conj(g) = rep(g) S, i.e. S: rho* -> rho
    let Some(s) = intertwiner(rep, &conj, seed)? else {
        return Ok(WignerIndicator::Complex);
    };
    // S is unique up to a scalar; fix it by making the first (near-)largest
    // entry equal to 1 so T does not depend on the sample.
    let max = s.max_abs();
    let pivot = s
        .inner()
        .transpose()
        .iter()
        .copied()
        .find(|z| z.norm() >= (1.0 - CHAR_TOL) * max)
        .expect("nonzero matrix has a pivot");
    let s = s.scale(pivot.inv());

    let mg = &rep.mg;
    let a2 = mg.mul(mg.a(), mg.a());
    let m = &(&s * &s.conj()) * rep.matrix(mg.inv(a2));
    let c = m.trace() / rep.dim as f64;
    let tol = RESIDUAL_TOL * c.norm().max(1.0);
    let residual = m.dist(&CMatrix::identity(rep.dim).scale(c));
    if residual > tol {
        return Err(RepError::NotScalar { residual });
    }
    if c.im.abs() > tol {
        return Err(RepError::ComplexScalar { im: c.im });
    }
    let t = s.scale_real(1.0 / c.re.abs().sqrt());
    Ok(if c.re > 0.0 {
        WignerIndicator::Real(t)
    } else {
        WignerIndicator::Quaternionic(t)
    })
}

/// All irreducible representations of `G0` up to isomorphism, unitary, in
/// canonical order (see [`irrep_sort_key`]).
pub fn irreps(mg: &Arc<MagneticGroup>, seed: u64) -> Result<Vec<Rep>, RepError> {
    let regular = Rep::regular(mg.clone());
    let n = regular.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut found: Vec<(Rep, Character)> = Vec::new();
    let mut stack = vec![DMatrix::<C64>::identity(n, n)];
    while let Some(basis) = stack.pop() {
        let block = restrict_to_subspace(&regular, &basis);
        if is_irreducible_rep(&block) {
            let chi = character(&block);
            if !found.iter().any(|(_, c)| c.dist(&chi) <= CHAR_TOL) {
                found.push((block, chi));
            }
            continue;
        }
        let parts = split_block(&block, &mut rng)?;
        stack.extend(parts.into_iter().rev().map(|v| &basis * v));
    }

    let total: usize = found.iter().map(|(r, _)| r.dim * r.dim).sum();
    if total != mg.kernel().len() {
        return Err(RepError::Incomplete {
            expected: mg.kernel().len(),
            found: total,
        });
    }
    let keyed = irrep_sort_key(mg);
    found.sort_by(|(_, x), (_, y)| keyed(x, y));
    Ok(found.into_iter().map(|(r, _)| r).collect())
}

/// `Q^dagger rho(g) Q` for an invariant subspace with orthonormal basis `Q`.
fn restrict_to_subspace(rep: &Rep, q: &DMatrix<C64>) -> Rep {
    let q_adj = q.adjoint();
    let mats = rep
        .mats
        .iter()
        .map(|m| CMatrix::from_inner(&q_adj * m.inner() * q))
        .collect();
    Rep {
        mg: rep.mg.clone(),
        dim: q.ncols(),
        mats,
    }
}

/// Eigenspaces of a random element of the commutant, as column blocks.
fn split_block(block: &Rep, rng: &mut ChaCha8Rng) -> Result<Vec<DMatrix<C64>>, RepError> {
    let mg = &block.mg;
    let d = block.dim;
    let scale = C64::new(1.0 / mg.kernel().len() as f64, 0.0);
    for _ in 0..RETRY_BUDGET {
        let h = CMatrix::random_hermitian(d, rng);
        let mut x = DMatrix::<C64>::zeros(d, d);
        for m in &block.mats {
            x += m.inner() * h.inner() * m.inner().adjoint();
        }
        x *= scale;
        // exact Hermitian symmetry for the eigensolver
        let x = (&x + x.adjoint()) * C64::new(0.5, 0.0);
        let eig = x.symmetric_eigen();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&i, &j| {
            eig.eigenvalues[i]
                .partial_cmp(&eig.eigenvalues[j])
                .unwrap_or(Ordering::Equal)
        });
        let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let diameter = vals[d - 1] - vals[0];
        let magnitude = vals.iter().map(|v| v.abs()).fold(1.0, f64::max);
        if diameter <= 1e-8 * magnitude {
            continue;
        }
        let gap = CHAR_TOL * diameter;
        let mut clusters: Vec<Vec<usize>> = vec![vec![order[0]]];
        for w in 1..d {
            if vals[w] - vals[w - 1] > gap {
                clusters.push(Vec::new());
            }
            clusters.last_mut().unwrap().push(order[w]);
        }
        if clusters.len() < 2 {
            continue;
        }
        return Ok(clusters
            .into_iter()
            .map(|cols| DMatrix::from_fn(d, cols.len(), |i, j| eig.eigenvectors[(i, cols[j])]))
            .collect());
    }
    Err(RepError::SplitFailure)
}

/// Canonical order of irreducible characters.
///
/// When `G0` is cyclic, characters are ordered by `l` where
/// `chi_l(gen) = exp(2 pi i l / |G0|)` and `gen` is the smallest-index
/// element of full order. Otherwise by degree, then lexicographically on
/// values with larger real (then imaginary) parts first.
pub fn irrep_sort_key(mg: &MagneticGroup) -> impl Fn(&Character, &Character) -> Ordering {
    let n = mg.kernel().len();
    let gen = mg
        .kernel()
        .iter()
        .position(|&g| mg.group().element_order(g) == n);
    move |x: &Character, y: &Character| match gen {
        Some(pos) => cyclic_index(x.values[pos], n).cmp(&cyclic_index(y.values[pos], n)),
        None => {
            let key = |c: &Character| -> Vec<(i64, i64)> {
                c.values
                    .iter()
                    .map(|z| (-(z.re * 1e6).round() as i64, -(z.im * 1e6).round() as i64))
                    .collect()
            };
            (x.degree().round() as i64)
                .cmp(&(y.degree().round() as i64))
                .then_with(|| key(x).cmp(&key(y)))
        }
    }
}

/// `l` with `z = exp(2 pi i l / n)`.
pub fn cyclic_index(z: C64, n: usize) -> usize {
    let l = (z.arg() / TAU * n as f64).round() as i64;
    l.rem_euclid(n as i64) as usize
}
