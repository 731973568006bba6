//! Morphism spaces between corepresentations.
//!
//! A linear `T: V1 -> V2` is a morphism iff `T M1(g) = M2(g) K^phi(g)(T)` for
//! every `g`. The antilinear constraints are only real-linear in `T`, so
//! every Hom space here is solved as a real null space over the stacked real
//! and imaginary parts of `T`, using a generating set of `G`.

use nalgebra::{DMatrix, DVector};

use super::{induce, restrict, Corep, CorepError};
use crate::linalg::{real_nullspace, CMatrix, C64};
use crate::rep::{char_inner, character, Rep, WignerType, CHAR_TOL};

/// A (possibly rectangular) complex matrix `V1 -> V2`.
pub type LinearMap = DMatrix<C64>;

/// Real basis of `Hom_(G,phi)(c1, c2)`.
pub fn hom_basis(c1: &Corep, c2: &Corep) -> Vec<LinearMap> {
    assert!(
        c1.mg() == c2.mg(),
        "Hom needs both coreps over the same group"
    );
    let (d1, d2) = (c1.dim(), c2.dim());
    let cells = d1 * d2;
    let gens = c1.mg().generators();
    let mut system = DMatrix::<f64>::zeros(2 * cells * gens.len().max(1), 2 * cells);

    for (block, &g) in gens.iter().enumerate() {
        let (m1, op2) = (&c1.op(g).matrix, c2.op(g));
        let m2 = &op2.matrix;
        let off = 2 * cells * block;
        // column for T = w E_ij, w in {1, i}; residual R = T M1 - M2 K^e(T)
        for i in 0..d2 {
            for j in 0..d1 {
                for (part, w) in [C64::new(1.0, 0.0), C64::i()].into_iter().enumerate() {
                    let col = part * cells + i * d1 + j;
                    let w_conj = if op2.grade == 1 { w.conj() } else { w };
                    let mut put = |p: usize, q: usize, z: C64| {
                        let row = off + p * d1 + q;
                        system[(row, col)] += z.re;
                        system[(row + cells, col)] += z.im;
                    };
                    for q in 0..d1 {
                        put(i, q, w * m1[(j, q)]);
                    }
                    for p in 0..d2 {
                        put(p, j, -(w_conj * m2[(p, i)]));
                    }
                }
            }
        }
    }
    real_nullspace(&system)
        .into_iter()
        .map(|v| vector_to_map(&v, d2, d1))
        .collect()
}

fn vector_to_map(v: &DVector<f64>, rows: usize, cols: usize) -> LinearMap {
    let cells = rows * cols;
    DMatrix::from_fn(rows, cols, |i, j| {
        C64::new(v[i * cols + j], v[cells + i * cols + j])
    })
}

/// Real endomorphism algebra of a corep.
#[derive(Debug, Clone)]
pub struct EndoAlgebra {
    pub real_dim: usize,
    /// `R`, `C` or `H` when the algebra is a division algebra, i.e. the
    /// corep is irreducible.
    pub type_tag: Option<WignerType>,
    pub basis: Vec<LinearMap>,
}

pub fn endo_algebra(c: &Corep) -> EndoAlgebra {
    let basis = hom_basis(c, c);
    let real_dim = basis.len();
    let type_tag = match real_dim {
        1 => Some(WignerType::Real),
        2 if is_division_algebra(&basis, c.dim()) => Some(WignerType::Complex),
        4 if is_division_algebra(&basis, c.dim()) => Some(WignerType::Quaternionic),
        _ => None,
    };
    EndoAlgebra {
        real_dim,
        type_tag,
        basis,
    }
}

/// An algebra `R1 + V` containing the identity is `C` or `H` exactly when
/// its trace-free part `V` squares into negative scalars: `{v, w} = -2 q(v, w) I`
/// with `q` positive definite. Products such as `R x R` or `M2(R)` fail
/// because some trace-free element squares to a positive scalar or to a
/// non-scalar.
fn is_division_algebra(basis: &[LinearMap], d: usize) -> bool {
    let k = basis.len();
    let mut trace_map = DMatrix::<f64>::zeros(2, k);
    for (j, b) in basis.iter().enumerate() {
        let t = b.trace();
        trace_map[(0, j)] = t.re;
        trace_map[(1, j)] = t.im;
    }
    let coeffs = real_nullspace(&trace_map);
    if coeffs.len() != k - 1 {
        return false;
    }
    let pure: Vec<LinearMap> = coeffs
        .iter()
        .map(|c| {
            basis
                .iter()
                .zip(c.iter())
                .fold(DMatrix::zeros(d, d), |acc, (b, &x)| {
                    acc + b * C64::new(x, 0.0)
                })
        })
        .collect();
    let scale = pure.iter().map(|v| v.norm_squared()).fold(0.0, f64::max) / d as f64;
    let tol = CHAR_TOL * scale.max(f64::MIN_POSITIVE);
    let id = DMatrix::<C64>::identity(d, d);
    let mut q = DMatrix::<f64>::zeros(k - 1, k - 1);
    for i in 0..k - 1 {
        for j in i..k - 1 {
            let anti = &pure[i] * &pure[j] + &pure[j] * &pure[i];
            let s = anti.trace() / d as f64;
            if max_norm(&(&anti - &id * s)) > tol || s.im.abs() > tol {
                return false;
            }
            q[(i, j)] = -s.re / 2.0;
            q[(j, i)] = -s.re / 2.0;
        }
    }
    q.symmetric_eigenvalues().iter().all(|&e| e > tol)
}

fn max_norm(m: &LinearMap) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `(true, Some(type))` iff the endomorphism algebra is `R`, `C` or `H`.
pub fn is_irreducible_corep(c: &Corep) -> (bool, Option<WignerType>) {
    let tag = endo_algebra(c).type_tag;
    (tag.is_some(), tag)
}

/// A nonzero morphism `c1 -> c2`, if one exists.
pub fn intertwiner_corep(c1: &Corep, c2: &Corep) -> Option<LinearMap> {
    hom_basis(c1, c2).into_iter().next()
}

/// Real dimensions of `Hom_(G,phi)(Ind rep, c)` and `Hom_G0(rep, Res c)`.
/// The second is twice the complex multiplicity `<chi_rep, chi_Res c>`.
pub fn frobenius_dims(rep: &Rep, c: &Corep) -> Result<(usize, usize), CorepError> {
    let left = hom_basis(&induce(rep)?, c).len();
    let inner = char_inner(&character(&restrict(c)), &character(rep));
    let complex_dim = inner.re.round();
    debug_assert!((inner - complex_dim).norm() <= CHAR_TOL);
    Ok((left, 2 * complex_dim as usize))
}

/// Applies a morphism-like map to check intertwining: max residual of
/// `T M1(g) - M2(g) K^phi(g)(T)` over all elements.
pub fn morphism_residual(t: &LinearMap, c1: &Corep, c2: &Corep) -> f64 {
    let mut worst: f64 = 0.0;
    for g in 0..c1.mg().order() {
        let (op1, op2) = (c1.op(g), c2.op(g));
        let kt = if op2.grade == 1 {
            t.map(|z| z.conj())
        } else {
            t.clone()
        };
        let r = t * op1.matrix.inner() - op2.matrix.inner() * kt;
        worst = worst.max(max_norm(&r));
    }
    worst
}

/// Square morphisms as [`CMatrix`] for convenience.
pub fn as_square(t: &LinearMap) -> CMatrix {
    CMatrix::from_inner(t.clone())
}
