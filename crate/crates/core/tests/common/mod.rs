#![allow(dead_code)]

use std::sync::Arc;

use magrep::{BuiltinKind, CMatrix, Corep, FiniteGroup, MagneticGroup, Rep, C64};
use nalgebra::DMatrix;

pub fn builtin(kind: BuiltinKind, param: Option<usize>) -> Arc<MagneticGroup> {
    Arc::new(MagneticGroup::builtin(kind, param).unwrap())
}

/// Q8, D2..D8 and the cyclic groups of order 4..12.
pub fn fixtures() -> Vec<Arc<MagneticGroup>> {
    let mut out = vec![builtin(BuiltinKind::Quaternion, None)];
    out.extend((2..=8).map(|n| builtin(BuiltinKind::Dihedral, Some(n))));
    out.extend((2..=6).map(|n| builtin(BuiltinKind::Cyclic, Some(2 * n))));
    out
}

/// `H x Z/2` graded by the second factor; element `(h, e)` has index `h + |H| e`.
pub fn times_z2(h: &FiniteGroup, name: &str) -> Arc<MagneticGroup> {
    let n = h.order();
    let mut table = vec![0; 4 * n * n];
    for x in 0..2 * n {
        for y in 0..2 * n {
            let (hx, ex) = (x % n, x / n);
            let (hy, ey) = (y % n, y / n);
            table[x * 2 * n + y] = h.mul(hx, hy) + n * ((ex + ey) % 2);
        }
    }
    let g = FiniteGroup::from_table(2 * n, table).unwrap();
    let bits = (0..2 * n).map(|x| (x / n) as u8).collect();
    Arc::new(MagneticGroup::new(g, bits).unwrap().named(name))
}

/// One row per real unknown of `T`, one column per real equation, built by
/// probing the constraint with unit inputs.
fn constraint_gram(
    d1: usize,
    d2: usize,
    blocks: &[(&DMatrix<C64>, &DMatrix<C64>, u8)],
) -> DMatrix<f64> {
    let cells = d1 * d2;
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(2 * cells);
    for k in 0..2 * cells {
        let mut t = DMatrix::<C64>::zeros(d2, d1);
        let unit = if k < cells {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 1.0)
        };
        t[((k % cells) / d1, (k % cells) % d1)] = unit;
        let mut col = Vec::new();
        for (m1, m2, grade) in blocks {
            let kt = if *grade == 1 {
                t.map(|z| z.conj())
            } else {
                t.clone()
            };
            let r = &t * *m1 - *m2 * kt;
            col.extend(r.iter().flat_map(|z| [z.re, z.im]));
        }
        columns.push(col);
    }
    let rows = columns[0].len();
    let a = DMatrix::from_fn(rows, 2 * cells, |i, j| columns[j][i]);
    a.transpose() * a
}

fn kernel_dim(gram: DMatrix<f64>) -> usize {
    let eig = gram.symmetric_eigenvalues();
    let top = eig.iter().cloned().fold(0.0, f64::max).max(1.0);
    eig.iter().filter(|&&e| e <= 1e-10 * top).count()
}

/// Real dimension of the space of `T` with `T c1(g) = c2(g) K^phi(g)(T)` for
/// every element `g`.
pub fn hom_dim_oracle(c1: &Corep, c2: &Corep) -> usize {
    let blocks: Vec<_> = (0..c1.mg().order())
        .map(|g| {
            (
                c1.op(g).matrix.inner(),
                c2.op(g).matrix.inner(),
                c1.op(g).grade,
            )
        })
        .collect();
    kernel_dim(constraint_gram(c1.dim(), c2.dim(), &blocks))
}

/// Real dimension of the kernel-group morphisms `r -> Res c`.
pub fn rep_hom_dim_oracle(r: &Rep, c: &Corep) -> usize {
    let blocks: Vec<_> = r
        .mg()
        .kernel()
        .iter()
        .map(|&g| (r.matrix(g).inner(), c.op(g).matrix.inner(), 0))
        .collect();
    kernel_dim(constraint_gram(r.dim(), c.dim(), &blocks))
}

pub fn close(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
    a.dim() == b.dim() && a.dist(b) <= tol
}

pub fn cis(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}
