//! Corepresentations of a magnetic group `(G, phi)`.
//!
//! Every element is mapped to a graded operator whose grade equals `phi(g)`.
//! The matrix parts obey the twisted law
//! `M(gh) = M(g) * K^phi(g)(M(h))`, which is what [`validate`] checks.

mod decompose;
mod hom;

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{GroupError, MagneticGroup};
use crate::linalg::{conj_pow, CMatrix, MagOp};
use crate::rep::{conjugate_rep, Rep, RepError, WignerIndicator, WignerType, RESIDUAL_TOL};

pub use decompose::{decompose, DecompositionEntry, DecompositionReport};
pub use hom::{
    as_square, endo_algebra, frobenius_dims, hom_basis, intertwiner_corep, is_irreducible_corep,
    morphism_residual, EndoAlgebra, LinearMap,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorepError {
    #[error("expected {expected} operators (one per element), got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("operator for element {g} has dimension {found}, expected {expected}")]
    DimMismatch {
        g: usize,
        expected: usize,
        found: usize,
    },
    #[error("grade of element {g} does not match phi")]
    GradeMismatch { g: usize },
    #[error("no operator given or derivable for element {g}")]
    MissingElement { g: usize },
    #[error("corepresentation is invalid: {0}")]
    Invalid(ValidationReport),
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("(A conj(A))^n != I (residual {residual:.3e})")]
    ConstraintViolated { residual: f64 },
    #[error("indicator does not belong to this representation: {0}")]
    IndicatorMismatch(String),
    #[error("built corepresentation failed the irreducibility certificate (expected {expected:?}, endomorphism dimension {real_dim})")]
    CertificationFailed {
        expected: WignerType,
        real_dim: usize,
    },
    #[error("multiplicity {value} of {label} is not an integer")]
    NonIntegralMultiplicity { label: String, value: f64 },
    #[error("decomposition accounts for dimension {found}, corep has dimension {expected}")]
    IncompleteDecomposition { expected: usize, found: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One failed invariant found by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    GradeMismatch { g: usize, expected: u8, found: u8 },
    IdentityNotTrivial { residual: f64 },
    TwistedLaw { g: usize, h: usize, residual: f64 },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    /// Largest residual over the identity check and every twisted-law pair.
    pub max_residual: f64,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "max residual {:.3e}", self.max_residual)?;
        for v in &self.violations {
            match v {
                Violation::GradeMismatch { g, expected, found } => {
                    write!(f, "; element {g} has grade {found}, phi = {expected}")?
                }
                Violation::IdentityNotTrivial { residual } => write!(
                    f,
                    "; identity not mapped to (I, 0) (residual {residual:.3e})"
                )?,
                Violation::TwistedLaw { g, h, residual } => write!(
                    f,
                    "; twisted law fails at ({g}, {h}) (residual {residual:.3e})"
                )?,
            }
        }
        Ok(())
    }
}

/// A graded operator per group element.
#[derive(Debug, Clone)]
pub struct Corep {
    mg: Arc<MagneticGroup>,
    dim: usize,
    ops: Vec<MagOp>,
}

impl Corep {
    /// Shape checks only; call [`validate`] or [`Corep::validated`] for the laws.
    pub fn from_ops(mg: Arc<MagneticGroup>, ops: Vec<MagOp>) -> Result<Self, CorepError> {
        if ops.len() != mg.order() {
            return Err(CorepError::WrongLength {
                expected: mg.order(),
                found: ops.len(),
            });
        }
        let dim = ops[0].dim();
        if let Some(g) = ops.iter().position(|op| op.dim() != dim) {
            return Err(CorepError::DimMismatch {
                g,
                expected: dim,
                found: ops[g].dim(),
            });
        }
        Ok(Self { mg, dim, ops })
    }

    /// Fills in every element reachable from the given ones by the twisted
    /// law. Given entries are kept as-is, so inconsistencies between them
    /// surface in [`validate`]. The identity defaults to `(I, 0)`.
    pub fn generate(
        mg: Arc<MagneticGroup>,
        dim: usize,
        given: &[(usize, MagOp)],
    ) -> Result<Self, CorepError> {
        let n = mg.order();
        let mut ops: Vec<Option<MagOp>> = vec![None; n];
        for (g, op) in given {
            if op.dim() != dim {
                return Err(CorepError::DimMismatch {
                    g: *g,
                    expected: dim,
                    found: op.dim(),
                });
            }
            ops[*g] = Some(op.clone());
        }
        if ops[0].is_none() {
            ops[0] = Some(MagOp::identity(dim));
        }
        let seeds: Vec<usize> = given.iter().map(|(g, _)| *g).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&g| ops[g].is_some()).collect();
        while let Some(x) = queue.pop_front() {
            for &s in &seeds {
                let y = mg.mul(x, s);
                if ops[y].is_none() {
                    let next = ops[x].as_ref().unwrap().compose(ops[s].as_ref().unwrap());
                    ops[y] = Some(next.expect("equal dimensions"));
                    queue.push_back(y);
                }
            }
        }
        let ops = ops
            .into_iter()
            .enumerate()
            .map(|(g, op)| op.ok_or(CorepError::MissingElement { g }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_ops(mg, ops)
    }

    /// Extends kernel data and the image of `a` to all of `G`, writing each
    /// `g` outside the kernel as `a * (a^{-1} g)`.
    pub fn from_kernel_and_a(
        mg: Arc<MagneticGroup>,
        mut kernel: impl FnMut(usize) -> CMatrix,
        a_matrix: CMatrix,
    ) -> Self {
        let a_inv = mg.inv(mg.a());
        let mut kernel_ops: Vec<Option<CMatrix>> = vec![None; mg.order()];
        for &g in mg.kernel() {
            kernel_ops[g] = Some(kernel(g));
        }
        let ops = (0..mg.order())
            .map(|g| {
                if mg.phi(g) == 0 {
                    MagOp::linear(kernel_ops[g].clone().unwrap())
                } else {
                    let rest = kernel_ops[mg.mul(a_inv, g)].as_ref().unwrap();
                    MagOp::antilinear(&a_matrix * &rest.conj())
                }
            })
            .collect();
        Self {
            dim: a_matrix.dim(),
            mg,
            ops,
        }
    }

    pub fn validated(self) -> Result<Self, CorepError> {
        let report = validate(&self);
        if report.is_ok() {
            Ok(self)
        } else {
            Err(CorepError::Invalid(report))
        }
    }

    pub fn mg(&self) -> &Arc<MagneticGroup> {
        &self.mg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn op(&self, g: usize) -> &MagOp {
        &self.ops[g]
    }

    pub fn ops(&self) -> &[MagOp] {
        &self.ops
    }

    pub fn direct_sum(&self, other: &Corep) -> Corep {
        assert!(
            self.mg == other.mg,
            "direct sum needs the same magnetic group"
        );
        let ops = self
            .ops
            .iter()
            .zip(&other.ops)
            .map(|(x, y)| MagOp::new(CMatrix::block_diag(&[&x.matrix, &y.matrix]), x.grade))
            .collect();
        Corep {
            mg: self.mg.clone(),
            dim: self.dim + other.dim,
            ops,
        }
    }

    /// Same operators over the same group with a different distinguished `a`.
    pub fn with_group(&self, mg: Arc<MagneticGroup>) -> Corep {
        assert_eq!(mg.group(), self.mg.group());
        assert_eq!(mg.phi_bits(), self.mg.phi_bits());
        Corep {
            mg,
            dim: self.dim,
            ops: self.ops.clone(),
        }
    }
}

/// Checks grades, the identity, and the twisted law on every pair. Reports
/// the largest residual and the first offending pair.
pub fn validate(c: &Corep) -> ValidationReport {
    let mg = &c.mg;
    let mut report = ValidationReport::default();
    for (g, op) in c.ops.iter().enumerate() {
        if op.grade != mg.phi(g) {
            report.violations.push(Violation::GradeMismatch {
                g,
                expected: mg.phi(g),
                found: op.grade,
            });
        }
    }
    let id = c.ops[0].dist(&MagOp::identity(c.dim));
    report.max_residual = if id.is_finite() { id } else { f64::MAX };
    if id > RESIDUAL_TOL {
        report
            .violations
            .push(Violation::IdentityNotTrivial { residual: id });
    }
    let mut first: Option<Violation> = None;
    for g in 0..mg.order() {
        let mg_ = &c.ops[g].matrix;
        for h in 0..mg.order() {
            let expect = mg_ * &conj_pow(&c.ops[h].matrix, mg.phi(g));
            let residual = c.ops[mg.mul(g, h)].matrix.dist(&expect);
            report.max_residual = report.max_residual.max(residual);
            if residual > RESIDUAL_TOL && first.is_none() {
                first = Some(Violation::TwistedLaw { g, h, residual });
            }
        }
    }
    report.violations.extend(first);
    report
}

/// `1 -> (A, 1)` on `(Z/2n, mod 2)`, requiring `(A conj(A))^n = I`.
pub fn from_cyclic_generator(n: usize, a: CMatrix) -> Result<Corep, CorepError> {
    let mg = Arc::new(MagneticGroup::builtin(
        crate::group::BuiltinKind::Cyclic,
        Some(2 * n),
    )?);
    if !a.is_invertible() {
        return Err(CorepError::NotInvertible);
    }
    let gen = MagOp::antilinear(a);
    let residual = gen.power(2 * n).matrix.dist(&CMatrix::identity(gen.dim()));
    if residual > RESIDUAL_TOL {
        return Err(CorepError::ConstraintViolated { residual });
    }
    let mut ops = Vec::with_capacity(2 * n);
    let mut acc = MagOp::identity(gen.dim());
    for _ in 0..2 * n {
        ops.push(acc.clone());
        acc = acc.compose(&gen).expect("same dimension");
    }
    Corep::from_ops(mg, ops)?.validated()
}

/// `C[G, phi]`: permutation matrices of left multiplication, graded by `phi`.
pub fn regular_corep(mg: &Arc<MagneticGroup>) -> Corep {
    let n = mg.order();
    let ops = (0..n)
        .map(|g| {
            let mut p = CMatrix::zeros(n);
            for h in 0..n {
                p[(mg.mul(g, h), h)] = 1.0.into();
            }
            MagOp::new(p, mg.phi(g))
        })
        .collect();
    Corep {
        mg: mg.clone(),
        dim: n,
        ops,
    }
}

pub fn restrict(c: &Corep) -> Rep {
    let mats =
        c.mg.kernel()
            .iter()
            .map(|&g| c.ops[g].matrix.clone())
            .collect();
    Rep::from_parts(c.mg.clone(), mats).expect("corep shapes are consistent")
}

/// Induced corep on `V + aV`: kernel elements act by `diag(rho, rho*)` and
/// `a` by `[[0, rho(a^2)], [I, 0]] o K`.
pub fn induce(rep: &Rep) -> Result<Corep, CorepError> {
    let mg = rep.mg().clone();
    let conj = conjugate_rep(rep);
    let d = rep.dim();
    let a2 = mg.mul(mg.a(), mg.a());
    let a_matrix = CMatrix::block2(
        &CMatrix::zeros(d),
        rep.matrix(a2),
        &CMatrix::identity(d),
        &CMatrix::zeros(d),
    );
    Corep::from_kernel_and_a(
        mg,
        |g| CMatrix::block_diag(&[rep.matrix(g), conj.matrix(g)]),
        a_matrix,
    )
    .validated()
}

/// The irreducible corep attached to an irreducible `rep` of the given type.
pub fn wigner_build(rep: &Rep, ind: &WignerIndicator) -> Result<Corep, CorepError> {
    let mg = rep.mg().clone();
    let d = rep.dim();
    if let Some(t) = ind.intertwiner() {
        if t.dim() != d {
            return Err(CorepError::IndicatorMismatch(format!(
                "intertwiner has dimension {}, representation {d}",
                t.dim()
            )));
        }
    }
    let built = match ind {
        WignerIndicator::Complex => induce(rep)?,
        WignerIndicator::Real(t) => {
            Corep::from_kernel_and_a(mg, |g| rep.matrix(g).clone(), t.clone())
                .validated()
                .map_err(|e| CorepError::IndicatorMismatch(e.to_string()))?
        }
        WignerIndicator::Quaternionic(t) => {
            let z = CMatrix::zeros(d);
            let a_matrix = CMatrix::block2(&z, &-t, t, &z);
            Corep::from_kernel_and_a(
                mg,
                |g| CMatrix::block_diag(&[rep.matrix(g), rep.matrix(g)]),
                a_matrix,
            )
            .validated()
            .map_err(|e| CorepError::IndicatorMismatch(e.to_string()))?
        }
    };
    let expected = ind.kind();
    let endo = endo_algebra(&built);
    if endo.type_tag != Some(expected) {
        return Err(CorepError::CertificationFailed {
            expected,
            real_dim: endo.real_dim,
        });
    }
    Ok(built)
}
