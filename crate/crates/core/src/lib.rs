//! Irreducible corepresentations of finite magnetic groups.
//!
//! A magnetic group is a finite group `G` with a surjective grading
//! `phi: G -> Z/2`. Its representations send the kernel `G0` to linear and
//! the other coset to antilinear operators. This crate
//!
//! * builds and validates groups and gradings ([`group`]),
//! * works with graded operators `M o K^e` ([`linalg`]),
//! * finds the irreducibles of `G0`, their conjugates and Wigner types
//!   ([`rep`]),
//! * constructs induced and Wigner corepresentations, endomorphism algebras,
//!   morphism spaces and decompositions ([`corep`], [`classify`]),
//! * reads and writes `.mgrp` / `.corep` files and renders tables ([`format`],
//!   [`report`]).
//!
//! ```
//! use std::sync::Arc;
//! use magrep::{classify, BuiltinKind, MagneticGroup, WignerType};
//!
//! let q8 = Arc::new(MagneticGroup::builtin(BuiltinKind::Quaternion, None).unwrap());
//! let cls = classify(&q8, 0).unwrap();
//! let kinds: Vec<_> = cls.classes.iter().map(|c| (c.kind, c.dim())).collect();
//! assert_eq!(kinds[1], (WignerType::Quaternionic, 2));
//! ```

pub mod classify;
pub mod corep;
pub mod format;
pub mod group;
pub mod linalg;
pub mod rep;
pub mod report;

use thiserror::Error;

pub use classify::{classify, Classification, WignerClass};
pub use corep::{
    decompose, endo_algebra, frobenius_dims, from_cyclic_generator, induce, intertwiner_corep,
    is_irreducible_corep, regular_corep, restrict, validate, wigner_build, Corep, CorepError,
    DecompositionReport, EndoAlgebra, ValidationReport,
};
pub use format::{FormatError, GroupRef};
pub use group::{BuiltinKind, FiniteGroup, GroupError, MagneticGroup};
pub use linalg::{CMatrix, LinalgError, MagOp, C64};
pub use rep::{
    char_inner, character, conjugate_rep, intertwiner, irreps, is_irreducible_rep,
    wigner_indicator, Character, Rep, RepError, WignerIndicator, WignerType,
};

/// Any error the library can produce.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Corep(#[from] CorepError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

impl Error {
    /// True for failures of the numerical machinery rather than of the input.
    pub fn is_numerical(&self) -> bool {
        let corep_numerical = |e: &CorepError| {
            matches!(
                e,
                CorepError::Rep(_)
                    | CorepError::NonIntegralMultiplicity { .. }
                    | CorepError::IncompleteDecomposition { .. }
                    | CorepError::CertificationFailed { .. }
                    | CorepError::IndicatorMismatch(_)
            )
        };
        match self {
            Error::Rep(_) | Error::Linalg(_) => true,
            Error::Corep(e) => corep_numerical(e),
            Error::Format(FormatError::Corep(e)) => corep_numerical(e),
            _ => false,
        }
    }
}
