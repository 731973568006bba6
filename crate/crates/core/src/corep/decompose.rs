use std::fmt;

use super::hom::hom_basis;
use super::{Corep, CorepError};
use crate::classify::classify;
use crate::rep::{WignerType, CHAR_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionEntry {
    /// Label of the irreducible class, e.g. `χ0` or `{χ1,χ3}`.
    pub label: String,
    pub labels: Vec<usize>,
    pub kind: WignerType,
    /// Dimension of the irreducible corep.
    pub dim: usize,
    pub multiplicity: usize,
}

/// Multiplicity of every irreducible class in a corep, including zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionReport {
    pub dim: usize,
    pub entries: Vec<DecompositionEntry>,
    /// Largest distance of a computed multiplicity from its integer.
    pub residual: f64,
}

impl DecompositionReport {
    pub fn nonzero(&self) -> impl Iterator<Item = &DecompositionEntry> {
        self.entries.iter().filter(|e| e.multiplicity > 0)
    }

    pub fn total_dim(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity * e.dim).sum()
    }
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .map(|e| {
                format!(
                    "{}x[{}, {}, dim {}]",
                    e.multiplicity,
                    e.label,
                    e.kind.tag(),
                    e.dim
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Splits `c` into irreducibles: the multiplicity of `W` is
/// `dim_R Hom(W, c) / dim_R End(W)`.
pub fn decompose(c: &Corep, seed: u64) -> Result<DecompositionReport, CorepError> {
    let cls = classify(c.mg(), seed)?;
    let mut entries = Vec::with_capacity(cls.classes.len());
    let mut residual: f64 = 0.0;
    for class in &cls.classes {
        let hom = hom_basis(&class.corep, c).len();
        let value = hom as f64 / class.kind.endo_dim() as f64;
        let multiplicity = value.round();
        let off = (value - multiplicity).abs();
        residual = residual.max(off);
        if off > CHAR_TOL {
            return Err(CorepError::NonIntegralMultiplicity {
                label: class.label(),
                value,
            });
        }
        entries.push(DecompositionEntry {
            label: class.label(),
            labels: class.labels.clone(),
            kind: class.kind,
            dim: class.dim(),
            multiplicity: multiplicity as usize,
        });
    }
    let report = DecompositionReport {
        dim: c.dim(),
        entries,
        residual,
    };
    if report.total_dim() != c.dim() {
        return Err(CorepError::IncompleteDecomposition {
            expected: c.dim(),
            found: report.total_dim(),
        });
    }
    Ok(report)
}
