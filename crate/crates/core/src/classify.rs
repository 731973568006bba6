//! Classification of irreducible corepresentations.
//!
//! Each irreducible of `G0` is tagged real, complex or quaternionic; complex
//! ones pair up with their conjugates, and each real/quaternionic irrep or
//! complex pair yields exactly one irreducible corep.

use std::sync::Arc;

use crate::corep::{wigner_build, Corep, CorepError};
use crate::group::MagneticGroup;
use crate::rep::{
    character, conjugate_rep, irreps, wigner_indicator, Character, Rep, WignerIndicator,
    WignerType, CHAR_TOL,
};

/// One isomorphism class of irreducible coreps.
#[derive(Debug, Clone)]
pub struct WignerClass {
    /// Indices into [`Classification::irreps`]; two for a complex pair, the
    /// smaller one first.
    pub labels: Vec<usize>,
    pub kind: WignerType,
    pub irrep: Rep,
    pub indicator: WignerIndicator,
    pub corep: Corep,
}

impl WignerClass {
    pub fn label(&self) -> String {
        match self.labels.as_slice() {
            [l] => irrep_label(*l),
            ls => format!(
                "{{{}}}",
                ls.iter()
                    .map(|&l| irrep_label(l))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }

    pub fn dim(&self) -> usize {
        self.corep.dim()
    }

    pub fn character(&self) -> Character {
        character(&self.irrep)
    }
}

pub fn irrep_label(index: usize) -> String {
    format!("χ{index}")
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub mg: Arc<MagneticGroup>,
    pub irreps: Vec<Rep>,
    pub classes: Vec<WignerClass>,
}

impl Classification {
    /// Sorted `(type, corep dimension)` pairs.
    pub fn type_multiset(&self) -> Vec<(WignerType, usize)> {
        let mut v: Vec<_> = self.classes.iter().map(|c| (c.kind, c.dim())).collect();
        v.sort();
        v
    }
}

pub fn classify(mg: &Arc<MagneticGroup>, seed: u64) -> Result<Classification, CorepError> {
    let irreps = irreps(mg, seed)?;
    let chars: Vec<Character> = irreps.iter().map(character).collect();
    let mut taken = vec![false; irreps.len()];
    let mut classes = Vec::new();
    for (i, rep) in irreps.iter().enumerate() {
        if taken[i] {
            continue;
        }
        taken[i] = true;
        let indicator = wigner_indicator(rep, seed)?;
        let mut labels = vec![i];
        if indicator == WignerIndicator::Complex {
            let conj = character(&conjugate_rep(rep));
            let j = (0..irreps.len())
                .find(|&j| j != i && chars[j].dist(&conj) <= CHAR_TOL)
                .expect("conjugate of an irreducible is an irreducible");
            taken[j] = true;
            labels.push(j);
            labels.sort_unstable();
        }
        let corep = wigner_build(rep, &indicator)?;
        classes.push(WignerClass {
            labels,
            kind: indicator.kind(),
            irrep: rep.clone(),
            indicator,
            corep,
        });
    }
    Ok(Classification {
        mg: mg.clone(),
        irreps,
        classes,
    })
}
