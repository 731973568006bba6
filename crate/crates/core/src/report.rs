//! Text tables and JSON documents for classifications and decompositions.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::classify::{irrep_label, Classification};
use crate::corep::{Corep, DecompositionReport};
use crate::linalg::{CMatrix, C64};

/// Values this close to zero print as zero.
const CLEAN: f64 = 1e-12;

fn clean(x: f64) -> f64 {
    if x.abs() < CLEAN {
        0.0
    } else {
        x
    }
}

fn pair(z: C64) -> [f64; 2] {
    [clean(z.re), clean(z.im)]
}

fn num(x: f64) -> String {
    let s = format!("{:.6}", clean(x));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Short human form of a complex number: `1`, `-i`, `0.5+0.866025i`.
pub fn format_complex(z: C64) -> String {
    let (re, im) = (num(z.re), num(z.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".into(),
        ("0", "-1") => "-i".into(),
        ("0", _) => format!("{im}i"),
        (_, "1") => format!("{re}+i"),
        (_, "-1") => format!("{re}-i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

/// Rows of short complex numbers, e.g. `[[0, -1], [1, 0]]`.
impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .into_iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.into_iter()
                        .map(format_complex)
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[derive(Debug, Serialize)]
pub struct OpDoc {
    pub element: usize,
    pub grade: u8,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Serialize)]
pub struct ClassDoc {
    pub labels: Vec<String>,
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub dim: usize,
    pub character: Vec<[f64; 2]>,
    pub matrices: Vec<OpDoc>,
}

#[derive(Debug, Serialize)]
pub struct ClassificationDoc {
    pub name: String,
    pub order: usize,
    pub kernel: Vec<usize>,
    pub a: usize,
    pub classes: Vec<ClassDoc>,
}

fn matrix_doc(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    m.rows()
        .into_iter()
        .map(|r| r.into_iter().map(pair).collect())
        .collect()
}

pub fn corep_matrices(c: &Corep) -> Vec<OpDoc> {
    c.ops()
        .iter()
        .enumerate()
        .map(|(g, op)| OpDoc {
            element: g,
            grade: op.grade,
            matrix: matrix_doc(&op.matrix),
        })
        .collect()
}

pub fn classification_doc(cls: &Classification) -> ClassificationDoc {
    ClassificationDoc {
        name: cls.mg.name().to_string(),
        order: cls.mg.order(),
        kernel: cls.mg.kernel().to_vec(),
        a: cls.mg.a(),
        classes: cls
            .classes
            .iter()
            .map(|c| ClassDoc {
                labels: c.labels.iter().map(|&l| irrep_label(l)).collect(),
                kind: c.kind.tag(),
                dim: c.dim(),
                character: c.character().values().iter().copied().map(pair).collect(),
                matrices: corep_matrices(&c.corep),
            })
            .collect(),
    }
}

pub fn classification_json(cls: &Classification) -> String {
    serde_json::to_string_pretty(&classification_doc(cls)).expect("serializable")
}

pub fn classification_table(cls: &Classification) -> String {
    let mg = &cls.mg;
    let mut out = String::new();
    writeln!(
        out,
        "magnetic group {}: order {}, kernel {:?}, a = {}",
        if mg.name().is_empty() {
            "(unnamed)"
        } else {
            mg.name()
        },
        mg.order(),
        mg.kernel(),
        mg.a()
    )
    .unwrap();
    writeln!(
        out,
        "{:<12} {:<4} {:<4} character on kernel",
        "label", "type", "dim"
    )
    .unwrap();
    for c in &cls.classes {
        let chars: Vec<String> = c
            .character()
            .values()
            .iter()
            .map(|&z| format_complex(z))
            .collect();
        writeln!(
            out,
            "{:<12} {:<4} {:<4} {}",
            c.label(),
            c.kind.tag(),
            c.dim(),
            chars.join(", ")
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
struct EntryDoc<'a> {
    labels: Vec<String>,
    label: &'a str,
    #[serde(rename = "type")]
    kind: &'static str,
    dim: usize,
    multiplicity: usize,
}

#[derive(Debug, Serialize)]
struct DecompositionDoc<'a> {
    dim: usize,
    residual: f64,
    entries: Vec<EntryDoc<'a>>,
}

pub fn decomposition_json(rep: &DecompositionReport) -> String {
    let doc = DecompositionDoc {
        dim: rep.dim,
        residual: rep.residual,
        entries: rep
            .entries
            .iter()
            .map(|e| EntryDoc {
                labels: e.labels.iter().map(|&l| irrep_label(l)).collect(),
                label: &e.label,
                kind: e.kind.tag(),
                dim: e.dim,
                multiplicity: e.multiplicity,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn decomposition_table(rep: &DecompositionReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<12} {:<4} {:<4} multiplicity",
        "label", "type", "dim"
    )
    .unwrap();
    for e in &rep.entries {
        writeln!(
            out,
            "{:<12} {:<4} {:<4} {}",
            e.label,
            e.kind.tag(),
            e.dim,
            e.multiplicity
        )
        .unwrap();
    }
    writeln!(
        out,
        "total dimension {} = {}  (integrality residual {:.1e})",
        rep.total_dim(),
        rep.dim,
        rep.residual
    )
    .unwrap();
    out
}
