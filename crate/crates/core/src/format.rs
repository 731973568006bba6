//! Line-oriented text formats for magnetic groups (`.mgrp`) and
//! corepresentations (`.corep`).
//!
//! ```text
//! magnetic-group v1
//! name Z4
//! order 4
//! table
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! phi
//! 0 1 0 1
//! ```
//!
//! or `builtin cyclic <2n> | dihedral <n> | quaternion` in place of the
//! table. A corep file names its group and lists `element <g> grade <e>`
//! blocks of `dim` rows, each row `dim` pairs `re im`:
//!
//! ```text
//! corep v1
//! builtin cyclic 4
//! dim 1
//! element 1 grade 1
//! 1 0
//! ```
//!
//! Elements may be omitted when they follow from the listed ones by the
//! twisted law (for cyclic groups the generator alone is enough).
//! `#` starts a comment.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use crate::corep::{Corep, CorepError};
use crate::group::{BuiltinKind, FiniteGroup, GroupError, MagneticGroup};
use crate::linalg::{CMatrix, MagOp, C64};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Group {
        line: usize,
        #[source]
        source: GroupError,
    },
    #[error(transparent)]
    Builtin(GroupError),
    #[error("line {line}: element {g} has a grade that does not match phi")]
    GradeMismatch { line: usize, g: usize },
    #[error("element {g} is neither listed nor derivable from the listed elements")]
    MissingElement { g: usize },
    #[error("corep file names no group and none was supplied")]
    NoGroup,
    #[error(transparent)]
    Corep(#[from] CorepError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Where a corep file's group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupRef {
    Path(PathBuf),
    /// Words after `builtin`, e.g. `["cyclic", "4"]`.
    Builtin(Vec<String>),
}

impl GroupRef {
    /// `builtin ...` directives or a file path.
    pub fn parse(spec: &str) -> Self {
        let words: Vec<&str> = spec.split_whitespace().collect();
        match words.split_first() {
            Some((&"builtin", rest)) => {
                GroupRef::Builtin(rest.iter().map(|s| s.to_string()).collect())
            }
            _ => GroupRef::Path(PathBuf::from(spec.trim())),
        }
    }

    pub fn directive(&self) -> String {
        match self {
            GroupRef::Path(p) => format!("group {}", p.display()),
            GroupRef::Builtin(words) => format!("builtin {}", words.join(" ")),
        }
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_num<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T, FormatError> {
    word.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{word}`")))
}

/// Builds a builtin group from the words after `builtin`.
pub fn parse_builtin<S: AsRef<str>>(words: &[S]) -> Result<MagneticGroup, GroupError> {
    let words: Vec<&str> = words.iter().map(AsRef::as_ref).collect();
    let bad = || GroupError::BadParam(format!("unknown builtin `{}`", words.join(" ")));
    let param = |w: Option<&&str>| -> Result<usize, GroupError> {
        w.ok_or_else(bad)?.parse().map_err(|_| bad())
    };
    let (kind, p) = match words.as_slice() {
        ["cyclic", rest @ ..] if rest.len() == 1 => {
            (BuiltinKind::Cyclic, Some(param(rest.first())?))
        }
        ["dihedral", rest @ ..] if rest.len() == 1 => {
            (BuiltinKind::Dihedral, Some(param(rest.first())?))
        }
        ["quaternion"] => (BuiltinKind::Quaternion, None),
        _ => return Err(bad()),
    };
    MagneticGroup::builtin(kind, p)
}

pub fn parse_group(text: &str) -> Result<MagneticGroup, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "magnetic-group v1")) => {}
        Some((n, other)) => {
            return Err(parse_err(
                n,
                format!("expected `magnetic-group v1`, found `{other}`"),
            ))
        }
        None => return Err(parse_err(1, "empty group file")),
    }
    let mut name: Option<String> = None;
    let mut builtin: Option<(usize, MagneticGroup)> = None;
    let mut order: Option<usize> = None;
    let mut table: Option<(usize, Vec<usize>)> = None;
    let mut phi: Option<(usize, Vec<u8>)> = None;

    while let Some((n, line)) = lines.next() {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" => name = Some(rest.to_string()),
            "builtin" => {
                let words: Vec<&str> = rest.split_whitespace().collect();
                let mg = parse_builtin(&words)
                    .map_err(|source| FormatError::Group { line: n, source })?;
                builtin = Some((n, mg));
            }
            "order" => order = Some(parse_num(n, rest, "group order")?),
            "table" => {
                let ord = order.ok_or_else(|| parse_err(n, "`table` must come after `order`"))?;
                let mut entries = Vec::with_capacity(ord * ord);
                for row in 0..ord {
                    let (m, l) = lines
                        .next()
                        .ok_or_else(|| parse_err(n, format!("table ends after {row} rows")))?;
                    let vals = l
                        .split_whitespace()
                        .map(|w| parse_num::<usize>(m, w, "element index"))
                        .collect::<Result<Vec<_>, _>>()?;
                    if vals.len() != ord {
                        return Err(parse_err(
                            m,
                            format!("table row has {} entries, expected {ord}", vals.len()),
                        ));
                    }
                    entries.extend(vals);
                }
                table = Some((n, entries));
            }
            "phi" => {
                let (m, l) = if rest.is_empty() {
                    lines
                        .next()
                        .ok_or_else(|| parse_err(n, "missing phi bits"))?
                } else {
                    (n, rest)
                };
                let bits = l
                    .split_whitespace()
                    .map(|w| match w {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        _ => Err(parse_err(m, format!("phi bit must be 0 or 1, found `{w}`"))),
                    })
                    .collect::<Result<Vec<u8>, _>>()?;
                phi = Some((m, bits));
            }
            other => return Err(parse_err(n, format!("unknown keyword `{other}`"))),
        }
    }

    let mg = match (builtin, order, table, phi) {
        (Some((_, mg)), None, None, None) => mg,
        (Some((n, _)), ..) => {
            return Err(parse_err(
                n,
                "`builtin` cannot be combined with an explicit table",
            ))
        }
        (None, Some(ord), Some((tn, t)), Some((pn, bits))) => {
            let g = FiniteGroup::from_table(ord, t)
                .map_err(|source| FormatError::Group { line: tn, source })?;
            MagneticGroup::new(g, bits).map_err(|source| FormatError::Group { line: pn, source })?
        }
        _ => {
            let last = text.lines().count().max(1);
            return Err(parse_err(
                last,
                "expected `builtin ...` or `order`, `table` and `phi`",
            ));
        }
    };
    Ok(match name {
        Some(name) => mg.named(name),
        None => mg,
    })
}

/// The `group`/`builtin` line of a corep file, if any.
pub fn corep_group_ref(text: &str) -> Option<GroupRef> {
    content_lines(text).find_map(|(_, l)| {
        let (key, rest) = l.split_once(char::is_whitespace)?;
        match key {
            "group" => Some(GroupRef::Path(PathBuf::from(rest.trim()))),
            "builtin" => Some(GroupRef::Builtin(
                rest.split_whitespace().map(String::from).collect(),
            )),
            _ => None,
        }
    })
}

pub fn parse_corep(text: &str, mg: Arc<MagneticGroup>) -> Result<Corep, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "corep v1")) => {}
        Some((n, other)) => {
            return Err(parse_err(
                n,
                format!("expected `corep v1`, found `{other}`"),
            ))
        }
        None => return Err(parse_err(1, "empty corep file")),
    }
    let mut dim: Option<usize> = None;
    let mut given: Vec<(usize, MagOp)> = Vec::new();
    while let Some((n, line)) = lines.next() {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["group", ..] | ["builtin", ..] => {}
            ["dim", d] => {
                let d: usize = parse_num(n, d, "dimension")?;
                if d == 0 {
                    return Err(parse_err(n, "dimension must be positive"));
                }
                dim = Some(d);
            }
            ["element", g, "grade", e] => {
                let d =
                    dim.ok_or_else(|| parse_err(n, "`dim` must come before the first element"))?;
                let g: usize = parse_num(n, g, "element index")?;
                if g >= mg.order() {
                    return Err(parse_err(
                        n,
                        format!("element {g} is out of range for order {}", mg.order()),
                    ));
                }
                let grade: u8 = match *e {
                    "0" => 0,
                    "1" => 1,
                    _ => return Err(parse_err(n, format!("grade must be 0 or 1, found `{e}`"))),
                };
                if grade != mg.phi(g) {
                    return Err(FormatError::GradeMismatch { line: n, g });
                }
                if given.iter().any(|(h, _)| *h == g) {
                    return Err(parse_err(n, format!("element {g} listed twice")));
                }
                let mut rows = Vec::with_capacity(d);
                for r in 0..d {
                    let (m, l) = lines
                        .next()
                        .ok_or_else(|| parse_err(n, format!("element {g} ends after {r} rows")))?;
                    let nums = l
                        .split_whitespace()
                        .map(|w| parse_num::<f64>(m, w, "number"))
                        .collect::<Result<Vec<_>, _>>()?;
                    if nums.len() != 2 * d {
                        return Err(parse_err(
                            m,
                            format!(
                                "row has {} numbers, expected {} (re im pairs)",
                                nums.len(),
                                2 * d
                            ),
                        ));
                    }
                    rows.push(nums.chunks(2).map(|p| C64::new(p[0], p[1])).collect());
                }
                given.push((g, MagOp::new(CMatrix::from_rows(&rows), grade)));
            }
            _ => return Err(parse_err(n, format!("unexpected line `{line}`"))),
        }
    }
    let dim = dim.ok_or_else(|| parse_err(1, "missing `dim`"))?;
    Corep::generate(mg, dim, &given).map_err(|e| match e {
        CorepError::MissingElement { g } => FormatError::MissingElement { g },
        other => FormatError::Corep(other),
    })
}

/// Every element written out, floats with 17 significant digits.
pub fn write_corep(c: &Corep, group: &GroupRef) -> String {
    let mut out = String::new();
    writeln!(out, "corep v1").unwrap();
    writeln!(out, "{}", group.directive()).unwrap();
    writeln!(out, "dim {}", c.dim()).unwrap();
    for (g, op) in c.ops().iter().enumerate() {
        writeln!(out, "element {g} grade {}", op.grade).unwrap();
        for row in op.matrix.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:.16e} {:.16e}", z.re, z.im))
                .collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    out
}

/// Explicit-table form of a magnetic group.
pub fn write_group(mg: &MagneticGroup) -> String {
    let n = mg.order();
    let mut out = String::from("magnetic-group v1\n");
    if !mg.name().is_empty() {
        writeln!(out, "name {}", mg.name()).unwrap();
    }
    writeln!(out, "order {n}\ntable").unwrap();
    for row in mg.group().table().chunks(n) {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    let bits: Vec<String> = mg.phi_bits().iter().map(u8::to_string).collect();
    writeln!(out, "phi\n{}", bits.join(" ")).unwrap();
    out
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a `.mgrp` file; unnamed groups take the file stem as name.
pub fn read_group_file(path: &Path) -> Result<MagneticGroup, FormatError> {
    let mg = parse_group(&read(path)?)?;
    if mg.name().is_empty() {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        return Ok(mg.named(stem));
    }
    Ok(mg)
}

/// A group given either as `builtin <kind> [param]` or as a file path.
pub fn load_group(spec: &str) -> Result<MagneticGroup, FormatError> {
    match GroupRef::parse(spec) {
        GroupRef::Builtin(words) => parse_builtin(&words).map_err(FormatError::Builtin),
        GroupRef::Path(p) => read_group_file(&p),
    }
}

/// Reads a `.corep` file. Without an explicit group, the file's own group
/// line is used; relative paths resolve against the corep file's directory
/// first.
pub fn read_corep_file(
    path: &Path,
    group: Option<Arc<MagneticGroup>>,
) -> Result<Corep, FormatError> {
    let text = read(path)?;
    let mg = match group {
        Some(mg) => mg,
        None => {
            let mg = match corep_group_ref(&text).ok_or(FormatError::NoGroup)? {
                GroupRef::Builtin(words) => parse_builtin(&words).map_err(FormatError::Builtin)?,
                GroupRef::Path(p) => {
                    let beside = path.parent().map(|dir| dir.join(&p));
                    match beside {
                        Some(b) if p.is_relative() && b.exists() => read_group_file(&b)?,
                        _ => read_group_file(&p)?,
                    }
                }
            };
            Arc::new(mg)
        }
    };
    parse_corep(&text, mg)
}
