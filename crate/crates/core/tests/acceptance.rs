//! The ten acceptance criteria, one PASS/FAIL line each.

mod common;

use std::f64::consts::PI;
use std::process::Command;
use std::sync::Arc;

use common::{builtin, cis, close, fixtures, hom_dim_oracle, rep_hom_dim_oracle};
use magrep::corep::morphism_residual;
use magrep::format::{parse_corep, write_corep, GroupRef};
use magrep::{
    character, classify, conjugate_rep, decompose, endo_algebra, frobenius_dims, induce,
    intertwiner_corep, irreps, regular_corep, restrict, validate, wigner_indicator, BuiltinKind,
    CMatrix, Corep, MagOp, WignerIndicator, WignerType, C64,
};

const RESIDUAL: f64 = 1e-9;
const CHAR: f64 = 1e-6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn quaternion_classification() -> Outcome {
    let q8 = builtin(BuiltinKind::Quaternion, None);
    let cls = classify(&q8, 0).map_err(|e| e.to_string())?;
    let rows: Vec<_> = cls.classes.iter().map(|w| (w.kind, w.dim())).collect();
    use WignerType::*;
    ensure(
        rows == vec![(Real, 1), (Quaternionic, 2), (Real, 1), (Quaternionic, 2)],
        || format!("types {rows:?}"),
    )?;
    for w in &cls.classes {
        let r = validate(&w.corep).max_residual;
        ensure(r <= RESIDUAL, || format!("{} residual {r:e}", w.label()))?;
    }
    // i = 2, j = 4 in the canonical order 1, -1, i, -i, j, -j, k, -k.
    let one = Corep::generate(
        q8.clone(),
        1,
        &[
            (2, MagOp::linear(CMatrix::identity(1))),
            (4, MagOp::antilinear(CMatrix::identity(1))),
        ],
    )
    .and_then(Corep::validated)
    .map_err(|e| e.to_string())?;
    let two = Corep::generate(
        q8.clone(),
        2,
        &[
            (
                2,
                MagOp::linear(CMatrix::diagonal(&[c(0.0, 1.0), c(0.0, 1.0)])),
            ),
            (
                4,
                MagOp::antilinear(CMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]])),
            ),
        ],
    )
    .and_then(Corep::validated)
    .map_err(|e| e.to_string())?;
    for (explicit, built) in [(&one, &cls.classes[0].corep), (&two, &cls.classes[1].corep)] {
        let t = intertwiner_corep(explicit, built).ok_or("no intertwiner to explicit form")?;
        let r = morphism_residual(&t, explicit, built);
        ensure(r <= RESIDUAL, || format!("intertwiner residual {r:e}"))?;
        ensure(CMatrix::from_inner(t).is_invertible(), || {
            "intertwiner singular".into()
        })?;
    }
    Ok("types R,H,R,H dims 1,2,1,2; explicit forms equivalent".into())
}

fn dihedral_classification() -> Outcome {
    for n in 2..=8 {
        let mg = builtin(BuiltinKind::Dihedral, Some(n));
        let cls = classify(&mg, 0).map_err(|e| e.to_string())?;
        ensure(cls.classes.len() == n, || {
            format!("D{n}: {} classes", cls.classes.len())
        })?;
        for (l, w) in cls.classes.iter().enumerate() {
            ensure(w.kind == WignerType::Real && w.dim() == 1, || {
                format!("D{n} class {l}: {:?} dim {}", w.kind, w.dim())
            })?;
            for m in 0..n {
                for eps in 0..2 {
                    let op = w.corep.op(m + n * eps);
                    let want = CMatrix::scalar(cis(2.0 * PI * (l * m) as f64 / n as f64));
                    ensure(
                        op.grade as usize == eps && close(&op.matrix, &want, RESIDUAL),
                        || format!("D{n} chi{l} at ({m},{eps})"),
                    )?;
                }
            }
        }
    }
    Ok("D2..D8: n classes, all R dim 1, (m,e) -> chi_l(m) K^e".into())
}

fn cyclic_classification() -> Outcome {
    let quarter = CMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
    for n in 2..=6 {
        let mg = builtin(BuiltinKind::Cyclic, Some(2 * n));
        let cls = classify(&mg, 0).map_err(|e| e.to_string())?;
        let mut seen = Vec::new();
        for w in &cls.classes {
            match (w.kind, w.labels.as_slice()) {
                (WignerType::Real, [0]) => {
                    ensure(w.dim() == 1, || format!("Z{}: chi0 dim", 2 * n))?
                }
                (WignerType::Quaternionic, [l]) => {
                    ensure(n % 2 == 0 && *l == n / 2 && w.dim() == 2, || {
                        format!("Z{}: unexpected H at chi{l}", 2 * n)
                    })?;
                    let a = w.corep.op(1);
                    ensure(a.grade == 1 && close(&a.matrix, &quarter, RESIDUAL), || {
                        format!("Z{}: a-image {:?}", 2 * n, a.matrix)
                    })?;
                }
                (WignerType::Complex, [l, m]) => ensure(l + m == n && w.dim() == 2, || {
                    format!("Z{}: pair {l},{m}", 2 * n)
                })?,
                other => return Err(format!("Z{}: unexpected class {other:?}", 2 * n)),
            }
            seen.extend(w.labels.iter().copied());
        }
        seen.sort_unstable();
        ensure(seen == (0..n).collect::<Vec<_>>(), || {
            format!("Z{}: labels {seen:?}", 2 * n)
        })?;
        let h = cls
            .classes
            .iter()
            .filter(|w| w.kind == WignerType::Quaternionic)
            .count();
        ensure(h == usize::from(n % 2 == 0), || {
            format!("Z{}: {h} quaternionic", 2 * n)
        })?;
    }
    Ok("Z4..Z12: R at chi0, H at chi_{n/2} for even n, conjugate pairs otherwise".into())
}

fn indicator_invariant() -> Outcome {
    let mut checked = 0;
    for mg in fixtures() {
        let a2 = mg.mul(mg.a(), mg.a());
        for rep in irreps(&mg, 0).map_err(|e| e.to_string())? {
            let (t, sign) = match wigner_indicator(&rep, 0).map_err(|e| e.to_string())? {
                WignerIndicator::Real(t) => (t, 1.0),
                WignerIndicator::Quaternionic(t) => (t, -1.0),
                WignerIndicator::Complex => continue,
            };
            let lhs = &t * &t.conj();
            let rhs = rep.matrix(a2).scale_real(sign);
            let r = lhs.dist(&rhs);
            ensure(r <= RESIDUAL, || format!("{}: residual {r:e}", mg.name()))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} real/quaternionic irreps satisfy T conj(T) = +-rho(a^2)"
    ))
}

fn schur_dimensions() -> Outcome {
    for mg in fixtures() {
        let cls = classify(&mg, 0).map_err(|e| e.to_string())?;
        for w in &cls.classes {
            let end = endo_algebra(&w.corep);
            ensure(
                end.real_dim == w.kind.endo_dim() && end.type_tag == Some(w.kind),
                || format!("{} {}: real_dim {}", mg.name(), w.label(), end.real_dim),
            )?;
        }
        let reg = regular_corep(&mg);
        let rep = decompose(&reg, 0).map_err(|e| e.to_string())?;
        let expected: usize = rep
            .entries
            .iter()
            .map(|e| e.multiplicity * e.multiplicity * e.kind.endo_dim())
            .sum();
        let lib = endo_algebra(&reg).real_dim;
        let oracle = hom_dim_oracle(&reg, &reg);
        ensure(lib == expected && oracle == expected, || {
            format!(
                "{}: End(regular) lib {lib}, oracle {oracle}, from multiplicities {expected}",
                mg.name()
            )
        })?;
    }
    Ok("End dims 1/2/4 match R/C/H; End(regular) = sum m^2 dim End(W)".into())
}

fn restriction_induction() -> Outcome {
    let mut checked = 0;
    for mg in fixtures() {
        for rep in irreps(&mg, 0).map_err(|e| e.to_string())? {
            let ind = induce(&rep).map_err(|e| e.to_string())?;
            let lhs = character(&restrict(&ind));
            let rhs = character(&rep).add(&character(&conjugate_rep(&rep)));
            let d = lhs.dist(&rhs);
            ensure(d <= CHAR, || {
                format!("{}: character distance {d:e}", mg.name())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} irreps: Res Ind rho = rho + rho*"))
}

fn frobenius_reciprocity() -> Outcome {
    let mut checked = 0;
    for mg in fixtures() {
        let cls = classify(&mg, 0).map_err(|e| e.to_string())?;
        for rep in &cls.irreps {
            let ind = induce(rep).map_err(|e| e.to_string())?;
            for w in &cls.classes {
                let (left, right) = frobenius_dims(rep, &w.corep).map_err(|e| e.to_string())?;
                let ol = hom_dim_oracle(&ind, &w.corep);
                let or = rep_hom_dim_oracle(rep, &w.corep);
                ensure(left == right && ol == left && or == right, || {
                    format!(
                        "{} {}: ({left},{right}) oracle ({ol},{or})",
                        mg.name(),
                        w.label()
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (irrep, corep) pairs with equal real dimensions"
    ))
}

fn regular_decomposition() -> Outcome {
    let z4 = builtin(BuiltinKind::Cyclic, Some(4));
    let rep = decompose(&regular_corep(&z4), 0).map_err(|e| e.to_string())?;
    let got: Vec<_> = rep
        .nonzero()
        .map(|e| (e.multiplicity, e.kind, e.dim))
        .collect();
    ensure(
        got == vec![(2, WignerType::Real, 1), (1, WignerType::Quaternionic, 2)],
        || format!("Z4 regular: {rep}"),
    )?;
    for mg in fixtures() {
        let reg = regular_corep(&mg);
        let rep = decompose(&reg, 0).map_err(|e| e.to_string())?;
        ensure(rep.total_dim() == mg.order(), || {
            format!("{}: total {}", mg.name(), rep.total_dim())
        })?;
        let cls = classify(&mg, 0).map_err(|e| e.to_string())?;
        for (w, e) in cls.classes.iter().zip(&rep.entries) {
            let oracle = hom_dim_oracle(&w.corep, &reg) / w.kind.endo_dim();
            ensure(oracle == e.multiplicity, || {
                format!(
                    "{} {}: multiplicity {} oracle {oracle}",
                    mg.name(),
                    e.label,
                    e.multiplicity
                )
            })?;
        }
    }
    Ok("Z4 regular = 2x(R,1) + 1x(H,2); sum m dim = |G| on all fixtures".into())
}

fn choice_of_a() -> Outcome {
    let mut runs = 0;
    for mg in fixtures() {
        let base = classify(&mg, 0).map_err(|e| e.to_string())?.type_multiset();
        for a in mg.antiunitary_elements() {
            let alt = Arc::new(mg.with_antiunitary(a).map_err(|e| e.to_string())?);
            let other = classify(&alt, 0)
                .map_err(|e| e.to_string())?
                .type_multiset();
            ensure(other == base, || {
                format!("{} with a = {a}: {other:?} vs {base:?}", mg.name())
            })?;
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} alternative choices of a give identical (type, dim) multisets"
    ))
}

fn round_trip_and_determinism() -> Outcome {
    let mut worst: f64 = 0.0;
    for mg in fixtures() {
        let gref = GroupRef::Builtin(vec!["unused".into()]);
        let cls = classify(&mg, 0).map_err(|e| e.to_string())?;
        let mut coreps: Vec<Corep> = cls.classes.iter().map(|w| w.corep.clone()).collect();
        coreps.push(regular_corep(&mg));
        for c in coreps {
            let back =
                parse_corep(&write_corep(&c, &gref), mg.clone()).map_err(|e| e.to_string())?;
            for g in 0..mg.order() {
                ensure(back.op(g).grade == c.op(g).grade, || "grade changed".into())?;
                worst = worst.max(back.op(g).matrix.dist(&c.op(g).matrix));
            }
        }
    }
    ensure(worst <= 1e-15, || format!("round-trip error {worst:e}"))?;
    let exe = env!("CARGO_BIN_EXE_magrep");
    for args in [
        vec!["classify", "builtin", "quaternion"],
        vec!["classify", "builtin", "cyclic", "12"],
        vec!["classify", "builtin", "dihedral", "8", "--json"],
    ] {
        let run = || {
            Command::new(exe)
                .args(&args)
                .env("MAGREP_SEED", "0")
                .output()
                .map_err(|e| e.to_string())
        };
        let (first, second) = (run()?, run()?);
        ensure(first.status.success() && !first.stdout.is_empty(), || {
            format!("{args:?} failed")
        })?;
        ensure(first.stdout == second.stdout, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(format!(
        "round-trip error {worst:e}; classify output byte-identical"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("quaternion classification", quaternion_classification),
        ("dihedral classification", dihedral_classification),
        ("cyclic classification", cyclic_classification),
        ("indicator invariant", indicator_invariant),
        ("endomorphism dimensions", schur_dimensions),
        ("restriction of induction", restriction_induction),
        ("Frobenius reciprocity", frobenius_reciprocity),
        ("regular decomposition", regular_decomposition),
        ("choice of a", choice_of_a),
        ("round-trip and determinism", round_trip_and_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
