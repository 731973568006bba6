//! Writing a corep to the text format and reading it back.

use std::sync::Arc;

use magrep::format::{parse_corep, write_corep, GroupRef};
use magrep::{regular_corep, validate, BuiltinKind, MagneticGroup};

fn main() {
    let mg = Arc::new(MagneticGroup::builtin(BuiltinKind::Cyclic, Some(4)).unwrap());
    let reg = regular_corep(&mg);
    let text = write_corep(&reg, &GroupRef::parse("builtin cyclic 4"));
    println!("{}", text.lines().take(8).collect::<Vec<_>>().join("\n"));

    let back = parse_corep(&text, mg.clone()).unwrap();
    let err = reg
        .ops()
        .iter()
        .zip(back.ops())
        .map(|(a, b)| a.dist(b))
        .fold(0.0, f64::max);
    println!(
        "round-trip error {err:e}, residual {:e}",
        validate(&back).max_residual
    );

    // Only the generator is needed for a cyclic group.
    let short = "corep v1\nbuiltin cyclic 4\ndim 2\nelement 1 grade 1\n0 0 -1 0\n1 0 0 0\n";
    let c = parse_corep(short, mg).unwrap();
    println!("generated {} elements from one", c.ops().len());
}
