//! Dihedral groups graded by reflections: every class is real and
//! one-dimensional, reflections acting by pure conjugation.

use std::sync::Arc;

use magrep::{classify, BuiltinKind, MagneticGroup};

fn main() {
    let n = 5;
    let mg = Arc::new(MagneticGroup::builtin(BuiltinKind::Dihedral, Some(n)).unwrap());
    for w in classify(&mg, 0).unwrap().classes {
        let rotation = w.corep.op(1).matrix[(0, 0)];
        let reflection = w.corep.op(n);
        println!(
            "{}: {} dim {}, r -> {:.4}, s -> {:.4} K",
            w.label(),
            w.kind.tag(),
            w.dim(),
            rotation,
            reflection.matrix[(0, 0)]
        );
    }
}
