//! Real, complex and quaternionic classes of `(Z/2n, mod 2)` for small `n`.

use std::sync::Arc;

use magrep::{classify, BuiltinKind, MagneticGroup};

fn main() {
    for n in 2..=6 {
        let mg = Arc::new(MagneticGroup::builtin(BuiltinKind::Cyclic, Some(2 * n)).unwrap());
        let cls = classify(&mg, 0).unwrap();
        let row: Vec<String> = cls
            .classes
            .iter()
            .map(|w| format!("{} {} dim {}", w.label(), w.kind.tag(), w.dim()))
            .collect();
        println!("Z{:<3} {}", 2 * n, row.join(" | "));
    }
}
