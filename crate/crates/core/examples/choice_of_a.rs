//! Replacing the distinguished antiunitary element leaves the
//! classification unchanged up to isomorphism.

use std::sync::Arc;

use magrep::{classify, BuiltinKind, MagneticGroup};

fn main() {
    let mg = MagneticGroup::builtin(BuiltinKind::Dihedral, Some(6)).unwrap();
    for a in mg.antiunitary_elements() {
        let alt = Arc::new(mg.with_antiunitary(a).unwrap());
        let types: Vec<String> = classify(&alt, 0)
            .unwrap()
            .type_multiset()
            .iter()
            .map(|(t, d)| format!("{}{d}", t.tag()))
            .collect();
        println!("a = {a:>2}: {}", types.join(" "));
    }
}
