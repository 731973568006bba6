//! Endomorphism algebras tell irreducible coreps apart from sums.

use std::sync::Arc;

use magrep::{classify, endo_algebra, is_irreducible_corep, BuiltinKind, MagneticGroup};

fn main() {
    let mg = Arc::new(MagneticGroup::builtin(BuiltinKind::Cyclic, Some(8)).unwrap());
    let cls = classify(&mg, 0).unwrap();
    for w in &cls.classes {
        let end = endo_algebra(&w.corep);
        println!(
            "{}: End has real dimension {} ({:?})",
            w.label(),
            end.real_dim,
            end.type_tag
        );
    }
    let sum = cls.classes[0].corep.direct_sum(&cls.classes[2].corep);
    println!("R + H irreducible? {:?}", is_irreducible_corep(&sum));
}
