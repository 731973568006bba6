//! Multiplicities of the irreducible classes in the regular corep.

use std::sync::Arc;

use magrep::{decompose, endo_algebra, regular_corep, report, BuiltinKind, MagneticGroup};

fn main() {
    for (kind, param) in [
        (BuiltinKind::Cyclic, Some(4)),
        (BuiltinKind::Quaternion, None),
        (BuiltinKind::Dihedral, Some(4)),
    ] {
        let mg = Arc::new(MagneticGroup::builtin(kind, param).unwrap());
        let reg = regular_corep(&mg);
        let rep = decompose(&reg, 0).unwrap();
        println!("{}: {rep}", mg.name());
        println!(
            "  End(regular) has real dimension {}",
            endo_algebra(&reg).real_dim
        );
        print!("{}", report::decomposition_table(&rep));
    }
}
