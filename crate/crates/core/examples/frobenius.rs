//! Morphisms out of an induced corep against kernel morphisms into a
//! restriction, compared by real dimension.

use std::sync::Arc;

use magrep::{classify, frobenius_dims, BuiltinKind, MagneticGroup};

fn main() {
    let mg = Arc::new(MagneticGroup::builtin(BuiltinKind::Cyclic, Some(12)).unwrap());
    let cls = classify(&mg, 0).unwrap();
    for (l, rho) in cls.irreps.iter().enumerate() {
        let dims: Vec<String> = cls
            .classes
            .iter()
            .map(|w| {
                let (a, b) = frobenius_dims(rho, &w.corep).unwrap();
                format!("{}:{a}={b}", w.label())
            })
            .collect();
        println!("chi{l}  {}", dims.join("  "));
    }
}
