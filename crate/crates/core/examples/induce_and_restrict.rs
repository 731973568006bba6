//! Inducing a kernel irrep and restricting back gives `rho + rho*`.

use std::sync::Arc;

use magrep::{
    character, conjugate_rep, induce, irreps, restrict, validate, BuiltinKind, MagneticGroup,
};

fn main() {
    let mg = Arc::new(MagneticGroup::builtin(BuiltinKind::Cyclic, Some(8)).unwrap());
    for (l, rho) in irreps(&mg, 0).unwrap().iter().enumerate() {
        let ind = induce(rho).unwrap();
        let back = character(&restrict(&ind));
        let expected = character(rho).add(&character(&conjugate_rep(rho)));
        println!(
            "chi{l}: induced dim {}, residual {:.1e}, character error {:.1e}",
            ind.dim(),
            validate(&ind).max_residual,
            back.dist(&expected)
        );
    }
}
