//! The four irreducible coreps of the quaternion group graded by `Q8 / <i>`.

use std::sync::Arc;

use magrep::{classify, report, BuiltinKind, MagneticGroup};

fn main() {
    let q8 = Arc::new(MagneticGroup::builtin(BuiltinKind::Quaternion, None).unwrap());
    let cls = classify(&q8, 0).unwrap();
    print!("{}", report::classification_table(&cls));

    let two = &cls.classes[1].corep;
    for (name, g) in [("i", 2), ("j", 4)] {
        let op = two.op(g);
        println!("{name} -> {} (grade {})", op.matrix, op.grade);
    }
}
