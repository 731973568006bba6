//! A group given by its multiplication table: `Q8 x Z/2` graded by the
//! second factor, whose kernel is not cyclic.

use std::sync::Arc;

use magrep::{classify, report, FiniteGroup, MagneticGroup};

fn main() {
    let q = FiniteGroup::quaternion();
    let n = q.order();
    let table: Vec<usize> = (0..4 * n * n)
        .map(|cell| {
            let (x, y) = (cell / (2 * n), cell % (2 * n));
            q.mul(x % n, y % n) + n * ((x / n + y / n) % 2)
        })
        .collect();
    let g = FiniteGroup::from_table(2 * n, table).unwrap();
    let phi = (0..2 * n).map(|x| (x / n) as u8).collect();
    let mg = Arc::new(MagneticGroup::new(g, phi).unwrap().named("Q8xZ2"));
    print!(
        "{}",
        report::classification_table(&classify(&mg, 0).unwrap())
    );
}
