//! Linear and antilinear operators `M o K^e` and how they compose.

use magrep::{CMatrix, MagOp, C64};

fn main() {
    let i = C64::new(0.0, 1.0);
    let k = MagOp::antilinear(CMatrix::identity(1));
    let v = [i];
    println!("K(i) = {}", k.apply(&v).unwrap()[0]);

    // [[0,-1],[1,0]] o K squares to -1 as an antilinear map.
    let j = MagOp::antilinear(CMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]));
    let jj = j.compose(&j).unwrap();
    println!("J^2: grade {}, matrix {}", jj.grade, jj.matrix);

    let scale = MagOp::linear(CMatrix::diagonal(&[i, i]));
    let left = scale.compose(&j).unwrap();
    let right = j.compose(&scale).unwrap();
    println!(
        "iJ = -Ji: {}",
        left.matrix.dist(&right.matrix.scale_real(-1.0)) < 1e-12
    );
    println!(
        "order of J: {}",
        (1..=8)
            .find(|&n| j.power(n).dist(&MagOp::identity(2)) < 1e-12)
            .unwrap()
    );
}
