//! Classify a handful of rotations by their isoclinic structure.
//!
//! `cargo run --example classify_rotations`

use isoclinic::{classify, left_matrix, random_rotation, right_matrix, Rotation4, Tolerances, UnitQuaternion};

fn main() {
    let tol = Tolerances::default();
    let q = UnitQuaternion::from_angle_i(0.7);
    let cases = [
        ("identity", Rotation4::IDENTITY),
        ("central reversion", -Rotation4::IDENTITY),
        ("left isoclinic", left_matrix(q)),
        ("right isoclinic", right_matrix(q)),
        ("random", random_rotation(3)),
    ];
    for (name, a) in cases {
        let c = classify(&a, &tol).unwrap();
        println!(
            "{name:>18}: {:<16} left angle {:.6} right angle {:.6}",
            c.kind, c.left_angle, c.right_angle
        );
    }
}
