//! Left and right multiplication matrices, their product and the sandwich map.
//!
//! `cargo run --example compose_quaternions`

use isoclinic::{apply, left_matrix, right_matrix, sandwich, van_elfrinkhof, Quaternion, UnitQuaternion};

fn main() {
    let l = UnitQuaternion::new(Quaternion::new(0.5, 0.5, 0.5, 0.5)).unwrap();
    let r = UnitQuaternion::from_angle_i(std::f64::consts::FRAC_PI_3);

    let (ml, mr) = (left_matrix(l), right_matrix(r));
    println!("M_L:\n{ml}\nM_R:\n{mr}");
    let a = van_elfrinkhof(l, r);
    println!("A = M_L M_R:\n{a}");
    println!(
        "|M_L M_R - M_R M_L| = {:e}",
        (ml * mr).matrix().max_abs_diff((mr * ml).matrix())
    );

    let p = Quaternion::new(1.0, 2.0, 3.0, 4.0);
    println!("L P R      = {}", sandwich(l, p, r));
    println!("A applied  = {:?}", apply(&a, p.into()).to_array());
}
