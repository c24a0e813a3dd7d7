//! Change of frame: trace, factorwise conjugation and isocliny are preserved.
//!
//! `cargo run --example similarity_invariance`

use isoclinic::{
    check_isocliny_preserved, conjugate, conjugate_factorwise, left_matrix, make_frame, random_rotation, trace,
    Tolerances, UnitQuaternion,
};

fn main() {
    let tol = Tolerances::default();
    let a = random_rotation(1);
    let frame = make_frame(&random_rotation(2), &tol).unwrap();

    let direct = conjugate(&a, &frame);
    let split = conjugate_factorwise(&a, &frame, &tol).unwrap();
    println!("trace before {} after {}", trace(a.matrix()), trace(direct.matrix()));
    println!(
        "|direct - factorwise| = {:e}",
        direct.matrix().max_abs_diff(split.matrix())
    );

    let iso = left_matrix(UnitQuaternion::from_angle_i(0.4));
    let report = check_isocliny_preserved(&iso, &frame, &tol).unwrap();
    println!("before {:?}", report.before);
    println!("after  {:?}", report.after);
    println!("preserved: {}", report.holds());
}
