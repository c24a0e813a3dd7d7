//! Check the associate-matrix identities on a rotation and on a reflection.
//!
//! `cargo run --example verify_identities`

use isoclinic::{
    associate_matrix, associate_norm, decompose_matrix, max_abs_minor, random_rotation, validate_rotation, Mat4,
    MinorScan, Tolerances,
};

fn report(name: &str, m: &Mat4) {
    let tol = Tolerances::default();
    let assoc = associate_matrix(m);
    println!("{name}");
    println!("  orthogonality deviation {:e}", m.orthogonality_deviation());
    println!("  determinant             {}", m.determinant());
    println!("  associate norm          {}", associate_norm(&assoc));
    println!(
        "  max minor (all 36)      {:e}",
        max_abs_minor(assoc.matrix(), MinorScan::Full)
    );
    println!(
        "  max minor (nine)        {:e}",
        max_abs_minor(assoc.matrix(), MinorScan::AgainstFirst)
    );
    match validate_rotation(*m, tol.ortho_tol, tol.det_tol) {
        Ok(_) => println!("  valid rotation"),
        Err(e) => println!("  rejected: {e}"),
    }
    if let Err(e) = decompose_matrix(m, &tol) {
        println!("  decomposition refused: {e}");
    }
}

fn main() {
    let a = *random_rotation(11).matrix();
    report("random rotation", &a);
    report(
        "rotation times diag(1, 1, 1, -1)",
        &(a * Mat4::from_diagonal([1.0, 1.0, 1.0, -1.0])),
    );
}
