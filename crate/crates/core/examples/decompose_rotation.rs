//! Build a rotation from two unit quaternions and recover them.
//!
//! `cargo run --example decompose_rotation`

use isoclinic::{decompose, normalize, van_elfrinkhof, Quaternion, Result, Tolerances};

fn main() -> Result<()> {
    let l = normalize(Quaternion::new(1.0, 2.0, 3.0, 4.0))?;
    let r = normalize(Quaternion::new(0.5, -1.0, 0.25, 2.0))?;
    let a = van_elfrinkhof(l, r);
    println!("rotation:\n{a}");

    let d = decompose(&a, &Tolerances::default())?;
    println!("left  {}", d.left);
    println!("right {}", d.right);
    let (al, ar) = d.alternate();
    println!("alternate pair: {al} {ar}");
    println!("reconstruction residual {:e}", d.reconstruction_residual);
    println!("max minor {:e}, norm deviation {:e}", d.max_minor, d.norm_deviation);
    Ok(())
}
