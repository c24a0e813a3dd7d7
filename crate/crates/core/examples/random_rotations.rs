//! Seeded random rotations and a round trip over many of them.
//!
//! `cargo run --example random_rotations -- 1000`

use isoclinic::{decompose, random_rotation, Tolerances};

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let tol = Tolerances::default();
    let mut worst = 0.0f64;
    for seed in 0..n {
        let d = decompose(&random_rotation(seed), &tol).expect("random rotations decompose");
        worst = worst.max(d.reconstruction_residual);
    }
    println!("seed 0:\n{}", random_rotation(0));
    println!("{n} rotations, worst reconstruction residual {worst:e}");
}
