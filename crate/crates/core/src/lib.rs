//! Decomposition of 4D rotation matrices into left- and right-isoclinic factors.
//!
//! Every rotation `A` of 4-space is `P ↦ L P R` for unit quaternions `L`, `R`
//! determined up to a joint sign. This crate recovers `±(L, R)` from `A` in
//! closed form through the *associate matrix* of `A`, a rank-one matrix equal
//! to the outer product `L Rᵀ`, and checks the identities that make this work.
//!
//! ```
//! use isoclinic::{decompose, random_rotation, van_elfrinkhof, Tolerances};
//!
//! let a = random_rotation(7);
//! let d = decompose(&a, &Tolerances::default()).unwrap();
//! let back = van_elfrinkhof(d.left, d.right);
//! assert!(back.matrix().max_abs_diff(a.matrix()) < 1e-12);
//! ```

pub mod associate;
pub mod cli;
pub mod document;
pub mod error;
pub mod invariance;
pub mod quat;
pub mod rotation4;
pub mod tolerance;

pub use associate::{
    associate_matrix, associate_norm, canonicalize, classify, classify_decomposition, decompose, decompose_matrix,
    max_abs_minor, minor_2x2, rank1_factor, AssociateMatrix, IsoclinicDecomposition, IsoclinicKind, MinorScan,
    RotationClass,
};
pub use error::{Error, Result};
pub use invariance::{
    check_isocliny_preserved, conjugate, conjugate_factorwise, conjugate_left_factor, conjugate_right_factor,
    make_frame, IsoclinyReport, SimilarityFrame,
};
pub use quat::{
    isoclinic_angle, left_matrix, normalize, quat_conjugate, quat_mul, right_matrix, Quaternion, UnitQuaternion,
};
pub use rotation4::{
    apply, mat_mul, random_quaternion_pair, random_rotation, random_unit_quaternion, sandwich, trace,
    validate_rotation, van_elfrinkhof, van_elfrinkhof_product, Mat4, Point4, Rotation4,
};
pub use tolerance::Tolerances;
