//! Rotations of the coordinate system and what they leave unchanged.
//!
//! Rotating the frame by `S` turns the matrix `A` of a rotation into
//! `A' = S⁻¹ A S`. Since left- and right-isoclinic matrices commute, with
//! `S = S_L S_R` and `A = A_L A_R` this splits as
//! `A' = (S_L⁻¹ A_L S_L)(S_R⁻¹ A_R S_R)`: each isoclinic factor is conjugated
//! only by the isoclinic factor of the same kind.

use serde::Serialize;

use crate::associate::{classify, decompose, RotationClass};
use crate::error::Result;
use crate::quat::{left_matrix, quat_conjugate, quat_mul, right_matrix, UnitQuaternion};
use crate::rotation4::{van_elfrinkhof, Rotation4};
use crate::tolerance::Tolerances;

/// A coordinate rotation `S` together with one of its two quaternion factorizations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimilarityFrame {
    pub s: Rotation4,
    pub s_left: UnitQuaternion,
    pub s_right: UnitQuaternion,
}

impl SimilarityFrame {
    /// Frame built directly from a quaternion pair. Either sign choice gives the same `S`.
    pub fn from_factors(s_left: UnitQuaternion, s_right: UnitQuaternion) -> Self {
        Self {
            s: van_elfrinkhof(s_left, s_right),
            s_left,
            s_right,
        }
    }
}

pub fn make_frame(s: &Rotation4, tol: &Tolerances) -> Result<SimilarityFrame> {
    let d = decompose(s, tol)?;
    Ok(SimilarityFrame {
        s: *s,
        s_left: d.left,
        s_right: d.right,
    })
}

/// `S⁻¹ A S` with `S⁻¹ = Sᵀ`.
pub fn conjugate(a: &Rotation4, frame: &SimilarityFrame) -> Rotation4 {
    frame.s.inverse() * *a * frame.s
}

/// `S⁻¹ A S` assembled from the separately conjugated isoclinic factors of `A`.
pub fn conjugate_factorwise(a: &Rotation4, frame: &SimilarityFrame, tol: &Tolerances) -> Result<Rotation4> {
    let d = decompose(a, tol)?;
    let s_l = left_matrix(frame.s_left);
    let s_r = right_matrix(frame.s_right);
    let left_part = s_l.inverse() * d.left_matrix() * s_l;
    let right_part = s_r.inverse() * d.right_matrix() * s_r;
    Ok(left_part * right_part)
}

/// Left factor of `S⁻¹ A S` from quaternion products: `S_L⁻¹ L S_L`.
pub fn conjugate_left_factor(l: UnitQuaternion, frame: &SimilarityFrame) -> UnitQuaternion {
    let q = quat_mul(quat_mul(quat_conjugate(*frame.s_left), *l), *frame.s_left);
    UnitQuaternion::new_unchecked(q)
}

/// Right factor of `S⁻¹ A S` from quaternion products: `S_R R S_R⁻¹`, since
/// right multiplications compose in reverse order.
pub fn conjugate_right_factor(r: UnitQuaternion, frame: &SimilarityFrame) -> UnitQuaternion {
    let q = quat_mul(quat_mul(*frame.s_right, *r), quat_conjugate(*frame.s_right));
    UnitQuaternion::new_unchecked(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsoclinyReport {
    pub before: RotationClass,
    pub after: RotationClass,
    pub class_preserved: bool,
    pub angles_preserved: bool,
}

impl IsoclinyReport {
    pub fn holds(&self) -> bool {
        self.class_preserved && self.angles_preserved
    }
}

/// Classifies `A` and `S⁻¹ A S` and compares class and angles.
pub fn check_isocliny_preserved(a: &Rotation4, frame: &SimilarityFrame, tol: &Tolerances) -> Result<IsoclinyReport> {
    let before = classify(a, tol)?;
    let after = classify(&conjugate(a, frame), tol)?;
    Ok(IsoclinyReport {
        before,
        after,
        class_preserved: before.kind == after.kind,
        angles_preserved: (before.left_angle - after.left_angle).abs() <= tol.angle_tol
            && (before.right_angle - after.right_angle).abs() <= tol.angle_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associate::IsoclinicKind;
    use crate::quat::{normalize, Quaternion};
    use crate::rotation4::{random_quaternion_pair, random_rotation, Mat4};
    use std::f64::consts::PI;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn frames() {
        let f = make_frame(&Rotation4::IDENTITY, &tol()).unwrap();
        assert_eq!(
            (f.s_left, f.s_right),
            (UnitQuaternion::IDENTITY, UnitQuaternion::IDENTITY)
        );

        let f = make_frame(&-Rotation4::IDENTITY, &tol()).unwrap();
        assert_eq!(
            (f.s_left, f.s_right),
            (UnitQuaternion::IDENTITY, -UnitQuaternion::IDENTITY)
        );

        let s = random_rotation(8);
        let f = make_frame(&s, &tol()).unwrap();
        assert!(van_elfrinkhof(f.s_left, f.s_right).matrix().max_abs_diff(s.matrix()) < 1e-12);
    }

    #[test]
    fn trivial_conjugations() {
        let a = random_rotation(1);
        let id = make_frame(&Rotation4::IDENTITY, &tol()).unwrap();
        assert_eq!(conjugate(&a, &id), a);
        let f = make_frame(&random_rotation(2), &tol()).unwrap();
        assert!(
            conjugate(&Rotation4::IDENTITY, &f)
                .matrix()
                .max_abs_diff(&Mat4::IDENTITY)
                < 1e-15
        );
        let c = conjugate_factorwise(&Rotation4::IDENTITY, &f, &tol()).unwrap();
        assert!(c.matrix().max_abs_diff(&Mat4::IDENTITY) < 1e-15);
    }

    #[test]
    fn factorwise_matches_direct() {
        for seed in 0..20 {
            let a = random_rotation(seed);
            let f = make_frame(&random_rotation(seed + 1000), &tol()).unwrap();
            let direct = conjugate(&a, &f);
            let split = conjugate_factorwise(&a, &f, &tol()).unwrap();
            assert!(direct.matrix().max_abs_diff(split.matrix()) < 1e-11);
        }
    }

    #[test]
    fn left_isoclinic_conjugation_by_quaternions() {
        let (l, _) = random_quaternion_pair(4);
        let a = left_matrix(l);
        let f = make_frame(&random_rotation(5), &tol()).unwrap();
        let expected = left_matrix(conjugate_left_factor(l, &f));
        let got = conjugate_factorwise(&a, &f, &tol()).unwrap();
        assert!(got.matrix().max_abs_diff(expected.matrix()) < 1e-12);
    }

    #[test]
    fn isocliny_preserved_for_left_i() {
        let i = normalize(Quaternion::I).unwrap();
        let f = make_frame(&random_rotation(6), &tol()).unwrap();
        let report = check_isocliny_preserved(&left_matrix(i), &f, &tol()).unwrap();
        assert!(report.holds());
        assert_eq!(report.after.kind, IsoclinicKind::LeftIsoclinic);
        assert!((report.after.left_angle - PI / 2.0).abs() < 1e-9);

        let report = check_isocliny_preserved(&Rotation4::IDENTITY, &f, &tol()).unwrap();
        assert_eq!(report.after.kind, IsoclinicKind::Identity);
        assert!(report.holds());
    }
}
