//! Hamilton quaternions and the matrices of left and right multiplication.
//!
//! Components are stored as `(w, x, y, z)` and a quaternion `u + xi + yj + zk`
//! acts on the column vector `(u, x, y, z)ᵀ`. With that convention
//! `left_matrix(L) · vec(P) = vec(L P)` and `right_matrix(R) · vec(P) = vec(P R)`.

use std::fmt;
use std::ops::{Deref, Mul, Neg};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rotation4::{Mat4, Rotation4};
use crate::tolerance::Tolerances;

/// A real quaternion `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn norm_squared(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn conjugate(&self) -> Self {
        quat_conjugate(*self)
    }

    /// Largest componentwise difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        quat_mul(self, rhs)
    }
}

/// Hamilton product `lhs · rhs` with `ij = k`, `jk = i`, `ki = j`.
pub fn quat_mul(lhs: Quaternion, rhs: Quaternion) -> Quaternion {
    let (a, b, c, d) = (lhs.w, lhs.x, lhs.y, lhs.z);
    let (u, x, y, z) = (rhs.w, rhs.x, rhs.y, rhs.z);
    Quaternion::new(
        a * u - b * x - c * y - d * z,
        a * x + b * u + c * z - d * y,
        a * y - b * z + c * u + d * x,
        a * z + b * y - c * x + d * u,
    )
}

pub fn quat_conjugate(q: Quaternion) -> Quaternion {
    Quaternion::new(q.w, -q.x, -q.y, -q.z)
}

/// A quaternion of norm one, within [`Tolerances::unit_tol`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub const IDENTITY: Self = Self(Quaternion::ONE);

    /// Wraps `q` after checking its norm against the default unit tolerance.
    pub fn new(q: Quaternion) -> Result<Self> {
        Self::with_tolerance(q, Tolerances::default().unit_tol)
    }

    pub fn with_tolerance(q: Quaternion, unit_tol: f64) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::NonFinite);
        }
        let deviation = (q.norm_squared() - 1.0).abs();
        if deviation > unit_tol {
            return Err(Error::NotUnit { deviation });
        }
        Ok(Self(q))
    }

    /// Caller guarantees `q` is unit up to roundoff.
    pub(crate) const fn new_unchecked(q: Quaternion) -> Self {
        Self(q)
    }

    /// `(cos α, sin α, 0, 0)`, the unit quaternion rotating the `1I` plane by `α`.
    pub fn from_angle_i(alpha: f64) -> Self {
        Self(Quaternion::new(alpha.cos(), alpha.sin(), 0.0, 0.0))
    }

    pub fn into_inner(self) -> Quaternion {
        self.0
    }

    pub fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }
}

impl Deref for UnitQuaternion {
    type Target = Quaternion;
    fn deref(&self) -> &Quaternion {
        &self.0
    }
}

impl Neg for UnitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Mul for UnitQuaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(quat_mul(self.0, rhs.0))
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `q / ‖q‖` using the default degeneracy threshold.
pub fn normalize(q: Quaternion) -> Result<UnitQuaternion> {
    normalize_with(q, Tolerances::default().degeneracy_tol)
}

pub fn normalize_with(q: Quaternion, degeneracy_tol: f64) -> Result<UnitQuaternion> {
    if !q.is_finite() {
        return Err(Error::NonFinite);
    }
    let norm = q.norm();
    if norm <= degeneracy_tol {
        return Err(Error::ZeroQuaternion { norm });
    }
    Ok(UnitQuaternion(q.scale(1.0 / norm)))
}

/// Matrix of `P ↦ L P`.
pub fn left_matrix(l: UnitQuaternion) -> Rotation4 {
    let (a, b, c, d) = (l.w, l.x, l.y, l.z);
    Rotation4::from_matrix_unchecked(Mat4::from_rows([
        [a, -b, -c, -d],
        [b, a, -d, c],
        [c, d, a, -b],
        [d, -c, b, a],
    ]))
}

/// Matrix of `P ↦ P R`.
pub fn right_matrix(r: UnitQuaternion) -> Rotation4 {
    let (p, q, r, s) = (r.w, r.x, r.y, r.z);
    Rotation4::from_matrix_unchecked(Mat4::from_rows([
        [p, -q, -r, -s],
        [q, p, s, -r],
        [r, -s, p, q],
        [s, r, -q, p],
    ]))
}

/// Angle through which left or right multiplication by `q` turns every
/// half-line from the origin: `arccos(q.w)` in `[0, π]`.
///
/// Evaluated as `atan2(‖(x, y, z)‖, w)`, which agrees with `arccos(w)` on the
/// unit sphere and stays accurate where `arccos` loses half the digits
/// (`w` near ±1).
pub fn isoclinic_angle(q: UnitQuaternion) -> f64 {
    let v = (q.x * q.x + q.y * q.y + q.z * q.z).sqrt();
    v.atan2(q.w)
}
