//! 4×4 matrices, validated 4D rotations and the composition `P ↦ L P R`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quat::{left_matrix, quat_mul, right_matrix, Quaternion, UnitQuaternion};
use crate::tolerance::Tolerances;

/// Dense 4×4 real matrix, indexed `(row, column)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
#[serde(transparent)]
pub struct Mat4([[f64; 4]; 4]);

impl Mat4 {
    pub const ZERO: Self = Self([[0.0; 4]; 4]);
    pub const IDENTITY: Self = Self([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    pub const fn from_rows(rows: [[f64; 4]; 4]) -> Self {
        Self(rows)
    }

    pub fn from_row_major(values: &[f64; 16]) -> Self {
        let mut m = Self::ZERO;
        for (k, v) in values.iter().enumerate() {
            m.0[k / 4][k % 4] = *v;
        }
        m
    }

    pub fn from_diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::ZERO;
        for (k, v) in d.into_iter().enumerate() {
            m.0[k][k] = v;
        }
        m
    }

    /// Outer product `u vᵀ`.
    pub fn outer(u: [f64; 4], v: [f64; 4]) -> Self {
        Self(u.map(|ui| v.map(|vj| ui * vj)))
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.0
    }

    pub fn row(&self, i: usize) -> [f64; 4] {
        self.0[i]
    }

    pub fn column(&self, j: usize) -> [f64; 4] {
        [self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]]
    }

    pub fn to_row_major(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        for (k, v) in out.iter_mut().enumerate() {
            *v = self.0[k / 4][k % 4];
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    pub fn trace(&self) -> f64 {
        trace(self)
    }

    pub fn mul_vec(&self, v: [f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|v| v * s)
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|v| *v = f(*v));
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// `max |self − other|` over all entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|v| v.is_finite())
    }

    /// Determinant by Laplace expansion along the first two rows.
    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        let s0 = m[0][0] * m[1][1] - m[1][0] * m[0][1];
        let s1 = m[0][0] * m[1][2] - m[1][0] * m[0][2];
        let s2 = m[0][0] * m[1][3] - m[1][0] * m[0][3];
        let s3 = m[0][1] * m[1][2] - m[1][1] * m[0][2];
        let s4 = m[0][1] * m[1][3] - m[1][1] * m[0][3];
        let s5 = m[0][2] * m[1][3] - m[1][2] * m[0][3];

        let c5 = m[2][2] * m[3][3] - m[3][2] * m[2][3];
        let c4 = m[2][1] * m[3][3] - m[3][1] * m[2][3];
        let c3 = m[2][1] * m[3][2] - m[3][1] * m[2][2];
        let c2 = m[2][0] * m[3][3] - m[3][0] * m[2][3];
        let c1 = m[2][0] * m[3][2] - m[3][0] * m[2][2];
        let c0 = m[2][0] * m[3][1] - m[3][0] * m[2][1];

        s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
    }

    /// `max |AᵀA − I|`.
    pub fn orthogonality_deviation(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&Mat4::IDENTITY)
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        mat_mul(&self, &rhs)
    }
}

impl Mul<f64> for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: f64) -> Mat4 {
        self.scale(rhs)
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        self + (-rhs)
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        self.map(|v| -v)
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{:>22}, {:>22}, {:>22}, {:>22}]", row[0], row[1], row[2], row[3])?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = Mat4::ZERO;
    for i in 0..4 {
        for j in 0..4 {
            out.0[i][j] = (0..4).map(|k| a.0[i][k] * b.0[k][j]).sum();
        }
    }
    out
}

pub fn trace(a: &Mat4) -> f64 {
    a.0[0][0] + a.0[1][1] + a.0[2][2] + a.0[3][3]
}

/// A point of 4-space with coordinates `(u, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Point4 {
    pub u: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point4 {
    pub const fn new(u: f64, x: f64, y: f64, z: f64) -> Self {
        Self { u, x, y, z }
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.u, self.x, self.y, self.z]
    }

    pub const fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub fn norm(&self) -> f64 {
        self.to_array().iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

impl From<Quaternion> for Point4 {
    fn from(q: Quaternion) -> Self {
        Self::new(q.w, q.x, q.y, q.z)
    }
}

impl From<Point4> for Quaternion {
    fn from(p: Point4) -> Self {
        Quaternion::new(p.u, p.x, p.y, p.z)
    }
}

/// An orthogonal 4×4 matrix with determinant +1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Rotation4(Mat4);

impl Rotation4 {
    pub const IDENTITY: Self = Self(Mat4::IDENTITY);

    /// Validates `m` with the default input tolerances.
    pub fn new(m: Mat4) -> Result<Self> {
        let tol = Tolerances::default();
        validate_rotation(m, tol.ortho_tol, tol.det_tol)
    }

    /// Caller guarantees `m` is a rotation up to roundoff.
    pub(crate) const fn from_matrix_unchecked(m: Mat4) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat4 {
        self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn apply(&self, p: Point4) -> Point4 {
        apply(self, p)
    }
}

impl Mul for Rotation4 {
    type Output = Rotation4;
    fn mul(self, rhs: Rotation4) -> Rotation4 {
        Rotation4(self.0 * rhs.0)
    }
}

impl Neg for Rotation4 {
    type Output = Rotation4;
    fn neg(self) -> Rotation4 {
        Rotation4(-self.0)
    }
}

impl AsRef<Mat4> for Rotation4 {
    fn as_ref(&self) -> &Mat4 {
        &self.0
    }
}

impl fmt::Display for Rotation4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Accepts `a` as a rotation iff `max |AᵀA − I| ≤ ortho_tol` and `|det A − 1| ≤ det_tol`.
pub fn validate_rotation(a: Mat4, ortho_tol: f64, det_tol: f64) -> Result<Rotation4> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let max_deviation = a.orthogonality_deviation();
    if max_deviation > ortho_tol {
        return Err(Error::NotOrthogonal { max_deviation });
    }
    let determinant = a.determinant();
    if (determinant - 1.0).abs() > det_tol {
        return Err(Error::NotProperRotation { determinant });
    }
    Ok(Rotation4(a))
}

/// Matrix of `P ↦ L P R`, evaluated entry by entry from the sixteen
/// bilinear forms in `(a,b,c,d)` and `(p,q,r,s)`.
pub fn van_elfrinkhof(l: UnitQuaternion, r: UnitQuaternion) -> Rotation4 {
    let (a, b, c, d) = (l.w, l.x, l.y, l.z);
    let (p, q, r, s) = (r.w, r.x, r.y, r.z);
    Rotation4(Mat4::from_rows([
        [
            a * p - b * q - c * r - d * s,
            -a * q - b * p + c * s - d * r,
            -a * r - b * s - c * p + d * q,
            -a * s + b * r - c * q - d * p,
        ],
        [
            b * p + a * q - d * r + c * s,
            -b * q + a * p + d * s + c * r,
            -b * r + a * s - d * p - c * q,
            -b * s - a * r - d * q + c * p,
        ],
        [
            c * p + d * q + a * r - b * s,
            -c * q + d * p - a * s - b * r,
            -c * r + d * s + a * p + b * q,
            -c * s - d * r + a * q - b * p,
        ],
        [
            d * p - c * q + b * r + a * s,
            -d * q - c * p - b * s + a * r,
            -d * r - c * s + b * p - a * q,
            -d * s + c * r + b * q + a * p,
        ],
    ]))
}

/// Same map as [`van_elfrinkhof`], computed as the product `M_L · M_R`.
pub fn van_elfrinkhof_product(l: UnitQuaternion, r: UnitQuaternion) -> Rotation4 {
    left_matrix(l) * right_matrix(r)
}

pub fn apply(a: &Rotation4, p: Point4) -> Point4 {
    Point4::from_array(a.0.mul_vec(p.to_array()))
}

/// `L P R` computed with quaternion products.
pub fn sandwich(l: UnitQuaternion, p: Quaternion, r: UnitQuaternion) -> Quaternion {
    quat_mul(quat_mul(*l, p), *r)
}

/// Uniform sample on the unit 3-sphere: four standard normal deviates, normalized.
pub fn random_unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> UnitQuaternion {
    loop {
        let q = Quaternion::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        let n = q.norm();
        // a zero draw has probability zero but would not normalize
        if n > 1e-100 {
            return UnitQuaternion::new_unchecked(q.scale(1.0 / n));
        }
    }
}

/// Independent uniform `(L, R)`, deterministic in `seed`.
pub fn random_quaternion_pair(seed: u64) -> (UnitQuaternion, UnitQuaternion) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = random_unit_quaternion(&mut rng);
    let r = random_unit_quaternion(&mut rng);
    (l, r)
}

/// Haar-uniform rotation of 4-space, deterministic in `seed`.
pub fn random_rotation(seed: u64) -> Rotation4 {
    let (l, r) = random_quaternion_pair(seed);
    van_elfrinkhof(l, r)
}
