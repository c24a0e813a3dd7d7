//! The associate matrix of a 4×4 matrix and the isoclinic decomposition it yields.
//!
//! For `A = M_L M_R` the sixteen products `ap, aq, …, ds` of the components of
//! `L = (a,b,c,d)` and `R = (p,q,r,s)` are linear combinations of the entries
//! of `A`. Arranged as a matrix they form the dyadic product `L Rᵀ`, which is
//! rank one with unit Frobenius norm whenever `A` is a rotation. Factoring it
//! recovers `±(L, R)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quat::{isoclinic_angle, left_matrix, normalize_with, right_matrix, Quaternion, UnitQuaternion};
use crate::rotation4::{van_elfrinkhof, Mat4, Rotation4};
use crate::tolerance::Tolerances;

/// Minor size above which the pivot factors are refined by power iteration.
const REFINE_THRESHOLD: f64 = 1e-12;

/// Row/column index pairs `(i, j)` with `i < j`.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The associate matrix `M` of a 4×4 matrix `A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct AssociateMatrix(Mat4);

impl AssociateMatrix {
    /// Treats an arbitrary matrix as an associate matrix, e.g. an outer product.
    pub fn from_matrix(m: Mat4) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        associate_norm(self)
    }
}

/// Computes `M` from `A`; every entry is a signed quarter-sum of four entries of `A`.
pub fn associate_matrix(a: &Mat4) -> AssociateMatrix {
    let e = |i: usize, j: usize| a[(i, j)];
    let m = Mat4::from_rows([
        [
            e(0, 0) + e(1, 1) + e(2, 2) + e(3, 3),
            e(1, 0) - e(0, 1) - e(3, 2) + e(2, 3),
            e(2, 0) + e(3, 1) - e(0, 2) - e(1, 3),
            e(3, 0) - e(2, 1) + e(1, 2) - e(0, 3),
        ],
        [
            e(1, 0) - e(0, 1) + e(3, 2) - e(2, 3),
            -e(0, 0) - e(1, 1) + e(2, 2) + e(3, 3),
            e(3, 0) - e(2, 1) - e(1, 2) + e(0, 3),
            -e(2, 0) - e(3, 1) - e(0, 2) - e(1, 3),
        ],
        [
            e(2, 0) - e(3, 1) - e(0, 2) + e(1, 3),
            -e(3, 0) - e(2, 1) - e(1, 2) - e(0, 3),
            -e(0, 0) + e(1, 1) - e(2, 2) + e(3, 3),
            e(1, 0) + e(0, 1) - e(3, 2) - e(2, 3),
        ],
        [
            e(3, 0) + e(2, 1) - e(1, 2) - e(0, 3),
            e(2, 0) - e(3, 1) + e(0, 2) - e(1, 3),
            -e(1, 0) - e(0, 1) - e(3, 2) - e(2, 3),
            -e(0, 0) + e(1, 1) + e(2, 2) - e(3, 3),
        ],
    ]);
    AssociateMatrix(m.scale(0.25))
}

/// Frobenius norm of `M`.
pub fn associate_norm(m: &AssociateMatrix) -> f64 {
    m.0.frobenius_norm()
}

/// The minor `m_ik·m_jl − m_jk·m_il` on rows `i < j` and columns `k < l`.
pub fn minor_2x2(m: &Mat4, i: usize, j: usize, k: usize, l: usize) -> Result<f64> {
    if !(i < j && j < 4 && k < l && l < 4) {
        return Err(Error::IndexOutOfRange { i, j, k, l });
    }
    Ok(m[(i, k)] * m[(j, l)] - m[(j, k)] * m[(i, l)])
}

/// Which 2×2 minors [`max_abs_minor`] inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinorScan {
    /// All 36 row-pair × column-pair minors.
    #[default]
    Full,
    /// The nine minors pairing row 0 and column 0 with each other row and
    /// column; enough to show columns 1–3 proportional to column 0 when that
    /// column is nonzero.
    AgainstFirst,
}

pub fn max_abs_minor(m: &Mat4, scan: MinorScan) -> f64 {
    let minor = |i, j, k, l| (m[(i, k)] * m[(j, l)] - m[(j, k)] * m[(i, l)]).abs();
    match scan {
        MinorScan::Full => PAIRS
            .iter()
            .flat_map(|&(i, j)| PAIRS.iter().map(move |&(k, l)| minor(i, j, k, l)))
            .fold(0.0, f64::max),
        MinorScan::AgainstFirst => (1..4)
            .flat_map(|j| (1..4).map(move |l| minor(0, j, 0, l)))
            .fold(0.0, f64::max),
    }
}

/// Flips `(l, r)` jointly so that the first component of `l` with magnitude
/// above `sign_tol` is positive.
pub fn canonicalize(l: UnitQuaternion, r: UnitQuaternion, sign_tol: f64) -> (UnitQuaternion, UnitQuaternion) {
    match l.to_array().into_iter().find(|c| c.abs() > sign_tol) {
        Some(c) if c < 0.0 => (-l, -r),
        _ => (l, r),
    }
}

/// Factors a rank-one `M` as `L Rᵀ` with unit `L`, `R` in canonical sign.
///
/// The row and column through the entry of largest magnitude are exact
/// multiples of `R` and `L` for a true dyadic product. Slightly noisy input
/// is smoothed with two power-iteration steps on `MᵀM`.
pub fn rank1_factor(m: &AssociateMatrix, tol: &Tolerances) -> Result<(UnitQuaternion, UnitQuaternion)> {
    let mat = &m.0;
    if !mat.is_finite() {
        return Err(Error::NonFinite);
    }
    let norm = associate_norm(m);
    if norm < 0.5 {
        return Err(Error::DegenerateNorm { norm });
    }
    let max_minor = max_abs_minor(mat, MinorScan::Full);
    if max_minor > tol.minor_tol {
        return Err(Error::NotRankOne { max_minor });
    }

    let (mut pi, mut pj) = (0, 0);
    for i in 0..4 {
        for j in 0..4 {
            if mat[(i, j)].abs() > mat[(pi, pj)].abs() {
                (pi, pj) = (i, j);
            }
        }
    }

    let (l, r) = if max_minor > REFINE_THRESHOLD {
        refine(mat, mat.row(pi), tol)?
    } else {
        let l = normalize_with(Quaternion::from_array(mat.column(pj)), tol.degeneracy_tol)?;
        let r = normalize_with(Quaternion::from_array(mat.row(pi)), tol.degeneracy_tol)?;
        let agrees = (l.to_array()[pi] * r.to_array()[pj]).signum() == mat[(pi, pj)].signum();
        (l, if agrees { r } else { -r })
    };

    let residual = mat.max_abs_diff(&Mat4::outer(l.to_array(), r.to_array()));
    if residual > tol.factor_tol {
        return Err(Error::NormDeviation {
            deviation: (norm - 1.0).abs(),
        });
    }
    Ok(canonicalize(l, r, tol.sign_tol))
}

/// Dominant singular pair of `m` starting from `v0`; the sign of `l` follows `m r`.
fn refine(m: &Mat4, v0: [f64; 4], tol: &Tolerances) -> Result<(UnitQuaternion, UnitQuaternion)> {
    let gram = m.transpose() * *m;
    let mut r = normalize_with(Quaternion::from_array(v0), tol.degeneracy_tol)?;
    for _ in 0..2 {
        r = normalize_with(Quaternion::from_array(gram.mul_vec(r.to_array())), tol.degeneracy_tol)?;
    }
    let l = normalize_with(Quaternion::from_array(m.mul_vec(r.to_array())), tol.degeneracy_tol)?;
    Ok((l, r))
}

/// `A = M_L · M_R` for the canonical pair `(left, right)`; the other
/// decomposition is `(−left, −right)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsoclinicDecomposition {
    pub left: UnitQuaternion,
    pub right: UnitQuaternion,
    /// `max |A − M_L M_R|`.
    pub reconstruction_residual: f64,
    /// `|‖M‖_F − 1|`.
    pub norm_deviation: f64,
    /// Largest absolute 2×2 minor of `M`.
    pub max_minor: f64,
}

impl IsoclinicDecomposition {
    /// The second decomposition, differing only in sign.
    pub fn alternate(&self) -> (UnitQuaternion, UnitQuaternion) {
        (-self.left, -self.right)
    }

    pub fn left_matrix(&self) -> Rotation4 {
        left_matrix(self.left)
    }

    pub fn right_matrix(&self) -> Rotation4 {
        right_matrix(self.right)
    }

    pub fn reconstruct(&self) -> Rotation4 {
        van_elfrinkhof(self.left, self.right)
    }
}

/// Decomposes a validated rotation into its left- and right-isoclinic factors.
pub fn decompose(a: &Rotation4, tol: &Tolerances) -> Result<IsoclinicDecomposition> {
    decompose_matrix(a.matrix(), tol)
}

/// As [`decompose`] but for any matrix; inputs that are not rotations are
/// rejected by the norm, minor or reconstruction checks.
pub fn decompose_matrix(a: &Mat4, tol: &Tolerances) -> Result<IsoclinicDecomposition> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let m = associate_matrix(a);
    let norm_deviation = (associate_norm(&m) - 1.0).abs();
    let max_minor = max_abs_minor(m.matrix(), MinorScan::Full);
    if max_minor > tol.minor_tol {
        return Err(Error::NotRankOne { max_minor });
    }
    if norm_deviation > tol.norm_tol {
        return Err(Error::NormDeviation {
            deviation: norm_deviation,
        });
    }
    let (left, right) = rank1_factor(&m, tol)?;
    let reconstruction_residual = van_elfrinkhof(left, right).matrix().max_abs_diff(a);
    if reconstruction_residual > tol.recon_tol {
        return Err(Error::ReconstructionFailure {
            residual: reconstruction_residual,
        });
    }
    Ok(IsoclinicDecomposition {
        left,
        right,
        reconstruction_residual,
        norm_deviation,
        max_minor,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IsoclinicKind {
    Identity,
    CentralReversion,
    LeftIsoclinic,
    RightIsoclinic,
    General,
}

impl fmt::Display for IsoclinicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Isoclinic class of a rotation with the angles of its two factors.
///
/// Angles are read from the sign representative in which a trivial factor is
/// `+1`, so a left-isoclinic `M_L` reports `arccos(L.w)` and right angle 0.
/// For the other classes the canonical pair is used, except that when the
/// left scalar part is negligible the right scalar part is made nonnegative.
/// This makes the angles independent of the coordinate frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RotationClass {
    pub kind: IsoclinicKind,
    pub left_angle: f64,
    pub right_angle: f64,
}

fn is_real_unit(q: &UnitQuaternion, iso_tol: f64) -> bool {
    (q.w.abs() - 1.0).abs() <= iso_tol && q.x.abs() <= iso_tol && q.y.abs() <= iso_tol && q.z.abs() <= iso_tol
}

/// Classifies a rotation by which of its quaternion factors are `±1`.
pub fn classify(a: &Rotation4, tol: &Tolerances) -> Result<RotationClass> {
    let d = decompose(a, tol)?;
    Ok(classify_decomposition(&d, tol))
}

pub fn classify_decomposition(d: &IsoclinicDecomposition, tol: &Tolerances) -> RotationClass {
    let (l, r) = (d.left, d.right);
    let left_trivial = is_real_unit(&l, tol.iso_tol);
    let right_trivial = is_real_unit(&r, tol.iso_tol);
    let kind = match (left_trivial, right_trivial) {
        (true, true) if l.w * r.w > 0.0 => IsoclinicKind::Identity,
        (true, true) => IsoclinicKind::CentralReversion,
        (false, true) => IsoclinicKind::LeftIsoclinic,
        (true, false) => IsoclinicKind::RightIsoclinic,
        (false, false) => IsoclinicKind::General,
    };
    let flip = match kind {
        IsoclinicKind::LeftIsoclinic => r.w < 0.0,
        IsoclinicKind::RightIsoclinic => l.w < 0.0,
        IsoclinicKind::General => l.w.abs() <= tol.sign_tol && r.w < 0.0,
        IsoclinicKind::Identity | IsoclinicKind::CentralReversion => false,
    };
    let (l, r) = if flip { (-l, -r) } else { (l, r) };
    RotationClass {
        kind,
        left_angle: isoclinic_angle(l),
        right_angle: isoclinic_angle(r),
    }
}
