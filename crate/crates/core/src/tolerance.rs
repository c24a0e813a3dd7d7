use serde::Serialize;

/// Numeric thresholds used across validation, decomposition and classification.
///
/// There is no global tolerance state; every operation that needs a threshold
/// takes one of these explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Accepted `|‖q‖² − 1|` for a unit quaternion.
    pub unit_tol: f64,
    /// Below this norm a quaternion cannot be normalized.
    pub degeneracy_tol: f64,
    /// Accepted `max |AᵀA − I|` when validating input matrices.
    pub ortho_tol: f64,
    /// Accepted `|det A − 1|` when validating input matrices.
    pub det_tol: f64,
    /// Accepted `|‖M‖_F − 1|` for an associate matrix.
    pub norm_tol: f64,
    /// Accepted largest absolute 2×2 minor of an associate matrix.
    pub minor_tol: f64,
    /// Accepted `max |M − L Rᵀ|` after rank-one factorization.
    pub factor_tol: f64,
    /// Accepted `max |A − M_L M_R|` after decomposition.
    pub recon_tol: f64,
    /// Magnitude a component must exceed to fix the canonical sign.
    pub sign_tol: f64,
    /// Component deviation from `(±1, 0, 0, 0)` still treated as the identity quaternion.
    pub iso_tol: f64,
    /// Accepted angle difference when comparing isoclinic angles.
    pub angle_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            unit_tol: 1e-12,
            degeneracy_tol: 1e-150,
            ortho_tol: 1e-9,
            det_tol: 1e-9,
            norm_tol: 1e-10,
            minor_tol: 1e-10,
            factor_tol: 1e-10,
            recon_tol: 1e-9,
            sign_tol: 1e-8,
            iso_tol: 1e-9,
            angle_tol: 1e-9,
        }
    }
}
