//! Complex 4-dimensional linear algebra over signature-(3,1) Hermitian forms.
//!
//! Everything downstream works projectively in ℂ^{3,1}: vectors are homogeneous
//! coordinates, matrices act on the left, and the chosen Hermitian form (Siegel
//! or ball) decides which cone of negative vectors projectivizes to the
//! symmetric space. This module owns the form arithmetic, the sign
//! classification of vectors, and the determinant normalization that pins group
//! elements into SU(3,1).

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use thiserror::Error;

pub type C = Complex64;
pub type ComplexMatrix4 = Matrix4<C>;
pub type ComplexVector4 = Vector4<C>;

/// Default relative width of the null band in [`vector_sign`].
///
/// Lifts of boundary points are exactly null analytically but accumulate
/// rounding under composed isometries; 1e-9 absorbs that drift while keeping
/// honestly positive/negative vectors out of the band.
pub const NULL_BAND: f64 = 1e-9;

/// e^{iθ} as a complex scalar.
#[inline]
pub fn cis(theta: f64) -> C {
    C::new(theta.cos(), theta.sin())
}

/// cos α computed as sin(π/2 − α), exact at α = π/2.
///
/// Many formulas here take √cos α; plain `cos` leaves ~6e-17 at the corner,
/// which the square root amplifies to ~8e-9 and ruins the decoupling of the
/// α = π/2 edge.
#[inline]
pub fn cos_alpha(alpha: f64) -> f64 {
    (std::f64::consts::FRAC_PI_2 - alpha).sin()
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("zero vector has no sign under the Hermitian form")]
    ZeroVector,
    #[error("matrix is numerically singular (|det| = {0:.3e})")]
    SingularMatrix(f64),
}

/// The two Hermitian matrices of signature (3,1) used throughout.
///
/// `Siegel` is the paraboloid model whose ideal boundary carries the Heisenberg
/// group; `Ball` is the unit-ball model, convenient for diagonal elliptic
/// elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermitianForm {
    Siegel,
    Ball,
}

impl HermitianForm {
    /// The defining Hermitian matrix H (H* = H, signature (3,1)).
    pub fn matrix(self) -> ComplexMatrix4 {
        let o = C::new(0.0, 0.0);
        let l = C::new(1.0, 0.0);
        match self {
            HermitianForm::Siegel => Matrix4::new(
                o, o, o, l, //
                o, l, o, o, //
                o, o, l, o, //
                l, o, o, o,
            ),
            HermitianForm::Ball => Matrix4::new(
                l, o, o, o, //
                o, l, o, o, //
                o, o, l, o, //
                o, o, o, -l,
            ),
        }
    }
}

/// The Hermitian product ⟨z, w⟩ = w* · H · z.
///
/// Conjugate-symmetric: `herm_inner(w, z) = herm_inner(z, w).conj()`.
#[inline]
pub fn herm_inner(z: &ComplexVector4, w: &ComplexVector4, form: HermitianForm) -> C {
    match form {
        HermitianForm::Siegel => {
            w[0].conj() * z[3] + w[1].conj() * z[1] + w[2].conj() * z[2] + w[3].conj() * z[0]
        }
        HermitianForm::Ball => {
            w[0].conj() * z[0] + w[1].conj() * z[1] + w[2].conj() * z[2] - w[3].conj() * z[3]
        }
    }
}

/// Sign class of a nonzero vector with respect to a form: the V₋/V₀/V₊ split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    Negative,
    Null,
    Positive,
}

/// Sign classification together with the raw value of ⟨z, z⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorSign {
    pub value: SignClass,
    /// The (real) self-product ⟨z, z⟩.
    pub magnitude: f64,
}

/// Classify a vector as negative, null, or positive under the form.
///
/// Null is declared when |⟨z,z⟩| ≤ tol · ‖z‖², so the label is invariant under
/// rescaling z ↦ cz.
pub fn vector_sign(
    z: &ComplexVector4,
    form: HermitianForm,
    tol: f64,
) -> Result<VectorSign, LinalgError> {
    let scale = z.norm_squared();
    if scale == 0.0 {
        return Err(LinalgError::ZeroVector);
    }
    let magnitude = herm_inner(z, z, form).re;
    let value = if magnitude.abs() <= tol * scale {
        SignClass::Null
    } else if magnitude < 0.0 {
        SignClass::Negative
    } else {
        SignClass::Positive
    };
    Ok(VectorSign { value, magnitude })
}

/// Entry-wise max-modulus norm.
pub fn max_abs(m: &ComplexMatrix4) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// ‖M*HM − H‖_max. Zero means M preserves the form exactly, i.e. M ∈ U(3,1).
pub fn unitarity_defect(m: &ComplexMatrix4, form: HermitianForm) -> f64 {
    let h = form.matrix();
    max_abs(&(m.adjoint() * h * m - h))
}

/// Rescale M by the principal fourth root of det(M)⁻¹ so that det = 1.
///
/// The residual fourth-root-of-unity ambiguity is harmless for classification:
/// the eigenvalue discriminant is invariant under M ↦ iM.
pub fn normalize_det(m: &ComplexMatrix4) -> Result<ComplexMatrix4, LinalgError> {
    let d = m.determinant();
    if d.norm() < 1e-12 {
        return Err(LinalgError::SingularMatrix(d.norm()));
    }
    let s = d.inv().powf(0.25);
    Ok(m * s)
}

/// True when every entry of the matrix is finite.
pub fn all_finite(m: &ComplexMatrix4) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}
