//! Isometries of H³_ℂ as presentation matrices with a chirality flag, plus the
//! full dynamical classification.
//!
//! A holomorphic isometry acts on lifts by M·q; an anti-holomorphic one by
//! M·q̄, so composition carries a conjugation: fg has matrix M·N̄ when f is
//! anti-holomorphic. Classification of a single matrix runs through the
//! discriminant of its characteristic polynomial (the holy grail function):
//! positive means regular elliptic, negative regular loxodromic, and the zero
//! band falls through to an eigenstructure refinement that separates special
//! elliptic, non-regular loxodromic, and the parabolic subtypes.


use thiserror::Error;

use crate::eigen::{eigen4, EigenDecomposition, EigenError, CLUSTER_TOL};
use crate::heisenberg::{boundary_from_lift, standard_lift, GeometryError, HeisenbergPoint};
use crate::linalg::{
    herm_inner, normalize_det, unitarity_defect, ComplexMatrix4, ComplexVector4, HermitianForm, C,
};

/// Relative scale of the |𝓗| ≈ 0 band: |𝓗| ≤ HOLY_BAND · max(1, |τ|⁶).
///
/// 𝓗 is a degree-12 expression in the eigenvalues, so the band must scale
/// with the trace to stay meaningful for matrices away from the identity.
pub const HOLY_BAND: f64 = 1e-8;

/// An eigenvalue modulus beyond 1 + LOXODROMIC_TOL certifies expansion.
pub const LOXODROMIC_TOL: f64 = 1e-9;

/// Default admissible unitarity defect for presentation matrices.
pub const UNITARITY_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IsometryError {
    #[error("isometries live over different Hermitian forms")]
    FormMismatch,
    #[error("matrix does not preserve the form (defect {0:.3e})")]
    ExcessiveUnitarityDefect(f64),
    #[error("determinant is not unimodular (|det − 1| = {0:.3e})")]
    NotUnimodularDeterminant(f64),
    #[error("no eigenvector is negative under the form; the element is not elliptic")]
    NoNegativeEigenvector,
    #[error("eigenspace signatures are too degenerate to read angle data")]
    DegenerateEigenspaces,
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Holomorphic,
    AntiHolomorphic,
}

/// A presentation matrix together with its chirality and the form it preserves.
#[derive(Debug, Clone)]
pub struct Isometry {
    matrix: ComplexMatrix4,
    chirality: Chirality,
    form: HermitianForm,
}

impl Isometry {
    pub fn new(
        matrix: ComplexMatrix4,
        chirality: Chirality,
        form: HermitianForm,
    ) -> Result<Self, IsometryError> {
        let defect = unitarity_defect(&matrix, form);
        if defect > UNITARITY_TOL {
            return Err(IsometryError::ExcessiveUnitarityDefect(defect));
        }
        Ok(Isometry {
            matrix,
            chirality,
            form,
        })
    }

    pub fn holomorphic(matrix: ComplexMatrix4, form: HermitianForm) -> Result<Self, IsometryError> {
        Isometry::new(matrix, Chirality::Holomorphic, form)
    }

    pub fn anti_holomorphic(
        matrix: ComplexMatrix4,
        form: HermitianForm,
    ) -> Result<Self, IsometryError> {
        Isometry::new(matrix, Chirality::AntiHolomorphic, form)
    }

    pub fn identity(form: HermitianForm) -> Self {
        Isometry {
            matrix: ComplexMatrix4::identity(),
            chirality: Chirality::Holomorphic,
            form,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.matrix
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn form(&self) -> HermitianForm {
        self.form
    }
}

/// Composition f∘g respecting chirality: anti-holomorphic f conjugates the
/// matrix of g, and chiralities combine by XOR.
pub fn compose(f: &Isometry, g: &Isometry) -> Result<Isometry, IsometryError> {
    if f.form != g.form {
        return Err(IsometryError::FormMismatch);
    }
    let gm = match f.chirality {
        Chirality::Holomorphic => g.matrix,
        Chirality::AntiHolomorphic => g.matrix.map(|z| z.conj()),
    };
    let chirality = if f.chirality == g.chirality {
        Chirality::Holomorphic
    } else {
        Chirality::AntiHolomorphic
    };
    Ok(Isometry {
        matrix: f.matrix * gm,
        chirality,
        form: f.form,
    })
}

/// Apply an isometry to a boundary point (Siegel model).
pub fn apply(f: &Isometry, p: &HeisenbergPoint) -> Result<HeisenbergPoint, IsometryError> {
    let lift = standard_lift(p);
    let lifted = match f.chirality {
        Chirality::Holomorphic => lift,
        Chirality::AntiHolomorphic => lift.map(|z| z.conj()),
    };
    Ok(boundary_from_lift(&(f.matrix * lifted))?)
}

/// τ, σ and the holy grail value of a det-1 matrix.
#[derive(Debug, Clone, Copy)]
pub struct TraceData {
    pub tau: C,
    pub sigma: f64,
    pub holy: f64,
}

/// Trace data of a determinant-normalized SU(3,1) matrix.
///
/// The characteristic polynomial is X⁴ − τX³ + σX² − τ̄X + 1 with σ real;
/// σ is reported as the real part of (tr²M − tr M²)/2.
pub fn trace_data(m: &ComplexMatrix4) -> Result<TraceData, IsometryError> {
    let det_err = (m.determinant() - C::ONE).norm();
    if det_err > 1e-8 {
        return Err(IsometryError::NotUnimodularDeterminant(det_err));
    }
    let tau = m.trace();
    let sigma = ((tau * tau - (m * m).trace()) * 0.5).re;
    Ok(TraceData {
        tau,
        sigma,
        holy: holy_grail(tau, sigma),
    })
}

/// The holy grail function 𝓗(τ, σ): the discriminant of the characteristic
/// polynomial X⁴ − τX³ + σX² − τ̄X + 1 of an SU(3,1) matrix.
pub fn holy_grail(tau: C, sigma: f64) -> f64 {
    let t2 = tau.norm_sqr();
    let re2 = 2.0 * (tau * tau).re; // τ² + τ̄²
    let a = sigma * sigma / 3.0 - t2 + 4.0;
    let b = 2.0 * sigma.powi(3) / 27.0 - t2 * sigma / 3.0 - 8.0 * sigma / 3.0 + re2;
    4.0 * a.powi(3) - 27.0 * b * b
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParabolicSubtype {
    Unipotent,
    ElliptoParabolic { axis_dim: u8 },
}

/// Dynamical type of an SU(3,1) matrix acting on H³_ℂ and its boundary.
#[derive(Debug, Clone, PartialEq)]
pub enum Classification {
    RegularElliptic { angles: (f64, f64, f64) },
    SpecialElliptic,
    RegularLoxodromic,
    Loxodromic,
    Parabolic { subtype: ParabolicSubtype },
    /// The sign of 𝓗 and the eigenstructure disagree or are too marginal to
    /// call; carries the holy grail value as the diagnostic.
    Boundary { holy: f64 },
}

impl Classification {
    /// Short stable label, used by the CLI.
    pub fn label(&self) -> String {
        match self {
            Classification::RegularElliptic { .. } => "regular-elliptic".into(),
            Classification::SpecialElliptic => "special-elliptic".into(),
            Classification::RegularLoxodromic => "regular-loxodromic".into(),
            Classification::Loxodromic => "loxodromic".into(),
            Classification::Parabolic { subtype } => match subtype {
                ParabolicSubtype::Unipotent => "parabolic-unipotent".into(),
                ParabolicSubtype::ElliptoParabolic { axis_dim } => {
                    format!("parabolic-ellipto-axis{axis_dim}")
                }
            },
            Classification::Boundary { .. } => "indeterminate".into(),
        }
    }

    pub fn is_parabolic(&self) -> bool {
        matches!(self, Classification::Parabolic { .. })
    }

    pub fn is_elliptic(&self) -> bool {
        matches!(
            self,
            Classification::RegularElliptic { .. } | Classification::SpecialElliptic
        )
    }
}

/// Classify a matrix in U(3,1) (up to scale) acting on H³_ℂ.
///
/// The determinant is normalized internally; `tol` bounds the admissible
/// unitarity defect. Inside the |𝓗| ≈ 0 band the decision falls to the
/// eigenstructure: diagonalizable input splits into elliptic vs loxodromic by
/// eigenvalue moduli, non-diagonalizable input is parabolic with the subtype
/// read from the defective cluster's multiplicity.
pub fn classify(
    m: &ComplexMatrix4,
    form: HermitianForm,
    tol: f64,
) -> Result<Classification, IsometryError> {
    let defect = unitarity_defect(m, form);
    if defect > tol {
        return Err(IsometryError::ExcessiveUnitarityDefect(defect));
    }
    let n = normalize_det(m).map_err(|_| IsometryError::NotUnimodularDeterminant(f64::NAN))?;
    let td = trace_data(&n)?;
    let band = HOLY_BAND * td.tau.norm().powi(6).max(1.0);

    if td.holy > band {
        return match elliptic_angle_type(&n, form) {
            Ok(angles) => Ok(Classification::RegularElliptic { angles }),
            Err(_) => Ok(Classification::Boundary { holy: td.holy }),
        };
    }
    if td.holy < -band {
        return Ok(Classification::RegularLoxodromic);
    }

    let eig = match eigen4(&n, CLUSTER_TOL) {
        Ok(e) => e,
        Err(_) => return Ok(Classification::Boundary { holy: td.holy }),
    };
    if eig.diagonalizable {
        let expanding = eig
            .pairs
            .iter()
            .any(|p| p.value.norm() > 1.0 + LOXODROMIC_TOL);
        if expanding {
            return Ok(Classification::Loxodromic);
        }
        return Ok(Classification::SpecialElliptic);
    }

    // Parabolic. One defective cluster decides the subtype.
    let defective: Vec<_> = eig
        .pairs
        .iter()
        .filter(|p| p.basis.len() < p.multiplicity)
        .collect();
    if eig.pairs.len() == 1 {
        let lambda = eig.pairs[0].value;
        if (lambda.powu(4) - C::ONE).norm() <= 1e-6 {
            return Ok(Classification::Parabolic {
                subtype: ParabolicSubtype::Unipotent,
            });
        }
        return Ok(Classification::Boundary { holy: td.holy });
    }
    match defective.as_slice() {
        [cluster] => {
            let axis_dim = match cluster.multiplicity {
                2 => 1,
                3 => 2,
                _ => return Ok(Classification::Boundary { holy: td.holy }),
            };
            Ok(Classification::Parabolic {
                subtype: ParabolicSubtype::ElliptoParabolic { axis_dim },
            })
        }
        _ => Ok(Classification::Boundary { holy: td.holy }),
    }
}

/// Per-cluster signature of the Hermitian form restricted to the eigenspace.
struct ClusterSignature {
    value: C,
    positive: usize,
    negative: usize,
    null_directions: Vec<ComplexVector4>,
}

fn cluster_signatures(eig: &EigenDecomposition, form: HermitianForm) -> Vec<ClusterSignature> {
    const GRAM_NULL: f64 = 1e-8;
    eig.pairs
        .iter()
        .map(|pair| {
            let k = pair.basis.len();
            // Padded Gram G = V*HV, zero outside the leading k×k block; the
            // padding contributes exactly zero eigenvalues, which do not
            // disturb the positive/negative counts.
            let mut gram = ComplexMatrix4::zeros();
            for i in 0..k {
                for j in 0..k {
                    gram[(j, i)] = herm_inner(&pair.basis[i], &pair.basis[j], form);
                }
            }
            let (evals, evecs) = crate::eigen::jacobi_hermitian(&gram);
            let mut positive = 0;
            let mut negative = 0;
            let mut null_directions = Vec::new();
            for (idx, &g) in evals.iter().enumerate() {
                if g > GRAM_NULL {
                    positive += 1;
                } else if g < -GRAM_NULL {
                    negative += 1;
                } else {
                    // Only coordinates inside the eigenspace matter; padding
                    // directions have no basis support.
                    let w = evecs[idx];
                    let support: f64 = (0..k).map(|i| w[i].norm_sqr()).sum();
                    if support > 0.5 {
                        let mut v = ComplexVector4::zeros();
                        for i in 0..k {
                            v += pair.basis[i] * w[i];
                        }
                        null_directions.push(v);
                    }
                }
            }
            ClusterSignature {
                value: pair.value,
                positive,
                negative,
                null_directions,
            }
        })
        .collect()
}

/// Rotation angles of an elliptic element, read from eigenvalue ratios against
/// the eigenvalue whose eigenspace carries the negative direction.
///
/// Returns the three angles arg(λⱼ/μ) ∈ [0, 2π) sorted ascending, one per
/// positive direction. Invariant under rescaling the matrix.
pub fn elliptic_angle_type(
    m: &ComplexMatrix4,
    form: HermitianForm,
) -> Result<(f64, f64, f64), IsometryError> {
    let eig = eigen4(m, CLUSTER_TOL)?;
    let sigs = cluster_signatures(&eig, form);
    let mu = sigs
        .iter()
        .find(|s| s.negative >= 1)
        .ok_or(IsometryError::NoNegativeEigenvector)?
        .value;
    let mut angles = Vec::with_capacity(3);
    for s in &sigs {
        let mut theta = (s.value / mu).arg();
        if theta < 0.0 {
            theta += std::f64::consts::TAU;
        }
        if (std::f64::consts::TAU - theta).abs() < 1e-9 {
            theta = 0.0;
        }
        for _ in 0..s.positive {
            angles.push(theta);
        }
    }
    if angles.len() != 3 {
        return Err(IsometryError::DegenerateEigenspaces);
    }
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok((angles[0], angles[1], angles[2]))
}

/// Fixed points of the projective action on ∂H³_ℂ: projectivized null
/// eigenvectors, deduplicated.
///
/// Eigenspaces of indefinite signature fix a whole boundary circle; those
/// contribute no isolated points and are skipped.
pub fn boundary_fixed_points(m: &ComplexMatrix4) -> Result<Vec<HeisenbergPoint>, IsometryError> {
    let eig = eigen4(m, CLUSTER_TOL)?;
    let sigs = cluster_signatures(&eig, HermitianForm::Siegel);
    let mut out: Vec<HeisenbergPoint> = Vec::new();
    for s in &sigs {
        if s.negative >= 1 && !s.null_directions.is_empty() {
            continue;
        }
        for v in &s.null_directions {
            if let Ok(p) = boundary_from_lift(v) {
                if !out.iter().any(|q| q.approx_eq(&p, 1e-8)) {
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{Matrix4, Vector4};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn cis(theta: f64) -> C {
        C::new(theta.cos(), theta.sin())
    }

    fn diag(a: C, b: C, d: C, e: C) -> ComplexMatrix4 {
        Matrix4::from_diagonal(&Vector4::new(a, b, d, e))
    }

    /// The order-three ball-model elements with eigenvector sign patterns that
    /// pin down the three angle types.
    fn e012() -> ComplexMatrix4 {
        let w = std::f64::consts::TAU / 3.0;
        diag(C::ONE, cis(w), cis(2.0 * w), C::ONE)
    }

    fn e112() -> ComplexMatrix4 {
        let w = std::f64::consts::TAU / 3.0;
        diag(cis(w), cis(w), cis(2.0 * w), C::ONE) * cis(-w)
    }

    fn e122() -> ComplexMatrix4 {
        let w = std::f64::consts::TAU / 3.0;
        diag(cis(w), cis(2.0 * w), cis(2.0 * w), C::ONE) * cis(-5.0 * std::f64::consts::PI / 6.0)
    }

    #[test]
    fn trace_data_identity() {
        let td = trace_data(&ComplexMatrix4::identity()).unwrap();
        assert_eq!(td.tau, c(4.0, 0.0));
        assert_eq!(td.sigma, 6.0);
        assert_eq!(td.holy, 0.0);
    }

    #[test]
    fn holy_matches_eigenvalue_discriminant_on_diag() {
        let m = diag(c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0));
        let td = trace_data(&m).unwrap();
        // Discriminant from the known eigenvalues.
        let vals = [c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0)];
        let mut disc = C::ONE;
        for i in 0..4 {
            for j in (i + 1)..4 {
                disc *= (vals[i] - vals[j]).powu(2);
            }
        }
        assert!(disc.im.abs() < 1e-10);
        assert!((td.holy - disc.re).abs() <= 1e-9 * disc.norm().max(1.0));
        assert!(td.holy < 0.0);
    }

    #[test]
    fn angle_types_of_the_three_order_three_models() {
        let third = std::f64::consts::TAU / 3.0;
        let (a, b, d) = elliptic_angle_type(&e012(), HermitianForm::Ball).unwrap();
        assert!((a - 0.0).abs() < 1e-12 && (b - third).abs() < 1e-12);
        assert!((d - 2.0 * third).abs() < 1e-12);

        let (a, b, d) = elliptic_angle_type(&e112(), HermitianForm::Ball).unwrap();
        assert!((a - third).abs() < 1e-12 && (b - third).abs() < 1e-12);
        assert!((d - 2.0 * third).abs() < 1e-12);

        let (a, b, d) = elliptic_angle_type(&e122(), HermitianForm::Ball).unwrap();
        assert!((a - third).abs() < 1e-12);
        assert!((b - 2.0 * third).abs() < 1e-12 && (d - 2.0 * third).abs() < 1e-12);
    }

    #[test]
    fn angle_type_needs_a_negative_eigenvector() {
        // Left-translation-looking diagonal with no negative eigendirection
        // cannot be elliptic: loxodromic diag(2, i, -i, 1/2) has null e1, e4.
        let m = diag(c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0));
        assert_eq!(
            elliptic_angle_type(&m, HermitianForm::Siegel),
            Err(IsometryError::NoNegativeEigenvector)
        );
    }

    #[test]
    fn classify_diag_loxodromic_and_fixed_points() {
        let m = diag(c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0));
        let class = classify(&m, HermitianForm::Siegel, 1e-9).unwrap();
        assert_eq!(class, Classification::RegularLoxodromic);
        let fixed = boundary_fixed_points(&m).unwrap();
        assert_eq!(fixed.len(), 2);
        assert!(fixed.iter().any(|p| p.is_infinity()));
        assert!(fixed
            .iter()
            .any(|p| p.approx_eq(&HeisenbergPoint::origin(), 1e-9)));
    }

    #[test]
    fn classify_is_center_invariant() {
        let m = diag(c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0));
        let i = C::new(0.0, 1.0);
        assert_eq!(
            classify(&m, HermitianForm::Siegel, 1e-9).unwrap(),
            classify(&(m * i), HermitianForm::Siegel, 1e-9).unwrap()
        );
    }

    #[test]
    fn classify_unipotent_translation() {
        let n = crate::heisenberg::heisenberg_translation(c(1.0, 0.5), c(0.0, -0.3), 0.7);
        let class = classify(&n, HermitianForm::Siegel, 1e-9).unwrap();
        assert_eq!(
            class,
            Classification::Parabolic {
                subtype: ParabolicSubtype::Unipotent
            }
        );
    }

    #[test]
    fn compose_tracks_chirality() {
        let form = HermitianForm::Siegel;
        let id = Isometry::identity(form);
        let n = crate::heisenberg::heisenberg_translation(c(0.3, 0.0), C::ZERO, 0.0);
        let f = Isometry::holomorphic(n, form).unwrap();
        let fg = compose(&f, &id).unwrap();
        assert_eq!(fg.chirality(), Chirality::Holomorphic);
        assert!(crate::linalg::max_abs(&(fg.matrix() - f.matrix())) < 1e-15);
    }

    #[test]
    fn compose_rejects_mismatched_forms() {
        let f = Isometry::identity(HermitianForm::Siegel);
        let g = Isometry::identity(HermitianForm::Ball);
        assert_eq!(compose(&f, &g).unwrap_err(), IsometryError::FormMismatch);
    }

    #[test]
    fn trace_data_rejects_non_unimodular_determinant() {
        let m = ComplexMatrix4::identity() * c(2.0, 0.0);
        assert!(matches!(
            trace_data(&m),
            Err(IsometryError::NotUnimodularDeterminant(_))
        ));
    }

    #[test]
    fn compose_is_associative_across_chiralities() {
        let form = HermitianForm::Siegel;
        let n1 = crate::heisenberg::heisenberg_translation(c(0.3, -0.1), c(0.2, 0.5), 0.4);
        let n2 = crate::heisenberg::heisenberg_translation(c(-0.7, 0.2), c(0.0, -0.3), 1.1);
        let n3 = diag(C::ONE, cis(0.8), cis(-0.8), C::ONE);
        for ch1 in [Chirality::Holomorphic, Chirality::AntiHolomorphic] {
            for ch2 in [Chirality::Holomorphic, Chirality::AntiHolomorphic] {
                for ch3 in [Chirality::Holomorphic, Chirality::AntiHolomorphic] {
                    let f = Isometry::new(n1, ch1, form).unwrap();
                    let g = Isometry::new(n2, ch2, form).unwrap();
                    let h = Isometry::new(n3, ch3, form).unwrap();
                    let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
                    let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
                    assert_eq!(left.chirality(), right.chirality());
                    assert!(
                        crate::linalg::max_abs(&(left.matrix() - right.matrix())) < 1e-12,
                        "{ch1:?} {ch2:?} {ch3:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn random_su31_products_match_discriminant_oracle() {
        // Random words in cheap exact U(3,1) elements: Heisenberg translations
        // and the Siegel-form coordinate symmetries.
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..60 {
            let mut m = ComplexMatrix4::identity();
            for _ in 0..6 {
                let t = crate::heisenberg::heisenberg_translation(
                    c(rng.random_range(-0.8..0.8), rng.random_range(-0.8..0.8)),
                    c(rng.random_range(-0.8..0.8), rng.random_range(-0.8..0.8)),
                    rng.random_range(-0.8..0.8),
                );
                m *= t;
                if rng.random_bool(0.5) {
                    // diag rotation in the positive block stays in U(3,1).
                    let phi = rng.random_range(0.0..std::f64::consts::TAU);
                    m *= diag(C::ONE, cis(phi), cis(-phi), C::ONE);
                }
            }
            let m = normalize_det(&m).unwrap();
            let td = trace_data(&m).unwrap();
            // σ is analytically real for det-1 form-preserving matrices.
            let sigma_im = ((td.tau * td.tau - (m * m).trace()) * 0.5).im;
            assert!(sigma_im.abs() <= 1e-10, "Im sigma {sigma_im:.3e}");
            let vals = crate::eigen::qr_eigenvalues(&m).unwrap();
            let mut disc = C::ONE;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    disc *= (vals[i] - vals[j]).powu(2);
                }
            }
            let scale = disc.norm().max(1.0);
            assert!(disc.im.abs() <= 1e-8 * scale);
            assert!(
                (td.holy - disc.re).abs() <= 1e-6 * scale,
                "holy {} vs disc {}",
                td.holy,
                disc.re
            );
        }
    }

    #[test]
    fn characteristic_polynomial_annihilates_eigenvalues() {
        // Quartic cross-check: χ(X) = X⁴ − τX³ + σX² − τ̄X + 1 evaluated at
        // every computed eigenvalue of a det-1 form-preserving matrix.
        let n = crate::heisenberg::heisenberg_translation(c(0.4, -0.1), c(0.2, 0.3), 0.5);
        let rot = diag(C::ONE, cis(1.1), cis(-0.7), C::ONE);
        let m = normalize_det(&(n * rot)).unwrap();
        let td = trace_data(&m).unwrap();
        let vals = crate::eigen::qr_eigenvalues(&m).unwrap();
        for l in vals {
            let chi = l.powu(4) - td.tau * l.powu(3) + C::new(td.sigma, 0.0) * l.powu(2)
                - td.tau.conj() * l
                + C::ONE;
            assert!(chi.norm() < 1e-9, "chi = {chi}");
        }
    }
}
