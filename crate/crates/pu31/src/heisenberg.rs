//! Boundary geometry of complex hyperbolic 3-space in the Siegel model.
//!
//! The ideal boundary minus one point is the Heisenberg group ℂ² × ℝ with a
//! twisted product. This module owns the group law, standard lifts to ℂ^{3,1},
//! ℂ²-chains (polar vectors, centers, radii, pairwise position), ℝ³-chains,
//! the Cartan angular invariant, and the closed-form image of a chain under
//! the inversion fixing the standard imaginary ℝ³-chain.


use thiserror::Error;

use crate::linalg::{
    herm_inner, vector_sign, ComplexMatrix4, ComplexVector4, HermitianForm, SignClass, C,
    NULL_BAND,
};

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("operation undefined for the point at infinity")]
    InfinityOperand,
    #[error("vector is not null under the Siegel form (⟨v,v⟩ = {0:.3e})")]
    NotNullVector(f64),
    #[error("polar vector is not positive (⟨n,n⟩ = {0:.3e})")]
    NonPositivePolar(f64),
    #[error("Cartan invariant needs three distinct boundary points")]
    CoincidentPoints,
    #[error("chain is asymptotic to the fixed chain of the inversion (R² = b² + c²)")]
    AsymptoticToFixedChain,
}

/// A point of the boundary ∂H³_ℂ = (ℂ² × ℝ) ∪ {∞} in Heisenberg coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HeisenbergPoint {
    Finite { z1: C, z2: C, t: f64 },
    Infinity,
}

impl HeisenbergPoint {
    pub fn finite(z1: C, z2: C, t: f64) -> Self {
        HeisenbergPoint::Finite { z1, z2, t }
    }

    pub fn origin() -> Self {
        HeisenbergPoint::finite(C::ZERO, C::ZERO, 0.0)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, HeisenbergPoint::Infinity)
    }

    /// Group inverse [−z, −t]; identity on ∞.
    pub fn inverse(&self) -> Self {
        match *self {
            HeisenbergPoint::Finite { z1, z2, t } => HeisenbergPoint::Finite {
                z1: -z1,
                z2: -z2,
                t: -t,
            },
            HeisenbergPoint::Infinity => HeisenbergPoint::Infinity,
        }
    }

    /// Approximate equality with absolute tolerance on all coordinates.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (HeisenbergPoint::Infinity, HeisenbergPoint::Infinity) => true,
            (
                HeisenbergPoint::Finite { z1, z2, t },
                HeisenbergPoint::Finite {
                    z1: w1,
                    z2: w2,
                    t: s,
                },
            ) => (z1 - w1).norm() <= tol && (z2 - w2).norm() <= tol && (t - s).abs() <= tol,
            _ => false,
        }
    }
}

/// Heisenberg product [z,t]·[w,s] = [z+w, t+s+2·Im⟨⟨z,w⟩⟩] with ⟨⟨z,w⟩⟩ = w*·z.
pub fn heis_product(
    p: &HeisenbergPoint,
    q: &HeisenbergPoint,
) -> Result<HeisenbergPoint, GeometryError> {
    match (p, q) {
        (
            HeisenbergPoint::Finite { z1, z2, t },
            HeisenbergPoint::Finite {
                z1: w1,
                z2: w2,
                t: s,
            },
        ) => {
            let pairing = w1.conj() * z1 + w2.conj() * z2;
            Ok(HeisenbergPoint::Finite {
                z1: z1 + w1,
                z2: z2 + w2,
                t: t + s + 2.0 * pairing.im,
            })
        }
        _ => Err(GeometryError::InfinityOperand),
    }
}

/// Standard lift of a boundary point into ℂ^{3,1}.
///
/// (z₁, z₂, t) ↦ (−(|z₁|²+|z₂|²)+it, √2 z₁, √2 z₂, 1)ᵀ and ∞ ↦ (1,0,0,0)ᵀ.
pub fn standard_lift(p: &HeisenbergPoint) -> ComplexVector4 {
    match *p {
        HeisenbergPoint::Finite { z1, z2, t } => ComplexVector4::new(
            C::new(-(z1.norm_sqr() + z2.norm_sqr()), t),
            z1 * SQRT2,
            z2 * SQRT2,
            C::ONE,
        ),
        HeisenbergPoint::Infinity => ComplexVector4::new(C::ONE, C::ZERO, C::ZERO, C::ZERO),
    }
}

/// Standard lift of a horospherical point (z₁, z₂, t, u) with height u ≥ 0.
pub fn standard_lift_horospherical(z1: C, z2: C, t: f64, u: f64) -> ComplexVector4 {
    ComplexVector4::new(
        C::new(-(z1.norm_sqr() + z2.norm_sqr()) - u, t),
        z1 * SQRT2,
        z2 * SQRT2,
        C::ONE,
    )
}

/// Invert [`standard_lift`] on null vectors: projectivize and read coordinates.
pub fn boundary_from_lift(v: &ComplexVector4) -> Result<HeisenbergPoint, GeometryError> {
    let sign = vector_sign(v, HermitianForm::Siegel, NULL_BAND)
        .map_err(|_| GeometryError::NotNullVector(f64::NAN))?;
    if sign.value != SignClass::Null {
        return Err(GeometryError::NotNullVector(sign.magnitude));
    }
    let scale = v.norm();
    if v[3].norm() <= 1e-12 * scale {
        return Ok(HeisenbergPoint::Infinity);
    }
    let w = v / v[3];
    Ok(HeisenbergPoint::Finite {
        z1: w[1] / SQRT2,
        z2: w[2] / SQRT2,
        t: w[0].im,
    })
}

/// A ℂ²-chain, stored by its polar vector under the Siegel form.
#[derive(Debug, Clone)]
pub struct C2Chain {
    polar: ComplexVector4,
}

/// Derived view of a chain: vertical (through ∞), finite with center and
/// radius, or degenerate (a single boundary point, null polar).
#[derive(Debug, Clone, PartialEq)]
pub enum ChainKind {
    Vertical,
    Finite {
        center: HeisenbergPoint,
        radius: f64,
    },
    DegeneratePoint(HeisenbergPoint),
}

impl C2Chain {
    /// Wrap a polar vector; it must be positive or null under the Siegel form.
    pub fn from_polar(polar: ComplexVector4) -> Result<Self, GeometryError> {
        let sign = vector_sign(&polar, HermitianForm::Siegel, NULL_BAND)
            .map_err(|_| GeometryError::NonPositivePolar(0.0))?;
        if sign.value == SignClass::Negative {
            return Err(GeometryError::NonPositivePolar(sign.magnitude));
        }
        Ok(C2Chain { polar })
    }

    pub fn polar(&self) -> &ComplexVector4 {
        &self.polar
    }

    pub fn kind(&self) -> ChainKind {
        let scale = self.polar.norm();
        let sign = vector_sign(&self.polar, HermitianForm::Siegel, NULL_BAND).unwrap();
        if self.polar[3].norm() <= 1e-12 * scale {
            if sign.value == SignClass::Null {
                return ChainKind::DegeneratePoint(HeisenbergPoint::Infinity);
            }
            return ChainKind::Vertical;
        }
        let w = self.polar / self.polar[3];
        let center = HeisenbergPoint::Finite {
            z1: w[1] / SQRT2,
            z2: w[2] / SQRT2,
            t: w[0].im,
        };
        // For the normalized polar, ⟨n, n⟩ = 2R².
        let norm = herm_inner(&w, &w, HermitianForm::Siegel).re;
        if sign.value == SignClass::Null {
            return ChainKind::DegeneratePoint(center);
        }
        ChainKind::Finite {
            center,
            radius: (norm.max(0.0) / 2.0).sqrt(),
        }
    }
}

/// Polar vector of the finite chain with the given center and radius:
/// (R² − (a²+b²+c²+d²) + fi, √2(a+bi), √2(c+di), 1)ᵀ.
pub fn chain_from_center_radius(
    center: &HeisenbergPoint,
    radius: f64,
) -> Result<C2Chain, GeometryError> {
    match *center {
        HeisenbergPoint::Finite { z1, z2, t } => {
            let polar = ComplexVector4::new(
                C::new(radius * radius - z1.norm_sqr() - z2.norm_sqr(), t),
                z1 * SQRT2,
                z2 * SQRT2,
                C::ONE,
            );
            C2Chain::from_polar(polar)
        }
        HeisenbergPoint::Infinity => Err(GeometryError::InfinityOperand),
    }
}

/// Membership test for a boundary point on a chain.
///
/// Finite chains use the cylinder-and-hyperplane equations; vertical chains
/// fall back to the affine-subspace description of their vertical projection,
/// which reduces to a t-independent affine-linear equation in (z₁, z₂).
pub fn chain_contains(chain: &C2Chain, p: &HeisenbergPoint, tol: f64) -> bool {
    match chain.kind() {
        ChainKind::Vertical => match *p {
            HeisenbergPoint::Infinity => true,
            HeisenbergPoint::Finite { z1, z2, .. } => {
                let n = chain.polar();
                let scale = n.norm().max(1.0) * (1.0 + z1.norm() + z2.norm());
                let affine = n[0].conj() + n[1].conj() * z1 * SQRT2 + n[2].conj() * z2 * SQRT2;
                affine.norm() <= tol * scale
            }
        },
        ChainKind::Finite { center, radius } => {
            contains_by_equations(&center, radius, p, tol)
        }
        ChainKind::DegeneratePoint(center) => match (&center, p) {
            (HeisenbergPoint::Infinity, HeisenbergPoint::Infinity) => true,
            (HeisenbergPoint::Finite { .. }, HeisenbergPoint::Finite { .. }) => {
                contains_by_equations(&center, 0.0, p, tol)
            }
            _ => false,
        },
    }
}

fn contains_by_equations(center: &HeisenbergPoint, radius: f64, p: &HeisenbergPoint, tol: f64) -> bool {
    let (HeisenbergPoint::Finite { z1: c1, z2: c2, t: f }, HeisenbergPoint::Finite { z1, z2, t }) =
        (center, p)
    else {
        return false;
    };
    let (a, b) = (c1.re, c1.im);
    let (c, d) = (c2.re, c2.im);
    let (x1, y1) = (z1.re, z1.im);
    let (x2, y2) = (z2.re, z2.im);
    let cylinder =
        (x1 - a).powi(2) + (y1 - b).powi(2) + (x2 - c).powi(2) + (y2 - d).powi(2) - radius * radius;
    let hyperplane = t + 2.0 * a * y1 - 2.0 * b * x1 + 2.0 * c * y2 - 2.0 * d * x2 - f;
    cylinder.abs() <= tol && hyperplane.abs() <= tol
}

/// Relative position of two chains via the Gram excess of their polars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairPosition {
    Intersecting,
    Asymptotic,
    Ultraparallel,
}

#[derive(Debug, Clone, Copy)]
pub struct ChainPairPosition {
    pub value: PairPosition,
    /// |⟨n₁,n₂⟩|² − ⟨n₁,n₁⟩⟨n₂,n₂⟩.
    pub gram_excess: f64,
}

/// Classify the pair position of two chains with positive polars.
///
/// Positive Gram excess is mapped to disjoint/ultraparallel, matching the
/// certificate usage where hyper-parallel planes have ⟨p, q⟩ > 1 for norm-1
/// polars. The tolerance band around zero (relative to ⟨n₁,n₁⟩⟨n₂,n₂⟩)
/// reports Asymptotic.
pub fn chain_pair_position(
    n1: &C2Chain,
    n2: &C2Chain,
    tol: f64,
) -> Result<ChainPairPosition, GeometryError> {
    let form = HermitianForm::Siegel;
    let s1 = herm_inner(n1.polar(), n1.polar(), form).re;
    let s2 = herm_inner(n2.polar(), n2.polar(), form).re;
    let floor = NULL_BAND * n1.polar().norm_squared().max(n2.polar().norm_squared());
    if s1 <= floor || s2 <= floor {
        return Err(GeometryError::NonPositivePolar(s1.min(s2)));
    }
    let cross = herm_inner(n1.polar(), n2.polar(), form).norm_sqr();
    let gram_excess = cross - s1 * s2;
    let band = tol * s1 * s2;
    let value = if gram_excess > band {
        PairPosition::Ultraparallel
    } else if gram_excess < -band {
        PairPosition::Intersecting
    } else {
        PairPosition::Asymptotic
    };
    Ok(ChainPairPosition { value, gram_excess })
}

/// The unipotent Heisenberg translation by (z₁, z₂, v), as a matrix in U(3,1).
///
/// Maps the lift of the origin to the lift of (z₁, z₂, v) and satisfies
/// N(a)·N(b) = N(a·b) for the Heisenberg product.
pub fn heisenberg_translation(z1: C, z2: C, v: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    ComplexMatrix4::new(
        l,
        -z1.conj() * SQRT2,
        -z2.conj() * SQRT2,
        C::new(-(z1.norm_sqr() + z2.norm_sqr()), v),
        o,
        l,
        o,
        z1 * SQRT2,
        o,
        o,
        l,
        z2 * SQRT2,
        o,
        o,
        o,
        l,
    )
}

/// An ℝ³-chain: either the standard imaginary one (the fixed-point set of the
/// coordinate inversion) or an infinite chain through a base point with
/// direction angles φ₁, φ₂ ∈ [0, π).
#[derive(Debug, Clone, Copy)]
pub enum R3Chain {
    StandardImaginary,
    AxisPlane {
        base_z1: C,
        base_z2: C,
        base_v: f64,
        phi1: f64,
        phi2: f64,
    },
}

/// Membership test for finite points on an ℝ³-chain.
///
/// The infinite-chain case solves the two real linear systems for (r₁, r₂) by
/// orthogonal projection (least squares) and then checks the v-constraint, so
/// the degenerate sin φ = 0 directions need no special casing.
pub fn r3_chain_contains(chain: &R3Chain, p: &HeisenbergPoint, tol: f64) -> bool {
    let HeisenbergPoint::Finite { z1, z2, t } = *p else {
        return matches!(chain, R3Chain::AxisPlane { .. });
    };
    match *chain {
        R3Chain::StandardImaginary => {
            let (x1, y1) = (z1.re, z1.im);
            let (x2, y2) = (z2.re, z2.im);
            let s = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2;
            let eq1 = s * s + t * t - 1.0;
            let eq2 = x1 + s * x1 - t * y1;
            let eq3 = x2 + s * x2 - t * y2;
            eq1.abs() <= tol && eq2.abs() <= tol && eq3.abs() <= tol
        }
        R3Chain::AxisPlane {
            base_z1,
            base_z2,
            base_v,
            phi1,
            phi2,
        } => {
            let d1 = (z1 - base_z1) * C::new(phi1.cos(), -phi1.sin());
            let d2 = (z2 - base_z2) * C::new(phi2.cos(), -phi2.sin());
            let (r1, resid1) = (d1.re, d1.im);
            let (r2, resid2) = (d2.re, d2.im);
            let v = base_v
                + 2.0
                    * (r1 * (base_z1.im * phi1.cos() - base_z1.re * phi1.sin())
                        + r2 * (base_z2.im * phi2.cos() - base_z2.re * phi2.sin()));
            resid1.abs() <= tol && resid2.abs() <= tol && (t - v).abs() <= tol
        }
    }
}

/// Cartan's angular invariant arg(−⟨p̂₁,p̂₂⟩⟨p̂₂,p̂₃⟩⟨p̂₃,p̂₁⟩) ∈ [−π/2, π/2].
///
/// Independent of the choice of lifts; antisymmetric under swapping two
/// arguments.
pub fn cartan_invariant(
    p1: &HeisenbergPoint,
    p2: &HeisenbergPoint,
    p3: &HeisenbergPoint,
) -> Result<f64, GeometryError> {
    let l1 = standard_lift(p1);
    let l2 = standard_lift(p2);
    let l3 = standard_lift(p3);
    let form = HermitianForm::Siegel;
    let g = herm_inner(&l1, &l2, form) * herm_inner(&l2, &l3, form) * herm_inner(&l3, &l1, form);
    let scale = l1.norm_squared() * l2.norm_squared() * l3.norm_squared();
    if g.norm() <= 1e-24 * scale.max(1.0) {
        return Err(GeometryError::CoincidentPoints);
    }
    Ok((-g).arg())
}

/// Image of the finite chain with center (bi, c, 0) and radius R under the
/// inversion fixing the standard imaginary ℝ³-chain.
///
/// The image has center (−bi, c, 0)/(R² − (b² + c²)) and radius
/// R/|R² − (b² + c²)|; applying the map twice returns the input.
pub fn iota0_chain_image(
    b: f64,
    c: f64,
    radius: f64,
) -> Result<(HeisenbergPoint, f64), GeometryError> {
    let denom = radius * radius - (b * b + c * c);
    if denom.abs() <= 1e-14 * (radius * radius + b * b + c * c).max(1.0) {
        return Err(GeometryError::AsymptoticToFixedChain);
    }
    let center = HeisenbergPoint::finite(
        C::new(0.0, -b / denom),
        C::new(c / denom, 0.0),
        0.0,
    );
    Ok((center, radius / denom.abs()))
}
