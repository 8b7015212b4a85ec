//! The two 2-parameter families of modular-group representations into PU(3,1).
//!
//! Each family is generated by three Lagrangian inversions ι₀, ι₁, ι₂ whose
//! products give the order-2 generator A₂ = ι₁ι₀, the order-3 generator
//! A₁ = ι₀ι₂ and the parabolic A₀ = ι₁ι₂ = A₂A₁. The `Std012` family carries
//! an order-3 generator of angle type (0, 2π/3, 4π/3); `Std122` twists the
//! third inversion by a sixth root of unity and carries type
//! (2π/3, 4π/3, 4π/3). Both are parameterized over (α, β) ∈ [0, π/2]².
//!
//! Generator matrices are assembled from the inversion matrices; independently
//! coded closed forms for A₀ and A₁ act as an entrywise cross-check in the
//! tests, since the two routes share no code.

use std::fmt;

use nalgebra::{Matrix2, Matrix3};

use thiserror::Error;

use crate::heisenberg::HeisenbergPoint;
use crate::isometry::holy_grail;
use crate::linalg::{cis, cos_alpha, max_abs, normalize_det, ComplexMatrix4, HermitianForm, C};

const FRAC_PI_2: f64 = std::f64::consts::FRAC_PI_2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModuliError {
    #[error("parameter {name} = {value} outside [0, π/2]")]
    OutOfRangeParameter { name: &'static str, value: f64 },
    #[error("moduli point is not on the {0} edge")]
    NotOnEdge(&'static str),
    #[error("word runs must be nonempty with positive exponents")]
    EmptyWord,
    #[error("cannot parse word runs from {0:?}")]
    WordSyntax(String),
}

/// Which of the two square moduli families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Order-3 generator of angle type (0, 2π/3, 4π/3).
    Std012,
    /// Order-3 generator of angle type (2π/3, 4π/3, 4π/3).
    Std122,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Std012 => write!(f, "012"),
            Family::Std122 => write!(f, "122"),
        }
    }
}

/// A point of the moduli square with its family tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliPoint {
    pub family: Family,
    pub alpha: f64,
    pub beta: f64,
}

impl ModuliPoint {
    /// Out-of-range parameters are an error, not a clamp.
    pub fn new(family: Family, alpha: f64, beta: f64) -> Result<Self, ModuliError> {
        if !(0.0..=FRAC_PI_2 + 1e-15).contains(&alpha) || !alpha.is_finite() {
            return Err(ModuliError::OutOfRangeParameter {
                name: "alpha",
                value: alpha,
            });
        }
        if !(0.0..=FRAC_PI_2 + 1e-15).contains(&beta) || !beta.is_finite() {
            return Err(ModuliError::OutOfRangeParameter {
                name: "beta",
                value: beta,
            });
        }
        Ok(ModuliPoint {
            family,
            alpha,
            beta,
        })
    }
}

/// Presentation matrix of the inversion fixing the standard imaginary
/// ℝ³-chain: (x, y, z, w)ᵀ ↦ (w̄, ȳ, z̄, x̄)ᵀ.
pub fn m0_matrix() -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    ComplexMatrix4::new(
        o, o, o, l, //
        o, l, o, o, //
        o, o, l, o, //
        l, o, o, o,
    )
}

/// Presentation matrix of the inversion fixing {(y₁i, x₂, 0)}.
pub fn m1_matrix() -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    ComplexMatrix4::new(
        l, o, o, o, //
        o, -l, o, o, //
        o, o, l, o, //
        o, o, o, l,
    )
}

/// The β-rotation conjugating the third inversion across the family.
pub fn u_matrix(beta: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    let (s, c) = beta.sin_cos();
    let (s, c) = (C::new(s, 0.0), C::new(c, 0.0));
    ComplexMatrix4::new(
        l, o, o, o, //
        o, c, -s, o, //
        o, s, c, o, //
        o, o, o, l,
    )
}

/// Presentation matrix of the third inversion at β = 0.
///
/// For `Std122` the (3,3)-entry picks up the extra factor e^{2πi/3} and the
/// whole matrix the phase e^{−πi/6}, keeping the determinant equal to the
/// `Std012` one.
pub fn m2_matrix_beta0(family: Family, alpha: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    let i = C::new(0.0, 1.0);
    let root = (2.0 * cos_alpha(alpha)).sqrt();
    let b = i * cis(-alpha / 2.0) * root;
    let (corner33, phase) = match family {
        Family::Std012 => (-cis(-alpha / 3.0), C::ONE),
        Family::Std122 => (
            -cis(-alpha / 3.0) * cis(2.0 * std::f64::consts::FRAC_PI_3),
            cis(-std::f64::consts::FRAC_PI_6),
        ),
    };
    ComplexMatrix4::new(
        l,
        b,
        o,
        -cis(-alpha),
        o,
        cis(-alpha),
        o,
        b,
        o,
        o,
        corner33,
        o,
        o,
        o,
        o,
        l,
    ) * phase
}

/// Presentation matrix of the third inversion at general (α, β):
/// M₂(α, β) = U · M₂(α, 0) · U⁻¹.
pub fn m2_matrix(family: Family, alpha: f64, beta: f64) -> ComplexMatrix4 {
    u_matrix(beta) * m2_matrix_beta0(family, alpha) * u_matrix(-beta)
}

/// The generator matrices of the representation at one moduli point, together
/// with the inversion matrices that produced them.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub point: ModuliPoint,
    pub a0: ComplexMatrix4,
    pub a1: ComplexMatrix4,
    pub a2: ComplexMatrix4,
    pub m0: ComplexMatrix4,
    pub m1: ComplexMatrix4,
    pub m2: ComplexMatrix4,
    pub u: ComplexMatrix4,
}

/// Assemble the full generator set at a moduli point.
///
/// A₀ = ι₁ι₂ and A₁ = ι₀ι₂ acquire the scalar e^{−αi/3} to reach determinant
/// one (the inversion matrices themselves are only projectively normalized);
/// A₂ = ι₁ι₀ is already unimodular.
pub fn build_generators(point: &ModuliPoint) -> Result<GeneratorSet, ModuliError> {
    // Re-validate: ModuliPoint can be constructed literally.
    let point = ModuliPoint::new(point.family, point.alpha, point.beta)?;
    let m0 = m0_matrix();
    let m1 = m1_matrix();
    let m2 = m2_matrix(point.family, point.alpha, point.beta);
    let u = u_matrix(point.beta);
    let m2_conj = m2.map(|z| z.conj());
    let det_fix = cis(-point.alpha / 3.0);
    let a0 = m1 * m2_conj * det_fix;
    let a1 = m0 * m2_conj * det_fix;
    let a2 = m1 * m0;
    Ok(GeneratorSet {
        point,
        a0,
        a1,
        a2,
        m0,
        m1,
        m2,
        u,
    })
}

/// The distinguished boundary point p₃(α, β), third vertex of the ideal
/// triangle (∞, origin, p₃) with Cartan invariant α.
pub fn p3_point(alpha: f64, beta: f64) -> HeisenbergPoint {
    let scale = cis(-alpha / 2.0) * C::new(0.0, 1.0) * cos_alpha(alpha).sqrt();
    HeisenbergPoint::finite(scale * beta.cos(), scale * beta.sin(), alpha.sin())
}

/// Residuals of the defining relations of the representation.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub residuals: Vec<(String, f64)>,
    pub tol: f64,
    pub pass: bool,
    /// Set for `Std122`: (A′₁)² = I₄ would contradict (A′₁)³ = −i·I₄, so the
    /// order-two relation belongs to A′₂ and this report checks (A′₂)² = I₄.
    pub note: Option<&'static str>,
}

impl RelationReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |acc, (_, r)| acc.max(*r))
    }
}

/// Verify the group relations and the form/determinant constraints.
pub fn verify_relations(gen: &GeneratorSet, tol: f64) -> RelationReport {
    let id = ComplexMatrix4::identity();
    let h = HermitianForm::Siegel.matrix();
    let mut residuals = Vec::new();

    residuals.push((
        "a2_squared_minus_identity".to_string(),
        max_abs(&(gen.a2 * gen.a2 - id)),
    ));
    let cube = gen.a1 * gen.a1 * gen.a1;
    let (cube_name, cube_target) = match gen.point.family {
        Family::Std012 => ("a1_cubed_plus_identity", -id),
        Family::Std122 => ("a1_cubed_plus_i_identity", id * C::new(0.0, -1.0)),
    };
    residuals.push((cube_name.to_string(), max_abs(&(cube - cube_target))));

    let a1_inv = gen
        .a1
        .try_inverse()
        .expect("A1 is unitary for the form, hence invertible");
    residuals.push((
        "a2_a0_a1inv_minus_identity".to_string(),
        max_abs(&(gen.a2 * gen.a0 * a1_inv - id)),
    ));

    for (name, m) in [("a0", &gen.a0), ("a1", &gen.a1), ("a2", &gen.a2)] {
        residuals.push((
            format!("form_preservation_{name}"),
            max_abs(&(m.adjoint() * h * m - h)),
        ));
        residuals.push((
            format!("det_{name}_minus_one"),
            (m.determinant() - C::ONE).norm(),
        ));
    }

    let pass = residuals.iter().all(|(_, r)| *r <= tol);
    RelationReport {
        residuals,
        tol,
        pass,
        note: match gen.point.family {
            Family::Std012 => None,
            Family::Std122 => Some(
                "(A'_1)^2 = I_4 would contradict (A'_1)^3 = -i I_4; the order-two \
                 relation is (A'_2)^2 = I_4 and that is what this report checks",
            ),
        },
    }
}

/// A word (a₂a₁)^{m₁}(a₂a₁⁻¹)^{n₁}···(a₂a₁)^{m_k}(a₂a₁⁻¹)^{n_k}, stored as
/// run-length pairs. Conjugacy classes correspond to cyclic rotations of the
/// run list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    runs: Vec<(u32, u32)>,
}

impl Word {
    pub fn new(runs: Vec<(u32, u32)>) -> Result<Self, ModuliError> {
        if runs.is_empty() || runs.iter().any(|&(m, n)| m == 0 || n == 0) {
            return Err(ModuliError::EmptyWord);
        }
        Ok(Word { runs })
    }

    /// Parse "m1,n1;m2,n2;…".
    pub fn parse(text: &str) -> Result<Self, ModuliError> {
        let mut runs = Vec::new();
        for part in text.split(';') {
            let fields: Vec<&str> = part.split(',').map(str::trim).collect();
            if fields.len() != 2 {
                return Err(ModuliError::WordSyntax(text.to_string()));
            }
            let m = fields[0]
                .parse::<u32>()
                .map_err(|_| ModuliError::WordSyntax(text.to_string()))?;
            let n = fields[1]
                .parse::<u32>()
                .map_err(|_| ModuliError::WordSyntax(text.to_string()))?;
            runs.push((m, n));
        }
        Word::new(runs)
    }

    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    /// Lexicographically minimal cyclic rotation of the run list. Used for
    /// deduplication in scans; never changes evaluation.
    pub fn canonical(&self) -> Word {
        let k = self.runs.len();
        let best = (0..k)
            .map(|shift| {
                let mut rotated = self.runs.clone();
                rotated.rotate_left(shift);
                rotated
            })
            .min()
            .expect("nonempty runs");
        Word { runs: best }
    }

    pub fn rotated(&self, shift: usize) -> Word {
        let mut runs = self.runs.clone();
        let len = runs.len();
        runs.rotate_left(shift % len);
        Word { runs }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs
            .iter()
            .map(|(m, n)| format!("{m},{n}"))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Evaluate ρ(w) = ∏ᵢ (A₂A₁)^{mᵢ}(A₂A₁⁻¹)^{nᵢ}, renormalizing the determinant
/// every 16 factor multiplications to bound scalar drift on long words.
pub fn evaluate_word(gen: &GeneratorSet, word: &Word) -> ComplexMatrix4 {
    let q = gen.a2 * gen.a1;
    let r = gen.a2
        * gen
            .a1
            .try_inverse()
            .expect("A1 is unitary for the form, hence invertible");
    let mut acc = ComplexMatrix4::identity();
    let mut factors = 0usize;
    let mut push = |acc: &mut ComplexMatrix4, f: &ComplexMatrix4| {
        *acc *= f;
        factors += 1;
        if factors.is_multiple_of(16) {
            *acc = normalize_det(acc).expect("group elements are invertible");
        }
    };
    for &(m, n) in &word.runs {
        for _ in 0..m {
            push(&mut acc, &q);
        }
        for _ in 0..n {
            push(&mut acc, &r);
        }
    }
    normalize_det(&acc).expect("group elements are invertible")
}

/// Closed forms for trace, σ and 𝓗 of W(1,1) = A₂A₁A₂A₁⁻¹ in family `Std012`.
pub fn w11_closed_forms(alpha: f64, beta: f64) -> (f64, f64, f64) {
    let c2b = (2.0 * beta).cos();
    let s2b2 = (2.0 * beta).sin().powi(2);
    let trace = 5.0 - 4.0 * c2b * alpha.cos() - 2.0 * s2b2 * (2.0 * alpha / 3.0).cos() - 2.0 * s2b2;
    // A variant of this formula with an extra −24cos²β term fails the matrix
    // cross-check everywhere and breaks the vanishing of 𝓗 on the β = 0 edge;
    // the version below agrees with the product route to machine precision.
    let sigma = 8.0 - 8.0 * c2b * alpha.cos()
        + s2b2 * (2.0 * (4.0 * alpha / 3.0).cos() - 4.0 * (2.0 * alpha / 3.0).cos() - 6.0);
    let holy = holy_grail(C::new(trace, 0.0), sigma);
    (trace, sigma, holy)
}

// ---------------------------------------------------------------------------
// Closed-form entries for A₀ and A₁ (independent cross-check route).
// ---------------------------------------------------------------------------

/// A₀ from independently coded closed-form entries, as e^{−αi/3} times the
/// bracketed matrix; cross-checks the product route in tests.
pub fn closed_form_a0(family: Family, alpha: f64, beta: f64) -> ComplexMatrix4 {
    match family {
        Family::Std012 => closed_form_a0_012(alpha, beta),
        Family::Std122 => closed_form_a0_122(alpha, beta),
    }
}

/// A₁ from independently coded closed-form entries; see [`closed_form_a0`].
pub fn closed_form_a1(family: Family, alpha: f64, beta: f64) -> ComplexMatrix4 {
    match family {
        Family::Std012 => closed_form_a1_012(alpha, beta),
        Family::Std122 => closed_form_a1_122(alpha, beta),
    }
}

fn closed_form_a0_012(alpha: f64, beta: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    let i = C::new(0.0, 1.0);
    let (sb, cb) = beta.sin_cos();
    let (sb2, cb2) = (sb * sb, cb * cb);
    let s2b = (2.0 * beta).sin();
    let root = (2.0 * cos_alpha(alpha)).sqrt();
    let ea = cis(alpha);
    let ea3 = cis(alpha / 3.0);
    let ea23 = cis(2.0 * alpha / 3.0);
    let half = i * cis(alpha / 2.0) * root;
    let mix = s2b * (alpha / 3.0).cos();
    ComplexMatrix4::new(
        l,
        -half * cb,
        -half * sb,
        -ea,
        o,
        ea3 * sb2 - ea * cb2,
        -ea23 * mix,
        half * cb,
        o,
        ea23 * mix,
        -ea3 * cb2 + ea * sb2,
        -half * sb,
        o,
        o,
        o,
        l,
    ) * cis(-alpha / 3.0)
}

fn closed_form_a1_012(alpha: f64, beta: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let l = C::ONE;
    let i = C::new(0.0, 1.0);
    let (sb, cb) = beta.sin_cos();
    let (sb2, cb2) = (sb * sb, cb * cb);
    let s2b = (2.0 * beta).sin();
    let root = (2.0 * cos_alpha(alpha)).sqrt();
    let ea = cis(alpha);
    let ea3 = cis(alpha / 3.0);
    let ea23 = cis(2.0 * alpha / 3.0);
    let half = i * cis(alpha / 2.0) * root;
    let mix = s2b * (alpha / 3.0).cos();
    ComplexMatrix4::new(
        o,
        o,
        o,
        l,
        o,
        -ea3 * sb2 + ea * cb2,
        ea23 * mix,
        -half * cb,
        o,
        ea23 * mix,
        -ea3 * cb2 + ea * sb2,
        -half * sb,
        l,
        -half * cb,
        -half * sb,
        -ea,
    ) * cis(-alpha / 3.0)
}

fn closed_form_a0_122(alpha: f64, beta: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let i = C::new(0.0, 1.0);
    let (sb, cb) = beta.sin_cos();
    let (sb2, cb2) = (sb * sb, cb * cb);
    let s2b = (2.0 * beta).sin();
    let root = (2.0 * cos_alpha(alpha)).sqrt();
    let pi6 = cis(std::f64::consts::FRAC_PI_6);
    let ea_pi6 = cis(alpha + std::f64::consts::FRAC_PI_6);
    let ea3 = cis(alpha / 3.0);
    let tilt = cis(alpha / 2.0 - std::f64::consts::FRAC_PI_3) * root;
    ComplexMatrix4::new(
        pi6,
        tilt * cb,
        tilt * sb,
        -ea_pi6,
        o,
        -i * ea3 * sb2 - ea_pi6 * cb2,
        (i * ea3 - ea_pi6) * (s2b / 2.0),
        -tilt * cb,
        o,
        (ea_pi6 - i * ea3) * (s2b / 2.0),
        i * ea3 * cb2 + ea_pi6 * sb2,
        tilt * sb,
        o,
        o,
        o,
        pi6,
    ) * cis(-alpha / 3.0)
}

fn closed_form_a1_122(alpha: f64, beta: f64) -> ComplexMatrix4 {
    let o = C::ZERO;
    let i = C::new(0.0, 1.0);
    let (sb, cb) = beta.sin_cos();
    let (sb2, cb2) = (sb * sb, cb * cb);
    let s2b = (2.0 * beta).sin();
    let root = (2.0 * cos_alpha(alpha)).sqrt();
    let pi6 = cis(std::f64::consts::FRAC_PI_6);
    let ea_pi6 = cis(alpha + std::f64::consts::FRAC_PI_6);
    let ea3 = cis(alpha / 3.0);
    let tilt = cis(alpha / 2.0 - std::f64::consts::FRAC_PI_3) * root;
    ComplexMatrix4::new(
        o,
        o,
        o,
        pi6,
        o,
        i * ea3 * sb2 + ea_pi6 * cb2,
        (ea_pi6 - i * ea3) * (s2b / 2.0),
        tilt * cb,
        o,
        (ea_pi6 - i * ea3) * (s2b / 2.0),
        i * ea3 * cb2 + ea_pi6 * sb2,
        tilt * sb,
        pi6,
        tilt * cb,
        tilt * sb,
        -ea_pi6,
    ) * cis(-alpha / 3.0)
}

// ---------------------------------------------------------------------------
// Edge specializations.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeMode {
    Beta0,
    BetaHalf,
    Alpha0,
    AlphaHalf,
}

/// Reduced matrices on a moduli-square edge.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // a handful of these exist per run
pub enum SpecializedMatrices {
    /// β = 0 or β = π/2: one coordinate decouples and the generators reduce
    /// to 3×3 matrices in U(2,1), phase-normalized projectively.
    ThreeByThree {
        a0: Matrix3<C>,
        a1: Matrix3<C>,
        a2: Matrix3<C>,
        /// Largest modulus over the deleted row/column entries.
        max_deleted: f64,
    },
    /// α = 0: conjugates V Aᵢ V⁻¹ with V = diag(1, i, i, 1); real for the
    /// `Std012` family (entries in PO(3,1)), reported with the worst imaginary
    /// part either way.
    RealConjugates {
        a0: ComplexMatrix4,
        a1: ComplexMatrix4,
        a2: ComplexMatrix4,
        max_imag: f64,
    },
    /// α = π/2: the middle two coordinates decouple and the action reduces to
    /// 2×2 matrices, independent of β, phase-normalized projectively.
    TwoByTwo {
        a0: Matrix2<C>,
        a1: Matrix2<C>,
        a2: Matrix2<C>,
        max_deleted: f64,
    },
}

/// V = diag(1, i, i, 1), the conjugation exhibiting the α = 0 real forms.
pub fn v_matrix() -> ComplexMatrix4 {
    let i = C::new(0.0, 1.0);
    ComplexMatrix4::from_diagonal(&nalgebra::Vector4::new(C::ONE, i, i, C::ONE))
}

const EDGE_TOL: f64 = 1e-12;

/// Specialize the generator matrices on a moduli-square edge.
pub fn specialize(gen: &GeneratorSet, mode: EdgeMode) -> Result<SpecializedMatrices, ModuliError> {
    let p = gen.point;
    match mode {
        EdgeMode::Beta0 => {
            if p.beta.abs() > EDGE_TOL {
                return Err(ModuliError::NotOnEdge("beta = 0"));
            }
            Ok(delete_coordinate(gen, 2))
        }
        EdgeMode::BetaHalf => {
            if (p.beta - FRAC_PI_2).abs() > EDGE_TOL {
                return Err(ModuliError::NotOnEdge("beta = π/2"));
            }
            Ok(delete_coordinate(gen, 1))
        }
        EdgeMode::Alpha0 => {
            if p.alpha.abs() > EDGE_TOL {
                return Err(ModuliError::NotOnEdge("alpha = 0"));
            }
            let v = v_matrix();
            let v_inv = v.map(|z| z.conj());
            let conj = |m: &ComplexMatrix4| v * m * v_inv;
            let (a0, a1, a2) = (conj(&gen.a0), conj(&gen.a1), conj(&gen.a2));
            let max_imag = [&a0, &a1, &a2]
                .iter()
                .flat_map(|m| m.iter())
                .fold(0.0_f64, |acc, z| acc.max(z.im.abs()));
            Ok(SpecializedMatrices::RealConjugates {
                a0,
                a1,
                a2,
                max_imag,
            })
        }
        EdgeMode::AlphaHalf => {
            if (p.alpha - FRAC_PI_2).abs() > EDGE_TOL {
                return Err(ModuliError::NotOnEdge("alpha = π/2"));
            }
            let keep = [0usize, 3];
            let mut max_deleted = 0.0_f64;
            let mut blocks = Vec::with_capacity(3);
            for m in [&gen.a0, &gen.a1, &gen.a2] {
                for r in 0..4 {
                    for c in 0..4 {
                        let r_in = keep.contains(&r);
                        let c_in = keep.contains(&c);
                        if r_in != c_in {
                            max_deleted = max_deleted.max(m[(r, c)].norm());
                        }
                    }
                }
                let block = Matrix2::new(m[(0, 0)], m[(0, 3)], m[(3, 0)], m[(3, 3)]);
                blocks.push(normalize_phase2(block));
            }
            Ok(SpecializedMatrices::TwoByTwo {
                a0: blocks[0],
                a1: blocks[1],
                a2: blocks[2],
                max_deleted,
            })
        }
    }
}

fn delete_coordinate(gen: &GeneratorSet, removed: usize) -> SpecializedMatrices {
    let keep: Vec<usize> = (0..4).filter(|&k| k != removed).collect();
    let mut max_deleted = 0.0_f64;
    let mut blocks = Vec::with_capacity(3);
    for m in [&gen.a0, &gen.a1, &gen.a2] {
        for r in 0..4 {
            for c in 0..4 {
                if (r == removed) != (c == removed) {
                    max_deleted = max_deleted.max(m[(r, c)].norm());
                }
            }
        }
        let block = Matrix3::from_fn(|r, c| m[(keep[r], keep[c])]);
        blocks.push(normalize_phase3(block));
    }
    SpecializedMatrices::ThreeByThree {
        a0: blocks[0],
        a1: blocks[1],
        a2: blocks[2],
        max_deleted,
    }
}

/// Divide a matrix by the phase of its first significant entry (row-major),
/// a canonical representative of the projective class.
fn normalize_phase3(m: Matrix3<C>) -> Matrix3<C> {
    let scale = m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
    for r in 0..3 {
        for c in 0..3 {
            let z = m[(r, c)];
            if z.norm() > 1e-6 * scale {
                return m * (z.conj() / z.norm());
            }
        }
    }
    m
}

fn normalize_phase2(m: Matrix2<C>) -> Matrix2<C> {
    let scale = m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
    for r in 0..2 {
        for c in 0..2 {
            let z = m[(r, c)];
            if z.norm() > 1e-6 * scale {
                return m * (z.conj() / z.norm());
            }
        }
    }
    m
}

/// The nine spot-check words that go accidentally elliptic at (0.2, 0.2).
pub fn accidental_elliptic_words() -> Vec<Word> {
    [
        vec![(2, 1)],
        vec![(4, 1)],
        vec![(6, 1)],
        vec![(13, 1)],
        vec![(1, 2), (3, 2)],
        vec![(1, 2), (3, 3)],
        vec![(1, 2), (3, 4)],
        vec![(1, 2), (3, 1), (2, 1)],
        vec![(1, 2), (3, 1), (2, 2)],
    ]
    .into_iter()
    .map(|runs| Word::new(runs).expect("static word tables are valid"))
    .collect()
}
