//! Dense complex eigensolver for the fixed 4×4 case.
//!
//! Eigenvalues come from a Householder Hessenberg reduction followed by
//! shifted QR iteration with deflation. Eigenspaces are recovered per
//! eigenvalue cluster from a Hermitian Jacobi decomposition of
//! (M − λI)*(M − λI): its small singular directions span the numerical null
//! space, which also settles diagonalizability (geometric vs algebraic
//! multiplicity). Closed-form quartic roots are never the primary path — they
//! lose half the working digits near repeated roots, exactly where the
//! classification logic downstream needs them — the test suite only evaluates
//! the characteristic polynomial at the computed eigenvalues as a cross-check.


use thiserror::Error;

use crate::linalg::{all_finite, max_abs, ComplexMatrix4, ComplexVector4, C};

/// Relative gap under which two eigenvalues are merged into one cluster.
///
/// Repeated eigenvalues that are exact in the (α, β) parameters split by
/// roughly sqrt(machine-eps) under QR when a Jordan block is present; 1e-7
/// sits above that split and well below any honest eigenvalue gap in this
/// problem family.
pub const CLUSTER_TOL: f64 = 1e-7;

/// Rank threshold on singular values of (M − λI), relative to ‖M‖.
///
/// Jordan blocks are the defining feature of parabolic isometries and must not
/// be washed out: a defective direction shows up as a singular value of order
/// one, while genuine null directions sit at machine noise.
pub const RANK_TOL: f64 = 1e-7;

/// Residual bound ‖Mv − λv‖ ≤ RESIDUAL_TOL · ‖M‖ accepted for returned pairs.
pub const RESIDUAL_TOL: f64 = 1e-9;

const MAX_QR_ITERS: usize = 240;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EigenError {
    #[error("QR iteration failed to converge (residual {residual:.3e})")]
    ConvergenceFailure { residual: f64 },
    #[error("matrix has non-finite entries")]
    NonFiniteInput,
}

/// One eigenvalue cluster: value, representative eigenvector, and the full
/// numerical eigenspace.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: C,
    /// Unit eigenvector attaining the smallest residual in the cluster.
    pub vector: ComplexVector4,
    /// Algebraic multiplicity (cluster size).
    pub multiplicity: usize,
    /// Orthonormal basis of the numerical eigenspace; its length is the
    /// geometric multiplicity.
    pub basis: Vec<ComplexVector4>,
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Clusters sorted by (re, im) of the eigenvalue; multiplicities sum to 4.
    pub pairs: Vec<EigenPair>,
    pub diagonalizable: bool,
}

impl EigenDecomposition {
    /// All eigenvalues with algebraic multiplicity, flattened.
    pub fn eigenvalues(&self) -> Vec<C> {
        let mut out = Vec::with_capacity(4);
        for p in &self.pairs {
            for _ in 0..p.multiplicity {
                out.push(p.value);
            }
        }
        out
    }
}

/// Eigen-decompose a 4×4 complex matrix, merging eigenvalues within
/// `cluster_tol` (relative) into clusters.
pub fn eigen4(m: &ComplexMatrix4, cluster_tol: f64) -> Result<EigenDecomposition, EigenError> {
    if !all_finite(m) {
        return Err(EigenError::NonFiniteInput);
    }
    let scale = max_abs(m);
    if scale == 0.0 {
        // The zero matrix: eigenvalue 0 with full eigenspace.
        let basis: Vec<ComplexVector4> = (0..4)
            .map(|i| {
                let mut v = ComplexVector4::zeros();
                v[i] = C::ONE;
                v
            })
            .collect();
        return Ok(EigenDecomposition {
            pairs: vec![EigenPair {
                value: C::ZERO,
                vector: basis[0],
                multiplicity: 4,
                basis,
            }],
            diagonalizable: true,
        });
    }

    let values = qr_eigenvalues(m)?;
    let clusters = cluster_values(&values, cluster_tol);

    let mnorm = frobenius(m);
    let rank_thresh = RANK_TOL * mnorm;
    let mut pairs = Vec::with_capacity(clusters.len());
    let mut diagonalizable = true;
    let mut worst_residual = 0.0_f64;

    for (value, multiplicity) in clusters {
        let shifted = m - ComplexMatrix4::identity() * value;
        let gram = shifted.adjoint() * shifted;
        let (evals, evecs) = jacobi_hermitian(&gram);
        // evals ascending; singular values of `shifted` are their square roots.
        let mut basis = Vec::new();
        for (k, &g) in evals.iter().enumerate() {
            if g.max(0.0).sqrt() <= rank_thresh {
                basis.push(evecs[k]);
            }
        }
        if basis.is_empty() {
            // Force the minimal direction; the residual check below decides
            // whether the decomposition is acceptable.
            basis.push(evecs[0]);
        }
        if basis.len() < multiplicity {
            diagonalizable = false;
        }
        let vector = basis[0];
        let residual = (m * vector - vector * value).norm();
        worst_residual = worst_residual.max(residual);
        pairs.push(EigenPair {
            value,
            vector,
            multiplicity,
            basis,
        });
    }

    if worst_residual > RESIDUAL_TOL * mnorm.max(1.0) {
        return Err(EigenError::ConvergenceFailure {
            residual: worst_residual,
        });
    }

    pairs.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap()
    });
    Ok(EigenDecomposition {
        pairs,
        diagonalizable,
    })
}

/// The four eigenvalues of a 4×4 complex matrix via Hessenberg + shifted QR.
pub fn qr_eigenvalues(m: &ComplexMatrix4) -> Result<[C; 4], EigenError> {
    let mut h = hessenberg(*m);
    let scale = max_abs(&h).max(f64::MIN_POSITIVE);
    let eps = f64::EPSILON;

    let mut values = [C::ZERO; 4];
    let mut hi = 4usize; // active block is rows/cols [lo, hi)
    let mut iters = 0usize;
    let mut stall = 0usize;

    while hi > 0 {
        // Deflate negligible subdiagonals.
        for i in 1..hi {
            let small = eps * (h[(i - 1, i - 1)].norm() + h[(i, i)].norm()).max(scale * eps);
            if h[(i, i - 1)].norm() <= small {
                h[(i, i - 1)] = C::ZERO;
            }
        }
        // Trailing 1×1 or 2×2 block that has split off?
        if hi == 1 || h[(hi - 1, hi - 2)] == C::ZERO {
            values[hi - 1] = h[(hi - 1, hi - 1)];
            hi -= 1;
            stall = 0;
            continue;
        }
        if hi == 2 || h[(hi - 2, hi - 3)] == C::ZERO {
            let (l1, l2) = eig2(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            );
            values[hi - 2] = l1;
            values[hi - 1] = l2;
            hi -= 2;
            stall = 0;
            continue;
        }

        iters += 1;
        stall += 1;
        if iters > MAX_QR_ITERS {
            return Err(EigenError::ConvergenceFailure { residual: f64::NAN });
        }

        // Find the start of the trailing unreduced block.
        let mut lo = hi - 1;
        while lo > 0 && h[(lo, lo - 1)] != C::ZERO {
            lo -= 1;
        }

        let sigma = if stall.is_multiple_of(12) {
            // Exceptional shift to break symmetric stalls.
            h[(hi - 1, hi - 1)] + h[(hi - 1, hi - 2)].norm() * C::new(0.75, 0.43)
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, lo, hi, sigma);
    }

    Ok(values)
}

/// Reduce to upper Hessenberg form by Householder reflections (similarity).
fn hessenberg(mut h: ComplexMatrix4) -> ComplexMatrix4 {
    for k in 0..2usize {
        let len = 3 - k;
        let mut x = [C::ZERO; 3];
        for i in 0..len {
            x[i] = h[(k + 1 + i, k)];
        }
        let below: f64 = x[1..len].iter().map(|z| z.norm_sqr()).sum();
        if below.sqrt() <= f64::MIN_POSITIVE {
            continue;
        }
        let norm = x[..len].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let phase = if x[0].norm() > 0.0 {
            x[0] / x[0].norm()
        } else {
            C::ONE
        };
        let alpha = -phase * norm;
        let mut u = x;
        u[0] -= alpha;
        let unorm2: f64 = u[..len].iter().map(|z| z.norm_sqr()).sum();
        if unorm2 <= f64::MIN_POSITIVE {
            continue;
        }
        let beta = 2.0 / unorm2;
        // Left: H ← (I − βuu*) H on rows k+1..4.
        for j in 0..4 {
            let mut w = C::ZERO;
            for i in 0..len {
                w += u[i].conj() * h[(k + 1 + i, j)];
            }
            w *= beta;
            for i in 0..len {
                let delta = u[i] * w;
                h[(k + 1 + i, j)] -= delta;
            }
        }
        // Right: H ← H (I − βuu*) on cols k+1..4.
        for i in 0..4 {
            let mut w = C::ZERO;
            for j in 0..len {
                w += h[(i, k + 1 + j)] * u[j];
            }
            w *= beta;
            for j in 0..len {
                let delta = w * u[j].conj();
                h[(i, k + 1 + j)] -= delta;
            }
        }
        // Entries below the subdiagonal are now analytically zero.
        for i in (k + 2)..4 {
            h[(i, k)] = C::ZERO;
        }
    }
    h
}

/// Eigenvalues of a complex 2×2 [[a, b], [c, d]].
fn eig2(a: C, b: C, c: C, d: C) -> (C, C) {
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5).powu(2) + b * c;
    let root = disc.sqrt();
    (half_tr + root, half_tr - root)
}

/// Wilkinson shift: the eigenvalue of the trailing 2×2 closest to the corner.
fn wilkinson_shift(h: &ComplexMatrix4, hi: usize) -> C {
    let d = h[(hi - 1, hi - 1)];
    let (l1, l2) = eig2(
        h[(hi - 2, hi - 2)],
        h[(hi - 2, hi - 1)],
        h[(hi - 1, hi - 2)],
        d,
    );
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// One explicit shifted QR step H ← R (H − σ) R* + σ on the block [lo, hi),
/// with R a product of Givens rotations. Preserves Hessenberg form.
fn qr_step(h: &mut ComplexMatrix4, lo: usize, hi: usize, sigma: C) {
    for i in lo..hi {
        h[(i, i)] -= sigma;
    }
    // rotations[i] = (a, b, r) zeroing h[(i+1, i)] by rows.
    let mut rots: [(C, C, f64); 3] = [(C::ONE, C::ZERO, 1.0); 3];
    for i in lo..hi - 1 {
        let a = h[(i, i)];
        let b = h[(i + 1, i)];
        let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if r <= f64::MIN_POSITIVE {
            rots[i] = (C::ONE, C::ZERO, 1.0);
            continue;
        }
        rots[i] = (a, b, r);
        // Apply R_i = (1/r)[[a*, b*], [−b, a]] to rows i, i+1.
        for j in lo..4.min(hi) {
            let ti = h[(i, j)];
            let tj = h[(i + 1, j)];
            h[(i, j)] = (a.conj() * ti + b.conj() * tj) / r;
            h[(i + 1, j)] = (a * tj - b * ti) / r;
        }
    }
    // Right-multiply by R_i* = (1/r)[[a, −b*], [b, a*]] on columns i, i+1.
    for i in lo..hi - 1 {
        let (a, b, r) = rots[i];
        for row in lo..hi {
            let ti = h[(row, i)];
            let tj = h[(row, i + 1)];
            h[(row, i)] = (ti * a + tj * b) / r;
            h[(row, i + 1)] = (tj * a.conj() - ti * b.conj()) / r;
        }
    }
    for i in lo..hi {
        h[(i, i)] += sigma;
    }
}

/// Merge the four eigenvalues into clusters by relative gap, returning
/// (cluster mean, multiplicity) sorted by (re, im).
fn cluster_values(values: &[C; 4], cluster_tol: f64) -> Vec<(C, usize)> {
    let scale = values.iter().fold(1.0_f64, |acc, v| acc.max(v.norm()));
    let gap = cluster_tol * scale;

    // Union-find over 4 indices.
    let mut parent = [0usize, 1, 2, 3];
    fn find(parent: &mut [usize; 4], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if (values[i] - values[j]).norm() <= gap {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut clusters: Vec<(C, usize)> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..4 {
        let r = find(&mut parent, i);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    for r in roots {
        let members: Vec<C> = (0..4)
            .filter(|&i| find(&mut parent, i) == r)
            .map(|i| values[i])
            .collect();
        let mean = members.iter().sum::<C>() / members.len() as f64;
        clusters.push((mean, members.len()));
    }
    clusters.sort_by(|a, b| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap());
    clusters
}

fn frobenius(m: &ComplexMatrix4) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Cyclic complex Jacobi eigendecomposition of a Hermitian 4×4 matrix.
///
/// Returns eigenvalues ascending with matching orthonormal eigenvectors.
/// Unconditionally convergent, which is what the rank decisions here need.
pub fn jacobi_hermitian(g: &ComplexMatrix4) -> ([f64; 4], [ComplexVector4; 4]) {
    let mut a = *g;
    let mut v = ComplexMatrix4::identity();
    let scale = max_abs(&a).max(f64::MIN_POSITIVE);

    for _sweep in 0..30 {
        let mut off = 0.0_f64;
        for p in 0..4 {
            for q in (p + 1)..4 {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                let gpq = a[(p, q)];
                if gpq.norm() <= 1e-18 * scale {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phi = gpq.arg();
                let theta = 0.5 * (2.0 * gpq.norm()).atan2(app - aqq);
                let (s, c) = theta.sin_cos();
                // U columns: u_p = (c, s e^{−iφ}), u_q = (−s, c e^{−iφ}) in the
                // (p, q) plane; A ← U* A U, V ← V U.
                let e = C::new(phi.cos(), -phi.sin());
                let up = (C::new(c, 0.0), e * s);
                let uq = (C::new(-s, 0.0), e * c);
                // Columns update of A: A U.
                for r in 0..4 {
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    a[(r, p)] = arp * up.0 + arq * up.1;
                    a[(r, q)] = arp * uq.0 + arq * uq.1;
                }
                // Rows update: U* A.
                for col in 0..4 {
                    let apc = a[(p, col)];
                    let aqc = a[(q, col)];
                    a[(p, col)] = up.0.conj() * apc + up.1.conj() * aqc;
                    a[(q, col)] = uq.0.conj() * apc + uq.1.conj() * aqc;
                }
                for r in 0..4 {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp * up.0 + vrq * up.1;
                    v[(r, q)] = vrp * uq.0 + vrq * uq.1;
                }
            }
        }
    }

    let mut idx = [0usize, 1, 2, 3];
    let diag = [a[(0, 0)].re, a[(1, 1)].re, a[(2, 2)].re, a[(3, 3)].re];
    idx.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let evals = [diag[idx[0]], diag[idx[1]], diag[idx[2]], diag[idx[3]]];
    let evecs = [
        v.column(idx[0]).into_owned(),
        v.column(idx[1]).into_owned(),
        v.column(idx[2]).into_owned(),
        v.column(idx[3]).into_owned(),
    ];
    (evals, evecs)
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

    fn diag(a: C, b: C, d: C, e: C) -> ComplexMatrix4 {
        Matrix4::from_diagonal(&Vector4::new(a, b, d, e))
    }

    fn random_matrix(rng: &mut StdRng) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
    }

    fn sort_key(z: &C) -> (f64, f64) {
        (z.re, z.im)
    }

    #[test]
    fn simple_diagonal_spectrum() {
        let m = diag(c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0));
        let d = eigen4(&m, CLUSTER_TOL).unwrap();
        assert!(d.diagonalizable);
        assert_eq!(d.pairs.len(), 4);
        let mut vals = d.eigenvalues();
        vals.sort_by(|a, b| sort_key(a).partial_cmp(&sort_key(b)).unwrap());
        let mut expect = vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.5, 0.0)];
        expect.sort_by(|a, b| sort_key(a).partial_cmp(&sort_key(b)).unwrap());
        for (got, want) in vals.iter().zip(&expect) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn jordan_block_is_not_diagonalizable() {
        let o = C::ZERO;
        let l = C::ONE;
        // Eigenvalue i with a 2-block, plus simple 2 and 3.
        let j = Matrix4::new(
            c(0.0, 1.0), l, o, o, //
            o, c(0.0, 1.0), o, o, //
            o, o, c(2.0, 0.0), o, //
            o, o, o, c(3.0, 0.0),
        );
        let mut rng = StdRng::seed_from_u64(7);
        let q = loop {
            let q = random_matrix(&mut rng);
            if q.determinant().norm() > 0.3 {
                break q;
            }
        };
        let m = q * j * q.try_inverse().unwrap();
        let d = eigen4(&m, CLUSTER_TOL).unwrap();
        assert!(!d.diagonalizable);
        let defective = d.pairs.iter().find(|p| p.multiplicity == 2).unwrap();
        assert!((defective.value - c(0.0, 1.0)).norm() < 1e-6);
        assert_eq!(defective.basis.len(), 1);
    }

    #[test]
    fn similarity_preserves_spectrum() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..40 {
            let spectrum = [
                c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
                c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
                c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
                c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
            ];
            let q = loop {
                let q = random_matrix(&mut rng);
                if q.determinant().norm() > 0.3 {
                    break q;
                }
            };
            let m = q * diag(spectrum[0], spectrum[1], spectrum[2], spectrum[3])
                * q.try_inverse().unwrap();
            let mut got = qr_eigenvalues(&m).unwrap().to_vec();
            let mut want = spectrum.to_vec();
            got.sort_by(|a, b| sort_key(a).partial_cmp(&sort_key(b)).unwrap());
            want.sort_by(|a, b| sort_key(a).partial_cmp(&sort_key(b)).unwrap());
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).norm() < 1e-9, "{g} vs {w}");
            }
        }
    }

    #[test]
    fn eigen_residuals_meet_contract() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let m = random_matrix(&mut rng);
            let d = eigen4(&m, CLUSTER_TOL).unwrap();
            let scale = max_abs(&m);
            for p in &d.pairs {
                for v in &p.basis {
                    let r = (m * v - v * p.value).norm();
                    assert!(r <= 1e-9 * scale.max(1.0), "residual {r}");
                }
            }
            assert_eq!(d.pairs.iter().map(|p| p.multiplicity).sum::<usize>(), 4);
        }
    }

    #[test]
    fn vieta_symmetric_functions_match_traces() {
        // Cross-check eigenvalues against the characteristic polynomial through
        // Newton's identities instead of a fragile closed-form quartic.
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..30 {
            let m = random_matrix(&mut rng);
            let vals = qr_eigenvalues(&m).unwrap();
            let p1: C = m.trace();
            let m2 = m * m;
            let p2: C = m2.trace();
            let e1: C = vals.iter().sum();
            let e2 = vals
                .iter()
                .enumerate()
                .flat_map(|(i, a)| vals.iter().skip(i + 1).map(move |b| a * b))
                .sum::<C>();
            assert!((e1 - p1).norm() < 1e-10);
            assert!((e2 - (p1 * p1 - p2) * 0.5).norm() < 1e-9);
            let e4: C = vals.iter().product();
            assert!((e4 - m.determinant()).norm() < 1e-9);
        }
    }

    #[test]
    fn jacobi_diagonalizes_hermitian() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..30 {
            let b = random_matrix(&mut rng);
            let g = b.adjoint() * b;
            let (vals, vecs) = jacobi_hermitian(&g);
            for k in 0..4 {
                let r = (g * vecs[k] - vecs[k] * c(vals[k], 0.0)).norm();
                assert!(r < 1e-11 * max_abs(&g).max(1.0), "residual {r}");
                assert!(vals[k] >= -1e-12);
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let dot = vecs[i].dotc(&vecs[j]).norm();
                    assert!(dot < 1e-11, "orthogonality {dot}");
                }
            }
        }
    }
}
