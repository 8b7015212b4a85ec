//! The eigensolver's multiplicity clustering on matrices with genuinely
//! repeated eigenvalues: a Jordan block hiding in a parabolic generator, and
//! a diagonalizable repeated eigenvalue in an elliptic one.
//!
//! ```text
//! cargo run --example repeated_eigenvalues
//! ```

use pu31::eigen::{eigen4, CLUSTER_TOL};
use pu31::moduli::{build_generators, Family, ModuliPoint};

fn report(label: &str, m: &pu31::linalg::ComplexMatrix4) {
    let eig = eigen4(m, CLUSTER_TOL).unwrap();
    println!(
        "{label}: diagonalizable = {}",
        eig.diagonalizable
    );
    for p in &eig.pairs {
        println!(
            "    lambda = {:+.6} {:+.6}i  algebraic {}  geometric {}",
            p.value.re,
            p.value.im,
            p.multiplicity,
            p.basis.len()
        );
    }
}

fn main() {
    // Parabolic: repeated eigenvalue with a defective eigenspace.
    let gen = build_generators(&ModuliPoint::new(Family::Std012, 0.7, 0.3).unwrap()).unwrap();
    report("A0 at (0.7, 0.3), parabolic", &gen.a0);

    // Elliptic: the order-three generator has a two-dimensional eigenspace.
    report("-A1 at (0.7, 0.3), elliptic", &(-gen.a1));

    // On the two-eigenvalue locus the repeated eigenvalue has multiplicity 3.
    let alpha = 1.0;
    let c2b = -((std::f64::consts::FRAC_PI_2 - alpha).sin() + (alpha / 3.0).cos())
        / ((2.0 * alpha / 3.0).cos() + 1.0);
    let beta = c2b.acos() / 2.0;
    let gen = build_generators(&ModuliPoint::new(Family::Std012, alpha, beta).unwrap()).unwrap();
    report(
        &format!("A0 on the locus at ({alpha:.4}, {beta:.4})"),
        &gen.a0,
    );
}
