//! The axis of the parabolic generator and the polar-vector families built on
//! it: line vs plane cases, the separation constant t*, norm checks, and the
//! seam continuity between the three regimes.
//!
//! ```text
//! cargo run --example axis_and_polars
//! ```

use pu31::certificate::{a0_axis, beta0, polar_family, tstar, AxisCase};
use pu31::linalg::{herm_inner, HermitianForm};
use pu31::moduli::{Family, ModuliPoint};

fn main() {
    println!("axis data across the square:");
    let locus_beta = {
        // Solve the locus equation at alpha = 1 for comparison.
        let alpha = 1.0_f64;
        let c2b = -((std::f64::consts::FRAC_PI_2 - alpha).sin() + (alpha / 3.0).cos())
            / ((2.0 * alpha / 3.0).cos() + 1.0);
        c2b.acos() / 2.0
    };
    for (alpha, beta) in [
        (0.7, 0.0),
        (1.2, 0.9),
        (std::f64::consts::FRAC_PI_2, 0.3),
        (1.0, locus_beta),
        (std::f64::consts::FRAC_PI_2, beta0()),
    ] {
        let point = ModuliPoint::new(Family::Std012, alpha, beta).unwrap();
        match a0_axis(&point) {
            Ok(axis) => match axis.case {
                AxisCase::InvariantLine { y1, x2 } => println!(
                    "  ({alpha:.4}, {beta:.4}): line through (i*{y1:.6}, {x2:.6}), \
                     t* = {:.6}, locus residual {:+.3e}",
                    tstar(&point).unwrap(),
                    axis.locus_residual
                ),
                AxisCase::InvariantPlane { .. } => println!(
                    "  ({alpha:.4}, {beta:.4}): invariant plane (on the locus, \
                     residual {:+.3e})",
                    axis.locus_residual
                ),
                AxisCase::NotParabolic => println!("  ({alpha:.4}, {beta:.4}): not parabolic"),
            },
            Err(e) => println!("  ({alpha:.4}, {beta:.4}): {e}"),
        }
    }

    println!("\npolar family at (1.3, 0.2):");
    let point = ModuliPoint::new(Family::Std012, 1.3, 0.2).unwrap();
    let family = polar_family(&point).unwrap();
    println!(
        "  offsets y1 = {:.6}, x2 = {:.6}, pairing a = {:.6}",
        family.y1, family.x2, family.a
    );
    for lambda in [0.25, 0.5, 1.0, 2.0, 4.0, 100.0] {
        let p = family.polar(lambda).unwrap();
        let norm = herm_inner(&p, &p, HermitianForm::Siegel).re;
        println!("  <p, p> at lambda = {lambda:>6}: {norm:.12}");
    }
    let seam = family.middle_polar(2.0).unwrap() - family.p2();
    println!(
        "  seam mismatch at lambda = 2: {:.3e}",
        seam.iter().map(|z| z.norm()).fold(0.0_f64, f64::max)
    );
}
