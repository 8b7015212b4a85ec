//! Tour of the dynamical classification: the order-three generator's fixed
//! angle type, the parabolic/elliptic case split of A₀ = A₂A₁ across the
//! square, and a loxodromic word.
//!
//! ```text
//! cargo run --example classify_isometries
//! ```

use pu31::isometry::{classify, elliptic_angle_type, trace_data};
use pu31::linalg::HermitianForm;
use pu31::moduli::{build_generators, evaluate_word, Family, ModuliPoint, Word};

fn main() {
    let form = HermitianForm::Siegel;

    println!("angle type of the order-three generator:");
    for family in [Family::Std012, Family::Std122] {
        let point = ModuliPoint::new(family, 0.8, 0.35).unwrap();
        let gen = build_generators(&point).unwrap();
        let (t1, t2, t3) = elliptic_angle_type(&gen.a1, form).unwrap();
        println!(
            "  family {family}: ({:.6}, {:.6}, {:.6}) x pi",
            t1 / std::f64::consts::PI,
            t2 / std::f64::consts::PI,
            t3 / std::f64::consts::PI
        );
    }

    println!("\nA0 across the parameter square (family 012):");
    for (alpha, beta) in [
        (0.7, 0.3),
        (0.01, 1.2),
        (0.0, 0.3),
        (0.0, std::f64::consts::FRAC_PI_2),
        (std::f64::consts::FRAC_PI_2, 0.0),
    ] {
        let point = ModuliPoint::new(Family::Std012, alpha, beta).unwrap();
        let gen = build_generators(&point).unwrap();
        let class = classify(&gen.a0, form, 1e-9).unwrap();
        println!("  ({alpha:.4}, {beta:.4}): {}", class.label());
    }

    println!("\nwords at (0.7, 0.7):");
    let point = ModuliPoint::new(Family::Std012, 0.7, 0.7).unwrap();
    let gen = build_generators(&point).unwrap();
    for text in ["1,1", "2,1", "1,2;3,2"] {
        let word = Word::parse(text).unwrap();
        let matrix = evaluate_word(&gen, &word);
        let td = trace_data(&matrix).unwrap();
        let class = classify(&matrix, form, 1e-9).unwrap();
        println!(
            "  W({text}): {} (trace {:.4}, holy {:.3e})",
            class.label(),
            td.tau.re,
            td.holy
        );
    }
}
