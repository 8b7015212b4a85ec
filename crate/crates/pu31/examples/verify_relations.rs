//! Build the generator matrices of both families at a few moduli points and
//! verify the defining relations numerically.
//!
//! ```text
//! cargo run --example verify_relations
//! ```

use pu31::moduli::{build_generators, verify_relations, Family, ModuliPoint};

fn main() {
    let points = [
        (0.7, 0.3),
        (0.0, 0.0),
        (std::f64::consts::FRAC_PI_2, 0.9),
        (1.1, std::f64::consts::FRAC_PI_2),
    ];
    for family in [Family::Std012, Family::Std122] {
        for &(alpha, beta) in &points {
            let point = ModuliPoint::new(family, alpha, beta).unwrap();
            let gen = build_generators(&point).unwrap();
            let report = verify_relations(&gen, 1e-10);
            println!(
                "family {family} at (alpha, beta) = ({alpha:.4}, {beta:.4}): {} \
                 (max residual {:.3e})",
                if report.pass { "PASS" } else { "FAIL" },
                report.max_residual()
            );
            for (name, residual) in &report.residuals {
                println!("    {name:<28} {residual:.3e}");
            }
            if let Some(note) = report.note {
                println!("    note: {note}");
            }
        }
    }
}
