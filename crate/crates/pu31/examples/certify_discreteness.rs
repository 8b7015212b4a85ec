//! Run the sampled discreteness certificate at three qualitatively different
//! moduli points: one in the certified neighborhood, one on the degenerate
//! locus, and one with accidental elliptics.
//!
//! ```text
//! cargo run --release --example certify_discreteness
//! ```

use pu31::certificate::{beta0, certify, DEFAULT_MARGIN, DEFAULT_SAMPLES};
use pu31::moduli::{Family, ModuliPoint};

fn main() {
    let cases = [
        ("near the discrete corner", 1.5208, 0.05),
        ("on the two-eigenvalue locus", std::f64::consts::FRAC_PI_2, beta0()),
        ("accidental-elliptic territory", 0.2, 0.2),
    ];
    for (label, alpha, beta) in cases {
        let point = ModuliPoint::new(Family::Std012, alpha, beta).unwrap();
        let report = certify(&point, DEFAULT_SAMPLES, DEFAULT_MARGIN);
        println!("{label} (alpha = {alpha:.4}, beta = {beta:.4}):");
        println!("  verdict {}", report.verdict.label());
        if let Some((y1, x2)) = report.axis {
            println!("  axis offsets y1 = {y1:.6}, x2 = {x2:.6}");
        }
        if let (Some(a), Some(ts)) = (report.pairing_a, report.tstar) {
            println!("  pairing a = {a:.6}, separation t* = {ts:.6}");
        }
        for check in &report.checks {
            match check.min_margin {
                Some(m) => {
                    let arg = check
                        .arg_min
                        .map(|(l, mu)| format!(" at ({l:.4}, {mu:.4})"))
                        .unwrap_or_default();
                    println!("  {:<34} min margin {m:+.3e}{arg}", check.name);
                }
                None => println!("  {:<34} skipped", check.name),
            }
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
        println!();
    }
}
