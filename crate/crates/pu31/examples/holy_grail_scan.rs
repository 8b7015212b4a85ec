//! ASCII map of the sign of the holy grail function of a word across the
//! moduli square: `#` regular elliptic, `.` regular loxodromic, `o` anything
//! in the zero band. Rows run over alpha (top = pi/2), columns over beta.
//!
//! ```text
//! cargo run --example holy_grail_scan -- "2,1"
//! ```

use pu31::isometry::{classify, Classification};
use pu31::linalg::HermitianForm;
use pu31::moduli::{build_generators, evaluate_word, Family, ModuliPoint, Word};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "2,1".to_string());
    let word = Word::parse(&text).expect("word syntax is m1,n1;m2,n2;...");
    let grid = 48usize;
    let step = std::f64::consts::FRAC_PI_2 / (grid - 1) as f64;
    println!("sign map of the holy grail function for W({text}):\n");
    for i in (0..grid).rev() {
        let alpha = step * i as f64;
        let mut line = String::with_capacity(grid);
        for j in 0..grid {
            let beta = step * j as f64;
            let point = ModuliPoint::new(Family::Std012, alpha, beta).unwrap();
            let gen = build_generators(&point).unwrap();
            let matrix = evaluate_word(&gen, &word);
            let ch = match classify(&matrix, HermitianForm::Siegel, 1e-9) {
                Ok(Classification::RegularElliptic { .. }) => '#',
                Ok(Classification::RegularLoxodromic) => '.',
                _ => 'o',
            };
            line.push(ch);
        }
        println!("{line}");
    }
    println!("\n(alpha increases upward, beta rightward; use the `pu31 scan` subcommand for CSV)");
}
