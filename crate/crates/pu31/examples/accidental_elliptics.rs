//! The spot list of words that go accidentally elliptic at (0.2, 0.2): each
//! is loxodromic in the abstract group but its image has positive holy grail
//! value, so the representation there cannot be faithful and discrete in the
//! expected way.
//!
//! ```text
//! cargo run --example accidental_elliptics
//! ```

use std::time::Instant;

use pu31::isometry::trace_data;
use pu31::moduli::{
    accidental_elliptic_words, build_generators, evaluate_word, Family, ModuliPoint,
};

fn main() {
    let point = ModuliPoint::new(Family::Std012, 0.2, 0.2).unwrap();
    let gen = build_generators(&point).unwrap();
    println!("holy grail values at (alpha, beta) = (0.2, 0.2):\n");
    for word in accidental_elliptic_words() {
        let start = Instant::now();
        let matrix = evaluate_word(&gen, &word);
        let td = trace_data(&matrix).unwrap();
        let micros = start.elapsed().as_micros();
        let label = format!("W({word})");
        println!("  {label:<16} holy = {:+.6e}  ({micros} us)", td.holy);
    }
    println!("\nall positive: each word is accidentally elliptic at this point");
}
