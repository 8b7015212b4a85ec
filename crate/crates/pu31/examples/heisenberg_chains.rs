//! Boundary geometry playground: the Heisenberg group law, chains from
//! centers and radii, pairwise chain positions, the Cartan invariant, and the
//! inversion image law for chains.
//!
//! ```text
//! cargo run --example heisenberg_chains
//! ```

use pu31::heisenberg::{
    cartan_invariant, chain_from_center_radius, chain_pair_position, heis_product,
    iota0_chain_image, ChainKind, HeisenbergPoint,
};
use pu31::linalg::C;
use pu31::moduli::p3_point;

fn main() {
    let p = HeisenbergPoint::finite(C::new(1.0, 0.0), C::ZERO, 0.0);
    let q = HeisenbergPoint::finite(C::new(0.0, 1.0), C::ZERO, 0.0);
    println!("[1,0,0] * [i,0,0] = {:?}", heis_product(&p, &q).unwrap());

    let near = chain_from_center_radius(&HeisenbergPoint::origin(), 1.0).unwrap();
    let far = chain_from_center_radius(
        &HeisenbergPoint::finite(C::new(3.0, 0.0), C::ZERO, 0.0),
        1.0,
    )
    .unwrap();
    let overlapping = chain_from_center_radius(
        &HeisenbergPoint::finite(C::new(0.5, 0.0), C::ZERO, 0.0),
        1.0,
    )
    .unwrap();
    for (label, other) in [("far", &far), ("overlapping", &overlapping)] {
        let pos = chain_pair_position(&near, other, 1e-9).unwrap();
        println!(
            "unit chain vs {label}: {:?} (gram excess {:.4})",
            pos.value, pos.gram_excess
        );
    }

    println!("\nCartan invariant of the ideal triangle (infinity, origin, p3):");
    for (alpha, beta) in [(0.3, 0.1), (1.0, 0.8), (1.5, 1.5)] {
        let a = cartan_invariant(
            &HeisenbergPoint::Infinity,
            &HeisenbergPoint::origin(),
            &p3_point(alpha, beta),
        )
        .unwrap();
        println!("  p3({alpha:.2}, {beta:.2}) gives {a:.12} (= alpha)");
    }

    println!("\ninversion image of chains centered on the second mirror:");
    for (b, c, r) in [(0.5, 0.25, 2.0), (0.0, 0.0, 1.0), (1.0, -0.5, 0.4)] {
        match iota0_chain_image(b, c, r) {
            Ok((center, radius)) => {
                println!("  center ({b}i, {c}, 0), R = {r}  ->  {center:?}, R' = {radius:.6}")
            }
            Err(e) => println!("  center ({b}i, {c}, 0), R = {r}  ->  {e}"),
        }
    }

    // Round-trip through the polar vector view.
    let chain = chain_from_center_radius(
        &HeisenbergPoint::finite(C::new(0.2, -0.4), C::new(0.0, 0.9), 1.3),
        0.75,
    )
    .unwrap();
    if let ChainKind::Finite { center, radius } = chain.kind() {
        println!("\npolar round-trip: center {center:?}, radius {radius}");
    }
}
