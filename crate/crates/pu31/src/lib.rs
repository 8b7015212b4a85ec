//! Numerical toolkit for the isometry theory of complex hyperbolic 3-space.
//!
//! The crate builds explicit matrix representations of the modular group into
//! PU(3,1), classifies the dynamical type of the resulting isometries, and
//! runs a sampled discreteness certificate built from families of ℂ²-chains in
//! the Heisenberg boundary.
//!
//! Organization:
//!
//! - [`linalg`]: ℂ⁴ arithmetic over the signature-(3,1) Hermitian forms.
//! - [`eigen`]: dense 4×4 complex eigensolver with multiplicity clustering.
//! - [`heisenberg`]: boundary geometry — group law, lifts, chains, the Cartan
//!   invariant.
//! - [`isometry`]: presentation matrices with chirality; trace data, the holy
//!   grail function, and the elliptic/parabolic/loxodromic classification.
//! - [`moduli`]: the two (α, β)-families of modular-group generators, word
//!   evaluation, and edge specializations.
//! - [`certificate`]: the axis of the parabolic generator, polar-vector
//!   families, bisector slices, and the sampled discreteness certificate.
//! - [`cli`]: the command-line surface used by the `pu31` binary.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --example verify_relations`.

pub mod certificate;
pub mod cli;
pub mod eigen;
pub mod heisenberg;
pub mod isometry;
pub mod linalg;
pub mod moduli;
