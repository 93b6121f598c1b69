//! Multigraded Betti numbers of monomial ideals and the invariants read off
//! from them.
//!
//! For a monomial ideal `I` and a multidegree `b`, the upper Koszul complex
//! `K^b(I)` has as faces the squarefree vectors `τ <= b` with `x^(b-τ)` in
//! `I`, and `beta_{i,b}(I) = dim H̃_{i-1}(K^b(I))`. These numbers vanish off
//! the lcm lattice, so only lattice points are visited.

mod betti;
mod field;
mod hilbert;
mod koszul;
mod lattice;
pub mod linalg;

pub use betti::{betti_table, BettiOptions, BettiTable, Regularity, DEFAULT_LATTICE_CAP};
pub use field::Field;
pub use hilbert::{hilbert_function_oracle, HilbertSeries, Polynomial};
pub use koszul::{reduced_homology_ranks, upper_koszul_complex, SimplicialComplex};
pub use lattice::lcm_lattice;
