//! Exact computations with cover ideals of (multi)partite graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`] builds graphs (including the complete multipartite and nested
//!   bipartite families) and enumerates minimal vertex covers.
//! * [`ideal`] holds monomials, gradings and monomial ideals together with the
//!   cover/edge ideal constructors, powers, colons and Alexander duality.
//! * [`resolution`] computes multigraded Betti numbers from the lcm lattice via
//!   upper Koszul simplicial complexes, and derives regularity, projective
//!   dimension, depth and Hilbert series.
//! * [`oracle`] encodes the closed-form predictions for these families, the
//!   explicit syzygy complexes, and the verification harness.
//!
//! Betti tables always describe the quotient `R/I`; the shift
//! `beta_{i+1}(R/I) = beta_i(I)` converts to the ideal convention.

pub mod error;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod resolution;
pub mod spec;

pub use error::{Error, Result};
pub use graph::{Graph, VertexCover};
pub use ideal::{Grading, Monomial, MonomialIdeal};
pub use resolution::{BettiTable, Field, HilbertSeries};
