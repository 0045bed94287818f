//! Computational toolkit for finite-dimensional real JB*-triples.
//!
//! The crate models a triple system as a dense rank-3 structure tensor plus a
//! norm oracle, and layers on top of it the Peirce calculus of tripotents,
//! triple ideals and their lattice, M-projection verification, triple
//! derivations with their isometric flows, and the dual-space machinery of
//! support tripotents and faces. The `report` module drives every
//! verification end to end and renders deterministic JSON or text reports.

pub mod error;
pub mod linalg;

pub use error::{JbError, Result};
pub use linalg::{Matrix, Subspace, Tolerances, Vector};
