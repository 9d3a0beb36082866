//! Exact K-theoretic invariants of hereditary categories.
//!
//! The crate works at the level of Grothendieck groups equipped with an
//! Euler form: bilinear lattices with a Serre operator (Coxeter matrix),
//! quiver representations with exact hom/ext computations, tubes, and a
//! classifier that recognizes the standard building blocks from lattice
//! data alone. All arithmetic is exact (arbitrary-precision integers and
//! rationals); nothing is verified up to floating-point tolerance.

pub mod classify;
pub mod exact;
pub mod json;
pub mod klattice;
pub mod quiver;
pub mod search;
pub mod tube;
pub mod verify;

pub use exact::{Int, IntMatrix, Rat, RatMatrix};
pub use klattice::{EulerLattice, KLatticeError, NumLattice};
