//! Exact-arithmetic obstructions to realizing 3-manifolds by Dehn surgery on a knot in S³.
//!
//! The crate is organized around the manifolds `Y(T_{a,b}, T_{c,d})` obtained by splicing two
//! torus-knot exteriors, and provides:
//!
//! * [`numtheory`]: factorization, Legendre symbols, square roots modulo `n`, the character
//!   `χ_{8m}`, and the density-zero sets `S`, `S′` with their periodic approximations.
//! * [`lattice`]: changemaker vectors and a complete backtracking search for embeddings of a
//!   negative-definite Gram matrix into the orthogonal complement of a changemaker.
//! * [`goeritz`]: Goeritz matrices of checkerboard graphs and the builtin diagram families.
//! * [`manifolds`]: torus knots, splices, Eudave-Muñoz knots, SU(2)-cyclic surgery slopes on
//!   iterated torus knots, and the combined "is this a surgery?" verdict.
//! * [`repvar`]: exact rational witnesses for non-SU(2)-cyclicity.
//! * [`report`]: JSON reports shared by the `obstruct` binary and the examples.
//!
//! No floating point is used in any verdict.

pub mod error;
pub mod goeritz;
pub mod lattice;
pub mod manifolds;
pub mod numtheory;
pub mod report;
pub mod repvar;

pub use error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::Ratio<i128>;
