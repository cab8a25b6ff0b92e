//! Exact computation of chromatic symmetric functions, chromatic and tree
//! polynomials of vertex-weighted graphs.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: symmetric
//! function coefficients are arbitrary-precision rationals and polynomials have
//! rational coefficients.
//!
//! Layout:
//!
//! - [`algebra`]: rationals, integer partitions, univariate polynomials, and a
//!   small exact linear-algebra kernel.
//! - [`graph`]: simple vertex-weighted graphs with a total edge order.
//! - [`bcc`]: the broken circuit complex and the forest/cut combinatorics built on it.
//! - [`symfun`]: symmetric functions in the power-sum basis, chromatic bases and
//!   basis change.
//! - [`csf`]: three independent engines for the chromatic symmetric function.
//! - [`graphpoly`]: chromatic and tree polynomials, their transforms and the
//!   lattice of contractions.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bcc;
pub mod csf;
mod error;
pub mod graph;
pub mod graphpoly;
pub mod symfun;

pub use algebra::{binomial, mobius_substitute, partitions_of, Partition, Rational, UniPoly};
pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexPartition, WeightedGraph};
pub use symfun::{BasisId, GraphFamily, SymFun, TransitionCache};
