//! Exact computations for isolated hypersurface singularities.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over the rationals, monomial
//!   orders and a small text grammar.
//! * [`groebner`]: Buchberger's algorithm for global orders, Mora's tangent
//!   cone algorithm for local orders, staircases and quotient dimensions.
//! * [`singularity`]: Milnor and Tyurina numbers, weighted homogeneity,
//!   Hessian corank, the splitting lemma and ADE classification.
//! * [`deformation`]: the five simple families with their versal
//!   deformations, critical loci and adjacency tables.
//! * [`transition`]: bookkeeping for small, type II and type III geometric
//!   transitions.
//!
//! Everything is exact; no floating point value enters a decision.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod deformation;
mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod singularity;
pub mod transition;
pub mod univariate;

pub use error::{Error, Result};
pub use poly::{infer_variables, parse_poly, Monomial, MultiPoly, Rational, Ring, TermOrder};
