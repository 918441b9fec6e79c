//! Exact computation with toric cubes.
//!
//! A toric cube is a subset of `[0,1]^n` cut out by binomial inequalities
//! `x^u <= x^v` that equals the closure of its strictly positive points.
//! Taking coordinatewise negated logarithms turns the positive part into a
//! rational polyhedral cone in the non-negative orthant, and almost every
//! computation here is carried out on that cone:
//!
//! * [`exactnum`]: arbitrary-precision integer vectors and rational matrices;
//! * [`cone`]: double description, faces, projections, Farkas certificates,
//!   fans;
//! * [`toric`]: binomial systems, monomial maps, implicitization,
//!   parametrization, cubification and strata;
//! * [`cw`]: cell decompositions whose open cells are interiors of toric cubes;
//! * [`oracle`]: brute-force verifiers independent of the cone engine;
//! * [`cli`]: the JSON/DOT front end behind the `toricube` binary.

pub mod cli;
pub mod cone;
pub mod cw;
pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod toric;

pub use error::{Result, ToricError};
