//! Exact integer triangles generated by weighted step rules, with their
//! interpretation as sl2 tensor-product multiplicities.
//!
//! The library has three layers:
//!
//! - [`laurent`]: exact Laurent-polynomial arithmetic over arbitrary-precision
//!   integers, and the expansion of symmetric polynomials in the q-number
//!   basis `[k]_q`.
//! - [`triangle`] / [`catalog`]: a generic "initial row + step rule" engine
//!   for doubly-indexed integer triangles, plus named constructors for the
//!   Pascal, Catalan and Motzkin families and their closed-form entry
//!   formulas and named sequences.
//! - [`sl2`] / [`combinat`]: the representation-theoretic reading of triangle
//!   rows (tensor-power decompositions, with a Clebsch-Gordan oracle) and the
//!   combinatorial one (weighted lattice-path counting, Pieri/Bratteli path
//!   counts on two-row partitions).
//!
//! All arithmetic is exact; there are no floating-point values anywhere.

pub mod catalog;
pub mod combinat;
mod error;
pub mod laurent;
pub mod sl2;
pub mod triangle;

pub use error::Error;

/// Exponents of `q` and triangle column indices.
pub type Exponent = i128;

/// Arbitrary-precision integer coefficient.
pub type Coeff = num_bigint::BigInt;
