//! Exact symbolic computation of central elements of U(gl(n)) and shifted
//! symmetric polynomials through the superalgebraic method of virtual
//! variables.
//!
//! The crate builds, from the bottom up: partition and permutation
//! combinatorics; the supersymmetric coordinate ring with superpolarization
//! operators; the free superalgebra with PBW rewriting, devirtualization and
//! module actions; Young bitableaux with superstandard straightening; the
//! five central families (determinantal H, permanental I, shaped K and J,
//! Schur S) with their eigenvalue routes; and shifted symmetric polynomials
//! with the Harish-Chandra map realized by exact interpolation.
//!
//! Every value is an arbitrary-precision rational; all identities are
//! checked exactly.

pub mod central;
pub mod enveloping;
pub mod error;
mod linalg;
pub mod partitions;
pub mod rational;
pub mod shifted;
pub mod superalgebra;
pub mod tableaux;

pub use error::{Error, Result};
pub use rational::Rat;
