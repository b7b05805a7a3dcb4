// SPDX-License-Identifier: Apache-2.0

//! Exact complexity measures of Boolean functions `f: {0,1}^n -> {0,1}`.
//!
//! A function is stored as its truth table. Coordinate `j` (1-based) of a
//! point is bit `j - 1` of the table index, and the same integer is read as
//! the subset of `[n]` whose characteristic vector is that point. Every
//! measure in this crate is computed with integer arithmetic only:
//!
//! * [`spectral`]: Walsh-Hadamard spectrum and Fourier degree.
//! * [`algebraic`]: algebraic normal form over GF(2) and its degree.
//! * [`vc`]: shattering, VC-dimension, null-design parity checks and the
//!   constructive shattered-set extractor.
//! * [`measures`]: sensitivity, certificate complexity, decision-tree depth
//!   and one-inclusion graph statistics.
//! * [`constructions`]: subcubes, the named example functions, and seeded
//!   random generators.
//! * [`census`]: exhaustive and sampled verification of the trade-off
//!   inequalities.

pub mod algebraic;
pub mod bits;
pub mod census;
pub mod constructions;
mod error;
pub mod format;
mod function;
pub mod measures;
pub mod spectral;
pub mod vc;

pub use crate::algebraic::{anf, F2Polynomial};
pub use crate::bits::{zeta_subset_f2, zeta_superset_f2};
pub use crate::bits::{BitTable, Mask};
pub use crate::error::{Error, Result};
pub use crate::function::{
    zeta_superset_parity, BooleanFunction, PointAssignment, SetFamily, MAX_DIMENSION,
};
pub use crate::spectral::{wht, FourierSpectrum};
pub use crate::vc::{vc_dimension, ShatterWitness};
