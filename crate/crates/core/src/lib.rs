//! Binary code constructions, invariants, and 2-neighbour-transitivity
//! certification in the Hamming graph H(m,2).
//!
//! The crate provides, bottom up:
//!
//! - [`f2`]: bit-packed vectors and matrices over GF(2) with RREF-canonical
//!   subspace arithmetic;
//! - [`code`]: linear and unrestricted codes with weight/distance invariants
//!   and derivation operators (puncture, parity extension, even subcode);
//! - [`coset`]: syndrome tables, covering radius, distance partitions, and
//!   s-regularity checks;
//! - [`perm`]: permutation groups with orbits, transitivity profiles, and
//!   stabilizer-chain orders;
//! - [`submodule`]: spinning and minimal/preminimal submodule search in the
//!   GF(2) permutation module;
//! - [`design`]: weight-layer block designs with exact parameter
//!   certification and the related distance bounds;
//! - [`catalog`]: constructions for the classified code families and their
//!   invariance groups;
//! - [`verify`]: the 2-neighbour-transitivity criterion, the brute-force
//!   orbit oracle, row verification, and the whole-catalog census;
//! - [`fileio`]: the bit-exact code and group file formats used by the CLI
//!   and the data directory.

pub mod catalog;
pub mod code;
pub mod coset;
pub mod design;
pub mod error;
pub mod f2;
pub mod fileio;
pub mod perm;
pub mod submodule;
pub mod verify;

pub use error::{Error, Result};
