//! Finite cyclic and dihedral symmetries of knots in the 3-sphere.
//!
//! The crate is `no_std` (with `alloc`). It covers the residue arithmetic behind
//! the type parameters, orthogonal representations of `C_n` and `D_n`, the
//! symmetry-type taxonomy with its classifier and restriction rules, numerical
//! linking numbers and type detection for curves in `S^3`, circle-map rotation
//! numbers and conjugators, and the combinatorial existence constructions.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod circlemaps;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod orthrep;
pub mod typing;
pub mod zmod;

pub use error::{Error, ErrorCategory, Result};
