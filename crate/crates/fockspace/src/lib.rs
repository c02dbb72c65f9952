//! Abstract Fock spaces for finite Cartan types.
//!
//! For a finite root system and a positive level parameter `ell`, the space
//! carries a distinguished basis of kets indexed by dominant integral
//! weights, a straightening rewriting system that brings arbitrary kets into
//! that basis, a bar involution, and the bar-invariant canonical basis whose
//! coefficients are parabolic affine Kazhdan-Lusztig polynomials. Weyl
//! characters act on the space at level `-ell - h`, and the [`theorems`]
//! module turns the identities this structure satisfies (Steinberg-Lusztig
//! product, Casselman-Shalika collapse, mod-v cancellation, LLT coefficient
//! identities, truncated graded characters) into executable checks.
//!
//! Start with the runnable programs under `examples/`; each one demonstrates
//! a single capability end to end. The `fock` binary exposes the same
//! operations as subcommands with stable JSON output.

pub mod characters;
pub mod cli;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod rootdata;
pub mod theorems;

pub use error::{Error, Result};
pub use fock::{FockConfig, FockElement, FockSpace, RawFockExpression};
pub use laurent::LaurentPoly;
pub use rootdata::{AffineWeylElement, CartanType, RootSystem, Series, Weight};
