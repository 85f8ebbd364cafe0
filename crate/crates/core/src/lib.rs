//! Exact E8 root system, golden-ratio folding to H4, and quaternionic
//! Weyl-orbit polytopes.
//!
//! Everything here is `no_std` with `alloc`. The tower field
//! ℚ(√2,√5)(√φ) carries every constant, so all set-level claims are
//! checked without tolerances; only [`geom`] and the matrix exponential
//! in [`foldcore`] work in floating point.

#![no_std]

extern crate alloc;

pub mod exactfield;
pub mod foldcore;
pub mod geom;
pub mod linalg;
pub mod polytopes;
pub mod quatoct;
pub mod rootsys;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("singular matrix")]
    Singular,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unsupported mode {0:?}")]
    UnsupportedMode(String),
}

pub type Result<T> = core::result::Result<T, Error>;
