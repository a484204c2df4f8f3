//! Exact loop symmetric functions.

pub mod action;
pub mod alternants;
pub mod arith;
pub mod band;
pub mod cli;
pub mod det;
pub mod error;
pub mod generators;
pub mod strips;
pub mod sweep;
pub mod tableaux;
pub mod verify;

pub use arith::{Ambient, BigRational, Monomial, Poly, RatFn, VarId};
pub use error::{Error, Result};
