//! Exact-arithmetic toolkit for cyclic cubic points on curves.
//!
//! The crate is organised bottom-up: [`polyalg`] supplies rational and
//! polynomial arithmetic, [`parser`] reads and writes polynomial text, and
//! the remaining modules build curve-level certificates on top.

pub mod curves;
pub mod cyclic;
pub mod elliptic;
pub mod error;
pub mod galois;
pub mod parser;
pub mod polyalg;
pub mod quartic;

pub use error::{Error, Result};
pub use polyalg::{BiPoly, Rational, UniPoly};
