//! McCarthy's p-adic hypergeometric functions over finite fields, the Morita
//! p-adic gamma function they are built from, point counts on Weierstrass and
//! Hessian curves, and a harness that checks the identities tying them together.

pub(crate) mod arith;
pub mod curves;
pub mod error;
pub mod field;
pub mod gamma;
pub mod gauss;
pub mod hypergeom;
pub mod padic;
pub mod rational;
pub mod verify;

pub use error::{Error, Gate, Result};
