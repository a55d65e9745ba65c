//! Exact-arithmetic toolkit for tensor-product invariants of the classical
//! groups B/C/D (and their Spin covers), together with the symmetric
//! flag-quiver machinery that controls them: Euler forms with relations,
//! exact hom/ext computation, the weight/dimension-vector dictionary, and
//! finite-field brute-force oracles.
//!
//! Everything in this crate computes over exact fields (arbitrary-precision
//! integers and rationals, or prime fields). There is no floating point
//! anywhere: the saturation questions answered here are zero/nonzero
//! decisions and rounding would be fatal.

pub mod cli;
pub mod error;
pub mod flagq;
pub mod lietypes;
pub mod linalg;
pub mod oracle;
pub mod quiver;
pub mod tensor;

pub use error::Error;
