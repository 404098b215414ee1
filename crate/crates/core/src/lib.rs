//! Exact computation of Jack-polynomial connection coefficients, their
//! integrality certificates, and the graded Farahat-Higman algebra.
//!
//! Everything here is exact: arithmetic runs over arbitrary-precision
//! integers and rationals, and every claimed integrality or unimodularity
//! is certified rather than assumed. There is no floating point anywhere.

pub mod cache;
pub mod connection;
pub mod error;
pub mod fh;
pub mod jm;
pub mod linalg;
pub mod matchings;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod reconstruct;
pub mod symfunc;
pub mod tables;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{IntPoly, UniPoly, Var};
pub use ratfunc::RatFunc;
