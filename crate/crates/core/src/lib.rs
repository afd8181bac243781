//! Exact-arithmetic verification of the generalized Cesàro matrices of order
//! two: entry generators, interrupter identities checked on finite sections
//! and by telescoping, symbolic determinants, and positivity certificates.

pub mod error;
pub mod identities;
pub mod matrix;
pub mod operators;
pub mod poly;
pub mod positivity;
pub mod ratfun;
pub mod scalar;
pub mod telescope;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use operators::Alpha;
pub use poly::Poly;
pub use ratfun::{AlphaPoly, AlphaRatFun, KRatFun, RatFun};
pub use scalar::{format_rational, parse_rational, Field, Rational, Ring};
