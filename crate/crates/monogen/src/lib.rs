//! Exact integer and polynomial arithmetic for deciding monogenicity and
//! Galois structure of even polynomials `f(X) = g(X^2)` over the rationals.
//!
//! The crate is organized bottom-up:
//!
//! - [`zint`]: integer factorization, primality, perfect squares, squarefreeness.
//! - [`zpoly`]: dense integer polynomials, discriminants via subresultants,
//!   factorization mod p and over the integers.
//! - [`mono`]: the Dedekind index criterion and the monogenicity decision.
//! - [`galois6`]: Galois-group classification of irreducible even sextics.
//! - [`cyclo`]: cyclotomic and real-cyclotomic minimal polynomials and the
//!   shifted families they generate.
//! - [`hunt`]: bounded exhaustive searches and the verification harnesses
//!   built on top of them.
//!
//! Everything is exact; no floating point enters any decision path.

pub mod cyclo;
pub mod galois6;
pub mod hunt;
pub mod mono;
pub mod zint;
pub mod zpoly;

pub use num_bigint::BigInt;
pub use num_bigint::Sign;

pub use zint::{FactorBudget, Factorization, Squarefree};
pub use zpoly::{IntPoly, ZFactorization};
