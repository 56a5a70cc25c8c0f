//! Null Lagrangians, gauge functions and Galilean invariance for
//! one-dimensional mechanics.
//!
//! The symbolic kernel ([`expr`]) works over exact rationals; [`variational`],
//! [`galilean`] and [`invariance`] build on it, and [`numeric`] re-checks the
//! resulting identities in floating point.

pub mod cli;
pub mod expr;
pub mod galilean;
pub mod invariance;
pub mod numeric;
pub mod sampling;
pub mod variational;

pub use expr::{parse, Polynomial, Rational, Symbol};
