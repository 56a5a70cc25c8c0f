//! Exact-rational multivariate polynomials over a fixed symbol table.
//!
//! Every Lagrangian, gauge function and Euler-Lagrange residual in the crate is
//! a [`Polynomial`]. Coefficients are [`Rational`]s so that "vanishes
//! identically" is a structural test, not a tolerance.

mod parse;
mod poly;
mod symbol;

use thiserror::Error;

pub use parse::{parse, parse_with, ParseOptions};
pub use poly::{rat, DegreeCap, Monomial, Polynomial, Powers, Rational, DEFAULT_DEGREE_CAP};
pub use symbol::{Frame, Symbol, SymbolKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol `{name}` at position {position}")]
    UnknownSymbol { name: String, position: usize },
    #[error("exponent {exponent} at position {position} exceeds the degree cap {cap}")]
    ExponentOverCap {
        exponent: String,
        cap: u32,
        position: usize,
    },
    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("`{name}` at position {position}: accelerations may only appear in Euler-Lagrange residuals")]
    AccelerationInInput { name: String, position: usize },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
    #[error("expression mixes primed and unprimed dynamic symbols")]
    MixedFrame,
}

impl std::str::FromStr for Polynomial {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
