//! Exact arithmetic: arbitrary-precision rational scalars, dense univariate
//! polynomials, rational functions, and linear solving over the
//! rational-function field.

mod linalg;
mod poly;
mod ratfunc;
pub mod rational;

pub use linalg::{determinant, solve_linear};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::{decimal_string, parse_rational, rat, ratio, BigRational};
