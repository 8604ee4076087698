//! Exact arithmetic substrate: rationals, dense rational matrices, and an
//! exact simplex method for linear programs and strict feasibility.

mod lp;
mod matrix;
mod rational;

pub use lp::{
    max_pivots, maximize, strict_feasible, LinearProgram, LpOutcome, StrictFeasibilityProblem,
};
pub use matrix::{RationalMatrix, Rref};
pub use rational::{
    denominator_lcm, format_rational, int, limit_denominator, parse_rational, ratio, Rational,
};
