//! Exact arithmetic: integers, Laurent polynomials and rational functions.

mod gcd;
mod int;
mod parse;
mod poly;
mod ratfunc;
mod render;

pub use gcd::poly_gcd;
pub use int::Int;
pub use parse::{parse_poly, parse_ratfunc};
pub use poly::{Exps, LaurentPoly, Term, Var, VariableContext, MAX_T, MOD_P, SLOTS};
pub use ratfunc::RatFunc;
pub use render::Naming;
