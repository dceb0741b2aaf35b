//! Exact arithmetic: rationals, sparse multivariate polynomials and
//! fraction-free linear solving.

mod linsys;
mod poly;
mod rational;
mod symmetric;

pub use linsys::{solve_exact, LinearSystem};
pub use poly::{Monomial, MultiPoly, PolyJson, TermJson};
pub use rational::{int, parse_rational, rat, Rational};
pub use symmetric::{even_symmetrize_basis, monomial_symmetric, x_vars};
