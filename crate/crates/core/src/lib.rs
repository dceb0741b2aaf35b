//! Exact computations around BC-type interpolation polynomials, Jack
//! polynomials, quadratic Capelli eigenvalues and the supporting
//! combinatorics (partitions, Littlewood-Richardson coefficients) and
//! Weyl-algebra operator identities.
//!
//! Every value is an exact rational; there is no floating point anywhere.

pub mod capelli;
pub mod error;
pub mod exactalg;
pub mod jack;
pub mod okounkov;
pub mod partitions;
pub mod symfunc;
pub mod weyl;

pub use error::{Error, Result};
pub use exactalg::{MultiPoly, Rational};
pub use partitions::Partition;
