//! Involution Schubert polynomials, involution Stanley symmetric functions and their
//! expansions into Schur P- and Q-functions.
//!
//! Computations are exact: coefficients are arbitrary-precision integers.

pub mod error;
pub mod insertion;
pub mod involution;
pub mod partition;
pub mod perm;
pub mod pfaffian;
pub mod poly;
pub mod schubert;
pub mod symfunc;
pub mod transition;
pub mod vexillary;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use involution::Involution;
pub use partition::{Partition, StrictPartition};
pub use perm::Permutation;
pub use poly::{Coefficient, Monomial, OpKind, Polynomial};
pub use symfunc::{Basis, SymFunExpansion, TruncatedSymFun};

/// Polynomials with integer coefficients; the ring all Schubert computations live in.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;

/// Polynomials with rational coefficients.
pub type RatPolynomial = Polynomial<num_rational::BigRational>;

/// Integer expansions in a symmetric function basis.
pub type Expansion = SymFunExpansion<num_bigint::BigInt>;
