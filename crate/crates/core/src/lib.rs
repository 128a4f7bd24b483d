//! Exact combinatorics and representation theory behind the categorification
//! of `U_q(sl_k)`-modules by (parabolic) category O for `gl_n`: tableaux,
//! weight modules over integer Laurent polynomials, the degenerate affine
//! Hecke algebra acting through Casimir operators, and the Grothendieck-group
//! calculus of Verma classes.

pub mod dahecke;
pub mod error;
pub mod grothendieck;
pub mod laurent;
pub mod linalg;
pub mod qmodules;
pub mod ratfunc;
pub mod report;
pub mod scalar;
pub mod tableaux;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use laurent::LaurentInt;
pub use ratfunc::RatFunc;
pub use scalar::{Field, QScalar, Ring};

/// Integers.
pub type Int = num_bigint::BigInt;
/// Rationals, the fraction field used for classical (`q = 1`) elimination.
pub type Rational = num_rational::BigRational;
/// Sparse matrix over `Z[q, q^-1]`.
pub type LaurentMatrix = linalg::SparseMatrix<LaurentInt>;
/// Sparse integer matrix.
pub type IntMatrix = linalg::SparseMatrix<Int>;

/// Solves `system · x = rhs` over the field of rational functions in `q`.
pub fn ratfunc_solve(system: &[Vec<RatFunc>], rhs: &[RatFunc]) -> Result<Vec<RatFunc>> {
    linalg::solve(&linalg::DenseMatrix::from_rows(system.to_vec()), rhs)
}

/// Nullspace basis of `system` over rational functions in `q`.
pub fn ratfunc_kernel(system: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    linalg::kernel_basis(&linalg::DenseMatrix::from_rows(system.to_vec()))
}
