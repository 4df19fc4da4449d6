//! Flagged skew Schur polynomials and their specialization at roots of
//! unity.
//!
//! Substituting the `tn` variables by `n` geometric blocks
//! `y_i, ωy_i, ..., ω^{t−1}y_i` sends a flagged skew Schur polynomial with
//! flags in `tℤ` to a signed product of flagged skew Schur polynomials
//! indexed by the t-quotients. The crate computes both sides independently:
//! the left through the flagged Jacobi–Trudi determinant and an exact
//! substitution over `ℤ[ω]`, the right through beta numbers, cores and
//! quotients. Tableau enumeration, Demazure operators and t-Dyck paths
//! provide further independent routes.

pub mod demazure;
pub mod dyckpaths;
pub mod error;
pub mod partitions;
pub mod polyring;
pub mod schur;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Flag, Partition, SkewShape, Twist};
pub use polyring::{CycPolynomial, IntPolynomial};
