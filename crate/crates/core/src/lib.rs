//! Exact arithmetic for the k-Pell family of sequences
//! (`x_n = 2x_{n−1} + k·x_{n−2}`) and their tridiagonal generating matrices.
//!
//! The algorithms are generic over the scalar type (see [`scalar`]); the
//! aliases below fix the exact types used everywhere else in the workspace:
//! arbitrary-precision integers, reduced rationals over them, ℚ(√d)
//! elements and polynomials in `k`.
//!
//! ```
//! use kpell_core::{sequences::{term, SeqKind, SeqParams}, BigInt};
//!
//! let params = SeqParams::new(1, 1).unwrap();
//! let g5: BigInt = term(SeqKind::GenPell, &params, 5).unwrap();
//! assert_eq!(g5, BigInt::from(41));
//! ```

pub mod closed_forms;
pub mod error;
pub mod exact_arith;
pub mod scalar;
pub mod sequences;
pub mod tridiagonal;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;

/// Reduced fraction of big integers with a positive denominator.
pub type Rational = num_rational::Ratio<BigInt>;

/// Element `p + q·√d` of ℚ(√d) with rational `p`, `q`.
pub type QuadNum = exact_arith::QuadSurd<BigInt>;

/// Polynomial in `k` with big-integer coefficients.
pub type KPoly = exact_arith::KPolynomial<BigInt>;

/// Tridiagonal matrix with rational bands.
pub type Tridiag = tridiagonal::Tridiagonal<Rational>;

/// Dense rational matrix (inverses).
pub type DenseMat = tridiagonal::Matrix<Rational>;

/// Dense integer matrix (generating and cofactor matrices).
pub type IntMat = tridiagonal::Matrix<BigInt>;

pub type ThetaPhi = tridiagonal::ThetaPhi<Rational>;

pub type ComplexF = num_complex::Complex<f64>;

pub type EigenReport = closed_forms::EigenReport<f64>;
