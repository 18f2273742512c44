//! Exact arithmetic kernel: reduced rationals, ℚ(√d) elements and
//! polynomials in `k`.
//!
//! Rationals are `num_rational::Ratio`, which keeps every value reduced with
//! a positive denominator.

mod poly;
mod quad;

pub use num_rational::Ratio;
pub use poly::KPolynomial;
pub use quad::{quad_roots, QuadSurd};
