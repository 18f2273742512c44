//! Univariate polynomials in the recurrence parameter `k`.

use std::fmt::{self, Write as _};
use std::ops::Add;

use num_traits::Zero;

use crate::scalar::IntScalar;

/// Polynomial in `k` with integer coefficients; `coeffs[i]` is the
/// coefficient of `kⁱ`. The highest stored coefficient is never zero, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPolynomial<T: IntScalar> {
    coeffs: Vec<T>,
}

impl<T: IntScalar> KPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Multiplies by the indeterminate `k`.
    pub fn mul_k(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, k: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * k.clone() + c.clone())
    }

    /// Renders with descending powers, appending `factor` to every term, e.g.
    /// `k^2a + 8ka + 8a` for `factor = "a"`. Unit coefficients are omitted.
    pub fn render_with_factor(&self, factor: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let bare = power > 0 || !factor.is_empty();
            if !(mag.is_one() && bare) {
                write!(out, "{mag}").unwrap();
            }
            match power {
                0 => {}
                1 => out.push('k'),
                _ => write!(out, "k^{power}").unwrap(),
            }
            out.push_str(factor);
        }
        out
    }
}

impl<T: IntScalar> Add for &KPolynomial<T> {
    type Output = KPolynomial<T>;

    fn add(self, rhs: Self) -> KPolynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        KPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: IntScalar> Add for KPolynomial<T> {
    type Output = KPolynomial<T>;

    fn add(self, rhs: Self) -> KPolynomial<T> {
        &self + &rhs
    }
}

impl<T: IntScalar> fmt::Display for KPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with_factor(""))
    }
}
