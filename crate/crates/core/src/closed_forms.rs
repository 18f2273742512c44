//! Non-recursive formulas: binomial sums for `P` and `G`, polynomial-in-`k`
//! terms, and the Toeplitz eigenvalue product for `P_n(k)`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{FromPrimitive, NumCast, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact_arith::KPolynomial;
use crate::scalar::{FloatScalar, IntScalar};
use crate::sequences::{check_k, term, SeqKind, SeqParams};

/// Binomial coefficient, zero outside `0 ≤ r ≤ n`. In particular
/// `binom(-1, 0) = 0`, which the double-sum formula relies on.
pub fn binom<T: IntScalar>(n: i64, r: i64) -> T {
    if n < 0 || r < 0 || r > n {
        return T::zero();
    }
    let r = r.min(n - r);
    let mut acc = T::one();
    for i in 1..=r {
        acc = acc * T::from_u64((n - r + i) as u64) / T::from_u64(i as u64);
    }
    acc
}

/// `Σ_{i=0}^{⌊n/2⌋} C(n−i, i)·kⁱ·2^{n−2i} = P_{k,n+1}`, stated for `n ≥ 2`.
pub fn pell_binomial<T: IntScalar>(k: u64, n: u64) -> Result<T> {
    check_k(k)?;
    if n < 2 {
        return Err(Error::IndexOutOfDomain {
            op: "pell_binomial",
            index: n,
            reason: "formula is stated for n >= 2",
        });
    }
    let k = T::from_u64(k);
    let two = T::from_u64(2);
    let mut sum = T::zero();
    for i in 0..=n / 2 {
        let c: T = binom((n - i) as i64, i as i64);
        sum = sum
            + c * num_traits::pow(k.clone(), i as usize)
                * num_traits::pow(two.clone(), (n - 2 * i) as usize);
    }
    Ok(sum)
}

/// Double-sum closed form for `G_{k,n+1}`, `n ≥ 1`.
///
/// With `n = 2m` the summand is
/// `C(m−2+i+j, m−i)·a^{1−j}·k^{m+1−i−j}·2^{2i+j−2}·(ak+2a)^j`; with
/// `n = 2m−1` the binomial top is `m−3+i+j` and the power of two
/// `2i+j−3`. Terms whose binomial vanishes are skipped, which is what keeps
/// the `2^{−1}` at `i = 1, j = 0` of the odd branch out of the sum.
pub fn gen_double_sum<T: IntScalar>(params: &SeqParams, n: u64) -> Result<T> {
    if n == 0 {
        return Err(Error::IndexOutOfDomain {
            op: "gen_double_sum",
            index: 0,
            reason: "formula covers G_(k,n+1) for n >= 1 only",
        });
    }
    let (m, offset) = if n.is_multiple_of(2) {
        (n / 2, 2)
    } else {
        (n.div_ceil(2), 3)
    };
    let (m, offset) = (m as i64, offset as i64);
    let a = T::from_u64(params.a());
    let k = T::from_u64(params.k());
    let first_entry = a.clone() * k.clone() + a.clone() + a.clone();
    let mut sum = T::zero();
    for i in 1..=m {
        for j in 0..=1i64 {
            let c: T = binom(m - offset + i + j, m - i);
            if c.is_zero() {
                continue;
            }
            let two_exp = 2 * i + j - offset;
            if two_exp < 0 {
                return Err(Error::Invariant(format!(
                    "gen_double_sum: nonzero term with 2^{two_exp} at m={m}, i={i}, j={j}"
                )));
            }
            let mut t = c
                * num_traits::pow(k.clone(), (m + 1 - i - j) as usize)
                * num_traits::pow(T::from_u64(2), two_exp as usize);
            t = if j == 0 {
                t * a.clone()
            } else {
                t * first_entry.clone()
            };
            sum = sum + t;
        }
    }
    Ok(sum)
}

/// The n-th term as a polynomial in `k`. For `GenPell` the result is the
/// cofactor of the overall factor `a`.
pub fn symbolic_term<T: IntScalar>(kind: SeqKind, n: u64) -> Result<KPolynomial<T>> {
    let (mut prev, mut cur) = match kind {
        SeqKind::Pell => (KPolynomial::zero(), KPolynomial::constant(T::one())),
        SeqKind::GenPell => (
            KPolynomial::constant(T::one()),
            KPolynomial::constant(T::one()),
        ),
        other => {
            return Err(Error::UnsupportedKind {
                op: "symbolic_term",
                kind: other.symbol(),
            })
        }
    };
    if n == 0 {
        return Ok(prev);
    }
    let two = T::from_u64(2);
    for _ in 1..n {
        let next = &cur.scale(&two) + &prev.mul_k();
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Product of the eigenvalues of `P_n(k)` compared against `P_{k,n+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport<F = f64> {
    pub k: u64,
    pub n: u64,
    pub product: Complex<F>,
    /// Real part of `product` rounded to the nearest integer.
    pub rounded: BigInt,
    pub exact: BigInt,
    /// `|product − exact|` in the complex plane.
    pub abs_residual: F,
    pub used_corrected_formula: bool,
}

impl<F: FloatScalar> EigenReport<F> {
    pub fn relative_residual(&self) -> F {
        let exact = self
            .exact
            .to_f64()
            .and_then(<F as NumCast>::from)
            .unwrap_or_else(F::infinity);
        self.abs_residual / exact.abs()
    }

    pub fn rounding_matches(&self) -> bool {
        self.rounded == self.exact
    }
}

/// Eigenvalues `λ_r = 2 + c·i·√k·cos(rπ/(n+1))`, `r = 1..=n`, where `c = 2`
/// from the tridiagonal Toeplitz eigenvalue theorem (`2√(bc)` with `b = k`,
/// `c = −1`), or `c = 1` when `verbatim` is set. Cosines are mirrored so
/// conjugate pairs are exact and the middle eigenvalue of an odd `n` is
/// exactly `2`.
pub fn eigenvalues<F: FloatScalar>(k: u64, n: u64, verbatim: bool) -> Result<Vec<Complex<F>>> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::IndexOutOfDomain {
            op: "eigenvalues",
            index: 0,
            reason: "matrix dimension must be >= 1",
        });
    }
    let cast = |v: u64| <F as NumCast>::from(v).expect("float conversion");
    let two = cast(2);
    let scale = if verbatim { F::one() } else { two } * cast(k).sqrt();
    let m = n + 1;
    Ok((1..=n)
        .map(|r| {
            let cos = if 2 * r == m {
                F::zero()
            } else if 2 * r < m {
                (cast(r) * F::PI() / cast(m)).cos()
            } else {
                -(cast(m - r) * F::PI() / cast(m)).cos()
            };
            Complex::new(two, scale * cos)
        })
        .collect())
}

pub fn eigen_product<F: FloatScalar>(k: u64, n: u64, verbatim: bool) -> Result<EigenReport<F>> {
    let product = eigenvalues::<F>(k, n, verbatim)?
        .into_iter()
        .fold(Complex::new(F::one(), F::zero()), |acc, l| acc * l);
    if !product.re.is_finite() || !product.im.is_finite() {
        return Err(Error::Invariant(format!(
            "eigenvalue product overflowed at k={k}, n={n}"
        )));
    }
    let rounded = product
        .re
        .round()
        .to_f64()
        .and_then(BigInt::from_f64)
        .ok_or_else(|| Error::Invariant("eigenvalue product not representable".into()))?;
    let exact: BigInt = term(SeqKind::Pell, &SeqParams::with_k(k)?, n + 1)?;
    let exact_f = exact
        .to_f64()
        .and_then(<F as NumCast>::from)
        .unwrap_or_else(F::infinity);
    let abs_residual = (product - Complex::new(exact_f, F::zero())).norm();
    Ok(EigenReport {
        k,
        n,
        product,
        rounded,
        exact,
        abs_residual,
        used_corrected_formula: !verbatim,
    })
}
