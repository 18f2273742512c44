//! Elements `p + q·√d` of the quadratic field ℚ(√d).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// An exact element `p + q·√d` of ℚ(√d).
///
/// When `d` is a perfect square `s²` the value is stored as the rational
/// `p + q·s` with `q = 0`, so equality is always componentwise. Arithmetic
/// between elements with different `d` is an error (the `try_*` methods) or
/// a panic (the operator impls).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd<T: IntScalar> {
    p: Ratio<T>,
    q: Ratio<T>,
    d: T,
}

impl<T: IntScalar> QuadSurd<T> {
    pub fn new(p: Ratio<T>, q: Ratio<T>, d: T) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::InvalidParameter {
                name: "d",
                value: d.to_big().try_into().unwrap_or(i128::MIN),
                reason: "discriminant must be positive",
            });
        }
        Ok(Self::canonical(p, q, d))
    }

    fn canonical(p: Ratio<T>, q: Ratio<T>, d: T) -> Self {
        let s = d.sqrt();
        if s.clone() * s.clone() == d {
            let p = p + q * Ratio::from_integer(s);
            Self {
                p,
                q: Ratio::zero(),
                d,
            }
        } else {
            Self { p, q, d }
        }
    }

    /// The rational `r` viewed as an element of ℚ(√d).
    pub fn from_rational(r: Ratio<T>, d: T) -> Result<Self> {
        Self::new(r, Ratio::zero(), d)
    }

    pub fn from_integer(v: T, d: T) -> Result<Self> {
        Self::from_rational(Ratio::from_integer(v), d)
    }

    /// `√d` itself.
    pub fn sqrt_d(d: T) -> Result<Self> {
        Self::new(Ratio::zero(), Ratio::one(), d)
    }

    pub fn zero(d: T) -> Result<Self> {
        Self::from_rational(Ratio::zero(), d)
    }

    pub fn one(d: T) -> Result<Self> {
        Self::from_rational(Ratio::one(), d)
    }

    pub fn rational_part(&self) -> &Ratio<T> {
        &self.p
    }

    pub fn surd_part(&self) -> &Ratio<T> {
        &self.q
    }

    pub fn discriminant(&self) -> &T {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Returns the value as an integer if it has no surd part and an
    /// integral rational part.
    pub fn to_integer(&self) -> Option<T> {
        (self.q.is_zero() && self.p.is_integer()).then(|| self.p.to_integer())
    }

    /// Galois conjugate `p − q·√d`.
    pub fn conj(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// Field norm `p² − d·q²`.
    pub fn norm(&self) -> Ratio<T> {
        self.p.clone() * self.p.clone()
            - Ratio::from_integer(self.d.clone()) * self.q.clone() * self.q.clone()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::DiscriminantMismatch {
                left: self.d.to_string(),
                right: other.d.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&-other.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x / y = x·ȳ / N(y); N(y) ≠ 0 for y ≠ 0 because a perfect-square d
        // always has q = 0.
        let norm = other.norm();
        let num = self.mul_unchecked(&other.conj());
        Ok(Self::canonical(num.p / norm.clone(), num.q / norm, num.d))
    }

    pub fn scale(&self, r: &Ratio<T>) -> Self {
        Self {
            p: self.p.clone() * r.clone(),
            q: self.q.clone() * r.clone(),
            d: self.d.clone(),
        }
    }

    /// `self^e` by binary exponentiation.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self {
            p: Ratio::one(),
            q: Ratio::zero(),
            d: self.d.clone(),
        };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        Self {
            p: self.p.clone() + other.p.clone(),
            q: self.q.clone() + other.q.clone(),
            d: self.d.clone(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = Ratio::from_integer(self.d.clone());
        Self {
            p: self.p.clone() * other.p.clone() + self.q.clone() * other.q.clone() * d,
            q: self.p.clone() * other.q.clone() + self.q.clone() * other.p.clone(),
            d: self.d.clone(),
        }
    }
}

/// The characteristic roots `(1 + √(1+k), 1 − √(1+k))` of `r² − 2r − k = 0`.
pub fn quad_roots<T: IntScalar>(k: u64) -> Result<(QuadSurd<T>, QuadSurd<T>)> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            name: "k",
            value: 0,
            reason: "k must be a positive integer",
        });
    }
    let d = T::from_u64(1) + T::from_u64(k);
    let one = QuadSurd::one(d.clone())?;
    let root = QuadSurd::sqrt_d(d)?;
    Ok((&one + &root, &one - &root))
}

impl<T: IntScalar> Neg for QuadSurd<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: IntScalar> $trait<&QuadSurd<T>> for &QuadSurd<T> {
            type Output = QuadSurd<T>;

            fn $method(self, rhs: &QuadSurd<T>) -> QuadSurd<T> {
                self.$checked(rhs)
                    .expect("operands from different quadratic fields")
            }
        }

        impl<T: IntScalar> $trait for QuadSurd<T> {
            type Output = QuadSurd<T>;

            fn $method(self, rhs: QuadSurd<T>) -> QuadSurd<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

fn fmt_ratio<T: IntScalar>(r: &Ratio<T>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

impl<T: IntScalar> fmt::Display for QuadSurd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        let surd = |q: &Ratio<T>| {
            if q.is_one() {
                format!("√{}", self.d)
            } else {
                format!("{}√{}", fmt_ratio(q), self.d)
            }
        };
        if self.p.is_zero() {
            if self.q.is_negative() {
                write!(f, "-{}", surd(&-self.q.clone()))
            } else {
                write!(f, "{}", surd(&self.q))
            }
        } else if self.q.is_negative() {
            write!(f, "{} - {}", self.p, surd(&-self.q.clone()))
        } else {
            write!(f, "{} + {}", self.p, surd(&self.q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type Q = QuadSurd<BigInt>;

    fn r(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    fn q(p: i64, s: i64, d: i64) -> Q {
        Q::new(r(p, 1), r(s, 1), BigInt::from(d)).unwrap()
    }

    #[test]
    fn roots_k1() {
        let (r1, r2) = quad_roots::<BigInt>(1).unwrap();
        assert_eq!(r1, q(1, 1, 2));
        assert_eq!(r2, q(1, -1, 2));
        assert_eq!(&r1 * &r2, q(-1, 0, 2));
        assert_eq!(&r1 - &r2, q(0, 2, 2));
    }

    #[test]
    fn roots_fold_perfect_squares() {
        let (r1, r2) = quad_roots::<BigInt>(3).unwrap();
        assert_eq!(r1.to_integer(), Some(BigInt::from(3)));
        assert_eq!(r2.to_integer(), Some(BigInt::from(-1)));
        assert_eq!((&r1 * &r2).to_integer(), Some(BigInt::from(-3)));

        let (r1, r2) = quad_roots::<BigInt>(8).unwrap();
        assert_eq!(r1.to_integer(), Some(BigInt::from(4)));
        assert_eq!(r2.to_integer(), Some(BigInt::from(-2)));
        assert_eq!((&r1 * &r2).to_integer(), Some(BigInt::from(-8)));
        // r1 - r2 is the rational 2s when d = s²
        assert_eq!((&r1 - &r2).to_integer(), Some(BigInt::from(6)));
    }

    #[test]
    fn roots_reject_zero() {
        assert!(quad_roots::<BigInt>(0).is_err());
    }

    #[test]
    fn roots_sum_and_product() {
        for k in 1..=20u64 {
            let (r1, r2) = quad_roots::<BigInt>(k).unwrap();
            assert_eq!((&r1 + &r2).to_integer(), Some(BigInt::from(2)));
            assert_eq!((&r1 * &r2).to_integer(), Some(-BigInt::from(k)));
        }
    }

    #[test]
    fn conjugate_arithmetic() {
        assert_eq!(q(1, 1, 2) * q(1, -1, 2), q(-1, 0, 2));
        assert_eq!(q(1, 1, 2) + q(1, -1, 2), q(2, 0, 2));
        // (1+√2)² expands to 1 + 2√2 + 2
        assert_eq!(q(1, 1, 2) * q(1, 1, 2), q(3, 2, 2));
    }

    #[test]
    fn powers() {
        let x = q(1, 1, 2);
        assert_eq!(x.pow(0), q(1, 0, 2));
        // (3+2√2)(1+√2) = 3 + 3√2 + 2√2 + 4
        assert_eq!(x.pow(3), q(7, 5, 2));
        // (1−√2)² = 1 − 2√2 + 2
        assert_eq!(q(1, -1, 2).pow(2), q(3, -2, 2));
    }

    #[test]
    fn division() {
        let x = q(7, 5, 2);
        let y = q(1, 1, 2);
        assert_eq!(x.try_div(&y).unwrap(), q(3, 2, 2));
        assert_eq!(q(1, 0, 2).try_div(&y).unwrap(), q(-1, 1, 2));
        assert_eq!(x.try_div(&q(0, 0, 2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields() {
        let x = q(1, 1, 2);
        let y = q(1, 1, 3);
        assert!(matches!(
            x.try_add(&y),
            Err(Error::DiscriminantMismatch { .. })
        ));
        assert!(x.try_mul(&y).is_err());
        assert!(x.try_div(&y).is_err());
    }

    #[test]
    fn rejects_nonpositive_discriminant() {
        assert!(Q::new(r(1, 1), r(1, 1), BigInt::from(0)).is_err());
        assert!(Q::new(r(1, 1), r(1, 1), BigInt::from(-2)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(q(3, 2, 2).to_string(), "3 + 2√2");
        assert_eq!(q(3, -2, 2).to_string(), "3 - 2√2");
        assert_eq!(q(0, 1, 5).to_string(), "√5");
        assert_eq!(q(0, -1, 5).to_string(), "-√5");
        assert_eq!(q(4, 1, 9).to_string(), "7");
        let half = Q::new(r(1, 2), r(-1, 2), BigInt::from(2)).unwrap();
        assert_eq!(half.to_string(), "1/2 - (1/2)√2");
    }

    #[test]
    fn works_over_machine_integers() {
        let (r1, r2) = quad_roots::<i64>(1).unwrap();
        assert_eq!((r1.pow(3) + r2.pow(3)).to_integer(), Some(14));
    }

    fn arb_quad(d: i64) -> impl Strategy<Value = Q> {
        (-50i64..50, 1i64..8, -50i64..50, 1i64..8)
            .prop_map(move |(a, b, c, e)| Q::new(r(a, b), r(c, e), BigInt::from(d)).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Q, Q, Q)> {
        (2i64..30).prop_flat_map(|d| (arb_quad(d), arb_quad(d), arb_quad(d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 256, rng_seed: proptest::test_runner::RngSeed::Fixed(0x6b70), ..ProptestConfig::default() })]

        #[test]
        fn field_axioms((x, y, z) in arb_triple()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !y.is_zero() {
                prop_assert_eq!(&x.try_div(&y).unwrap() * &y, x.clone());
            }
        }

        #[test]
        fn pow_adds_exponents((x, _, _) in arb_triple(), a in 0u64..=64, b in 0u64..=64) {
            prop_assert_eq!(x.pow(a + b), &x.pow(a) * &x.pow(b));
        }

        #[test]
        fn perfect_square_discriminant_is_rational(s in 1i64..40, a in -20i64..20, c in -20i64..20) {
            let x = Q::new(r(a, 1), r(c, 1), BigInt::from(s * s)).unwrap();
            prop_assert!(x.is_rational());
            prop_assert_eq!(x.to_integer(), Some(BigInt::from(a + c * s)));
        }

        #[test]
        fn rationals_stay_reduced((x, y, _) in arb_triple()) {
            let prod = &x * &y;
            for part in [prod.rational_part(), prod.surd_part()] {
                prop_assert!(part.denom().is_positive());
                prop_assert!(num_integer::Integer::gcd(part.numer(), part.denom()).is_one());
            }
        }
    }
}
