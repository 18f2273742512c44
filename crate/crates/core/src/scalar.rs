//! Scalar traits the generic algorithms are written against.
//!
//! Integer-valued code (sequence terms, cofactor matrices, Bareiss) runs over
//! any [`IntScalar`]; `BigInt` is the default, `i64`/`i128` work for small
//! indices where overflow is not a concern. Field-valued code (Usmani
//! inverses, continuant determinants) runs over any [`FieldScalar`], which
//! covers exact rationals `Ratio<T>` as well as `f32`/`f64`.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{Float, FloatConst, Num, Signed, ToPrimitive};

/// Signed integer type usable as the value type of sequence terms.
pub trait IntScalar:
    Integer + Signed + Roots + Clone + Debug + Display + Send + Sync + 'static
{
    /// Lossless conversion of a parameter. Panics if `v` does not fit.
    fn from_u64(v: u64) -> Self;

    fn from_big(v: &BigInt) -> Option<Self>;

    fn to_big(&self) -> BigInt;
}

impl IntScalar for BigInt {
    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

macro_rules! prim_int_scalar {
    ($($t:ty),*) => {$(
        impl IntScalar for $t {
            fn from_u64(v: u64) -> Self {
                <$t>::try_from(v).expect(concat!("parameter does not fit in ", stringify!($t)))
            }

            fn from_big(v: &BigInt) -> Option<Self> {
                <$t>::try_from(v).ok()
            }

            fn to_big(&self) -> BigInt {
                BigInt::from(*self)
            }
        }
    )*};
}

prim_int_scalar!(i64, i128);

/// Field element type usable for matrix entries.
pub trait FieldScalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync {
    /// Embeds an integer. Panics if the value is not representable at all.
    fn from_big(v: &BigInt) -> Self;

    /// Whether equality on this type is exact (rationals) or approximate (floats).
    fn is_exact() -> bool;
}

impl<T: IntScalar> FieldScalar for Ratio<T> {
    fn from_big(v: &BigInt) -> Self {
        Ratio::from_integer(T::from_big(v).expect("integer out of range for scalar type"))
    }

    fn is_exact() -> bool {
        true
    }
}

macro_rules! float_field_scalar {
    ($($t:ty => $conv:ident),*) => {$(
        impl FieldScalar for $t {
            fn from_big(v: &BigInt) -> Self {
                v.$conv().unwrap_or(<$t>::NAN)
            }

            fn is_exact() -> bool {
                false
            }
        }
    )*};
}

float_field_scalar!(f32 => to_f32, f64 => to_f64);

/// Floating-point type for the eigenvalue product: f32 or f64.
pub trait FloatScalar: Float + FloatConst + Debug + Display + Send + Sync {}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}
