//! Exact rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type RationalNumber = BigRational;

pub fn rat(num: i64, den: i64) -> RationalNumber {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> RationalNumber {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact integer square root test on a non-negative big integer.
pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// True iff `q` is the square of a rational number.
pub fn is_rational_square(q: &RationalNumber) -> bool {
    if q.is_zero() {
        return true;
    }
    // lowest terms: q = a/b is a square iff a and b both are
    is_square_int(q.numer()) && is_square_int(q.denom())
}

/// Converts an integral rational to `i64`, if it fits.
pub fn to_i64(q: &RationalNumber) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

/// Serializes a rational as its canonical string, `"p/q"` or `"p"`.
pub fn serialize<S: serde::Serializer>(q: &RationalNumber, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}
