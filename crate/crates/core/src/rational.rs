//! Exact rational scalars and their canonical text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// `x` as an `i64` when it is an integer that fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// True when `x / modulus` is an integer. `modulus` must be nonzero.
pub fn divisible_by(x: &Q, modulus: &Q) -> bool {
    is_integer(&(x / modulus))
}

/// Canonical serialization: `"p"` for integers, `"p/q"` otherwise.
pub fn format_q(x: &Q) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, d)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(p, d))
        }
        None => BigInt::from_str(s).ok().map(Q::from_integer),
    }
}

/// Floor of a rational as a `BigInt`.
pub fn floor(x: &Q) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn is_positive_integer(x: &Q) -> bool {
    is_integer(x) && x.is_positive()
}
