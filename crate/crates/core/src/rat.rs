//! Exact rational scalars and their `p/q` string forms.

use crate::error::EisenError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// The scalar type of the whole crate. Arbitrary precision, always reduced.
pub type Rat = BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Render as an exact rational string `p/q` (denominator always kept, so
/// JSON output is schema-stable: `3` prints as `"3/1"`).
pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Render for human-facing text: integers without denominator.
pub fn rat_display(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p`, `p/q`, or `-p/q`.
pub fn parse_rat(s: &str) -> Result<Rat, EisenError> {
    let s = s.trim();
    let mk_err = || EisenError::InvalidArgument(format!("cannot parse rational '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
        let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
        if q.is_zero() {
            return Err(EisenError::InvalidArgument(format!(
                "zero denominator in '{s}'"
            )));
        }
        Ok(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Rat::from_integer(p))
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The integer value of `x`, if it is one.
pub fn as_integer(x: &Rat) -> Option<BigInt> {
    if x.is_integer() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// The `i64` value of `x`, if it is an integer that fits.
pub fn as_i64(x: &Rat) -> Option<i64> {
    use num::ToPrimitive;
    as_integer(x).and_then(|b| b.to_i64())
}

pub fn is_negative(x: &Rat) -> bool {
    x.is_negative()
}
