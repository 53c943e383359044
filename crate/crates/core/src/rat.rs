//! Exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Decimal notation is rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected an exact rational p/q, got `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Denominator as a machine integer, for ramification bookkeeping.
pub(crate) fn small_denom(r: &Rat) -> Result<u64> {
    r.denom()
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("denominator of {r} too large")))
}

/// `r·n` as an `i64`, provided it is integral.
pub(crate) fn scaled_to_i64(r: &Rat, n: u64) -> Result<i64> {
    let v = r * Rat::from_integer(BigInt::from(n));
    if !v.is_integer() {
        return Err(Error::OutOfRange(format!("{r}·{n} is not integral")));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::OutOfRange(format!("{r}·{n} too large")))
}

pub(crate) fn ceil_to_i64(r: &Rat) -> i64 {
    r.ceil().to_integer().to_i64().unwrap_or(i64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("13/5").unwrap(), rat(13, 5));
        assert_eq!(parse_rat("-2").unwrap(), int(-2));
        assert_eq!(parse_rat("4/2").unwrap(), int(2));
        assert!(parse_rat("0.2").is_err());
        assert!(parse_rat("1/0").is_err());
        assert_eq!(format_rat(&rat(-7, 14)), "-1/2");
        assert_eq!(format_rat(&int(60)), "60");
    }
}
