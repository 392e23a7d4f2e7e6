//! Exact scalars and the small amount of integer combinatorics the rest of the
//! crate needs.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used everywhere in the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or `p`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::ParseRational(s.to_string()));
    }
    let r = Q::from_str(t).map_err(|_| Error::ParseRational(s.to_string()))?;
    Ok(r)
}

/// Renders as `p/q`, or `p` when integral.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: u32) -> Q {
    Q::from_integer(factorial(n))
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> Q {
    if e.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Generalized binomial coefficient `x(x-1)...(x-k+1)/k!` for rational `x`.
pub fn binomial_q(x: &Q, k: u32) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc *= x - q(i as i64);
    }
    acc / factorial_q(k)
}

/// Falling factorial `n(n-1)...(n-k+1)` for a (possibly negative) integer `n`.
pub fn falling(n: i64, k: u32) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Integer value of `x` when it is a nonnegative integer.
pub fn as_nonneg_int(x: &Q) -> Option<u64> {
    if x.is_integer() && !x.is_negative() {
        x.numer().to_string().parse().ok()
    } else {
        None
    }
}

pub fn as_int(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_string().parse().ok()
    } else {
        None
    }
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("3/2").unwrap(), qf(3, 2));
        assert_eq!(parse_q("-4").unwrap(), q(-4));
        assert_eq!(parse_q(" 6/4 ").unwrap(), qf(3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
        assert!(parse_q("").is_err());
        assert_eq!(fmt_q(&qf(-2, 3)), "-2/3");
        assert_eq!(fmt_q(&q(5)), "5");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_q(&q(5), 2), q(10));
        assert_eq!(binomial_q(&q(2), 3), q(0));
        assert_eq!(binomial_q(&qf(1, 2), 2), qf(-1, 8));
        assert_eq!(binomial_q(&q(-1), 3), q(-1));
        assert_eq!(falling(-2, 2), BigInt::from(6));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn signs() {
        assert_eq!(sign(-3), q(-1));
        assert_eq!(sign(4), q(1));
    }
}
