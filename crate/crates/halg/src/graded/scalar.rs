use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HalgError, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Scalar `±1` from a sign.
pub fn from_sign(s: i32) -> Scalar {
    int(s as i64)
}

/// Multiply by a sign without allocating a new rational for `+1`.
pub fn signed(c: &Scalar, s: i32) -> Scalar {
    if s >= 0 {
        c.clone()
    } else {
        -c.clone()
    }
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || HalgError::Parse(format!("not a rational: {text:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn is_unit_sign(c: &Scalar) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let c = frac(6, -4);
        assert_eq!(c.numer(), &BigInt::from(-3));
        assert_eq!(c.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_format_roundtrip() {
        for t in ["0", "7", "-3/4", "12/5"] {
            assert_eq!(format(&parse(t).unwrap()), t);
        }
        assert_eq!(format(&parse("4/2").unwrap()), "2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
    }
}
