use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// Unbounded rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats as `num/den`, including integers (`3/1`) and zero (`0/1`).
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = rat(6, -4);
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_to_string(&rat(0, 7)), "0/1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["7/30", "-13/20", "0/1", "5/1"] {
            assert_eq!(rational_to_string(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4").unwrap(), rat_int(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
