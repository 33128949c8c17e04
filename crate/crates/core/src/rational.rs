//! Exact rational scalars.
//!
//! Every matrix entry in this crate is a [`Rational`]. Decimal input such as
//! `"0.1"` or `2.5e-3` is parsed to the exact fraction it denotes, and
//! `"p/q"` fractions are accepted as well so that any value this crate prints
//! can be read back.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::error::MongeError;

pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `-12`, `3.25`, `1e-3`, `-4.5E+2` or `7/3`.
pub fn parse(text: &str) -> Result<Rational, MongeError> {
    let trimmed = text.trim();
    let bad = || MongeError::InvalidNumber(text.to_string());
    if trimmed.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let n: BigInt = parse_integer(num.trim()).ok_or_else(bad)?;
        let d: BigInt = parse_integer(den.trim()).ok_or_else(bad)?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }

    let (mantissa, exponent) = match trimmed.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = trimmed[pos + 1..].parse().map_err(|_| bad())?;
            (&trimmed[..pos], exp)
        }
        None => (trimmed, 0),
    };
    let (negative, unsigned) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    // Guard against absurd exponents turning into gigantic integers.
    if exponent.unsigned_abs() > 4096 {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Renders a rational as an integer, a terminating decimal, or `p/q`.
pub fn format(value: &Rational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    let denom = value.denom().clone();
    let mut rest = denom.clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut twos = 0usize;
    let mut fives = 0usize;
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return format!("{}/{}", value.numer(), denom);
    }
    let places = twos.max(fives);
    let scaled = value * Rational::from_integer(num::pow(BigInt::from(10), places));
    debug_assert!(scaled.is_integer());
    let digits = scaled.numer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (whole, frac) = digits.split_at(digits.len() - places);
    let sign = if value.is_negative() { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

pub fn min(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse("-2.50").unwrap(), ratio(-5, 2));
        assert_eq!(parse("1e3").unwrap(), int(1000));
        assert_eq!(parse("2.5E-2").unwrap(), ratio(1, 40));
        assert_eq!(parse(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse("7/3").unwrap(), ratio(7, 3));
        assert_eq!(parse("-6/4").unwrap(), ratio(-3, 2));
    }

    #[test]
    fn rejects_garbage() {
        for text in ["", "abc", "1.2.3", "1/0", "--1", "1e", ".", "1/x", "0x10"] {
            assert!(parse(text).is_err(), "{text:?} should not parse");
        }
    }

    #[test]
    fn formats_compactly() {
        assert_eq!(format(&int(-4)), "-4");
        assert_eq!(format(&ratio(1, 8)), "0.125");
        assert_eq!(format(&ratio(-1, 20)), "-0.05");
        assert_eq!(format(&ratio(1, 7)), "1/7");
        assert_eq!(format(&ratio(51, 10)), "5.1");
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(n in -100_000i64..100_000, d in 1i64..5_000) {
            let value = ratio(n, d);
            prop_assert_eq!(parse(&format(&value)).unwrap(), value);
        }
    }
}
