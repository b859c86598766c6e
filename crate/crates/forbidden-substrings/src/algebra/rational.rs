//! Helpers around arbitrary-precision rational scalars.
//!
//! The scalar type is `num_rational::BigRational`, which keeps values
//! gcd-reduced with a positive denominator. Everything downstream relies on
//! that canonical form for structural equality.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Parse `"p/q"` or `"p"` with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let body = s.trim();
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {body:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {body:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {body:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Render `x` in plain decimal with `digits` significant digits.
///
/// Rounding is half away from zero; the computation never goes through
/// floating point, so the output is deterministic across platforms.
pub fn decimal_string(x: &BigRational, digits: u32) -> String {
    assert!(digits > 0);
    if x.is_zero() {
        return "0".to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let a = x.abs();

    // Decimal exponent e with 10^e <= a < 10^{e+1}.
    let ten = BigInt::from(10);
    let mut e: i64 = 0;
    let mut lo = a.numer().clone(); // compare a against powers of ten via lo/hi
    let mut hi = a.denom().clone();
    if lo >= hi {
        while lo >= &hi * &ten {
            hi *= &ten;
            e += 1;
        }
    } else {
        while lo < hi {
            lo *= &ten;
            e -= 1;
        }
    }

    // Scale so that round(a * 10^{digits-1-e}) has exactly `digits` digits.
    let shift = digits as i64 - 1 - e;
    let (mut n2, mut d2) = (a.numer().clone(), a.denom().clone());
    if shift >= 0 {
        n2 *= ten.pow(shift as u32);
    } else {
        d2 *= ten.pow((-shift) as u32);
    }
    let mut scaled = (BigInt::from(2) * n2 + &d2) / (BigInt::from(2) * d2);
    if scaled == ten.pow(digits) {
        // Rounding carried into an extra digit (e.g. 0.999... -> 1.00...).
        scaled = ten.pow(digits - 1);
        e += 1;
    }
    let ds = scaled.to_string();
    debug_assert_eq!(ds.len(), digits as usize);

    let point = e + 1; // digits before the decimal point
    if point >= digits as i64 {
        let zeros = (point - digits as i64).to_usize().unwrap();
        format!("{sign}{ds}{}", "0".repeat(zeros))
    } else if point > 0 {
        let (int_part, frac_part) = ds.split_at(point as usize);
        format!("{sign}{int_part}.{frac_part}")
    } else {
        let zeros = (-point).to_usize().unwrap();
        format!("{sign}0.{}{ds}", "0".repeat(zeros))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 7 / 36 ").unwrap(), ratio(7, 36));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(4, 2).to_string(), "2");
        assert_eq!(ratio(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&ratio(7, 36), 12), "0.194444444444");
        assert_eq!(decimal_string(&ratio(2, 7), 12), "0.285714285714");
        assert_eq!(decimal_string(&rat(1), 12), "1.00000000000");
        assert_eq!(decimal_string(&rat(0), 12), "0");
        assert_eq!(decimal_string(&ratio(-1, 8), 4), "-0.1250");
        assert_eq!(decimal_string(&ratio(999999, 1000), 3), "1000");
        assert_eq!(decimal_string(&rat(123456), 3), "123000");
    }

    proptest::proptest! {
        /// Exactness: (a/b + c/d) * b * d == a*d + c*b identically.
        #[test]
        fn addition_is_exact(a in -999i64..=999, b in 1i64..=999,
                             c in -999i64..=999, d in 1i64..=999) {
            let lhs = (ratio(a, b) + ratio(c, d)) * rat(b) * rat(d);
            proptest::prop_assert_eq!(lhs, rat(a * d + c * b));
        }
    }
}
