use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Parses `p/q`, an integer, or a terminating decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let token = s.trim();
    let err = |reason: &str| Error::Parse {
        token: s.to_string(),
        reason: reason.to_string(),
    };
    if token.is_empty() {
        return Err(err("empty"));
    }
    if let Some((n, d)) = token.split_once('/') {
        let n: BigInt = parse_int(n.trim()).ok_or_else(|| err("bad numerator"))?;
        let d: BigInt = parse_int(d.trim()).ok_or_else(|| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        let (neg, whole) = match whole.strip_prefix('-') {
            Some(w) => (true, w),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let digits_ok = |x: &str| x.chars().all(|c| c.is_ascii_digit());
        if !digits_ok(whole) || !digits_ok(frac) || (whole.is_empty() && frac.is_empty()) {
            return Err(err("malformed decimal"));
        }
        let mantissa: BigInt = format!("{whole}{frac}").parse().map_err(|_| err("malformed decimal"))?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(mantissa, scale);
        return Ok(if neg { -value } else { value });
    }
    parse_int(token)
        .map(Rational::from_integer)
        .ok_or_else(|| err("not a rational number"))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `p/q` or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering. Returns the string and whether it is exact; values
/// with a non-terminating expansion are rounded to `sig_digits` significant digits.
pub fn to_decimal(r: &Rational, sig_digits: usize) -> (String, bool) {
    if r.is_zero() {
        return ("0".to_string(), true);
    }
    let mut den = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut twos = 0usize;
    let mut fives = 0usize;
    while den.is_multiple_of(&two) {
        den /= &two;
        twos += 1;
    }
    while den.is_multiple_of(&five) {
        den /= &five;
        fives += 1;
    }
    let neg = r.is_negative();
    let abs = r.abs();
    if den.is_one() {
        let places = twos.max(fives);
        let scaled = (abs * Rational::from_integer(num_traits::pow(BigInt::from(10), places))).to_integer();
        return (sign_str(neg, &place_point(&scaled.to_string(), places)), true);
    }
    // Position of the leading digit: 10^e <= abs < 10^(e+1).
    let mut e: i64 = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    if pow10(e) > abs {
        e -= 1;
    }
    if pow10(e + 1) <= abs {
        e += 1;
    }
    let places = sig_digits as i64 - 1 - e;
    let scaled = abs * pow10(places);
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let text = if places >= 0 {
        place_point(&rounded.to_string(), places as usize)
    } else {
        format!("{}{}", rounded, "0".repeat((-places) as usize))
    };
    (sign_str(neg, &text), false)
}

fn pow10(e: i64) -> Rational {
    let p = Rational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn place_point(digits: &str, places: usize) -> String {
    if places == 0 {
        return digits.to_string();
    }
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits.to_string()
    };
    let (whole, frac) = padded.split_at(padded.len() - places);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        whole.to_string()
    } else {
        format!("{whole}.{frac}")
    }
}

fn sign_str(neg: bool, s: &str) -> String {
    if neg {
        format!("-{s}")
    } else {
        s.to_string()
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let ceil = lo.ceil();
    if &ceil <= hi {
        return ceil;
    }
    let fl = lo.floor();
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["1/0", "", "abc", "1.2.3", "1/", "--1", "1e5", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&rat(1, 4), 30), ("0.25".into(), true));
        assert_eq!(to_decimal(&int(-3), 30), ("-3".into(), true));
        assert_eq!(to_decimal(&rat(-1, 8), 30), ("-0.125".into(), true));
        let (s, exact) = to_decimal(&rat(1, 3), 30);
        assert!(!exact);
        assert_eq!(s, format!("0.{}", "3".repeat(30)));
        let (s, _) = to_decimal(&rat(200, 3), 5);
        assert_eq!(s, "66.667");
        let (s, _) = to_decimal(&rat(2, 3000), 3);
        assert_eq!(s, "0.000667");
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_between(&rat(1, 2), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(7, 5), &rat(5, 2)), int(2));
    }
}
