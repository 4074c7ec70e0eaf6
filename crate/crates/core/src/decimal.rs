//! Fixed-point decimal rendering from exact values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Renders `scaled / 10^places` with exactly `places` digits after the point.
pub fn format_scaled(scaled: &BigInt, places: u32) -> String {
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let places = places as usize;
    let body = if places == 0 {
        digits
    } else if digits.len() <= places {
        format!("0.{}{}", "0".repeat(places - digits.len()), digits)
    } else {
        let (int, frac) = digits.split_at(digits.len() - places);
        format!("{int}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `r` rounded half-even to `places` decimals.
pub fn rational_to_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let x = r.abs() * BigRational::from_integer(scale);
    let fl = x.floor();
    let rem = &x - &fl;
    let half = BigRational::new(1.into(), 2.into());
    let mut n = fl.to_integer();
    if rem > half || (rem == half && n.is_odd()) {
        n += 1;
    }
    let body = format_scaled(&n, places);
    if r.is_negative() && !r.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rendering() {
        assert_eq!(rational_to_decimal(&q(4, 7), 6), "0.571429");
        assert_eq!(rational_to_decimal(&q(3, 5), 6), "0.600000");
        assert_eq!(rational_to_decimal(&q(5, 13), 6), "0.384615");
        assert_eq!(rational_to_decimal(&q(1, 8), 2), "0.12");
        assert_eq!(rational_to_decimal(&q(3, 8), 2), "0.38");
        assert_eq!(rational_to_decimal(&q(-7, 4), 1), "-1.8");
        assert_eq!(rational_to_decimal(&q(123, 1), 0), "123");
        assert_eq!(format_scaled(&BigInt::from(-5), 3), "-0.005");
    }
}
