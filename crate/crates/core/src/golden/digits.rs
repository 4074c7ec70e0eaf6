use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// First `count` base-`b` digits of `x ∈ [0, 1)`, by iterating `y ↦ {by}`
/// on exact rationals.
pub fn base_b_digits(x: &BigRational, base: u32, count: usize) -> Result<Vec<u32>> {
    if base < 2 {
        return Err(Error::out_of_range(format!("base must be >= 2, got {base}")));
    }
    if x.is_negative() || *x >= BigRational::from_integer(1.into()) {
        return Err(Error::out_of_range(format!("{x} is outside [0, 1)")));
    }
    let b = BigInt::from(base);
    let mut y = x.clone();
    let mut digits = Vec::with_capacity(count);
    for _ in 0..count {
        let by = &y * &b;
        let d = by.floor();
        digits.push(d.to_integer().to_u32().expect("digit below base"));
        y = by - d;
        if y.is_zero() && digits.len() < count {
            digits.resize(count, 0);
            break;
        }
    }
    Ok(digits)
}
