use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `⌊√n⌋` for arbitrary-size `n ≥ 0`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::out_of_range(format!("isqrt of negative {n}")));
    }
    Ok(n.sqrt())
}

fn require_positive(n: &BigInt, what: &str) -> Result<()> {
    if n < &BigInt::one() {
        return Err(Error::out_of_range(format!("{what} needs n >= 1, got {n}")));
    }
    Ok(())
}

/// `⌊nφ⌋ = (n + ⌊√(5n²)⌋) div 2`.
pub fn beatty_phi(n: &BigInt) -> Result<BigInt> {
    require_positive(n, "beatty_phi")?;
    let root = isqrt(&(n * n * 5))?;
    Ok((n + root) >> 1)
}

/// `⌊nφ²⌋ = n + ⌊nφ⌋`.
pub fn beatty_phi2(n: &BigInt) -> Result<BigInt> {
    Ok(n + beatty_phi(n)?)
}

/// `u64` fast path of [`beatty_phi`]; same formula, 128-bit arithmetic.
pub fn beatty_phi_u64(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::out_of_range("beatty_phi needs n >= 1"));
    }
    if n > u64::MAX / 4 {
        return beatty_phi(&BigInt::from(n))?
            .to_u64()
            .ok_or_else(|| Error::out_of_range("beatty value exceeds u64"));
    }
    let n = n as u128;
    Ok(((n + (5 * n * n).sqrt()) / 2) as u64)
}

pub fn beatty_phi2_u64(n: u64) -> Result<u64> {
    let f = beatty_phi_u64(n)?;
    n.checked_add(f)
        .ok_or_else(|| Error::out_of_range("beatty value exceeds u64"))
}

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// Fibonacci numbers, `F_0 = 0`, `F_1 = 1`.
pub fn fib(n: u64) -> BigInt {
    fib_pair(n).0
}

/// Lucas numbers, `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: u64) -> BigInt {
    let (f, g) = fib_pair(n);
    // L_n = 2F_{n+1} − F_n
    g * 2 - f
}

/// Memo of consecutive Fibonacci and Lucas values, filled by the recurrence.
///
/// Owned per use; grows on demand.
#[derive(Debug, Clone)]
pub struct FibTable {
    fib: Vec<BigInt>,
    lucas: Vec<BigInt>,
}

impl Default for FibTable {
    fn default() -> Self {
        FibTable {
            fib: vec![BigInt::zero(), BigInt::one()],
            lucas: vec![BigInt::from(2), BigInt::one()],
        }
    }
}

impl FibTable {
    pub fn new() -> Self {
        Self::default()
    }

    fn grow(&mut self, n: usize) {
        while self.fib.len() <= n {
            let k = self.fib.len();
            let f = &self.fib[k - 1] + &self.fib[k - 2];
            let l = &self.lucas[k - 1] + &self.lucas[k - 2];
            self.fib.push(f);
            self.lucas.push(l);
        }
    }

    pub fn fib(&mut self, n: usize) -> &BigInt {
        self.grow(n);
        &self.fib[n]
    }

    pub fn lucas(&mut self, n: usize) -> &BigInt {
        self.grow(n);
        &self.lucas[n]
    }
}

/// m-step Fibonacci number with `F_1 = 1` and `F_j = 0` for `1 − m ≤ j ≤ 0`.
pub fn fib_m_step(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::out_of_range("fib_m_step needs m >= 1 and n >= 1"));
    }
    // window holds F_{j-m+1} ..= F_j, starting at j = 1
    let mut window: std::collections::VecDeque<BigInt> =
        std::iter::repeat_with(BigInt::zero).take(m - 1).collect();
    window.push_back(BigInt::one());
    let mut sum = BigInt::one();
    for _ in 1..n {
        let next = sum.clone();
        sum += &next;
        sum -= window.pop_front().expect("window has m entries");
        window.push_back(next);
    }
    Ok(window.pop_back().expect("non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&b(0)).unwrap(), b(0));
        assert_eq!(isqrt(&b(5)).unwrap(), b(2));
        assert_eq!(isqrt(&b(80)).unwrap(), b(8));
        assert_eq!(isqrt(&b(81)).unwrap(), b(9));
        assert!(isqrt(&b(-1)).is_err());
        let big = BigInt::from(10).pow(80) + 1;
        let r = isqrt(&big).unwrap();
        assert_eq!(r, BigInt::from(10).pow(40));
    }

    #[test]
    fn beatty_examples() {
        let f1: Vec<_> = [1, 2, 3, 4, 30].iter().map(|&n| beatty_phi(&b(n)).unwrap()).collect();
        assert_eq!(f1, [b(1), b(3), b(4), b(6), b(48)]);
        let f2: Vec<_> = [1, 2, 3, 10, 30].iter().map(|&n| beatty_phi2(&b(n)).unwrap()).collect();
        assert_eq!(f2, [b(2), b(5), b(7), b(26), b(78)]);
        assert!(beatty_phi(&b(0)).is_err());
        assert!(beatty_phi2_u64(0).is_err());
    }

    #[test]
    fn beatty_fast_path_matches() {
        for n in (1..5000u64).chain([u64::MAX / 4 - 1, u64::MAX / 4 + 1, 1 << 40]) {
            assert_eq!(
                BigInt::from(beatty_phi_u64(n).unwrap()),
                beatty_phi(&BigInt::from(n)).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn fib_lucas_examples() {
        assert_eq!(fib(0), b(0));
        assert_eq!(fib(6), b(8));
        assert_eq!(fib(12), b(144));
        assert_eq!(lucas(0), b(2));
        assert_eq!(lucas(1), b(1));
        assert_eq!(lucas(2), b(3));
        assert_eq!(lucas(6), b(18));
        let mut t = FibTable::new();
        for n in 0..300u64 {
            assert_eq!(&fib(n), t.fib(n as usize));
            assert_eq!(&lucas(n), t.lucas(n as usize));
        }
    }

    #[test]
    fn m_step_examples() {
        for n in 1..=30 {
            assert_eq!(fib_m_step(2, n).unwrap(), fib(n as u64));
        }
        let trib: Vec<_> = (1..=6).map(|n| fib_m_step(3, n).unwrap()).collect();
        assert_eq!(trib, [b(1), b(1), b(2), b(4), b(7), b(13)]);
        for n in 1..20 {
            assert_eq!(fib_m_step(1, n).unwrap(), b(1));
        }
        assert!(fib_m_step(0, 3).is_err());
        assert!(fib_m_step(2, 0).is_err());
    }

    #[test]
    fn beatty_partition_and_difference() {
        let limit = 100_000u64;
        let mut hits = vec![0u8; limit as usize + 1];
        for n in 1.. {
            let f = beatty_phi_u64(n).unwrap();
            if f > limit {
                break;
            }
            hits[f as usize] += 1;
            let g = beatty_phi2_u64(n).unwrap();
            assert_eq!(g - f, n);
            if g <= limit {
                hits[g as usize] += 1;
            }
        }
        assert!(hits[1..].iter().all(|&h| h == 1));
    }
}
