use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::FibTable;
use crate::error::{Error, Result};
use crate::words::Word;

/// Bits `r_1, r_2, …` with `m = Σ r_i F_{i+1}`; no two adjacent ones and no
/// trailing zero (zero is the empty representation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeckendorfRep {
    bits: Vec<bool>,
}

impl ZeckendorfRep {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if let Some(i) = bits.windows(2).position(|w| w[0] && w[1]) {
            return Err(Error::MalformedZeckendorf(format!(
                "adjacent ones at r_{} and r_{}",
                i + 1,
                i + 2
            )));
        }
        if bits.last() == Some(&false) {
            return Err(Error::MalformedZeckendorf("trailing zero bit".into()));
        }
        Ok(ZeckendorfRep { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// 1-based indices `i` with `r_i = 1`, descending.
    pub fn indices(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn decode(&self) -> BigInt {
        let mut table = FibTable::new();
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| table.fib(i + 2).clone())
            .sum()
    }
}

impl fmt::Display for ZeckendorfRep {
    /// Most significant bit first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return f.write_str("0");
        }
        for &b in self.bits.iter().rev() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Greedy Zeckendorf encoding.
pub fn zeckendorf_encode(m: &BigInt) -> Result<ZeckendorfRep> {
    if m.is_negative() {
        return Err(Error::out_of_range(format!("cannot encode negative {m}")));
    }
    if m.is_zero() {
        return Ok(ZeckendorfRep::default());
    }
    let mut table = FibTable::new();
    // largest i with F_{i+1} <= m
    let mut top = 1;
    while table.fib(top + 2) <= m {
        top += 1;
    }
    let mut bits = vec![false; top];
    let mut rest = m.clone();
    let mut i = top;
    while i >= 1 && !rest.is_zero() {
        let f = table.fib(i + 1);
        if *f <= rest {
            rest -= f;
            bits[i - 1] = true;
            // greedy never picks the neighbour below
            i = i.saturating_sub(2);
        } else {
            i -= 1;
        }
    }
    debug_assert!(rest.is_zero());
    ZeckendorfRep::new(bits)
}

/// Decodes raw bits `r_1, r_2, …`, rejecting adjacent ones.
pub fn zeckendorf_decode(bits: &[bool]) -> Result<BigInt> {
    let mut trimmed = bits.to_vec();
    while trimmed.last() == Some(&false) {
        trimmed.pop();
    }
    Ok(ZeckendorfRep::new(trimmed)?.decode())
}

/// Membership in the order-`m` Fibonacci code: `1^m` itself, or a word whose
/// only occurrence of `1^m` is a suffix.
pub fn fib_code_valid(w: &Word, m: usize) -> Result<bool> {
    if !w.alphabet().is_binary() {
        return Err(Error::NotBinary(w.alphabet().to_string()));
    }
    if m == 0 {
        return Err(Error::out_of_range("Fibonacci code order must be >= 1"));
    }
    let letters = w.letters();
    if letters.len() < m {
        return Ok(false);
    }
    let occurrences = letters
        .windows(m)
        .filter(|win| win.iter().all(|&l| l == 1))
        .count();
    let suffix = letters[letters.len() - m..].iter().all(|&l| l == 1);
    Ok(occurrences == 1 && suffix)
}
