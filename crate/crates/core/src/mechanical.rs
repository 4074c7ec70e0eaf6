//! The Fibonacci word as a coding of the complementary Beatty sequences
//! `⌊nφ⌋` (symbol 0) and `⌊nφ²⌋` (symbol 1), with exact density and
//! discrepancy arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::claims::ClaimResult;
use crate::decimal::rational_to_decimal;
use crate::error::{Error, Result};
use crate::golden::{beatty_phi2_u64, beatty_phi_u64, isqrt, Surd};
use crate::morphism::Morphism;
use crate::words::{Alphabet, Word};

fn require_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::out_of_range(format!("{what} needs n >= 1")))
    } else {
        Ok(())
    }
}

/// Length-`n` prefix built by merging the two Beatty streams.
pub fn mechanical_prefix(n: usize) -> Result<Word> {
    require_positive(n as u64, "mechanical_prefix")?;
    let mut letters = Vec::with_capacity(n);
    let (mut i, mut j) = (1u64, 1u64);
    let (mut next0, mut next1) = (beatty_phi_u64(i)?, beatty_phi2_u64(j)?);
    for pos in 1..=n as u64 {
        if next0 == pos {
            letters.push(0);
            i += 1;
            next0 = beatty_phi_u64(i)?;
        } else if next1 == pos {
            letters.push(1);
            j += 1;
            next1 = beatty_phi2_u64(j)?;
        } else {
            unreachable!("Beatty streams skip position {pos}");
        }
    }
    Ok(Word::from_letters(&Alphabet::binary(), letters).expect("binary letters"))
}

/// Number of 1s among the first `n` symbols: `⌊(n+1)/φ²⌋`.
pub fn count_ones_upto(n: u64) -> Result<u64> {
    require_positive(n, "count_ones_upto")?;
    let x = BigInt::from(n) + 1;
    // (n+1)(3−√5)/2 with s = ⌊√(5x²)⌋ irrational-free: floor = (3x − s − 1) div 2
    let s = isqrt(&(&x * &x * 5))?;
    let numer: BigInt = x * 3 - s - 1;
    let v = numer.div_floor(&BigInt::from(2));
    Ok(v.to_u64().expect("count fits"))
}

/// `count1 − n/φ²` as an exact surd.
pub fn deviation(n: u64, count1: u64) -> Surd {
    let target = Surd::inv_phi_sq().scale(&BigRational::from_integer(n.into()));
    &Surd::integer(count1.into()) - &target
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub n: u64,
    pub count0: u64,
    pub count1: u64,
    /// `n/φ²`
    pub target1: Surd,
    /// `n/φ`
    pub target0: Surd,
    /// `count1 − n/φ²`
    pub deviation1: Surd,
    /// `count0 − n/φ`
    pub deviation0: Surd,
    pub places: u32,
    pub density0_decimal: String,
    pub density1_decimal: String,
    pub deviation1_decimal: String,
}

impl DensityReport {
    pub fn density0(&self) -> BigRational {
        BigRational::new(self.count0.into(), self.n.into())
    }

    pub fn density1(&self) -> BigRational {
        BigRational::new(self.count1.into(), self.n.into())
    }
}

pub fn density_report(n: u64, places: u32) -> Result<DensityReport> {
    let count1 = count_ones_upto(n)?;
    let count0 = n - count1;
    let nq = BigRational::from_integer(n.into());
    let target1 = Surd::inv_phi_sq().scale(&nq);
    let target0 = Surd::inv_phi().scale(&nq);
    let deviation1 = &Surd::integer(count1.into()) - &target1;
    let deviation0 = &Surd::integer(count0.into()) - &target0;
    let density0 = BigRational::new(count0.into(), n.into());
    let density1 = BigRational::new(count1.into(), n.into());
    Ok(DensityReport {
        n,
        count0,
        count1,
        density0_decimal: rational_to_decimal(&density0, places),
        density1_decimal: rational_to_decimal(&density1, places),
        deviation1_decimal: deviation1.to_decimal(places),
        target1,
        target0,
        deviation1,
        deviation0,
        places,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub value: Surd,
    pub attained_at: u64,
}

/// `max_{1≤n≤N} |count1(n) − n/φ²|`, first maximizer on ties.
pub fn max_discrepancy(limit: u64) -> Result<Discrepancy> {
    require_positive(limit, "max_discrepancy")?;
    let word = mechanical_prefix(limit as usize)?;
    let mut count1 = 0u64;
    let mut best: Option<Discrepancy> = None;
    for (i, &l) in word.letters().iter().enumerate() {
        count1 += l as u64;
        let n = i as u64 + 1;
        let d = deviation(n, count1).abs();
        if best.as_ref().is_none_or(|b| d > b.value) {
            best = Some(Discrepancy {
                value: d,
                attained_at: n,
            });
        }
    }
    Ok(best.expect("limit >= 1"))
}

pub fn verify_beatty_partition(limit: u64) -> ClaimResult {
    const ID: &str = "beatty-partition";
    const LOC: &str = "complementary Beatty sequences for φ and φ² partition the positive integers";
    let mut hits = vec![0u8; limit as usize + 1];
    let mut m = 1u64;
    loop {
        let f1 = beatty_phi_u64(m).expect("m >= 1");
        if f1 > limit {
            break;
        }
        hits[f1 as usize] += 1;
        let f2 = beatty_phi2_u64(m).expect("m >= 1");
        if f2 <= limit {
            hits[f2 as usize] += 1;
        }
        m += 1;
    }
    match hits.iter().enumerate().skip(1).find(|(_, &h)| h != 1) {
        None => ClaimResult::verified(
            ID,
            LOC,
            format!("every k in 1..={limit} hit exactly once"),
            json!({ "limit": limit }),
        ),
        Some((k, &h)) => ClaimResult::refuted(
            ID,
            LOC,
            format!("k = {k} hit {h} times"),
            json!({ "limit": limit, "k": k, "hits": h }),
        ),
    }
}

pub fn morphic_mechanical_agree(n: usize) -> ClaimResult {
    const ID: &str = "morphic-mechanical";
    const LOC: &str = "fixed point of 0↦01, 1↦0 equals the mechanical Beatty word";
    let n = n.max(1);
    let morphic = Morphism::fibonacci()
        .fixed_point_prefix('0', n)
        .expect("fibonacci morphism is prolongable on 0");
    let mech = mechanical_prefix(n).expect("n >= 1");
    match morphic
        .letters()
        .iter()
        .zip(mech.letters())
        .position(|(a, b)| a != b)
    {
        None => ClaimResult::verified(
            ID,
            LOC,
            format!("prefixes of length {n} are identical"),
            json!({ "n": n }),
        ),
        Some(i) => ClaimResult::refuted(
            ID,
            LOC,
            format!(
                "first mismatch at index {i}: morphic {} vs mechanical {}",
                morphic.letters()[i],
                mech.letters()[i]
            ),
            json!({ "n": n, "index": i }),
        ),
    }
}
