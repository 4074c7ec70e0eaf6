use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use super::series::{binet_check, check_telescoping, doubling_identity_check, genfunc_check};
use super::ClaimResult;
use crate::derived::{
    df_density, density_table, fib_word_ab, letter_counts_closed_form, q_word, y_word, Family,
};
use crate::error::{Error, Result};
use crate::freealg::{alpha_identity_check, check_pow_invariance, pow_fib, AlgebraElement};
use crate::golden::{fib, zeckendorf_decode, zeckendorf_encode, Surd};
use crate::mechanical::{
    count_ones_upto, max_discrepancy, mechanical_prefix, morphic_mechanical_agree,
    verify_beatty_partition,
};
use crate::words::{
    count_symbol, factor_complexity, factor_set, ultrametric_distance, Alphabet, Word,
};

/// Sweep bounds for the registry. Every field must be positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Prefix length for partition, agreement, discrepancy and the no-`11` scan.
    pub sweep: u64,
    /// Prefix length for factor complexity and the α-identity.
    pub prefix: usize,
    /// Largest factor length for the complexity count.
    pub complexity_max: usize,
    /// Last row index `m` of the density table.
    pub table_m_max: usize,
    /// Largest word index for length, letter-count and density checks.
    pub word_index_max: usize,
    pub alpha_max: u32,
    pub pow_k_max: usize,
    pub series_k_max: u32,
    pub doubling_n_max: u64,
    pub binet_n_max: u32,
    pub genfunc_n: usize,
    pub zeckendorf_max: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            sweep: 100_000,
            prefix: 10_000,
            complexity_max: 60,
            table_m_max: 13,
            word_index_max: 30,
            alpha_max: 10,
            pow_k_max: 6,
            series_k_max: 6,
            doubling_n_max: 50,
            binet_n_max: 200,
            genfunc_n: 200,
            zeckendorf_max: 100_000,
        }
    }
}

impl Budget {
    /// Every bound zero.
    pub fn empty() -> Self {
        Budget {
            sweep: 0,
            prefix: 0,
            complexity_max: 0,
            table_m_max: 0,
            word_index_max: 0,
            alpha_max: 0,
            pow_k_max: 0,
            series_k_max: 0,
            doubling_n_max: 0,
            binet_n_max: 0,
            genfunc_n: 0,
            zeckendorf_max: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidBudget(msg.to_string()));
        let fields = [
            ("sweep", self.sweep),
            ("prefix", self.prefix as u64),
            ("complexity_max", self.complexity_max as u64),
            ("table_m_max", self.table_m_max as u64),
            ("word_index_max", self.word_index_max as u64),
            ("alpha_max", self.alpha_max as u64),
            ("pow_k_max", self.pow_k_max as u64),
            ("series_k_max", self.series_k_max as u64),
            ("doubling_n_max", self.doubling_n_max),
            ("binet_n_max", self.binet_n_max as u64),
            ("genfunc_n", self.genfunc_n as u64),
            ("zeckendorf_max", self.zeckendorf_max),
        ];
        if let Some((name, _)) = fields.iter().find(|(_, v)| *v == 0) {
            return bad(&format!("{name} must be positive"));
        }
        if self.complexity_max >= self.prefix {
            return bad("complexity_max must be below prefix");
        }
        if self.table_m_max < 3 {
            return bad("table_m_max must be >= 3");
        }
        if self.word_index_max < 2 {
            return bad("word_index_max must be >= 2");
        }
        if self.pow_k_max < 3 {
            return bad("pow_k_max must be >= 3");
        }
        if self.series_k_max < 2 || self.series_k_max > 40 {
            return bad("series_k_max must be in 2..=40");
        }
        if self.doubling_n_max < 2 {
            return bad("doubling_n_max must be >= 2");
        }
        if self.sweep < 13 {
            return bad("sweep must be >= 13");
        }
        Ok(())
    }
}

type Check = fn(&Budget) -> Result<ClaimResult>;

const REGISTRY: &[(&str, Check)] = &[
    ("beatty-partition", |b| Ok(verify_beatty_partition(b.sweep))),
    ("morphic-mechanical", |b| Ok(morphic_mechanical_agree(b.sweep as usize))),
    ("density-limits", density_limits),
    ("prefix-discrepancy", prefix_discrepancy),
    ("factor-complexity", factor_complexity_claim),
    ("no-factor-11", no_factor_11),
    ("length3-one-symbol", length3_one_symbol),
    ("q-densities", q_densities),
    ("table1-values", table1_values),
    ("y-length", y_length),
    ("alpha-identity", alpha_identity_sweep),
    ("pow-invariance", |b| check_pow_invariance(b.pow_k_max)),
    ("pow-value", pow_value),
    ("telescoping", |b| check_telescoping(1, b.series_k_max)),
    ("doubling-fib", |b| Ok(doubling_identity_check(b.doubling_n_max)?.fib)),
    ("doubling-lucas", |b| Ok(doubling_identity_check(b.doubling_n_max)?.lucas)),
    ("binet", |b| binet_check(b.binet_n_max)),
    ("genfunc", |b| genfunc_check(b.genfunc_n)),
    ("ball-nesting", ball_nesting),
    ("letter-counts", letter_counts),
    ("df-convergence", df_convergence),
    ("zeckendorf", zeckendorf_round_trip),
];

/// Claim ids in registry order.
pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|(id, _)| *id).collect()
}

pub fn run_claim(id: &str, budget: &Budget) -> Result<ClaimResult> {
    budget.validate()?;
    let (_, check) = REGISTRY
        .iter()
        .find(|(name, _)| *name == id)
        .ok_or_else(|| Error::out_of_range(format!("unknown claim id {id:?}")))?;
    check(budget)
}

/// Every registered claim, evaluated concurrently and returned in registry order.
pub fn run_all_claims(budget: &Budget) -> Result<Vec<ClaimResult>> {
    budget.validate()?;
    std::thread::scope(|s| {
        let handles: Vec<_> = REGISTRY
            .iter()
            .map(|(_, check)| s.spawn(move || check(budget)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("claim check panicked"))
            .collect()
    })
}

fn density_limits(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "density-limits";
    const LOC: &str = "symbol densities of the Fibonacci word are 1/phi for 0 and 1/phi^2 for 1";
    let mut sample = vec![1u64];
    let mut n = 10u64;
    while n < b.sweep {
        sample.push(n);
        n *= 10;
    }
    sample.push(b.sweep);
    let targets = (Surd::inv_phi(), Surd::inv_phi_sq());
    if &targets.0 + &targets.1 != Surd::one() {
        return Ok(ClaimResult::refuted(ID, LOC, "1/phi + 1/phi^2 != 1", json!({})));
    }
    for &n in &sample {
        let c1 = count_ones_upto(n)?;
        let d1 = Surd::rational(BigRational::new(c1.into(), n.into()));
        let d0 = Surd::rational(BigRational::new((n - c1).into(), n.into()));
        let bound = Surd::rational(BigRational::new(1.into(), n.into()));
        let e0 = (&d0 - &targets.0).abs();
        let e1 = (&d1 - &targets.1).abs();
        if e0 >= bound || e1 >= bound {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("n = {n}: density error {} not below 1/n", e1.to_decimal(9)),
                json!({ "n": n, "count1": c1 }),
            ));
        }
    }
    let last = *sample.last().expect("non-empty");
    let c1 = count_ones_upto(last)?;
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!(
            "|density - limit| < 1/n for n in {sample:?}; density1({last}) = {c1}/{last}"
        ),
        json!({ "sample": sample, "count1": c1 }),
    ))
}

fn prefix_discrepancy(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "prefix-discrepancy";
    const LOC: &str = "prefix count of 1s is n/phi^2 + O(1), checked with constant C = 1";
    let d = max_discrepancy(b.sweep)?;
    let payload = json!({
        "limit": b.sweep,
        "attained_at": d.attained_at,
        "max": d.value.to_string(),
        "max_decimal": d.value.to_decimal(6),
    });
    Ok(if d.value < Surd::one() {
        ClaimResult::verified(
            ID,
            LOC,
            format!(
                "max over n <= {} is {} ~ {} at n = {}, below 1",
                b.sweep,
                d.value,
                d.value.to_decimal(6),
                d.attained_at
            ),
            payload,
        )
    } else {
        ClaimResult::refuted(
            ID,
            LOC,
            format!("deviation {} at n = {} is not below 1", d.value, d.attained_at),
            payload,
        )
    })
}

fn factor_complexity_claim(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "factor-complexity";
    const LOC: &str = "the Fibonacci word is Sturmian: n+1 distinct factors of each length n";
    let w = mechanical_prefix(b.prefix)?;
    for n in 1..=b.complexity_max {
        let p = factor_complexity(&w, n);
        if p != n + 1 {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("length {n}: {p} factors in the length-{} prefix", b.prefix),
                json!({ "n": n, "count": p, "prefix": b.prefix }),
            ));
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("p(n) = n + 1 for 1 <= n <= {} on the length-{} prefix", b.complexity_max, b.prefix),
        json!({ "complexity_max": b.complexity_max, "prefix": b.prefix }),
    ))
}

fn no_factor_11(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "no-factor-11";
    const LOC: &str = "the Fibonacci word contains no factor 11";
    let w = mechanical_prefix(b.sweep as usize)?;
    let hit = w.letters().windows(2).position(|p| p == [1, 1]);
    Ok(match hit {
        None => ClaimResult::verified(
            ID,
            LOC,
            format!("no 11 in the length-{} prefix", b.sweep),
            json!({ "prefix": b.sweep }),
        ),
        Some(i) => ClaimResult::refuted(
            ID,
            LOC,
            format!("11 at position {}", i + 1),
            json!({ "prefix": b.sweep, "position": i + 1 }),
        ),
    })
}

fn length3_one_symbol(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "length3-one-symbol";
    const LOC: &str = "every length-3 factor of the Fibonacci word has exactly one 1 and two 0s";
    let w = mechanical_prefix(b.sweep as usize)?;
    let factors: Vec<String> = factor_set(&w, 3).iter().map(|f| f.to_string()).collect();
    let bad = w
        .letters()
        .windows(3)
        .position(|win| win.iter().filter(|&&l| l == 1).count() != 1);
    Ok(match bad {
        None => ClaimResult::verified(
            ID,
            LOC,
            format!("all length-3 windows of the length-{} prefix hold one 1", b.sweep),
            json!({ "prefix": b.sweep, "factors": factors }),
        ),
        Some(i) => {
            let f = w.factor(i, 3);
            let ones = count_symbol(&f, '1')?;
            ClaimResult::refuted(
                ID,
                LOC,
                format!("factor {f} at position {} has {ones} symbols 1", i + 1),
                json!({
                    "factor": f.to_string(),
                    "position": i + 1,
                    "ones": ones,
                    "length3_factors": factors,
                }),
            )
        }
    })
}

fn q_densities(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "q-densities";
    const LOC: &str = "letter densities of the framed family q_m and of y_m tend to 1/phi and 1/phi^2";
    let m_max = b.word_index_max.max(b.table_m_max);
    for m in 1..=b.word_index_max.min(25) {
        let q = q_word(m)?;
        let scan = (
            BigInt::from(count_symbol(&q, 'a')?),
            BigInt::from(count_symbol(&q, 'b')?),
        );
        if scan != letter_counts_closed_form(Family::Q, m)? {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("letter counts of q_{m} disagree with (F_(m+1)+1, F_m+1)"),
                json!({ "m": m }),
            ));
        }
    }
    let rows = density_table(m_max)?;
    let tol = Surd::from_ratios(1, 1000, 0, 1);
    let mut last_err = Surd::zero();
    for r in rows.iter().filter(|r| r.m >= 13) {
        let err_q = (&Surd::rational(r.dens_a_q.clone()) - &Surd::inv_phi()).abs();
        let err_y = (&Surd::rational(r.dens_a_y.clone()) - &Surd::inv_phi()).abs();
        if err_q >= tol || err_y >= tol {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("m = {}: a-density error not below 1e-3", r.m),
                json!({ "m": r.m }),
            ));
        }
        last_err = err_q;
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!(
            "closed forms match scans; |dens_a - 1/phi| < 1e-3 for 13 <= m <= {m_max} (q_{m_max} error {})",
            last_err.to_decimal(9)
        ),
        json!({ "m_max": m_max }),
    ))
}

/// Printed density table: `m`, `dens_a(Q)`, `dens_b(Q)`, `dens_a(Y)`, `dens_b(Y)`.
pub const PRINTED_DENSITY_TABLE: [(usize, [&str; 4]); 11] = [
    (3, ["0.571429", "0.428571", "0.600000", "0.400000"]),
    (4, ["0.600000", "0.400000", "0.625000", "0.375000"]),
    (5, ["0.600000", "0.400000", "0.615385", "0.384615"]),
    (6, ["0.608696", "0.391304", "0.619048", "0.380952"]),
    (7, ["0.605263", "0.394737", "0.617647", "0.382353"]),
    (8, ["0.606557", "0.393443", "0.618182", "0.381818"]),
    (9, ["0.606061", "0.393939", "0.617978", "0.382022"]),
    (10, ["0.606250", "0.393750", "0.618056", "0.381944"]),
    (11, ["0.606178", "0.393822", "0.618025", "0.381974"]),
    (12, ["0.606206", "0.393794", "0.618037", "0.381963"]),
    (13, ["0.606195", "0.393805", "0.618033", "0.381967"]),
];

const TABLE_COLUMNS: [&str; 4] = ["dens_a_q", "dens_b_q", "dens_a_y", "dens_b_y"];

fn table1_values(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "table1-values";
    const LOC: &str = "printed table of empirical a/b densities for q_m and y_m, m = 3..13";
    let rows = density_table(b.table_m_max.max(13))?;
    let mut mismatches = Vec::new();
    for (m, printed) in PRINTED_DENSITY_TABLE {
        let row = rows.iter().find(|r| r.m == m).expect("table covers 3..=13");
        for (col, (got, want)) in row.cells().iter().zip(printed).enumerate() {
            if *got != want {
                mismatches.push(json!({
                    "m": m,
                    "column": TABLE_COLUMNS[col],
                    "computed": got,
                    "printed": want,
                }));
            }
        }
    }
    let cells = PRINTED_DENSITY_TABLE.len() * 4;
    Ok(match mismatches.first() {
        None => ClaimResult::verified(
            ID,
            LOC,
            format!("all {cells} cells reproduce"),
            json!({ "cells": cells }),
        ),
        Some(first) => ClaimResult::refuted(
            ID,
            LOC,
            format!(
                "{} of {cells} cells differ; first at m = {}, {}: computed {} vs printed {}",
                mismatches.len(),
                first["m"],
                first["column"].as_str().unwrap_or_default(),
                first["computed"].as_str().unwrap_or_default(),
                first["printed"].as_str().unwrap_or_default(),
            ),
            json!({ "cells": cells, "mismatches": mismatches }),
        ),
    })
}

fn y_length(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "y-length";
    const LOC: &str = "the word y_n has length F_{n+2}";
    for n in 0..=b.word_index_max {
        let len = BigInt::from(y_word(n).len());
        if len != fib(n as u64 + 2) {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("|y_{n}| = {len}, F_{} = {}", n + 2, fib(n as u64 + 2)),
                json!({ "n": n }),
            ));
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("|y_n| = F_(n+2) for 0 <= n <= {}", b.word_index_max),
        json!({ "n_max": b.word_index_max }),
    ))
}

fn alpha_identity_sweep(b: &Budget) -> Result<ClaimResult> {
    let w = mechanical_prefix(b.prefix)?;
    for alpha in 1..=b.alpha_max {
        let r = alpha_identity_check(alpha, &w)?;
        if !r.is_verified() {
            return Ok(r);
        }
    }
    let last = alpha_identity_check(b.alpha_max, &w)?;
    Ok(ClaimResult::verified(
        last.id,
        last.location,
        format!("exact equality for 1 <= alpha <= {} on the length-{} prefix", b.alpha_max, b.prefix),
        json!({ "alpha_max": b.alpha_max, "prefix": b.prefix, "last": last.payload }),
    ))
}

/// The constant value printed for `Pow(F_k)`.
const CLAIMED_POW: [&str; 2] = ["aabaa", "abababaabaaba"];

fn pow_value(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "pow-value";
    const LOC: &str = "Pow(F_k) = aabaa + abababaabaaba for every k >= 2";
    let claimed = AlgebraElement::from_words(&Alphabet::ab(), CLAIMED_POW)?;
    for k in 2..=b.pow_k_max {
        let p = pow_fib(k)?;
        if let Some((w, got, want)) = p.first_difference(&claimed) {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!(
                    "Pow(F_{k}) = {p}; coefficient of {w} is {got}, claimed {want}"
                ),
                json!({
                    "k": k,
                    "computed": p.to_string(),
                    "claimed": claimed.to_string(),
                    "monomial": w.to_string(),
                    "coefficient_computed": got.to_string(),
                    "coefficient_claimed": want.to_string(),
                }),
            ));
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("Pow(F_k) = {claimed} for 2 <= k <= {}", b.pow_k_max),
        json!({ "k_max": b.pow_k_max }),
    ))
}

/// Every pair of open balls among binary words of a fixed length is nested
/// or disjoint. Exhaustive over length 6.
fn ball_nesting(_: &Budget) -> Result<ClaimResult> {
    const ID: &str = "ball-nesting";
    const LOC: &str = "two open balls in the prefix ultrametric are either disjoint or nested";
    const LEN: usize = 6;
    let ab = Alphabet::binary();
    let words: Vec<Word> = (0u32..1 << LEN)
        .map(|bits| {
            Word::from_letters(&ab, (0..LEN).map(|i| ((bits >> i) & 1) as u8).collect())
                .expect("binary letters")
        })
        .collect();
    let balls: Vec<Vec<u64>> = words
        .iter()
        .map(|c| {
            (0..=LEN)
                .map(|r| {
                    words.iter().enumerate().fold(0u64, |acc, (i, z)| {
                        let inside = ultrametric_distance(c, z)
                            .expect("same alphabet")
                            .less_than_radius(r);
                        acc | (u64::from(inside) << i)
                    })
                })
                .collect()
        })
        .collect();
    let mut pairs = 0u64;
    for (u, bu) in balls.iter().enumerate() {
        for (v, bv) in balls.iter().enumerate() {
            for (r, &x) in bu.iter().enumerate() {
                for (s, &y) in bv.iter().enumerate() {
                    pairs += 1;
                    let meet = x & y != 0;
                    let nested = x & !y == 0 || y & !x == 0;
                    if meet && !nested {
                        return Ok(ClaimResult::refuted(
                            ID,
                            LOC,
                            format!(
                                "B({}, 2^-{r}) and B({}, 2^-{s}) overlap without nesting",
                                words[u], words[v]
                            ),
                            json!({ "u": words[u].to_string(), "v": words[v].to_string(), "r": r, "s": s }),
                        ));
                    }
                }
            }
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("all {pairs} ball pairs over binary words of length {LEN} are nested or disjoint"),
        json!({ "length": LEN, "pairs": pairs }),
    ))
}

fn letter_counts(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "letter-counts";
    const LOC: &str = "letter counts of the finite Fibonacci words F_k (classical indexing: |F_k|_a = F_k, |F_k|_b = F_(k-1), |F_k| = F_(k+1); the source states |F_k| = F_k)";
    for k in 1..=b.word_index_max {
        let w = fib_word_ab(k)?;
        let scan = (
            BigInt::from(count_symbol(&w, 'a')?),
            BigInt::from(count_symbol(&w, 'b')?),
        );
        let closed = letter_counts_closed_form(Family::FibAb, k)?;
        if scan != closed || BigInt::from(w.len()) != fib(k as u64 + 1) {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("F_{k}: scan {scan:?} vs closed form {closed:?}"),
                json!({ "k": k }),
            ));
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("closed forms match scans for 1 <= k <= {}", b.word_index_max),
        json!({ "k_max": b.word_index_max }),
    ))
}

fn df_convergence(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "df-convergence";
    const LOC: &str = "a-density of F_k converges to phi - 1";
    let limit = &Surd::phi() - &Surd::one();
    let mut prev: Option<Surd> = None;
    for k in 2..=b.word_index_max {
        let err = (&Surd::rational(df_density(k)?) - &limit).abs();
        if prev.as_ref().is_some_and(|p| err >= *p) {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("error does not shrink at k = {k}"),
                json!({ "k": k }),
            ));
        }
        prev = Some(err);
    }
    let err = prev.expect("word_index_max >= 2");
    let k = b.word_index_max;
    let payload = json!({ "k_max": k, "error": err.to_string(), "error_decimal": err.to_decimal(16) });
    let tol = Surd::from_ratios(1, 1_000_000, 0, 1);
    Ok(if k < 30 || err < tol {
        ClaimResult::verified(
            ID,
            LOC,
            format!(
                "error shrinks strictly for 2 <= k <= {k}; |dens_a(F_{k}) - (phi - 1)| = {}",
                err.to_decimal(16)
            ),
            payload,
        )
    } else {
        ClaimResult::refuted(ID, LOC, format!("error at k = {k} is not below 1e-6"), payload)
    })
}

fn zeckendorf_round_trip(b: &Budget) -> Result<ClaimResult> {
    const ID: &str = "zeckendorf";
    const LOC: &str = "every positive integer is a unique sum of non-consecutive Fibonacci numbers";
    for m in 1..=b.zeckendorf_max {
        let v = BigInt::from(m);
        let rep = zeckendorf_encode(&v)?;
        let adjacent = rep.bits().windows(2).any(|w| w[0] && w[1]);
        if adjacent || zeckendorf_decode(rep.bits())? != v {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("m = {m} encodes to {rep}"),
                json!({ "m": m, "bits": rep.to_string() }),
            ));
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("encode/decode round-trips without adjacent ones for 1 <= m <= {}", b.zeckendorf_max),
        json!({ "m_max": b.zeckendorf_max }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Budget {
        Budget {
            sweep: 2000,
            prefix: 500,
            complexity_max: 20,
            table_m_max: 13,
            word_index_max: 20,
            alpha_max: 4,
            pow_k_max: 4,
            series_k_max: 4,
            doubling_n_max: 10,
            binet_n_max: 30,
            genfunc_n: 30,
            zeckendorf_max: 500,
        }
    }

    #[test]
    fn budget_validation() {
        assert!(Budget::default().validate().is_ok());
        assert!(matches!(Budget::empty().validate(), Err(Error::InvalidBudget(_))));
        assert!(run_all_claims(&Budget::empty()).is_err());
        let mut b = small();
        b.pow_k_max = 2;
        assert!(b.validate().is_err());
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = claim_ids();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn small_budget_verdicts() {
        let results = run_all_claims(&small()).unwrap();
        assert_eq!(results.len(), claim_ids().len());
        let refuted: Vec<&str> = results
            .iter()
            .filter(|r| !r.is_verified())
            .map(|r| r.id.as_str())
            .collect();
        assert_eq!(
            refuted,
            [
                "length3-one-symbol",
                "table1-values",
                "pow-invariance",
                "pow-value",
                "telescoping",
                "doubling-lucas"
            ]
        );
        for (r, id) in results.iter().zip(claim_ids()) {
            assert_eq!(r.id, id);
        }
    }

    #[test]
    fn deterministic() {
        let a = serde_json::to_string(&run_all_claims(&small()).unwrap()).unwrap();
        let b = serde_json::to_string(&run_all_claims(&small()).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_claim_lookup() {
        let r = run_claim("length3-one-symbol", &small()).unwrap();
        assert_eq!(r.payload["factor"], "101");
        assert_eq!(r.payload["position"], 5);
        let r = run_claim("table1-values", &small()).unwrap();
        assert_eq!(r.payload["mismatches"][0]["m"], 7);
        assert!(run_claim("no-such-claim", &small()).is_err());
        let r = run_claim("pow-value", &small()).unwrap();
        assert_eq!(r.payload["k"], 2);
        assert_eq!(r.payload["monomial"], "abababaaba");
    }
}
