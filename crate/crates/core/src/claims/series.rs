use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use super::ClaimResult;
use crate::error::{Error, Result};
use crate::golden::{fib, lucas, FibTable, Surd};

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `(a_k, T_k)` with `F = F_{2^k m}`, `L = L_{2^k m}`:
/// `a_k = 2^k F L / (L² + 1)`, `T_k = 2^k F L / (L² − 1)`.
pub fn telescope_terms(m: u64, k: u32) -> Result<(BigRational, BigRational)> {
    if m == 0 || k == 0 {
        return Err(Error::out_of_range("telescope terms need m >= 1 and k >= 1"));
    }
    let idx = m
        .checked_shl(k)
        .filter(|v| v >> k == m)
        .ok_or_else(|| Error::out_of_range("2^k m overflows"))?;
    let f = fib(idx);
    let l = lucas(idx);
    let num = (BigInt::one() << k) * &f * &l;
    let l2 = &l * &l;
    Ok((ratio(num.clone(), &l2 + 1), ratio(num, l2 - 1)))
}

/// Tests `a_k = T_k − T_{k+1}` for `1 ≤ k < k_max` and whether the terms
/// `a_k` shrink.
pub fn check_telescoping(m: u64, k_max: u32) -> Result<ClaimResult> {
    const ID: &str = "telescoping";
    const LOC: &str = "sum over k of 2^k F L/(L^2+1), F = F_{2^k m}, L = L_{2^k m}, telescopes via T_k = 2^k F L/(L^2-1) and converges";
    if k_max < 2 {
        return Err(Error::out_of_range("telescoping check needs k_max >= 2"));
    }
    let terms = (1..=k_max)
        .map(|k| telescope_terms(m, k))
        .collect::<Result<Vec<_>>>()?;
    let increasing_at: Vec<u32> = (1..k_max)
        .filter(|&k| terms[k as usize].0 > terms[k as usize - 1].0)
        .collect();
    let terms_shrink = increasing_at.is_empty();
    for k in 1..k_max {
        let (a, t) = &terms[k as usize - 1];
        let t_next = &terms[k as usize].1;
        let diff = t - t_next;
        if *a != diff {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("m = {m}, k = {k}: a_{k} = {a} but T_{k} - T_{} = {t} - {t_next} = {diff}", k + 1),
                json!({
                    "m": m,
                    "k": k,
                    "a_k": a.to_string(),
                    "t_k": t.to_string(),
                    "t_k_next": t_next.to_string(),
                    "difference": diff.to_string(),
                    "terms_shrink": terms_shrink,
                    "increasing_at": increasing_at,
                    "terms": terms.iter().map(|(a, _)| a.to_string()).collect::<Vec<_>>(),
                }),
            ));
        }
    }
    let payload = json!({
        "m": m,
        "k_max": k_max,
        "terms_shrink": terms_shrink,
        "increasing_at": increasing_at,
    });
    Ok(if terms_shrink {
        ClaimResult::verified(ID, LOC, format!("identity holds and terms shrink for k < {k_max}"), payload)
    } else {
        ClaimResult::refuted(
            ID,
            LOC,
            format!("identity holds but a_k grows at k = {increasing_at:?}"),
            payload,
        )
    })
}

/// Separate verdicts for `F_{2n} = F_n L_n` and `L_{2n} = L_n² − 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublingReport {
    pub fib: ClaimResult,
    pub lucas: ClaimResult,
}

pub fn doubling_identity_check(n_max: u64) -> Result<DoublingReport> {
    if n_max < 2 {
        return Err(Error::out_of_range("doubling check needs n_max >= 2"));
    }
    let mut t = FibTable::new();
    let n_max_us = usize::try_from(n_max).map_err(|_| Error::out_of_range("n_max too large"))?;
    t.fib(2 * n_max_us);

    let fib_fail = (1..=n_max_us).find(|&n| {
        let lhs = t.fib(2 * n).clone();
        let rhs = t.fib(n).clone() * t.lucas(n);
        lhs != rhs
    });
    const FIB_LOC: &str = "doubling identity F_{2n} = F_n L_n";
    let fib = match fib_fail {
        None => ClaimResult::verified(
            "doubling-fib",
            FIB_LOC,
            format!("F_(2n) = F_n L_n for 1 <= n <= {n_max}"),
            json!({ "n_max": n_max }),
        ),
        Some(n) => ClaimResult::refuted(
            "doubling-fib",
            FIB_LOC,
            format!("fails at n = {n}"),
            json!({ "n_max": n_max, "n": n }),
        ),
    };

    let mut failing = Vec::new();
    let mut corrected_holds = true;
    for n in 1..=n_max_us {
        let l2n = t.lucas(2 * n).clone();
        let ln = t.lucas(n).clone();
        let sq = &ln * &ln;
        if l2n != &sq - 2 {
            failing.push(n);
        }
        let sign = if n % 2 == 0 { 2 } else { -2 };
        if l2n != sq - sign {
            corrected_holds = false;
        }
    }
    const LUCAS_LOC: &str = "doubling identity L_{2n} = L_n^2 - 2";
    let lucas = match failing.first() {
        None => ClaimResult::verified(
            "doubling-lucas",
            LUCAS_LOC,
            format!("L_(2n) = L_n^2 - 2 for 1 <= n <= {n_max}"),
            json!({ "n_max": n_max }),
        ),
        Some(&n) => {
            let show = |n: usize, t: &mut FibTable| {
                let l2n = t.lucas(2 * n).clone();
                let ln = t.lucas(n).clone();
                format!("L_{} = {l2n} but L_{n}^2 - 2 = {}", 2 * n, &ln * &ln - 2)
            };
            let mut text = format!("smallest counterexample n = {n}: {}", show(n, &mut t));
            if n != 3 && failing.contains(&3) {
                text.push_str(&format!("; n = 3: {}", show(3, &mut t)));
            }
            text.push_str(&format!(
                "; fails exactly at the odd n <= {n_max}; L_n^2 - 2(-1)^n holds throughout: {corrected_holds}"
            ));
            ClaimResult::refuted(
                "doubling-lucas",
                LUCAS_LOC,
                text,
                json!({
                    "n_max": n_max,
                    "n": n,
                    "lucas_2n": t.lucas(2 * n).to_string(),
                    "lucas_n": t.lucas(n).to_string(),
                    "failing_n": failing,
                    "signed_form_holds": corrected_holds,
                }),
            )
        }
    };
    Ok(DoublingReport { fib, lucas })
}

/// Coefficients `c_0..=c_n` of `x / (1 − x − x²)` by long division.
pub fn genfunc_coefficients(n: usize) -> Vec<BigRational> {
    // numerator x, denominator 1 − x − x²: c_k = num_k + c_{k−1} + c_{k−2}
    let mut c: Vec<BigRational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut r = if k == 1 { BigRational::one() } else { BigRational::zero() };
        if k >= 1 {
            r += &c[k - 1];
        }
        if k >= 2 {
            r += &c[k - 2];
        }
        c.push(r);
    }
    c
}

pub fn genfunc_check(n: usize) -> Result<ClaimResult> {
    const ID: &str = "genfunc";
    const LOC: &str = "generating function sum F_k x^k = x/(1 - x - x^2)";
    if n == 0 {
        return Err(Error::out_of_range("genfunc check needs N >= 1"));
    }
    let coeffs = genfunc_coefficients(n);
    let mismatch = coeffs
        .iter()
        .enumerate()
        .find(|(k, c)| **c != BigRational::from_integer(fib(*k as u64)));
    Ok(match mismatch {
        None => ClaimResult::verified(
            ID,
            LOC,
            format!("coefficients of x^0..x^{n} equal F_0..F_{n}"),
            json!({ "n": n }),
        ),
        Some((k, c)) => ClaimResult::refuted(
            ID,
            LOC,
            format!("coefficient of x^{k} is {c}, F_{k} = {}", fib(k as u64)),
            json!({ "n": n, "k": k, "coefficient": c.to_string() }),
        ),
    })
}

/// `(φⁿ − φ̄ⁿ)/√5 = F_n` and `φⁿ + φ̄ⁿ = L_n` in ℚ(√5), against the recurrence.
pub fn binet_check(n_max: u32) -> Result<ClaimResult> {
    const ID: &str = "binet";
    const LOC: &str = "Binet forms F_n = (phi^n - phibar^n)/sqrt5 and L_n = phi^n + phibar^n";
    if n_max == 0 {
        return Err(Error::out_of_range("binet check needs n_max >= 1"));
    }
    let inv_sqrt5 = Surd::sqrt5().recip().expect("sqrt5 is nonzero");
    let mut t = FibTable::new();
    for n in 0..=n_max {
        let p = Surd::phi().pow(n);
        let q = Surd::phi_bar().pow(n);
        let f = &(&p - &q) * &inv_sqrt5;
        let l = &p + &q;
        let fe = Surd::integer(t.fib(n as usize).clone());
        let le = Surd::integer(t.lucas(n as usize).clone());
        if f != fe || l != le {
            return Ok(ClaimResult::refuted(
                ID,
                LOC,
                format!("n = {n}: Binet gives F = {f}, L = {l}; recurrence gives {fe}, {le}"),
                json!({ "n": n }),
            ));
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("exact agreement for 0 <= n <= {n_max}"),
        json!({ "n_max": n_max }),
    ))
}
