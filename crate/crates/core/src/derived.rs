//! Fibonacci-like words over `{a,b}`: the family `y_n`, the framed family
//! `q_m = a·y_m·b`, and the finite Fibonacci words `F_k`.
//!
//! All closed forms use the classical Fibonacci numbers (`F_0 = 0`,
//! `F_1 = 1`): `|y_n| = F_{n+2}`, `|F_k| = F_{k+1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::decimal::rational_to_decimal;
use crate::error::{Error, Result};
use crate::golden::FibTable;
use crate::words::{Alphabet, Word};

fn ab_word(s: &str) -> Word {
    Word::parse(&Alphabet::ab(), s).expect("static word")
}

/// Words `w_0 = first`, `w_1 = second`, `w_k = w_{k-1} w_{k-2}`, returning `w_n`.
fn fibonacci_concat(first: &str, second: &str, n: usize) -> Word {
    if n == 0 {
        return ab_word(first);
    }
    let mut prev = ab_word(first).into_letters();
    let mut cur = ab_word(second).into_letters();
    for _ in 1..n {
        let mut next = Vec::with_capacity(cur.len() + prev.len());
        next.extend_from_slice(&cur);
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Word::from_letters(&Alphabet::ab(), cur).expect("ab letters")
}

/// `y_0 = a`, `y_1 = ab`, `y_n = y_{n-1} y_{n-2}`.
pub fn y_word(n: usize) -> Word {
    fibonacci_concat("a", "ab", n)
}

/// `q_m = a · y_m · b`, `m ≥ 1`.
pub fn q_word(m: usize) -> Result<Word> {
    if m == 0 {
        return Err(Error::out_of_range("q_m needs m >= 1"));
    }
    let mut letters = vec![0u8];
    letters.extend_from_slice(y_word(m).letters());
    letters.push(1);
    Ok(Word::from_letters(&Alphabet::ab(), letters).expect("ab letters"))
}

/// `F_1 = a`, `F_2 = ab`, `F_k = F_{k-1} F_{k-2}`.
pub fn fib_word_ab(k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::out_of_range("Fibonacci words start at k = 1"));
    }
    Ok(fibonacci_concat("a", "ab", k - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Y,
    Q,
    FibAb,
}

/// `(#a, #b)` from Fibonacci numbers, without building the word.
pub fn letter_counts_closed_form(family: Family, index: usize) -> Result<(BigInt, BigInt)> {
    let mut t = FibTable::new();
    match family {
        Family::Y => Ok((t.fib(index + 1).clone(), t.fib(index).clone())),
        Family::Q => {
            if index == 0 {
                return Err(Error::out_of_range("q_m needs m >= 1"));
            }
            Ok((t.fib(index + 1) + 1, t.fib(index) + 1))
        }
        Family::FibAb => {
            if index == 0 {
                return Err(Error::out_of_range("Fibonacci words start at k = 1"));
            }
            Ok((t.fib(index).clone(), t.fib(index - 1).clone()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub m: usize,
    #[serde(skip)]
    pub dens_a_q: BigRational,
    #[serde(skip)]
    pub dens_b_q: BigRational,
    #[serde(skip)]
    pub dens_a_y: BigRational,
    #[serde(skip)]
    pub dens_b_y: BigRational,
    #[serde(rename = "dens_a_q")]
    pub dens_a_q_text: String,
    #[serde(rename = "dens_b_q")]
    pub dens_b_q_text: String,
    #[serde(rename = "dens_a_y")]
    pub dens_a_y_text: String,
    #[serde(rename = "dens_b_y")]
    pub dens_b_y_text: String,
}

impl DensityRow {
    pub fn cells(&self) -> [&str; 4] {
        [
            &self.dens_a_q_text,
            &self.dens_b_q_text,
            &self.dens_a_y_text,
            &self.dens_b_y_text,
        ]
    }
}

fn density_pair(a: BigInt, b: BigInt) -> (BigRational, BigRational) {
    let len = &a + &b;
    (BigRational::new(a, len.clone()), BigRational::new(b, len))
}

/// Rows `m = 3..=m_max` of letter densities in `q_m` and `y_m`, exact and
/// rendered to six decimals (half-even).
pub fn density_table(m_max: usize) -> Result<Vec<DensityRow>> {
    if m_max < 3 {
        return Err(Error::out_of_range("density table starts at m = 3"));
    }
    (3..=m_max)
        .map(|m| {
            let (qa, qb) = letter_counts_closed_form(Family::Q, m)?;
            let (ya, yb) = letter_counts_closed_form(Family::Y, m)?;
            let (dens_a_q, dens_b_q) = density_pair(qa, qb);
            let (dens_a_y, dens_b_y) = density_pair(ya, yb);
            Ok(DensityRow {
                m,
                dens_a_q_text: rational_to_decimal(&dens_a_q, 6),
                dens_b_q_text: rational_to_decimal(&dens_b_q, 6),
                dens_a_y_text: rational_to_decimal(&dens_a_y, 6),
                dens_b_y_text: rational_to_decimal(&dens_b_y, 6),
                dens_a_q,
                dens_b_q,
                dens_a_y,
                dens_b_y,
            })
        })
        .collect()
}

/// `|F_k|_a / |F_k|` as an exact rational.
pub fn df_density(k: usize) -> Result<BigRational> {
    let (a, b) = letter_counts_closed_form(Family::FibAb, k)?;
    let len = &a + &b;
    debug_assert!(len >= BigInt::one());
    Ok(BigRational::new(a, len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::{fib, Surd};
    use crate::words::count_symbol;

    fn ab(s: &str) -> Word {
        ab_word(s)
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn y_examples() {
        assert_eq!(y_word(0), ab("a"));
        assert_eq!(y_word(1), ab("ab"));
        assert_eq!(y_word(2), ab("aba"));
        assert_eq!(y_word(3), ab("abaab"));
        assert_eq!(y_word(3).len(), 5);
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_word(1).unwrap(), ab("aabb"));
        assert_eq!(q_word(2).unwrap(), ab("aabab"));
        let q3 = q_word(3).unwrap();
        assert_eq!(q3.len(), 7);
        assert_eq!(count_symbol(&q3, 'a').unwrap(), 4);
        assert!(q_word(0).is_err());
    }

    #[test]
    fn fib_word_examples() {
        assert_eq!(fib_word_ab(1).unwrap(), ab("a"));
        assert_eq!(fib_word_ab(3).unwrap(), ab("aba"));
        assert_eq!(fib_word_ab(4).unwrap(), ab("abaab"));
        assert_eq!(fib_word_ab(5).unwrap(), ab("abaababa"));
        assert_eq!(fib_word_ab(6).unwrap(), ab("abaababaabaab"));
        assert!(fib_word_ab(0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(letter_counts_closed_form(Family::Y, 2).unwrap(), (b(2), b(1)));
        assert_eq!(letter_counts_closed_form(Family::Q, 3).unwrap(), (b(4), b(3)));
        assert_eq!(letter_counts_closed_form(Family::FibAb, 5).unwrap(), (b(5), b(3)));
        assert!(letter_counts_closed_form(Family::Q, 0).is_err());
        assert!(letter_counts_closed_form(Family::FibAb, 0).is_err());
    }

    #[test]
    fn closed_forms_match_scans() {
        for i in 0..=25 {
            let scan = |w: &Word| {
                (
                    b(count_symbol(w, 'a').unwrap() as i64),
                    b(count_symbol(w, 'b').unwrap() as i64),
                )
            };
            assert_eq!(letter_counts_closed_form(Family::Y, i).unwrap(), scan(&y_word(i)));
            assert_eq!(y_word(i).len() as u64, u64::try_from(fib(i as u64 + 2)).unwrap());
            if i >= 1 {
                assert_eq!(letter_counts_closed_form(Family::Q, i).unwrap(), scan(&q_word(i).unwrap()));
                let f = fib_word_ab(i).unwrap();
                assert_eq!(letter_counts_closed_form(Family::FibAb, i).unwrap(), scan(&f));
                assert!(y_word(i).is_prefix_of(&y_word(i + 1)));
            }
        }
    }

    #[test]
    fn table_rows() {
        let rows = density_table(13).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[0].cells(), ["0.571429", "0.428571", "0.600000", "0.400000"]);
        assert_eq!(rows[1].cells(), ["0.600000", "0.400000", "0.625000", "0.375000"]);
        // y_13 has 377 a's out of 610; q_13 has 378 out of 612
        assert_eq!(rows[10].dens_a_y_text, "0.618033");
        assert_eq!(rows[10].dens_b_y_text, "0.381967");
        assert_eq!(rows[10].dens_a_q, BigRational::new(b(378), b(612)));
        assert_eq!(rows[10].dens_a_q_text, "0.617647");
        for r in &rows {
            assert_eq!(&r.dens_a_q + &r.dens_b_q, BigRational::one());
            assert_eq!(&r.dens_a_y + &r.dens_b_y, BigRational::one());
        }
        assert!(density_table(2).is_err());
    }

    #[test]
    fn q_density_approaches_inverse_phi() {
        let rows = density_table(60).unwrap();
        for r in rows.iter().filter(|r| r.m >= 13) {
            let err = (&Surd::rational(r.dens_a_q.clone()) - &Surd::inv_phi()).abs();
            assert!(err < Surd::from_ratios(1, 1000, 0, 1), "m={}", r.m);
        }
    }

    #[test]
    fn df_examples() {
        assert_eq!(df_density(2).unwrap(), BigRational::new(b(1), b(2)));
        assert_eq!(df_density(5).unwrap(), BigRational::new(b(5), b(8)));
        let err = (&Surd::rational(df_density(30).unwrap()) - &Surd::inv_phi()).abs();
        assert!(err < Surd::from_ratios(1, 1_000_000, 0, 1));
    }
}
