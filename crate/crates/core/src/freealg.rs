//! Integer combinations of words: the free abelian group on `A*`, with
//! concatenation extended bilinearly to a product (the ring ℤ⟨A⟩).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::claims::ClaimResult;
use crate::derived::fib_word_ab;
use crate::error::{Error, Result};
use crate::words::{concat, Alphabet, Word};

/// Word key ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Word);

impl Monomial {
    pub fn word(&self) -> &Word {
        &self.0
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.letters().cmp(other.0.letters()))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl AlgebraElement {
    pub fn zero(alphabet: &Alphabet) -> Self {
        AlgebraElement {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The word `ε`, multiplicative identity.
    pub fn one(alphabet: &Alphabet) -> Self {
        Self::monomial(BigInt::one(), Word::empty(alphabet))
    }

    pub fn monomial(coefficient: BigInt, word: Word) -> Self {
        let mut e = Self::zero(word.alphabet());
        if !coefficient.is_zero() {
            e.terms.insert(Monomial(word), coefficient);
        }
        e
    }

    pub fn from_word(word: Word) -> Self {
        Self::monomial(BigInt::one(), word)
    }

    /// Sum of words with coefficient 1 each (repeats accumulate).
    pub fn from_words<'a>(alphabet: &Alphabet, words: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut e = Self::zero(alphabet);
        for w in words {
            e.add_term(Word::parse(alphabet, w)?, BigInt::one())?;
        }
        Ok(e)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    pub fn coefficient(&self, word: &Word) -> BigInt {
        self.terms
            .get(&Monomial(word.clone()))
            .cloned()
            .unwrap_or_default()
    }

    fn add_term(&mut self, word: Word, c: BigInt) -> Result<()> {
        self.alphabet.check_same(word.alphabet())?;
        let key = Monomial(word);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.alphabet.check_same(&other.alphabet)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scalar(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(&self.alphabet);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), x * c))
            .collect();
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scalar(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.alphabet.check_same(&other.alphabet)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(concat(&u.0, &v.0)?, a * b)?;
            }
        }
        Ok(out)
    }

    /// Smallest word (canonical order) whose coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Word, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let x = self.terms.get(k).cloned().unwrap_or_default();
            let y = other.terms.get(k).cloned().unwrap_or_default();
            (x != y).then(|| (k.0.clone(), x, y))
        })
    }
}

pub fn alg_add(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.add(y)
}

pub fn alg_scalar(c: &BigInt, x: &AlgebraElement) -> AlgebraElement {
    x.scalar(c)
}

pub fn alg_mul(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.mul(y)
}

/// `coefficient·word` terms joined by ` + `; coefficient 1 omitted, `ε` for
/// the empty word, `0` for the zero element.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let w = if m.0.is_empty() {
                "ε".to_string()
            } else {
                m.0.to_string()
            };
            if c.is_one() {
                f.write_str(&w)?;
            } else {
                write!(f, "{c}·{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

fn word_product(parts: &[&Word]) -> Word {
    let alphabet = parts[0].alphabet();
    let letters = parts.iter().flat_map(|w| w.letters().iter().copied()).collect();
    Word::from_letters(alphabet, letters).expect("same alphabet")
}

/// `a·F_k·F_{k−1}² + ab·F_k·F_{k+1}²` over the finite Fibonacci words.
pub fn pow_fib(k: usize) -> Result<AlgebraElement> {
    if k < 2 {
        return Err(Error::out_of_range("pow_fib needs k >= 2"));
    }
    let alphabet = Alphabet::ab();
    let a = Word::parse(&alphabet, "a")?;
    let ab = Word::parse(&alphabet, "ab")?;
    let prev = fib_word_ab(k - 1)?;
    let cur = fib_word_ab(k)?;
    let next = fib_word_ab(k + 1)?;
    let first = AlgebraElement::from_word(word_product(&[&a, &cur, &prev, &prev]));
    let second = AlgebraElement::from_word(word_product(&[&ab, &cur, &next, &next]));
    first.add(&second)
}

/// Pairwise comparison of `pow_fib(k)` for `k = 2..=k_max`.
pub fn check_pow_invariance(k_max: usize) -> Result<ClaimResult> {
    const ID: &str = "pow-invariance";
    const LOC: &str = "Pow(F_k) is the same element of Z<a,b> for every k >= 2";
    if k_max < 3 {
        return Err(Error::out_of_range("pow invariance needs k_max >= 3"));
    }
    let values = (2..=k_max).map(pow_fib).collect::<Result<Vec<_>>>()?;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if let Some((w, x, y)) = values[i].first_difference(&values[j]) {
                let (ki, kj) = (i + 2, j + 2);
                return Ok(ClaimResult::refuted(
                    ID,
                    LOC,
                    format!(
                        "Pow(F_{ki}) = {} differs from Pow(F_{kj}) = {}: coefficient of {w} is {x} vs {y}",
                        values[i], values[j]
                    ),
                    json!({
                        "k_max": k_max,
                        "k_left": ki,
                        "k_right": kj,
                        "monomial": w.to_string(),
                        "coefficient_left": x.to_string(),
                        "coefficient_right": y.to_string(),
                    }),
                ));
            }
        }
    }
    Ok(ClaimResult::verified(
        ID,
        LOC,
        format!("Pow(F_k) constant for 2 <= k <= {k_max}"),
        json!({ "k_max": k_max }),
    ))
}

/// `Σ_k Σ_{j=1..α} (α+1−j)·w_k^j = α(α+1)/2 · Σ_k w_k`, with letters read as 0/1.
pub fn alpha_identity_check(alpha: u32, w: &Word) -> Result<ClaimResult> {
    const ID: &str = "alpha-identity";
    const LOC: &str = "weighted power sums of a 0/1 word collapse to alpha(alpha+1)/2 times its digit sum";
    if alpha == 0 {
        return Err(Error::out_of_range("alpha must be >= 1"));
    }
    if !w.alphabet().is_binary() {
        return Err(Error::NotBinary(w.alphabet().to_string()));
    }
    let mut lhs = BigInt::zero();
    let mut digit_sum = BigInt::zero();
    for &l in w.letters() {
        let x = BigInt::from(l);
        for j in 1..=alpha {
            lhs += BigInt::from(alpha + 1 - j) * x.pow(j);
        }
        digit_sum += x;
    }
    let rhs: BigInt = BigInt::from(alpha) * BigInt::from(alpha + 1) / 2 * &digit_sum;
    let payload = json!({
        "alpha": alpha,
        "length": w.len(),
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
    });
    Ok(if lhs == rhs {
        ClaimResult::verified(
            ID,
            LOC,
            format!("both sides equal {lhs} (alpha = {alpha}, |w| = {})", w.len()),
            payload,
        )
    } else {
        ClaimResult::refuted(ID, LOC, format!("lhs {lhs} != rhs {rhs}"), payload)
    })
}

impl AlgebraElement {
    /// Coefficients are all positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mechanical::mechanical_prefix;
    use proptest::prelude::*;

    fn el(words: &[&str]) -> AlgebraElement {
        AlgebraElement::from_words(&Alphabet::ab(), words.iter().copied()).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(&Alphabet::ab(), s).unwrap()
    }

    #[test]
    fn group_examples() {
        let x = el(&["a", "ab"]);
        let zero = AlgebraElement::zero(&Alphabet::ab());
        assert_eq!(x.add(&zero).unwrap(), x);
        let single = AlgebraElement::from_word(w("ab"));
        let cancelled = single.add(&single.scalar(&BigInt::from(-1))).unwrap();
        assert!(cancelled.is_zero());
        assert_eq!(cancelled.to_string(), "0");
        let sum = el(&["a", "b"]).add(&el(&["a"])).unwrap();
        assert_eq!(sum.to_string(), "2·a + b");
        assert_eq!(sum.coefficient(&w("a")), BigInt::from(2));
        assert!(x.add(&AlgebraElement::zero(&Alphabet::binary())).is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(el(&["a", "b"]).mul(&el(&["a"])).unwrap(), el(&["aa", "ba"]));
        let x = el(&["a", "ab"]);
        assert_eq!(AlgebraElement::one(&Alphabet::ab()).mul(&x).unwrap(), x);
        assert_eq!(x.mul(&x).unwrap(), el(&["aa", "aab", "aba", "abab"]));
        assert_eq!(x.mul(&x).unwrap().to_string(), "aa + aab + aba + abab");
    }

    #[test]
    fn rendering_conventions() {
        let e = AlgebraElement::monomial(BigInt::from(-3), w("ba"))
            .add(&AlgebraElement::one(&Alphabet::ab()))
            .unwrap();
        assert_eq!(e.to_string(), "ε + -3·ba");
    }

    #[test]
    fn pow_examples() {
        // plain string concatenation oracle
        let first = ["a", "ab", "a", "a"].concat();
        let second = ["ab", "ab", "aba", "aba"].concat();
        assert_eq!(first, "aabaa");
        assert_eq!(second, "abababaaba");
        let p2 = pow_fib(2).unwrap();
        assert_eq!(p2, el(&[&first, &second]));
        assert_eq!(p2.to_string(), "aabaa + abababaaba");
        assert_eq!(pow_fib(3).unwrap(), el(&["aabaabab", "ababaabaababaab"]));
        assert!(pow_fib(1).is_err());
    }

    #[test]
    fn pow_shape() {
        for k in 2..=12 {
            let p = pow_fib(k).unwrap();
            let len = |j| fib_word_ab(j).unwrap().len();
            let lens: Vec<usize> = p.terms().map(|(w, _)| w.len()).collect();
            assert_eq!(lens, vec![1 + len(k) + 2 * len(k - 1), 2 + len(k) + 2 * len(k + 1)]);
            assert!(p.terms().all(|(_, c)| c.is_one()));
        }
    }

    #[test]
    fn pow_invariance_is_refuted() {
        for k_max in [3, 6] {
            let r = check_pow_invariance(k_max).unwrap();
            assert!(!r.is_verified());
            assert_eq!(r.payload["k_left"], 2);
            assert_eq!(r.payload["k_right"], 3);
        }
        let r = check_pow_invariance(3).unwrap();
        assert_eq!(r.payload["monomial"], "aabaa");
        assert!(check_pow_invariance(2).is_err());
    }

    #[test]
    fn alpha_identity() {
        let prefix = mechanical_prefix(13).unwrap();
        let r = alpha_identity_check(3, &prefix).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.payload["lhs"], "30");
        assert!(alpha_identity_check(1, &prefix).unwrap().is_verified());
        let long = mechanical_prefix(10_000).unwrap();
        assert!(alpha_identity_check(10, &long).unwrap().is_verified());
        assert!(alpha_identity_check(0, &prefix).is_err());
        assert!(alpha_identity_check(2, &w("ab")).is_err());
    }

    fn small_element() -> impl Strategy<Value = AlgebraElement> {
        proptest::collection::vec(
            (proptest::collection::vec(0u8..2, 0..4), -3i64..=3),
            0..4,
        )
        .prop_map(|terms| {
            let ab = Alphabet::ab();
            let mut e = AlgebraElement::zero(&ab);
            for (letters, c) in terms {
                let m = AlgebraElement::monomial(
                    BigInt::from(c),
                    Word::from_letters(&ab, letters).unwrap(),
                );
                e = e.add(&m).unwrap();
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_laws(x in small_element(), y in small_element(), z in small_element()) {
            let xy_z = x.mul(&y).unwrap().mul(&z).unwrap();
            let x_yz = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(&xy_z, &x_yz);
            let left = x.mul(&y.add(&z).unwrap()).unwrap();
            let right = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            let left = x.add(&y).unwrap().mul(&z).unwrap();
            let right = x.mul(&z).unwrap().add(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            let one = AlgebraElement::one(&Alphabet::ab());
            prop_assert_eq!(one.mul(&x).unwrap(), x.clone());
            prop_assert_eq!(x.mul(&one).unwrap(), x.clone());
            prop_assert_eq!(x.add(&AlgebraElement::zero(&Alphabet::ab())).unwrap(), x.clone());
            prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn alpha_identity_holds_for_any_binary_word(
            letters in proptest::collection::vec(0u8..2, 0..60), alpha in 1u32..=10
        ) {
            let w = Word::from_letters(&Alphabet::binary(), letters).unwrap();
            prop_assert!(alpha_identity_check(alpha, &w).unwrap().is_verified());
        }
    }
}
