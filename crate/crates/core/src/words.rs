//! Finite words over small ordered alphabets.
//!
//! A [`Word`] stores letters as indices into its [`Alphabet`]; symbols are
//! only looked at when parsing and rendering. Positions are 0-based except
//! in [`location_set`], which reports 1-based starting positions.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_ALPHABET: usize = 10;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    symbols: Arc<[char]>,
}

impl Alphabet {
    /// Builds an alphabet from the characters of `symbols`, in order.
    pub fn new(symbols: &str) -> Result<Self> {
        let chars: Vec<char> = symbols.chars().collect();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("empty alphabet".into()));
        }
        if chars.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols, at most {MAX_ALPHABET} allowed",
                chars.len()
            )));
        }
        for (i, c) in chars.iter().enumerate() {
            if c.is_control() || c.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!("{c:?} is not printable")));
            }
            if chars[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet {
            symbols: chars.into(),
        })
    }

    /// The alphabet `{0,1}`.
    pub fn binary() -> Self {
        Alphabet::new("01").expect("static alphabet")
    }

    /// The alphabet `{a,b}`.
    pub fn ab() -> Self {
        Alphabet::new("ab").expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: char) -> Result<u8> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as u8)
            .ok_or(Error::UnknownSymbol(symbol))
    }

    pub fn symbol(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    pub fn is_binary(&self) -> bool {
        *self.symbols == ['0', '1']
    }

    fn same_as(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }

    pub(crate) fn check_same(&self, other: &Alphabet) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{self}")
    }
}

/// A finite word. Ordering is lexicographic on letter indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet: alphabet.clone(),
        }
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| alphabet.index_of(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            letters,
            alphabet: alphabet.clone(),
        })
    }

    /// Builds a word from raw letter indices.
    pub fn from_letters(alphabet: &Alphabet, letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet.len()) {
            return Err(Error::out_of_range(format!(
                "letter index {bad} outside alphabet of size {}",
                alphabet.len()
            )));
        }
        Ok(Word {
            letters,
            alphabet: alphabet.clone(),
        })
    }

    pub(crate) fn from_letters_unchecked(alphabet: &Alphabet, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.len()));
        Word {
            letters,
            alphabet: alphabet.clone(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.alphabet.same_as(&other.alphabet) && other.letters.starts_with(&self.letters)
    }

    /// Contiguous factor `[start, start + len)`, 0-based.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word::from_letters_unchecked(&self.alphabet, self.letters[start..start + len].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0, len.min(self.len()))
    }

    pub fn symbols(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().map(|&l| self.alphabet.symbol(l))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols().collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{:?}", self.to_string())
        }
    }
}

pub fn concat(u: &Word, v: &Word) -> Result<Word> {
    u.alphabet.check_same(&v.alphabet)?;
    let mut letters = Vec::with_capacity(u.len() + v.len());
    letters.extend_from_slice(&u.letters);
    letters.extend_from_slice(&v.letters);
    Ok(Word::from_letters_unchecked(&u.alphabet, letters))
}

pub fn count_symbol(w: &Word, symbol: char) -> Result<usize> {
    let idx = w.alphabet.index_of(symbol)?;
    Ok(w.letters.iter().filter(|&&l| l == idx).count())
}

/// All distinct length-`n` factors. `n = 0` gives `{ε}`, `n > |w|` the empty set.
pub fn factor_set(w: &Word, n: usize) -> BTreeSet<Word> {
    if n > w.len() {
        return BTreeSet::new();
    }
    if n == 0 {
        return BTreeSet::from([Word::empty(&w.alphabet)]);
    }
    w.letters
        .windows(n)
        .map(|win| Word::from_letters_unchecked(&w.alphabet, win.to_vec()))
        .collect()
}

/// `|factor_set(w, n)|` without materializing owned words.
pub fn factor_complexity(w: &Word, n: usize) -> usize {
    if n > w.len() {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    w.letters.windows(n).collect::<HashSet<_>>().len()
}

pub fn contains_factor(w: &Word, f: &Word) -> Result<bool> {
    w.alphabet.check_same(&f.alphabet)?;
    if f.is_empty() {
        return Ok(true);
    }
    Ok(w.letters.windows(f.len()).any(|win| win == f.letters()))
}

/// Ascending 1-based starting positions of `f` in `w`.
pub fn location_set(w: &Word, f: &Word) -> Result<Vec<usize>> {
    w.alphabet.check_same(&f.alphabet)?;
    if f.is_empty() {
        return Err(Error::EmptyFactor);
    }
    Ok(w.letters
        .windows(f.len())
        .enumerate()
        .filter(|(_, win)| *win == f.letters())
        .map(|(i, _)| i + 1)
        .collect())
}

/// Distance `2^-n` between finite words, carried as the exponent `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Zero,
    Exponent(usize),
}

impl Distance {
    /// `true` when `self < 2^-r`.
    pub fn less_than_radius(self, r: usize) -> bool {
        match self {
            Distance::Zero => true,
            Distance::Exponent(n) => n > r,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    // Larger exponent means smaller distance.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Distance::Zero, Distance::Zero) => Equal,
            (Distance::Zero, _) => Less,
            (_, Distance::Zero) => Greater,
            (Distance::Exponent(a), Distance::Exponent(b)) => b.cmp(a),
        }
    }
}

/// First index of disagreement; a proper prefix disagrees at the shorter length.
pub fn ultrametric_distance(u: &Word, v: &Word) -> Result<Distance> {
    u.alphabet.check_same(&v.alphabet)?;
    if u.letters == v.letters {
        return Ok(Distance::Zero);
    }
    let n = u
        .letters
        .iter()
        .zip(&v.letters)
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| u.len().min(v.len()));
    Ok(Distance::Exponent(n))
}

/// Restricted-growth test: starts with 1 and never jumps more than one above
/// the running maximum.
pub fn is_partition_word(w: &[u64]) -> bool {
    let mut max = 0u64;
    for &x in w {
        if x == 0 || x > max + 1 {
            return false;
        }
        max = max.max(x);
    }
    true
}

pub fn isolated_one_runs(w: &Word) -> Result<Vec<usize>> {
    if !w.alphabet.is_binary() {
        return Err(Error::NotBinary(w.alphabet.to_string()));
    }
    Ok(w.letters
        .split(|&l| l == 0)
        .filter(|run| !run.is_empty())
        .map(<[u8]>::len)
        .collect())
}
