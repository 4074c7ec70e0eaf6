//! Letter-to-word substitutions and lazily expanded fixed points.

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of the i-th source symbol.
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::InvalidMorphism(format!(
                "{} images for an alphabet of {} symbols",
                images.len(),
                source.len()
            )));
        }
        for img in &images {
            img.alphabet().check_same(&target)?;
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    /// Endomorphism of `alphabet` from image strings, one per symbol.
    pub fn endo(alphabet: &Alphabet, images: &[&str]) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| Word::parse(alphabet, s))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(alphabet.clone(), alphabet.clone(), images)
    }

    /// `0 ↦ 01, 1 ↦ 0`.
    pub fn fibonacci() -> Self {
        Morphism::endo(&Alphabet::binary(), &["01", "0"]).expect("static morphism")
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, symbol: char) -> Result<&Word> {
        Ok(&self.images[self.source.index_of(symbol)? as usize])
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.alphabet().check_same(&self.source)?;
        let mut out = Vec::new();
        for &l in w.letters() {
            out.extend_from_slice(self.images[l as usize].letters());
        }
        Ok(Word::from_letters(&self.target, out).expect("images are over the target"))
    }

    pub fn is_non_erasing(&self) -> bool {
        self.images.iter().all(|w| !w.is_empty())
    }

    /// Letters whose iterated images eventually vanish.
    fn mortal_letters(&self) -> Vec<bool> {
        let mut mortal = vec![false; self.source.len()];
        loop {
            let mut changed = false;
            for (i, img) in self.images.iter().enumerate() {
                if !mortal[i] && img.letters().iter().all(|&l| mortal[l as usize]) {
                    mortal[i] = true;
                    changed = true;
                }
            }
            if !changed {
                return mortal;
            }
        }
    }

    pub fn is_prolongable(&self, symbol: char) -> Result<bool> {
        self.source.check_same(&self.target)?;
        let a = self.source.index_of(symbol)?;
        let img = self.images[a as usize].letters();
        if img.first() != Some(&a) {
            return Ok(false);
        }
        let mortal = self.mortal_letters();
        Ok(img[1..].iter().any(|&l| !mortal[l as usize]))
    }

    pub fn fixed_point(&self, symbol: char) -> Result<FixedPoint<'_>> {
        FixedPoint::new(self, symbol)
    }

    /// Length-`n` prefix of the fixed point starting with `symbol`.
    pub fn fixed_point_prefix(&self, symbol: char, n: usize) -> Result<Word> {
        if n == 0 {
            return Err(Error::out_of_range("prefix length must be positive"));
        }
        let mut fp = self.fixed_point(symbol)?;
        Ok(fp.prefix(n))
    }
}

/// Incremental generator for `h^ω(a)`.
///
/// The buffer always equals `h(buffer[..cursor])`; each step expands the
/// letter under the cursor and appends its image.
#[derive(Debug, Clone)]
pub struct FixedPoint<'a> {
    morphism: &'a Morphism,
    buffer: Vec<u8>,
    cursor: usize,
    emitted: usize,
}

impl<'a> FixedPoint<'a> {
    pub fn new(morphism: &'a Morphism, symbol: char) -> Result<Self> {
        if !morphism.is_prolongable(symbol)? {
            return Err(Error::NotProlongable(symbol));
        }
        let a = morphism.source.index_of(symbol)?;
        Ok(FixedPoint {
            morphism,
            buffer: morphism.images[a as usize].letters().to_vec(),
            cursor: 1,
            emitted: 0,
        })
    }

    fn grow_to(&mut self, n: usize) {
        while self.buffer.len() < n {
            // Cannot run dry: prolongability makes the fixed point infinite.
            let letter = self.buffer[self.cursor];
            self.buffer
                .extend_from_slice(self.morphism.images[letter as usize].letters());
            self.cursor += 1;
        }
    }

    /// Letters produced so far (at least as many as requested by `prefix`).
    pub fn produced(&self) -> usize {
        self.buffer.len()
    }

    pub fn prefix(&mut self, n: usize) -> Word {
        self.grow_to(n);
        Word::from_letters(&self.morphism.target, self.buffer[..n].to_vec())
            .expect("images are over the target")
    }
}

impl Iterator for FixedPoint<'_> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        self.grow_to(self.emitted + 1);
        let l = self.buffer[self.emitted];
        self.emitted += 1;
        Some(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::concat;
    use proptest::prelude::*;

    fn bin(s: &str) -> Word {
        Word::parse(&Alphabet::binary(), s).unwrap()
    }

    fn ternary() -> Morphism {
        Morphism::endo(
            &Alphabet::new("012").unwrap(),
            &["01201", "020121", "0212021"],
        )
        .unwrap()
    }

    #[test]
    fn apply_examples() {
        let phi = Morphism::fibonacci();
        assert_eq!(phi.apply(&bin("0")).unwrap(), bin("01"));
        assert_eq!(phi.apply(&bin("01")).unwrap(), bin("010"));
        assert_eq!(phi.apply(&bin("")).unwrap(), bin(""));
        let ab = Word::parse(&Alphabet::ab(), "a").unwrap();
        assert!(phi.apply(&ab).is_err());
    }

    #[test]
    fn non_erasing() {
        assert!(Morphism::fibonacci().is_non_erasing());
        let erasing = Morphism::endo(&Alphabet::binary(), &["01", ""]).unwrap();
        assert!(!erasing.is_non_erasing());
        assert!(ternary().is_non_erasing());
    }

    #[test]
    fn prolongability() {
        let phi = Morphism::fibonacci();
        assert!(phi.is_prolongable('0').unwrap());
        assert!(!phi.is_prolongable('1').unwrap());
        let id = Morphism::endo(&Alphabet::new("a").unwrap(), &["a"]).unwrap();
        assert!(!id.is_prolongable('a').unwrap());
        // 1 is mortal, so 0 ↦ 01 never grows
        let mortal = Morphism::endo(&Alphabet::binary(), &["01", ""]).unwrap();
        assert!(!mortal.is_prolongable('0').unwrap());
        // 0 ↦ 012, 1 ↦ ε, 2 ↦ 2: x = 12 still contains the immortal 2
        let mixed = Morphism::endo(&Alphabet::new("012").unwrap(), &["012", "", "2"]).unwrap();
        assert!(mixed.is_prolongable('0').unwrap());
        assert_eq!(
            mixed.fixed_point_prefix('0', 6).unwrap().to_string(),
            "012222"
        );
        let cross = Morphism::new(Alphabet::binary(), Alphabet::ab(), vec![
            Word::parse(&Alphabet::ab(), "a").unwrap(),
            Word::parse(&Alphabet::ab(), "b").unwrap(),
        ]).unwrap();
        assert!(cross.is_prolongable('0').is_err());
    }

    #[test]
    fn fixed_point_examples() {
        let phi = Morphism::fibonacci();
        assert_eq!(phi.fixed_point_prefix('0', 13).unwrap(), bin("0100101001001"));
        assert_eq!(phi.fixed_point_prefix('0', 2).unwrap(), bin("01"));
        assert_eq!(
            ternary().fixed_point_prefix('0', 5).unwrap().to_string(),
            "01201"
        );
        assert_eq!(phi.fixed_point_prefix('1', 3), Err(Error::NotProlongable('1')));
        assert!(phi.fixed_point_prefix('0', 0).is_err());
    }

    #[test]
    fn lazy_expansion_stays_linear() {
        let phi = Morphism::fibonacci();
        let mut fp = phi.fixed_point('0').unwrap();
        let _ = fp.prefix(10_000);
        assert!(fp.produced() <= 10_001);
        let streamed: Vec<u8> = phi.fixed_point('0').unwrap().take(50).collect();
        assert_eq!(streamed, fp.prefix(50).letters());
    }

    #[test]
    fn fixed_point_law() {
        let phi = Morphism::fibonacci();
        let t = ternary();
        for (h, n) in [(&phi, 10_000usize), (&t, 2_000)] {
            let p = h.fixed_point_prefix('0', n).unwrap();
            assert!(p.is_prefix_of(&h.apply(&p).unwrap()));
        }
    }

    #[test]
    fn iterate_lengths_are_fibonacci() {
        let phi = Morphism::fibonacci();
        let mut w = bin("0");
        let mut lens = vec![w.len()];
        for _ in 0..10 {
            w = phi.apply(&w).unwrap();
            lens.push(w.len());
        }
        assert_eq!(lens, [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]);
    }

    proptest! {
        #[test]
        fn apply_is_a_monoid_morphism(
            u in proptest::collection::vec(0u8..3, 0..20),
            v in proptest::collection::vec(0u8..3, 0..20),
        ) {
            let h = ternary();
            let alpha = h.source().clone();
            let u = Word::from_letters(&alpha, u).unwrap();
            let v = Word::from_letters(&alpha, v).unwrap();
            let lhs = h.apply(&concat(&u, &v).unwrap()).unwrap();
            let rhs = concat(&h.apply(&u).unwrap(), &h.apply(&v).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prefixes_are_consistent(n in 1usize..500, m in 1usize..500) {
            let phi = Morphism::fibonacci();
            let (n, m) = (n.min(m), n.max(m));
            let short = phi.fixed_point_prefix('0', n).unwrap();
            let long = phi.fixed_point_prefix('0', m).unwrap();
            prop_assert!(short.is_prefix_of(&long));
        }
    }
}
