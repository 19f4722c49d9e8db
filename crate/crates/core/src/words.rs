//! Alphabets, finite words and morphisms.
//!
//! A [`Word`] stores symbol indices into its [`Alphabet`], so ordering of
//! words is lexicographic under the alphabet's declared symbol order.
//! Words serialize as plain strings of single-character symbols.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of distinct single-character symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    symbols: Arc<[char]>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > 256 {
            return Err(Error::AlphabetTooLarge);
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Self {
            symbols: symbols.into(),
        })
    }

    /// `{0, 1}`, the alphabet of the Fibonacci and Thue–Morse words.
    pub fn binary() -> Self {
        Self {
            symbols: Arc::from(['0', '1']),
        }
    }

    /// `{a, b}`.
    pub fn ab() -> Self {
        Self {
            symbols: Arc::from(['a', 'b']),
        }
    }

    /// `{a, b, c}`.
    pub fn ternary() -> Self {
        Self {
            symbols: Arc::from(['a', 'b', 'c']),
        }
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

    pub fn contains(&self, c: char) -> bool {
        self.symbols.contains(&c)
    }

    pub fn index_of(&self, c: char) -> Result<u8> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .map(|i| i as u8)
            .ok_or(Error::SymbolNotInAlphabet(c))
    }

    pub fn symbol(&self, index: u8) -> char {
        self.symbols[index as usize]
    }
}

/// An immutable finite word over an [`Alphabet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Word {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            symbols: Vec::new(),
        }
    }

    /// Parse a string of single-character symbols; `""` is the empty word.
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| alphabet.index_of(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet: alphabet.clone(),
            symbols,
        })
    }

    /// Build a word from raw symbol indices.
    ///
    /// Panics if an index is outside the alphabet.
    pub fn from_indices(alphabet: &Alphabet, symbols: Vec<u8>) -> Self {
        assert!(
            symbols.iter().all(|&s| (s as usize) < alphabet.len()),
            "symbol index outside alphabet"
        );
        Self {
            alphabet: alphabet.clone(),
            symbols,
        }
    }

    pub(crate) fn from_indices_unchecked(alphabet: &Alphabet, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < alphabet.len()));
        Self {
            alphabet: alphabet.clone(),
            symbols,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol indices into the alphabet.
    pub fn indices(&self) -> &[u8] {
        &self.symbols
    }

    pub fn symbol_at(&self, i: usize) -> Option<char> {
        self.symbols.get(i).map(|&s| self.alphabet.symbol(s))
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().map(|&s| self.alphabet.symbol(s))
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self::from_indices_unchecked(&self.alphabet, symbols)
    }

    /// The factor occupying `start..end`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Self::from_indices_unchecked(&self.alphabet, self.symbols[start..end].to_vec())
    }

    /// The first `len` symbols (or the whole word if shorter).
    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0, len.min(self.len()))
    }

    pub fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Ok(Self::from_indices_unchecked(&self.alphabet, symbols))
    }

    /// `|w|_a`, the number of positions holding `a`.
    pub fn letter_count(&self, a: char) -> Result<usize> {
        let a = self.alphabet.index_of(a)?;
        Ok(self.symbols.iter().filter(|&&s| s == a).count())
    }

    /// Whether `self` occurs contiguously in `x`. The empty word is a factor of every word.
    pub fn is_factor_of(&self, x: &Word) -> Result<bool> {
        self.same_alphabet(x)?;
        if self.is_empty() {
            return Ok(true);
        }
        Ok(x.symbols.windows(self.len()).any(|w| w == self.symbols))
    }

    /// Whether `self` is a (scattered) subsequence of `x`.
    pub fn is_scattered_subword_of(&self, x: &Word) -> Result<bool> {
        self.same_alphabet(x)?;
        let mut rest = x.symbols.iter();
        Ok(self.symbols.iter().all(|s| rest.any(|t| t == s)))
    }

    /// All distinct factors of length `k`, in lexicographic order.
    ///
    /// Returns an empty set when `k > |w|`.
    pub fn distinct_factors(&self, k: usize) -> BTreeSet<Word> {
        if k > self.len() {
            return BTreeSet::new();
        }
        if k == 0 {
            return BTreeSet::from([Word::empty(&self.alphabet)]);
        }
        let slices: BTreeSet<&[u8]> = self.symbols.windows(k).collect();
        slices
            .into_iter()
            .map(|s| Self::from_indices_unchecked(&self.alphabet, s.to_vec()))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        for c in self.chars() {
            f.write_char(c)?;
        }
        Ok(())
    }
}

/// Free-function form of [`Word::concat`].
pub fn concat(u: &Word, v: &Word) -> Result<Word> {
    u.concat(v)
}

/// A morphism from the free monoid over `domain` to the one over `codomain`,
/// given by one nonempty image per domain symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of the `i`-th domain symbol.
    pub fn new(domain: Alphabet, codomain: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::ImageCount {
                expected: domain.len(),
                got: images.len(),
            });
        }
        for (i, image) in images.iter().enumerate() {
            if image.alphabet() != &codomain {
                return Err(Error::AlphabetMismatch);
            }
            if image.is_empty() {
                return Err(Error::EmptyImage(domain.symbol(i as u8)));
            }
        }
        Ok(Self {
            domain,
            codomain,
            images,
        })
    }

    /// Build from `(symbol, image)` string pairs.
    pub fn from_pairs(domain: Alphabet, codomain: Alphabet, pairs: &[(char, &str)]) -> Result<Self> {
        let mut images = vec![None; domain.len()];
        for &(c, img) in pairs {
            let i = domain.index_of(c)? as usize;
            images[i] = Some(Word::parse(&codomain, img)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    Error::Domain(format!("no image for {:?}", domain.symbol(i as u8)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, images)
    }

    /// The Fibonacci morphism `0 -> 01, 1 -> 0`.
    pub fn fibonacci() -> Self {
        let b = Alphabet::binary();
        Self::from_pairs(b.clone(), b, &[('0', "01"), ('1', "0")]).expect("valid morphism")
    }

    /// The Thue–Morse morphism `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        let b = Alphabet::binary();
        Self::from_pairs(b.clone(), b, &[('0', "01"), ('1', "10")]).expect("valid morphism")
    }

    /// `δ: {a,b,c}* -> {a,b}*` with `a -> abb, b -> ab, c -> a`.
    pub fn delta() -> Self {
        Self::from_pairs(
            Alphabet::ternary(),
            Alphabet::ab(),
            &[('a', "abb"), ('b', "ab"), ('c', "a")],
        )
        .expect("valid morphism")
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn image(&self, c: char) -> Result<&Word> {
        Ok(&self.images[self.domain.index_of(c)? as usize])
    }

    pub(crate) fn image_indices(&self, index: u8) -> &[u8] {
        self.images[index as usize].indices()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet() != &self.domain {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = Vec::new();
        for &s in w.indices() {
            out.extend_from_slice(self.image_indices(s));
        }
        Ok(Word::from_indices_unchecked(&self.codomain, out))
    }
}

/// Free-function form of [`Morphism::apply`].
pub fn apply_morphism(m: &Morphism, w: &Word) -> Result<Word> {
    m.apply(w)
}
