//! Fuzzy Fibonacci words: each symbol carries the membership degree of its
//! letter, and a word's membership is the minimum over its symbols.

use serde::Serialize;

use crate::error::{domain, guard, Error, Result};
use crate::words::{Alphabet, Word};

pub const FUZZY_MAX_N: u64 = 30;

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyWord {
    symbols: Word,
    memberships: Vec<f64>,
}

/// Serialized form of one fuzzy symbol.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzySymbol {
    pub symbol: char,
    pub membership: f64,
}

fn check_membership(mu: f64) -> Result<()> {
    if (0.0..=1.0).contains(&mu) {
        Ok(())
    } else {
        domain(format!("membership degree must lie in [0, 1], got {mu}"))
    }
}

impl FuzzyWord {
    pub fn new(symbols: Word, memberships: Vec<f64>) -> Result<Self> {
        if symbols.len() != memberships.len() {
            return domain(format!(
                "{} symbols but {} membership degrees",
                symbols.len(),
                memberships.len()
            ));
        }
        memberships.iter().try_for_each(|&m| check_membership(m))?;
        Ok(Self {
            symbols,
            memberships,
        })
    }

    /// Attach `degree(letter)` to every symbol of `word`.
    pub fn from_letter_degrees(word: Word, degree: impl Fn(char) -> f64) -> Result<Self> {
        let memberships = word.chars().map(degree).collect();
        Self::new(word, memberships)
    }

    pub fn symbols(&self) -> &Word {
        &self.symbols
    }

    pub fn memberships(&self) -> &[f64] {
        &self.memberships
    }

    pub fn len(&self) -> usize {
        self.memberships.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memberships.is_empty()
    }

    pub fn concat(&self, other: &FuzzyWord) -> Result<FuzzyWord> {
        let symbols = self.symbols.concat(&other.symbols)?;
        let mut memberships = self.memberships.clone();
        memberships.extend_from_slice(&other.memberships);
        Ok(Self {
            symbols,
            memberships,
        })
    }

    pub fn entries(&self) -> Vec<FuzzySymbol> {
        self.symbols
            .chars()
            .zip(&self.memberships)
            .map(|(symbol, &membership)| FuzzySymbol { symbol, membership })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.entries()).expect("plain data serializes")
    }
}

/// `F(n) = F(n-1) F(n-2)` over `{a, b}` with `F(0) = b`, `F(1) = a`; every
/// `a` carries `mu_a` and every `b` carries `mu_b`.
pub fn fuzzy_fib_word(n: u64, mu_a: f64, mu_b: f64) -> Result<FuzzyWord> {
    check_membership(mu_a)?;
    check_membership(mu_b)?;
    guard("fuzzy Fibonacci index", n, FUZZY_MAX_N)?;
    let alphabet = Alphabet::ab();
    let (mut older, mut newer) = (vec![1u8], vec![0u8]);
    let word = if n == 0 {
        older
    } else {
        for _ in 1..n {
            let mut next = newer.clone();
            next.extend_from_slice(&older);
            older = std::mem::replace(&mut newer, next);
        }
        newer
    };
    FuzzyWord::from_letter_degrees(Word::from_indices(&alphabet, word), |c| {
        if c == 'a' {
            mu_a
        } else {
            mu_b
        }
    })
}

/// Minimum membership over all symbols.
pub fn word_membership(fw: &FuzzyWord) -> Result<f64> {
    fw.memberships
        .iter()
        .copied()
        .reduce(f64::min)
        .ok_or_else(|| Error::Domain("membership of an empty fuzzy word is undefined".into()))
}
