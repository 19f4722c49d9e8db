//! Brute-force reference implementations.
//!
//! These share no counting logic with the main modules: they work on the
//! words' string form and enumerate naively. They are exponential or cubic
//! and guarded accordingly.

use std::collections::BTreeSet;

use crate::error::{guard, Error, Result};
use crate::words::{Alphabet, Word};

pub const SP_ENUMERATE_MAX_LEN: usize = 20;
pub const SQUARE_SCAN_MAX_LEN: usize = 1000;

fn is_pal(chars: &[char]) -> bool {
    let n = chars.len();
    (0..n / 2).all(|i| chars[i] == chars[n - 1 - i])
}

/// Every distinct nonempty palindromic subsequence, by enumerating all
/// `2^|w|` position subsets.
pub fn brute_sp_enumerate(w: &Word) -> Result<BTreeSet<Word>> {
    guard("brute-force subsequence length", w.len() as u64, SP_ENUMERATE_MAX_LEN as u64)?;
    let chars: Vec<char> = w.to_string().chars().collect();
    let mut found = BTreeSet::new();
    let mut picked = Vec::with_capacity(chars.len());
    for mask in 1u32..(1u32 << chars.len()) {
        picked.clear();
        picked.extend((0..chars.len()).filter(|i| mask >> i & 1 == 1).map(|i| chars[i]));
        if is_pal(&picked) {
            found.insert(picked.iter().collect::<String>());
        }
    }
    found
        .into_iter()
        .map(|s| Word::parse(w.alphabet(), &s))
        .collect()
}

/// Number of distinct nonempty palindromic subsequences, by listing every
/// palindrome of length at most `|w|` over the alphabet and testing each for
/// subsequence membership with a greedy scan.
pub fn brute_sp_by_candidates(w: &Word) -> Result<u64> {
    guard("brute-force subsequence length", w.len() as u64, SP_ENUMERATE_MAX_LEN as u64)?;
    let text: Vec<char> = w.to_string().chars().collect();
    let symbols = w.alphabet().symbols();
    let embeds = |cand: &[char]| {
        let mut it = text.iter();
        cand.iter().all(|c| it.any(|t| t == c))
    };
    let mut count = 0;
    let mut half = vec![Vec::<char>::new()];
    for half_len in 0..=text.len().div_ceil(2) {
        for h in &half {
            for odd in [false, true] {
                let len = 2 * half_len + usize::from(odd);
                if len == 0 || len > text.len() {
                    continue;
                }
                let middles: Vec<Option<char>> = if odd {
                    symbols.iter().copied().map(Some).collect()
                } else {
                    vec![None]
                };
                for m in middles {
                    let cand: Vec<char> = h
                        .iter()
                        .copied()
                        .chain(m)
                        .chain(h.iter().rev().copied())
                        .collect();
                    if embeds(&cand) {
                        count += 1;
                    }
                }
            }
        }
        half = half
            .iter()
            .flat_map(|h| symbols.iter().map(move |&c| [h.as_slice(), &[c]].concat()))
            .filter(|h| {
                let mut it = text.iter();
                h.iter().all(|c| it.any(|t| t == c))
            })
            .collect();
    }
    Ok(count)
}

/// Occurrences of `pattern` in `text` by comparing every window.
pub fn brute_count(pattern: &Word, text: &Word) -> Result<u64> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    pattern.same_alphabet(text)?;
    let p: Vec<char> = pattern.to_string().chars().collect();
    let t: Vec<char> = text.to_string().chars().collect();
    if p.len() > t.len() {
        return Ok(0);
    }
    Ok((0..=t.len() - p.len())
        .filter(|&i| t[i..i + p.len()] == p[..])
        .count() as u64)
}

/// Whether `w` contains a square `xx`, checking every start and half-length.
pub fn brute_square_scan(w: &Word) -> Result<bool> {
    guard("brute-force square scan length", w.len() as u64, SQUARE_SCAN_MAX_LEN as u64)?;
    let c: Vec<char> = w.to_string().chars().collect();
    for start in 0..c.len() {
        for half in 1..=(c.len() - start) / 2 {
            if c[start..start + half] == c[start + half..start + 2 * half] {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All distinct length-`k` factors as strings, by slicing every window.
pub fn brute_factor_set(w: &Word, k: usize) -> BTreeSet<String> {
    let s = w.to_string();
    let chars: Vec<char> = s.chars().collect();
    if k > chars.len() {
        return BTreeSet::new();
    }
    (0..=chars.len() - k)
        .map(|i| chars[i..i + k].iter().collect())
        .collect()
}

/// All distinct nonempty palindromic factors, checking every `(i, j)` window.
pub fn brute_pal_factors(w: &Word) -> BTreeSet<String> {
    let chars: Vec<char> = w.to_string().chars().collect();
    let mut out = BTreeSet::new();
    for i in 0..chars.len() {
        for j in i + 1..=chars.len() {
            if is_pal(&chars[i..j]) {
                out.insert(chars[i..j].iter().collect());
            }
        }
    }
    out
}

/// `s(n)` by growing words one letter at a time and rescanning each
/// candidate in full with [`brute_square_scan`].
pub fn brute_square_free_count(alphabet: &Alphabet, n: usize) -> Result<u64> {
    let mut layer = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for &c in alphabet.symbols() {
                let candidate = format!("{w}{c}");
                if !brute_square_scan(&Word::parse(alphabet, &candidate)?)? {
                    next.push(candidate);
                }
            }
        }
        layer = next;
    }
    Ok(layer.len() as u64)
}

/// Every word of length `n` over `alphabet`, in lexicographic order.
pub fn all_words(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    let k = alphabet.len();
    let total = k.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut s = vec![0u8; n];
            for slot in s.iter_mut().rev() {
                *slot = (code % k) as u8;
                code /= k;
            }
            Word::from_indices(alphabet, s)
        })
        .collect()
}
