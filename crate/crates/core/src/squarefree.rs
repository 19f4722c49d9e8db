//! Square-free words: detection, enumeration and the `s(n)` bound table,
//! the Thue–Morse word, and decoding through `δ: a -> abb, b -> ab, c -> a`.

use num_bigint::BigUint;

use crate::error::{domain, guard, Error, Result};
use crate::fibonacci::morphic_prefix;
use crate::words::{Alphabet, Morphism, Word};

/// Longest length [`enumerate_square_free`] will backtrack to.
pub const ENUMERATION_MAX_LEN: usize = 20;

/// Longest Thue–Morse prefix materialized.
pub const THUE_MORSE_MAX_LEN: u64 = 1 << 20;

/// True iff no factor has the form `xx` with `x` nonempty.
///
/// For each period `p`, scans for a run of `p` consecutive positions with
/// `w[i] == w[i + p]`; such a run is exactly a square of period `p`.
pub fn is_square_free(w: &Word) -> bool {
    let s = w.indices();
    (1..=s.len() / 2).all(|p| {
        let mut run = 0;
        for i in 0..s.len() - p {
            if s[i] == s[i + p] {
                run += 1;
                if run == p {
                    return false;
                }
            } else {
                run = 0;
            }
        }
        true
    })
}

/// Whether appending the last symbol of `s` created a square, given that
/// `s[..len-1]` was square-free: only suffix squares need checking.
fn has_square_suffix(s: &[u8]) -> bool {
    let n = s.len();
    (1..=n / 2).any(|p| s[n - 2 * p..n - p] == s[n - p..])
}

/// The alphabet used for size 2 (`{a, b}`) or 3 (`{a, b, c}`).
pub fn square_free_alphabet(alphabet_size: usize) -> Result<Alphabet> {
    match alphabet_size {
        2 => Ok(Alphabet::ab()),
        3 => Ok(Alphabet::ternary()),
        other => domain(format!("alphabet size must be 2 or 3, got {other}")),
    }
}

/// All square-free words of length exactly `n`, in lexicographic order.
pub fn enumerate_square_free(alphabet_size: usize, n: usize) -> Result<Vec<Word>> {
    let alphabet = square_free_alphabet(alphabet_size)?;
    guard("square-free enumeration length", n as u64, ENUMERATION_MAX_LEN as u64)?;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    extend(&alphabet, n, &mut buf, &mut out);
    Ok(out)
}

fn extend(alphabet: &Alphabet, n: usize, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
    if buf.len() == n {
        out.push(Word::from_indices(alphabet, buf.clone()));
        return;
    }
    for c in 0..alphabet.len() as u8 {
        buf.push(c);
        if !has_square_suffix(buf) {
            extend(alphabet, n, buf, out);
        }
        buf.pop();
    }
}

/// `s(n)`, the number of square-free words of length `n`.
pub fn count_square_free(alphabet_size: usize, n: usize) -> Result<u64> {
    Ok(enumerate_square_free(alphabet_size, n)?.len() as u64)
}

/// One row of the ternary `s(n)` table against `6·1.032^n <= s(n) <= 6·1.379^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub s_n: BigUint,
    pub lower: f64,
    pub upper: f64,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl BoundRow {
    pub fn new(n: usize, s_n: u64) -> Self {
        let lower = 6.0 * 1.032f64.powi(n as i32);
        let upper = 6.0 * 1.379f64.powi(n as i32);
        let s = s_n as f64;
        Self {
            n,
            s_n: BigUint::from(s_n),
            lower,
            upper,
            lower_holds: lower <= s,
            upper_holds: s <= upper,
        }
    }
}

/// Ternary `s(n)` with both bound flags for `n = 1..=n_max`. Reports, never asserts.
pub fn brandenburg_table(n_max: usize) -> Result<Vec<BoundRow>> {
    guard("bound table n_max", n_max as u64, ENUMERATION_MAX_LEN as u64)?;
    (1..=n_max)
        .map(|n| Ok(BoundRow::new(n, count_square_free(3, n)?)))
        .collect()
}

/// Prefix of the Thue–Morse word, the fixed point of `0 -> 01, 1 -> 10`.
pub fn thue_morse_prefix(len: u64) -> Result<Word> {
    guard("Thue-Morse prefix length", len, THUE_MORSE_MAX_LEN)?;
    Ok(morphic_prefix(&Morphism::thue_morse(), 0, len as usize))
}

/// True iff some factor has the form `axaxa` (`a` a symbol, `x` a word).
pub fn has_overlap(w: &Word) -> bool {
    let s = w.indices();
    let n = s.len();
    // axaxa has period p = |ax| and length 2p + 1
    (1..=n.saturating_sub(1) / 2).any(|p| {
        let mut run = 0;
        for i in 0..n - p {
            if s[i] == s[i + p] {
                run += 1;
                if run == p + 1 {
                    return true;
                }
            } else {
                run = 0;
            }
        }
        false
    })
}

const BLOCKS: [(&[u8], u8); 3] = [(&[0, 1, 1], 0), (&[0, 1], 1), (&[0], 2)];

/// The unique `b` over `{a, b, c}` with `δ(b) = x`, by greedy longest-match
/// factorization of `x` into the blocks `abb`, `ab`, `a`.
pub fn delta_decode(x: &Word) -> Result<Word> {
    if x.alphabet() != &Alphabet::ab() {
        return Err(Error::AlphabetMismatch);
    }
    let s = x.indices();
    if s.first() == Some(&1) {
        return Err(Error::Factorization(0));
    }
    let mut out = Vec::with_capacity(s.len());
    let mut pos = 0;
    while pos < s.len() {
        let (block, letter) = BLOCKS
            .iter()
            .find(|(block, _)| s[pos..].starts_with(block))
            .ok_or(Error::Factorization(pos))?;
        out.push(*letter);
        pos += block.len();
    }
    Ok(Word::from_indices(&Alphabet::ternary(), out))
}

/// Every factorization of `x` into `δ`-blocks, by exhaustive backtracking.
/// Used to confirm that [`delta_decode`]'s greedy choice is the only one.
pub fn delta_factorizations(x: &Word) -> Result<Vec<Word>> {
    if x.alphabet() != &Alphabet::ab() {
        return Err(Error::AlphabetMismatch);
    }
    let mut all = Vec::new();
    let mut buf = Vec::new();
    backtrack_blocks(x.indices(), 0, &mut buf, &mut all);
    Ok(all)
}

fn backtrack_blocks(s: &[u8], pos: usize, buf: &mut Vec<u8>, all: &mut Vec<Word>) {
    if pos == s.len() {
        all.push(Word::from_indices(&Alphabet::ternary(), buf.clone()));
        return;
    }
    for (block, letter) in BLOCKS {
        if s[pos..].starts_with(block) {
            buf.push(letter);
            backtrack_blocks(s, pos + block.len(), buf, all);
            buf.pop();
        }
    }
}
