//! Palindromic factors `PAL(w)`, scattered palindromic subsequences
//! `SPAL(w)`, and palindrome densities over Fibonacci prefixes.
//!
//! `P(w) = |PAL(w)|` counts distinct nonempty palindromic factors and
//! `SP(w) = |SPAL(w)|` distinct nonempty palindromic subsequences; for
//! nonempty `w`, `P(w) <= |w| <= SP(w)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::density::{count_occurrences, DensitySample};
use crate::eertree::Eertree;
use crate::error::{domain, guard, Result};
use crate::exact::rational_u64;
use crate::fibonacci::infinite_prefix;
use crate::words::{Alphabet, Word};

/// Up to this length [`pal_factors`] enumerates directly; above it the
/// palindromic tree is used.
pub const DIRECT_PAL_LIMIT: usize = 4096;

/// Longest word accepted by [`sp_count`]. The interval table holds
/// `n(n+1)/2` exact integers of up to `n/2` bits each.
pub const SP_MAX_LEN: usize = 2048;

/// Largest palindrome length tabulated by [`pal_density_table`].
pub const PAL_TABLE_MAX_LEN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeReport {
    pub word: Word,
    pub pal_factors: BTreeSet<Word>,
    pub p_count: usize,
    pub sp_count: Option<BigUint>,
}

impl PalindromeReport {
    /// Report with both `P(w)` and `SP(w)` filled in.
    pub fn full(w: &Word) -> Result<Self> {
        let mut report = pal_factors(w);
        report.sp_count = Some(sp_count(w)?);
        Ok(report)
    }
}

pub fn is_palindrome(w: &Word) -> bool {
    let s = w.indices();
    s.iter().eq(s.iter().rev())
}

/// Whether the decimal digits of `n` read the same both ways.
pub fn is_numeric_palindrome(n: i128) -> Result<bool> {
    if n < 0 {
        return domain(format!("expected a non-negative integer, got {n}"));
    }
    let digits = n.to_string();
    Ok(digits.bytes().eq(digits.bytes().rev()))
}

/// The distinct nonempty palindromic factors of `w` (and their count).
pub fn pal_factors(w: &Word) -> PalindromeReport {
    let pals = if w.len() <= DIRECT_PAL_LIMIT {
        pal_factors_direct(w)
    } else {
        pal_factors_eertree(w)
    };
    PalindromeReport {
        word: w.clone(),
        p_count: pals.len(),
        pal_factors: pals,
        sp_count: None,
    }
}

/// Center expansion. For each center the maximal palindrome is inserted first
/// and then its shrinkings, stopping at the first one already known: the
/// set stays closed under removing both end symbols, so everything further
/// in is present too.
pub fn pal_factors_direct(w: &Word) -> BTreeSet<Word> {
    let s = w.indices();
    let n = s.len();
    let mut seen: HashSet<&[u8]> = HashSet::new();
    for center in 0..(2 * n).saturating_sub(1) {
        let (mut lo, mut hi) = (center / 2, center / 2 + center % 2);
        if s[lo] != s[hi] {
            continue;
        }
        while lo > 0 && hi + 1 < n && s[lo - 1] == s[hi + 1] {
            lo -= 1;
            hi += 1;
        }
        while seen.insert(&s[lo..=hi]) && hi - lo >= 2 {
            lo += 1;
            hi -= 1;
        }
    }
    seen.into_iter()
        .map(|f| Word::from_indices(w.alphabet(), f.to_vec()))
        .collect()
}

pub fn pal_factors_eertree(w: &Word) -> BTreeSet<Word> {
    Eertree::build(w.indices())
        .spans()
        .map(|(a, b)| w.factor(a, b))
        .collect()
}

/// `SP(w)`: the number of distinct nonempty palindromic subsequences of `w`,
/// by interval dynamic programming over `w[i..=j]`.
pub fn sp_count(w: &Word) -> Result<BigUint> {
    guard("scattered palindrome word length", w.len() as u64, SP_MAX_LEN as u64)?;
    Ok(sp_count_unchecked(w.indices()))
}

fn sp_count_unchecked(s: &[u8]) -> BigUint {
    let n = s.len();
    if n == 0 {
        return BigUint::zero();
    }
    // next_same[i]: next index after i with the same symbol (n if none)
    // prev_same[j]: previous index before j with the same symbol
    let mut next_same = vec![n; n];
    let mut prev_same: Vec<Option<usize>> = vec![None; n];
    let mut last: [Option<usize>; 256] = [None; 256];
    for (j, &c) in s.iter().enumerate() {
        if let Some(i) = last[c as usize] {
            next_same[i] = j;
            prev_same[j] = Some(i);
        }
        last[c as usize] = Some(j);
    }

    // Upper triangle, column-major: entry (i, j) with i <= j.
    let idx = |i: usize, j: usize| j * (j + 1) / 2 + i;
    let mut table: Vec<BigUint> = Vec::with_capacity(n * (n + 1) / 2);
    let zero = BigUint::zero();
    for j in 0..n {
        let column_start = table.len();
        table.resize(column_start + j + 1, BigUint::zero());
        for i in (0..=j).rev() {
            let value = if i == j {
                BigUint::one()
            } else {
                // dp over an index range that may be empty
                let get = |table: &Vec<BigUint>, a: usize, b: Option<usize>| -> BigUint {
                    match b {
                        Some(b) if a <= b => table[idx(a, b)].clone(),
                        _ => zero.clone(),
                    }
                };
                let inner = get(&table, i + 1, j.checked_sub(1));
                if s[i] == s[j] {
                    let low = next_same[i];
                    let high = prev_same[j].expect("s[i] == s[j] with i < j");
                    let doubled = inner * 2u32;
                    if low > high {
                        doubled + 2u32
                    } else if low == high {
                        doubled + 1u32
                    } else {
                        doubled - get(&table, low + 1, high.checked_sub(1))
                    }
                } else {
                    let left = get(&table, i, Some(j - 1));
                    let right = get(&table, i + 1, Some(j));
                    left + right - inner
                }
            };
            table[idx(i, j)] = value;
        }
    }
    table[idx(0, n - 1)].clone()
}

/// `SP(w a) - SP(w)`: scattered palindromes created by appending `a`.
pub fn sp_delta(w: &Word, a: char) -> Result<BigUint> {
    let extended = w.concat(&Word::parse(w.alphabet(), &a.to_string())?)?;
    let after = sp_count(&extended)?;
    let before = sp_count(w)?;
    Ok(after - before)
}

/// All palindromes of length `len` over `alphabet`, in lexicographic order.
pub fn palindromes_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let half = len.div_ceil(2);
    let k = alphabet.len();
    let total = k.pow(half as u32);
    (0..total)
        .map(|mut code| {
            let mut left = vec![0u8; half];
            for slot in left.iter_mut().rev() {
                *slot = (code % k) as u8;
                code /= k;
            }
            let mut full = left.clone();
            full.extend(left[..len / 2].iter().rev());
            Word::from_indices(alphabet, full)
        })
        .collect()
}

/// Density of every length-`len` binary palindrome in the first `prefix_len`
/// symbols of the infinite Fibonacci word. Absent palindromes map to 0.
pub fn pal_density_table(prefix_len: u64, len: usize) -> Result<BTreeMap<Word, DensitySample>> {
    if len == 0 || len > PAL_TABLE_MAX_LEN {
        return domain(format!(
            "palindrome length must be in 1..={PAL_TABLE_MAX_LEN}, got {len}"
        ));
    }
    if prefix_len < len as u64 {
        return domain(format!(
            "prefix length {prefix_len} is shorter than palindrome length {len}"
        ));
    }
    let text = infinite_prefix(prefix_len)?;
    palindromes_of_length(&Alphabet::binary(), len)
        .into_iter()
        .map(|p| {
            let count = count_occurrences(&p, &text)?;
            Ok((p, DensitySample::new(prefix_len, rational_u64(count, prefix_len))))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> Word {
        Word::parse(&Alphabet::ab(), s).unwrap()
    }

    fn strings(set: &BTreeSet<Word>) -> Vec<String> {
        set.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn palindrome_predicates() {
        assert!(is_palindrome(&ab("aba")));
        assert!(!is_palindrome(&ab("ab")));
        assert!(is_palindrome(&ab("")));
        assert_eq!(is_numeric_palindrome(12321), Ok(true));
        assert_eq!(is_numeric_palindrome(10), Ok(false));
        assert_eq!(is_numeric_palindrome(7), Ok(true));
        assert_eq!(is_numeric_palindrome(0), Ok(true));
        assert!(is_numeric_palindrome(-121).is_err());
    }

    #[test]
    fn pal_factors_of_abaa() {
        let r = pal_factors(&ab("abaa"));
        assert_eq!(strings(&r.pal_factors), ["a", "aa", "aba", "b"]);
        assert_eq!(r.p_count, 4);
        assert!(pal_factors(&ab("")).pal_factors.is_empty());
    }

    #[test]
    fn pal_factors_of_abab_are_factors_only() {
        // aa and bb are subsequences of abab but not factors
        let r = pal_factors(&ab("abab"));
        assert_eq!(strings(&r.pal_factors), ["a", "aba", "b", "bab"]);
        assert_eq!(r.p_count, 4);
    }

    #[test]
    fn direct_and_eertree_agree() {
        for s in ["", "a", "aaaa", "abaa", "abab", "abbaabba", "babbbabaabab"] {
            let w = ab(s);
            assert_eq!(pal_factors_direct(&w), pal_factors_eertree(&w), "{s}");
        }
    }

    #[test]
    fn sp_examples() {
        assert_eq!(sp_count(&ab("abaa")).unwrap(), BigUint::from(5u32));
        assert_eq!(sp_count(&ab("abab")).unwrap(), BigUint::from(6u32));
        assert_eq!(sp_count(&ab("a")).unwrap(), BigUint::from(1u32));
        assert_eq!(sp_count(&ab("")).unwrap(), BigUint::zero());
        let too_long = Word::from_indices(&Alphabet::ab(), vec![0; SP_MAX_LEN + 1]);
        assert!(sp_count(&too_long).is_err());
    }

    #[test]
    fn sp_delta_examples() {
        assert_eq!(sp_delta(&ab("ab"), 'a').unwrap(), BigUint::from(2u32));
        assert_eq!(sp_delta(&ab("aa"), 'a').unwrap(), BigUint::from(1u32));
        assert_eq!(sp_delta(&ab(""), 'a').unwrap(), BigUint::from(1u32));
        assert!(sp_delta(&ab("a"), 'z').is_err());
    }

    #[test]
    fn full_report() {
        let r = PalindromeReport::full(&ab("abaa")).unwrap();
        assert_eq!(r.p_count, 4);
        assert_eq!(r.sp_count, Some(BigUint::from(5u32)));
    }

    #[test]
    fn palindrome_generation() {
        let p: Vec<String> = palindromes_of_length(&Alphabet::binary(), 3)
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(p, ["000", "010", "101", "111"]);
        assert_eq!(palindromes_of_length(&Alphabet::binary(), 4).len(), 4);
    }

    #[test]
    fn density_table_examples() {
        let t = pal_density_table(13, 2).unwrap();
        let get = |s: &str| &t[&Word::parse(&Alphabet::binary(), s).unwrap()];
        assert!(get("00").value > num_rational::BigRational::zero());
        assert!(get("11").value.is_zero());

        let t = pal_density_table(1000, 1).unwrap();
        let total: num_rational::BigRational = t.values().map(|d| d.value.clone()).sum();
        assert!(total.is_one());

        assert!(pal_density_table(5, 9).is_err());
        assert!(pal_density_table(2, 3).is_err());
    }
}
