//! Fibonacci and k-Fibonacci numbers, Binet's formula and Fibonacci words.
//!
//! Numbers are indexed `F_1 = F_2 = 1`. Finite words follow
//! `f_n = f_{n-1} f_{n-2}` from a pair of seeds (default `f_1 = 1`,
//! `f_2 = 0`); the infinite word is the fixed point of `0 -> 01, 1 -> 0`
//! starting from `0`, and for `n >= 2` the default `f_n` is its prefix of
//! length `F_n`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, guard, Result};
use crate::exact::{rational, to_f64};
use crate::words::{Alphabet, Morphism, Word};

/// Largest word the generators will materialize.
pub const MAX_WORD_LEN: u64 = 1 << 31;

/// Largest `n` whose `F_n` Binet evaluation is checked against exact doubles.
pub const BINET_MAX_N: u64 = 70;

/// `φ`, `ψ = 1 - φ` and `√5` at double precision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GoldenConstants {
    pub phi: f64,
    pub psi: f64,
    pub sqrt5: f64,
}

impl GoldenConstants {
    pub fn new() -> Self {
        let sqrt5 = 5f64.sqrt();
        let phi = (1.0 + sqrt5) / 2.0;
        Self {
            phi,
            psi: 1.0 - phi,
            sqrt5,
        }
    }

    /// `φ - 1 = 1/φ`, the limiting density of `0` in the Fibonacci word.
    pub fn phi_minus_one(&self) -> f64 {
        self.phi - 1.0
    }
}

impl Default for GoldenConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// `(F_n, F_{n+1})` with `F_0 = 0`, by fast doubling.
fn fib_pair(n: u64) -> (BigUint, BigUint) {
    if n == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = fib_pair(n / 2);
    // F_2k = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
    let c = &a * (&b * 2u32 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// Exact `F_n` for `n >= 1`.
pub fn fib(n: u64) -> Result<BigUint> {
    if n == 0 {
        return domain("Fibonacci numbers are indexed from 1 (F_1 = F_2 = 1)");
    }
    Ok(fib_pair(n).0)
}

/// `(φ^n - ψ^n) / √5` in double precision.
pub fn fib_binet(n: u64) -> Result<f64> {
    if n == 0 {
        return domain("Fibonacci numbers are indexed from 1 (F_1 = F_2 = 1)");
    }
    if n > BINET_MAX_N {
        return domain(format!(
            "Binet value for n = {n} exceeds exact double range (n <= {BINET_MAX_N})"
        ));
    }
    let g = GoldenConstants::new();
    let n = n as i32;
    Ok((g.phi.powi(n) - g.psi.powi(n)) / g.sqrt5)
}

/// `F_{k,n}` with `F_{k,0} = 0`, `F_{k,1} = 1`, `F_{k,n+1} = k F_{k,n} + F_{k,n-1}`.
pub fn k_fib(k: u64, n: u64) -> Result<BigUint> {
    if k == 0 {
        return domain("k must be positive");
    }
    Ok(k_fib_pair(k, n).0)
}

fn k_fib_pair(k: u64, n: u64) -> (BigUint, BigUint) {
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &cur * k + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    (prev, cur)
}

/// `F_{k,n} / F_{k,n-1}`, which tends to the positive root of `a² - k a - 1 = 0`.
pub fn k_fib_ratio(k: u64, n: u64) -> Result<f64> {
    if k == 0 {
        return domain("k must be positive");
    }
    if n < 2 {
        return domain("ratio F_{k,n}/F_{k,n-1} needs n >= 2");
    }
    let (prev, cur) = k_fib_pair(k, n - 1);
    Ok(to_f64(&rational(&cur, &prev)))
}

/// The two starting words of the concatenation recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibSeeds {
    first: Word,
    second: Word,
}

impl FibSeeds {
    pub fn new(first: Word, second: Word) -> Result<Self> {
        first.same_alphabet(&second)?;
        if first.is_empty() || second.is_empty() {
            return domain("Fibonacci seeds must be nonempty");
        }
        Ok(Self { first, second })
    }

    /// `f_1 = 1`, `f_2 = 0`.
    pub fn standard() -> Self {
        Self::binary("1", "0").expect("valid seeds")
    }

    /// Seeds over `{0, 1}` given as strings, e.g. `("1", "10")`.
    pub fn binary(first: &str, second: &str) -> Result<Self> {
        let b = Alphabet::binary();
        Self::new(Word::parse(&b, first)?, Word::parse(&b, second)?)
    }

    pub fn first(&self) -> &Word {
        &self.first
    }

    pub fn second(&self) -> &Word {
        &self.second
    }
}

impl Default for FibSeeds {
    fn default() -> Self {
        Self::standard()
    }
}

/// Length of `f_n` under `seeds`, saturating.
pub fn fib_word_len(n: u64, seeds: &FibSeeds) -> u64 {
    let (mut a, mut b) = (seeds.first.len() as u64, seeds.second.len() as u64);
    match n {
        0 | 1 => a,
        _ => {
            for _ in 2..n {
                let c = a.saturating_add(b);
                a = b;
                b = c;
            }
            b
        }
    }
}

/// `f_n` by the concatenation recurrence `f_n = f_{n-1} f_{n-2}`.
pub fn fib_word(n: u64, seeds: &FibSeeds) -> Result<Word> {
    if n == 0 {
        return domain("Fibonacci words are indexed from 1");
    }
    guard("Fibonacci word length", fib_word_len(n, seeds), MAX_WORD_LEN)?;
    if n == 1 {
        return Ok(seeds.first.clone());
    }
    let alphabet = seeds.first.alphabet().clone();
    let mut older = seeds.first.indices().to_vec();
    let mut newer = seeds.second.indices().to_vec();
    for _ in 2..n {
        let mut next = Vec::with_capacity(newer.len() + older.len());
        next.extend_from_slice(&newer);
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, next);
    }
    Ok(Word::from_indices(&alphabet, newer))
}

/// The first `len` symbols of the fixed point of `0 -> 01, 1 -> 0`.
///
/// The output is self-generating: reading symbol `i` emits its image, which
/// extends the buffer faster than it is consumed.
pub fn infinite_prefix(len: u64) -> Result<Word> {
    guard("Fibonacci prefix length", len, MAX_WORD_LEN)?;
    Ok(morphic_prefix(&Morphism::fibonacci(), 0, len as usize))
}

/// Prefix of the fixed point of a prolongable morphism `m` starting at `start`.
pub(crate) fn morphic_prefix(m: &Morphism, start: u8, len: usize) -> Word {
    let mut out: Vec<u8> = Vec::with_capacity(len + 2);
    if len > 0 {
        out.extend_from_slice(m.image_indices(start));
        let mut read = 1;
        while out.len() < len {
            let s = out[read];
            out.extend_from_slice(m.image_indices(s));
            read += 1;
        }
        out.truncate(len);
    }
    Word::from_indices(m.codomain(), out)
}

/// Symbol `i` (0-indexed) of the infinite Fibonacci word, in O(log i) space.
///
/// Descends through `s_k = s_{k-1} s_{k-2}` where `s_k = σ^k(0)`.
pub fn nth_symbol(i: u64) -> char {
    let mut lens: Vec<u128> = vec![1, 2];
    while *lens.last().expect("nonempty") <= i as u128 {
        let n = lens.len();
        lens.push(lens[n - 1] + lens[n - 2]);
    }
    let mut k = lens.len() - 1;
    let mut i = i as u128;
    while k >= 2 {
        if i < lens[k - 1] {
            k -= 1;
        } else {
            i -= lens[k - 1];
            k -= 2;
        }
    }
    match (k, i) {
        (1, 1) => '1',
        _ => '0',
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn fib_values() {
        assert_eq!(fib(1).unwrap(), BigUint::from(1u32));
        assert_eq!(fib(2).unwrap(), BigUint::from(1u32));
        assert_eq!(fib(10).unwrap(), BigUint::from(55u32));
        assert_eq!(fib(21).unwrap(), BigUint::from(10946u32));
        assert_eq!(fib(22).unwrap(), BigUint::from(17711u32));
        assert!(fib(0).is_err());
    }

    #[test]
    fn fast_doubling_matches_recurrence() {
        let (mut a, mut b) = (BigUint::one(), BigUint::one());
        for n in 1..=300u64 {
            assert_eq!(fib(n).unwrap(), a, "n = {n}");
            let c = &a + &b;
            a = std::mem::replace(&mut b, c);
        }
    }

    #[test]
    fn binet() {
        assert!((fib_binet(1).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(fib_binet(22).unwrap().round(), 17711.0);
        assert!(fib_binet(71).is_err());
        assert!(fib_binet(0).is_err());
    }

    #[test]
    fn golden_constants() {
        let g = GoldenConstants::new();
        assert!((g.phi * g.phi - g.phi - 1.0).abs() < 1e-12);
        assert_eq!(g.psi, 1.0 - g.phi);
    }

    #[test]
    fn k_fibonacci() {
        assert_eq!(k_fib(1, 10).unwrap(), BigUint::from(55u32));
        let k2: Vec<BigUint> = (0..6).map(|n| k_fib(2, n).unwrap()).collect();
        let expected: Vec<BigUint> = [0u32, 1, 2, 5, 12, 29].map(BigUint::from).to_vec();
        assert_eq!(k2, expected);
        let r = k_fib_ratio(2, 40).unwrap();
        assert!((r - (2.0 + 8f64.sqrt()) / 2.0).abs() < 1e-9);
        assert!(k_fib(0, 3).is_err());
    }

    #[test]
    fn fib_word_examples() {
        let s = FibSeeds::standard();
        let listed = ["1", "0", "01", "010", "01001", "01001010"];
        for (i, w) in listed.iter().enumerate() {
            assert_eq!(fib_word(i as u64 + 1, &s).unwrap().to_string(), *w);
        }
        assert_eq!(fib_word(7, &s).unwrap().to_string(), "0100101001001");
        assert!(fib_word(0, &s).is_err());
    }

    #[test]
    fn fib_word_size_guard() {
        let err = fib_word(60, &FibSeeds::standard()).unwrap_err();
        assert!(matches!(err, Error::SizeGuard { .. }));
        assert!(infinite_prefix(MAX_WORD_LEN + 1).is_err());
    }

    #[test]
    fn seeds_must_be_nonempty() {
        assert!(FibSeeds::binary("", "0").is_err());
    }

    #[test]
    fn section_program_seeds() {
        let w = fib_word(22, &FibSeeds::binary("1", "10").unwrap()).unwrap();
        assert_eq!(w.len(), 28657);
        assert_eq!(w.letter_count('1').unwrap(), 17711);
        assert_eq!(w.letter_count('0').unwrap(), 10946);
    }

    #[test]
    fn infinite_prefix_examples() {
        assert!(infinite_prefix(0).unwrap().is_empty());
        assert_eq!(infinite_prefix(10).unwrap().to_string(), "0100101001");
        assert_eq!(
            infinite_prefix(34).unwrap().to_string(),
            "0100101001001010010100100101001001"
        );
    }

    #[test]
    fn nth_symbol_examples() {
        assert_eq!(nth_symbol(0), '0');
        assert_eq!(nth_symbol(1), '1');
        assert_eq!(nth_symbol(2), '0');
        // near the top of the u64 range the descent still terminates
        assert!(matches!(nth_symbol(u64::MAX), '0' | '1'));
    }
}
