//! Occurrence counts and densities over prefixes of the Fibonacci word,
//! with the golden-ratio limit curves.
//!
//! Densities are exact rationals; the double in [`DensitySample::value_real`]
//! is derived from the exact value and only used at the output boundary.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Number, Value};

use crate::error::{domain, guard, Error, Result};
use crate::exact::{rational, rational_u64, to_f64};
use crate::fibonacci::{fib, infinite_prefix, GoldenConstants, MAX_WORD_LEN};
use crate::words::{Alphabet, Word};

pub use crate::integral::{integral_density, IntegralEstimate, IntegralParams};

/// Largest `n_max` accepted by [`ratio_curve`].
pub const RATIO_CURVE_MAX: u64 = 10_000;

/// One point `(n, value)` of a density curve.
#[derive(Clone, Debug, PartialEq)]
pub struct DensitySample {
    pub n: u64,
    pub value: BigRational,
    pub value_real: f64,
}

impl DensitySample {
    pub fn new(n: u64, value: BigRational) -> Self {
        let value_real = to_f64(&value);
        Self {
            n,
            value,
            value_real,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    /// `{n, numerator, denominator, value}` with exact integers as JSON numbers.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "numerator": big_number(self.numerator()),
            "denominator": big_number(self.denominator()),
            "value": self.value_real,
        })
    }
}

pub(crate) fn big_number(v: &BigInt) -> Value {
    Value::Number(
        v.to_string()
            .parse::<Number>()
            .expect("decimal integer is a JSON number"),
    )
}

/// Prefix-function (KMP) table: `fail[i]` is the length of the longest proper
/// border of `pattern[..=i]`.
fn prefix_function(pattern: &[u8]) -> Vec<usize> {
    let mut fail = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Number of (overlapping) contiguous occurrences of `pattern` in `text`.
pub fn count_occurrences(pattern: &Word, text: &Word) -> Result<u64> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    pattern.same_alphabet(text)?;
    let p = pattern.indices();
    let fail = prefix_function(p);
    let mut k = 0;
    let mut count = 0;
    for &c in text.indices() {
        while k > 0 && c != p[k] {
            k = fail[k - 1];
        }
        if c == p[k] {
            k += 1;
        }
        if k == p.len() {
            count += 1;
            k = fail[k - 1];
        }
    }
    Ok(count)
}

/// `D(w) = C(w)/n`: occurrences of `pattern` in the first `prefix_len`
/// symbols of the infinite Fibonacci word, divided by `prefix_len`.
pub fn density(pattern: &Word, prefix_len: u64) -> Result<DensitySample> {
    if prefix_len == 0 {
        return domain("prefix length must be at least 1");
    }
    let text = infinite_prefix(prefix_len)?;
    let count = count_occurrences(pattern, &text)?;
    Ok(DensitySample::new(prefix_len, rational_u64(count, prefix_len)))
}

/// `(n, F_n / F_{n+1})` for `n = 1..=n_max`.
pub fn ratio_curve(n_max: u64) -> Result<Vec<DensitySample>> {
    if n_max == 0 {
        return domain("n_max must be at least 1");
    }
    guard("ratio curve n_max", n_max, RATIO_CURVE_MAX)?;
    let mut out = Vec::with_capacity(n_max as usize);
    let (mut cur, mut next) = (fib(1)?, fib(2)?);
    for n in 1..=n_max {
        out.push(DensitySample::new(n, rational(&cur, &next)));
        let after = &cur + &next;
        cur = std::mem::replace(&mut next, after);
    }
    Ok(out)
}

/// `(n, |p_n|_letter / n)` for `n = 1..=n_max`, where `p_n` is the length-`n`
/// prefix of the infinite Fibonacci word.
pub fn letter_density_curve(letter: char, n_max: u64) -> Result<Vec<DensitySample>> {
    guard("letter density n_max", n_max, MAX_WORD_LEN)?;
    let target = Alphabet::binary().index_of(letter)?;
    let prefix = infinite_prefix(n_max)?;
    let mut count = 0u64;
    Ok(prefix
        .indices()
        .iter()
        .zip(1u64..)
        .map(|(&s, n)| {
            if s == target {
                count += 1;
            }
            DensitySample::new(n, rational_u64(count, n))
        })
        .collect())
}

/// `e^{-n(φ-1)}`: the exponential-sum approximation, which tends to 0 rather
/// than to `φ - 1`.
pub fn exp_sum_approx(n: u64) -> f64 {
    let step = GoldenConstants::new().phi_minus_one();
    (-(n as f64) * step).exp()
}

/// `√(F_{n+2} / F_n)`, the hypotenuse-to-side ratio of the right triangle with
/// sides `√F_n`, `√F_{n+1}`, `√F_{n+2}`. Tends to `φ`.
pub fn triangle_ratio(n: u64) -> Result<f64> {
    if n == 0 {
        return domain("triangle ratio needs n >= 1");
    }
    Ok(to_f64(&rational(&fib(n + 2)?, &fib(n)?)).sqrt())
}

/// Distance of an exact ratio from `φ - 1`, signed (positive above).
pub fn signed_gap_from_phi_minus_one(sample: &DensitySample) -> f64 {
    sample.value_real - GoldenConstants::new().phi_minus_one()
}

/// Exact position of a nonnegative rational `p/q` relative to the irrational
/// `φ - 1 = (√5 - 1)/2`, via `p/q > φ - 1 ⇔ (2p + q)² > 5q²`.
pub fn cmp_phi_minus_one(r: &BigRational) -> Result<Ordering> {
    if r.is_negative() {
        return domain("comparison with φ - 1 needs a nonnegative rational");
    }
    let (p, q) = (r.numer(), r.denom());
    let lhs = (BigInt::from(2) * p + q).pow(2);
    let rhs = BigInt::from(5) * q * q;
    Ok(lhs.cmp(&rhs))
}

/// Exact check that a density lies in `[0, 1]`.
pub fn is_unit_interval(r: &BigRational) -> bool {
    !r.is_negative() && r <= &BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn bin(s: &str) -> Word {
        Word::parse(&Alphabet::binary(), s).unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_occurrences(&bin("0"), &bin("01001010")), Ok(5));
        assert_eq!(count_occurrences(&bin("101"), &bin("0100101001001")), Ok(1));
        assert_eq!(count_occurrences(&bin("01"), &bin("")), Ok(0));
        assert_eq!(count_occurrences(&bin(""), &bin("0")), Err(Error::EmptyPattern));
        let aa = Word::parse(&Alphabet::ab(), "aa").unwrap();
        let aaa = Word::parse(&Alphabet::ab(), "aaa").unwrap();
        assert_eq!(count_occurrences(&aa, &aaa), Ok(2));
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(&bin("0"), 8).unwrap().value, rational_u64(5, 8));
        assert!(density(&bin("11"), 1000).unwrap().value.is_zero());
        assert_eq!(density(&bin("101"), 13).unwrap().value, rational_u64(1, 13));
        assert!(density(&bin("0"), 0).is_err());
    }

    #[test]
    fn ratio_curve_examples() {
        let c = ratio_curve(40).unwrap();
        assert_eq!(c[0].value, rational_u64(1, 1));
        assert_eq!(c[9].value, rational_u64(55, 89));
        assert!(signed_gap_from_phi_minus_one(&c[39]).abs() < 1e-12);
        assert!(ratio_curve(0).is_err());
        assert_eq!(cmp_phi_minus_one(&c[9].value), Ok(Ordering::Less));
        assert_eq!(cmp_phi_minus_one(&c[10].value), Ok(Ordering::Greater));
        assert!(ratio_curve(RATIO_CURVE_MAX + 1).is_err());
    }

    #[test]
    fn letter_curves() {
        let zeros = letter_density_curve('0', 8).unwrap();
        let ones = letter_density_curve('1', 8).unwrap();
        assert_eq!(zeros[7].value, rational_u64(5, 8));
        assert_eq!(ones[7].value, rational_u64(3, 8));
        assert!(letter_density_curve('2', 8).is_err());
    }

    #[test]
    fn exp_sum() {
        assert_eq!(exp_sum_approx(0), 1.0);
        assert!((exp_sum_approx(30) - 8.9e-9).abs() < 1e-10);
    }

    #[test]
    fn triangle() {
        assert!((triangle_ratio(1).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        let phi = GoldenConstants::new().phi;
        assert!((triangle_ratio(30).unwrap() - phi).abs() < 1e-8);
        assert!(triangle_ratio(0).is_err());
    }

    #[test]
    fn sample_json_carries_exact_parts() {
        let s = DensitySample::new(10, rational_u64(55, 89));
        let v = s.to_json();
        assert_eq!(v["numerator"], json!(55));
        assert_eq!(v["denominator"], json!(89));
        assert_eq!(v["n"], json!(10));
    }
}
