//! Differential checks of the main routines against [`crate::oracle`],
//! run by the CLI's `verify` command.

use std::fmt;

use crate::catalan::catalan;
use crate::density::count_occurrences;
use crate::error::Result;
use crate::fibonacci::{fib, fib_word, infinite_prefix, nth_symbol, FibSeeds};
use crate::integral::{integral_density, IntegralParams};
use crate::oracle::{
    all_words, brute_count, brute_factor_set, brute_pal_factors, brute_sp_enumerate,
    brute_square_free_count, brute_square_scan,
};
use crate::palindromes::{pal_factors_direct, pal_factors_eertree, sp_count};
use crate::squarefree::{count_square_free, is_square_free};
use crate::words::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub mismatch: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(m) => write!(f, "FAIL {} ({} cases): {}", self.name, self.cases, m),
        }
    }
}

/// Run `check` on each case, stopping at the first mismatch.
fn run<T>(
    name: &'static str,
    cases: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Result<Option<String>>,
) -> Result<Check> {
    let mut count = 0;
    for case in cases {
        count += 1;
        if let Some(m) = check(&case)? {
            return Ok(Check {
                name,
                cases: count,
                mismatch: Some(m),
            });
        }
    }
    Ok(Check {
        name,
        cases: count,
        mismatch: None,
    })
}

fn binary_words_upto(n: usize) -> Vec<Word> {
    (1..=n).flat_map(|k| all_words(&Alphabet::binary(), k)).collect()
}

pub fn run_all() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    checks.push(run("sp_count vs subset enumeration", binary_words_upto(12), |w| {
        let dp = sp_count(w)?;
        let brute = brute_sp_enumerate(w)?.len();
        Ok((dp != brute.into()).then(|| format!("{w}: dp {dp}, brute {brute}")))
    })?);

    checks.push(run("palindromic factors: centers vs eertree vs windows", binary_words_upto(12), |w| {
        let direct: Vec<String> = pal_factors_direct(w).iter().map(|p| p.to_string()).collect();
        let tree: Vec<String> = pal_factors_eertree(w).iter().map(|p| p.to_string()).collect();
        let brute: Vec<String> = brute_pal_factors(w).into_iter().collect();
        let mut sorted = direct.clone();
        sorted.sort();
        Ok((sorted != brute || direct != tree).then(|| format!("{w}")))
    })?);

    let texts = binary_words_upto(10);
    let patterns = binary_words_upto(4);
    checks.push(run(
        "count_occurrences vs window scan",
        texts.iter().flat_map(|t| patterns.iter().map(move |p| (p, t))),
        |(p, t)| {
            let kmp = count_occurrences(p, t)?;
            let brute = brute_count(p, t)?;
            Ok((kmp != brute).then(|| format!("{p} in {t}: {kmp} vs {brute}")))
        },
    )?);

    let ternary: Vec<Word> = (1..=8).flat_map(|n| all_words(&Alphabet::ternary(), n)).collect();
    checks.push(run(
        "is_square_free vs all-pairs scan",
        binary_words_upto(12).into_iter().chain(ternary),
        |w| {
            let fast = is_square_free(w);
            let brute = !brute_square_scan(w)?;
            Ok((fast != brute).then(|| format!("{w}")))
        },
    )?);

    checks.push(run("ternary s(n) vs independent backtracking", 1..=12usize, |&n| {
        let fast = count_square_free(3, n)?;
        let brute = brute_square_free_count(&Alphabet::ternary(), n)?;
        Ok((fast != brute).then(|| format!("n = {n}: {fast} vs {brute}")))
    })?);

    let prefix = infinite_prefix(610)?;
    checks.push(run("factor complexity k + 1 on the 610-prefix", 1..=15usize, |&k| {
        let fast: Vec<String> = prefix.distinct_factors(k).iter().map(|f| f.to_string()).collect();
        let brute: Vec<String> = brute_factor_set(&prefix, k).into_iter().collect();
        Ok((fast != brute || fast.len() != k + 1)
            .then(|| format!("k = {k}: {} factors", fast.len())))
    })?);

    let long = infinite_prefix(100_000)?;
    checks.push(run("nth_symbol vs generated prefix", 0..100_000u64, |&i| {
        let expected = long.symbol_at(i as usize).expect("in range");
        let got = nth_symbol(i);
        Ok((got != expected).then(|| format!("i = {i}: {got} vs {expected}")))
    })?);

    checks.push(run("fib_word vs fixed-point prefix", 2..=25u64, |&n| {
        let word = fib_word(n, &FibSeeds::standard())?;
        let len = u64::try_from(&fib(n)?).expect("small");
        Ok((word != infinite_prefix(len)?).then(|| format!("n = {n}")))
    })?);

    let grid: Vec<IntegralParams> = integral_grid();
    checks.push(run("integral: quadrature vs incomplete gamma", grid, |p| {
        let e = integral_density(p)?;
        let rel = e.relative_disagreement();
        Ok((rel > 1e-9).then(|| format!("{p:?}: relative gap {rel:e}")))
    })?);

    checks.push(run("Catalan vs Segner recurrence", 0..=15u64, |&n| {
        let segner: num_bigint::BigUint = (0..n).map(|i| catalan(i) * catalan(n - 1 - i)).sum();
        let expected = if n == 0 { 1u32.into() } else { segner };
        Ok((catalan(n) != expected).then(|| format!("n = {n}")))
    })?);

    Ok(checks)
}

/// The 36-point grid `k ∈ {0.5, 1, 2, 5}`, `τ ∈ {0.5, 1, 2}`,
/// `(a, b) ∈ {(0, 1), (0, 10), (1, 3)}`.
pub fn integral_grid() -> Vec<IntegralParams> {
    let mut grid = Vec::with_capacity(36);
    for k in [0.5, 1.0, 2.0, 5.0] {
        for tau in [0.5, 1.0, 2.0] {
            for (a, b) in [(0.0, 1.0), (0.0, 10.0), (1.0, 3.0)] {
                grid.push(IntegralParams { a, b, k, tau });
            }
        }
    }
    grid
}
