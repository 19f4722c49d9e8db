//! Catalan numbers and Fibonacci quantities evaluated at Catalan indices.
//!
//! Everything here is exact. Two limits meet in this module and disagree:
//! consecutive Fibonacci numbers at a Catalan index have ratio tending to
//! `φ` ([`catalan_fib_ratio`]), while the auxiliary sequence
//! `g(n) = ((n+1)(n!)² + (2n)!) / (2n)! = 1 + (n+1)/binom(2n, n)` tends to 1
//! ([`limit_function_g`]). Both are exposed; neither is forced to the other.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::{domain, guard, Result};
use crate::exact::{binomial, factorial, rational, to_f64};
use crate::fibonacci::{fib, fib_word, FibSeeds};
use crate::words::Word;

/// `C_n` above this is too long a word for [`fib_word_at_catalan`].
pub const CATALAN_WORD_INDEX_MAX: u64 = 30;
pub const RATIO_N_MAX: u64 = 12;
pub const G_N_MAX: u64 = 200;

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `f_{C_n}` under the default seeds, for `n >= 3`.
pub fn fib_word_at_catalan(n: u64) -> Result<Word> {
    if n < 3 {
        return domain(format!("Catalan-indexed Fibonacci words need n >= 3, got {n}"));
    }
    let index = catalan(n);
    let index = u64::try_from(&index).unwrap_or(u64::MAX);
    guard("Catalan index C_n", index, CATALAN_WORD_INDEX_MAX)?;
    fib_word(index, &FibSeeds::standard())
}

/// `F(C_n + 1) / F(C_n)` with `F` the Fibonacci numbers.
pub fn catalan_fib_ratio(n: u64) -> Result<f64> {
    if n < 3 {
        return domain(format!("Catalan ratio needs n >= 3, got {n}"));
    }
    guard("Catalan ratio n", n, RATIO_N_MAX)?;
    let c = u64::try_from(&catalan(n)).expect("C_12 fits in u64");
    Ok(to_f64(&rational(&fib(c + 1)?, &fib(c)?)))
}

/// `g(n) = ((n+1)(n!)² + (2n)!) / (2n)!`, exactly.
pub fn limit_function_g(n: u64) -> Result<BigRational> {
    if n == 0 {
        return domain("g(n) needs n >= 1");
    }
    guard("g(n) argument", n, G_N_MAX)?;
    let nf = factorial(n);
    let two_nf = factorial(2 * n);
    let numerator = (n + 1) * &nf * &nf + &two_nf;
    Ok(rational(&numerator, &two_nf))
}

/// `C_n - 1`.
pub fn table_expr(n: u64) -> Result<BigRational> {
    if n == 0 {
        return domain("table expression needs n >= 1");
    }
    Ok(BigRational::from_integer(BigInt::from(catalan(n))) - BigRational::from_integer(1.into()))
}

/// One row of the Catalan table: `n, C_n, C_n - 1, g(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalanRecord {
    pub n: u64,
    pub c_n: BigUint,
    pub table_expr: BigRational,
    pub g_n: BigRational,
}

impl CatalanRecord {
    pub fn new(n: u64) -> Result<Self> {
        Ok(Self {
            n,
            c_n: catalan(n),
            table_expr: table_expr(n)?,
            g_n: limit_function_g(n)?,
        })
    }
}

pub fn catalan_records(n_max: u64) -> Result<Vec<CatalanRecord>> {
    (1..=n_max).map(CatalanRecord::new).collect()
}
