//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any fail.

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fibwords::catalan::{catalan, catalan_fib_ratio, limit_function_g, G_N_MAX, RATIO_N_MAX};
use fibwords::cli::reproduce_run;
use fibwords::density::{
    cmp_phi_minus_one, density, exp_sum_approx, integral_density, ratio_curve, IntegralParams,
};
use fibwords::exact::{rational_u64, to_f64};
use fibwords::fibonacci::{
    fib, fib_binet, fib_word, infinite_prefix, k_fib_ratio, FibSeeds, GoldenConstants,
};
use fibwords::fuzzy::{fuzzy_fib_word, word_membership};
use fibwords::oracle::{all_words, brute_count, brute_sp_by_candidates, brute_square_free_count};
use fibwords::palindromes::{pal_density_table, pal_factors, palindromes_of_length, sp_count, sp_delta};
use fibwords::squarefree::{brandenburg_table, count_square_free, delta_decode, delta_factorizations};
use fibwords::verify::integral_grid;
use fibwords::{Alphabet, Morphism, Word};
use num_bigint::BigUint;
use num_traits::One;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

fn word(alphabet: &Alphabet, s: &str) -> Word {
    Word::parse(alphabet, s).expect("literal word")
}

fn reproduction_run() -> Outcome {
    let start = Instant::now();
    let r = reproduce_run().map_err(|e| e.to_string())?;
    within(Duration::from_secs(1), start)?;
    ensure(r.ones == 17711 && r.zeros == 10946, || format!("{} ones, {} zeros", r.ones, r.zeros))?;
    ensure(r.word.len() == 28657, || format!("length {}", r.word.len()))?;
    ensure((r.ratio - 0.6180339887).abs() <= 1e-10, || format!("ratio {}", r.ratio))?;
    let out = Command::new(env!("CARGO_BIN_EXE_fibwords"))
        .arg("reproduce-3-2")
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    for line in ["Number of ones: 17711", "Number of zeros: 10946", "density = as n approaches infinity: 0.6180339887"] {
        ensure(text.lines().any(|l| l == line), || format!("missing output line {line:?}"))?;
    }
    Ok(format!("17711 ones, 10946 zeros, length 28657, ratio {:.10}, {:?}", r.ratio, start.elapsed()))
}

fn golden_ratio_limit() -> Outcome {
    let start = Instant::now();
    let target = GoldenConstants::new().phi_minus_one();
    let curve = ratio_curve(90).map_err(|e| e.to_string())?;
    for s in &curve[39..] {
        let gap = (s.value_real - target).abs();
        ensure(gap <= 1e-12, || format!("n = {}: gap {gap:e}", s.n))?;
        let side = cmp_phi_minus_one(&s.value).map_err(|e| e.to_string())?;
        let expected = if s.n % 2 == 1 { Ordering::Greater } else { Ordering::Less };
        ensure(side == expected, || format!("n = {}: on the {side:?} side", s.n))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("n = 40..=90 within 1e-12; odd n above, even n below".into())
}

fn word_identities() -> Outcome {
    let b = Alphabet::binary();
    let listed = ["1", "0", "01", "010", "01001", "01001010"];
    for (i, want) in listed.iter().enumerate() {
        let got = fib_word(i as u64 + 1, &FibSeeds::standard()).map_err(|e| e.to_string())?;
        ensure(got.to_string() == *want, || format!("f_{} = {got}, listed {want}", i + 1))?;
    }
    let f5 = word(&b, listed[4]);
    let f6 = word(&b, listed[5]);
    let f7 = fib_word(7, &FibSeeds::standard()).map_err(|e| e.to_string())?;
    ensure(f7 == f6.concat(&f5).unwrap() && f7.len() == 13, || format!("f_7 = {f7}"))?;
    let limit = "0100101001001010010100100101001001";
    let prefix = infinite_prefix(34).map_err(|e| e.to_string())?;
    ensure(prefix.to_string() == limit, || format!("34-prefix {prefix}"))?;
    Ok(format!("f_1..f_6 verbatim, f_7 = {f7}, 34-prefix matches"))
}

fn palindrome_counts() -> Outcome {
    let ab = Alphabet::ab();
    let sp = |s: &str| sp_count(&word(&ab, s)).map_err(|e| e.to_string());
    let p = |s: &str| pal_factors(&word(&ab, s)).p_count;
    let measured = format!(
        "P(abaa) = {}, SP(abaa) = {}, P(abab) = {}, SP(abab) = {}",
        p("abaa"),
        sp("abaa")?,
        p("abab"),
        sp("abab")?
    );
    let start = Instant::now();
    let mut words = 0;
    for n in 1..=14 {
        for w in all_words(&Alphabet::binary(), n) {
            let dp = sp_count(&w).map_err(|e| e.to_string())?;
            let brute = brute_sp_by_candidates(&w).map_err(|e| e.to_string())?;
            ensure(dp == BigUint::from(brute), || format!("{w}: dp {dp}, brute {brute}"))?;
            words += 1;
        }
    }
    within(Duration::from_secs(60), start)?;
    let exhaustive = format!("DP = brute force on {words} words in {:?}", start.elapsed());
    let mut failed = Vec::new();
    if p("abaa") != 4 {
        failed.push("P(abaa) != 4");
    }
    if sp("abaa")? != 5u32.into() {
        failed.push("SP(abaa) != 5");
    }
    if p("abab") != 6 {
        failed.push("P(abab) != 6");
    }
    if sp("abab")? != 6u32.into() {
        failed.push("SP(abab) != 6");
    }
    if failed.is_empty() {
        Ok(format!("{measured}; {exhaustive}"))
    } else {
        Err(format!("{} ({measured}; {exhaustive})", failed.join(", ")))
    }
}

fn inequality_suite() -> Outcome {
    let mut words = 0;
    for n in 1..=12 {
        let bound = fib(n as u64 + 1).map_err(|e| e.to_string())?;
        for w in all_words(&Alphabet::binary(), n) {
            let p = pal_factors(&w).p_count;
            let sp = sp_count(&w).map_err(|e| e.to_string())?;
            ensure(p <= n && BigUint::from(n) <= sp, || format!("{w}: P = {p}, SP = {sp}"))?;
            for a in ['0', '1'] {
                let d = sp_delta(&w, a).map_err(|e| e.to_string())?;
                ensure(d <= bound, || format!("{w}+{a}: delta {d} > {bound}"))?;
            }
            words += 1;
        }
    }
    Ok(format!("P <= |w| <= SP and delta <= F(|w|+1) on {words} words"))
}

fn sturmian_structure() -> Outcome {
    let b = Alphabet::binary();
    let prefix = infinite_prefix(610).map_err(|e| e.to_string())?;
    for k in 1..=15 {
        let c = prefix.distinct_factors(k).len();
        ensure(c == k + 1, || format!("k = {k}: {c} factors"))?;
    }
    for pat in ["11", "000"] {
        let d = density(&word(&b, pat), 10946).map_err(|e| e.to_string())?;
        ensure(d.value == rational_u64(0, 1), || format!("{pat} density {}", d.value))?;
    }
    let zeros = density(&word(&b, "0"), 10946).map_err(|e| e.to_string())?;
    let gap = (zeros.value_real - GoldenConstants::new().phi_minus_one()).abs();
    ensure(gap < 1e-3, || format!("letter-0 density {}", zeros.value_real))?;
    let text = infinite_prefix(1000).map_err(|e| e.to_string())?;
    let mut entries = 0;
    for len in 1..=6 {
        let table = pal_density_table(1000, len).map_err(|e| e.to_string())?;
        let keys: Vec<Word> = table.keys().cloned().collect();
        ensure(keys == palindromes_of_length(&b, len), || format!("length {len}: key set"))?;
        for (pal, d) in &table {
            let brute = brute_count(pal, &text).map_err(|e| e.to_string())?;
            ensure(d.value == rational_u64(brute, 1000), || format!("{pal}: {} vs {brute}/1000", d.value))?;
            entries += 1;
        }
    }
    Ok(format!(
        "complexity k+1 for k <= 15, 11/000 absent, zero density {:.6}, {entries} palindrome densities match windows",
        zeros.value_real
    ))
}

fn square_free() -> Outcome {
    let t = Alphabet::ternary();
    let mut counts = Vec::new();
    for n in 1..=12 {
        let fast = count_square_free(3, n).map_err(|e| e.to_string())?;
        let brute = brute_square_free_count(&t, n).map_err(|e| e.to_string())?;
        ensure(fast == brute, || format!("n = {n}: {fast} vs {brute}"))?;
        counts.push(fast);
    }

    let delta = Morphism::delta();
    let mut runner = TestRunner::new_with_rng(
        Config::with_cases(1000),
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strategy = proptest::collection::vec(0u8..3, 0..=66);
    for _ in 0..1000 {
        let pre = Word::from_indices(&t, strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current());
        let image = delta.apply(&pre).map_err(|e| e.to_string())?;
        ensure(image.len() <= 200, || format!("image of {pre} too long"))?;
        let back = delta_decode(&image).map_err(|e| e.to_string())?;
        ensure(back == pre, || format!("{pre} -> {image} -> {back}"))?;
        let all = delta_factorizations(&image).map_err(|e| e.to_string())?;
        ensure(all.len() == 1, || format!("{image}: {} factorizations", all.len()))?;
    }

    let table = brandenburg_table(12).map_err(|e| e.to_string())?;
    let lower_fail: Vec<usize> = table.iter().filter(|r| !r.lower_holds).map(|r| r.n).collect();
    let upper_fail: Vec<usize> = table.iter().filter(|r| !r.upper_holds).map(|r| r.n).collect();
    ensure(lower_fail == [1, 2], || format!("lower bound fails at {lower_fail:?}"))?;
    ensure(upper_fail == [5, 6, 7], || format!("upper bound fails at {upper_fail:?}"))?;
    Ok(format!(
        "s(1..12) = {counts:?}; 1000 delta round trips; bounds fail at lower {lower_fail:?}, upper {upper_fail:?}"
    ))
}

fn integral_model() -> Outcome {
    let mut worst = 0f64;
    for p in integral_grid() {
        let e = integral_density(&p).map_err(|e| e.to_string())?;
        let rel = e.relative_disagreement();
        ensure(rel <= 1e-9, || format!("{p:?}: relative gap {rel:e}"))?;
        worst = worst.max(rel);
    }
    let p = IntegralParams::new(0.0, f64::INFINITY, 1.0, 1.0).map_err(|e| e.to_string())?;
    let e = integral_density(&p).map_err(|e| e.to_string())?;
    ensure((e.quadrature - 0.5).abs() <= 1e-12 && (e.closed_form - 0.5).abs() <= 1e-12, || {
        format!("analytic case: {} / {}", e.quadrature, e.closed_form)
    })?;
    Ok(format!("36-point grid worst relative gap {worst:e}; analytic case {}", e.quadrature))
}

fn binet() -> Outcome {
    for n in 1..=70 {
        let exact = to_f64(&fibwords::exact::rational(&fib(n).unwrap(), &BigUint::one()));
        let approx = fib_binet(n).map_err(|e| e.to_string())?;
        ensure((approx - exact).abs() < 0.5, || format!("n = {n}: {approx} vs {exact}"))?;
    }
    let r = k_fib_ratio(2, 40).map_err(|e| e.to_string())?;
    ensure((r - (1.0 + 2f64.sqrt())).abs() <= 1e-9, || format!("k = 2 ratio {r}"))?;
    Ok(format!("Binet rounds to F(n) for n <= 70; 2-Fibonacci ratio {r}"))
}

fn catalan_values() -> Outcome {
    let c: Vec<BigUint> = (1..=4).map(catalan).collect();
    ensure(c == [1u32, 2, 5, 14].map(BigUint::from), || format!("C_1..4 = {c:?}"))?;
    let g = |n| limit_function_g(n).map_err(|e| e.to_string());
    ensure(g(2)? == rational_u64(3, 2), || "g(2) != 3/2".into())?;
    ensure(g(4)? == rational_u64(15, 14), || "g(4) != 15/14".into())?;
    for n in 50..=G_N_MAX {
        let v = to_f64(&g(n)?);
        ensure((v - 1.0).abs() < 1e-12, || format!("g({n}) = {v}"))?;
    }
    let phi = GoldenConstants::new().phi;
    for n in 6..=RATIO_N_MAX {
        let r = catalan_fib_ratio(n).map_err(|e| e.to_string())?;
        ensure((r - phi).abs() <= 1e-9, || format!("n = {n}: ratio {r}"))?;
    }
    Ok(format!("C_1..4 = 1,2,5,14; g exact; |g(n)-1| < 1e-12 for 50..={G_N_MAX}; ratio -> phi for 6..={RATIO_N_MAX}"))
}

fn exp_sum() -> Outcome {
    let v = exp_sum_approx(30);
    ensure(v < 1e-6, || format!("exp_sum_approx(30) = {v}"))?;
    Ok(format!("exp_sum_approx(30) = {v:e}"))
}

fn fuzzy() -> Outcome {
    let fw = fuzzy_fib_word(4, 0.8, 0.5).map_err(|e| e.to_string())?;
    let m = word_membership(&fw).map_err(|e| e.to_string())?;
    ensure(fw.symbols().to_string() == "abaab" && m == 0.5, || format!("{} with membership {m}", fw.symbols()))?;
    Ok(format!("{} with membership {m}", fw.symbols()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("reproduction run", reproduction_run),
        ("golden-ratio limit", golden_ratio_limit),
        ("word identities", word_identities),
        ("palindrome counts", palindrome_counts),
        ("inequality suite", inequality_suite),
        ("Sturmian structure", sturmian_structure),
        ("square-free words", square_free),
        ("integral model", integral_model),
        ("Binet formula", binet),
        ("Catalan values", catalan_values),
        ("exponential-sum approximation", exp_sum),
        ("fuzzy Fibonacci word", fuzzy),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
