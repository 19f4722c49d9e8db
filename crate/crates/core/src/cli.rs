//! Command-line front end: argument model, dispatch and report rendering.
//!
//! [`run`] is pure with respect to its config: identical configs render
//! byte-identical reports. Exit status: 0 success, 1 verification mismatch,
//! 2 usage error, 3 domain or guard error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::catalan::{catalan_fib_ratio, catalan_records, fib_word_at_catalan, CatalanRecord};
use crate::density::{
    density, exp_sum_approx, integral_density, letter_density_curve,
    ratio_curve, triangle_ratio, DensitySample, IntegralParams,
};
use crate::error::Error;
use crate::exact::{rational, to_f64};
use crate::fibonacci::{fib, fib_word, infinite_prefix, k_fib_ratio, FibSeeds};
use crate::fuzzy::{fuzzy_fib_word, word_membership};
use crate::palindromes::{
    is_numeric_palindrome, pal_density_table, pal_factors, sp_count, sp_delta,
};
use crate::squarefree::{
    brandenburg_table, delta_decode, enumerate_square_free, has_overlap, is_square_free,
    thue_morse_prefix,
};
use crate::verify;
use crate::words::{Alphabet, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveKind {
    /// F_n / F_{n+1}
    Ratio,
    /// density of 0 in the length-n prefix
    Zeros,
    /// density of 1 in the length-n prefix
    Ones,
    /// e^{-n(φ-1)}
    ExpSum,
    /// √(F_{n+2} / F_n)
    Triangle,
    /// F_{k,n} / F_{k,n-1} (uses --k)
    KRatio,
}

#[derive(Debug, Parser)]
#[command(name = "fibwords", version, about = "Fibonacci words, palindromes, square-free words and golden-ratio limits")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite Fibonacci word f_n (--n, --seeds) or infinite-word prefix (--length)
    Generate {
        #[arg(long)]
        n: Option<u64>,
        /// Seeds f_1,f_2 over {0,1}
        #[arg(long, value_name = "A,B")]
        seeds: Option<String>,
        #[arg(long)]
        length: Option<u64>,
    },
    /// Occurrence density of --pattern in a prefix, or the integral model (--k, --tau, --a, --b)
    Density {
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        prefix: Option<u64>,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        /// Upper bound; `inf` for +∞
        #[arg(long, default_value = "inf")]
        b: f64,
    },
    /// Data series behind the density figures
    Curve {
        #[arg(value_enum)]
        kind: CurveKind,
        /// Last index; 10 and 100 give the two standard series
        #[arg(long, visible_alias = "n", default_value_t = 100)]
        n_max: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
    },
    /// Palindromic factors of WORD, a numeric palindrome test (--n), or the
    /// palindrome density table of a Fibonacci prefix (--prefix, --length)
    Palindromes {
        word: Option<String>,
        #[arg(long)]
        n: Option<i128>,
        #[arg(long)]
        prefix: Option<u64>,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Distinct scattered palindromic subsequences of WORD
    Scattered {
        word: String,
        /// Also report the growth from appending this symbol
        #[arg(long)]
        append: Option<char>,
    },
    /// Square-free words: test/decode WORD, enumerate (--alphabet, --n),
    /// bound table (--n-max) or Thue–Morse prefix (--length)
    Squarefree {
        word: Option<String>,
        #[arg(long, default_value_t = 3)]
        alphabet: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        length: Option<u64>,
    },
    /// Catalan records (--n-max) or Catalan-indexed Fibonacci quantities (--n)
    Catalan {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Fuzzy Fibonacci word with letter membership degrees
    Fuzzy {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0.8)]
        mu_a: f64,
        #[arg(long, default_value_t = 0.5)]
        mu_b: f64,
    },
    /// Regenerate the seeds-"1","10", n = 22 density run
    #[command(name = "reproduce-3-2")]
    Reproduce,
    /// Run every differential oracle check
    Verify,
}

/// A rendered report and its exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn status(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Domain(e) => e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Pick the alphabet a command-line word is written in: `{0,1}`, `{a,b}`,
/// `{a,b,c}`, or else its distinct characters in sorted order.
pub fn infer_alphabet(s: &str) -> CliResult<Alphabet> {
    let fits = |a: &Alphabet| s.chars().all(|c| a.contains(c));
    for a in [Alphabet::binary(), Alphabet::ab(), Alphabet::ternary()] {
        if fits(&a) {
            return Ok(a);
        }
    }
    let mut chars: Vec<char> = s.chars().collect();
    chars.sort_unstable();
    chars.dedup();
    Alphabet::new(chars).map_err(CliError::from)
}

fn parse_word(s: &str) -> CliResult<Word> {
    Ok(Word::parse(&infer_alphabet(s)?, s)?)
}

pub fn run(config: &RunConfig) -> CliResult<Outcome> {
    let f = config.format;
    let ok = |report: String| Ok(Outcome { status: EXIT_OK, report });
    match &config.command {
        Command::Generate { n, seeds, length } => ok(generate(f, *n, seeds.as_deref(), *length)?),
        Command::Density {
            pattern,
            prefix,
            k,
            tau,
            a,
            b,
        } => match (pattern, k, tau) {
            (Some(p), None, None) => {
                let prefix = prefix.ok_or_else(|| CliError::Usage("density needs --prefix".into()))?;
                ok(pattern_density(f, p, prefix)?)
            }
            (None, Some(k), Some(tau)) => ok(integral(f, &IntegralParams::new(*a, *b, *k, *tau)?)?),
            _ => usage("density needs either --pattern/--prefix or --k/--tau"),
        },
        Command::Curve { kind, n_max, k } => ok(curve(f, *kind, *n_max, *k)?),
        Command::Palindromes {
            word,
            n,
            prefix,
            length,
        } => ok(palindromes(f, word.as_deref(), *n, *prefix, *length)?),
        Command::Scattered { word, append } => ok(scattered(f, word, *append)?),
        Command::Squarefree {
            word,
            alphabet,
            n,
            n_max,
            length,
        } => ok(squarefree(f, word.as_deref(), *alphabet, *n, *n_max, *length)?),
        Command::Catalan { n, n_max } => ok(catalan(f, *n, *n_max)?),
        Command::Fuzzy { n, mu_a, mu_b } => ok(fuzzy(f, *n, *mu_a, *mu_b)?),
        Command::Reproduce => ok(reproduce(f)?),
        Command::Verify => {
            let checks = verify::run_all()?;
            let status = if checks.iter().all(|c| c.passed()) {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            let report = match f {
                Format::Json => json_text(&Value::Array(
                    checks
                        .iter()
                        .map(|c| json!({"check": c.name, "cases": c.cases, "passed": c.passed(), "mismatch": c.mismatch}))
                        .collect(),
                )),
                _ => checks.iter().map(|c| format!("{c}\n")).collect(),
            };
            Ok(Outcome { status, report })
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

fn generate(f: Format, n: Option<u64>, seeds: Option<&str>, length: Option<u64>) -> CliResult<String> {
    let (label, index, word) = match (n, length) {
        (Some(n), None) => {
            let seeds = match seeds {
                Some(s) => {
                    let (a, b) = s
                        .split_once(',')
                        .ok_or_else(|| CliError::Usage("--seeds expects A,B".into()))?;
                    FibSeeds::binary(a.trim(), b.trim())?
                }
                None => FibSeeds::standard(),
            };
            ("n", n, fib_word(n, &seeds)?)
        }
        (None, Some(len)) => ("length", len, infinite_prefix(len)?),
        _ => return usage("generate needs exactly one of --n or --length"),
    };
    Ok(match f {
        Format::Text => format!("{word}\n"),
        Format::Csv => csv_text(&[label, "word"], [vec![index.to_string(), word.to_string()]]),
        Format::Json => json_text(&json!({label: index, "length": word.len(), "word": word.to_string()})),
    })
}

fn pattern_density(f: Format, pattern: &str, prefix: u64) -> CliResult<String> {
    let p = Word::parse(&Alphabet::binary(), pattern)?;
    let sample = density(&p, prefix)?;
    let count = sample.value.clone() * BigInt::from(prefix);
    let count = count.to_integer().to_string();
    Ok(match f {
        Format::Text => format!(
            "pattern {pattern}\ncount {count}\nn {prefix}\ndensity {} = {}\n",
            sample.value, sample.value_real
        ),
        Format::Csv => csv_text(
            &["pattern", "count", "n", "density"],
            [vec![pattern.to_string(), count, prefix.to_string(), sample.value_real.to_string()]],
        ),
        Format::Json => {
            let mut v = sample.to_json();
            v["pattern"] = json!(pattern);
            v["count"] = count.parse::<serde_json::Number>().map(Value::Number).expect("integer");
            v["density"] = json!(sample.value_real);
            v.as_object_mut().expect("object").remove("value");
            json_text(&v)
        }
    })
}

fn integral(f: Format, p: &IntegralParams) -> CliResult<String> {
    let e = integral_density(p)?;
    Ok(match f {
        Format::Text => format!(
            "quadrature {}\nincomplete_gamma {}\nresidual {:e}\n",
            e.quadrature, e.closed_form, e.residual
        ),
        Format::Csv => csv_text(
            &["a", "b", "k", "tau", "quadrature", "incomplete_gamma", "residual"],
            [[p.a, p.b, p.k, p.tau, e.quadrature, e.closed_form, e.residual]
                .iter()
                .map(|v| v.to_string())
                .collect()],
        ),
        Format::Json => json_text(&json!({
            "a": p.a, "b": if p.b.is_finite() { json!(p.b) } else { json!("inf") },
            "k": p.k, "tau": p.tau,
            "quadrature": e.quadrature, "incomplete_gamma": e.closed_form, "residual": e.residual,
        })),
    })
}

/// Render an exact series (`n,value` CSV; JSON with exact parts).
pub fn render_exact_curve(f: Format, samples: &[DensitySample]) -> String {
    match f {
        Format::Text => samples.iter().map(|s| format!("{} {}\n", s.n, s.value_real)).collect(),
        Format::Csv => csv_text(
            &["n", "value"],
            samples.iter().map(|s| vec![s.n.to_string(), s.value_real.to_string()]),
        ),
        Format::Json => json_text(&Value::Array(samples.iter().map(DensitySample::to_json).collect())),
    }
}

fn render_real_curve(f: Format, points: &[(u64, f64)]) -> String {
    match f {
        Format::Text => points.iter().map(|(n, v)| format!("{n} {v}\n")).collect(),
        Format::Csv => csv_text(
            &["n", "value"],
            points.iter().map(|(n, v)| vec![n.to_string(), v.to_string()]),
        ),
        Format::Json => json_text(&Value::Array(
            points.iter().map(|(n, v)| json!({"n": n, "value": v})).collect(),
        )),
    }
}

fn curve(f: Format, kind: CurveKind, n_max: u64, k: u64) -> CliResult<String> {
    Ok(match kind {
        CurveKind::Ratio => render_exact_curve(f, &ratio_curve(n_max)?),
        CurveKind::Zeros => render_exact_curve(f, &letter_density_curve('0', n_max)?),
        CurveKind::Ones => render_exact_curve(f, &letter_density_curve('1', n_max)?),
        CurveKind::ExpSum => {
            let pts: Vec<(u64, f64)> = (0..=n_max).map(|n| (n, exp_sum_approx(n))).collect();
            render_real_curve(f, &pts)
        }
        CurveKind::Triangle => {
            let pts = (1..=n_max)
                .map(|n| Ok((n, triangle_ratio(n)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            render_real_curve(f, &pts)
        }
        CurveKind::KRatio => {
            let pts = (2..=n_max)
                .map(|n| Ok((n, k_fib_ratio(k, n)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            render_real_curve(f, &pts)
        }
    })
}

fn palindromes(
    f: Format,
    word: Option<&str>,
    number: Option<i128>,
    prefix: Option<u64>,
    length: Option<usize>,
) -> CliResult<String> {
    match (word, number, prefix, length) {
        (Some(w), None, None, None) => {
            let report = pal_factors(&parse_word(w)?);
            let members: Vec<String> = report.pal_factors.iter().map(|p| p.to_string()).collect();
            Ok(match f {
                Format::Text => format!("P({w}) = {}\n{}\n", report.p_count, members.join(" ")),
                Format::Csv => csv_text(&["palindrome", "length"], members.iter().map(|m| vec![m.clone(), m.chars().count().to_string()])),
                Format::Json => json_text(&json!({"word": w, "p_count": report.p_count, "pal_factors": members})),
            })
        }
        (None, Some(n), None, None) => {
            let yes = is_numeric_palindrome(n)?;
            Ok(match f {
                Format::Json => json_text(&json!({"number": n.to_string(), "palindrome": yes})),
                Format::Csv => csv_text(&["number", "palindrome"], [vec![n.to_string(), yes.to_string()]]),
                Format::Text if yes => format!("{n} is a palindrome.\n"),
                Format::Text => format!("{n} is not a palindrome.\n"),
            })
        }
        (None, None, Some(prefix), Some(len)) => {
            let table = pal_density_table(prefix, len)?;
            let rows: Vec<(String, String, f64)> = table
                .iter()
                .map(|(p, d)| {
                    let count = (d.value.clone() * BigInt::from(d.n)).to_integer().to_string();
                    (p.to_string(), count, d.value_real)
                })
                .collect();
            Ok(match f {
                Format::Json => json_text(&Value::Array(
                    rows.iter()
                        .map(|(p, c, d)| json!({"palindrome": p, "count": c.parse::<u64>().expect("count"), "n": prefix, "density": d}))
                        .collect(),
                )),
                _ => csv_text(
                    &["palindrome", "count", "n", "density"],
                    rows.iter().map(|(p, c, d)| vec![p.clone(), c.clone(), prefix.to_string(), d.to_string()]),
                ),
            })
        }
        _ => usage("palindromes needs WORD, --n, or --prefix with --length"),
    }
}

fn scattered(f: Format, word: &str, append: Option<char>) -> CliResult<String> {
    let w = parse_word(word)?;
    let sp = sp_count(&w)?;
    let delta = append.map(|a| sp_delta(&w, a)).transpose()?;
    Ok(match f {
        Format::Text => {
            let mut s = format!("SP({word}) = {sp}\n");
            if let (Some(a), Some(d)) = (append, &delta) {
                let _ = writeln!(s, "SP({word}{a}) - SP({word}) = {d}");
            }
            s
        }
        Format::Csv => csv_text(
            &["word", "sp_count", "append", "sp_delta"],
            [vec![
                word.to_string(),
                sp.to_string(),
                append.map(String::from).unwrap_or_default(),
                delta.as_ref().map(|d| d.to_string()).unwrap_or_default(),
            ]],
        ),
        Format::Json => {
            let mut v = json!({"word": word, "sp_count": crate::density::big_number(&BigInt::from(sp))});
            if let (Some(a), Some(d)) = (append, delta) {
                v["append"] = json!(a.to_string());
                v["sp_delta"] = crate::density::big_number(&BigInt::from(d));
            }
            json_text(&v)
        }
    })
}

fn squarefree(
    f: Format,
    word: Option<&str>,
    alphabet: usize,
    n: Option<usize>,
    n_max: Option<usize>,
    length: Option<u64>,
) -> CliResult<String> {
    match (word, n, n_max, length) {
        (Some(w), None, None, None) => {
            let parsed = parse_word(w)?;
            let free = is_square_free(&parsed);
            let decoded = if parsed.alphabet() == &Alphabet::ab() || parsed.alphabet() == &Alphabet::binary() {
                let over_ab = Word::parse(&Alphabet::ab(), &w.replace('0', "a").replace('1', "b"))?;
                delta_decode(&over_ab).ok().map(|d| d.to_string())
            } else {
                None
            };
            Ok(match f {
                Format::Json => json_text(&json!({"word": w, "square_free": free, "delta_preimage": decoded})),
                Format::Csv => csv_text(&["word", "square_free", "delta_preimage"], [vec![w.to_string(), free.to_string(), decoded.unwrap_or_default()]]),
                Format::Text => {
                    let mut s = format!("{w} is {}square-free\n", if free { "" } else { "not " });
                    if let Some(d) = decoded {
                        let _ = writeln!(s, "delta preimage {d}");
                    }
                    s
                }
            })
        }
        (None, Some(n), None, None) => {
            let words: Vec<String> = enumerate_square_free(alphabet, n)?.iter().map(|w| w.to_string()).collect();
            Ok(match f {
                Format::Text => format!("s({n}) = {}\n{}\n", words.len(), words.join("\n")),
                Format::Csv => csv_text(&["word"], words.iter().map(|w| vec![w.clone()])),
                Format::Json => json_text(&json!({"alphabet": alphabet, "n": n, "count": words.len(), "words": words})),
            })
        }
        (None, None, Some(n_max), None) => {
            let rows = brandenburg_table(n_max)?;
            Ok(match f {
                Format::Json => json_text(&Value::Array(
                    rows.iter()
                        .map(|r| json!({"n": r.n, "s_n": crate::density::big_number(&BigInt::from(r.s_n.clone())), "lower": r.lower, "upper": r.upper, "lower_holds": r.lower_holds, "upper_holds": r.upper_holds}))
                        .collect(),
                )),
                _ => csv_text(
                    &["n", "s_n", "lower", "upper", "lower_holds", "upper_holds"],
                    rows.iter().map(|r| {
                        vec![r.n.to_string(), r.s_n.to_string(), r.lower.to_string(), r.upper.to_string(), r.lower_holds.to_string(), r.upper_holds.to_string()]
                    }),
                ),
            })
        }
        (None, None, None, Some(len)) => {
            let tm = thue_morse_prefix(len)?;
            let overlap = has_overlap(&tm);
            Ok(match f {
                Format::Json => json_text(&json!({"length": len, "word": tm.to_string(), "overlap_free": !overlap})),
                Format::Csv => csv_text(&["length", "word", "overlap_free"], [vec![len.to_string(), tm.to_string(), (!overlap).to_string()]]),
                Format::Text => format!("{tm}\n"),
            })
        }
        _ => usage("squarefree needs exactly one of WORD, --n, --n-max, --length"),
    }
}

fn record_row(r: &CatalanRecord) -> Vec<String> {
    vec![r.n.to_string(), r.c_n.to_string(), r.table_expr.to_string(), r.g_n.to_string()]
}

fn catalan(f: Format, n: Option<u64>, n_max: Option<u64>) -> CliResult<String> {
    match (n, n_max) {
        (None, Some(n_max)) => {
            let rows = catalan_records(n_max)?;
            Ok(match f {
                Format::Json => json_text(&Value::Array(
                    rows.iter()
                        .map(|r| json!({"n": r.n, "c_n": r.c_n.to_string(), "table_expr": r.table_expr.to_string(), "g_n": r.g_n.to_string(), "g_n_value": to_f64(&r.g_n)}))
                        .collect(),
                )),
                _ => csv_text(&["n", "c_n", "table_expr", "g_n"], rows.iter().map(record_row)),
            })
        }
        (Some(n), None) => {
            let r = CatalanRecord::new(n)?;
            let word_len = fib_word_at_catalan(n).ok().map(|w| w.len());
            let ratio = catalan_fib_ratio(n).ok();
            let c = u64::try_from(&r.c_n).ok();
            let exact_ratio = match c {
                Some(c) if (1..=64).contains(&c) => Some(rational(&fib(c + 1)?, &fib(c)?).to_string()),
                _ => None,
            };
            Ok(match f {
                Format::Json => json_text(&json!({
                    "n": n, "c_n": r.c_n.to_string(), "table_expr": r.table_expr.to_string(),
                    "g_n": r.g_n.to_string(), "fib_word_length": word_len, "fib_ratio": ratio,
                })),
                Format::Csv => csv_text(&["n", "c_n", "table_expr", "g_n"], [record_row(&r)]),
                Format::Text => {
                    let mut s = format!("C_{n} = {}\nC_{n} - 1 = {}\ng({n}) = {} = {}\n", r.c_n, r.table_expr, r.g_n, to_f64(&r.g_n));
                    if let Some(len) = word_len {
                        let _ = writeln!(s, "|f_(C_{n})| = {len}");
                    }
                    if let Some(ratio) = ratio {
                        let _ = write!(s, "F(C_{n}+1)/F(C_{n}) = {ratio}");
                        if let Some(e) = exact_ratio {
                            let _ = write!(s, " = {e}");
                        }
                        s.push('\n');
                    }
                    s
                }
            })
        }
        _ => usage("catalan needs exactly one of --n or --n-max"),
    }
}

fn fuzzy(f: Format, n: u64, mu_a: f64, mu_b: f64) -> CliResult<String> {
    let fw = fuzzy_fib_word(n, mu_a, mu_b)?;
    Ok(match f {
        Format::Json => json_text(&fw.to_json()),
        Format::Csv => csv_text(
            &["symbol", "membership"],
            fw.entries().iter().map(|e| vec![e.symbol.to_string(), e.membership.to_string()]),
        ),
        Format::Text => {
            let degrees: Vec<String> = fw.memberships().iter().map(|m| m.to_string()).collect();
            format!(
                "{}\n{}\nmembership {}\n",
                fw.symbols(),
                degrees.join(" "),
                word_membership(&fw)?
            )
        }
    })
}

/// Counts and converged ratio of the seeds-`1`,`10` run at `n = 22`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reproduction {
    pub word: Word,
    pub ones: u64,
    pub zeros: u64,
    pub ratio: f64,
}

/// Regenerate `f_22` from seeds `1`, `10`, count its letters, and iterate
/// `F(n)/F(n+1)` from `n = 1000` until successive ratios differ by < 1e-10.
pub fn reproduce_run() -> Result<Reproduction, Error> {
    let word = fib_word(22, &FibSeeds::binary("1", "10")?)?;
    let ones = word.letter_count('1')? as u64;
    let zeros = word.letter_count('0')? as u64;
    let ratio_at = |n: u64| -> Result<f64, Error> { Ok(to_f64(&rational(&fib(n)?, &fib(n + 1)?))) };
    let mut n = 1000;
    let ratio = loop {
        let (r, next) = (ratio_at(n)?, ratio_at(n + 1)?);
        if (r - next).abs() < 1e-10 {
            break r;
        }
        n += 1;
    };
    Ok(Reproduction {
        word,
        ones,
        zeros,
        ratio,
    })
}

fn reproduce(f: Format) -> CliResult<String> {
    let r = reproduce_run()?;
    let head: String = r.word.to_string().chars().take(100).collect();
    Ok(match f {
        Format::Text => format!(
            "for the first 100 digits: {head}\nNumber of ones: {}\nNumber of zeros: {}\ndensity = as n approaches infinity: {:.10}\n",
            r.ones, r.zeros, r.ratio
        ),
        Format::Csv => csv_text(
            &["ones", "zeros", "length", "ratio"],
            [vec![r.ones.to_string(), r.zeros.to_string(), r.word.len().to_string(), format!("{:.10}", r.ratio)]],
        ),
        Format::Json => json_text(&json!({
            "first_100": head, "ones": r.ones, "zeros": r.zeros,
            "length": r.word.len(), "ratio": r.ratio,
        })),
    })
}
