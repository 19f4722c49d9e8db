//! The integral density model `∫_a^b e^{-x(1+1/τ)} x^{k-1} dx`.
//!
//! Two independent evaluations are returned: adaptive Gauss–Kronrod
//! quadrature on the integrand itself, and the lower incomplete gamma
//! closed form `c^{-k} [γ(k, b c) - γ(k, a c)]` with `c = 1 + 1/τ`.
//! The integral is oriented: `a > b` yields the negated integral over `[b, a]`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use statrs::function::gamma::{checked_gamma_li, gamma};

use crate::error::{domain, Error, Result};

/// Parameters of the integral model. `b` may be `f64::INFINITY`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralParams {
    pub a: f64,
    pub b: f64,
    pub k: f64,
    pub tau: f64,
}

impl IntegralParams {
    pub fn new(a: f64, b: f64, k: f64, tau: f64) -> Result<Self> {
        let p = Self { a, b, k, tau };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k > 0.0 && self.k.is_finite()) {
            return domain(format!("k must be positive and finite, got {}", self.k));
        }
        if !(self.tau > 0.0 && self.tau.is_finite()) {
            return domain(format!("tau must be positive and finite, got {}", self.tau));
        }
        for (name, v) in [("a", self.a), ("b", self.b)] {
            if v.is_nan() || v < 0.0 {
                return domain(format!("{name} must be a non-negative number, got {v}"));
            }
        }
        if self.a.is_infinite() && self.b.is_infinite() {
            return domain("at most one bound may be infinite");
        }
        Ok(())
    }

    /// Decay rate `1 + 1/τ` of the exponential factor.
    pub fn rate(&self) -> f64 {
        1.0 + 1.0 / self.tau
    }
}

/// Both evaluations of the integral plus the quadrature's error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralEstimate {
    pub quadrature: f64,
    pub closed_form: f64,
    pub residual: f64,
}

impl IntegralEstimate {
    /// `|quadrature - closed_form| / max(|closed_form|, tiny)`.
    pub fn relative_disagreement(&self) -> f64 {
        let scale = self.closed_form.abs().max(f64::MIN_POSITIVE);
        (self.quadrature - self.closed_form).abs() / scale
    }
}

pub fn integral_density(p: &IntegralParams) -> Result<IntegralEstimate> {
    p.validate()?;
    let closed_form = gamma_path(p)?;
    let (quadrature, residual) = quadrature_path(p)?;
    Ok(IntegralEstimate {
        quadrature,
        closed_form,
        residual,
    })
}

fn lower_gamma(k: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        Ok(0.0)
    } else if x.is_infinite() {
        Ok(gamma(k))
    } else {
        checked_gamma_li(k, x).map_err(|e| Error::Domain(e.to_string()))
    }
}

fn gamma_path(p: &IntegralParams) -> Result<f64> {
    let c = p.rate();
    let upper = lower_gamma(p.k, p.b * c)?;
    let lower = lower_gamma(p.k, p.a * c)?;
    Ok(c.powf(-p.k) * (upper - lower))
}

fn quadrature_path(p: &IntegralParams) -> Result<(f64, f64)> {
    let (lo, hi, sign) = match p.a.partial_cmp(&p.b) {
        Some(Ordering::Equal) => return Ok((0.0, 0.0)),
        Some(Ordering::Greater) => (p.b, p.a, -1.0),
        _ => (p.a, p.b, 1.0),
    };
    let c = p.rate();
    let k = p.k;
    let (value, residual) = if k < 1.0 {
        // x = u² removes the x^{k-1} endpoint singularity at 0.
        let g = move |u: f64| 2.0 * u.powf(2.0 * k - 1.0) * (-c * u * u).exp();
        integrate_to(g, lo.sqrt(), hi.sqrt())?
    } else {
        let g = move |x: f64| x.powf(k - 1.0) * (-c * x).exp();
        integrate_to(g, lo, hi)?
    };
    Ok((sign * value, residual))
}

/// Integrate over `[lo, hi]`, mapping `[lo, ∞)` onto `[0, 1)` when needed.
fn integrate_to(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<(f64, f64)> {
    if hi.is_infinite() {
        let mapped = |t: f64| {
            let s = 1.0 - t;
            let y = f(lo + t / s) / (s * s);
            if y.is_finite() {
                y
            } else {
                0.0
            }
        };
        adaptive_gauss_kronrod(mapped, 0.0, 1.0, ABS_TOL, REL_TOL)
    } else {
        adaptive_gauss_kronrod(f, lo, hi, ABS_TOL, REL_TOL)
    }
}

const ABS_TOL: f64 = 1e-15;
const REL_TOL: f64 = 1e-13;
const MAX_INTERVALS: usize = 2000;

// 15-point Kronrod nodes (non-negative half) with weights, and the embedded
// 7-point Gauss weights for the odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One G7-K15 panel: `(kronrod estimate, |kronrod - gauss|)`.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive G7-K15 quadrature: repeatedly bisects the panel with the
/// largest error estimate until the summed estimate meets the tolerance.
pub fn adaptive_gauss_kronrod(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    let (value, error) = gk15(&f, a, b);
    let mut heap = BinaryHeap::from([Panel { a, b, value, error }]);
    let (mut total, mut total_err) = (value, error);
    // NaN errors compare as None and keep refining until the panel cap
    while !matches!(
        total_err.partial_cmp(&abs_tol.max(rel_tol * total.abs())),
        Some(Ordering::Less | Ordering::Equal)
    ) {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature {
                value: total,
                residual: total_err,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel can no longer be split in floating point
            heap.push(worst);
            break;
        }
        let (lv, le) = gk15(&f, worst.a, mid);
        let (rv, re) = gk15(&f, mid, worst.b);
        total += lv + rv - worst.value;
        total_err += le + re - worst.error;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: lv,
            error: le,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: rv,
            error: re,
        });
    }
    // re-sum to shed the drift of the running updates
    let value: f64 = heap.iter().map(|p| p.value).sum();
    let error: f64 = heap.iter().map(|p| p.error).sum();
    if !(value.is_finite() && error <= abs_tol.max(rel_tol * value.abs()) * 1e3) {
        return Err(Error::Quadrature {
            value,
            residual: error,
        });
    }
    Ok((value, error))
}
