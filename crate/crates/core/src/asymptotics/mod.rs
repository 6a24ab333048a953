//! Behaviour of `R_{n1,n2,m}` at the singular points `z = 1` and `z = ∞`.
//!
//! Near `z = 1`
//!
//! ```text
//! R(z) = M (1 − z)^ν [log(1 − z)]^ε (1 + o(1)),
//! ```
//!
//! and along the negative axis `R(−T) ∼ C T^{α−γ} (log T)^k`. The order `N`
//! and polynomial part `Q` with `R − Q = o(z^N)` feed the integral
//! representation.

mod table;

pub use table::tabulated;

use crate::error::Result;
use crate::hyp2f1_core::gamma::{gamma_ratio, int_distance, pochhammer};
use crate::hyp2f1_core::{Params, DEFAULT_TOL};
use crate::poly::RealPoly;
use crate::shift_engine::{ratio, Shifts};
use num_complex::Complex64 as C;
use serde::Serialize;

const INT_TOL: f64 = 1e-12;

fn as_int(x: f64) -> Option<i64> {
    (int_distance(x) <= INT_TOL * x.abs().max(1.0)).then(|| x.round() as i64)
}

fn nonneg_int(x: f64) -> Option<i64> {
    as_int(x).filter(|&n| n >= 0)
}

/// Which modification of the generic `z → 1` formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateCase {
    None,
    AOrBNonposIntNum,
    AOrBNonposIntDen,
    EulerReducedNum,
    EulerReducedDen,
}

/// Local form of one `₂F₁` factor at `z = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalForm {
    Generic,
    Polynomial,
    EulerReduced,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Local {
    exponent: f64,
    log: i32,
    form: LocalForm,
    /// The exponent is the local `x3 − x1 − x2`.
    full: bool,
}

/// `₂F₁(x1,x2;x3;z) ∼ M (1−z)^e [log(1−z)]^k` as `z → 1`.
fn local_at_one(x1: f64, x2: f64, x3: f64) -> Local {
    let eta = x3 - x1 - x2;
    let poly = [(x1, x2), (x2, x1)]
        .into_iter()
        .filter_map(|(u, v)| nonneg_int(-u).map(|n| (n, v)))
        .min_by_key(|&(n, _)| n);
    if let Some((n, other)) = poly {
        // F(−n, v; x3; 1) = (x3−v)_n/(x3)_n vanishes iff v − x3 ∈ {0,…,n−1}
        let vanishes = nonneg_int(other - x3).is_some_and(|k| k < n);
        let exponent = if vanishes { eta } else { 0.0 };
        let form = if vanishes { LocalForm::EulerReduced } else { LocalForm::Polynomial };
        return Local { exponent, log: 0, form, full: vanishes };
    }
    if nonneg_int(x1 - x3).is_some() || nonneg_int(x2 - x3).is_some() {
        return Local { exponent: eta, log: 0, form: LocalForm::EulerReduced, full: true };
    }
    let zero = as_int(eta) == Some(0);
    Local { exponent: eta.min(0.0), log: i32::from(zero), form: LocalForm::Generic, full: eta < 0.0 }
}

/// Classification at `z = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticAtOne {
    pub nu: f64,
    /// Power `ε ∈ {−1, 0, 1}` of `log(1 − z)`.
    pub log_flag: i32,
    pub degenerate_case: DegenerateCase,
    pub numerator: LocalForm,
    pub denominator: LocalForm,
    /// `ν > −1`.
    pub integrable: bool,
}

/// `ν`, the log power and the degenerate case of `R` at `z = 1`.
///
/// Errors only when `c + m` is a non-positive integer, where `R` is undefined.
pub fn classify_at_one(p: &Params, s: &Shifts) -> Result<AsymptoticAtOne> {
    let q = s.shifted(p)?;
    let num = local_at_one(q.a, q.b, q.c);
    let den = local_at_one(p.a, p.b, p.c);
    let degenerate_case = match (den.form, num.form) {
        (LocalForm::Polynomial, _) => DegenerateCase::AOrBNonposIntDen,
        (_, LocalForm::Polynomial) => DegenerateCase::AOrBNonposIntNum,
        (LocalForm::EulerReduced, _) => DegenerateCase::EulerReducedDen,
        (_, LocalForm::EulerReduced) => DegenerateCase::EulerReducedNum,
        _ => DegenerateCase::None,
    };
    // both exponents full: the difference is the integer q exactly
    let nu = if num.full && den.full { (s.m - s.n1 - s.n2) as f64 } else { num.exponent - den.exponent };
    Ok(AsymptoticAtOne {
        nu,
        log_flag: num.log - den.log,
        degenerate_case,
        numerator: num.form,
        denominator: den.form,
        integrable: nu > -1.0,
    })
}

/// Which asymptotic regime produced the classification at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InfinityCase {
    /// `a − b ∉ ℤ`, no logarithms.
    NoLog,
    /// `a − b` and `a+n1 − b−n2` nonzero integers.
    Log,
    /// `a = b` or `a+n1 = b+n2`: a logarithm in the leading term.
    EqualParams,
    /// At least one function is a polynomial, possibly times a power of `1 + z`.
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Growth {
    exponent: f64,
    log: i32,
    coeff: f64,
    logs_present: bool,
    reduced: bool,
}

/// Exponent `e` of `₂F₁(x1,x2;x3;z) ∼ M (1−z)^e` at `z = 1`.
pub(crate) fn exponent_at_one(x1: f64, x2: f64, x3: f64) -> f64 {
    local_at_one(x1, x2, x3).exponent
}

/// Exponent `e` of `|₂F₁(x1,x2;x3;x)| ∼ M x^e` as `x → ∞`.
pub(crate) fn exponent_at_infinity(x1: f64, x2: f64, x3: f64) -> Result<f64> {
    Ok(growth(x1, x2, x3)?.exponent)
}

/// `₂F₁(x1,x2;x3;−z) ∼ coeff · z^exponent (log z)^log` as `z → +∞`.
fn growth(x1: f64, x2: f64, x3: f64) -> Result<Growth> {
    let poly = [(x1, x2), (x2, x1)]
        .into_iter()
        .filter_map(|(u, v)| nonneg_int(-u).map(|n| (n, v)))
        .min_by_key(|&(n, _)| n);
    if let Some((n, other)) = poly {
        let coeff = pochhammer(other, n)? / pochhammer(x3, n)?;
        return Ok(Growth { exponent: n as f64, log: 0, coeff, logs_present: false, reduced: true });
    }
    let euler = [(x1, x2), (x2, x1)]
        .into_iter()
        .filter_map(|(u, v)| nonneg_int(u - x3).map(|d| (d, v)))
        .min_by_key(|&(d, _)| d);
    if let Some((d, other)) = euler {
        // (1+z)^{x3−x1−x2} ₂F₁(x3−x1, x3−x2; x3; −z), the second factor of degree d
        let coeff = pochhammer(x3 - other, d)? / pochhammer(x3, d)?;
        let exponent = x3 - x1 - x2 + d as f64;
        return Ok(Growth { exponent, log: 0, coeff, logs_present: false, reduced: true });
    }
    let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
    match as_int(hi - lo) {
        Some(0) => {
            let coeff = gamma_ratio(&[x3], &[lo, x3 - lo])?;
            Ok(Growth { exponent: -lo, log: 1, coeff, logs_present: true, reduced: false })
        }
        d => {
            let coeff = gamma_ratio(&[x3, hi - lo], &[x3 - lo, hi])?;
            Ok(Growth { exponent: -lo, log: 0, coeff, logs_present: d.is_some(), reduced: false })
        }
    }
}

/// Classification at infinity together with the `(N, Q)` pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct AsymptoticAtInfinity {
    /// `α − γ`.
    pub leading_exponent: f64,
    pub alpha: f64,
    pub gamma: f64,
    /// Power of `log z` in the leading term.
    pub leading_log: i32,
    /// `C` in `R(−T) ∼ C T^{α−γ} (log T)^k`.
    pub leading_coeff: f64,
    pub has_log: bool,
    /// `A_{1,2}/A_{3,4}` is the leading constant.
    pub A_ratio_defined: bool,
    pub case: InfinityCase,
    pub Q: RealPoly,
    pub N: usize,
    /// `(N, Q)` comes from the table of worked shift triples.
    pub tabulated: bool,
}

/// Leading behaviour of `R(−z)` as `z → ∞` and the `(N, Q)` used by the
/// integral representation.
pub fn classify_at_infinity(p: &Params, s: &Shifts) -> Result<AsymptoticAtInfinity> {
    let q = s.shifted(p)?;
    let num = growth(q.a, q.b, q.c)?;
    let den = growth(p.a, p.b, p.c)?;
    let leading_exponent = num.exponent - den.exponent;
    let case = if num.reduced || den.reduced {
        InfinityCase::Reduced
    } else if num.log != 0 || den.log != 0 {
        InfinityCase::EqualParams
    } else if num.logs_present || den.logs_present {
        InfinityCase::Log
    } else {
        InfinityCase::NoLog
    };
    let leading_log = num.log - den.log;
    let leading_coeff = num.coeff / den.coeff;
    let fits = |(n, q): &(usize, RealPoly)| consistent(*n, q, leading_exponent, leading_log, leading_coeff);
    let (n, poly, tab) = match tabulated(p, s).filter(fits) {
        Some((n, poly)) => (n, poly, true),
        None => (general_order(leading_exponent), RealPoly::zero(), false),
    };
    Ok(AsymptoticAtInfinity {
        leading_exponent,
        alpha: num.exponent,
        gamma: den.exponent,
        leading_log,
        leading_coeff,
        has_log: num.logs_present || den.logs_present,
        A_ratio_defined: matches!(case, InfinityCase::NoLog | InfinityCase::Log),
        case,
        Q: poly,
        N: n,
        tabulated: tab,
    })
}

/// Whether `R − Q = o(z^N)` follows from the leading term `C z^e (log z)^k` of
/// `R(−z)`: `Q = 0` below order `N`, `Q = C(−z)^N` at order `N`.
fn consistent(n: usize, q: &RealPoly, e: f64, k: i32, coeff: f64) -> bool {
    let nf = n as f64;
    let at_n = (e - nf).abs() <= INT_TOL * nf.max(1.0);
    if q.coeffs().iter().take(n).any(|&x| x != 0.0) || q.degree() > n as isize {
        return false;
    }
    if e < nf && !at_n || at_n && k < 0 {
        return q.is_zero();
    }
    if at_n && k == 0 {
        let want = if n % 2 == 0 { coeff } else { -coeff };
        return (q.coeff(n) - want).abs() <= 1e-9 * want.abs().max(1e-300);
    }
    false
}

/// `N = ⌈(α−γ)₊⌉ + 1`, used with `Q = 0`.
pub fn general_order(leading_exponent: f64) -> usize {
    let e = leading_exponent.max(0.0);
    let ceil = match as_int(e) {
        Some(k) => k as f64,
        None => e.ceil(),
    };
    ceil as usize + 1
}

/// None of `a, a+n1, b, b+n2, c−a, c+m−a−n1, c−b, c+m−b−n2` lies in `−ℕ₀`.
pub fn noninteger_condition(p: &Params, s: &Shifts) -> bool {
    let (a, b, c) = (p.a, p.b, p.c);
    let (n1, n2, m) = (s.n1 as f64, s.n2 as f64, s.m as f64);
    [a, a + n1, b, b + n2, c - a, c + m - a - n1, c - b, c + m - b - n2]
        .iter()
        .all(|&x| nonneg_int(-x).is_none())
}

/// `|R(1 − h)| · h^{−θ}` for `h = 10^{−k}`, `k = 2..=6`.
pub fn probe_at_one(p: &Params, s: &Shifts, theta: f64) -> Result<Vec<f64>> {
    (2..=6)
        .map(|k| {
            let h = 10f64.powi(-k);
            Ok(ratio(p, s, C::new(1.0 - h, 0.0), DEFAULT_TOL)?.norm() * h.powf(-theta))
        })
        .collect()
}

/// `|R(−T) − Q(−T)| · T^{−N}` for `T = 10^k`, `k = 2..=5`.
pub fn probe_at_infinity(p: &Params, s: &Shifts, info: &AsymptoticAtInfinity) -> Result<Vec<f64>> {
    (2..=5)
        .map(|k| {
            let t = 10f64.powi(k);
            let z = C::new(-t, 0.0);
            let r = ratio(p, s, z, DEFAULT_TOL)?;
            Ok((r - info.Q.eval_complex(z)).norm() * t.powi(-(info.N as i32)))
        })
        .collect()
}

/// Whether a probe sequence decreases monotonically.
pub fn decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

/// Monotone decrease over the last two decades of a probe sequence.
pub fn confirms_decay(v: &[f64]) -> bool {
    v.len() >= 3 && decreasing(&v[v.len() - 3..])
}
