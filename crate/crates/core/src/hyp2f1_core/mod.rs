//! Evaluation of the Gauss hypergeometric function
//!
//! ```text
//! ₂F₁(a,b;c;z) = Σ (a)_n (b)_n / ((c)_n n!) zⁿ
//! ```
//!
//! for real parameters and complex `z` in the cut plane `ℂ ∖ [1,∞)`, plus the
//! boundary values `₂F₁(x ± i0)` on the cut `x > 1`.
//!
//! Region selection:
//!
//! ```text
//! |z| ≤ 1/2             direct series
//! |z/(z−1)| ≤ 3/4       Pfaff transform
//! |1−z| ≤ 3/4           connection at 1 (logarithmic when c−a−b ∈ ℤ)
//! |1/z| ≤ 3/4           connection at ∞ (logarithmic when a−b ∈ ℤ)
//! otherwise             Taylor continuation of the ODE from |z₀| = 0.45
//! ```
//!
//! Points on a bank of the cut carry the exact phase of `1−z` and `−z`, so the
//! connection formulas give the one-sided limits directly.

pub mod gamma;

use crate::error::{Error, Result};
use gamma::{
    cos_pi, digamma, gamma_ratio, int_distance, is_int, is_int_approx, is_nonpos_int, psi_over_gamma, rgamma,
};
use num_complex::Complex64 as C;
use std::f64::consts::PI;

pub use gamma::{GammaSign, pochhammer};

pub const DEFAULT_TOL: f64 = 1e-15;
const MAX_TERMS: usize = 20_000;
const REGION: f64 = 0.75;
const NEAR_INT: f64 = 1e-5;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Hypergeometric parameters `(a, b, c)` with `−c ∉ ℕ₀`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Params {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite parameters ({a}, {b}, {c})")));
        }
        if is_nonpos_int(c) {
            return Err(Error::ParameterPole(format!("c = {c} is a non-positive integer")));
        }
        Ok(Params { a, b, c })
    }

    pub fn swapped(&self) -> Params {
        Params { a: self.b, b: self.a, c: self.c }
    }
}

/// Bank of the cut `[1, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bank {
    Upper,
    Lower,
}

impl Bank {
    pub fn sign(self) -> f64 {
        match self {
            Bank::Upper => 1.0,
            Bank::Lower => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Point {
    Plane(C),
    /// `x = 1 + xm1` approached from the given bank.
    Cut { xm1: f64, bank: Bank },
}

impl Point {
    fn z(self) -> C {
        match self {
            Point::Plane(z) => z,
            Point::Cut { xm1, .. } => C::new(1.0 + xm1, 0.0),
        }
    }

    fn one_minus(self) -> C {
        match self {
            Point::Plane(z) => C::new(1.0, 0.0) - z,
            Point::Cut { xm1, .. } => C::new(-xm1, 0.0),
        }
    }

    fn inv(self) -> C {
        match self {
            Point::Plane(z) => z.inv(),
            Point::Cut { xm1, .. } => C::new(1.0 / (1.0 + xm1), 0.0),
        }
    }

    fn ln_one_minus(self) -> C {
        match self {
            Point::Plane(z) => (C::new(1.0, 0.0) - z).ln(),
            Point::Cut { xm1, bank } => C::new(xm1.ln(), -PI * bank.sign()),
        }
    }

    fn ln_neg(self) -> C {
        match self {
            Point::Plane(z) => (-z).ln(),
            Point::Cut { xm1, bank } => C::new((1.0 + xm1).ln(), -PI * bank.sign()),
        }
    }

    fn pow_one_minus(self, e: f64) -> C {
        if e == 0.0 {
            return C::new(1.0, 0.0);
        }
        if is_int(e) && e.abs() < 64.0 {
            return self.one_minus().powi(e as i32);
        }
        (self.ln_one_minus() * e).exp()
    }

    fn pow_neg(self, e: f64) -> C {
        if e == 0.0 {
            return C::new(1.0, 0.0);
        }
        (self.ln_neg() * e).exp()
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Default)]
struct Acc {
    sum: C,
    comp: C,
}

impl Acc {
    fn add(&mut self, x: C) {
        self.sum.re = neumaier(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier(self.sum.im, x.im, &mut self.comp.im);
    }

    fn value(&self) -> C {
        self.sum + self.comp
    }
}

fn neumaier(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

/// Stops a series once two consecutive terms fall below `tol·|sum|`.
struct Stopper {
    tol: f64,
    quiet: u32,
}

impl Stopper {
    fn new(tol: f64) -> Self {
        Stopper { tol, quiet: 0 }
    }

    fn done(&mut self, term: C, sum: C) -> bool {
        if term.norm() <= self.tol * sum.norm() || term.norm() == 0.0 {
            self.quiet += 1;
        } else {
            self.quiet = 0;
        }
        self.quiet >= 2
    }
}

/// The defining power series; terminates when `a` or `b` is a non-positive integer.
fn series(a: f64, b: f64, c: f64, z: C, tol: f64) -> Result<C> {
    let mut acc = Acc::default();
    let mut term = C::new(1.0, 0.0);
    acc.add(term);
    let polynomial = is_nonpos_int(a) || is_nonpos_int(b);
    let mut stop = Stopper::new(tol);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let num = (a + kf) * (b + kf);
        if num == 0.0 {
            return Ok(acc.value());
        }
        term *= z * (num / ((c + kf) * (kf + 1.0)));
        acc.add(term);
        if !polynomial && stop.done(term, acc.value()) {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence(format!("series ({a}, {b}; {c}; {z}) after {MAX_TERMS} terms")))
}

/// `₂F₁(a,b;c;z)` for `z` off the cut.
pub fn hyp2f1(p: &Params, z: C, tol: f64) -> Result<C> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("non-finite z = {z}")));
    }
    if z.im == 0.0 && z.re >= 1.0 && !(z.re == 1.0 && p.c - p.a - p.b > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "z = {} lies on the cut; use hyp2f1_on_cut",
            z.re
        )));
    }
    eval_point(p.a, p.b, p.c, Point::Plane(z), tol)
}

/// Real-argument convenience wrapper for `x < 1`.
pub fn hyp2f1_real(p: &Params, x: f64, tol: f64) -> Result<f64> {
    Ok(hyp2f1(p, C::new(x, 0.0), tol)?.re)
}

/// Boundary value `₂F₁(a,b;c;x ± i0)` for `x > 1`.
pub fn hyp2f1_on_cut(p: &Params, x: f64, bank: Bank, tol: f64) -> Result<C> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed 1")));
    }
    hyp2f1_on_cut_offset(p, x - 1.0, bank, tol)
}

/// Same as [`hyp2f1_on_cut`] with the point given by its offset `x − 1`,
/// which keeps full relative accuracy near the branch point.
pub fn hyp2f1_on_cut_offset(p: &Params, xm1: f64, bank: Bank, tol: f64) -> Result<C> {
    if !(xm1 > 0.0 && xm1.is_finite()) {
        return Err(Error::InvalidArgument(format!("x − 1 = {xm1} must be positive")));
    }
    eval_point(p.a, p.b, p.c, Point::Cut { xm1, bank }, tol)
}

/// Boundary value by evaluating at `x(1 ± iδ)`, `δ = 10^{−3−k}`, `k = 0..5`,
/// and Richardson extrapolation of order 2 towards `δ = 0`.
pub fn hyp2f1_on_cut_extrapolated(p: &Params, x: f64, bank: Bank, tol: f64) -> Result<C> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed 1")));
    }
    let mut table: Vec<[C; 3]> = Vec::with_capacity(6);
    for k in 0..6 {
        let delta = 10f64.powi(-3 - k);
        let f = hyp2f1(p, C::new(x, x * delta * bank.sign()), tol)?;
        let mut row = [f, C::default(), C::default()];
        if let Some(prev) = table.last() {
            for j in 1..3 {
                if k as usize >= j {
                    let factor = 10f64.powi(j as i32) - 1.0;
                    row[j] = row[j - 1] + (row[j - 1] - prev[j - 1]) / factor;
                }
            }
        }
        table.push(row);
    }
    let best = table[5][2];
    let spread = (best - table[4][2]).norm() / best.norm().max(f64::MIN_POSITIVE);
    if spread > tol.max(1e-10) {
        return Err(Error::DegenerateExtrapolation(spread));
    }
    Ok(best)
}

/// `|₂F₁(a,b;c;x)|²` on the cut, equal on both banks.
pub fn abs2_on_cut(p: &Params, x: f64, tol: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed 1")));
    }
    abs2_on_cut_offset(p, x - 1.0, tol)
}

/// [`abs2_on_cut`] with the point given by `x − 1`.
///
/// With `a−b ∉ ℤ` and `c−a−b ∉ ℤ` this is the sum of two real squares
///
/// ```text
/// π²Γ(c)²/(Γ(a)²Γ(b)²) · { (x−1)^{2(c−a−b)}/Γ(c−a−b+1)² · ₂F₁(c−a,c−b;c−a−b+1;1−x)²
///     + [ Γ(b−a)Γ(a)x^{−a}cos(πa)/(πΓ(c−a)) ₂F₁(a,1−c+a;1−b+a;1/x) + (a↔b) ]² }
/// ```
pub fn abs2_on_cut_offset(p: &Params, xm1: f64, tol: f64) -> Result<f64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let eta = c - a - b;
    let degenerate = is_int_approx(a - b)
        || is_int_approx(eta)
        || is_nonpos_int(a)
        || is_nonpos_int(b)
        || is_nonpos_int(c - a)
        || is_nonpos_int(c - b);
    // the 1/x series cancels badly close to x = 1
    if degenerate || xm1 < 1e-2 {
        return Ok(hyp2f1_on_cut_offset(p, xm1, Bank::Upper, tol)?.norm_sqr());
    }
    let x = 1.0 + xm1;
    let pref = PI * gamma_ratio(&[c], &[a, b])?;
    let inner1 = eval_point(c - a, c - b, eta + 1.0, Point::Plane(C::new(-xm1, 0.0)), tol)?.re;
    let first = xm1.powf(eta) * rgamma(eta + 1.0) * inner1;
    let term = |u: f64, v: f64| -> Result<f64> {
        let coef = gamma_ratio(&[v - u, u], &[c - u])? * cos_pi(u) / PI;
        let f = eval_point(u, 1.0 - c + u, 1.0 - v + u, Point::Plane(C::new(1.0 / x, 0.0)), tol)?.re;
        Ok(coef * x.powf(-u) * f)
    };
    let second = term(a, b)? + term(b, a)?;
    Ok(pref * pref * (first * first + second * second))
}

pub(crate) fn eval_point(a: f64, b: f64, c: f64, pt: Point, tol: f64) -> Result<C> {
    if is_nonpos_int(c) {
        return Err(Error::ParameterPole(format!("c = {c}")));
    }
    let tol = tol.clamp(1e-17, 1e-2);
    if let Point::Plane(z) = pt {
        if z == C::new(0.0, 0.0) {
            return Ok(C::new(1.0, 0.0));
        }
    }
    if is_nonpos_int(a) || is_nonpos_int(b) {
        return series(a, b, c, pt.z(), tol);
    }
    if is_nonpos_int(c - a) || is_nonpos_int(c - b) {
        return Ok(pt.pow_one_minus(c - a - b) * series(c - a, c - b, c, pt.z(), tol)?);
    }
    match pt {
        Point::Plane(z) => {
            if z == C::new(1.0, 0.0) {
                if c - a - b > 0.0 {
                    return Ok(C::new(gamma_ratio(&[c, c - a - b], &[c - a, c - b])?, 0.0));
                }
                return Err(Error::InvalidArgument("₂F₁ diverges at z = 1".into()));
            }
            if z.norm() <= 0.5 {
                return series(a, b, c, z, tol);
            }
            let near = |d: f64| !is_int_approx(d) && int_distance(d) < NEAR_INT;
            let mut candidates: Vec<(f64, u8)> = vec![(pfaff_modulus(z), 0)];
            if !near(c - a - b) {
                candidates.push(((C::new(1.0, 0.0) - z).norm(), 1));
            }
            if !near(a - b) {
                candidates.push((1.0 / z.norm(), 2));
            }
            let best = candidates
                .into_iter()
                .filter(|(m, _)| *m <= REGION)
                .min_by(|x, y| x.0.total_cmp(&y.0));
            match best {
                Some((_, 0)) => pfaff(a, b, c, z, tol),
                Some((_, 1)) => at_one(a, b, c, pt, tol),
                Some((_, _)) => at_infinity(a, b, c, pt, tol),
                None => continuation(a, b, c, z, tol),
            }
        }
        Point::Cut { xm1, .. } => {
            if xm1 <= REGION {
                at_one(a, b, c, pt, tol)
            } else {
                at_infinity(a, b, c, pt, tol)
            }
        }
    }
}

fn pfaff_modulus(z: C) -> f64 {
    z.norm() / (z - 1.0).norm()
}

fn pfaff(a: f64, b: f64, c: f64, z: C, tol: f64) -> Result<C> {
    let w = z / (z - 1.0);
    let pre = ((C::new(1.0, 0.0) - z).ln() * (-a)).exp();
    Ok(pre * series(a, c - b, c, w, tol)?)
}

fn at_one(a: f64, b: f64, c: f64, pt: Point, tol: f64) -> Result<C> {
    let eta = c - a - b;
    if is_int_approx(eta) {
        let m = eta.round() as i64;
        if m >= 0 {
            return log_at_one(a, b, m as usize, pt, tol);
        }
        let pre = pt.one_minus().powi(m as i32);
        return Ok(pre * log_at_one(c - a, c - b, (-m) as usize, pt, tol)?);
    }
    let w = pt.one_minus();
    let g1 = gamma_ratio(&[c, eta], &[c - a, c - b])?;
    let g2 = gamma_ratio(&[c, -eta], &[a, b])?;
    let mut out = C::new(0.0, 0.0);
    if g1 != 0.0 {
        out += series(a, b, 1.0 - eta, w, tol)? * g1;
    }
    if g2 != 0.0 {
        out += pt.pow_one_minus(eta) * series(c - a, c - b, 1.0 + eta, w, tol)? * g2;
    }
    Ok(out)
}

/// Connection at 1 for `c = a + b + m`, `m ∈ ℕ₀`.
fn log_at_one(a: f64, b: f64, m: usize, pt: Point, tol: f64) -> Result<C> {
    let c = a + b + m as f64;
    let mf = m as f64;
    let w = pt.one_minus();
    let zm1 = -w;
    let mut head = C::new(0.0, 0.0);
    let mut coef = 1.0;
    let mut pow = C::new(1.0, 0.0);
    for k in 0..m {
        let kf = k as f64;
        head += pow * (coef * gamma::factorial((m - k - 1) as i64));
        coef *= (a + kf) * (b + kf) / (kf + 1.0);
        pow *= zm1;
    }
    let pre1 = gamma_ratio(&[c], &[a + mf, b + mf])?;
    let pre2 = gamma_ratio(&[c], &[a, b])?;
    let ln = pt.ln_one_minus();
    let mut u = C::new(1.0 / gamma::factorial(m as i64), 0.0);
    let mut psi1 = -EULER_GAMMA;
    let mut psi2 = digamma(mf + 1.0);
    let mut psi3 = digamma(a + mf);
    let mut psi4 = digamma(b + mf);
    let mut acc = Acc::default();
    let mut stop = Stopper::new(tol);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let term = u * (ln - psi1 - psi2 + psi3 + psi4);
        acc.add(term);
        if stop.done(term, acc.value()) {
            return Ok(head * pre1 - zm1.powi(m as i32) * acc.value() * pre2);
        }
        u *= w * ((a + mf + kf) * (b + mf + kf) / ((kf + 1.0) * (kf + mf + 1.0)));
        psi1 += 1.0 / (kf + 1.0);
        psi2 += 1.0 / (kf + mf + 1.0);
        psi3 += 1.0 / (a + mf + kf);
        psi4 += 1.0 / (b + mf + kf);
    }
    Err(Error::NonConvergence("logarithmic connection at 1".into()))
}

fn at_infinity(a: f64, b: f64, c: f64, pt: Point, tol: f64) -> Result<C> {
    let d = b - a;
    if is_int_approx(d) {
        let (lo, m) = if d >= 0.0 { (a, d.round() as usize) } else { (b, (-d).round() as usize) };
        return log_at_infinity(lo, m, c, pt, tol);
    }
    let v = pt.inv();
    let g1 = gamma_ratio(&[c, b - a], &[b, c - a])?;
    let g2 = gamma_ratio(&[c, a - b], &[a, c - b])?;
    let mut out = C::new(0.0, 0.0);
    if g1 != 0.0 {
        out += pt.pow_neg(-a) * series(a, a - c + 1.0, a - b + 1.0, v, tol)? * g1;
    }
    if g2 != 0.0 {
        out += pt.pow_neg(-b) * series(b, b - c + 1.0, b - a + 1.0, v, tol)? * g2;
    }
    Ok(out)
}

/// Connection at ∞ for `b = a + m`, `m ∈ ℕ₀`.
fn log_at_infinity(a: f64, m: usize, c: f64, pt: Point, tol: f64) -> Result<C> {
    let mf = m as f64;
    let v = pt.inv();
    let mut head = C::new(0.0, 0.0);
    let mut coef = 1.0;
    let mut pow = C::new(1.0, 0.0);
    for k in 0..m {
        let kf = k as f64;
        head += pow * (coef * gamma::factorial((m - k - 1) as i64) * rgamma(c - a - kf));
        coef *= (a + kf) / (kf + 1.0);
        pow *= v;
    }
    let pre1 = gamma_ratio(&[c], &[a + mf])?;
    let pre2 = gamma_ratio(&[c], &[a])?;
    let ln = pt.ln_neg();
    let mut u = v.powi(m as i32) / gamma::factorial(m as i64);
    let mut psi1 = digamma(1.0 + mf);
    let mut psi2 = -EULER_GAMMA;
    let mut psi3 = digamma(a + mf);
    let mut x = c - a - mf;
    let mut rg = rgamma(x);
    let mut pg = psi_over_gamma(x);
    let mut acc = Acc::default();
    let mut stop = Stopper::new(tol);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let term = u * ((ln + psi1 + psi2 - psi3) * rg - pg);
        acc.add(term);
        if stop.done(term, acc.value()) {
            return Ok(pt.pow_neg(-a) * (head * pre1 + acc.value() * pre2));
        }
        u *= -v * ((a + mf + kf) / ((kf + 1.0) * (kf + mf + 1.0)));
        psi1 += 1.0 / (1.0 + mf + kf);
        psi2 += 1.0 / (kf + 1.0);
        psi3 += 1.0 / (a + mf + kf);
        pg = (x - 1.0) * pg - rg;
        rg *= x - 1.0;
        x -= 1.0;
    }
    Err(Error::NonConvergence("logarithmic connection at infinity".into()))
}

/// Analytic continuation along the ray from `0.45·z/|z|` to `z` by Taylor
/// steps of the hypergeometric equation, each step at most half the distance
/// to the nearest singular point.
fn continuation(a: f64, b: f64, c: f64, z: C, tol: f64) -> Result<C> {
    let mut z0 = z * (0.45 / z.norm());
    let mut w = series(a, b, c, z0, tol)?;
    let mut dw = series(a + 1.0, b + 1.0, c + 1.0, z0, tol)? * (a * b / c);
    for _ in 0..10_000 {
        let remaining = z - z0;
        if remaining.norm() == 0.0 {
            return Ok(w);
        }
        let radius = z0.norm().min((C::new(1.0, 0.0) - z0).norm());
        let h = if remaining.norm() > 0.5 * radius {
            remaining * (0.5 * radius / remaining.norm())
        } else {
            remaining
        };
        let (nw, ndw) = taylor_step(a, b, c, z0, w, dw, h)?;
        w = nw;
        dw = ndw;
        z0 += h;
        if h == remaining {
            return Ok(w);
        }
    }
    Err(Error::NonConvergence("Taylor continuation".into()))
}

fn taylor_step(a: f64, b: f64, c: f64, z0: C, w: C, dw: C, h: C) -> Result<(C, C)> {
    // s_n = t_n hⁿ with t_n the Taylor coefficients at z0
    let denom = z0 * (C::new(1.0, 0.0) - z0);
    let lin = C::new(1.0, 0.0) - z0 * 2.0;
    let shift = C::new(c, 0.0) - z0 * (a + b + 1.0);
    let mut s0 = w;
    let mut s1 = dw * h;
    let mut val = Acc::default();
    let mut der = Acc::default();
    val.add(s0);
    val.add(s1);
    der.add(dw);
    let mut quiet = 0;
    for n in 0..2000 {
        let nf = n as f64;
        let s2 = (s0 * ((nf + a) * (nf + b)) * h * h - s1 * (nf + 1.0) * (lin * nf + shift) * h)
            / (denom * ((nf + 1.0) * (nf + 2.0)));
        val.add(s2);
        der.add(s2 * (nf + 2.0) / h);
        let scale = val.value().norm() + (der.value() * h).norm();
        if s2.norm() <= 1e-17 * scale {
            quiet += 1;
            if quiet >= 3 {
                return Ok((val.value(), der.value()));
            }
        } else {
            quiet = 0;
        }
        s0 = s1;
        s1 = s2;
    }
    Err(Error::NonConvergence("Taylor step".into()))
}
