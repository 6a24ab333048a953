//! Quantities indexed by the integer shifts `(n1, n2, m)` of
//!
//! ```text
//! R(z) = ₂F₁(a+n1, b+n2; c+m; z) / ₂F₁(a, b; c; z)
//! ```
//!
//! The boundary density on the cut is
//!
//! ```text
//! Im R(x ± i0) = ±π B x^{l−n̲−c} (x−1)^{c−a−b−l} P_r(1/x) / |₂F₁(a,b;c;x)|²
//! ```

mod ladder;

pub use ladder::{contiguous_ladder, contiguous_ladder_exact, Ladder};

use crate::error::{Error, Result};
use crate::hyp2f1_core::gamma::{gamma_ratio, is_int_approx, is_nonpos_int, pochhammer};
use crate::hyp2f1_core::{abs2_on_cut_offset, hyp2f1, hyp2f1_on_cut_offset, Bank, Params};
use crate::poly::RealPoly;
use crate::scalar::Scalar;
use num_complex::Complex64 as C;
use serde::Serialize;
use std::f64::consts::PI;

/// Integer shifts and the derived indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shifts {
    pub n1: i64,
    pub n2: i64,
    pub m: i64,
    pub n_min: i64,
    pub n_max: i64,
    pub p: i64,
    pub l: i64,
    pub r: i64,
}

pub fn derive_shifts(n1: i64, n2: i64, m: i64) -> Shifts {
    let n_min = n1.min(n2);
    let n_max = n1.max(n2);
    let p = (m - n1 - n2).max(0);
    let l = (n1 + n2 - m).max(0);
    let r = l + m.max(0) - n_min - 1;
    Shifts { n1, n2, m, n_min, n_max, p, l, r }
}

impl Shifts {
    pub fn new(n1: i64, n2: i64, m: i64) -> Self {
        derive_shifts(n1, n2, m)
    }

    /// Parameters of the numerator function.
    pub fn shifted(&self, p: &Params) -> Result<Params> {
        Params::new(p.a + self.n1 as f64, p.b + self.n2 as f64, p.c + self.m as f64)
    }

    pub fn is_zero(&self) -> bool {
        self.n1 == 0 && self.n2 == 0 && self.m == 0
    }
}

/// `B = −Γ(c)Γ(c+m) / (Γ(a)Γ(b)Γ(c−a+m−n1)Γ(c−b+m−n2))`.
#[allow(non_snake_case)]
pub fn compute_B(p: &Params, s: &Shifts) -> Result<f64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let cm = c + s.m as f64;
    if is_nonpos_int(c) || is_nonpos_int(cm) {
        return Err(Error::UndefinedB(format!("Γ(c+m) has a pole at c+m = {cm}")));
    }
    let den = [a, b, c - a + (s.m - s.n1) as f64, c - b + (s.m - s.n2) as f64];
    Ok(-gamma_ratio(&[c, cm], &den)?)
}

/// Default `(α, β, γ) = (a, 1−c+a, 1−b+a)`.
pub fn default_abg(p: &Params) -> (f64, f64, f64) {
    (p.a, 1.0 - p.c + p.a, 1.0 - p.b + p.a)
}

fn series_coeffs(a: f64, b: f64, c: f64, n: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(n);
    let mut t = 1.0;
    for k in 0..n {
        out.push(t);
        let kf = k as f64;
        let den = (c + kf) * (kf + 1.0);
        if den == 0.0 {
            if t * (a + kf) * (b + kf) == 0.0 {
                t = 0.0;
                continue;
            }
            return Err(Error::DegenerateParams(format!("series denominator ({c})_{}", k + 1)));
        }
        t *= (a + kf) * (b + kf) / den;
    }
    Ok(out)
}

fn truncated_mul(x: &[f64], y: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for (i, xi) in x.iter().enumerate().take(n) {
        for (j, yj) in y.iter().enumerate().take(n - i) {
            out[i + j] += xi * yj;
        }
    }
    out
}

fn checked_poch(z: f64, r: i64) -> Result<f64> {
    pochhammer(z, r).map_err(|_| Error::DegenerateParams(format!("Pochhammer pole ({z})_{r}")))
}

fn finite(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::DegenerateParams(format!("{what} is not finite")))
    }
}

/// `P_r` from the first `r+1` Taylor coefficients of the two-product identity
/// multiplied by `t^{−n̲}(1−t)^p`. Coefficients past `r` are guards and must vanish.
#[allow(non_snake_case)]
pub fn compute_Pr_taylor(_p: &Params, s: &Shifts, abg: (f64, f64, f64)) -> Result<RealPoly> {
    if s.r < 0 {
        return Ok(RealPoly::zero());
    }
    let (al, be, ga) = abg;
    let (n1, n2, m) = (s.n1, s.n2, s.m);
    let guard = (s.n_max + s.n_min.abs() + s.p + 4) as usize;
    let len = s.r as usize + 1 + guard;

    let c1 = finite(
        checked_poch(ga - al, -n2)? * checked_poch(ga - be, m - n2)? / checked_poch(ga - 1.0, n1 - n2 + 1)?,
        "first prefactor",
    )?;
    let c2 = finite(
        checked_poch(1.0 - al, -n1)? * checked_poch(1.0 - be, m - n1)? / checked_poch(1.0 - ga, n2 - n1 + 1)?,
        "second prefactor",
    )?;
    let mut total = vec![0.0; len];
    let mut scale: f64 = 0.0;
    if c1 != 0.0 {
        let s1 = truncated_mul(
            &series_coeffs(1.0 - ga + al, 1.0 - ga + be, 2.0 - ga, len)?,
            &series_coeffs(ga - al - n2 as f64, ga - be + (m - n2) as f64, ga + (n1 - n2) as f64, len)?,
            len,
        );
        let off = (n1 - s.n_min) as usize;
        for i in 0..len.saturating_sub(off) {
            total[i + off] += c1 * s1[i];
            scale = scale.max((c1 * s1[i]).abs());
        }
    }
    if c2 != 0.0 {
        let s2 = truncated_mul(
            &series_coeffs(al, be, ga, len)?,
            &series_coeffs(1.0 - al - n1 as f64, 1.0 - be + (m - n1) as f64, 2.0 - ga + (n2 - n1) as f64, len)?,
            len,
        );
        let off = (n2 - s.n_min) as usize;
        for i in 0..len.saturating_sub(off) {
            total[i + off] += c2 * s2[i];
            scale = scale.max((c2 * s2[i]).abs());
        }
    }
    let binom = binomial_row(s.p as usize);
    let signed: Vec<f64> = binom
        .iter()
        .enumerate()
        .map(|(k, b)| if k % 2 == 0 { *b } else { -b })
        .collect();
    let prod = truncated_mul(&total, &signed, len);
    let worst = prod[s.r as usize + 1..].iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let bound = 1e-9 * scale.max(1.0) * 2f64.powi(s.p as i32);
    if !worst.is_finite() || worst > bound {
        return Err(Error::NonConvergence(format!(
            "guard coefficients of P_r do not vanish ({worst:e})"
        )));
    }
    Ok(RealPoly::new(prod[..=s.r as usize].to_vec()))
}

fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0];
    for k in 0..n {
        let next = row[k] * (n - k) as f64 / (k + 1) as f64;
        row.push(next);
    }
    row
}

fn factorial_recip(n: i64) -> f64 {
    crate::hyp2f1_core::gamma::rfactorial(n)
}

/// Terminating `₄F₃(up; lo; 1)` with `n + 1` terms.
fn f43_terminating(up: [f64; 4], lo: [f64; 3], n: i64) -> Result<f64> {
    let mut sum = 0.0;
    let mut t = 1.0;
    for i in 0..=n {
        sum += t;
        let fi = i as f64;
        let num: f64 = up.iter().map(|u| u + fi).product();
        let den: f64 = lo.iter().map(|l| l + fi).product::<f64>() * (fi + 1.0);
        if num == 0.0 {
            break;
        }
        if den == 0.0 {
            return Err(Error::DegenerateParams("₄F₃ lower parameter at a pole".into()));
        }
        t *= num / den;
    }
    Ok(sum)
}

/// `P_r` from the explicit double sum over `K_j` (terminating `₄F₃(1)` values).
#[allow(non_snake_case)]
pub fn compute_Pr_closed(p: &Params, s: &Shifts) -> Result<RealPoly> {
    if s.r < 0 {
        return Ok(RealPoly::zero());
    }
    let (al, be, ga) = default_abg(p);
    let (n1, n2, m) = (s.n1, s.n2, s.m);
    let k_j = |j: i64| -> Result<f64> {
        let mut total = 0.0;
        if j + n1 >= 0 {
            let pre = checked_poch(1.0 - al, j)? * checked_poch(1.0 - be, m + j)? * factorial_recip(j + n1)
                / checked_poch(1.0 - ga, n2 + j + 1)?;
            let f = f43_terminating(
                [(-j - n1) as f64, al, be, ga - 1.0 - (n2 + j) as f64],
                [al - j as f64, be - (m + j) as f64, ga],
                j + n1,
            )?;
            total += finite(pre, "K_j prefactor")? * f;
        }
        if j + n2 >= 0 {
            let pre = checked_poch(ga - al, j)? * checked_poch(ga - be, m + j)? * factorial_recip(j + n2)
                / checked_poch(ga - 1.0, n1 + j + 1)?;
            let f = f43_terminating(
                [(-j - n2) as f64, 1.0 - ga + al, 1.0 - ga + be, 1.0 - ga - (n1 + j) as f64],
                [1.0 - ga + al - j as f64, 1.0 - ga + be - (m + j) as f64, 2.0 - ga],
                j + n2,
            )?;
            total += finite(pre, "K_j prefactor")? * f;
        }
        Ok(total)
    };
    let binom = binomial_row(s.p as usize);
    let nb = s.n_max;
    let mut coeffs = Vec::with_capacity(s.r as usize + 1);
    for k in 0..=s.r {
        let mut inner = 0.0;
        for j in ((k - s.p).max(0) - nb)..=(k - nb) {
            let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            inner += sign * binom[(k - nb - j) as usize] * k_j(j)?;
        }
        let sign = if (nb + k).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        coeffs.push(finite(sign * inner, "P_r coefficient")?);
    }
    Ok(RealPoly::new(coeffs))
}

/// `P_r` by the Taylor method, then the closed form, then (when both meet a
/// removable singularity) symmetric perturbation with Richardson extrapolation.
#[allow(non_snake_case)]
pub fn compute_Pr(p: &Params, s: &Shifts) -> Result<RealPoly> {
    match pr_direct(p, s) {
        Ok(poly) => Ok(poly),
        Err(Error::DegenerateParams(_)) => perturbed(p, s, |q| pr_direct(q, s)),
        Err(e) => Err(e),
    }
}

#[allow(non_snake_case)]
fn pr_direct(p: &Params, s: &Shifts) -> Result<RealPoly> {
    if is_int_approx(p.a - p.b) && s.r >= 0 {
        return Err(Error::DegenerateParams("a − b is an integer".into()));
    }
    match compute_Pr_taylor(p, s, default_abg(p)) {
        Ok(poly) => Ok(poly),
        Err(Error::DegenerateParams(_)) => compute_Pr_closed(p, s),
        Err(e) => Err(e),
    }
}

/// Direction of the parameter perturbation; it separates every integer
/// difference among `a, b, c−a, c−b, a−b, c−a−b`.
const PERTURB: (f64, f64, f64) = (0.31, 0.67, 1.73);
const PERTURB_STEP: f64 = 1e-3;

/// Limit of `f` at `p` from `½[f(p + hd) + f(p − hd)]` at `h` and `h/2`.
fn perturbed(p: &Params, s: &Shifts, f: impl Fn(&Params) -> Result<RealPoly>) -> Result<RealPoly> {
    let n = s.r.max(0) as usize + 1;
    let at = |h: f64| -> Result<RealPoly> {
        let q = Params::new(p.a + h * PERTURB.0, p.b + h * PERTURB.1, p.c + h * PERTURB.2)?;
        f(&q)
    };
    let sym = |h: f64| -> Result<Vec<f64>> {
        let (up, dn) = (at(h)?, at(-h)?);
        Ok((0..n).map(|k| 0.5 * (up.coeff(k) + dn.coeff(k))).collect())
    };
    let coarse = sym(PERTURB_STEP)?;
    let fine = sym(PERTURB_STEP / 2.0)?;
    Ok(RealPoly::new(coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect()))
}

#[allow(non_snake_case)]
/// `B·P_r`, continued through parameter values where `B = 0` meets a pole of `P_r`.
pub fn compute_BP(p: &Params, s: &Shifts) -> Result<RealPoly> {
    let direct = |q: &Params| -> Result<RealPoly> {
        let b = compute_B(q, s)?;
        let den_pole = [q.a, q.b, q.c - q.a + (s.m - s.n1) as f64, q.c - q.b + (s.m - s.n2) as f64]
            .iter()
            .any(|&x| x <= 0.5 && is_int_approx(x));
        if den_pole && s.r >= 0 {
            return Err(Error::DegenerateParams("B vanishes at a Γ pole".into()));
        }
        Ok(pr_direct(q, s)?.scale(&b))
    };
    compute_B(p, s)?;
    match direct(p) {
        Ok(poly) => Ok(poly),
        Err(Error::DegenerateParams(_)) => perturbed(p, s, direct),
        Err(e) => Err(e),
    }
}

/// `B`, `P_r` and their product for one parameter/shift pair.
///
/// Where `B = 0` through a Γ pole while `P_r` is singular, only the product
/// is meaningful and `pr` is `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryDensity {
    pub params: Params,
    pub shifts: Shifts,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "P_r")]
    pub pr: Option<RealPoly>,
    #[serde(rename = "BP")]
    pub bp: RealPoly,
}

impl BoundaryDensity {
    pub fn new(p: &Params, s: &Shifts) -> Result<Self> {
        let b = compute_B(p, s)?;
        let bp = compute_BP(p, s)?;
        let pr = if b != 0.0 { Some(compute_Pr(p, s)?) } else { pr_direct(p, s).ok() };
        Ok(BoundaryDensity { params: *p, shifts: *s, b, pr, bp })
    }

    /// `Im R(x + i0)` at `x = 1 + xm1`.
    pub fn im_upper_offset(&self, xm1: f64, tol: f64) -> Result<f64> {
        let x = 1.0 + xm1;
        let abs2 = abs2_on_cut_offset(&self.params, xm1, tol)?;
        Ok(PI * self.numerator_offset(xm1) / check_abs2(abs2, x)?)
    }

    /// `B x^{l−n̲−c} (x−1)^{c−a−b−l} P_r(1/x)` at `x = 1 + xm1`.
    pub fn numerator_offset(&self, xm1: f64) -> f64 {
        let x = 1.0 + xm1;
        let (p, s) = (&self.params, &self.shifts);
        if self.bp.is_zero() {
            return 0.0;
        }
        let ex = (s.l - s.n_min) as f64 - p.c;
        let e1 = p.c - p.a - p.b - s.l as f64;
        x.powf(ex) * xm1.powf(e1) * self.bp.eval_f64(1.0 / x)
    }
}

fn check_abs2(abs2: f64, x: f64) -> Result<f64> {
    if !(abs2 > f64::EPSILON * f64::EPSILON) {
        return Err(Error::DenominatorZero(x));
    }
    Ok(abs2)
}

/// Signed density `Im R(x ± i0)`.
pub fn boundary_im(p: &Params, s: &Shifts, x: f64, bank: Bank, tol: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed 1")));
    }
    let d = BoundaryDensity::new(p, s)?;
    Ok(bank.sign() * d.im_upper_offset(x - 1.0, tol)?)
}

/// `R(z)` by direct evaluation of both functions.
pub fn ratio(p: &Params, s: &Shifts, z: C, tol: f64) -> Result<C> {
    let q = s.shifted(p)?;
    let den = hyp2f1(p, z, tol)?;
    if den == C::new(0.0, 0.0) {
        return Err(Error::DenominatorZero(z.re));
    }
    Ok(hyp2f1(&q, z, tol)? / den)
}

/// `R(x ± i0)` from the boundary values of both functions.
pub fn ratio_on_cut(p: &Params, s: &Shifts, x: f64, bank: Bank, tol: f64) -> Result<C> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed 1")));
    }
    let q = s.shifted(p)?;
    let den = hyp2f1_on_cut_offset(p, x - 1.0, bank, tol)?;
    if den.norm_sqr() <= f64::EPSILON * f64::EPSILON {
        return Err(Error::DenominatorZero(x));
    }
    Ok(hyp2f1_on_cut_offset(&q, x - 1.0, bank, tol)? / den)
}

/// First `count` Taylor coefficients of `R` at the origin.
pub fn ratio_taylor(p: &Params, s: &Shifts, count: usize) -> Result<Vec<f64>> {
    s.shifted(p)?;
    ratio_taylor_in(&p.a, &p.b, &p.c, s, count)
}

/// [`ratio_taylor`] over any scalar field, e.g. exact rationals.
pub fn ratio_taylor_in<T: Scalar>(a: &T, b: &T, c: &T, s: &Shifts, count: usize) -> Result<Vec<T>> {
    let coeffs = |a: T, b: T, c: T| -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(count);
        let mut t = T::one();
        for k in 0..count {
            out.push(t.clone());
            let kk = T::from_i64(k as i64);
            let den = (c.clone() + kk.clone()) * (kk.clone() + T::one());
            if den.is_zero() {
                return Err(Error::ParameterPole(format!("c + {k} = 0")));
            }
            t = t * (a.clone() + kk.clone()) * (b.clone() + kk) / den;
        }
        Ok(out)
    };
    let num = coeffs(
        a.clone() + T::from_i64(s.n1),
        b.clone() + T::from_i64(s.n2),
        c.clone() + T::from_i64(s.m),
    )?;
    let den = coeffs(a.clone(), b.clone(), c.clone())?;
    let mut q: Vec<T> = Vec::with_capacity(count);
    for n in 0..count {
        let mut v = num[n].clone();
        for k in 1..=n {
            v = v - den[k].clone() * q[n - k].clone();
        }
        q.push(v);
    }
    Ok(q)
}

/// `R(1) = (c)_m (c−a−b)_{m−n1−n2} / ((c−a)_{m−n1} (c−b)_{m−n2})`.
pub fn ratio_at_one(p: &Params, s: &Shifts) -> Result<f64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let num = pochhammer(c, s.m)? * pochhammer(c - a - b, s.m - s.n1 - s.n2)?;
    let den = pochhammer(c - a, s.m - s.n1)? * pochhammer(c - b, s.m - s.n2)?;
    if den == 0.0 {
        return Err(Error::PoleError { z: c - a, r: s.m - s.n1 });
    }
    Ok(num / den)
}

