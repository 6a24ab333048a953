//! Cauchy–Stieltjes representations of `R_{n1,n2,m}` evaluated by quadrature.
//!
//! ```text
//! R(z) = Σ_{k<N} r_k z^k + Q_N z^N
//!        + z^N ∫₀¹ B·P_r(t) t^{a+b+n̲+N−1} (1−t)^{c−a−b−l} / (|₂F₁(a,b;c;1/t)|² (1 − z t)) dt
//! ```

mod corpus;
mod quadrature;

pub use corpus::{
    bp_closed_form, check_applicability, example12_identity, linear_coefficient, verify_example, verify_example_with, CorpusEntry,
    ExampleReport, PointReport, CORPUS, Z_GRID,
};
pub use quadrature::{
    gauss_jacobi, integrate_unit, Integrand, QuadratureResult, Rule, TailFn, GRADING, MAX_RULE, TAIL_START,
};

use crate::asymptotics::{classify_at_infinity, classify_at_one, exponent_at_infinity, exponent_at_one};
use crate::error::{Error, Result};
use crate::hyp2f1_core::gamma::{digamma, gamma, is_int_approx, is_nonpos_int, rgamma};
use crate::hyp2f1_core::{abs2_on_cut_offset, Params, DEFAULT_TOL};
use crate::nevanlinna::runckel_check;
use crate::poly::RealPoly;
use crate::shift_engine::{ratio_at_one, ratio_taylor, BoundaryDensity, Shifts};
use num_complex::Complex64 as C;
use serde::Serialize;
use std::f64::consts::PI;

/// Default cap on integrand evaluations per quadrature.
pub const DEFAULT_MAX_NODES: usize = 2_000_000;
/// Beyond `x = 1/t` of this size `|₂F₁|²` comes from its two-term expansion.
pub const ASYMPTOTIC_X: f64 = 1e6;

/// A representation ready for evaluation.
#[allow(non_snake_case)]
#[derive(Debug, Clone, Serialize)]
pub struct Representation {
    pub params: Params,
    pub shifts: Shifts,
    pub N: usize,
    pub Q: RealPoly,
    /// `R^{(k)}(0)/k!` for `k < N`.
    pub taylor_head: Vec<f64>,
    pub density: BoundaryDensity,
    /// `(a+b+n̲+N−1, c−a−b−l)`, the beta-weight exponents at `t = 0, 1`.
    pub exponents: (f64, f64),
    /// Endpoint exponents of the whole integrand, `|₂F₁|⁻²` and zeros of `B·P_r` included.
    pub effective: (f64, f64),
    pub tabulated: bool,
}

/// Quadrature settings.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub tol: f64,
    pub max_nodes: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { tol: 1e-10, max_nodes: DEFAULT_MAX_NODES }
    }
}

/// Moment identities obtained at `z = 0`, at `z = 1` and from their difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Moment {
    Z0,
    Z1,
    Z01,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentCheck {
    pub which: Moment,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_error_estimate: f64,
}

impl MomentCheck {
    pub fn rel_error(&self) -> f64 {
        (self.lhs - self.rhs).abs() / self.rhs.abs().max(f64::MIN_POSITIVE)
    }
}

fn zero_multiplicity(mut p: RealPoly, at_one: bool) -> usize {
    let norm = p.norm_inf();
    let mut k = 0;
    while !p.is_zero() && k < 64 {
        let v = if at_one { p.eval_f64(1.0) } else { p.coeff(0) };
        if v.abs() > 1e-12 * norm {
            break;
        }
        p = if at_one { p.div_one_minus() } else { p.shift_down() };
        k += 1;
    }
    k
}

/// Representation of order `N` from the asymptotics at infinity.
pub fn build_representation(p: &Params, s: &Shifts) -> Result<Representation> {
    let info = classify_at_infinity(p, s)?;
    assemble(p, s, info.N, info.Q, info.tabulated)
}

/// Representation of order `n ≥ N`: the `z^N` term of `Q` moves into the Taylor head.
pub fn build_representation_at_order(p: &Params, s: &Shifts, n: usize) -> Result<Representation> {
    let info = classify_at_infinity(p, s)?;
    if n < info.N {
        return Err(Error::InvalidArgument(format!("order {n} below the minimal order {}", info.N)));
    }
    if n == info.N {
        return assemble(p, s, n, info.Q, info.tabulated);
    }
    assemble(p, s, n, RealPoly::zero(), info.tabulated)
}

#[allow(non_snake_case)]
fn assemble(p: &Params, s: &Shifts, N: usize, Q: RealPoly, tabulated: bool) -> Result<Representation> {
    let runckel = runckel_check(p);
    if !runckel.satisfied {
        return Err(Error::PreconditionFailed(format!(
            "Runckel: no zero-free condition holds for (a, b, c) = ({}, {}, {})",
            p.a, p.b, p.c
        )));
    }
    let one = classify_at_one(p, s)?;
    if !one.integrable {
        return Err(Error::PreconditionFailed(format!("ν = {} ≤ −1 at z = 1", one.nu)));
    }
    let density = BoundaryDensity::new(p, s)?;
    let taylor_head = ratio_taylor(p, s, N)?;
    let (a, b, c) = (p.a, p.b, p.c);
    let exponents = (a + b + s.n_min as f64 + N as f64 - 1.0, c - a - b - s.l as f64);
    let bp = density.bp.trim_rounding();
    let effective = if bp.is_zero() {
        (0.0, 0.0)
    } else {
        let at_zero = exponents.0 + 2.0 * exponent_at_infinity(a, b, c)? + zero_multiplicity(bp.clone(), false) as f64;
        let at_one = exponents.1 - 2.0 * exponent_at_one(a, b, c) + zero_multiplicity(bp, true) as f64;
        (at_zero, at_one)
    };
    // |₂F₁|⁻² carries 1/log² where the leading term has a logarithm
    let snap = |e: f64, log: bool| if log && (e + 1.0).abs() < 1e-12 { -1.0 } else { e };
    let effective = (snap(effective.0, log_at_infinity(p)), snap(effective.1, log_at_one(p)));
    if !(effective.0 >= -1.0 && effective.1 >= -1.0) {
        return Err(Error::PreconditionFailed(format!(
            "integrability: integrand exponents {:?} at t = 0, 1 do not exceed −1",
            effective
        )));
    }
    Ok(Representation { params: *p, shifts: *s, N, Q, taylor_head, density, exponents, effective, tabulated })
}

const EXACT_SWITCH: f64 = 40.0;

fn ln_direct(p: &Params, xm1: f64) -> Result<f64> {
    let v = abs2_on_cut_offset(p, xm1, DEFAULT_TOL)?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::DenominatorZero(1.0 + xm1));
    }
    Ok(v.ln())
}

fn same(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-12 * x.abs().max(1.0)
}

/// The leading term of `₂F₁` at infinity contains `log x`.
fn log_at_infinity(p: &Params) -> bool {
    same(p.a, p.b) && !is_nonpos_int(p.a) && !is_nonpos_int(p.c - p.a)
}

/// The leading term of `₂F₁` at `x = 1` contains `log(x − 1)`.
fn log_at_one(p: &Params) -> bool {
    same(p.c - p.a - p.b, 0.0) && !is_nonpos_int(p.a) && !is_nonpos_int(p.b)
}

/// `ln |₂F₁(a,b;c;x + i0)|²` at `x = e^L`, `L ≥ log 10⁶`, from the expansion
/// at infinity.
pub fn log_abs2_at_infinity(p: &Params, l: f64) -> Result<f64> {
    let Params { a, b, c } = *p;
    let inv = (-l).exp();
    if !is_int_approx(a - b) {
        let m = a.min(b);
        let term = |u: f64, v: f64| -> C {
            let amp = gamma(c) * gamma(v - u) * rgamma(v) * rgamma(c - u);
            let corr = 1.0 + u * (1.0 - c + u) / (1.0 - v + u) * inv;
            C::from_polar(amp * corr * (-(u - m) * l).exp(), PI * u)
        };
        let n2 = (term(a, b) + term(b, a)).norm_sqr();
        if !(n2 > 0.0 && n2.is_finite()) {
            return Err(Error::DenominatorZero(l.exp()));
        }
        return Ok(-2.0 * m * l + n2.ln());
    }
    if l < EXACT_SWITCH {
        return ln_direct(p, l.exp_m1());
    }
    if log_at_infinity(p) {
        let k = gamma(c) * rgamma(a) * rgamma(c - a);
        let d = 2.0 * digamma(1.0) - digamma(a) - digamma(c - a);
        return Ok(2.0 * k.abs().ln() - 2.0 * a * l + ((l + d).powi(2) + PI * PI).ln());
    }
    let (u, v) = (a.min(b), a.max(b));
    let amp = gamma(c) * gamma(v - u) * rgamma(v) * rgamma(c - u);
    if amp == 0.0 || !amp.is_finite() {
        return ln_direct(p, l.exp_m1());
    }
    Ok(2.0 * amp.abs().ln() - 2.0 * u * l)
}

/// `ln |₂F₁(a,b;c;1 + w + i0)|²` at `w = s/(1−s)`, `s = e^{−L}`,
/// `L ≥ log 10⁶`, from the expansion at `x = 1`.
pub fn log_abs2_near_one(p: &Params, l: f64) -> Result<f64> {
    let Params { a, b, c } = *p;
    let s = (-l).exp();
    let lw = -l - (-s).ln_1p();
    let w = lw.exp();
    let eta = c - a - b;
    if !is_int_approx(eta) {
        let m1 = eta.min(0.0);
        let a1 = gamma(c) * gamma(eta) * rgamma(c - a) * rgamma(c - b);
        let a2 = gamma(c) * gamma(-eta) * rgamma(a) * rgamma(b);
        let t1 = a1 * (1.0 - a * b * w / (1.0 - eta)) * (-m1 * lw).exp();
        let r2 = a2 * (1.0 - (c - a) * (c - b) * w / (1.0 + eta)) * ((eta - m1) * lw).exp();
        let n2 = (C::from_polar(r2, -PI * eta) + t1).norm_sqr();
        if !(n2 > 0.0 && n2.is_finite()) {
            return Err(Error::DenominatorZero(1.0 + w));
        }
        return Ok(2.0 * m1 * lw + n2.ln());
    }
    if l < EXACT_SWITCH {
        return ln_direct(p, w);
    }
    let n = eta.round();
    let (amp, power) = if n == 0.0 {
        let k = gamma(c) * rgamma(a) * rgamma(b);
        if k != 0.0 {
            let d = 2.0 * digamma(1.0) - digamma(a) - digamma(b);
            return Ok(2.0 * k.abs().ln() + ((lw - d).powi(2) + PI * PI).ln());
        }
        (0.0, 0.0)
    } else if n > 0.0 {
        (gamma(c) * gamma(n) * rgamma(c - a) * rgamma(c - b), 0.0)
    } else {
        (gamma(c) * gamma(-n) * rgamma(a) * rgamma(b), 2.0 * n)
    };
    if amp == 0.0 || !amp.is_finite() {
        return ln_direct(p, w);
    }
    Ok(2.0 * amp.abs().ln() + power * lw)
}

/// `|₂F₁(a,b;c;x + i0)|²` at `x = 1/t`, given `t` and `u = 1 − t`.
pub fn abs2_at(p: &Params, t: f64, u: f64, tol: f64) -> Result<f64> {
    if 1.0 / t > ASYMPTOTIC_X {
        return Ok(log_abs2_at_infinity(p, -t.ln())?.exp());
    }
    abs2_on_cut_offset(p, u / t, tol)
}

/// Density `B·P_r(t) t^β (1−t)^α / |₂F₁(1/t)|²` at `t`, with `u = 1 − t`.
pub fn density_weight(rep: &Representation, t: f64, u: f64) -> Result<f64> {
    weight(rep, t, u, (0.0, 0.0))
}

fn weight(rep: &Representation, t: f64, u: f64, extra: (f64, f64)) -> Result<f64> {
    let bp = rep.density.bp.eval_f64(t);
    if bp == 0.0 {
        return Ok(0.0);
    }
    let abs2 = abs2_at(&rep.params, t, u, DEFAULT_TOL)?;
    if !(abs2 > 0.0) || !abs2.is_finite() {
        return Err(Error::DenominatorZero(1.0 / t));
    }
    let (e0, e1) = (rep.exponents.0 + extra.0, rep.exponents.1 + extra.1);
    Ok(bp * t.powf(e0) * u.powf(e1) / abs2)
}

fn integrate_weight(
    rep: &Representation,
    extra: (f64, f64),
    z: C,
    opts: EvalOptions,
) -> Result<QuadratureResult> {
    if rep.density.bp.trim_rounding().is_zero() {
        return Ok(QuadratureResult { value: C::new(0.0, 0.0), abs_error_estimate: 0.0, nodes_used: 0 });
    }
    let f = |t: f64, u: f64| -> Result<C> {
        let den = C::new(1.0, 0.0) - z * t;
        if den.norm() < 1e-12 {
            return Err(Error::NearCutPole(t));
        }
        Ok(weight(rep, t, u, extra)? / den)
    };
    let pole = (z.norm() > 0.0).then(|| 1.0 / z);
    let (beta, alpha) = (rep.exponents.0 + extra.0, rep.exponents.1 + extra.1);
    let near = |t: f64| -> Result<C> {
        let den = C::new(1.0, 0.0) - z * t;
        if den.norm() < 1e-12 {
            return Err(Error::NearCutPole(t));
        }
        Ok(den)
    };
    let tail_zero = |l: f64| -> Result<C> {
        let t = (-l).exp();
        let bp = rep.density.bp.eval_f64(t);
        if bp == 0.0 {
            return Ok(C::new(0.0, 0.0));
        }
        let lf = log_abs2_at_infinity(&rep.params, l)?;
        let v = bp * (-(-l).exp_m1()).powf(alpha) * (-(beta + 1.0) * l - lf).exp();
        Ok(v / near(t)?)
    };
    let tail_one = |l: f64| -> Result<C> {
        let t = -(-l).exp_m1();
        let bp = rep.density.bp.eval_f64(t);
        if bp == 0.0 {
            return Ok(C::new(0.0, 0.0));
        }
        let lf = log_abs2_near_one(&rep.params, l)?;
        let v = bp * t.powf(beta) * (-(alpha + 1.0) * l - lf).exp();
        Ok(v / near(t)?)
    };
    let it = Integrand {
        f: &f,
        at_zero: rep.effective.0 + extra.0,
        at_one: rep.effective.1 + extra.1,
        pole,
        tail_zero: Some(&tail_zero),
        tail_one: Some(&tail_one),
    };
    integrate_unit(&it, opts.tol, opts.max_nodes)
}

/// `R(z)` from the representation.
pub fn eval_representation(rep: &Representation, z: C, tol: f64) -> Result<QuadratureResult> {
    eval_representation_with(rep, z, EvalOptions { tol, ..EvalOptions::default() })
}

/// [`eval_representation`] with an explicit evaluation budget.
pub fn eval_representation_with(rep: &Representation, z: C, opts: EvalOptions) -> Result<QuadratureResult> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("z = {z} is not finite")));
    }
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::InvalidArgument(format!("z = {} lies on the cut [1, ∞)", z.re)));
    }
    let mut head = rep.Q.eval_complex(z);
    let mut zk = C::new(1.0, 0.0);
    for r in &rep.taylor_head {
        head += *r * zk;
        zk *= z;
    }
    let q = integrate_weight(rep, (0.0, 0.0), z, opts)?;
    Ok(QuadratureResult {
        value: head + zk * q.value,
        abs_error_estimate: zk.norm() * q.abs_error_estimate,
        nodes_used: q.nodes_used,
    })
}

/// Both sides of a moment identity.
pub fn moment_identity_check(rep: &Representation, which: Moment) -> Result<MomentCheck> {
    moment_identity_check_with(rep, which, EvalOptions { tol: 1e-11, ..EvalOptions::default() })
}

pub fn moment_identity_check_with(rep: &Representation, which: Moment, opts: EvalOptions) -> Result<MomentCheck> {
    let (p, s, n) = (&rep.params, &rep.shifts, rep.N);
    let alpha = rep.exponents.1;
    if which != Moment::Z0 && !(alpha > 0.0) {
        return Err(Error::PreconditionFailed(format!("c − a − b − l = {alpha} must be positive at z = 1")));
    }
    let taylor = ratio_taylor(p, s, n + 1)?;
    let q_n = rep.Q.coeff(n);
    let below: f64 = taylor[..n].iter().sum();
    let extra = match which {
        Moment::Z0 => (0.0, 0.0),
        Moment::Z1 => (0.0, -1.0),
        Moment::Z01 => (1.0, -1.0),
    };
    let rhs = match which {
        Moment::Z0 => taylor[n] - q_n,
        Moment::Z1 => ratio_at_one(p, s)? - rep.Q.eval_f64(1.0) - below,
        Moment::Z01 => ratio_at_one(p, s)? - rep.Q.eval_f64(1.0) + q_n - below - taylor[n],
    };
    let q = integrate_weight(rep, extra, C::new(0.0, 0.0), opts)?;
    Ok(MomentCheck { which, lhs: q.value.re, rhs, abs_error_estimate: q.abs_error_estimate })
}
