//! Gauss–Jacobi rules and a graded, adaptive integrator on `(0, 1)`.

use crate::error::{Error, Result};
use crate::hyp2f1_core::gamma::gamma_ratio;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Largest rule size accepted by [`gauss_jacobi`].
pub const MAX_RULE: usize = 512;
/// Ratio of consecutive panel widths towards an endpoint.
pub const GRADING: f64 = 0.1;
const LOW: usize = 16;
const HIGH: usize = 32;
const MAX_LEVELS: usize = 600;
const MAX_DEPTH: usize = 48;

/// Nodes and weights on `[−1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss–Jacobi rule for the weight `(1−x)^α (1+x)^β` by Golub–Welsch.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<Rule> {
    if n == 0 || n > MAX_RULE {
        return Err(Error::InvalidArgument(format!("rule size {n} outside 1..={MAX_RULE}")));
    }
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::InvalidArgument(format!("Jacobi exponents ({alpha}, {beta}) must exceed −1")));
    }
    let ab = alpha + beta;
    let diag = |k: usize| -> f64 {
        let k = k as f64;
        if k == 0.0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0))
        }
    };
    let off = |k: usize| -> f64 {
        let k = k as f64;
        if k == 1.0 {
            (4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))).sqrt()
        } else {
            let s = 2.0 * k + ab;
            (4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0))).sqrt()
        }
    };
    let mut j = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        j[(k, k)] = diag(k);
        if k + 1 < n {
            j[(k, k + 1)] = off(k + 1);
            j[(k + 1, k)] = off(k + 1);
        }
    }
    let mu0 = 2f64.powf(ab + 1.0) * gamma_ratio(&[alpha + 1.0, beta + 1.0], &[ab + 2.0])?;
    let eig = SymmetricEigen::new(j);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|k| (eig.eigenvalues[k], mu0 * eig.eigenvectors[(0, k)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(Rule { nodes: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() })
}

fn legendre(n: usize) -> &'static Rule {
    static LO: OnceLock<Rule> = OnceLock::new();
    static HI: OnceLock<Rule> = OnceLock::new();
    let cell = if n == LOW { &LO } else { &HI };
    cell.get_or_init(|| gauss_jacobi(n, 0.0, 0.0).expect("Legendre rule"))
}

/// Value with error estimate and number of integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: C,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
}

/// Tails are integrated in `L = −log s`, `s` the distance to the endpoint,
/// once `s` falls below this.
pub const TAIL_START: f64 = 1e-6;

/// `φ(L) = f·s` at `s = e^{−L}`, for `s ≤ TAIL_START`.
pub type TailFn<'a> = &'a (dyn Fn(f64) -> Result<C> + Sync);

/// Integrand `f(t, 1 − t)` on `(0, 1)` with algebraic endpoint behaviour
/// `f ∼ t^{at_zero}` and `f ∼ (1−t)^{at_one}`.
///
/// `pole` is a point near which `f` may vary rapidly, typically `1/z`.
/// A tail function lets the endpoint regions be integrated over
/// `L ∈ [L₀, ∞)` with `L = L₀ + π tan θ`, which covers slowly varying and
/// logarithmic factors; an endpoint exponent of exactly `−1` is accepted
/// when a tail is given.
pub struct Integrand<'a> {
    pub f: &'a (dyn Fn(f64, f64) -> Result<C> + Sync),
    pub at_zero: f64,
    pub at_one: f64,
    pub pole: Option<C>,
    pub tail_zero: Option<TailFn<'a>>,
    pub tail_one: Option<TailFn<'a>>,
}

struct Acc {
    value: C,
    err: f64,
    scale: f64,
    evals: usize,
    max_evals: usize,
    tol: f64,
    unresolved: bool,
}

impl Acc {
    fn charge(&mut self, n: usize) -> Result<()> {
        self.evals += n;
        if self.evals > self.max_evals {
            return Err(Error::QuadratureStall { estimate: self.err.max(self.scale), tol: self.tol });
        }
        Ok(())
    }
}

fn legendre_sum(g: &dyn Fn(f64) -> Result<C>, l: f64, h: f64, n: usize) -> Result<C> {
    let r = legendre(n);
    let (mid, half) = (0.5 * (l + h), 0.5 * (h - l));
    let mut s = C::new(0.0, 0.0);
    for (x, w) in r.nodes.iter().zip(&r.weights) {
        s += *w * g(mid + half * x)?;
    }
    Ok(s * half)
}

/// Adaptive Gauss–Legendre on `[l, h]`.
fn panel(g: &dyn Fn(f64) -> Result<C>, l: f64, h: f64, acc: &mut Acc, depth: usize) -> Result<C> {
    let lo = legendre_sum(g, l, h, LOW)?;
    let hi = legendre_sum(g, l, h, HIGH)?;
    acc.charge(LOW + HIGH)?;
    let diff = (hi - lo).norm();
    let target = 0.25 * acc.tol * hi.norm().max(acc.scale);
    if diff <= target || !(diff > 1e-300) {
        acc.err += diff;
        acc.scale = acc.scale.max(hi.norm());
        return Ok(hi);
    }
    if depth >= MAX_DEPTH {
        acc.unresolved = true;
        acc.err += diff;
        return Ok(hi);
    }
    let m = 0.5 * (l + h);
    Ok(panel(g, l, m, acc, depth + 1)? + panel(g, m, h, acc, depth + 1)?)
}

/// `∫₀^h s^e g(s) ds` by Gauss–Jacobi with `16` and `32` nodes.
fn end_panel(g: &dyn Fn(f64) -> Result<C>, e: f64, h: f64) -> Result<(C, f64)> {
    let run = |n: usize| -> Result<C> {
        let r = jacobi_cached(n, e)?;
        let mut s = C::new(0.0, 0.0);
        for (x, w) in r.nodes.iter().zip(&r.weights) {
            s += *w * g(0.5 * h * (1.0 + x))?;
        }
        Ok(s * (0.5 * h).powf(e + 1.0))
    };
    let lo = run(LOW)?;
    let hi = run(HIGH)?;
    Ok((hi, (hi - lo).norm()))
}

/// `∫₀^h f(s) ds = ∫_{L₀}^∞ φ(L) dL` with `L = L₀ + π tan θ`.
fn tail(phi: TailFn<'_>, h: f64, acc: &mut Acc) -> Result<C> {
    let l0 = -h.ln();
    let g = |th: f64| -> Result<C> {
        let c = th.cos();
        if c <= 0.0 {
            return Ok(C::new(0.0, 0.0));
        }
        Ok(phi(l0 + PI * th.tan())? * (PI / (c * c)))
    };
    Ok(panel(&g, 0.0, 1.0, acc, 0)? + panel(&g, 1.0, FRAC_PI_2, acc, 0)?)
}

fn jacobi_cached(n: usize, e: f64) -> Result<Rule> {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64), Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, e.to_bits());
    if let Some(r) = cache.lock().expect("rule cache").get(&key) {
        return Ok(r.clone());
    }
    let r = gauss_jacobi(n, 0.0, e)?;
    let mut map = cache.lock().expect("rule cache");
    if map.len() > 4096 {
        map.clear();
    }
    map.insert(key, r.clone());
    Ok(r)
}

/// One half of `(0, 1)` in the endpoint distance `s ∈ (0, 1/2]`; `pole` is
/// also measured as a distance from that endpoint.
fn half(
    f: &dyn Fn(f64) -> Result<C>,
    e: f64,
    tail_fn: Option<TailFn<'_>>,
    pole: Option<C>,
    acc: &mut Acc,
) -> Result<C> {
    let mut total = C::new(0.0, 0.0);
    let mut hi = 0.5;
    let g = |s: f64| -> Result<C> { Ok(f(s)? * s.powf(-e)) };
    for _ in 0..MAX_LEVELS {
        let clear = pole.map_or(true, |p| p.norm() > 3.0 * hi);
        if clear && hi < 0.5 && e > -1.0 {
            let (v, d) = end_panel(&g, e, hi)?;
            acc.charge(LOW + HIGH)?;
            if d <= 0.1 * acc.tol * (total + v).norm().max(acc.scale) || hi < 1e-250 {
                acc.err += d;
                acc.scale = acc.scale.max((total + v).norm());
                return Ok(total + v);
            }
        }
        if let Some(phi) = tail_fn.filter(|_| hi <= TAIL_START && clear) {
            return Ok(total + tail(phi, hi, acc)?);
        }
        let lo = hi * GRADING;
        total += panel(f, lo, hi, acc, 0)?;
        hi = lo;
    }
    if e <= -1.0 {
        return Err(Error::QuadratureStall { estimate: f64::INFINITY, tol: acc.tol });
    }
    let (v, d) = end_panel(&g, e, hi)?;
    acc.err += d;
    acc.unresolved = true;
    Ok(total + v)
}

/// `∫₀¹ f(t, 1−t) dt` with geometric grading towards both endpoints,
/// weight-matched Gauss–Jacobi end panels and adaptive bisection of the
/// interior panels. The error estimate sums `|G₃₂ − G₁₆|` over panels.
pub fn integrate_unit(it: &Integrand<'_>, tol: f64, max_evals: usize) -> Result<QuadratureResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol = {tol} must be positive")));
    }
    let ok = |e: f64, tail: bool| e > -1.0 || tail && e == -1.0;
    if !(ok(it.at_zero, it.tail_zero.is_some()) && ok(it.at_one, it.tail_one.is_some())) {
        return Err(Error::PreconditionFailed(format!(
            "integrand exponents ({}, {}) at t = 0, 1 are not integrable",
            it.at_zero, it.at_one
        )));
    }
    let mut acc =
        Acc { value: C::new(0.0, 0.0), err: 0.0, scale: 0.0, evals: 0, max_evals, tol, unresolved: false };
    let f = it.f;
    let left = |s: f64| f(s, 1.0 - s);
    let right = |s: f64| f(1.0 - s, s);
    let one = C::new(1.0, 0.0);
    let l = half(&left, it.at_zero, it.tail_zero, it.pole, &mut acc)?;
    let r = half(&right, it.at_one, it.tail_one, it.pole.map(|p| one - p), &mut acc)?;
    acc.value = l + r;
    if acc.unresolved && acc.err > tol * acc.value.norm().max(acc.scale) {
        return Err(Error::QuadratureStall { estimate: acc.err, tol });
    }
    Ok(QuadratureResult { value: acc.value, abs_error_estimate: acc.err, nodes_used: acc.evals })
}
