//! The fifteen worked shift triples with one admissible parameter set each.

use super::{
    build_representation, build_representation_at_order, eval_representation_with, integrate_unit, EvalOptions,
    Integrand, QuadratureResult,
};
use crate::error::{Error, Result};
use crate::hyp2f1_core::gamma::gamma_ratio;
use crate::hyp2f1_core::{Params, DEFAULT_TOL};
use crate::poly::RealPoly;
use crate::shift_engine::{compute_BP, derive_shifts, ratio, ratio_taylor, Shifts};
use num_complex::Complex64 as C;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorpusEntry {
    pub idx: usize,
    pub shifts: (i64, i64, i64),
    pub params: (f64, f64, f64),
}

const fn entry(idx: usize, shifts: (i64, i64, i64), params: (f64, f64, f64)) -> CorpusEntry {
    CorpusEntry { idx, shifts, params }
}

const BASE: (f64, f64, f64) = (0.3, 0.6, 1.4);

pub const CORPUS: [CorpusEntry; 15] = [
    entry(1, (0, 1, 1), BASE),
    entry(2, (0, 1, 0), BASE),
    entry(3, (1, 1, 1), (0.3, 0.4, 2.2)),
    entry(4, (1, 1, 2), BASE),
    entry(5, (0, 2, 2), (0.3, 0.7, 1.9)),
    entry(6, (0, 2, 0), (0.3, 0.6, 2.4)),
    entry(7, (1, 1, 0), (0.3, 0.6, 2.4)),
    entry(8, (0, 0, 1), BASE),
    entry(9, (0, 0, -1), BASE),
    entry(10, (0, 0, 2), BASE),
    entry(11, (0, 1, 2), BASE),
    entry(12, (0, -1, 0), BASE),
    entry(13, (-1, -1, 0), BASE),
    entry(14, (-1, 1, 0), BASE),
    entry(15, (-2, -2, 0), BASE),
];

impl CorpusEntry {
    pub fn params(&self) -> Params {
        let (a, b, c) = self.params;
        Params::new(a, b, c).expect("corpus parameters are regular")
    }

    pub fn shifts(&self) -> Shifts {
        let (n1, n2, m) = self.shifts;
        derive_shifts(n1, n2, m)
    }
}

fn lookup(idx: usize) -> Result<&'static CorpusEntry> {
    CORPUS
        .get(idx.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidArgument(format!("example index {idx} outside 1..=15")))
}

/// Closed form of `B·P_r(t)` for a worked example.
pub fn bp_closed_form(idx: usize, p: &Params) -> Result<RealPoly> {
    let Params { a, b, c } = *p;
    let g = gamma_ratio;
    let lin = |k: f64, c0: f64, c1: f64| RealPoly::from_f64(&[k * c0, k * c1]);
    let cst = |k: f64| RealPoly::from_f64(&[k]);
    Ok(match idx {
        1 => cst(g(&[c, c + 1.0], &[a, b + 1.0, c - a + 1.0, c - b])?),
        2 => cst(g(&[c, c], &[a, b + 1.0, c - a, c - b])?),
        3 => cst(g(&[c, c + 1.0], &[a + 1.0, b + 1.0, c - a, c - b])?),
        4 => cst(g(&[c + 1.0, c + 2.0], &[a + 1.0, b + 1.0, c - a + 1.0, c - b + 1.0])?),
        5 => lin(g(&[c, c + 2.0], &[a, b + 2.0, c - a + 2.0, c - b])?, b - a + 1.0, c),
        6 => lin(g(&[c, c], &[a, b + 2.0, c - a, c - b])?, b + 1.0 - a, c - 2.0 * b - 2.0),
        7 => cst(g(&[c, c], &[a + 1.0, b + 1.0, c - a, c - b])? * (c - a - b - 1.0)),
        8 => cst(-g(&[c, c + 1.0], &[a, b, c - a + 1.0, c - b + 1.0])?),
        9 => cst(g(&[c, c - 1.0], &[a, b, c - a, c - b])?),
        10 => lin(g(&[c, c + 2.0], &[a, b, c - a + 2.0, c - b + 2.0])?, a + b - 2.0 * c - 1.0, c),
        11 => lin(-g(&[c, c + 2.0], &[a, b + 1.0, c - a + 2.0, c - b + 1.0])?, b - c, c),
        12 => cst(-g(&[c, c], &[a, b, c - a, c - b + 1.0])?),
        13 => cst(-g(&[c, c], &[a, b, c - a + 1.0, c - b + 1.0])? * (c - a - b + 1.0)),
        14 => cst(g(&[c, c], &[a, b + 1.0, c - a + 1.0, c - b])? * (a - b - 1.0)),
        15 => {
            let k = -g(&[c, c], &[a, b, c - a + 2.0, c - b + 2.0])? * (c - a - b + 2.0);
            let r0 = a * a + b * b - (c + 2.0) * (a + b) + 3.0 * c + 1.0;
            let r1 = c * (c - a - b + 1.0) + 2.0 * (a * b - a - b + 1.0);
            lin(k, r0, r1)
        }
        _ => return Err(Error::InvalidArgument(format!("example index {idx} outside 1..=15"))),
    })
}

/// `R′(0)` for the examples with a second-order representation.
pub fn linear_coefficient(idx: usize, p: &Params) -> Option<f64> {
    let Params { a, b, c } = *p;
    match idx {
        12 => Some(-a / c),
        13 => Some((1.0 - a - b) / c),
        14 => Some((a - b - 1.0) / c),
        15 => Some(2.0 * (2.0 - a - b) / c),
        _ => None,
    }
}

/// The stated hypotheses of a worked example.
pub fn check_applicability(idx: usize, p: &Params) -> Result<()> {
    lookup(idx)?;
    let eta = p.c - p.a - p.b;
    let fail = |reason: String| Err(Error::InapplicableParameters { idx, reason });
    match idx {
        2 | 3 | 9 if !(eta > 0.0) => fail(format!("c > a + b fails: c − a − b = {eta}")),
        6 | 7 if !(eta > 1.0) => fail(format!("c > a + b + 1 fails: c − a − b = {eta}")),
        _ => Ok(()),
    }
}

/// Evaluation points of the corpus checks.
pub const Z_GRID: [C; 6] = [
    C::new(-2.0, 0.0),
    C::new(-0.5, 0.0),
    C::new(0.3, 0.0),
    C::new(0.5, 0.2),
    C::new(0.9, -0.4),
    C::new(-10.0, 3.0),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointReport {
    pub z: (f64, f64),
    /// Order of the representation used.
    pub order: usize,
    pub representation: (f64, f64),
    pub direct: (f64, f64),
    pub rel_error: f64,
    pub abs_error_estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleReport {
    pub idx: usize,
    pub params: (f64, f64, f64),
    pub shifts: (i64, i64, i64),
    pub order: usize,
    pub tabulated: bool,
    /// Relative coefficient error of `B·P_r` against its closed form.
    pub bp_rel_error: f64,
    /// Relative error of the closed-form `R′(0)`, when the example has one.
    pub linear_coeff_rel_error: Option<f64>,
    pub points: Vec<PointReport>,
    pub max_rel_error: f64,
}

fn rel(x: f64, y: f64, scale: f64) -> f64 {
    (x - y).abs() / scale.max(f64::MIN_POSITIVE)
}

/// Compares the representation of a worked example against the direct ratio.
///
/// Examples 12–15 are evaluated at order 2 in addition to the order from the
/// asymptotics.
pub fn verify_example(idx: usize, p: &Params, z_grid: &[C]) -> Result<ExampleReport> {
    verify_example_with(idx, p, z_grid, EvalOptions::default())
}

pub fn verify_example_with(idx: usize, p: &Params, z_grid: &[C], opts: EvalOptions) -> Result<ExampleReport> {
    let e = lookup(idx)?;
    check_applicability(idx, p)?;
    let s = e.shifts();
    let inapplicable = |err: Error| match err {
        Error::PreconditionFailed(reason) => Error::InapplicableParameters { idx, reason },
        other => other,
    };
    let base = build_representation(p, &s).map_err(inapplicable)?;
    let bp = compute_BP(p, &s)?;
    let closed = bp_closed_form(idx, p)?;
    let norm = closed.norm_inf();
    let len = bp.coeffs().len().max(closed.coeffs().len());
    let bp_rel_error = (0..len).map(|k| rel(bp.coeff(k), closed.coeff(k), norm)).fold(0.0, f64::max);
    let linear_coeff_rel_error = match linear_coefficient(idx, p) {
        Some(want) => {
            let t = ratio_taylor(p, &s, 2)?;
            Some(rel(t[1], want, want.abs()))
        }
        None => None,
    };
    let mut reps = vec![base.clone()];
    if linear_coefficient(idx, p).is_some() && base.N < 2 {
        reps.push(build_representation_at_order(p, &s, 2).map_err(inapplicable)?);
    }
    let mut points = Vec::new();
    for rep in &reps {
        for &z in z_grid {
            let got = eval_representation_with(rep, z, opts)?;
            let want = ratio(p, &s, z, DEFAULT_TOL)?;
            points.push(PointReport {
                z: (z.re, z.im),
                order: rep.N,
                representation: (got.value.re, got.value.im),
                direct: (want.re, want.im),
                rel_error: (got.value - want).norm() / want.norm(),
                abs_error_estimate: got.abs_error_estimate,
            });
        }
    }
    let max_rel_error = points.iter().map(|p| p.rel_error).fold(0.0, f64::max);
    Ok(ExampleReport {
        idx,
        params: (p.a, p.b, p.c),
        shifts: e.shifts,
        order: base.N,
        tabulated: base.tabulated,
        bp_rel_error,
        linear_coeff_rel_error,
        points,
        max_rel_error,
    })
}

/// `1 + z ∫₁^∞ dx / ((log²(x−1) + π²)(x + z))`, which equals `z / log(1 + z)`.
///
/// With `x − 1 = e^u` and `u = π tan θ` the integral becomes
/// `(1/π) ∫_{−π/2}^{π/2} e^u / (1 + z + e^u) dθ`.
pub fn example12_identity(z: C, tol: f64) -> Result<QuadratureResult> {
    if z.im == 0.0 && z.re <= -1.0 {
        return Err(Error::InvalidArgument(format!("z = {} lies on (−∞, −1]", z.re)));
    }
    let one_z = 1.0 + z;
    let f = |t: f64, w: f64| -> Result<C> {
        // θ = π(t − 1/2); tan θ = −cot(πt) = cot(πw)
        let u = if t <= 0.5 { -PI / (PI * t).tan() } else { PI / (PI * w).tan() };
        let v = if u > 0.0 { 1.0 / (1.0 + one_z * (-u).exp()) } else { u.exp() / (one_z + u.exp()) };
        Ok(v)
    };
    let it = Integrand { f: &f, at_zero: 0.0, at_one: 0.0, pole: None, tail_zero: None, tail_one: None };
    let q = integrate_unit(&it, tol, super::DEFAULT_MAX_NODES)?;
    Ok(QuadratureResult {
        value: 1.0 + z * q.value,
        abs_error_estimate: z.norm() * q.abs_error_estimate,
        nodes_used: q.nodes_used,
    })
}
