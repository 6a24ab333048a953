//! Generalized Nevanlinna classes `N_κ^λ` of hypergeometric ratios.
//!
//! Sign rules for C-fraction coefficients and for `R_{0,1,1}`, the
//! Runckel zero-free conditions, the sign of `B·P_r` on `(0, 1)` and a
//! Pick-matrix oracle.

mod cfrac;
mod pick;
mod sturm;

pub use cfrac::{classify_nonterminating_cfrac, classify_terminating_cfrac, Membership, PROBE_HORIZON};
pub use pick::{
    disc_contour, pick_matrix, pick_negative_count, pick_oracle, rect_contour, sample_upper_half_plane, winding_number,
    PickOracle, PICK_TOL,
};
pub use sturm::{real_roots_in, sturm_sequence};

use crate::error::{Error, Result};
use crate::hyp2f1_core::gamma::{gamma_sign, is_int_approx, is_nonpos_int};
use crate::hyp2f1_core::Params;
use crate::shift_engine::{compute_BP, Shifts};
use serde::Serialize;

/// `(ε, κ, λ)` with `ε·f ∈ N_κ^λ`; `K`, `Λ` are the degrees of `f`, `z·f`
/// when `f` is rational and zero otherwise.
#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NevanlinnaClass {
    pub epsilon: i32,
    pub kappa: usize,
    pub lambda: usize,
    pub is_rational: bool,
    pub K: usize,
    pub Lambda_deg: usize,
    /// False when the tail sign was only probed numerically.
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RunckelCondition {
    I,
    II,
    III,
    IV,
    V,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunckelReport {
    pub satisfied: bool,
    pub which_condition: Option<RunckelCondition>,
    pub details: String,
}

/// Runckel's sufficient conditions for `₂F₁(a,b;c;z) ≠ 0` off `[1, ∞)`.
pub fn runckel_check(p: &Params) -> RunckelReport {
    let Params { a, b, c } = *p;
    let (lo, hi) = (a.min(b), a.max(b));
    let xi = {
        let mut v = [a, b, c - a, c - b];
        v.sort_by(f64::total_cmp);
        v
    };
    let neg_nonint = |x: f64| x < 0.0 && !is_int_approx(x);
    let v_ok = [a, b, c, c - a, c - b].iter().all(|&x| neg_nonint(x))
        && xi[0].floor() + 1.0 == xi[3].floor()
        && xi[1].floor() == xi[2].floor();
    let checks = [
        (RunckelCondition::I, -1.0 < lo && lo <= c && c <= hi && hi <= 0.0),
        (RunckelCondition::II, -1.0 < lo && lo <= 0.0 && 0.0 <= hi && hi <= c),
        (RunckelCondition::III, -1.0 < c && c <= lo && lo <= 0.0 && 0.0 <= hi && hi < c + 1.0),
        (RunckelCondition::IV, 0.0 <= lo && lo <= c && 0.0 <= hi && hi < c + 1.0),
        (RunckelCondition::V, v_ok),
    ];
    match checks.iter().find(|(_, ok)| *ok) {
        Some(&(cond, _)) => RunckelReport {
            satisfied: true,
            which_condition: Some(cond),
            details: format!("condition {cond:?} holds for min(a,b) = {lo}, max(a,b) = {hi}, c = {c}"),
        },
        None => RunckelReport {
            satisfied: false,
            which_condition: None,
            details: format!(
                "no condition holds for min(a,b) = {lo}, max(a,b) = {hi}, c = {c}; sorted (a, b, c−a, c−b) = {xi:?}"
            ),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BpSign {
    Nonneg,
    Nonpos,
    SignChanging,
    IdenticallyZero,
}

/// Sign of `B·P_r(t)` for `t ∈ (0, 1)`.
pub fn bp_sign_on_unit_interval(p: &Params, s: &Shifts) -> Result<BpSign> {
    let bp = compute_BP(p, s)?.trim_rounding();
    if bp.is_zero() {
        return Ok(BpSign::IdenticallyZero);
    }
    let edge = 1e-12;
    let mut marks = vec![edge];
    marks.extend(real_roots_in(&bp, edge, 1.0 - edge));
    marks.push(1.0 - edge);
    let scale = bp.norm_inf();
    let (mut pos, mut neg) = (false, false);
    for w in marks.windows(2) {
        let v = bp.eval_f64(0.5 * (w[0] + w[1]));
        if v > 1e-13 * scale {
            pos = true;
        } else if v < -1e-13 * scale {
            neg = true;
        }
    }
    Ok(match (pos, neg) {
        (true, true) => BpSign::SignChanging,
        (false, true) => BpSign::Nonpos,
        _ => BpSign::Nonneg,
    })
}

fn sign(x: f64) -> i32 {
    if x < 0.0 {
        -1
    } else {
        1
    }
}

/// Sign of `(x)_n`.
fn poch_sign(x: f64, n: i64) -> i32 {
    (0..n.max(0)).map(|i| sign(x + i as f64)).product()
}

fn gsign(x: f64) -> Result<i32> {
    gamma_sign(x).map(|g| g.sign).ok_or_else(|| Error::ParameterPole(format!("Γ({x})")))
}

/// Smallest element of `xs` lying in `{lo, lo+1, …}`.
fn least_int(xs: &[f64], lo: i64) -> Option<i64> {
    xs.iter().filter(|&&x| is_int_approx(x) && x.round() as i64 >= lo).map(|x| x.round() as i64).min()
}

/// Class of `ε·R_{0,1,1}` with `R_{0,1,1} = ₂F₁(a,b+1;c+1;z)/₂F₁(a,b;c;z)`.
pub fn classify_gauss_ratio(p: &Params) -> Result<NevanlinnaClass> {
    let Params { a, b, c } = *p;
    if is_nonpos_int(c) {
        return Err(Error::ParameterPole(format!("c = {c}")));
    }
    let s1 = least_int(&[-a, b - c], 0);
    let s2 = least_int(&[-b, a - c], 1);
    let s = match (s1, s2) {
        (None, None) => return classify_gauss_generic(p),
        (Some(s1), None) => 2 * s1,
        (None, Some(s2)) => 2 * s2 - 1,
        (Some(s1), Some(s2)) => (2 * s1).min(2 * s2 - 1),
    };
    let big_k = ((s + 1) / 2) as usize;
    let big_l = ((s + 2) / 2) as usize;
    let rational = |epsilon, kappa, lambda| NevanlinnaClass {
        epsilon,
        kappa,
        lambda,
        is_rational: true,
        K: big_k,
        Lambda_deg: big_l,
        certified: true,
    };
    if s % 2 == 0 {
        let s1 = s / 2;
        if s1 == 0 {
            return Ok(rational(1, 0, 0));
        }
        // ε_{2j+1+δ}, j = 0 … s1−1
        let eps = |j: i64, d: i64| -> i32 {
            let jf = j as f64;
            let df = d as f64;
            poch_sign(a + jf + df, s1 - j - d)
                * poch_sign(c - b + jf + df, s1 - j - d)
                * poch_sign(b + jf + 1.0, s1 - j)
                * poch_sign(c - a + jf + 1.0, s1 - j)
                * sign((c + 2.0 * jf + df) * (c + 2.0 * s1 as f64))
        };
        let lambda = (0..s1).filter(|&j| eps(j, 0) < 0).count();
        let kappa = (0..s1).filter(|&j| eps(j, 1) < 0).count();
        Ok(rational(eps(0, 0), kappa, lambda))
    } else {
        let s2 = (s + 1) / 2;
        // ε_{2j+δ}, j + δ ≠ 0
        let eps = |j: i64, d: i64| -> i32 {
            let jf = j as f64;
            let df = d as f64;
            poch_sign(a + jf, s2 - j)
                * poch_sign(c - b + jf, s2 - j)
                * poch_sign(b + jf + df, s2 - j - d)
                * poch_sign(c - a + jf + df, s2 - j - d)
                * sign((c + 2.0 * jf - 1.0 + df) * (c + 2.0 * s2 as f64 - 1.0))
        };
        let epsilon = eps(0, 1);
        if s2 == 1 {
            return Ok(rational(epsilon, 0, usize::from(epsilon < 0)));
        }
        let lambda = (0..s2).filter(|&j| eps(j, 1) < 0).count();
        let kappa = (1..s2).filter(|&j| eps(j, 0) < 0).count();
        Ok(rational(epsilon, kappa, lambda))
    }
}

/// Non-rational branch: sign sequences `θ_j`, `η_j` up to the positive tail.
fn classify_gauss_generic(p: &Params) -> Result<NevanlinnaClass> {
    let Params { a, b, c } = *p;
    let theta = |j: f64| -> Result<i32> {
        Ok(sign(c + 2.0 * j) * gsign(a + j)? * gsign(c - b + j)? * gsign(b + j + 1.0)? * gsign(c - a + j + 1.0)?)
    };
    let eta = |j: f64| -> Result<i32> {
        Ok(sign(c + 2.0 * j - 1.0) * gsign(a + j)? * gsign(c - b + j)? * gsign(b + j)? * gsign(c - a + j)?)
    };
    let tail = |j: f64| [c + 2.0 * j - 1.0, a + j, c - b + j, b + j, c - a + j].iter().all(|&x| x > 0.0);
    let mut j = 0usize;
    while !tail(j as f64) {
        j += 1;
    }
    let last = j.max(1);
    let lambda = (0..=last).map(|k| theta(k as f64)).collect::<Result<Vec<_>>>()?;
    let kappa = (1..=last).map(|k| eta(k as f64)).collect::<Result<Vec<_>>>()?;
    Ok(NevanlinnaClass {
        epsilon: lambda[0],
        kappa: kappa.iter().filter(|&&v| v < 0).count(),
        lambda: lambda.iter().filter(|&&v| v < 0).count(),
        is_rational: false,
        K: 0,
        Lambda_deg: 0,
        certified: true,
    })
}
