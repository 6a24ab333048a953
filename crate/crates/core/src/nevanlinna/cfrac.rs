//! Sign rules for regular C-fractions.

use super::NevanlinnaClass;
use crate::cfrac_engine::CFrac;
use crate::error::{Error, Result};
use serde::Serialize;

/// Coefficients probed for a fraction without a tail certificate.
pub const PROBE_HORIZON: usize = 512;

/// Result for a non-terminating fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    Class(NevanlinnaClass),
    /// Negative coefficients recur indefinitely, so `±φ ∉ S∪`.
    NotInSUnion { heuristic: bool },
}

/// `ε_j = sign Π_{l=j}^{k} α_l` for `j = 0 … k`.
fn tail_signs(alphas: &[f64]) -> Vec<i32> {
    let mut out = vec![1; alphas.len()];
    let mut acc = 1;
    for (j, a) in alphas.iter().enumerate().rev() {
        if *a < 0.0 {
            acc = -acc;
        }
        out[j] = acc;
    }
    out
}

fn count_negative(eps: &[i32], start: usize) -> usize {
    eps.iter().skip(start).step_by(2).filter(|&&e| e < 0).count()
}

/// Class of `ε₀·φ` for a terminating fraction `α₀, …, α_k ≠ 0`.
pub fn classify_terminating_cfrac(f: &CFrac) -> Result<NevanlinnaClass> {
    let k = f
        .last_index()
        .ok_or_else(|| Error::MalformedFraction("fraction does not terminate".into()))?;
    if f.is_zero() {
        return Err(Error::MalformedFraction("α₀ = 0".into()));
    }
    let alphas = f.head(k + 1);
    if alphas.iter().any(|a| *a == 0.0 || !a.is_finite()) {
        return Err(Error::MalformedFraction("zero coefficient before the terminator".into()));
    }
    let eps = tail_signs(&alphas);
    Ok(NevanlinnaClass {
        epsilon: eps[0],
        kappa: count_negative(&eps, 2),
        lambda: count_negative(&eps, 1),
        is_rational: true,
        K: (k + 1) / 2,
        Lambda_deg: (k + 2) / 2,
        certified: true,
    })
}

/// Class of `ε·φ` for a non-terminating fraction whose coefficients are
/// positive beyond some index `2m`, `m ≤ m_bound`.
///
/// A tail certificate on `f` makes the answer exact. Otherwise the first
/// `PROBE_HORIZON` coefficients (or the known prefix) are inspected: the
/// class is reported when the last negative index is at most `2·m_bound`,
/// `NotInSUnion` when negatives reach the upper half of the horizon, and
/// `TailUndecided` in between.
pub fn classify_nonterminating_cfrac(f: &CFrac, m_bound: usize) -> Result<Membership> {
    if f.is_terminating() {
        return Err(Error::MalformedFraction("fraction terminates".into()));
    }
    let (horizon, certified) = match (f.positive_after(), f.known_len()) {
        (Some(n), _) => (n + n % 2, true),
        (None, Some(k)) => (k.saturating_sub(1), false),
        (None, None) => (PROBE_HORIZON.max(4 * m_bound + 2), false),
    };
    let alphas = f.head(horizon + 1);
    if let Some(j) = alphas.iter().position(|a| *a == 0.0 || !a.is_finite()) {
        return Err(Error::MalformedFraction(format!("α_{j} vanishes in a non-terminating fraction")));
    }
    let last_negative = alphas.iter().rposition(|a| *a < 0.0).unwrap_or(0);
    let two_m = if certified {
        horizon
    } else if last_negative <= 2 * m_bound {
        last_negative + last_negative % 2
    } else if last_negative > horizon / 2 {
        return Ok(Membership::NotInSUnion { heuristic: true });
    } else {
        return Err(Error::TailUndecided(horizon));
    };
    let eps = tail_signs(&alphas[..=two_m]);
    Ok(Membership::Class(NevanlinnaClass {
        epsilon: eps[0],
        kappa: count_negative(&eps, 2),
        lambda: count_negative(&eps, 1),
        is_rational: false,
        K: 0,
        Lambda_deg: 0,
        certified,
    }))
}
