//! Regular C-fractions
//!
//! ```text
//! φ(z) = α₀ / (1 − α₁z / (1 − α₂z / (1 − ⋯)))
//! ```
//!
//! with the Gauss coefficients for `R_{0,1,1}` and `R_{0,1,0}`, Hankel
//! determinants, conversion from power series and contraction to J-fractions.

mod hankel;

pub use hankel::{cfrac_series_in, hankel_dets, hankel_dets_in, series_to_cfrac, series_to_cfrac_in, SeriesFraction};

use crate::error::{Error, Result};
use crate::hyp2f1_core::gamma::is_nonpos_int;
use crate::hyp2f1_core::Params;
use num_complex::Complex64 as C;
use std::fmt;
use std::sync::Arc;

/// Modified-Lentz substitute for a vanishing pivot.
pub const LENTZ_TINY: f64 = 1e-30;

type Generator = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Source {
    Finite(Vec<f64>),
    Generated(Generator),
}

/// Coefficients `α₀, α₁, …` of a regular C-fraction.
///
/// A terminating fraction stores its last nonzero index `s`; `α_{s+1} = 0`.
/// A truncated fraction is a known prefix of a non-terminating one and is
/// evaluated as the corresponding approximant.
#[derive(Clone)]
pub struct CFrac {
    source: Source,
    last: Option<usize>,
    known: Option<usize>,
    positive_after: Option<usize>,
}

impl fmt::Debug for CFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<f64> = (0..self.last.map_or(6, |s| s + 1).min(6)).map(|n| self.alpha(n)).collect();
        f.debug_struct("CFrac").field("head", &head).field("last", &self.last).finish()
    }
}

impl CFrac {
    /// Finite coefficient list. The fraction terminates at the first zero.
    pub fn from_coeffs(alphas: Vec<f64>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::MalformedFraction("no coefficients".into()));
        }
        if alphas.iter().any(|a| !a.is_finite()) {
            return Err(Error::MalformedFraction("non-finite coefficient".into()));
        }
        let last = match alphas.iter().position(|&a| a == 0.0) {
            Some(0) => Some(0),
            Some(k) => Some(k - 1),
            None => Some(alphas.len() - 1),
        };
        let mut alphas = alphas;
        alphas.truncate(last.unwrap() + 1);
        Ok(CFrac { source: Source::Finite(alphas), last, known: None, positive_after: None })
    }

    /// Known prefix `α₀ … α_n` of a non-terminating fraction.
    pub fn truncated(alphas: Vec<f64>) -> Self {
        let known = Some(alphas.len());
        CFrac { source: Source::Finite(alphas), last: None, known, positive_after: None }
    }

    /// Length of the known prefix of a truncated fraction.
    pub fn known_len(&self) -> Option<usize> {
        self.known
    }

    /// Generator-backed fraction; `last` is the final nonzero index if known.
    pub fn from_fn(f: impl Fn(usize) -> f64 + Send + Sync + 'static, last: Option<usize>) -> Self {
        CFrac { source: Source::Generated(Arc::new(f)), last, known: None, positive_after: None }
    }

    /// `α_n`, zero past the end of a terminating fraction.
    pub fn alpha(&self, n: usize) -> f64 {
        if self.last.is_some_and(|s| n > s) {
            return 0.0;
        }
        match &self.source {
            Source::Finite(v) => v.get(n).copied().unwrap_or(if self.known.is_some() { f64::NAN } else { 0.0 }),
            Source::Generated(g) => g(n),
        }
    }

    pub fn is_terminating(&self) -> bool {
        self.last.is_some()
    }

    /// Last nonzero index `s` of a terminating fraction.
    pub fn last_index(&self) -> Option<usize> {
        self.last
    }

    /// `α₀ … α_{n−1}` (shorter when the fraction terminates).
    pub fn head(&self, n: usize) -> Vec<f64> {
        let n = self.last.map_or(n, |s| n.min(s + 1));
        let n = self.known.map_or(n, |k| n.min(k));
        (0..n).map(|k| self.alpha(k)).collect()
    }

    /// Index `n*` with `α_n > 0` proven for every `n > n*`, if known.
    pub fn positive_after(&self) -> Option<usize> {
        self.positive_after
    }

    /// Attaches a proven tail-positivity index.
    pub fn with_positive_tail(mut self, n: usize) -> Self {
        self.positive_after = Some(n);
        self
    }

    /// Whether the stored tail is all-zero (`α₀ = 0`).
    pub fn is_zero(&self) -> bool {
        self.alpha(0) == 0.0
    }
}

/// Least `n ≥ 0` with `x + n > 0`.
fn steps_to_positive(x: f64) -> usize {
    if x > 0.0 {
        0
    } else {
        (-x).floor() as usize + 1
    }
}

/// First index `2n+1` or `2n+2` whose Gauss coefficient vanishes.
fn first_zero(odd: &[f64], even: &[f64]) -> Option<usize> {
    let pick = |xs: &[f64], off: usize| {
        xs.iter()
            .filter(|&&x| is_nonpos_int(-x))
            .map(|&x| 2 * (x as usize) + off)
            .min()
    };
    match (pick(odd, 1), pick(even, 2)) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

/// Gauss fraction of `R_{0,1,1} = ₂F₁(a,b+1;c+1;z)/₂F₁(a,b;c;z)`.
pub fn gauss_cfrac_011(p: &Params) -> CFrac {
    let Params { a, b, c } = *p;
    let coeff = move |k: usize| -> f64 {
        if k == 0 {
            return 1.0;
        }
        let n = ((k - 1) / 2) as f64;
        if k % 2 == 1 {
            (a + n) * (c - b + n) / ((c + 2.0 * n) * (c + 2.0 * n + 1.0))
        } else {
            (b + n + 1.0) * (c - a + n + 1.0) / ((c + 2.0 * n + 1.0) * (c + 2.0 * n + 2.0))
        }
    };
    // n with a+n = 0, c−b+n = 0 (odd) or b+n+1 = 0, c−a+n+1 = 0 (even)
    let zero = first_zero(&[-a, b - c], &[-b - 1.0, a - c - 1.0]);
    // every factor a+n, c−b+n, b+n+1, c−a+n+1, c+2n is positive for n ≥ n*
    let n = [a, c - b, b + 1.0, c - a + 1.0]
        .iter()
        .map(|&x| steps_to_positive(x))
        .chain([steps_to_positive(c / 2.0)])
        .max()
        .unwrap();
    CFrac::from_fn(coeff, zero.map(|k| k - 1)).with_positive_tail(2 * n)
}

/// Gauss fraction of `R_{0,1,0} = ₂F₁(a,b+1;c;z)/₂F₁(a,b;c;z)`.
pub fn gauss_cfrac_010(p: &Params) -> CFrac {
    let Params { a, b, c } = *p;
    let coeff = move |k: usize| -> f64 {
        match k {
            0 => 1.0,
            1 => a / c,
            _ => {
                let kk = (k / 2) as f64;
                if k % 2 == 0 {
                    (b + kk) * (c - a + kk - 1.0) / ((c + 2.0 * kk - 2.0) * (c + 2.0 * kk - 1.0))
                } else {
                    (a + kk) * (c - b + kk - 1.0) / ((c + 2.0 * kk - 1.0) * (c + 2.0 * kk))
                }
            }
        }
    };
    // α₁ = 0 iff a = 0; α_{2k} = 0 iff b+k = 0 or c−a+k−1 = 0; α_{2k+1} = 0 iff a+k = 0 or c−b+k−1 = 0
    let mut cands = Vec::new();
    for (x, off) in [(-a, 1usize), (-b - 1.0, 2), (a - c, 2), (-a - 1.0, 3), (b - c, 3)] {
        if is_nonpos_int(-x) {
            cands.push(2 * (x as usize) + off);
        }
    }
    let zero = cands.into_iter().min();
    // b+k, c−a+k−1, a+k, c−b+k−1, c+2k−2 positive for k ≥ k* ≥ 1
    let k = [b, c - a - 1.0, a, c - b - 1.0]
        .iter()
        .map(|&x| steps_to_positive(x))
        .chain([steps_to_positive(c / 2.0 - 1.0), 1])
        .max()
        .unwrap();
    CFrac::from_fn(coeff, zero.map(|k| k - 1)).with_positive_tail(2 * k - 1)
}

/// Evaluation details.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CFracValue {
    pub value: C,
    pub depth: usize,
    pub tiny_substitutions: usize,
}

/// Value of the fraction at `z`.
pub fn eval_cfrac(f: &CFrac, z: C, tol: f64, max_depth: usize) -> Result<C> {
    Ok(eval_cfrac_diag(f, z, tol, max_depth)?.value)
}

/// [`eval_cfrac`] with depth and pivot diagnostics.
///
/// Terminating fractions are evaluated exactly by backward recurrence,
/// others by the modified Lentz algorithm.
pub fn eval_cfrac_diag(f: &CFrac, z: C, tol: f64, max_depth: usize) -> Result<CFracValue> {
    if let Some(s) = f.last.or(f.known.map(|k| k - 1)) {
        let mut v = C::new(f.alpha(s), 0.0);
        for k in (0..s).rev() {
            let den = C::new(1.0, 0.0) - z * v;
            if den == C::new(0.0, 0.0) {
                return Err(Error::DenominatorZero(z.re));
            }
            v = f.alpha(k) / den;
        }
        return Ok(CFracValue { value: v, depth: s + 1, tiny_substitutions: 0 });
    }
    // b₀ = 0, a₁ = α₀, a_{k+1} = −α_k z, b_k = 1
    let one = C::new(1.0, 0.0);
    let tiny = C::new(LENTZ_TINY, 0.0);
    let mut subs = 0;
    let mut value = tiny;
    let mut cc = tiny;
    let mut dd = C::new(0.0, 0.0);
    for j in 1..=max_depth {
        let aj = if j == 1 { C::new(f.alpha(0), 0.0) } else { -f.alpha(j - 1) * z };
        dd = one + aj * dd;
        if dd.norm() < LENTZ_TINY {
            dd = tiny;
            subs += 1;
        }
        cc = one + aj / cc;
        if cc.norm() < LENTZ_TINY {
            cc = tiny;
            subs += 1;
        }
        dd = one / dd;
        let delta = cc * dd;
        value *= delta;
        if j > 1 && (delta - one).norm() < tol {
            return Ok(CFracValue { value, depth: j, tiny_substitutions: subs });
        }
    }
    Err(Error::NonConvergence(format!("continued fraction after depth {max_depth}")))
}

/// `sup |α_n|` over the first `n` coefficients.
pub fn sup_alpha(f: &CFrac, n: usize) -> f64 {
    f.head(n).iter().fold(0.0, |m, a| m.max(a.abs()))
}

/// Contracted J-fraction
///
/// ```text
/// ψ(z) = −α₀ / (z − β₀ − α₁α₂ / (z − β₁ − α₃α₄ / (z − β₂ − ⋯)))
/// ```
///
/// with `β₀ = α₁`, `β_j = α_{2j} + α_{2j+1}`, so that `ψ(z) ∼ −(1/z)φ(1/z)`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct JFrac {
    /// `α₀, α₁α₂, α₃α₄, …`
    pub a_prods: Vec<f64>,
    /// `β₀, β₁, …`
    pub b_sums: Vec<f64>,
}

/// Contraction to `count` levels (fewer for a terminating fraction).
pub fn contract_to_jfrac(f: &CFrac, count: usize) -> JFrac {
    let levels = match (f.last, f.known) {
        // Λ = ⌊(s+2)/2⌋ levels
        (Some(s), _) => count.min((s + 2) / 2),
        (None, Some(k)) => count.min(k / 2),
        (None, None) => count,
    };
    let mut a_prods = Vec::with_capacity(levels);
    let mut b_sums = Vec::with_capacity(levels);
    for j in 0..levels {
        if j == 0 {
            a_prods.push(f.alpha(0));
            b_sums.push(f.alpha(1));
        } else {
            a_prods.push(f.alpha(2 * j - 1) * f.alpha(2 * j));
            b_sums.push(f.alpha(2 * j) + f.alpha(2 * j + 1));
        }
    }
    JFrac { a_prods, b_sums }
}

impl JFrac {
    /// Backward evaluation with a zero tail.
    pub fn eval(&self, z: C) -> C {
        let mut tail = C::new(0.0, 0.0);
        for j in (0..self.a_prods.len()).rev() {
            tail = -self.a_prods[j] / (z - self.b_sums[j] + tail);
        }
        tail
    }

    pub fn levels(&self) -> usize {
        self.a_prods.len()
    }
}
