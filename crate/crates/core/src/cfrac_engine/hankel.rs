//! Hankel determinants `D_n^{(p)} = det(c_{i+j+p})_{i,j<n}` and the
//! series-to-fraction map
//!
//! ```text
//! α_{2n−1} = D⁰_{n−1} D¹_n / (D⁰_n D¹_{n−1}),   α_{2n} = D⁰_{n+1} D¹_{n−1} / (D⁰_n D¹_n)
//! ```

use super::CFrac;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Fraction-free (Bareiss) determinant with row pivoting on the largest entry.
fn bareiss<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        let piv = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .max_by(|&i, &j| m[i][k].to_f64().abs().total_cmp(&m[j][k].to_f64().abs()));
        let Some(piv) = piv else {
            return T::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone()) / prev.clone();
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// `D_1^{(p)}, …, D_n^{(p)}` over any scalar field.
pub fn hankel_dets_in<T: Scalar>(c: &[T], n: usize, p: usize) -> Result<Vec<T>> {
    if n > 0 && c.len() < 2 * n - 1 + p {
        return Err(Error::InvalidArgument(format!(
            "{} coefficients given, {} needed",
            c.len(),
            2 * n - 1 + p
        )));
    }
    Ok((1..=n)
        .map(|k| {
            let m = (0..k).map(|i| (0..k).map(|j| c[i + j + p].clone()).collect()).collect();
            bareiss(m)
        })
        .collect())
}

/// `D_1^{(p)}, …, D_n^{(p)}` in floating point.
pub fn hankel_dets(c: &[f64], n: usize, p: usize) -> Result<Vec<f64>> {
    hankel_dets_in(c, n, p)
}

/// Coefficients recovered from a power series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesFraction<T> {
    pub alphas: Vec<T>,
    pub terminating: bool,
}

/// `α₀ … α_n` from `c₀, c₁, …`; stops at the first vanishing coefficient.
///
/// In floating point a determinant counts as zero when
/// `|D_k| < 1e−12 · (max |c_i|)^k`.
pub fn series_to_cfrac_in<T: Scalar>(c: &[T], n: usize) -> Result<SeriesFraction<T>> {
    if c.is_empty() {
        return Err(Error::InvalidArgument("empty series".into()));
    }
    let half = n / 2 + 1;
    if c.len() < 2 * half {
        return Err(Error::InvalidArgument(format!("{} coefficients given, {} needed", c.len(), 2 * half)));
    }
    let scale = c.iter().take(2 * half + 1).map(|x| x.to_f64().abs()).fold(0.0, f64::max);
    let zeroed = |d: Vec<T>| -> Result<Vec<T>> {
        if T::EXACT {
            return Ok(d);
        }
        let mut first = None;
        let out: Vec<T> = d
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                if v.to_f64().abs() < 1e-12 * scale.powi(i as i32 + 1) {
                    first.get_or_insert(i + 1);
                    T::zero()
                } else {
                    v
                }
            })
            .collect();
        // a vanishing determinant must be followed by vanishing ones
        if let Some(k) = first {
            if out[k - 1..].iter().any(|v| !v.is_zero()) {
                return Err(Error::IllConditioned(k));
            }
        }
        Ok(out)
    };
    let mut d0 = zeroed(hankel_dets_in(c, half, 0)?)?;
    let mut d1 = zeroed(hankel_dets_in(c, half, 1)?)?;
    d0.insert(0, T::one());
    d1.insert(0, T::one());
    let mut alphas = vec![c[0].clone()];
    if c[0].is_zero() {
        return Ok(SeriesFraction { alphas, terminating: true });
    }
    for k in 1..=n {
        let j = (k + 1) / 2;
        let (num, den) = if k % 2 == 1 {
            (d0[j - 1].clone() * d1[j].clone(), d0[j].clone() * d1[j - 1].clone())
        } else {
            (d0[j + 1].clone() * d1[j - 1].clone(), d0[j].clone() * d1[j].clone())
        };
        if den.is_zero() {
            return Err(Error::MalformedFraction(format!("D vanishes before α_{k}")));
        }
        let a = num / den;
        let stop = a.is_zero();
        alphas.push(a);
        if stop {
            if !T::EXACT {
                check_correspondence(&alphas[..k], c, k)?;
            }
            return Ok(SeriesFraction { alphas, terminating: true });
        }
    }
    Ok(SeriesFraction { alphas, terminating: false })
}

/// A terminating float fraction must reproduce every given coefficient.
fn check_correspondence<T: Scalar>(alphas: &[T], c: &[T], k: usize) -> Result<()> {
    let series = cfrac_series_in(alphas, c.len());
    let scale = c.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max);
    let bad = series
        .iter()
        .zip(c)
        .any(|(s, c)| (s.to_f64() - c.to_f64()).abs() > 1e-8 * scale.max(c.to_f64().abs()));
    if bad {
        return Err(Error::IllConditioned((k + 1) / 2));
    }
    Ok(())
}

/// Power series `c₀ … c_{n−1}` of the finite fraction with coefficients `alphas`.
pub fn cfrac_series_in<T: Scalar>(alphas: &[T], n: usize) -> Vec<T> {
    // φ_k = α_k / (1 − z φ_{k+1}), evaluated on truncated series
    let mut tail: Vec<T> = vec![T::zero(); n];
    for a in alphas.iter().rev() {
        // den = 1 − z·tail
        let mut den = vec![T::zero(); n];
        if n > 0 {
            den[0] = T::one();
        }
        for k in 1..n {
            den[k] = -tail[k - 1].clone();
        }
        let mut q = vec![T::zero(); n];
        for k in 0..n {
            let mut v = if k == 0 { a.clone() } else { T::zero() };
            for j in 1..=k {
                v = v - den[j].clone() * q[k - j].clone();
            }
            q[k] = v;
        }
        tail = q;
    }
    tail
}

/// Floating-point [`series_to_cfrac_in`] packaged as a [`CFrac`].
pub fn series_to_cfrac(c: &[f64], n: usize) -> Result<CFrac> {
    let sf = series_to_cfrac_in(c, n)?;
    if sf.terminating {
        CFrac::from_coeffs(sf.alphas)
    } else {
        Ok(CFrac::truncated(sf.alphas))
    }
}
