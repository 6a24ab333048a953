//! Pick matrices and a sampling oracle for the negative index.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

/// Relative eigenvalue threshold.
pub const PICK_TOL: f64 = 1e-10;

/// `H_ij = (f(z_i) − conj f(z_j)) / (z_i − conj z_j)`.
pub fn pick_matrix(values: &[(C, C)]) -> Result<DMatrix<C>> {
    for (i, (z, w)) in values.iter().enumerate() {
        if !(z.im > 0.0) {
            return Err(Error::DegeneratePoints(format!("{z} is not in the upper half-plane")));
        }
        if !(w.re.is_finite() && w.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("f is not finite at {z}")));
        }
        let scale = z.norm().max(1.0);
        if values[..i].iter().any(|(u, _)| (u - z).norm() <= 1e-14 * scale) {
            return Err(Error::DegeneratePoints(format!("{z} is repeated")));
        }
    }
    let n = values.len();
    Ok(DMatrix::from_fn(n, n, |i, j| {
        let (zi, wi) = values[i];
        let (zj, wj) = values[j];
        (wi - wj.conj()) / (zi - zj.conj())
    }))
}

/// Number of eigenvalues of the Pick matrix below `−PICK_TOL·‖H‖`.
pub fn pick_negative_count(values: &[(C, C)]) -> Result<usize> {
    if values.is_empty() {
        return Ok(0);
    }
    let h = pick_matrix(values)?;
    // symmetrize against rounding
    let h = (&h + h.adjoint()).scale(0.5);
    let eig = h.symmetric_eigen().eigenvalues;
    let norm = eig.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(eig.iter().filter(|&&v| v < -PICK_TOL * norm).count())
}

/// `count` points with modulus log-uniform in `[0.1, 10]` and argument
/// uniform in `(0.1, π − 0.1)`.
pub fn sample_upper_half_plane(rng: &mut impl Rng, count: usize) -> Vec<C> {
    let (lo, hi) = (0.1f64.ln(), 10f64.ln());
    (0..count)
        .map(|_| C::from_polar(rng.gen_range(lo..hi).exp(), rng.gen_range(0.1..PI - 0.1)))
        .collect()
}

/// Negative counts of Pick matrices over random point sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PickOracle {
    pub max: usize,
    pub counts: Vec<usize>,
    pub seed: u64,
}

/// Evaluates `f` on `draws` independent point sets of size `size`.
///
/// Draw `k` uses stream `k` of a ChaCha generator seeded with `seed`, so
/// the result does not depend on the thread count.
pub fn pick_oracle<F>(f: F, size: usize, draws: usize, seed: u64) -> Result<PickOracle>
where
    F: Fn(C) -> Result<C> + Sync,
{
    let counts = (0..draws)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let pts = sample_upper_half_plane(&mut rng, size);
            let values = pts.iter().map(|&z| Ok((z, f(z)?))).collect::<Result<Vec<_>>>()?;
            pick_negative_count(&values)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PickOracle { max: counts.iter().copied().max().unwrap_or(0), counts, seed })
}

/// Closed polygon on the circle `|z| = r`.
pub fn disc_contour(r: f64, n: usize) -> Vec<C> {
    (0..n).map(|k| C::from_polar(r, 2.0 * PI * k as f64 / n as f64)).collect()
}

/// Closed polygon on the boundary of `[x0, x1] × [y0, y1]`, counterclockwise.
pub fn rect_contour(x0: f64, x1: f64, y0: f64, y1: f64, n: usize) -> Vec<C> {
    let corners = [C::new(x0, y0), C::new(x1, y0), C::new(x1, y1), C::new(x0, y1)];
    let side = n.div_ceil(4);
    (0..4)
        .flat_map(|s| {
            let (p, q) = (corners[s], corners[(s + 1) % 4]);
            (0..side).map(move |k| p + (q - p) * (k as f64 / side as f64))
        })
        .collect()
}

/// Winding number of `f` along a closed polygon.
///
/// Each step contributes the principal argument of `f(z_{k+1})/f(z_k)`;
/// steps turning by more than `π/2` are subdivided.
pub fn winding_number<F>(f: F, contour: &[C]) -> Result<i64>
where
    F: Fn(C) -> Result<C>,
{
    let n = contour.len();
    let mut total = 0.0;
    for k in 0..n {
        total += arg_step(&f, contour[k], contour[(k + 1) % n], 0)?;
    }
    Ok((total / (2.0 * PI)).round() as i64)
}

fn arg_step<F>(f: &F, z0: C, z1: C, depth: usize) -> Result<f64>
where
    F: Fn(C) -> Result<C>,
{
    let (w0, w1) = (f(z0)?, f(z1)?);
    if w0 == C::new(0.0, 0.0) || w1 == C::new(0.0, 0.0) {
        return Err(Error::DegeneratePoints(String::new()));
    }
    let d = (w1 / w0).arg();
    if d.abs() < PI / 2.0 || depth >= 20 {
        return Ok(d);
    }
    let m = 0.5 * (z0 + z1);
    Ok(arg_step(f, z0, m, depth + 1)? + arg_step(f, m, z1, depth + 1)?)
}
