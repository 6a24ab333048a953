//! Real-root isolation with Sturm sequences.

use crate::poly::RealPoly;

const REM_TOL: f64 = 1e-12;

/// `p, p', −rem(p, p'), …`, with remainders below `1e−12` of the
/// dividend treated as zero.
pub fn sturm_sequence(p: &RealPoly) -> Vec<RealPoly> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        let scale = seq[n - 2].norm_inf();
        let r = RealPoly::new(r.coeffs().iter().map(|&x| if x.abs() < REM_TOL * scale { 0.0 } else { -x }).collect());
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn variations(seq: &[RealPoly], x: f64) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for p in seq {
        let v = p.eval_f64(x);
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && (v < 0.0) != (last < 0.0) {
            count += 1;
        }
        last = v;
    }
    count
}

/// Distinct real roots of `p` in `(lo, hi)`, each located by bisection.
pub fn real_roots_in(p: &RealPoly, lo: f64, hi: f64) -> Vec<f64> {
    if p.degree() < 1 {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, variations(&seq, lo), variations(&seq, hi))];
    while let Some((l, h, vl, vh)) = stack.pop() {
        let n = vl.saturating_sub(vh);
        if n == 0 {
            continue;
        }
        if h - l < 1e-14 * h.abs().max(1.0) {
            out.push(0.5 * (l + h));
            continue;
        }
        let m = 0.5 * (l + h);
        let vm = variations(&seq, m);
        stack.push((l, m, vl, vm));
        stack.push((m, h, vm, vh));
    }
    out.sort_by(f64::total_cmp);
    out
}
