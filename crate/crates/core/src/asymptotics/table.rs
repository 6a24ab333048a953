//! `(N, Q)` pairs of the worked shift triples.

use crate::hyp2f1_core::Params;
use crate::poly::RealPoly;
use crate::shift_engine::Shifts;

fn constant(q: f64) -> Option<(usize, RealPoly)> {
    Some((0, RealPoly::from_f64(&[q])))
}

fn linear(beta: f64) -> Option<(usize, RealPoly)> {
    Some((1, RealPoly::from_f64(&[0.0, beta])))
}

/// Tabulated `(N, Q)` for the worked shift triples.
pub fn tabulated(p: &Params, s: &Shifts) -> Option<(usize, RealPoly)> {
    let Params { a, b, c } = *p;
    let low = b <= a;
    match (s.n1, s.n2, s.m) {
        (0, 1, 1) => constant(if low { 0.0 } else { c * (b - a) / (b * (c - a)) }),
        (0, 1, 0) => constant(if low { 0.0 } else { (b - a) / b }),
        (1, 1, 1) | (1, 1, 2) | (1, 1, 0) => constant(0.0),
        (0, 2, 2) => constant(if low {
            0.0
        } else {
            c * (c + 1.0) * (b - a) * (b - a + 1.0) / (b * (b + 1.0) * (c - a) * (c - a + 1.0))
        }),
        (0, 2, 0) => constant(if low { 0.0 } else { (b - a) * (b - a + 1.0) / (b * (b + 1.0)) }),
        (0, 0, 1) => constant(if low { c / (c - b) } else { c / (c - a) }),
        (0, 0, -1) => constant(if low { (c - b - 1.0) / (c - 1.0) } else { (c - a - 1.0) / (c - 1.0) }),
        (0, 0, 2) => {
            let d = if low { c - b } else { c - a };
            constant(c * (c + 1.0) / (d * (d + 1.0)))
        }
        (0, 1, 2) => constant(if low { 0.0 } else { c * (c + 1.0) * (b - a) / (b * (c - a) * (c - a + 1.0)) }),
        (0, -1, 0) => linear(if b < a { (b - a) / (c - b) } else { 0.0 }),
        (-1, -1, 0) => linear(if a >= b { (a - 1.0) / (b - c) } else { (b - 1.0) / (a - c) }),
        (-1, 1, 0) => linear(if a >= b { 0.0 } else { (b - a) * (b - a + 1.0) / (b * (a - c)) }),
        (-2, -2, 0) => {
            let (x, y) = if a >= b { (a, b) } else { (b, a) };
            let g = (x - 2.0) * (x - 1.0) / ((c - y) * (c - y + 1.0));
            Some((2, RealPoly::from_f64(&[0.0, 0.0, g])))
        }
        _ => None,
    }
}
