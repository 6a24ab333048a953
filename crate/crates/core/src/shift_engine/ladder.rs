//! Gauss contiguous relations composed along a path in shift space.
//!
//! Every shifted function is carried as `(A·F + B·F′) / (z^i (1−z)^j)` with
//! `F = ₂F₁(a,b;c;z)`; second derivatives are removed with the hypergeometric
//! equation. At the end `F′` is rewritten through `G = ₂F₁(a,b+1;c+1;z)`.

use super::Shifts;
use crate::error::{Error, Result};
use crate::hyp2f1_core::Params;
use crate::poly::Poly;
use crate::scalar::Scalar;
use num_rational::BigRational;
use serde::Serialize;

/// `p·₂F₁(a+n1,b+n2;c+m;z) = q·₂F₁(a,b+1;c+1;z) + r·₂F₁(a,b;c;z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ladder<T> {
    pub p: Poly<T>,
    pub q: Poly<T>,
    pub r: Poly<T>,
}

#[derive(Clone)]
struct Rep<T> {
    a: Poly<T>,
    b: Poly<T>,
    i: u32,
    j: u32,
}

struct Ctx<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Scalar> Ctx<T> {
    fn z() -> Poly<T> {
        Poly::linear(T::zero(), T::one())
    }

    fn one_minus_z() -> Poly<T> {
        Poly::linear(T::one(), -T::one())
    }

    fn zz1() -> Poly<T> {
        Poly::new(vec![T::zero(), T::one(), -T::one()])
    }

    /// Numerator of `G′` over `z^{i+1}(1−z)^{j+1}`.
    fn derivative(&self, g: &Rep<T>) -> Rep<T> {
        let zz1 = Self::zz1();
        let ab = self.a.clone() * self.b.clone();
        let ode = Poly::linear(self.c.clone(), -(self.a.clone() + self.b.clone() + T::one()));
        let ii = T::from_i64(i64::from(g.i));
        let jj = T::from_i64(i64::from(g.j));
        let w = Poly::linear(ii.clone(), -(ii + jj));
        let na = zz1.mul(&g.a.derivative()).add(&g.b.scale(&ab)).sub(&w.mul(&g.a));
        let nb = zz1
            .mul(&g.a.add(&g.b.derivative()))
            .sub(&ode.mul(&g.b))
            .sub(&w.mul(&g.b));
        Rep { a: na, b: nb, i: g.i + 1, j: g.j + 1 }
    }

    fn reduce(&self, mut g: Rep<T>) -> Rep<T> {
        loop {
            let scale = g.a.norm_inf().max(g.b.norm_inf()).max(f64::MIN_POSITIVE);
            if g.i > 0 && g.a.coeff(0).negligible(scale) && g.b.coeff(0).negligible(scale) {
                g = Rep { a: g.a.shift_down(), b: g.b.shift_down(), i: g.i - 1, j: g.j };
                continue;
            }
            let one = T::one();
            if g.j > 0 && g.a.eval(&one).negligible(scale) && g.b.eval(&one).negligible(scale) {
                g = Rep { a: g.a.div_one_minus(), b: g.b.div_one_minus(), i: g.i, j: g.j - 1 };
                continue;
            }
            return g;
        }
    }
}

fn degenerate(what: &str) -> Error {
    Error::LadderDegeneracy(format!("coefficient {what} vanishes"))
}

#[derive(Clone, Copy)]
enum Step {
    UpA,
    DownA,
    UpB,
    DownB,
    UpC,
    DownC,
}

/// Applies one unit step to `g` whose current parameters are `(a', b', c')`.
fn apply<T: Scalar>(ctx: &Ctx<T>, cur: &mut [T; 3], g: &Rep<T>, step: Step) -> Result<Rep<T>> {
    let d = ctx.derivative(g);
    let [a1, b1, c1] = cur.clone();
    let z = Ctx::<T>::z();
    let omz = Ctx::<T>::one_minus_z();
    let one = T::one();
    let (rep, new) = match step {
        Step::UpA | Step::UpB => {
            let piv = if matches!(step, Step::UpA) { a1.clone() } else { b1.clone() };
            if piv.is_degenerate() {
                return Err(degenerate("a′ (raising)"));
            }
            // G + (z/a′) G′
            let zz1 = Ctx::<T>::zz1();
            let inv = one.clone() / piv;
            let rep = Rep {
                a: zz1.mul(&g.a).add(&z.mul(&d.a).scale(&inv)),
                b: zz1.mul(&g.b).add(&z.mul(&d.b).scale(&inv)),
                i: d.i,
                j: d.j,
            };
            let new = if matches!(step, Step::UpA) {
                [a1 + one, b1, c1]
            } else {
                [a1, b1 + one, c1]
            };
            (rep, new)
        }
        Step::DownA | Step::DownB => {
            let (x, y) = if matches!(step, Step::DownA) { (a1.clone(), b1.clone()) } else { (b1.clone(), a1.clone()) };
            let piv = c1.clone() - x.clone();
            if piv.is_degenerate() {
                return Err(degenerate("c′ − a′ (lowering)"));
            }
            // [z(1−z)G′ + (c′−a′−b′z)G] / (c′−a′)
            let inv = one.clone() / piv.clone();
            let lin = Poly::linear(piv, -y);
            let rep = Rep {
                a: d.a.add(&lin.mul(&g.a)).scale(&inv),
                b: d.b.add(&lin.mul(&g.b)).scale(&inv),
                i: g.i,
                j: g.j,
            };
            let new = if matches!(step, Step::DownA) {
                [a1 - one, b1, c1]
            } else {
                [a1, b1 - one, c1]
            };
            (rep, new)
        }
        Step::DownC => {
            let piv = c1.clone() - one.clone();
            if piv.is_degenerate() {
                return Err(degenerate("c′ − 1 (lowering c)"));
            }
            // [zG′ + (c′−1)G] / (c′−1)
            let inv = one.clone() / piv.clone();
            let rep = Rep {
                a: d.a.add(&omz.mul(&g.a).scale(&piv)).scale(&inv),
                b: d.b.add(&omz.mul(&g.b).scale(&piv)).scale(&inv),
                i: g.i,
                j: g.j + 1,
            };
            (rep, [a1, b1, c1 - one])
        }
        Step::UpC => {
            let pa = c1.clone() - a1.clone();
            let pb = c1.clone() - b1.clone();
            if pa.is_degenerate() || pb.is_degenerate() {
                return Err(degenerate("(c′−a′)(c′−b′) (raising c)"));
            }
            // c′/((c′−a′)(c′−b′)) [(1−z)G′ + (c′−a′−b′)G]
            let f = c1.clone() / (pa * pb);
            let e = c1.clone() - a1.clone() - b1.clone();
            let rep = Rep {
                a: d.a.add(&z.mul(&g.a).scale(&e)).scale(&f),
                b: d.b.add(&z.mul(&g.b).scale(&e)).scale(&f),
                i: g.i + 1,
                j: g.j,
            };
            (rep, [a1, b1, c1 + one])
        }
    };
    *cur = new;
    Ok(ctx.reduce(rep))
}

/// Generic ladder: `c` first, then `a`, then `b`.
pub(crate) fn ladder_in<T: Scalar>(a: T, b: T, c: T, s: &Shifts) -> Result<Ladder<T>> {
    let ctx = Ctx { a: a.clone(), b: b.clone(), c: c.clone() };
    let mut cur = [a.clone(), b.clone(), c.clone()];
    let mut g = Rep { a: Poly::one(), b: Poly::zero(), i: 0, j: 0 };
    let mut steps = Vec::new();
    let push = |steps: &mut Vec<Step>, n: i64, up: Step, down: Step| {
        let st = if n >= 0 { up } else { down };
        steps.extend(std::iter::repeat(st).take(n.unsigned_abs() as usize));
    };
    push(&mut steps, s.m, Step::UpC, Step::DownC);
    push(&mut steps, s.n1, Step::UpA, Step::DownA);
    push(&mut steps, s.n2, Step::UpB, Step::DownB);
    for st in steps {
        g = apply(&ctx, &mut cur, &g, st)?;
    }
    // F′ = b/(1−z) · (F − (c−a)/c · G)
    let omz = Ctx::<T>::one_minus_z();
    let mut p = Poly::one();
    for _ in 0..g.i {
        p = p.shift_up();
    }
    for _ in 0..=g.j {
        p = p.mul(&omz);
    }
    let p = p.scale(&c);
    let q = g.b.scale(&(-(b.clone() * (c.clone() - a.clone()))));
    let r = omz.mul(&g.a).scale(&c).add(&g.b.scale(&(b * c)));
    Ok(normalize(p, q, r, g.i, g.j + 1))
}

/// Removes common factors `z` and `1−z` and scales `p` to `z^i(1−z)^j`.
fn normalize<T: Scalar>(mut p: Poly<T>, mut q: Poly<T>, mut r: Poly<T>, mut i: u32, mut j: u32) -> Ladder<T> {
    loop {
        let scale = q.norm_inf().max(r.norm_inf()).max(f64::MIN_POSITIVE);
        if i > 0 && q.coeff(0).negligible(scale) && r.coeff(0).negligible(scale) {
            p = p.shift_down();
            q = q.shift_down();
            r = r.shift_down();
            i -= 1;
            continue;
        }
        let one = T::one();
        if j > 0 && q.eval(&one).negligible(scale) && r.eval(&one).negligible(scale) {
            p = p.div_one_minus();
            q = q.div_one_minus();
            r = r.div_one_minus();
            j -= 1;
            continue;
        }
        break;
    }
    let inv = T::one() / p.coeff(i as usize);
    let mut monic = Poly::one();
    for _ in 0..i {
        monic = monic.shift_up();
    }
    for _ in 0..j {
        monic = monic.mul(&Poly::linear(T::one(), -T::one()));
    }
    Ladder { p: monic, q: q.scale(&inv).trim_rounding(), r: r.scale(&inv).trim_rounding() }
}

/// Ladder over floats.
pub fn contiguous_ladder(p: &Params, s: &Shifts) -> Result<Ladder<f64>> {
    ladder_in(p.a, p.b, p.c, s)
}

/// Ladder in exact rational arithmetic.
pub fn contiguous_ladder_exact(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    s: &Shifts,
) -> Result<Ladder<BigRational>> {
    if c.is_integer() && *c <= BigRational::from_integer(0.into()) {
        return Err(Error::ParameterPole(format!("c = {c}")));
    }
    ladder_in(a.clone(), b.clone(), c.clone(), s)
}

impl Ladder<BigRational> {
    pub fn to_f64(&self) -> Ladder<f64> {
        Ladder { p: self.p.to_f64(), q: self.q.to_f64(), r: self.r.to_f64() }
    }
}
