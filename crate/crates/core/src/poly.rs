//! Dense polynomials in ascending-degree order.

use crate::scalar::Scalar;
use num_complex::Complex64 as C;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Real-coefficient polynomial.
pub type RealPoly = Poly<f64>;

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial and trims trailing zero coefficients.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    /// `c0 + c1·z`.
    pub fn linear(c0: T, c1: T) -> Self {
        Poly::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree, with `−1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn eval_complex(&self, z: C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::new(0.0, 0.0), |acc, c| acc * z + c.to_f64())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    /// Multiplication by `z`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::zero()];
        c.extend(self.coeffs.iter().cloned());
        Poly::new(c)
    }

    /// Quotient by `z` (the constant term is dropped).
    pub fn shift_down(&self) -> Self {
        Poly::new(self.coeffs.iter().skip(1).cloned().collect())
    }

    /// Quotient by `(1 − z)` via synthetic division; the remainder is dropped.
    pub fn div_one_minus(&self) -> Self {
        // p(z) = (1 − z) q(z) + p(1);  q = −(p / (z − 1))
        let n = self.coeffs.len();
        if n <= 1 {
            return Poly::zero();
        }
        let mut q = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for k in (1..n).rev() {
            carry = carry + self.coeffs[k].clone();
            q[k - 1] = -carry.clone();
        }
        Poly::new(q)
    }

    /// Drops leading coefficients that are rounding noise relative to the largest one.
    pub fn trim_rounding(&self) -> Self {
        let scale = self.norm_inf();
        let mut c = self.coeffs.clone();
        while c.last().is_some_and(|x| x.rounding_zero(scale)) {
            c.pop();
        }
        Poly::new(c)
    }

    /// Largest absolute coefficient as a float.
    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> RealPoly {
        Poly::new(self.coeffs.iter().map(|c| c.to_f64()).collect())
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len();
        if r.len() < dd {
            return (Poly::zero(), self.clone());
        }
        let lead = d.coeffs[dd - 1].clone();
        let mut q = vec![T::zero(); r.len() - dd + 1];
        for k in (0..q.len()).rev() {
            let f = r[k + dd - 1].clone() / lead.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - f.clone() * dc.clone();
            }
            q[k] = f;
        }
        r.truncate(dd - 1);
        (Poly::new(q), Poly::new(r))
    }
}

impl RealPoly {
    pub fn from_f64(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.to_vec())
    }
}
