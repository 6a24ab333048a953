//! Scalars shared by the exact (rational) and floating-point code paths.

use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::Neg;

pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    /// Arithmetic is exact.
    const EXACT: bool;
    fn from_i64(n: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Exact zero for rationals; `|x| ≤ 1e−12` for floats.
    fn is_degenerate(&self) -> bool;
    /// Zero relative to `scale`: exact for rationals, `1e−8` relative for floats.
    fn negligible(&self, scale: f64) -> bool;
    /// Zero relative to `scale` up to rounding: exact for rationals, `1e−12` for floats.
    fn rounding_zero(&self, scale: f64) -> bool;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_degenerate(&self) -> bool {
        self.abs() <= 1e-12
    }
    fn negligible(&self, scale: f64) -> bool {
        self.abs() <= 1e-8 * scale
    }
    fn rounding_zero(&self, scale: f64) -> bool {
        self.abs() <= 1e-12 * scale
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_degenerate(&self) -> bool {
        self.is_zero()
    }
    fn negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    fn rounding_zero(&self, _scale: f64) -> bool {
        self.is_zero()
    }
}

/// Parses `"p/q"`, an integer, or a finite decimal into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: num_bigint::BigInt = n.trim().parse().ok()?;
        let d: num_bigint::BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: num_bigint::BigInt = format!("{int}{frac}").parse().ok()?;
    let den = num_traits::pow(num_bigint::BigInt::from(10), frac.len());
    let v = BigRational::new(digits, den);
    Some(if neg { -v } else { v })
}

