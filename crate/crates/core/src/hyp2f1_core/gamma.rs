//! Real gamma, reciprocal gamma, digamma and Pochhammer symbols.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// `ln|Γ(x)|` together with the sign of `Γ(x)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct GammaSign {
    pub log_abs: f64,
    pub sign: i32,
}

impl GammaSign {
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }
}

pub fn is_nonpos_int(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Distance from `x` to the nearest integer.
pub fn int_distance(x: f64) -> f64 {
    (x - x.round()).abs()
}

pub fn is_int(x: f64) -> bool {
    x == x.round()
}

/// Integer test tolerant to rounding in differences such as `c − a − b`.
pub fn is_int_approx(x: f64) -> bool {
    int_distance(x) <= 1e-12 * x.abs().max(1.0)
}

pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if is_int(x) {
        return 0.0;
    }
    (PI * r).sin()
}

pub fn cos_pi(x: f64) -> f64 {
    let h = x + 0.5;
    if is_int(h) {
        return 0.0;
    }
    let r = x - 2.0 * (x / 2.0).round();
    (PI * r).cos()
}

/// `Γ(x)` with sign; `None` at the poles `x ∈ {0, −1, −2, …}`.
pub fn gamma_sign(x: f64) -> Option<GammaSign> {
    if is_nonpos_int(x) || x.is_nan() {
        return None;
    }
    if x >= 0.5 {
        return Some(GammaSign {
            log_abs: statrs::function::gamma::ln_gamma(x),
            sign: 1,
        });
    }
    let s = sin_pi(x);
    Some(GammaSign {
        log_abs: PI.ln() - s.abs().ln() - statrs::function::gamma::ln_gamma(1.0 - x),
        sign: if s > 0.0 { 1 } else { -1 },
    })
}

/// `Γ(x)`; infinite at the poles.
pub fn gamma(x: f64) -> f64 {
    if is_nonpos_int(x) {
        return f64::INFINITY;
    }
    if x >= 0.5 {
        if x < 171.0 {
            return statrs::function::gamma::gamma(x);
        }
        return f64::INFINITY;
    }
    PI / (sin_pi(x) * gamma(1.0 - x))
}

/// `1/Γ(x)`, zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpos_int(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x < 171.0 {
            return 1.0 / statrs::function::gamma::gamma(x);
        }
        return 0.0;
    }
    sin_pi(x) * gamma(1.0 - x) / PI
}

/// `Π Γ(num_i) / Π Γ(den_j)` through signed logarithms.
///
/// A pole among `den` gives zero; a pole among `num` (with no pole in `den`)
/// is an error.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    if den.iter().any(|&x| is_nonpos_int(x)) {
        return Ok(0.0);
    }
    let mut log_abs = 0.0;
    let mut sign = 1;
    for &x in num {
        let g = gamma_sign(x).ok_or_else(|| Error::ParameterPole(format!("Γ({x})")))?;
        log_abs += g.log_abs;
        sign *= g.sign;
    }
    for &x in den {
        let g = gamma_sign(x).expect("pole excluded above");
        log_abs -= g.log_abs;
        sign *= g.sign;
    }
    Ok(f64::from(sign) * log_abs.exp())
}

/// Digamma `ψ(x)` by upward recurrence and the asymptotic series,
/// with reflection for negative arguments.
pub fn digamma(x: f64) -> f64 {
    if is_nonpos_int(x) {
        return f64::NAN;
    }
    if x < 0.5 {
        return digamma(1.0 - x) - PI * cos_pi(x) / sin_pi(x);
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    // Bernoulli terms B_{2k}/(2k)
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32760.0)))));
    acc + y.ln() - 0.5 / y - series
}

/// `ψ(x)/Γ(x)` extended continuously through the poles,
/// where it equals `(−1)^{n+1} n!` at `x = −n`.
pub fn psi_over_gamma(x: f64) -> f64 {
    if is_nonpos_int(x) {
        let n = -x as u32;
        let mut f = 1.0;
        for k in 1..=n {
            f *= f64::from(k);
        }
        return if n % 2 == 0 { -f } else { f };
    }
    digamma(x) * rgamma(x)
}

/// Pochhammer symbol `(z)_r = Γ(z+r)/Γ(z)` for integer `r`.
///
/// Negative `r` uses `1/((z−1)(z−2)⋯(z+r))`, which is the continuous
/// extension `(1−z)_{−k} = (−1)^k/(z)_k`. Only a vanishing factor there is a pole.
pub fn pochhammer(z: f64, r: i64) -> Result<f64> {
    if r >= 0 {
        let mut p = 1.0;
        for k in 0..r {
            p *= z + k as f64;
        }
        Ok(p)
    } else {
        let mut p = 1.0;
        for k in 1..=(-r) {
            let f = z - k as f64;
            if f == 0.0 {
                return Err(Error::PoleError { z, r });
            }
            p *= f;
        }
        Ok(1.0 / p)
    }
}

/// `n!` as a float; zero for negative `n` (the convention `1/(−i)! = 0` is
/// applied by callers through [`rfactorial`]).
pub fn factorial(n: i64) -> f64 {
    (1..=n.max(0)).fold(1.0, |acc, k| acc * k as f64)
}

/// `1/n!` with `1/(−i)! = 0`.
pub fn rfactorial(n: i64) -> f64 {
    if n < 0 {
        0.0
    } else {
        1.0 / factorial(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.0, 2).unwrap(), 12.0);
        assert_eq!(pochhammer(0.7, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(0.5, -1).unwrap(), -2.0);
        assert!(pochhammer(2.0, -3).is_err());
        // both endpoints at poles: continuous extension
        assert_eq!(pochhammer(-1.0, -2).unwrap(), 1.0 / 6.0);
    }

    #[test]
    fn negative_pochhammer_convention() {
        // (1−z)_{−k} = (−1)^k/(z)_k
        for &z in &[0.3, 2.7, -1.4] {
            for k in 1..5 {
                let lhs = pochhammer(1.0 - z, -k).unwrap();
                let rhs = (-1f64).powi(k as i32) / pochhammer(z, k).unwrap();
                assert!((lhs - rhs).abs() < 1e-13 * rhs.abs());
            }
        }
    }

    #[test]
    fn gamma_values() {
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(-0.5) + 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!((gamma(-1.5) - 4.0 / 3.0 * PI.sqrt()).abs() < 1e-13);
        let g = gamma_sign(-2.5).unwrap();
        assert_eq!(g.sign, -1);
        assert!((g.value() - gamma(-2.5)).abs() < 1e-13);
        assert_eq!(rgamma(-3.0), 0.0);
    }

    #[test]
    fn digamma_values() {
        let euler = 0.577_215_664_901_532_9;
        assert!((digamma(1.0) + euler).abs() < 1e-14);
        assert!((digamma(0.5) + euler + 2.0 * 2f64.ln()).abs() < 1e-14);
        // ψ(−0.5) = ψ(0.5) + 2
        assert!((digamma(-0.5) - digamma(0.5) - 2.0).abs() < 1e-13);
        assert!((digamma(30.0) - 3.384_438_132_685_525).abs() < 1e-14);
    }

    #[test]
    fn psi_over_gamma_is_continuous() {
        for n in 0..4 {
            let x = -(n as f64);
            let h = 1e-7;
            let left = digamma(x - h) * rgamma(x - h);
            assert!((psi_over_gamma(x) - left).abs() < 1e-5 * psi_over_gamma(x).abs().max(1.0));
        }
    }
}
