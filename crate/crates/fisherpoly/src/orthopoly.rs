//! The four polynomial families: weights, three-term recurrences, norms,
//! orthonormal versions and Rakhmanov densities.
//!
//! Laguerre, Jacobi and Gegenbauer use their conventional normalizations;
//! the Grosjean families are monic (evaluated as monic Jacobi with the
//! implied second parameter). Norms are evaluated in log space so degrees
//! up to 1e5 stay finite.

use crate::specfun::{digamma_any, ln_gamma, ln_gamma_signed, LogValue};
use crate::Error;

pub(crate) const LN_2: f64 = std::f64::consts::LN_2;

/// Polynomial family identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Laguerre,
    Jacobi,
    Gegenbauer,
    GrosjeanFirst,
    GrosjeanSecond,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Laguerre => "laguerre",
            Family::Jacobi => "jacobi",
            Family::Gegenbauer => "gegenbauer",
            Family::GrosjeanFirst => "grosjean1",
            Family::GrosjeanSecond => "grosjean2",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "laguerre" => Ok(Family::Laguerre),
            "jacobi" => Ok(Family::Jacobi),
            "gegenbauer" => Ok(Family::Gegenbauer),
            "grosjean1" => Ok(Family::GrosjeanFirst),
            "grosjean2" => Ok(Family::GrosjeanSecond),
            other => Err(Error::Domain(format!("unknown family '{other}'"))),
        }
    }
}

/// Which parameter the Fisher information is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamTarget {
    Alpha,
    Beta,
    Lambda,
}

impl ParamTarget {
    pub fn name(self) -> &'static str {
        match self {
            ParamTarget::Alpha => "alpha",
            ParamTarget::Beta => "beta",
            ParamTarget::Lambda => "lambda",
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "alpha" => Ok(ParamTarget::Alpha),
            "beta" => Ok(ParamTarget::Beta),
            "lambda" => Ok(ParamTarget::Lambda),
            other => Err(Error::Domain(format!("unknown target '{other}'"))),
        }
    }
}

/// Validates that `target` is a parameter of `family`.
pub fn check_pairing(family: Family, target: ParamTarget) -> Result<(), Error> {
    let ok = match target {
        ParamTarget::Alpha => family != Family::Gegenbauer,
        ParamTarget::Beta => family == Family::Jacobi,
        ParamTarget::Lambda => family == Family::Gegenbauer,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Pairing(format!(
            "target {} is not a parameter of family {}",
            target.name(),
            family.name()
        )))
    }
}

/// Parameter vector; only the fields relevant to a family are read.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params { alpha: 0.0, beta: 0.0, lambda: 0.0 }
    }
}

impl Params {
    pub fn with_alpha(alpha: f64) -> Self {
        Params { alpha, ..Default::default() }
    }

    pub fn with_alpha_beta(alpha: f64, beta: f64) -> Self {
        Params { alpha, beta, lambda: 0.0 }
    }

    pub fn with_lambda(lambda: f64) -> Self {
        Params { lambda, ..Default::default() }
    }

    /// Family-specific domain invariants.
    pub fn validate(&self, family: Family) -> Result<(), Error> {
        match family {
            Family::Laguerre => {
                if !(self.alpha > -1.0) {
                    return Err(Error::Domain(format!(
                        "laguerre: alpha must be > -1, got {}",
                        self.alpha
                    )));
                }
            }
            Family::Jacobi => {
                if !(self.alpha > -1.0) {
                    return Err(Error::Domain(format!(
                        "jacobi: alpha must be > -1, got {}",
                        self.alpha
                    )));
                }
                if !(self.beta > -1.0) {
                    return Err(Error::Domain(format!(
                        "jacobi: beta must be > -1, got {}",
                        self.beta
                    )));
                }
            }
            Family::Gegenbauer => {
                if !(self.lambda > -0.5) || self.lambda == 0.0 {
                    return Err(Error::Domain(format!(
                        "gegenbauer: lambda must be > -1/2 and != 0, got {}",
                        self.lambda
                    )));
                }
            }
            Family::GrosjeanFirst => {
                if !(self.alpha > -1.0 && self.alpha < 0.0) {
                    return Err(Error::Domain(format!(
                        "grosjean1: alpha must satisfy -1 < alpha < 0, got {}",
                        self.alpha
                    )));
                }
            }
            Family::GrosjeanSecond => {
                if !(self.alpha > -1.0 && self.alpha < 2.0) {
                    return Err(Error::Domain(format!(
                        "grosjean2: alpha must satisfy -1 < alpha < 2, got {}",
                        self.alpha
                    )));
                }
            }
        }
        Ok(())
    }

    /// Effective Jacobi `(alpha, beta)` pair; Grosjean families imply beta.
    pub fn jacobi_pair(&self, family: Family) -> (f64, f64) {
        match family {
            Family::Jacobi => (self.alpha, self.beta),
            Family::Gegenbauer => (self.lambda - 0.5, self.lambda - 0.5),
            Family::GrosjeanFirst => (self.alpha, -1.0 - self.alpha),
            Family::GrosjeanSecond => (self.alpha, 1.0 - self.alpha),
            Family::Laguerre => (self.alpha, f64::NAN),
        }
    }
}

/// Orthogonality interval, open at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportInterval {
    pub a: f64,
    pub b: f64,
}

/// `(0, inf)` for Laguerre, `(-1, 1)` for everything else.
pub fn support(family: Family) -> SupportInterval {
    match family {
        Family::Laguerre => SupportInterval { a: 0.0, b: f64::INFINITY },
        _ => SupportInterval { a: -1.0, b: 1.0 },
    }
}

fn check_in_support(family: Family, x: f64) -> Result<(), Error> {
    let s = support(family);
    if x > s.a && x < s.b {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{}: x = {x} outside open support ({}, {})",
            family.name(),
            s.a,
            s.b
        )))
    }
}

/// Weight function at a point strictly inside the support.
pub fn weight(family: Family, params: &Params, x: f64) -> Result<f64, Error> {
    params.validate(family)?;
    check_in_support(family, x)?;
    Ok(weight_unchecked(family, params, x))
}

pub(crate) fn weight_unchecked(family: Family, params: &Params, x: f64) -> f64 {
    match family {
        Family::Laguerre => (-x).exp() * x.powf(params.alpha),
        Family::Jacobi => (1.0 - x).powf(params.alpha) * (1.0 + x).powf(params.beta),
        Family::Gegenbauer => (1.0 - x * x).powf(params.lambda - 0.5),
        Family::GrosjeanFirst => {
            ((1.0 - x) / (1.0 + x)).powf(params.alpha) / (1.0 + x)
        }
        Family::GrosjeanSecond => {
            ((1.0 - x) / (1.0 + x)).powf(params.alpha) * (1.0 + x)
        }
    }
}

/// Log-weight from stable endpoint distances, used by the quadrature
/// integrands near the endpoints. `u_a = x - a`, `u_b = b - x` (for
/// Laguerre, `u_a = x` and `u_b` is ignored).
pub(crate) fn ln_weight_from_distances(
    family: Family,
    params: &Params,
    x: f64,
    u_a: f64,
    u_b: f64,
) -> f64 {
    match family {
        Family::Laguerre => -x + params.alpha * u_a.ln(),
        Family::Jacobi => params.alpha * u_b.ln() + params.beta * u_a.ln(),
        Family::Gegenbauer => (params.lambda - 0.5) * (u_a.ln() + u_b.ln()),
        Family::GrosjeanFirst => params.alpha * (u_b.ln() - u_a.ln()) - u_a.ln(),
        Family::GrosjeanSecond => params.alpha * (u_b.ln() - u_a.ln()) + u_a.ln(),
    }
}

/// ln t(x) in the weight factorization `omega = h(x) t(x)^theta`, i.e. the
/// logarithmic derivative of the weight with respect to the parameter.
pub(crate) fn ln_t_from_distances(
    family: Family,
    target: ParamTarget,
    u_a: f64,
    u_b: f64,
) -> f64 {
    match family {
        Family::Laguerre => u_a.ln(),
        Family::Jacobi => {
            if target == ParamTarget::Beta {
                u_a.ln()
            } else {
                u_b.ln()
            }
        }
        Family::Gegenbauer => u_a.ln() + u_b.ln(),
        Family::GrosjeanFirst | Family::GrosjeanSecond => u_b.ln() - u_a.ln(),
    }
}

fn laguerre_eval(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for m in 2..=n {
        let m_f = f64::from(m);
        let next =
            ((2.0 * m_f - 1.0 + alpha - x) * cur - (m_f - 1.0 + alpha) * prev) / m_f;
        prev = cur;
        cur = next;
    }
    cur
}

fn jacobi_eval(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    // the n=0 -> n=1 recurrence step degenerates at a+b in {0, -1};
    // the explicit degree-1 formula avoids the 0/0
    let mut cur = 0.5 * ((a + b + 2.0) * x + a - b);
    for m in 2..=n {
        let m_f = f64::from(m);
        let c = 2.0 * m_f + a + b;
        let c0 = 2.0 * m_f * (m_f + a + b) * (c - 2.0);
        let c1 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (m_f + a - 1.0) * (m_f + b - 1.0) * c;
        let next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    cur
}

fn gegenbauer_eval(n: u32, lambda: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * x;
    for m in 2..=n {
        let m_f = f64::from(m);
        let next = (2.0 * x * (m_f + lambda - 1.0) * cur
            - (m_f + 2.0 * lambda - 2.0) * prev)
            / m_f;
        prev = cur;
        cur = next;
    }
    cur
}

/// Leading coefficient of the standard Jacobi polynomial, as a LogValue.
/// Finite for all `alpha + beta > -2`, including the Grosjean lines.
pub fn monic_leading_coefficient(n: u32, a: f64, b: f64) -> LogValue {
    if n == 0 {
        return LogValue::ONE;
    }
    let n_f = f64::from(n);
    // 2n+a+b+1 > 0 and n+a+b+1 > 0 for n >= 1 when a+b > -2
    let ln = ln_gamma(2.0 * n_f + a + b + 1.0).unwrap()
        - n_f * LN_2
        - ln_gamma(n_f + 1.0).unwrap()
        - ln_gamma(n_f + a + b + 1.0).unwrap();
    LogValue::new(ln, 1)
}

/// Value of the family's standard polynomial at `x` (monic for Grosjean).
pub fn eval_standard(family: Family, n: u32, params: &Params, x: f64) -> Result<f64, Error> {
    params.validate(family)?;
    Ok(eval_standard_unchecked(family, n, params, x))
}

pub(crate) fn eval_standard_unchecked(
    family: Family,
    n: u32,
    params: &Params,
    x: f64,
) -> f64 {
    match family {
        Family::Laguerre => laguerre_eval(n, params.alpha, x),
        Family::Jacobi => jacobi_eval(n, params.alpha, params.beta, x),
        Family::Gegenbauer => gegenbauer_eval(n, params.lambda, x),
        Family::GrosjeanFirst | Family::GrosjeanSecond => {
            let (a, b) = params.jacobi_pair(family);
            let lead = monic_leading_coefficient(n, a, b);
            jacobi_eval(n, a, b, x) / lead.to_f64()
        }
    }
}

/// ln d_n^2, the squared norm of the standard (monic for Grosjean)
/// polynomial, per the family norm formulas.
pub(crate) fn norm_squared_ln(family: Family, n: u32, params: &Params) -> LogValue {
    let n_f = f64::from(n);
    match family {
        Family::Laguerre => LogValue::new(
            ln_gamma(n_f + params.alpha + 1.0).unwrap() - ln_gamma(n_f + 1.0).unwrap(),
            1,
        ),
        Family::Jacobi => {
            let (a, b) = (params.alpha, params.beta);
            jacobi_norm_squared_ln(n, a, b)
        }
        Family::Gegenbauer => {
            let l = params.lambda;
            let g_2l_n = ln_gamma_signed(n_f + 2.0 * l);
            let g_l = ln_gamma_signed(l);
            let base = std::f64::consts::PI.ln() + (1.0 - 2.0 * l) * LN_2
                - ln_gamma(n_f + 1.0).unwrap();
            g_2l_n
                .mul(LogValue::new(base, 1))
                .div(LogValue::from_f64(n_f + l))
                .div(g_l.mul(g_l))
        }
        Family::GrosjeanFirst => {
            if n == 0 {
                // Jacobi n=0 norm with (alpha+beta+1)Gamma(alpha+beta+1)
                // rewritten as Gamma(alpha+beta+2); here alpha+beta = -1
                LogValue::new(
                    ln_gamma(params.alpha + 1.0).unwrap()
                        + ln_gamma(-params.alpha).unwrap(),
                    1,
                )
            } else {
                LogValue::new(
                    (2.0 * n_f - 1.0) * LN_2 + 2.0 * ln_gamma(n_f).unwrap()
                        + ln_gamma(n_f + params.alpha + 1.0).unwrap()
                        + ln_gamma(n_f - params.alpha).unwrap()
                        - 2.0 * ln_gamma(2.0 * n_f).unwrap(),
                    1,
                )
            }
        }
        Family::GrosjeanSecond => {
            if n == 0 {
                // 2^2 Gamma(alpha+1) Gamma(2-alpha) / Gamma(3)
                LogValue::new(
                    LN_2 + ln_gamma(params.alpha + 1.0).unwrap()
                        + ln_gamma(2.0 - params.alpha).unwrap(),
                    1,
                )
            } else {
                // 2^(2n+1) Gamma^2(n+1) Gamma(n+alpha+1) Gamma(n-alpha+2)
                // / Gamma^2(2n+2), from the monic Jacobi norm at
                // alpha+beta = 1
                LogValue::new(
                    (2.0 * n_f + 1.0) * LN_2 + 2.0 * ln_gamma(n_f + 1.0).unwrap()
                        + ln_gamma(n_f + params.alpha + 1.0).unwrap()
                        + ln_gamma(n_f - params.alpha + 2.0).unwrap()
                        - 2.0 * ln_gamma(2.0 * n_f + 2.0).unwrap(),
                    1,
                )
            }
        }
    }
}

pub(crate) fn jacobi_norm_squared_ln(n: u32, a: f64, b: f64) -> LogValue {
    let n_f = f64::from(n);
    // (2n+a+b+1) Gamma(n+a+b+1) = Gamma(a+b+2) at n=0, which stays finite
    // for a+b <= -1
    let tail = if n == 0 {
        -ln_gamma(a + b + 2.0).unwrap()
    } else {
        -(2.0 * n_f + a + b + 1.0).ln() - ln_gamma(n_f + a + b + 1.0).unwrap()
    };
    LogValue::new(
        (a + b + 1.0) * LN_2 + ln_gamma(n_f + a + 1.0).unwrap()
            + ln_gamma(n_f + b + 1.0).unwrap()
            - ln_gamma(n_f + 1.0).unwrap()
            + tail,
        1,
    )
}

/// Squared L2 norm d_n^2 of the standard polynomial (log-space internally).
pub fn norm_squared(family: Family, n: u32, params: &Params) -> Result<f64, Error> {
    params.validate(family)?;
    Ok(norm_squared_ln(family, n, params).to_f64())
}

/// Orthonormal polynomial value: standard value over d_n.
pub fn eval_orthonormal(
    family: Family,
    n: u32,
    params: &Params,
    x: f64,
) -> Result<f64, Error> {
    params.validate(family)?;
    Ok(eval_orthonormal_unchecked(family, n, params, x))
}

pub(crate) fn eval_orthonormal_unchecked(
    family: Family,
    n: u32,
    params: &Params,
    x: f64,
) -> f64 {
    let d = norm_squared_ln(family, n, params);
    eval_standard_unchecked(family, n, params, x) * (-0.5 * d.ln_abs).exp()
}

/// Rakhmanov density: weight times squared orthonormal polynomial.
pub fn rakhmanov_density(
    family: Family,
    n: u32,
    params: &Params,
    x: f64,
) -> Result<f64, Error> {
    let w = weight(family, params, x)?;
    let y = eval_orthonormal_unchecked(family, n, params, x);
    Ok(w * y * y)
}

/// Derivative of ln d_n^2 with respect to the family parameter, used by
/// Lemma-1 cross-checks.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn dln_norm_squared(family: Family, target: ParamTarget, n: u32, params: &Params) -> f64 {
    let n_f = f64::from(n);
    match (family, target) {
        (Family::Laguerre, ParamTarget::Alpha) => digamma_any(n_f + params.alpha + 1.0),
        (Family::Jacobi, ParamTarget::Alpha) | (Family::Jacobi, ParamTarget::Beta) => {
            let (p, s) = match target {
                ParamTarget::Alpha => (params.alpha, params.alpha + params.beta),
                _ => (params.beta, params.alpha + params.beta),
            };
            // d/dp of ln d_n^2; at n=0 the tail uses Gamma(s+2)
            let tail = if n == 0 {
                -digamma_any(s + 2.0)
            } else {
                -1.0 / (2.0 * n_f + s + 1.0) - digamma_any(n_f + s + 1.0)
            };
            LN_2 + digamma_any(n_f + p + 1.0) + tail
        }
        (Family::Gegenbauer, ParamTarget::Lambda) => {
            let l = params.lambda;
            -2.0 * LN_2 + 2.0 * digamma_any(n_f + 2.0 * l) - 1.0 / (n_f + l)
                - 2.0 * digamma_any(l)
        }
        (Family::GrosjeanFirst, ParamTarget::Alpha) => {
            if n == 0 {
                digamma_any(params.alpha + 1.0) - digamma_any(-params.alpha)
            } else {
                digamma_any(n_f + params.alpha + 1.0) - digamma_any(n_f - params.alpha)
            }
        }
        (Family::GrosjeanSecond, ParamTarget::Alpha) => {
            if n == 0 {
                digamma_any(params.alpha + 1.0) - digamma_any(2.0 - params.alpha)
            } else {
                digamma_any(n_f + params.alpha + 1.0)
                    - digamma_any(n_f - params.alpha + 2.0)
            }
        }
        _ => unreachable!("pairing checked by callers"),
    }
}
