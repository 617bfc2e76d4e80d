//! Parameter-based Fisher information of the Rakhmanov densities: the
//! generic sum over orthonormal derivative coefficients (the reference
//! path) and the family-specific closed forms, implemented independently
//! of the coefficient machinery so they act as cross-checks.

use crate::orthopoly::{check_pairing, Family, ParamTarget, Params};
use crate::param_derivative::{coeffs_orthonormal, datilde_n};
use crate::specfun::{
    hyp4f3_terminating, ln_gamma, ln_gamma_signed, trigamma_any, LogValue,
};
use crate::Error;

/// How a Fisher-information value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    SumForm,
    ClosedForm,
    Hypergeometric,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::SumForm => "sum",
            Method::ClosedForm => "closed",
            Method::Hypergeometric => "hypergeometric",
            Method::Oracle => "oracle",
        }
    }
}

/// A computed Fisher-information value, with optional companion values
/// from other methods and the largest relative discrepancy among them.
#[derive(Debug, Clone)]
pub struct FisherResult {
    pub family: Family,
    pub target: ParamTarget,
    pub n: u32,
    pub params: Params,
    pub value: f64,
    pub method: Method,
    pub companion_values: Vec<(Method, f64)>,
    pub max_rel_discrepancy: Option<f64>,
}

impl FisherResult {
    fn new(
        family: Family,
        target: ParamTarget,
        n: u32,
        params: Params,
        value: f64,
        method: Method,
    ) -> Self {
        FisherResult {
            family,
            target,
            n,
            params,
            value,
            method,
            companion_values: Vec::new(),
            max_rel_discrepancy: None,
        }
    }

    /// Records a value obtained by another method and refreshes the
    /// maximum pairwise relative discrepancy.
    pub fn add_companion(&mut self, method: Method, value: f64) {
        self.companion_values.push((method, value));
        let mut all: Vec<f64> = vec![self.value];
        all.extend(self.companion_values.iter().map(|&(_, v)| v));
        let mut worst = 0.0_f64;
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                let scale = all[i].abs().max(all[j].abs()).max(f64::MIN_POSITIVE);
                worst = worst.max((all[i] - all[j]).abs() / scale);
            }
        }
        self.max_rel_discrepancy = Some(worst);
    }
}

fn lg(x: f64) -> f64 {
    ln_gamma(x).unwrap()
}

fn ln_poch(a: f64, m: f64) -> f64 {
    lg(a + m) - lg(a)
}

/// Generic Theorem-1 sum: I_n = 2 sum_{k<n} Atilde_k^2 - 2 dAtilde_n.
pub fn fisher_sum_form(
    family: Family,
    target: ParamTarget,
    n: u32,
    params: &Params,
) -> Result<FisherResult, Error> {
    let cv = coeffs_orthonormal(family, target, n, params)?;
    let d = datilde_n(family, target, n, params)?;
    let mut acc = 0.0;
    for &c in &cv.coeffs[..n as usize] {
        acc += c * c;
    }
    let value = 2.0 * acc - 2.0 * d;
    Ok(FisherResult::new(family, target, n, *params, value, Method::SumForm))
}

/// Corollary-1 hypergeometric form for Laguerre:
/// psi'(n+alpha+1) + (2n/(n+alpha)) * 4F3(...; 1).
pub fn fisher_laguerre_hypergeom(n: u32, alpha: f64) -> Result<f64, Error> {
    Params::with_alpha(alpha).validate(Family::Laguerre)?;
    let n_f = f64::from(n);
    let tail = trigamma_any(n_f + alpha + 1.0);
    if n == 0 {
        return Ok(tail);
    }
    Ok(tail + (2.0 * n_f / (n_f + alpha)) * hyp4f3_terminating(n, alpha)?)
}

fn jacobi_closed(n: u32, alpha: f64, beta: f64, swap: bool) -> f64 {
    let (p, q) = if swap { (beta, alpha) } else { (alpha, beta) };
    let s = p + q + 1.0;
    let n_f = f64::from(n);
    let mut acc = 0.0;
    for k in 0..n {
        let k_f = f64::from(k);
        let nk = n_f - k_f;
        let ln_ratio = if k == 0 {
            -ln_poch(s + 1.0, n_f - 1.0)
        } else {
            (2.0 * k_f + s).ln() - ln_poch(k_f + s, nk)
        };
        let ln_q = ln_poch(k_f + q + 1.0, nk) + ln_poch(k_f + 1.0, nk)
            - ln_poch(k_f + p + 1.0, nk)
            + ln_ratio
            + (2.0 * n_f + s).ln();
        acc += 2.0 * ln_q.exp() / ((nk * (n_f + k_f + s)).powi(2));
    }
    let tail = if n == 0 {
        trigamma_any(p + 1.0) - trigamma_any(s + 1.0)
    } else {
        let x = 2.0 * n_f + s;
        -2.0 * trigamma_any(x) + trigamma_any(n_f + s) + trigamma_any(n_f + p + 1.0)
            + 1.0 / (x * x)
    };
    acc + tail
}

fn gegenbauer_closed(n: u32, l: f64) -> f64 {
    let n_f = f64::from(n);
    let mut acc = 0.0;
    let g_n2l = ln_gamma_signed(n_f + 2.0 * l);
    let lg_n1 = lg(n_f + 1.0);
    for k in (0..n).filter(|k| (n - k) % 2 == 0) {
        let k_f = f64::from(k);
        // 32 n! (n+l) Gamma(k+2l) (k+l) / (Gamma(n+2l) k! (k+n+2l)^2 (n-k)^2)
        let inner = ln_gamma_signed(k_f + 2.0 * l)
            .mul(LogValue::new(lg_n1 - lg(k_f + 1.0), 1))
            .mul(LogValue::from_f64(n_f + l))
            .mul(LogValue::from_f64(k_f + l))
            .div(g_n2l);
        acc += 32.0 * inner.to_f64() / ((k_f + n_f + 2.0 * l) * (n_f - k_f)).powi(2);
    }
    acc - 2.0 * trigamma_any(n_f + l) + 4.0 * trigamma_any(n_f + 2.0 * l)
        + 1.0 / ((n_f + l) * (n_f + l))
}

/// Squared Grosjean bracket divided by the product of the two Pochhammer
/// factors, written in terms of half the log-difference: 4 sinh^2 for the
/// cancelling (even n-k) parity, 4 cosh^2 for the reinforcing one.
fn grosjean_bracket_sq_ratio(l1: f64, l2: f64, nk_odd: bool) -> f64 {
    let delta = 0.5 * (l2 - l1);
    let b = if nk_odd { 2.0 * delta.cosh() } else { 2.0 * delta.sinh() };
    b * b
}

fn grosjean_first_closed(n: u32, alpha: f64) -> f64 {
    let n_f = f64::from(n);
    let mut acc = 0.0;
    for k in 0..n {
        let k_f = f64::from(k);
        let nk = n_f - k_f;
        let l1 = ln_poch(k_f + alpha + 1.0, nk);
        let l2 = ln_poch(k_f - alpha, nk);
        let ratio = grosjean_bracket_sq_ratio(l1, l2, (n - k) % 2 == 1);
        // the k = 0 summand carries half the printed weight
        let weight = if k == 0 {
            4.0 / (n_f * n_f)
        } else {
            8.0 * n_f * n_f / (n_f * n_f - k_f * k_f).powi(2)
        };
        acc += weight * ratio;
    }
    acc + trigamma_any(n_f - alpha) + trigamma_any(n_f + alpha + 1.0)
}

fn grosjean_second_closed(n: u32, alpha: f64) -> f64 {
    let n_f = f64::from(n);
    let mut acc = 0.0;
    for k in 0..n {
        let k_f = f64::from(k);
        let nk = n_f - k_f;
        let l1 = ln_poch(k_f + alpha + 1.0, nk);
        let l2 = ln_poch(k_f + 2.0 - alpha, nk);
        let ratio = grosjean_bracket_sq_ratio(l1, l2, (n - k) % 2 == 1);
        acc += 8.0 * (k_f + 1.0).powi(2) / (nk * (n_f + k_f + 2.0)).powi(2) * ratio;
    }
    acc + trigamma_any(n_f + 2.0 - alpha) + trigamma_any(n_f + alpha + 1.0)
}

/// Family-specific closed forms (Laguerre delegates to the
/// hypergeometric representation).
pub fn fisher_closed_form(
    family: Family,
    target: ParamTarget,
    n: u32,
    params: &Params,
) -> Result<FisherResult, Error> {
    check_pairing(family, target)?;
    params.validate(family)?;
    let (value, method) = match (family, target) {
        (Family::Laguerre, ParamTarget::Alpha) => (
            fisher_laguerre_hypergeom(n, params.alpha)?,
            Method::Hypergeometric,
        ),
        (Family::Jacobi, ParamTarget::Alpha) => {
            (jacobi_closed(n, params.alpha, params.beta, false), Method::ClosedForm)
        }
        (Family::Jacobi, ParamTarget::Beta) => {
            (jacobi_closed(n, params.alpha, params.beta, true), Method::ClosedForm)
        }
        (Family::Gegenbauer, ParamTarget::Lambda) => {
            (gegenbauer_closed(n, params.lambda), Method::ClosedForm)
        }
        (Family::GrosjeanFirst, ParamTarget::Alpha) => {
            (grosjean_first_closed(n, params.alpha), Method::ClosedForm)
        }
        (Family::GrosjeanSecond, ParamTarget::Alpha) => {
            (grosjean_second_closed(n, params.alpha), Method::ClosedForm)
        }
        _ => unreachable!("pairing checked"),
    };
    Ok(FisherResult::new(family, target, n, *params, value, method))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn laguerre_spot_values() {
        let p = Params::with_alpha(0.0);
        let i0 = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 0, &p).unwrap();
        assert!(rel(i0.value, PI * PI / 6.0) < 1e-13);
        let i1 = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 1, &p).unwrap();
        // 2 + psi'(2) = 2 + pi^2/6 - 1
        assert!(rel(i1.value, 1.0 + PI * PI / 6.0) < 1e-13);
        let h1 = fisher_laguerre_hypergeom(1, 0.0).unwrap();
        assert!(rel(h1, 1.0 + PI * PI / 6.0) < 1e-13);
        // n=2, alpha=0: psi'(3) + 2*1.25
        let h2 = fisher_laguerre_hypergeom(2, 0.0).unwrap();
        assert!(rel(h2, PI * PI / 6.0 - 1.25 + 2.5) < 1e-13);
    }

    #[test]
    fn jacobi_spot_values() {
        let p = Params::with_alpha_beta(0.0, 0.0);
        let i0 = fisher_sum_form(Family::Jacobi, ParamTarget::Alpha, 0, &p).unwrap();
        assert!(rel(i0.value, 1.0) < 1e-13);
        let c0 = fisher_closed_form(Family::Jacobi, ParamTarget::Alpha, 0, &p).unwrap();
        assert!(rel(c0.value, 1.0) < 1e-13);
    }

    #[test]
    fn gegenbauer_spot_value() {
        let p = Params::with_lambda(0.5);
        let c = fisher_closed_form(Family::Gegenbauer, ParamTarget::Lambda, 0, &p).unwrap();
        assert!(rel(c.value, 4.0 - PI * PI / 3.0) < 1e-12);
    }

    #[test]
    fn grosjean_first_symmetric_spot_value() {
        // I_1 at alpha = -1/2: 16 + 2 psi'(3/2) = 16 + pi^2 - 8
        let p = Params::with_alpha(-0.5);
        let s = fisher_sum_form(Family::GrosjeanFirst, ParamTarget::Alpha, 1, &p).unwrap();
        let expect = 8.0 + PI * PI;
        assert!(rel(s.value, expect) < 1e-13, "sum {}", s.value);
        let c = fisher_closed_form(Family::GrosjeanFirst, ParamTarget::Alpha, 1, &p).unwrap();
        assert!(rel(c.value, expect) < 1e-13, "closed {}", c.value);
    }

    #[test]
    fn sum_equals_closed_across_families() {
        let cases: Vec<(Family, ParamTarget, Params)> = vec![
            (Family::Laguerre, ParamTarget::Alpha, Params::with_alpha(-0.9)),
            (Family::Laguerre, ParamTarget::Alpha, Params::with_alpha(10.0)),
            (Family::Jacobi, ParamTarget::Alpha, Params::with_alpha_beta(-0.5, -0.5)),
            (Family::Jacobi, ParamTarget::Beta, Params::with_alpha_beta(2.5, -0.9)),
            (Family::Gegenbauer, ParamTarget::Lambda, Params::with_lambda(0.1)),
            (Family::Gegenbauer, ParamTarget::Lambda, Params::with_lambda(7.5)),
            (Family::GrosjeanFirst, ParamTarget::Alpha, Params::with_alpha(-0.9)),
            (Family::GrosjeanFirst, ParamTarget::Alpha, Params::with_alpha(-0.4)),
            (Family::GrosjeanSecond, ParamTarget::Alpha, Params::with_alpha(1.9)),
            (Family::GrosjeanSecond, ParamTarget::Alpha, Params::with_alpha(0.5)),
        ];
        for (family, target, params) in cases {
            for n in 0..=12_u32 {
                let s = fisher_sum_form(family, target, n, &params).unwrap().value;
                let c = fisher_closed_form(family, target, n, &params).unwrap().value;
                assert!(s > 0.0 && c > 0.0, "{:?} n={n}: {s}, {c}", family);
                assert!(rel(s, c) < 1e-10, "{:?}/{:?} n={n}: sum {s} closed {c}", family, target);
            }
        }
    }

    #[test]
    fn jacobi_swap_symmetry() {
        for n in [0_u32, 1, 4, 9] {
            let b = fisher_closed_form(
                Family::Jacobi,
                ParamTarget::Beta,
                n,
                &Params::with_alpha_beta(1.5, 0.5),
            )
            .unwrap()
            .value;
            let a = fisher_closed_form(
                Family::Jacobi,
                ParamTarget::Alpha,
                n,
                &Params::with_alpha_beta(0.5, 1.5),
            )
            .unwrap()
            .value;
            assert!(rel(a, b) < 1e-12);
        }
    }

    #[test]
    fn grosjean_reflection_symmetry() {
        for n in [0_u32, 2, 5] {
            for a in [-0.9, -0.7, -0.55] {
                let lhs = fisher_sum_form(Family::GrosjeanFirst, ParamTarget::Alpha, n, &Params::with_alpha(a)).unwrap().value;
                let rhs = fisher_sum_form(Family::GrosjeanFirst, ParamTarget::Alpha, n, &Params::with_alpha(-1.0 - a)).unwrap().value;
                assert!(rel(lhs, rhs) < 1e-9, "GI n={n} a={a}");
            }
            for a in [-0.9, 0.0, 0.4] {
                let lhs = fisher_sum_form(Family::GrosjeanSecond, ParamTarget::Alpha, n, &Params::with_alpha(a)).unwrap().value;
                let rhs = fisher_sum_form(Family::GrosjeanSecond, ParamTarget::Alpha, n, &Params::with_alpha(1.0 - a)).unwrap().value;
                assert!(rel(lhs, rhs) < 1e-9, "GII n={n} a={a}");
            }
        }
    }

    #[test]
    fn large_n_laguerre_is_fast_and_finite() {
        let p = Params::with_alpha(0.5);
        let start = std::time::Instant::now();
        let r = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 100_000, &p).unwrap();
        let elapsed = start.elapsed();
        assert!(r.value.is_finite() && r.value > 0.0);
        assert!(elapsed.as_millis() < 50, "took {elapsed:?}");
    }

    #[test]
    fn companion_discrepancy_tracking() {
        let p = Params::with_alpha(1.0);
        let mut r = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, 3, &p).unwrap();
        let c = fisher_closed_form(Family::Laguerre, ParamTarget::Alpha, 3, &p).unwrap();
        r.add_companion(c.method, c.value);
        assert!(r.max_rel_discrepancy.unwrap() < 1e-10);
    }
}
