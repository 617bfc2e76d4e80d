//! Expansion coefficients of the parameter-derivative of the polynomials:
//! the derivative of the degree-n polynomial with respect to its parameter
//! expands over degrees 0..n, with coefficients A_k (orthogonal
//! normalization) and their orthonormal counterparts.
//!
//! All Pochhammer-ratio square roots are evaluated as log-gamma
//! differences, halved before exponentiation, so degrees up to 1e5 stay
//! finite. The Grosjean bracket differences use expm1/ln_1p compensation;
//! the cancellation near the symmetric points (alpha = -1/2 for the first
//! kind, alpha = 1/2 for the second) is intrinsic to the formula.

use crate::orthopoly::{
    check_pairing, norm_squared_ln, Family, ParamTarget, Params, LN_2,
};
use crate::specfun::{digamma_any, ln_gamma, ln_gamma_signed, trigamma_any, LogValue};
use crate::Error;

/// Coefficients of the parameter-derivative expansion for one
/// `(family, target, n, params)` tuple; index k runs 0..=n.
#[derive(Debug, Clone)]
pub struct CoefficientVector {
    pub family: Family,
    pub target: ParamTarget,
    pub n: u32,
    pub params: Params,
    pub coeffs: Vec<f64>,
}

fn lg(x: f64) -> f64 {
    ln_gamma(x).unwrap()
}

/// ln (a)_m as a log-gamma difference; requires a > 0.
fn ln_poch(a: f64, m: f64) -> f64 {
    lg(a + m) - lg(a)
}

fn validate(family: Family, target: ParamTarget, params: &Params) -> Result<(), Error> {
    check_pairing(family, target)?;
    params.validate(family)
}

/// Signed magnitude of the Grosjean bracket
/// `exp(l2) - (-1)^(n-k) exp(l1)` as (ln_abs, sign); returns None for an
/// exact zero (the symmetric point).
fn bracket_ln(l1: f64, l2: f64, nk_odd: bool) -> Option<(f64, i8)> {
    if nk_odd {
        // sum of two positives
        let (hi, lo) = if l2 >= l1 { (l2, l1) } else { (l1, l2) };
        Some((hi + (lo - hi).exp().ln_1p(), 1))
    } else {
        // difference, compensated
        if l1 == l2 {
            return None;
        }
        let (hi, lo, sign) = if l2 > l1 { (l2, l1, 1_i8) } else { (l1, l2, -1_i8) };
        Some((hi + (-(lo - hi).exp_m1()).ln(), sign))
    }
}

fn laguerre_orthonormal(n: u32, alpha: f64) -> Vec<f64> {
    let n_f = f64::from(n);
    let mut out = Vec::with_capacity(n as usize + 1);
    let lg_n1 = lg(n_f + 1.0);
    let lg_na1 = lg(n_f + alpha + 1.0);
    // running ln k! and ln Gamma(k+alpha+1), advanced incrementally so the
    // whole vector is O(n) with one exp per k (matters at n ~ 1e5)
    let mut ln_kfact = 0.0;
    let mut ln_gka = lg(alpha + 1.0);
    for k in 0..n {
        let k_f = f64::from(k);
        if k > 0 {
            ln_kfact += k_f.ln();
            ln_gka += (k_f + alpha).ln();
        }
        let half_ln = 0.5 * (lg_n1 - ln_kfact + ln_gka - lg_na1);
        out.push(half_ln.exp() / (n_f - k_f));
    }
    out.push(-0.5 * digamma_any(n_f + alpha + 1.0));
    out
}

/// Jacobi orthonormal coefficients; `swap = false` for the alpha target,
/// `true` for beta (parameters swapped plus the (-1)^(n-k) sign).
fn jacobi_orthonormal(n: u32, alpha: f64, beta: f64, swap: bool) -> Vec<f64> {
    let (p, q) = if swap { (beta, alpha) } else { (alpha, beta) };
    // p is the differentiated parameter, q the spectator
    let s = p + q + 1.0;
    let n_f = f64::from(n);
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..n {
        let k_f = f64::from(k);
        let nk = n_f - k_f;
        // (2k+s)/(k+s)_{n-k}, with the k=0 removable zero at s=0 rewritten
        // exactly as 1/(s+1)_{n-1}
        let ln_ratio = if k == 0 {
            -ln_poch(s + 1.0, n_f - 1.0)
        } else {
            (2.0 * k_f + s).ln() - ln_poch(k_f + s, nk)
        };
        let ln_q = ln_poch(k_f + q + 1.0, nk) + ln_poch(k_f + 1.0, nk)
            - ln_poch(k_f + p + 1.0, nk)
            + ln_ratio
            + (2.0 * n_f + s).ln();
        let magnitude = (0.5 * ln_q).exp() / (nk * (n_f + k_f + s));
        let sign = if swap && (n - k) % 2 == 1 { -1.0 } else { 1.0 };
        out.push(sign * magnitude);
    }
    let tail = if n == 0 {
        0.5 * (digamma_any(s + 1.0) - digamma_any(p + 1.0) - LN_2)
    } else {
        0.5 * (2.0 * digamma_any(2.0 * n_f + s) - digamma_any(n_f + s)
            - digamma_any(n_f + p + 1.0)
            - LN_2
            + 1.0 / (2.0 * n_f + s))
    };
    out.push(tail);
    out
}

fn gegenbauer_orthonormal(n: u32, lambda: f64) -> Vec<f64> {
    let n_f = f64::from(n);
    let l = lambda;
    let mut out = Vec::with_capacity(n as usize + 1);
    let g_n2l = ln_gamma_signed(n_f + 2.0 * l);
    let lg_n1 = lg(n_f + 1.0);
    for k in 0..n {
        if (n - k) % 2 == 1 {
            out.push(0.0);
            continue;
        }
        let k_f = f64::from(k);
        // Gamma(k+2l) n! (n+l) / (Gamma(n+2l) k! (k+l)); positive even when
        // 2l < 0 at k=0, since Gamma(2l) and l share a sign there
        let inner = ln_gamma_signed(k_f + 2.0 * l)
            .mul(LogValue::new(lg_n1 - lg(k_f + 1.0), 1))
            .mul(LogValue::from_f64(n_f + l))
            .div(g_n2l)
            .div(LogValue::from_f64(k_f + l));
        let root = inner.sqrt().to_f64();
        out.push(root * 4.0 * (k_f + l) / ((k_f + n_f + 2.0 * l) * (n_f - k_f)));
    }
    out.push(
        digamma_any(n_f + l) - digamma_any(n_f + 2.0 * l) + LN_2 + 0.5 / (n_f + l),
    );
    out
}

fn grosjean_orthonormal(kind: Family, n: u32, alpha: f64) -> Vec<f64> {
    let n_f = f64::from(n);
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..n {
        let k_f = f64::from(k);
        let nk = n_f - k_f;
        let (l1, l2, prefactor) = match kind {
            Family::GrosjeanFirst => {
                let l1 = ln_poch(k_f + alpha + 1.0, nk);
                let l2 = ln_poch(k_f - alpha, nk);
                // the k = 0 term needs the limit reading k*Gamma(2k) ->
                // Gamma(2k+1)/2, which halves the generic prefactor and
                // leaves sqrt(2)*n/n^2
                let c = if k == 0 {
                    std::f64::consts::SQRT_2 / n_f
                } else {
                    2.0 * n_f / (n_f * n_f - k_f * k_f)
                };
                (l1, l2, c)
            }
            Family::GrosjeanSecond => {
                let l1 = ln_poch(k_f + alpha + 1.0, nk);
                let l2 = ln_poch(k_f + 2.0 - alpha, nk);
                (l1, l2, 2.0 * (k_f + 1.0) / (nk * (n_f + k_f + 2.0)))
            }
            _ => unreachable!(),
        };
        match bracket_ln(l1, l2, (n - k) % 2 == 1) {
            None => out.push(0.0),
            Some((ln_b, sign)) => {
                out.push(f64::from(sign) * prefactor * (ln_b - 0.5 * (l1 + l2)).exp());
            }
        }
    }
    let tail = match kind {
        Family::GrosjeanFirst => {
            0.5 * (digamma_any(n_f - alpha) - digamma_any(n_f + alpha + 1.0))
        }
        Family::GrosjeanSecond => {
            0.5 * (digamma_any(n_f + 2.0 - alpha) - digamma_any(n_f + alpha + 1.0))
        }
        _ => unreachable!(),
    };
    out.push(tail);
    out
}

/// Orthonormal expansion coefficients of the parameter-derivative of the
/// degree-n orthonormal polynomial.
pub fn coeffs_orthonormal(
    family: Family,
    target: ParamTarget,
    n: u32,
    params: &Params,
) -> Result<CoefficientVector, Error> {
    validate(family, target, params)?;
    let coeffs = match (family, target) {
        (Family::Laguerre, ParamTarget::Alpha) => laguerre_orthonormal(n, params.alpha),
        (Family::Jacobi, ParamTarget::Alpha) => {
            jacobi_orthonormal(n, params.alpha, params.beta, false)
        }
        (Family::Jacobi, ParamTarget::Beta) => {
            jacobi_orthonormal(n, params.alpha, params.beta, true)
        }
        (Family::Gegenbauer, ParamTarget::Lambda) => {
            gegenbauer_orthonormal(n, params.lambda)
        }
        (Family::GrosjeanFirst, ParamTarget::Alpha)
        | (Family::GrosjeanSecond, ParamTarget::Alpha) => {
            grosjean_orthonormal(family, n, params.alpha)
        }
        _ => unreachable!("pairing checked"),
    };
    Ok(CoefficientVector { family, target, n, params: *params, coeffs })
}

/// Expansion coefficients in the orthogonal (standard / monic)
/// normalization. The Grosjean entries are reconstructed from the
/// orthonormal coefficients and the true norms via the Lemma-1 relation,
/// since the printed closed displays carry misprints at k = 0 (first
/// kind) and in the Gamma(n)/Gamma(k) factor (second kind).
pub fn coeffs_orthogonal(
    family: Family,
    target: ParamTarget,
    n: u32,
    params: &Params,
) -> Result<CoefficientVector, Error> {
    validate(family, target, params)?;
    let n_f = f64::from(n);
    let coeffs = match (family, target) {
        (Family::Laguerre, ParamTarget::Alpha) => {
            let mut v: Vec<f64> =
                (0..n).map(|k| 1.0 / (n_f - f64::from(k))).collect();
            v.push(0.0);
            v
        }
        (Family::Jacobi, ParamTarget::Alpha) | (Family::Jacobi, ParamTarget::Beta) => {
            let swap = target == ParamTarget::Beta;
            let (p, q) = if swap {
                (params.beta, params.alpha)
            } else {
                (params.alpha, params.beta)
            };
            let _ = p;
            let s = params.alpha + params.beta + 1.0;
            let mut v = Vec::with_capacity(n as usize + 1);
            for k in 0..n {
                let k_f = f64::from(k);
                let nk = n_f - k_f;
                let ln_ratio = if k == 0 {
                    -ln_poch(s + 1.0, n_f - 1.0)
                } else {
                    (2.0 * k_f + s).ln() - ln_poch(k_f + s, nk)
                };
                let magnitude =
                    (ln_poch(k_f + q + 1.0, nk) + ln_ratio).exp() / (nk * (n_f + k_f + s));
                let sign = if swap && (n - k) % 2 == 1 { -1.0 } else { 1.0 };
                v.push(sign * magnitude);
            }
            v.push(if n == 0 {
                0.0
            } else {
                digamma_any(2.0 * n_f + s) - digamma_any(n_f + s)
            });
            v
        }
        (Family::Gegenbauer, ParamTarget::Lambda) => {
            let l = params.lambda;
            let mut v = Vec::with_capacity(n as usize + 1);
            for k in 0..n {
                if (n - k) % 2 == 1 {
                    v.push(0.0);
                    continue;
                }
                let k_f = f64::from(k);
                v.push(
                    2.0 * 2.0 * (k_f + l) / ((k_f + n_f + 2.0 * l) * (n_f - k_f)),
                );
            }
            v.push(if n == 0 {
                0.0
            } else {
                digamma_any(n_f + l) - digamma_any(l)
            });
            v
        }
        (Family::GrosjeanFirst, ParamTarget::Alpha)
        | (Family::GrosjeanSecond, ParamTarget::Alpha) => {
            let tilde = grosjean_orthonormal(family, n, params.alpha);
            let d_n = norm_squared_ln(family, n, params);
            let mut v = Vec::with_capacity(n as usize + 1);
            for (k, t) in tilde.iter().enumerate().take(n as usize) {
                let d_k = norm_squared_ln(family, k as u32, params);
                // A_k = Atilde_k * d_n / d_k
                v.push(t * (0.5 * (d_n.ln_abs - d_k.ln_abs)).exp());
            }
            v.push(0.0);
            v
        }
        _ => unreachable!("pairing checked"),
    };
    Ok(CoefficientVector { family, target, n, params: *params, coeffs })
}

/// Analytic derivative with respect to the target parameter of the k = n
/// orthonormal coefficient.
pub fn datilde_n(
    family: Family,
    target: ParamTarget,
    n: u32,
    params: &Params,
) -> Result<f64, Error> {
    validate(family, target, params)?;
    let n_f = f64::from(n);
    Ok(match (family, target) {
        (Family::Laguerre, ParamTarget::Alpha) => {
            -0.5 * trigamma_any(n_f + params.alpha + 1.0)
        }
        (Family::Jacobi, ParamTarget::Alpha) | (Family::Jacobi, ParamTarget::Beta) => {
            let p = if target == ParamTarget::Beta { params.beta } else { params.alpha };
            let s = params.alpha + params.beta + 1.0;
            if n == 0 {
                0.5 * (trigamma_any(s + 1.0) - trigamma_any(p + 1.0))
            } else {
                let x = 2.0 * n_f + s;
                0.5 * (2.0 * trigamma_any(x) - trigamma_any(n_f + s)
                    - trigamma_any(n_f + p + 1.0)
                    - 1.0 / (x * x))
            }
        }
        (Family::Gegenbauer, ParamTarget::Lambda) => {
            let l = params.lambda;
            trigamma_any(n_f + l) - 2.0 * trigamma_any(n_f + 2.0 * l)
                - 0.5 / ((n_f + l) * (n_f + l))
        }
        (Family::GrosjeanFirst, ParamTarget::Alpha) => {
            -0.5 * (trigamma_any(n_f - params.alpha)
                + trigamma_any(n_f + params.alpha + 1.0))
        }
        (Family::GrosjeanSecond, ParamTarget::Alpha) => {
            -0.5 * (trigamma_any(n_f + 2.0 - params.alpha)
                + trigamma_any(n_f + params.alpha + 1.0))
        }
        _ => unreachable!("pairing checked"),
    })
}

/// Finite-difference helper shared by the Lemma-1 invariant tests: shifts
/// the target parameter by `h`.
pub(crate) fn shift_target(target: ParamTarget, params: &Params, h: f64) -> Params {
    let mut p = *params;
    match target {
        ParamTarget::Alpha => p.alpha += h,
        ParamTarget::Beta => p.beta += h,
        ParamTarget::Lambda => p.lambda += h,
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{dln_norm_squared, eval_orthonormal};

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn laguerre_orthogonal_example() {
        // n=2: [1/2, 1, 0]
        let cv = coeffs_orthogonal(Family::Laguerre, ParamTarget::Alpha, 2, &Params::with_alpha(0.8)).unwrap();
        assert_eq!(cv.coeffs, vec![0.5, 1.0, 0.0]);
    }

    #[test]
    fn laguerre_orthonormal_example() {
        // n=1, alpha=0: [1, -(1-gamma)/2]
        let cv = coeffs_orthonormal(Family::Laguerre, ParamTarget::Alpha, 1, &Params::with_alpha(0.0)).unwrap();
        assert!(rel(cv.coeffs[0], 1.0) < 1e-14);
        assert!((cv.coeffs[1] + 0.5 * (1.0 - EULER_GAMMA)).abs() < 1e-13);
    }

    #[test]
    fn jacobi_orthogonal_n1() {
        // n=1, alpha=beta=0: A_0 = 1/2, A_1 = psi(3) - psi(2) = 1/2
        let cv = coeffs_orthogonal(Family::Jacobi, ParamTarget::Alpha, 1, &Params::with_alpha_beta(0.0, 0.0)).unwrap();
        assert!(rel(cv.coeffs[0], 0.5) < 1e-13);
        assert!(rel(cv.coeffs[1], 0.5) < 1e-13);
    }

    #[test]
    fn gegenbauer_parity_zeros() {
        let cv = coeffs_orthonormal(Family::Gegenbauer, ParamTarget::Lambda, 3, &Params::with_lambda(1.0)).unwrap();
        assert_eq!(cv.coeffs[0], 0.0);
        assert_ne!(cv.coeffs[1], 0.0);
        assert_eq!(cv.coeffs[2], 0.0);
        let cv = coeffs_orthogonal(Family::Gegenbauer, ParamTarget::Lambda, 2, &Params::with_lambda(1.0)).unwrap();
        assert_eq!(cv.coeffs[1], 0.0);
    }

    #[test]
    fn grosjean_symmetric_point_zeros() {
        for n in [1_u32, 2, 4, 7] {
            let cv = coeffs_orthonormal(Family::GrosjeanFirst, ParamTarget::Alpha, n, &Params::with_alpha(-0.5)).unwrap();
            assert_eq!(cv.coeffs[n as usize], 0.0, "Atilde_n at alpha=-1/2");
            // even n-k brackets vanish identically at the symmetric point
            for k in (0..n).filter(|k| (n - k) % 2 == 0) {
                assert_eq!(cv.coeffs[k as usize], 0.0, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn grosjean_first_corrected_k0() {
        // true Atilde_0 at n=1, alpha=-1/2 is 2*sqrt(2) (oracle-verified),
        // not the printed 4
        let cv = coeffs_orthonormal(Family::GrosjeanFirst, ParamTarget::Alpha, 1, &Params::with_alpha(-0.5)).unwrap();
        assert!(rel(cv.coeffs[0], 2.0 * std::f64::consts::SQRT_2) < 1e-13);
    }

    #[test]
    fn jacobi_mirror_symmetry() {
        let (a, b) = (0.7, 1.9);
        for n in [1_u32, 3, 6] {
            let beta_cv = coeffs_orthonormal(Family::Jacobi, ParamTarget::Beta, n, &Params::with_alpha_beta(a, b)).unwrap();
            let alpha_cv = coeffs_orthonormal(Family::Jacobi, ParamTarget::Alpha, n, &Params::with_alpha_beta(b, a)).unwrap();
            for k in 0..n {
                let sign = if (n - k) % 2 == 1 { -1.0 } else { 1.0 };
                assert_eq!(
                    beta_cv.coeffs[k as usize],
                    sign * alpha_cv.coeffs[k as usize],
                    "same code path should be bit-identical, n={n}, k={k}"
                );
            }
            assert_eq!(beta_cv.coeffs[n as usize], alpha_cv.coeffs[n as usize]);
        }
    }

    #[test]
    fn datilde_examples() {
        let d = datilde_n(Family::Laguerre, ParamTarget::Alpha, 0, &Params::with_alpha(0.0)).unwrap();
        let pi = std::f64::consts::PI;
        assert!(rel(d, -pi * pi / 12.0) < 1e-13);
        // Grosjean-I symmetric point: -psi'(n+1/2)
        for n in [1_u32, 3] {
            let d = datilde_n(Family::GrosjeanFirst, ParamTarget::Alpha, n, &Params::with_alpha(-0.5)).unwrap();
            let expect = -crate::specfun::trigamma(f64::from(n) + 0.5).unwrap();
            assert!(rel(d, expect) < 1e-13);
        }
    }

    // Lemma-1 relation: Atilde_k = (d_k/d_n) A_k for k < n, and
    // Atilde_n = A_n - (d ln d_n)/dtheta.
    #[test]
    fn lemma1_relation_between_a_and_atilde() {
        let cases: Vec<(Family, ParamTarget, Params)> = vec![
            (Family::Laguerre, ParamTarget::Alpha, Params::with_alpha(0.6)),
            (Family::Jacobi, ParamTarget::Alpha, Params::with_alpha_beta(0.4, -0.2)),
            (Family::Jacobi, ParamTarget::Beta, Params::with_alpha_beta(-0.5, 1.3)),
            (Family::Gegenbauer, ParamTarget::Lambda, Params::with_lambda(0.8)),
            (Family::GrosjeanFirst, ParamTarget::Alpha, Params::with_alpha(-0.35)),
            (Family::GrosjeanSecond, ParamTarget::Alpha, Params::with_alpha(0.9)),
        ];
        for (family, target, params) in cases {
            for n in 1..=6_u32 {
                let a = coeffs_orthogonal(family, target, n, &params).unwrap();
                let t = coeffs_orthonormal(family, target, n, &params).unwrap();
                let d_n = norm_squared_ln(family, n, &params).ln_abs;
                for k in 0..n {
                    let d_k = norm_squared_ln(family, k, &params).ln_abs;
                    let expect = a.coeffs[k as usize] * (0.5 * (d_k - d_n)).exp();
                    let got = t.coeffs[k as usize];
                    assert!(
                        (got - expect).abs() <= 1e-7 * expect.abs().max(1e-3),
                        "{:?}/{:?} n={n} k={k}: {got} vs {expect}",
                        family,
                        target
                    );
                }
                // Atilde_n = A_n - (1/2) d(ln d_n^2)/dtheta, analytic route
                let expect_n =
                    a.coeffs[n as usize] - 0.5 * dln_norm_squared(family, target, n, &params);
                assert!(
                    (t.coeffs[n as usize] - expect_n).abs() < 1e-10,
                    "{:?}/{:?} n={n} tail",
                    family,
                    target
                );
                // and the same via a finite difference of the norm itself
                let h = 1e-6;
                let pp = shift_target(target, &params, h);
                let pm = shift_target(target, &params, -h);
                let fd = (norm_squared_ln(family, n, &pp).ln_abs
                    - norm_squared_ln(family, n, &pm).ln_abs)
                    / (2.0 * h);
                let expect_fd = a.coeffs[n as usize] - 0.5 * fd;
                assert!(
                    (t.coeffs[n as usize] - expect_fd).abs() < 1e-4,
                    "{:?}/{:?} n={n} fd tail",
                    family,
                    target
                );
            }
        }
    }

    // The k=n orthonormal coefficient differentiated numerically should
    // match datilde_n.
    #[test]
    fn datilde_matches_finite_difference() {
        let cases: Vec<(Family, ParamTarget, Params)> = vec![
            (Family::Laguerre, ParamTarget::Alpha, Params::with_alpha(0.3)),
            (Family::Jacobi, ParamTarget::Alpha, Params::with_alpha_beta(0.5, 0.5)),
            (Family::Jacobi, ParamTarget::Beta, Params::with_alpha_beta(1.5, 0.5)),
            (Family::Gegenbauer, ParamTarget::Lambda, Params::with_lambda(2.0)),
            (Family::GrosjeanFirst, ParamTarget::Alpha, Params::with_alpha(-0.6)),
            (Family::GrosjeanSecond, ParamTarget::Alpha, Params::with_alpha(0.4)),
        ];
        let h = 1e-4;
        for (family, target, params) in cases {
            for n in [0_u32, 1, 2, 5] {
                let pp = shift_target(target, &params, h);
                let pm = shift_target(target, &params, -h);
                let up = coeffs_orthonormal(family, target, n, &pp).unwrap().coeffs[n as usize];
                let dn = coeffs_orthonormal(family, target, n, &pm).unwrap().coeffs[n as usize];
                let fd = (up - dn) / (2.0 * h);
                let analytic = datilde_n(family, target, n, &params).unwrap();
                assert!(
                    (fd - analytic).abs() < 1e-6,
                    "{:?}/{:?} n={n}: fd {fd} vs analytic {analytic}",
                    family,
                    target
                );
            }
        }
    }

    // Lemma 1 pointwise: finite difference of the orthonormal polynomial in
    // the parameter equals the coefficient expansion.
    #[test]
    fn lemma1_pointwise_expansion() {
        let cases: Vec<(Family, ParamTarget, Params, [f64; 3])> = vec![
            (Family::Laguerre, ParamTarget::Alpha, Params::with_alpha(0.5), [0.4, 2.0, 6.0]),
            (Family::Jacobi, ParamTarget::Alpha, Params::with_alpha_beta(-0.5, -0.5), [-0.6, 0.1, 0.7]),
            (Family::Gegenbauer, ParamTarget::Lambda, Params::with_lambda(1.5), [-0.4, 0.2, 0.8]),
            (Family::GrosjeanFirst, ParamTarget::Alpha, Params::with_alpha(-0.4), [-0.5, 0.0, 0.6]),
            (Family::GrosjeanSecond, ParamTarget::Alpha, Params::with_alpha(1.2), [-0.3, 0.25, 0.75]),
        ];
        let h = 1e-4;
        for (family, target, params, xs) in cases {
            for n in [1_u32, 3, 5] {
                let cv = coeffs_orthonormal(family, target, n, &params).unwrap();
                for x in xs {
                    // Richardson-extrapolated central difference
                    let f = |hh: f64| {
                        let up = eval_orthonormal(family, n, &shift_target(target, &params, hh), x).unwrap();
                        let dn = eval_orthonormal(family, n, &shift_target(target, &params, -hh), x).unwrap();
                        (up - dn) / (2.0 * hh)
                    };
                    let fd = (4.0 * f(h / 2.0) - f(h)) / 3.0;
                    let mut expansion = 0.0;
                    for k in 0..=n {
                        expansion += cv.coeffs[k as usize]
                            * eval_orthonormal(family, k, &params, x).unwrap();
                    }
                    assert!(
                        (fd - expansion).abs() < 1e-5,
                        "{:?} n={n} x={x}: fd {fd} vs expansion {expansion}",
                        family
                    );
                }
            }
        }
    }
}
