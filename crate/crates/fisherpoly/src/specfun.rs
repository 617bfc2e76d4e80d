//! Scalar special functions: log-gamma, digamma, trigamma, Pochhammer
//! symbols and the terminating 4F3 series.
//!
//! Everything here is self-contained double precision. Gamma-ratio and
//! Pochhammer values that can overflow are carried as [`LogValue`]s.

use crate::Error;

/// Sign-and-log representation of a real number: `sign * exp(ln_abs)`.
///
/// `sign == 0` means the value is exactly zero and `ln_abs` is ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    pub ln_abs: f64,
    pub sign: i8,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue { ln_abs: 0.0, sign: 0 };
    pub const ONE: LogValue = LogValue { ln_abs: 0.0, sign: 1 };

    pub fn new(ln_abs: f64, sign: i8) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            LogValue { ln_abs, sign }
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            LogValue { ln_abs: v.abs().ln(), sign: if v > 0.0 { 1 } else { -1 } }
        }
    }

    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.ln_abs.exp(),
        }
    }

    pub fn mul(self, other: LogValue) -> LogValue {
        if self.sign == 0 || other.sign == 0 {
            return Self::ZERO;
        }
        LogValue { ln_abs: self.ln_abs + other.ln_abs, sign: self.sign * other.sign }
    }

    pub fn div(self, other: LogValue) -> LogValue {
        assert!(other.sign != 0, "division by exact zero LogValue");
        if self.sign == 0 {
            return Self::ZERO;
        }
        LogValue { ln_abs: self.ln_abs - other.ln_abs, sign: self.sign * other.sign }
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(self) -> LogValue {
        assert!(self.sign >= 0, "sqrt of negative LogValue");
        if self.sign == 0 {
            return Self::ZERO;
        }
        LogValue { ln_abs: 0.5 * self.ln_abs, sign: 1 }
    }

    pub fn recip(self) -> LogValue {
        assert!(self.sign != 0, "reciprocal of exact zero LogValue");
        LogValue { ln_abs: -self.ln_abs, sign: self.sign }
    }
}

// Lanczos-type coefficients (Numerical Recipes 3rd ed., ~1e-15 relative).
const LANCZOS_COF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];

fn ln_gamma_positive(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let tmp = x + 5.242_187_5;
    let tmp = (x + 0.5) * tmp.ln() - tmp;
    let mut ser = 0.999_999_999_999_997_092;
    let mut y = x;
    for c in LANCZOS_COF {
        y += 1.0;
        ser += c / y;
    }
    tmp + (2.506_628_274_631_000_5 * ser / x).ln()
}

/// Natural log of the Gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64, Error> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_positive(x))
}

/// Gamma function as a LogValue, valid for any non-pole real argument.
///
/// Negative arguments are lifted to the positive axis through
/// `Gamma(x) = Gamma(x+m) / (x (x+1) ... (x+m-1))` with exact sign tracking.
pub fn ln_gamma_signed(x: f64) -> LogValue {
    if x > 0.0 {
        return LogValue::new(ln_gamma_positive(x), 1);
    }
    assert!(
        x != x.floor(),
        "ln_gamma_signed at a non-positive integer pole: {x}"
    );
    let mut shift = LogValue::ONE;
    let mut y = x;
    while y <= 0.0 {
        shift = shift.mul(LogValue::from_f64(y));
        y += 1.0;
    }
    LogValue::new(ln_gamma_positive(y), 1).div(shift)
}

// Asymptotic tail of psi(x): B_{2k}/(2k x^{2k}) coefficients for x^-2 .. x^-14.
const DIGAMMA_TAIL: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

fn digamma_shifted(x: f64) -> f64 {
    // valid for x >= 10
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut sum = 0.0;
    let mut p = inv2;
    for c in DIGAMMA_TAIL {
        sum += c * p;
        p *= inv2;
    }
    x.ln() - 0.5 * inv - sum
}

/// Digamma function psi(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64, Error> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    Ok(digamma_any(x))
}

/// Digamma extended to negative non-integer arguments by upward recurrence.
pub(crate) fn digamma_any(x: f64) -> f64 {
    assert!(
        x > 0.0 || x != x.floor(),
        "digamma at a non-positive integer pole: {x}"
    );
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    digamma_shifted(y) + acc
}

// B_{2k} coefficients of the trigamma asymptotic tail, x^-3 .. x^-15.
const TRIGAMMA_TAIL: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

fn trigamma_shifted(x: f64) -> f64 {
    // valid for x >= 10
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut sum = 0.0;
    let mut p = inv2 * inv;
    for c in TRIGAMMA_TAIL {
        sum += c * p;
        p *= inv2;
    }
    inv + 0.5 * inv2 + sum
}

/// Trigamma function psi'(x) for `x > 0`.
pub fn trigamma(x: f64) -> Result<f64, Error> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("trigamma requires x > 0, got {x}")));
    }
    Ok(trigamma_any(x))
}

pub(crate) fn trigamma_any(x: f64) -> f64 {
    assert!(
        x > 0.0 || x != x.floor(),
        "trigamma at a non-positive integer pole: {x}"
    );
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    trigamma_shifted(y) + acc
}

/// Rising factorial (a)_m = a (a+1) ... (a+m-1) with exact sign tracking.
///
/// Computed as an iterative product in log space; any zero factor yields
/// the exact zero LogValue.
pub fn pochhammer(a: f64, m: u32) -> LogValue {
    let mut out = LogValue::ONE;
    for i in 0..m {
        let factor = a + f64::from(i);
        if factor == 0.0 {
            return LogValue::ZERO;
        }
        out = out.mul(LogValue::from_f64(factor));
    }
    out
}

/// Terminating 4F3(1,1,1,1-n; 2,2,1-alpha-n; 1), summed forward over its
/// n terms. Appears in the Laguerre Fisher information closed form.
pub fn hyp4f3_terminating(n: u32, alpha: f64) -> Result<f64, Error> {
    if n < 1 {
        return Err(Error::Domain("hyp4f3_terminating requires n >= 1".into()));
    }
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!(
            "hyp4f3_terminating requires alpha > -1, got {alpha}"
        )));
    }
    let n_f = f64::from(n);
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for k in 0..(n - 1) {
        let k_f = f64::from(k);
        let lower = 1.0 - alpha - n_f + k_f;
        // cannot vanish for alpha > -1, k <= n-2: lower < k+1-n+... < 0
        assert!(lower != 0.0, "4F3 lower-parameter pole before termination");
        term *= (k_f + 1.0) * (k_f + 1.0) * (1.0 - n_f + k_f)
            / ((k_f + 2.0) * (k_f + 2.0) * lower);
        sum += term;
    }
    Ok(sum)
}
