//! Shared validation-grid runner behind both the `acceptance` integration
//! test and the CLI `selftest`/`verify` subcommands: enumerates the
//! parameter grids, runs the nine acceptance checks, and produces
//! per-criterion summaries.

use std::time::Instant;

use rayon::prelude::*;

use crate::fisher::{fisher_closed_form, fisher_laguerre_hypergeom, fisher_sum_form};
use crate::oracle::{
    fisher_by_definition, verify_lemma2, verify_norm, verify_orthonormality,
    Lemma2Part, QuadratureConfig, VerificationReport,
};
use crate::orthopoly::{eval_orthonormal, support, Family, ParamTarget, Params};
use crate::param_derivative::{coeffs_orthonormal, shift_target};

/// Environment variable overriding every relative tolerance in the suite.
pub const TOL_OVERRIDE_ENV: &str = "FISHERPOLY_TOL_OVERRIDE";

/// Reads the tolerance override from the environment, if set and parseable.
pub fn tol_override_from_env() -> Option<f64> {
    std::env::var(TOL_OVERRIDE_ENV).ok()?.parse().ok()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Restrict every criterion to n <= 4 for a fast smoke run.
    pub quick: bool,
    /// Replaces the per-criterion relative tolerances when set.
    pub tol_override: Option<f64>,
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub index: usize,
    pub label: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed_secs: f64,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One-line pass/fail summary.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!(
                "criterion {}: PASS — {} ({} checks, {:.2}s)",
                self.index, self.label, self.checks, self.elapsed_secs
            )
        } else {
            format!(
                "criterion {}: FAIL — {} ({} of {} checks failed, {:.2}s; first: {})",
                self.index,
                self.label,
                self.failures.len(),
                self.checks,
                self.elapsed_secs,
                self.failures[0]
            )
        }
    }
}

/// Parameter grid used by the validation suite for one family.
pub fn param_grid(family: Family) -> Vec<Params> {
    const LJ: [f64; 7] = [-0.9, -0.5, 0.0, 0.5, 1.0, 2.5, 10.0];
    match family {
        Family::Laguerre => LJ.iter().map(|&a| Params::with_alpha(a)).collect(),
        Family::Jacobi => LJ
            .iter()
            .flat_map(|&a| LJ.iter().map(move |&b| Params::with_alpha_beta(a, b)))
            .collect(),
        Family::Gegenbauer => [0.1, 0.5, 1.0, 3.0, 7.5]
            .iter()
            .map(|&l| Params::with_lambda(l))
            .collect(),
        Family::GrosjeanFirst => [-0.9, -0.6, -0.5, -0.4, -0.1]
            .iter()
            .map(|&a| Params::with_alpha(a))
            .collect(),
        Family::GrosjeanSecond => [-0.9, 0.0, 0.5, 1.0, 1.9]
            .iter()
            .map(|&a| Params::with_alpha(a))
            .collect(),
    }
}

/// Every valid (family, target) pairing.
pub fn family_target_cases() -> Vec<(Family, ParamTarget)> {
    vec![
        (Family::Laguerre, ParamTarget::Alpha),
        (Family::Jacobi, ParamTarget::Alpha),
        (Family::Jacobi, ParamTarget::Beta),
        (Family::Gegenbauer, ParamTarget::Lambda),
        (Family::GrosjeanFirst, ParamTarget::Alpha),
        (Family::GrosjeanSecond, ParamTarget::Alpha),
    ]
}

fn grid_cases() -> Vec<(Family, ParamTarget, Params)> {
    family_target_cases()
        .into_iter()
        .flat_map(|(f, t)| param_grid(f).into_iter().map(move |p| (f, t, p)))
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn case_label(family: Family, target: ParamTarget, n: u32, params: &Params) -> String {
    format!(
        "{} {} n={} alpha={} beta={} lambda={}",
        family.name(),
        target.name(),
        n,
        params.alpha,
        params.beta,
        params.lambda
    )
}

fn finish(
    index: usize,
    label: &'static str,
    checks: usize,
    failures: Vec<String>,
    start: Instant,
) -> CriterionOutcome {
    CriterionOutcome {
        index,
        label,
        checks,
        failures,
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

/// Criterion 1: sum form equals the family closed form.
pub fn criterion_sum_vs_closed(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let tol = opts.tol_override.unwrap_or(1e-10);
    let n_max = if opts.quick { 4 } else { 12 };
    let mut checks = 0;
    let mut failures = Vec::new();
    for (family, target, params) in grid_cases() {
        for n in 0..=n_max {
            checks += 1;
            let s = fisher_sum_form(family, target, n, &params).map(|r| r.value);
            let c = fisher_closed_form(family, target, n, &params).map(|r| r.value);
            match (s, c) {
                (Ok(s), Ok(c)) if s > 0.0 && c > 0.0 && rel(s, c) <= tol => {}
                (Ok(s), Ok(c)) => failures.push(format!(
                    "{}: sum {s:.17e} vs closed {c:.17e} (rel {:.3e})",
                    case_label(family, target, n, &params),
                    rel(s, c)
                )),
                (s, c) => failures.push(format!(
                    "{}: error {:?} / {:?}",
                    case_label(family, target, n, &params),
                    s.err(),
                    c.err()
                )),
            }
        }
    }
    finish(1, "Theorem-1 identity (sum == closed form)", checks, failures, start)
}

/// Criterion 2: quadrature oracle agreement with the sum form.
pub fn criterion_oracle_agreement(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let base_tol = opts.tol_override.unwrap_or(1e-6);
    let loose_tol = opts.tol_override.unwrap_or(1e-5);
    let ns: &[u32] = if opts.quick { &[0, 1, 2, 3] } else { &[0, 1, 2, 3, 5, 8] };
    let cfg = QuadratureConfig::default();
    let work: Vec<(Family, ParamTarget, Params, u32)> = grid_cases()
        .into_iter()
        .flat_map(|(f, t, p)| ns.iter().map(move |&n| (f, t, p, n)))
        .collect();
    let results: Vec<Option<String>> = work
        .par_iter()
        .map(|&(family, target, params, n)| {
            let near_symmetric = match family {
                Family::GrosjeanFirst => (params.alpha + 0.5).abs() <= 1e-3,
                Family::GrosjeanSecond => (params.alpha - 0.5).abs() <= 1e-3,
                _ => false,
            };
            let tol = if near_symmetric { loose_tol } else { base_tol };
            let sum = match fisher_sum_form(family, target, n, &params) {
                Ok(r) => r.value,
                Err(e) => {
                    return Some(format!(
                        "{}: sum form failed: {e}",
                        case_label(family, target, n, &params)
                    ))
                }
            };
            match fisher_by_definition(family, target, n, &params, &cfg) {
                Ok(oracle) if (oracle - sum).abs() / sum.abs() <= tol => None,
                Ok(oracle) => Some(format!(
                    "{}: oracle {oracle:.12e} vs sum {sum:.12e} (rel {:.3e})",
                    case_label(family, target, n, &params),
                    (oracle - sum).abs() / sum.abs()
                )),
                Err(e) => Some(format!(
                    "{}: oracle failed: {e}",
                    case_label(family, target, n, &params)
                )),
            }
        })
        .collect();
    let checks = results.len();
    let failures = results.into_iter().flatten().collect();
    finish(2, "oracle agreement (definition integral)", checks, failures, start)
}

/// Criterion 3: Laguerre hypergeometric form equals the sum form.
pub fn criterion_hypergeometric(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let tol = opts.tol_override.unwrap_or(1e-10);
    let n_max = if opts.quick { 4 } else { 12 };
    let mut checks = 0;
    let mut failures = Vec::new();
    for params in param_grid(Family::Laguerre) {
        for n in 1..=n_max {
            checks += 1;
            let s = fisher_sum_form(Family::Laguerre, ParamTarget::Alpha, n, &params)
                .unwrap()
                .value;
            let h = fisher_laguerre_hypergeom(n, params.alpha).unwrap();
            if rel(s, h) > tol {
                failures.push(format!(
                    "{}: hypergeom {h:.17e} vs sum {s:.17e}",
                    case_label(Family::Laguerre, ParamTarget::Alpha, n, &params)
                ));
            }
        }
    }
    finish(3, "Corollary-1 hypergeometric form", checks, failures, start)
}

/// Criterion 4: Lemma-2 integral identities (a), (b), (c).
pub fn criterion_lemma2(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let n_max: u32 = if opts.quick { 3 } else { 5 };
    let cfg = QuadratureConfig::default();
    let mut work: Vec<(Lemma2Part, Family, ParamTarget, u32, Option<u32>, Params)> =
        Vec::new();
    for (family, target, params) in grid_cases() {
        for n in 0..=n_max {
            work.push((Lemma2Part::A, family, target, n, None, params));
            work.push((Lemma2Part::C, family, target, n, None, params));
            for k in 0..n {
                work.push((Lemma2Part::B, family, target, n, Some(k), params));
            }
        }
    }
    let results: Vec<Option<String>> = work
        .par_iter()
        .map(|&(which, family, target, n, k, params)| {
            match verify_lemma2(which, family, target, n, k, &params, &cfg) {
                Ok(r) => {
                    let tol = opts.tol_override.unwrap_or(1e-7);
                    if r.abs_err.min(r.rel_err) <= tol {
                        None
                    } else {
                        Some(format!(
                            "{}: computed {:.12e} expected {:.12e}",
                            r.check_name, r.computed, r.expected
                        ))
                    }
                }
                Err(e) => Some(format!(
                    "lemma2 {}: {e}",
                    case_label(family, target, n, &params)
                )),
            }
        })
        .collect();
    let checks = results.len();
    let failures = results.into_iter().flatten().collect();
    finish(4, "Lemma-2 integral suite", checks, failures, start)
}

/// Criterion 5: pointwise finite-difference check of the derivative
/// expansion (Lemma 1).
pub fn criterion_lemma1_pointwise(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let tol = opts.tol_override.unwrap_or(1e-5);
    let n_max = if opts.quick { 4 } else { 6 };
    let mut checks = 0;
    let mut failures = Vec::new();
    let h = 1e-4;
    for (family, target, params) in grid_cases() {
        let xs: [f64; 5] = if support(family).b.is_finite() {
            [-0.8, -0.3, 0.1, 0.45, 0.9]
        } else {
            [0.3, 1.0, 2.7, 5.0, 9.0]
        };
        for n in 0..=n_max {
            let cv = coeffs_orthonormal(family, target, n, &params).unwrap();
            for x in xs {
                checks += 1;
                let diff = |hh: f64| {
                    let up =
                        eval_orthonormal(family, n, &shift_target(target, &params, hh), x)
                            .unwrap();
                    let dn =
                        eval_orthonormal(family, n, &shift_target(target, &params, -hh), x)
                            .unwrap();
                    (up - dn) / (2.0 * hh)
                };
                let fd = (4.0 * diff(h / 2.0) - diff(h)) / 3.0;
                let expansion: f64 = (0..=n)
                    .map(|k| {
                        cv.coeffs[k as usize]
                            * eval_orthonormal(family, k, &params, x).unwrap()
                    })
                    .sum();
                let err = (fd - expansion).abs() / expansion.abs().max(1.0);
                if err > tol {
                    failures.push(format!(
                        "{} x={x}: fd {fd:.10e} vs expansion {expansion:.10e}",
                        case_label(family, target, n, &params)
                    ));
                }
            }
        }
    }
    finish(5, "Lemma-1 pointwise expansion", checks, failures, start)
}

/// Criterion 6: Jacobi swap, Grosjean reflections, Gegenbauer parity.
pub fn criterion_structural(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let swap_tol = opts.tol_override.unwrap_or(1e-12);
    let reflect_tol = opts.tol_override.unwrap_or(1e-9);
    let n_max = if opts.quick { 4 } else { 12 };
    let mut checks = 0;
    let mut failures = Vec::new();
    for params in param_grid(Family::Jacobi) {
        for n in 0..=n_max {
            checks += 1;
            let b = fisher_closed_form(Family::Jacobi, ParamTarget::Beta, n, &params)
                .unwrap()
                .value;
            let swapped = Params::with_alpha_beta(params.beta, params.alpha);
            let a = fisher_closed_form(Family::Jacobi, ParamTarget::Alpha, n, &swapped)
                .unwrap()
                .value;
            if rel(a, b) > swap_tol {
                failures.push(format!(
                    "jacobi swap n={n} alpha={} beta={}: {b:.17e} vs {a:.17e}",
                    params.alpha, params.beta
                ));
            }
        }
    }
    for (family, reflect) in [
        (Family::GrosjeanFirst, (|a: f64| -1.0 - a) as fn(f64) -> f64),
        (Family::GrosjeanSecond, (|a: f64| 1.0 - a) as fn(f64) -> f64),
    ] {
        for params in param_grid(family) {
            for n in 0..=n_max {
                checks += 1;
                let lhs = fisher_sum_form(family, ParamTarget::Alpha, n, &params)
                    .unwrap()
                    .value;
                let mirrored = Params::with_alpha(reflect(params.alpha));
                let rhs = fisher_sum_form(family, ParamTarget::Alpha, n, &mirrored)
                    .unwrap()
                    .value;
                if rel(lhs, rhs) > reflect_tol {
                    failures.push(format!(
                        "{} reflection n={n} alpha={}: {lhs:.17e} vs {rhs:.17e}",
                        family.name(),
                        params.alpha
                    ));
                }
            }
        }
    }
    for params in param_grid(Family::Gegenbauer) {
        for n in 0..=n_max {
            checks += 1;
            let cv =
                coeffs_orthonormal(Family::Gegenbauer, ParamTarget::Lambda, n, &params)
                    .unwrap();
            let bad = (0..n)
                .filter(|k| (n - k) % 2 == 1)
                .any(|k| cv.coeffs[k as usize] != 0.0);
            if bad {
                failures.push(format!(
                    "gegenbauer parity n={n} lambda={}: odd coefficient nonzero",
                    params.lambda
                ));
            }
        }
    }
    finish(6, "structural identities", checks, failures, start)
}

/// Criterion 7: orthonormality and norm checks by quadrature.
pub fn criterion_orthonormality(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let tol = opts.tol_override.unwrap_or(1e-8);
    let n_max: u32 = if opts.quick { 4 } else { 8 };
    let cfg = QuadratureConfig::default();
    // parameter cases only (target plays no role here)
    let mut cases: Vec<(Family, Params)> = Vec::new();
    for family in [
        Family::Laguerre,
        Family::Jacobi,
        Family::Gegenbauer,
        Family::GrosjeanFirst,
        Family::GrosjeanSecond,
    ] {
        for params in param_grid(family) {
            cases.push((family, params));
        }
    }
    #[derive(Clone, Copy)]
    enum Check {
        Pair(u32, u32),
        Norm(u32),
    }
    let mut work: Vec<(Family, Params, Check)> = Vec::new();
    for &(family, params) in &cases {
        for n in 0..=n_max {
            work.push((family, params, Check::Pair(n, n)));
            work.push((family, params, Check::Norm(n)));
            if n >= 1 {
                work.push((family, params, Check::Pair(n, n - 1)));
                work.push((family, params, Check::Pair(n, 0)));
            }
        }
    }
    let results: Vec<Option<String>> = work
        .par_iter()
        .map(|&(family, params, check)| {
            let report = match check {
                Check::Pair(n, m) => verify_orthonormality(family, n, m, &params, &cfg),
                Check::Norm(n) => verify_norm(family, n, &params, &cfg),
            };
            match report {
                Ok(r) => {
                    if r.abs_err.min(r.rel_err) <= tol {
                        None
                    } else {
                        Some(format!(
                            "{}: computed {:.12e} expected {:.12e}",
                            r.check_name, r.computed, r.expected
                        ))
                    }
                }
                Err(e) => Some(format!("{} check failed: {e}", family.name())),
            }
        })
        .collect();
    let checks = results.len();
    let failures = results.into_iter().flatten().collect();
    finish(7, "orthonormality and normalization", checks, failures, start)
}

/// Criterion 8: n = 1e5 Laguerre sum form is finite, positive, fast.
pub fn criterion_scale(_opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let t = Instant::now();
    let r = fisher_sum_form(
        Family::Laguerre,
        ParamTarget::Alpha,
        100_000,
        &Params::with_alpha(0.5),
    );
    let elapsed = t.elapsed();
    match r {
        Ok(r) if r.value.is_finite() && r.value > 0.0 => {
            if elapsed.as_millis() >= 50 {
                failures.push(format!("took {elapsed:?} (budget 50 ms)"));
            }
        }
        Ok(r) => failures.push(format!("non-finite or non-positive value {}", r.value)),
        Err(e) => failures.push(format!("failed: {e}")),
    }
    finish(8, "large-n overflow safety (n = 1e5)", 1, failures, start)
}

/// Criterion 9: frozen spot values, each confirmed against the oracle.
pub fn criterion_spot_values(opts: &SuiteOptions) -> CriterionOutcome {
    let start = Instant::now();
    let tol = opts.tol_override.unwrap_or(1e-6);
    let cfg = QuadratureConfig::default();
    let pi = std::f64::consts::PI;
    let trigamma_3_2 = pi * pi / 2.0 - 4.0;
    let spots: Vec<(Family, ParamTarget, u32, Params, f64, &'static str)> = vec![
        (
            Family::Laguerre,
            ParamTarget::Alpha,
            0,
            Params::with_alpha(0.0),
            pi * pi / 6.0,
            "I_0 Laguerre(0) = pi^2/6",
        ),
        (
            Family::Laguerre,
            ParamTarget::Alpha,
            1,
            Params::with_alpha(0.0),
            2.0 + (pi * pi / 6.0 - 1.0),
            "I_1 Laguerre(0) = 2 + trigamma(2)",
        ),
        (
            Family::Jacobi,
            ParamTarget::Alpha,
            0,
            Params::with_alpha_beta(0.0, 0.0),
            1.0,
            "I_0 Jacobi-alpha(0,0) = 1",
        ),
        (
            Family::Gegenbauer,
            ParamTarget::Lambda,
            0,
            Params::with_lambda(0.5),
            4.0 - pi * pi / 3.0,
            "I_0 Gegenbauer(1/2) = 4 - pi^2/3",
        ),
        (
            Family::GrosjeanFirst,
            ParamTarget::Alpha,
            1,
            Params::with_alpha(-0.5),
            16.0 + 2.0 * trigamma_3_2,
            "I_1 Grosjean-I(-1/2) = 16 + 2 trigamma(3/2)",
        ),
    ];
    let mut failures = Vec::new();
    let checks = spots.len() * 2;
    for (family, target, n, params, frozen, label) in spots {
        let computed = fisher_sum_form(family, target, n, &params).unwrap().value;
        if rel(computed, frozen) > tol.min(1e-10) {
            failures.push(format!(
                "{label}: computed {computed:.17e} vs frozen {frozen:.17e}"
            ));
        }
        match fisher_by_definition(family, target, n, &params, &cfg) {
            Ok(oracle) if rel(oracle, frozen) <= tol => {}
            Ok(oracle) => failures.push(format!(
                "{label}: oracle {oracle:.12e} vs frozen {frozen:.12e} (rel {:.3e})",
                rel(oracle, frozen)
            )),
            Err(e) => failures.push(format!("{label}: oracle failed: {e}")),
        }
    }
    finish(9, "frozen spot values vs oracle", checks, failures, start)
}

/// Runs the full acceptance grid; returns one outcome per criterion, in
/// order.
pub fn run_acceptance(opts: &SuiteOptions) -> Vec<CriterionOutcome> {
    vec![
        criterion_sum_vs_closed(opts),
        criterion_oracle_agreement(opts),
        criterion_hypergeometric(opts),
        criterion_lemma2(opts),
        criterion_lemma1_pointwise(opts),
        criterion_structural(opts),
        criterion_orthonormality(opts),
        criterion_scale(opts),
        criterion_spot_values(opts),
    ]
}

fn apply_tol(mut r: VerificationReport, tol: f64) -> VerificationReport {
    r.passed = r.abs_err.min(r.rel_err) <= tol;
    r
}

/// Fisher oracle-vs-sum reports for the CLI `verify --suite fisher`.
pub fn verify_fisher_suite(
    n_max: u32,
    tol: f64,
    cfg: &QuadratureConfig,
) -> Vec<VerificationReport> {
    let ns: Vec<u32> = [0u32, 1, 2, 3, 5, 8].into_iter().filter(|&n| n <= n_max).collect();
    let work: Vec<(Family, ParamTarget, Params, u32)> = grid_cases()
        .into_iter()
        .flat_map(|(f, t, p)| ns.iter().map(move |&n| (f, t, p, n)))
        .collect();
    work.par_iter()
        .map(|&(family, target, params, n)| {
            let expected = fisher_sum_form(family, target, n, &params)
                .map(|r| r.value)
                .unwrap_or(f64::NAN);
            let computed = fisher_by_definition(family, target, n, &params, cfg)
                .unwrap_or(f64::NAN);
            let abs_err = (computed - expected).abs();
            let rel_err = abs_err / expected.abs().max(f64::MIN_POSITIVE);
            VerificationReport {
                check_name: format!(
                    "fisher {}",
                    case_label(family, target, n, &params)
                ),
                computed,
                expected,
                abs_err,
                rel_err,
                passed: rel_err <= tol,
                config: *cfg,
            }
        })
        .collect()
}

/// Lemma-2 reports for the CLI `verify --suite lemma2`.
pub fn verify_lemma2_suite(
    n_max: u32,
    tol: f64,
    cfg: &QuadratureConfig,
) -> Vec<VerificationReport> {
    let mut work: Vec<(Lemma2Part, Family, ParamTarget, u32, Option<u32>, Params)> =
        Vec::new();
    for (family, target, params) in grid_cases() {
        for n in 0..=n_max {
            work.push((Lemma2Part::A, family, target, n, None, params));
            work.push((Lemma2Part::C, family, target, n, None, params));
            for k in 0..n {
                work.push((Lemma2Part::B, family, target, n, Some(k), params));
            }
        }
    }
    work.par_iter()
        .map(|&(which, family, target, n, k, params)| {
            match verify_lemma2(which, family, target, n, k, &params, cfg) {
                Ok(r) => apply_tol(r, tol),
                Err(e) => VerificationReport {
                    check_name: format!(
                        "lemma2 {}: {e}",
                        case_label(family, target, n, &params)
                    ),
                    computed: f64::NAN,
                    expected: f64::NAN,
                    abs_err: f64::NAN,
                    rel_err: f64::NAN,
                    passed: false,
                    config: *cfg,
                },
            }
        })
        .collect()
}

/// Orthonormality reports for the CLI `verify --suite orthonormality`.
pub fn verify_orthonormality_suite(
    n_max: u32,
    tol: f64,
    cfg: &QuadratureConfig,
) -> Vec<VerificationReport> {
    let mut work: Vec<(Family, Params, u32, u32)> = Vec::new();
    for (family, _, params) in dedup_family_cases() {
        for n in 0..=n_max {
            work.push((family, params, n, n));
            if n >= 1 {
                work.push((family, params, n, n - 1));
                work.push((family, params, n, 0));
            }
        }
    }
    work.par_iter()
        .map(|&(family, params, n, m)| {
            verify_orthonormality(family, n, m, &params, cfg)
                .map(|r| apply_tol(r, tol))
                .unwrap_or_else(|e| error_report(format!("orthonormality: {e}"), cfg))
        })
        .collect()
}

/// Norm reports for the CLI `verify --suite norms`.
pub fn verify_norms_suite(
    n_max: u32,
    tol: f64,
    cfg: &QuadratureConfig,
) -> Vec<VerificationReport> {
    let mut work: Vec<(Family, Params, u32)> = Vec::new();
    for (family, _, params) in dedup_family_cases() {
        for n in 0..=n_max {
            work.push((family, params, n));
        }
    }
    work.par_iter()
        .map(|&(family, params, n)| {
            verify_norm(family, n, &params, cfg)
                .map(|r| apply_tol(r, tol))
                .unwrap_or_else(|e| error_report(format!("norm: {e}"), cfg))
        })
        .collect()
}

fn error_report(msg: String, cfg: &QuadratureConfig) -> VerificationReport {
    VerificationReport {
        check_name: msg,
        computed: f64::NAN,
        expected: f64::NAN,
        abs_err: f64::NAN,
        rel_err: f64::NAN,
        passed: false,
        config: *cfg,
    }
}

/// Grid cases with one entry per (family, params), dropping the duplicate
/// Jacobi beta target.
fn dedup_family_cases() -> Vec<(Family, ParamTarget, Params)> {
    grid_cases()
        .into_iter()
        .filter(|&(f, t, _)| !(f == Family::Jacobi && t == ParamTarget::Beta))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_have_expected_cardinality() {
        assert_eq!(param_grid(Family::Laguerre).len(), 7);
        assert_eq!(param_grid(Family::Jacobi).len(), 49);
        assert_eq!(param_grid(Family::Gegenbauer).len(), 5);
        assert_eq!(param_grid(Family::GrosjeanFirst).len(), 5);
        assert_eq!(param_grid(Family::GrosjeanSecond).len(), 5);
        assert_eq!(family_target_cases().len(), 6);
    }

    #[test]
    fn quick_fast_criteria_pass() {
        let opts = SuiteOptions { quick: true, tol_override: None };
        for outcome in [
            criterion_sum_vs_closed(&opts),
            criterion_hypergeometric(&opts),
            criterion_structural(&opts),
            criterion_scale(&opts),
        ] {
            assert!(outcome.passed(), "{}", outcome.summary());
        }
    }

    #[test]
    fn tol_override_forces_failure() {
        let opts = SuiteOptions { quick: true, tol_override: Some(1e-30) };
        assert!(!criterion_sum_vs_closed(&opts).passed());
    }
}
