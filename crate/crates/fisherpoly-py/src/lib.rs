//! Python bindings: thin wrappers around the fisherpoly crate. Families
//! and targets are passed as strings ("laguerre", "jacobi", "gegenbauer",
//! "grosjean1", "grosjean2"; "alpha", "beta", "lambda"); parameters as
//! keyword arguments (`lambda_` because `lambda` is reserved in Python).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fisherpoly::oracle::{fisher_by_definition, QuadratureConfig};
use fisherpoly::orthopoly::{self, Family, ParamTarget, Params};
use fisherpoly::{fisher_closed_form, fisher_sum_form, param_derivative};

fn err(e: fisherpoly::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_family(s: &str) -> PyResult<Family> {
    Family::parse(s).map_err(err)
}

fn parse_target(s: &str) -> PyResult<ParamTarget> {
    ParamTarget::parse(s).map_err(err)
}

fn build_params(
    family: Family,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<Params> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| {
            PyValueError::new_err(format!("{}: {name} is required", family.name()))
        })
    };
    let params = match family {
        Family::Laguerre | Family::GrosjeanFirst | Family::GrosjeanSecond => {
            Params::with_alpha(need(alpha, "alpha")?)
        }
        Family::Jacobi => Params::with_alpha_beta(need(alpha, "alpha")?, need(beta, "beta")?),
        Family::Gegenbauer => Params::with_lambda(need(lambda_, "lambda_")?),
    };
    params.validate(family).map_err(err)?;
    Ok(params)
}

/// Fisher information via the generic coefficient sum.
#[pyfunction]
#[pyo3(signature = (family, target, n, *, alpha=None, beta=None, lambda_=None))]
fn fisher_sum(
    family: &str,
    target: &str,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let t = parse_target(target)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    Ok(fisher_sum_form(f, t, n, &p).map_err(err)?.value)
}

/// Fisher information via the family-specific closed form.
#[pyfunction]
#[pyo3(signature = (family, target, n, *, alpha=None, beta=None, lambda_=None))]
fn fisher_closed(
    family: &str,
    target: &str,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let t = parse_target(target)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    Ok(fisher_closed_form(f, t, n, &p).map_err(err)?.value)
}

/// Fisher information recomputed from the defining integral by quadrature
/// plus finite differences.
#[pyfunction]
#[pyo3(signature = (family, target, n, *, alpha=None, beta=None, lambda_=None))]
fn fisher_oracle(
    family: &str,
    target: &str,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let t = parse_target(target)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    fisher_by_definition(f, t, n, &p, &QuadratureConfig::default()).map_err(err)
}

/// Orthonormal expansion coefficients of the parameter derivative
/// (length n+1).
#[pyfunction]
#[pyo3(signature = (family, target, n, *, alpha=None, beta=None, lambda_=None))]
fn coeffs_orthonormal(
    family: &str,
    target: &str,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<Vec<f64>> {
    let f = parse_family(family)?;
    let t = parse_target(target)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    Ok(param_derivative::coeffs_orthonormal(f, t, n, &p)
        .map_err(err)?
        .coeffs)
}

/// Expansion coefficients in the orthogonal normalization (length n+1).
#[pyfunction]
#[pyo3(signature = (family, target, n, *, alpha=None, beta=None, lambda_=None))]
fn coeffs_orthogonal(
    family: &str,
    target: &str,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<Vec<f64>> {
    let f = parse_family(family)?;
    let t = parse_target(target)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    Ok(param_derivative::coeffs_orthogonal(f, t, n, &p)
        .map_err(err)?
        .coeffs)
}

/// Orthonormal polynomial value at x.
#[pyfunction]
#[pyo3(signature = (family, n, x, *, alpha=None, beta=None, lambda_=None))]
fn eval_orthonormal(
    family: &str,
    n: u32,
    x: f64,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    orthopoly::eval_orthonormal(f, n, &p, x).map_err(err)
}

/// Squared norm of the standard-normalization polynomial.
#[pyfunction]
#[pyo3(signature = (family, n, *, alpha=None, beta=None, lambda_=None))]
fn norm_squared(
    family: &str,
    n: u32,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    orthopoly::norm_squared(f, n, &p).map_err(err)
}

/// Weight function at x.
#[pyfunction]
#[pyo3(signature = (family, x, *, alpha=None, beta=None, lambda_=None))]
fn weight(
    family: &str,
    x: f64,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    orthopoly::weight(f, &p, x).map_err(err)
}

/// Rakhmanov density weight * ytilde_n^2 at x.
#[pyfunction]
#[pyo3(signature = (family, n, x, *, alpha=None, beta=None, lambda_=None))]
fn rakhmanov_density(
    family: &str,
    n: u32,
    x: f64,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda_: Option<f64>,
) -> PyResult<f64> {
    let f = parse_family(family)?;
    let p = build_params(f, alpha, beta, lambda_)?;
    orthopoly::rakhmanov_density(f, n, &p, x).map_err(err)
}

#[pymodule]
#[pyo3(name = "fisherpoly")]
fn fisherpoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(fisher_sum, m)?)?;
    m.add_function(wrap_pyfunction!(fisher_closed, m)?)?;
    m.add_function(wrap_pyfunction!(fisher_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(coeffs_orthonormal, m)?)?;
    m.add_function(wrap_pyfunction!(coeffs_orthogonal, m)?)?;
    m.add_function(wrap_pyfunction!(eval_orthonormal, m)?)?;
    m.add_function(wrap_pyfunction!(norm_squared, m)?)?;
    m.add_function(wrap_pyfunction!(weight, m)?)?;
    m.add_function(wrap_pyfunction!(rakhmanov_density, m)?)?;
    Ok(())
}
