//! Python bindings. Records and reports cross the boundary as JSON text.

use horikawa::hj::{self, EnumerateOptions};
use horikawa::moduli::{self, StratumDim, Which};
use horikawa::tables::{build_table, EmptyStyle, TableId, TableRequest};
use horikawa::verify::{Scope, VerifyOptions};
use horikawa::{Chain, ChainClassification, CyclicQuotientSingularity, Error, Side};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    match e {
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn chain(entries: Vec<u32>) -> PyResult<Chain> {
    Chain::new(entries).map_err(err)
}

fn classification<'py>(py: Python<'py>, c: &ChainClassification) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("kind", c.kind().to_string())?;
    d.set_item("delta", c.t().map(|p| p.delta))?;
    d.set_item("m", c.t().map(|p| p.m))?;
    d.set_item("a", c.t().map(|p| p.a))?;
    d.set_item("two_gorenstein", c.two_gorenstein())?;
    Ok(d)
}

/// Continued-fraction chain of `1/n(1,q)`.
#[pyfunction]
fn hj_expand(n: u64, q: u64) -> PyResult<Vec<u32>> {
    let s = CyclicQuotientSingularity::new(n, q).map_err(err)?;
    Ok(hj::hj_expand(&s).into_entries())
}

/// Reduced fraction `"n/q"`.
#[pyfunction]
fn hj_eval(entries: Vec<u32>) -> PyResult<String> {
    Ok(hj::hj_eval(&chain(entries)?).to_string())
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, entries: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    let c = hj::classify_chain(&chain(entries)?).map_err(err)?;
    classification(py, &c)
}

#[pyfunction]
fn classify_singularity<'py>(py: Python<'py>, n: u64, q: u64) -> PyResult<Bound<'py, PyDict>> {
    let s = CyclicQuotientSingularity::new(n, q).map_err(err)?;
    classification(py, &hj::classify_singularity(&s))
}

#[pyfunction]
fn grow(entries: Vec<u32>, side: &str) -> PyResult<Vec<u32>> {
    let side: Side = side.parse().map_err(err)?;
    Ok(hj::grow_chain(&chain(entries)?, side).into_entries())
}

#[pyfunction]
#[pyo3(signature = (max_len, two_gorenstein = false, dedupe = false))]
fn enumerate_t_chains(max_len: usize, two_gorenstein: bool, dedupe: bool) -> PyResult<Vec<Vec<u32>>> {
    let list = hj::enumerate_t_chains_with(EnumerateOptions {
        max_length: max_len,
        only_two_gorenstein: two_gorenstein,
        dedupe_reversal: dedupe,
    })
    .map_err(err)?;
    Ok(list.into_iter().map(Chain::into_entries).collect())
}

/// Discrepancies as fraction strings.
#[pyfunction]
fn discrepancies(entries: Vec<u32>) -> PyResult<Vec<String>> {
    let a = horikawa::lattice::discrepancies(&chain(entries)?).map_err(err)?;
    Ok(a.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn k2_contribution(entries: Vec<u32>) -> PyResult<u64> {
    hj::k2_contribution(&chain(entries)?).map_err(err)
}

/// `(dim D', dim D'')` with `None` for an empty stratum.
#[pyfunction]
fn d_strata(n: i64, d: i64) -> PyResult<(Option<i64>, Option<i64>)> {
    let (a, b) = moduli::d_strata(n, d).map_err(err)?;
    Ok((a.dim.value(), b.dim.value()))
}

#[pyfunction]
fn stratum_dim_second(n: i64, d: i64) -> PyResult<Option<i64>> {
    let r = moduli::stratum_dim_second(n, d).map_err(err)?;
    Ok(match r.dim {
        StratumDim::Value(v) => Some(v),
        StratumDim::Empty => None,
    })
}

#[pyfunction]
fn tangent_report(n: i64, d: i64, which: &str) -> PyResult<String> {
    let w: Which = which.parse().map_err(err)?;
    let r = horikawa::tangent::tangent_report(n, d, w).map_err(err)?;
    Ok(to_json(&r))
}

#[pyfunction]
#[pyo3(signature = (table, n_lo, n_hi, eval = false, empty_as_minus_one = false))]
fn table_json(table: &str, n_lo: i64, n_hi: i64, eval: bool, empty_as_minus_one: bool) -> PyResult<String> {
    let id: TableId = table.parse().map_err(err)?;
    let mut req = TableRequest::new(id, n_lo, n_hi);
    req.eval = eval;
    if empty_as_minus_one {
        req.empty_style = EmptyStyle::MinusOne;
    }
    Ok(to_json(&build_table(&req).map_err(err)?))
}

/// `(all_passed, report_json)`.
#[pyfunction]
#[pyo3(signature = (scope = "all", n_max = 200, hj_n_max = None))]
fn verify(py: Python<'_>, scope: &str, n_max: i64, hj_n_max: Option<u64>) -> PyResult<(bool, String)> {
    let scope: Scope = scope.parse().map_err(err)?;
    let mut opts = VerifyOptions::new(scope, n_max);
    opts.hj_n_max = hj_n_max;
    let report = py.detach(|| horikawa::verify::verify(&opts)).map_err(err)?;
    Ok((report.all_passed, report.to_json()))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("value serializes")
}

#[pymodule(name = "horikawa")]
fn horikawa_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(hj_expand, m)?)?;
    m.add_function(wrap_pyfunction!(hj_eval, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_singularity, m)?)?;
    m.add_function(wrap_pyfunction!(grow, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_t_chains, m)?)?;
    m.add_function(wrap_pyfunction!(discrepancies, m)?)?;
    m.add_function(wrap_pyfunction!(k2_contribution, m)?)?;
    m.add_function(wrap_pyfunction!(d_strata, m)?)?;
    m.add_function(wrap_pyfunction!(stratum_dim_second, m)?)?;
    m.add_function(wrap_pyfunction!(tangent_report, m)?)?;
    m.add_function(wrap_pyfunction!(table_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
