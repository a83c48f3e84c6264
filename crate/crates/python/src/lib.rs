use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use tdesign::admissibility::steiner_half_reports;
use tdesign::codes::code_weight_distribution;
use tdesign::delsarte::{johnson_design_check, oa_strength, relative_design_check};
use tdesign::format::{parse_design, render_design};
use tdesign::{fixtures, spectral, walsh_full, IncidenceStructure, PointSet};

fn err(e: tdesign::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point_sets(n: u32, rows: &[Vec<u32>]) -> PyResult<Vec<PointSet>> {
    rows.iter().map(|r| PointSet::from_points(n, r).map_err(err)).collect()
}

/// A k-uniform incidence structure on points 1..n.
#[pyclass(name = "Design", frozen)]
struct Design(IncidenceStructure);

#[pymethods]
impl Design {
    #[new]
    fn new(n: u32, k: u32, blocks: Vec<Vec<u32>>) -> PyResult<Self> {
        IncidenceStructure::new(n, k, point_sets(n, &blocks)?).map(Design).map_err(err)
    }

    /// Parses the plain-text design format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_design(text).map(Design).map_err(err)
    }

    fn render(&self) -> String {
        render_design(&self.0)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k()
    }

    #[getter]
    fn b(&self) -> usize {
        self.0.b()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<u32>> {
        self.0.blocks().iter().map(PointSet::points).collect()
    }

    /// `lambda` if the structure is a `t`-design, else `None`.
    #[pyo3(signature = (t, method = "spectral"))]
    fn verify(&self, t: u32, method: &str) -> PyResult<Option<BigInt>> {
        let d = &self.0;
        let lambda = |ok: bool| {
            ok.then(|| BigInt::from(d.b()) * tdesign::exactmath::binomial(d.k() as u64, t as i64)
                / tdesign::exactmath::binomial(d.n() as u64, t as i64))
        };
        match method {
            "spectral" => Ok(tdesign::verify_spectral(d, t).map_err(err)?.lambda),
            "bruteforce" => Ok(tdesign::verify_bruteforce(d, t).map_err(err)?.map(|p| p.lambda)),
            "johnson" => Ok(lambda(johnson_design_check(d, t).map_err(err)?)),
            "relative" => Ok(lambda(relative_design_check(d.blocks(), t).map_err(err)?)),
            m => Err(PyValueError::new_err(format!("unknown method `{m}`"))),
        }
    }

    /// Rows `(weight, value, multiplicity)` of the Walsh spectrum.
    #[pyo3(signature = (max_weight = None))]
    fn spectrum(&self, max_weight: Option<u32>) -> PyResult<Vec<(u32, BigInt, BigInt)>> {
        let by_weight = walsh_full(&self.0.characteristic_function()).map_err(err)?.by_weight();
        let by_weight = match max_weight {
            Some(w) => by_weight.truncated(w),
            None => by_weight,
        };
        Ok(by_weight.rows().map(|(w, v, m)| (w, v.clone(), m.clone())).collect())
    }

    /// Monomials of the algebraic normal form as sorted point lists.
    fn anf(&self) -> PyResult<Vec<Vec<u32>>> {
        let form = tdesign::anf(&self.0.characteristic_function()).map_err(err)?;
        Ok(form.terms().iter().map(PointSet::points).collect())
    }

    fn anf_degree_histogram(&self) -> PyResult<BTreeMap<u32, u64>> {
        let form = tdesign::anf(&self.0.characteristic_function()).map_err(err)?;
        Ok(form.degree_histogram().clone())
    }

    /// `(length, dimension, {weight: count})` of the code built from the design.
    fn code_weight_distribution(&self) -> PyResult<(u64, u32, BTreeMap<u64, BigInt>)> {
        let d = code_weight_distribution(&self.0.characteristic_function()).map_err(err)?;
        Ok((d.length, d.dimension, d.counts))
    }

    fn __repr__(&self) -> String {
        format!("Design(n={}, k={}, b={})", self.0.n(), self.0.k(), self.0.b())
    }
}

#[pyfunction]
fn krawtchouk(n: u32, k: u32, x: u32) -> PyResult<BigInt> {
    tdesign::krawtchouk(n, k, x).map_err(err)
}

/// Even `n` in `[min_n, max_n]` for which `((n-2)/2, n, n/2, 1)` passes every filter.
#[pyfunction]
#[pyo3(signature = (min_n = 8, max_n = 150))]
fn admissible(min_n: u32, max_n: u32) -> PyResult<Vec<u32>> {
    tdesign::admissibility::enumerate_admissible(min_n, max_n).map_err(err)
}

/// `(n, passed, failed)` per even `n`, failed filters named.
#[pyfunction]
fn admissibility_reports(min_n: u32, max_n: u32) -> PyResult<Vec<(u32, Vec<&'static str>, Vec<&'static str>)>> {
    Ok(steiner_half_reports(min_n, max_n)
        .map_err(err)?
        .into_iter()
        .map(|r| (r.n, r.passed, r.failed.into_iter().map(|(name, _)| name).collect()))
        .collect())
}

#[pyfunction]
fn walsh_spectrum(n: u32, support: Vec<Vec<u32>>) -> PyResult<Vec<i64>> {
    let f = tdesign::BooleanFunction::from_support(n, point_sets(n, &support)?).map_err(err)?;
    Ok(walsh_full(&f).map_err(err)?.values().collect())
}

#[pyfunction]
fn orthogonal_array_strength(n: u32, rows: Vec<Vec<u32>>) -> PyResult<u32> {
    oa_strength(&point_sets(n, &rows)?).map_err(err)
}

/// `(a, a_tilde)` for a `(n-2)/2-(n, n/2, 1)` Steiner system.
#[pyfunction]
fn steiner_values(n: u32) -> PyResult<(BigInt, BigInt)> {
    Ok((
        spectral::steiner_a(n).map_err(err)?,
        spectral::steiner_a_tilde(n).map_err(err)?,
    ))
}

/// Reference designs keyed by name, each re-verified on load.
#[pyfunction]
fn load_fixtures() -> PyResult<BTreeMap<&'static str, (Design, u32)>> {
    Ok(fixtures::load_fixtures()
        .map_err(err)?
        .into_iter()
        .map(|f| (f.name, (Design(f.structure), f.t)))
        .collect())
}

#[pyfunction]
fn generate_s5612() -> PyResult<Design> {
    fixtures::generate_s5612().map(Design).map_err(err)
}

#[pymodule]
fn pytdesign(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Design>()?;
    m.add_function(wrap_pyfunction!(krawtchouk, m)?)?;
    m.add_function(wrap_pyfunction!(admissible, m)?)?;
    m.add_function(wrap_pyfunction!(admissibility_reports, m)?)?;
    m.add_function(wrap_pyfunction!(walsh_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(orthogonal_array_strength, m)?)?;
    m.add_function(wrap_pyfunction!(steiner_values, m)?)?;
    m.add_function(wrap_pyfunction!(load_fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(generate_s5612, m)?)?;
    Ok(())
}
