//! Python module `prym`: polynomials, ideals, graded groups and scenarios.

use std::collections::HashMap;

use prym_core::harness::{self, Params};
use prym_core::ideal::{graded_piece_group as core_group, Ideal as CoreIdeal, OracleMode};
use prym_core::poly::{Polynomial as CorePoly, Table, VariableTable};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

fn err(e: prym_core::Error) -> PyErr {
    match e {
        prym_core::Error::UnknownId(s) => PyKeyError::new_err(s),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn table(vars: Vec<(String, u32)>) -> PyResult<Table> {
    VariableTable::new(&vars).map_err(err)
}

fn parse_all(t: &Table, items: &[String]) -> PyResult<Vec<CorePoly>> {
    items.iter().map(|s| CorePoly::parse(t, s).map_err(err)).collect()
}

/// Polynomial over Z in named graded variables.
#[pyclass(frozen)]
#[derive(Clone)]
struct Polynomial {
    inner: CorePoly,
}

#[pymethods]
impl Polynomial {
    #[new]
    fn new(vars: Vec<(String, u32)>, text: &str) -> PyResult<Self> {
        let t = table(vars)?;
        Ok(Polynomial { inner: CorePoly::parse(&t, text).map_err(err)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }

    fn __eq__(&self, other: &Polynomial) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        prym_core::poly::same_table(self.inner.table(), other.inner.table()).map_err(err)?;
        Ok(Polynomial { inner: &self.inner + &other.inner })
    }

    fn __sub__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        prym_core::poly::same_table(self.inner.table(), other.inner.table()).map_err(err)?;
        Ok(Polynomial { inner: &self.inner - &other.inner })
    }

    fn __mul__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        prym_core::poly::same_table(self.inner.table(), other.inner.table()).map_err(err)?;
        Ok(Polynomial { inner: &self.inner * &other.inner })
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> Polynomial {
        Polynomial { inner: self.inner.pow(e) }
    }

    fn __neg__(&self) -> Polynomial {
        Polynomial { inner: -&self.inner }
    }

    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }
}

/// Ideal of Z[vars] given by generators in text syntax.
#[pyclass(frozen)]
struct Ideal {
    inner: CoreIdeal,
}

#[pymethods]
impl Ideal {
    #[new]
    fn new(vars: Vec<(String, u32)>, generators: Vec<String>) -> PyResult<Self> {
        let t = table(vars)?;
        let gens = parse_all(&t, &generators)?;
        Ok(Ideal { inner: CoreIdeal::new(&t, gens).map_err(err)? })
    }

    fn contains(&self, element: &str) -> PyResult<bool> {
        let p = CorePoly::parse(self.inner.table(), element).map_err(err)?;
        self.inner.contains_bool(&p).map_err(err)
    }

    /// Cofactors `[(generator index, cofactor)]` with `element = sum cofactor * generator`,
    /// or `None` when the element is not in the ideal.
    fn certificate(&self, element: &str) -> PyResult<Option<Vec<(usize, String)>>> {
        let p = CorePoly::parse(self.inner.table(), element).map_err(err)?;
        let c = self.inner.contains(&p).map_err(err)?;
        Ok(c.map(|c| c.terms.iter().map(|(i, q)| (*i, q.to_string())).collect()))
    }

    fn normal_form(&self, element: &str) -> PyResult<String> {
        let p = CorePoly::parse(self.inner.table(), element).map_err(err)?;
        Ok(self.inner.normal_form(&p).map_err(err)?.to_string())
    }

    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(|g| g.to_string()).collect()
    }
}

/// Degree-`d` piece of `Z[vars]/(relations)` as `(free_rank, [torsion invariants])`.
#[pyfunction]
fn graded_piece_group(vars: Vec<(String, u32)>, relations: Vec<String>, d: u32) -> PyResult<(usize, Vec<String>)> {
    let t = table(vars)?;
    let rels = parse_all(&t, &relations)?;
    let g = core_group(&t, &rels, d).map_err(err)?;
    Ok((g.free_rank, g.torsion.iter().map(|x| x.to_string()).collect()))
}

/// `[(id, title, {param: default})]` for every registered scenario.
#[pyfunction]
fn list_scenarios() -> Vec<(String, String, HashMap<String, i64>)> {
    harness::list()
        .iter()
        .map(|s| (s.id.to_string(), s.title.to_string(), s.params.iter().map(|(k, v)| (k.to_string(), *v)).collect()))
        .collect()
}

/// Runs a scenario and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (id, params = None, dmax = 8, oracle = "both"))]
fn run_scenario(id: &str, params: Option<HashMap<String, i64>>, dmax: u32, oracle: &str) -> PyResult<String> {
    let mut p = Params { dmax, oracle: oracle.parse::<OracleMode>().map_err(err)?, ..Params::default() };
    for (k, v) in params.unwrap_or_default() {
        if !["g", "n", "a", "b", "m"].contains(&k.as_str()) {
            return Err(PyKeyError::new_err(format!("unknown parameter {k}")));
        }
        p.set(&k, Some(v));
    }
    Ok(harness::run_scenario(id, &p).map_err(err)?.to_json())
}

#[pymodule]
fn prym(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_class::<Ideal>()?;
    m.add_function(wrap_pyfunction!(graded_piece_group, m)?)?;
    m.add_function(wrap_pyfunction!(list_scenarios, m)?)?;
    m.add_function(wrap_pyfunction!(run_scenario, m)?)?;
    Ok(())
}
