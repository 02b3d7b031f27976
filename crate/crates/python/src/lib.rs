//! Python bindings for `lagdelta`.

use lagdelta::hopf::{self, Side, SignConvention};
use lagdelta::symplectic::{enumerate_lagrangians, lagrangian_count};
use lagdelta::{GroundSet, Reduction, Subset};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: lagdelta::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subset(ground: &GroundSet, labels: &[String]) -> PyResult<Subset> {
    labels.iter().try_fold(Subset::EMPTY, |s, l| {
        ground
            .index_of(l)
            .map(|i| s.with(i))
            .ok_or_else(|| PyValueError::new_err(format!("unknown label `{l}`")))
    })
}

fn labels(ground: &GroundSet, s: Subset) -> Vec<String> {
    s.iter().map(|i| ground.label(i).to_string()).collect()
}

/// A Lagrangian subspace of the symplectic space on a labeled ground set.
#[pyclass(name = "LagrangianSubspace", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLagrangian(lagdelta::LagrangianSubspace);

#[pymethods]
impl PyLagrangian {
    /// Parses the line format: one vector per line such as `1+2^`.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        lagdelta::LagrangianSubspace::parse_text(text)
            .map(Self)
            .map_err(value_error)
    }

    /// Builds the span of `vectors` over the ground set `1..=n`.
    #[staticmethod]
    fn from_vectors(n: usize, vectors: Vec<String>) -> PyResult<Self> {
        let tokens: Vec<&str> = vectors.iter().map(String::as_str).collect();
        lagdelta::LagrangianSubspace::from_tokens(GroundSet::numbered(n), &tokens)
            .map(Self)
            .map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    #[getter]
    fn ground(&self) -> Vec<String> {
        self.0.ground().labels().to_vec()
    }

    fn is_graphic(&self) -> bool {
        self.0.is_graphic()
    }

    /// A set whose local dual is graphic.
    fn graphify(&self) -> Vec<String> {
        labels(self.0.ground(), self.0.graphify())
    }

    fn local_dual(&self, set: Vec<String>) -> PyResult<Self> {
        let s = subset(self.0.ground(), &set)?;
        self.0.local_dual(s).map(Self).map_err(value_error)
    }

    #[pyo3(signature = (keep, mode = "primal"))]
    fn reduce(&self, keep: Vec<String>, mode: &str) -> PyResult<Self> {
        let mode = match mode {
            "primal" => Reduction::Primal,
            "dual" => Reduction::Dual,
            other => return Err(PyValueError::new_err(format!("unknown mode `{other}`"))),
        };
        let s = subset(self.0.ground(), &keep)?;
        self.0.reduce(s, mode).map(Self).map_err(value_error)
    }

    fn direct_sum(&self, other: &Self) -> PyResult<Self> {
        self.0.direct_sum(&other.0).map(Self).map_err(value_error)
    }

    fn nu(&self) -> PySetSystem {
        PySetSystem(lagdelta::nu(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("LagrangianSubspace({:?})", self.0.to_text().trim_end())
    }
}

/// A set system on a labeled ground set; binary delta-matroids are the
/// images of Lagrangian subspaces.
#[pyclass(name = "SetSystem", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySetSystem(lagdelta::SetSystem);

#[pymethods]
impl PySetSystem {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        lagdelta::SetSystem::parse_text(text)
            .map(Self)
            .map_err(value_error)
    }

    #[new]
    fn new(ground: Vec<String>, feasible: Vec<Vec<String>>) -> PyResult<Self> {
        let ground = GroundSet::new(ground).map_err(value_error)?;
        let sets = feasible
            .iter()
            .map(|f| subset(&ground, f))
            .collect::<PyResult<Vec<_>>>()?;
        lagdelta::SetSystem::new(ground, sets)
            .map(Self)
            .map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    #[getter]
    fn ground(&self) -> Vec<String> {
        self.0.ground().labels().to_vec()
    }

    #[getter]
    fn feasible(&self) -> Vec<Vec<String>> {
        self.0
            .feasible()
            .iter()
            .map(|&s| labels(self.0.ground(), s))
            .collect()
    }

    fn check_sea(&self) -> PyResult<bool> {
        self.0.check_sea().map_err(value_error)
    }

    fn is_binary(&self) -> PyResult<bool> {
        self.0.is_binary().map_err(value_error)
    }

    fn twist(&self, set: Vec<String>) -> PyResult<Self> {
        let s = subset(self.0.ground(), &set)?;
        self.0.twist(s).map(Self).map_err(value_error)
    }

    fn nu_inverse(&self) -> PyResult<PyLagrangian> {
        lagdelta::nu_inverse(&self.0)
            .map(PyLagrangian)
            .map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("SetSystem({:?})", self.0.family_string())
    }
}

/// A ribbon graph given by signed rotation systems.
#[pyclass(name = "RibbonGraph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRibbonGraph(lagdelta::RibbonGraph);

#[pymethods]
impl PyRibbonGraph {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        lagdelta::RibbonGraph::parse_text(text)
            .map(Self)
            .map_err(value_error)
    }

    /// A one-vertex graph from chords `(p, q, twisted)` on points `0..2m`.
    #[staticmethod]
    fn chord_diagram(chords: Vec<(usize, usize, bool)>) -> PyResult<Self> {
        lagdelta::RibbonGraph::chord_diagram(&chords)
            .map(Self)
            .map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.0.num_vertices()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.0.num_edges()
    }

    fn boundary_components(&self) -> usize {
        self.0.boundary_components()
    }

    fn euler_characteristic(&self) -> i64 {
        self.0.euler_characteristic()
    }

    fn is_orientable(&self) -> bool {
        self.0.is_orientable()
    }

    fn partial_dual(&self, set: Vec<String>) -> PyResult<Self> {
        let s = subset(self.0.ground(), &set)?;
        self.0.partial_dual(s).map(Self).map_err(value_error)
    }

    /// The delta-matroid of quasi-trees.
    fn rho(&self) -> PyResult<PySetSystem> {
        self.0
            .rho()
            .map(|d| PySetSystem(d.into_set_system()))
            .map_err(value_error)
    }

    /// The Lagrangian subspace of the graph.
    fn pi(&self) -> PyResult<PyLagrangian> {
        self.0.pi().map(PyLagrangian).map_err(value_error)
    }
}

#[pyfunction]
fn nu(l: &PyLagrangian) -> PySetSystem {
    l.nu()
}

#[pyfunction]
fn nu_inverse(s: &PySetSystem) -> PyResult<PyLagrangian> {
    s.nu_inverse()
}

/// All Lagrangian subspaces on `1..=n`.
#[pyfunction]
fn enumerate(n: usize) -> PyResult<Vec<PyLagrangian>> {
    enumerate_lagrangians(&GroundSet::numbered(n))
        .map(|v| v.into_iter().map(PyLagrangian).collect())
        .map_err(value_error)
}

#[pyfunction]
fn count(n: usize) -> u64 {
    lagrangian_count(n)
}

/// Dimension of the degree-`n` part of the four-term quotient.
#[pyfunction]
#[pyo3(signature = (side, n, convention = "inclusion-exclusion"))]
fn quotient_dimension(side: &str, n: usize, convention: &str) -> PyResult<usize> {
    let side = match side {
        "l" | "lagrangian" => Side::Lagrangian,
        "d" | "deltamatroid" => Side::DeltaMatroid,
        other => return Err(PyValueError::new_err(format!("unknown side `{other}`"))),
    };
    let convention = match convention {
        "inclusion-exclusion" => SignConvention::InclusionExclusion,
        "alternating" => SignConvention::Alternating,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown convention `{other}`"
            )))
        }
    };
    hopf::quotient_dimension(side, n, convention).map_err(value_error)
}

/// Runs every verification suite; returns `(name, passed, cases, detail)`.
#[pyfunction]
fn verify_all(max_n: usize) -> PyResult<Vec<(String, bool, usize, String)>> {
    let reports = lagdelta::verify::all(max_n).map_err(value_error)?;
    Ok(reports
        .into_iter()
        .map(|r| (r.name, r.passed, r.cases, r.detail))
        .collect())
}

#[pymodule(name = "lagdelta")]
fn lagdelta_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLagrangian>()?;
    m.add_class::<PySetSystem>()?;
    m.add_class::<PyRibbonGraph>()?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(nu_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
