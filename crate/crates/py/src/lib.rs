//! Python bindings. Structured results come back as plain dicts and lists,
//! built from the same JSON documents the command-line tool emits.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use raag_core::corpus::corpus as build_corpus;
use raag_core::decomposition::build_graph_of_groups;
use raag_core::factor::SearchConfig;
use raag_core::generators::{enumerate_aut1_generators, enumerate_laurence_generators};
use raag_core::report::{factor_report, verify15_report};
use raag_core::word::{conjugacy_search, multiply, normal_form, parse_word, ConjugacyResult};
use raag_core::{build_flags_hypergraph, leq, parse_graph, Error, FlagsHypergraph, SimpleGraph};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A finite simple graph and the right-angled Artin group it defines.
#[pyclass(name = "Graph", module = "raag_flags", frozen)]
struct PyGraph {
    g: SimpleGraph,
    fh: FlagsHypergraph,
}

impl PyGraph {
    fn wrap(g: SimpleGraph) -> PyResult<Self> {
        let fh = build_flags_hypergraph(&g).map_err(err)?;
        Ok(PyGraph { g, fh })
    }

    fn word(&self, text: &str) -> PyResult<raag_core::Word> {
        parse_word(&self.g, text).map_err(err)
    }
}

#[pymethods]
impl PyGraph {
    /// Parses an edge list or a JSON graph document.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Self::wrap(parse_graph(text).map_err(err)?)
    }

    #[staticmethod]
    fn from_edges(edges: Vec<(String, String)>) -> PyResult<Self> {
        Self::wrap(
            SimpleGraph::from_label_edges(edges.iter().map(|(a, b)| (a.as_str(), b.as_str())))
                .map_err(err)?,
        )
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Self::wrap(SimpleGraph::path(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Self::wrap(SimpleGraph::cycle(n))
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Self::wrap(SimpleGraph::complete(n))
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.g.labels().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        self.g
            .edge_labels()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.g.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({} vertices, {} edges)",
            self.g.len(),
            self.g.edges().len()
        )
    }

    /// `lk(u) ⊆ st(v)`.
    fn leq(&self, u: &str, v: &str) -> PyResult<bool> {
        Ok(leq(
            &self.g,
            self.g.vertex(u).map_err(err)?,
            self.g.vertex(v).map_err(err)?,
        ))
    }

    fn normal_form(&self, word: &str) -> PyResult<String> {
        let nf = normal_form(&self.g, &self.word(word)?).map_err(err)?;
        Ok(nf.display(&self.g).to_string())
    }

    fn is_identity(&self, word: &str) -> PyResult<bool> {
        Ok(normal_form(&self.g, &self.word(word)?)
            .map_err(err)?
            .is_empty())
    }

    fn multiply(&self, w1: &str, w2: &str) -> PyResult<String> {
        let nf = multiply(&self.g, &self.word(w1)?, &self.word(w2)?).map_err(err)?;
        Ok(nf.display(&self.g).to_string())
    }

    /// A conjugator `c` with `c w1 c⁻¹ = w2` of length at most `radius`, or None.
    #[pyo3(signature = (w1, w2, radius = 4))]
    fn conjugator(&self, w1: &str, w2: &str, radius: usize) -> PyResult<Option<String>> {
        match conjugacy_search(&self.g, &self.word(w1)?, &self.word(w2)?, radius).map_err(err)? {
            ConjugacyResult::Conjugator(c) => Ok(Some(c.display(&self.g).to_string())),
            ConjugacyResult::NotConjugateWithinRadius => Ok(None),
        }
    }

    /// Vertex classes, class order and hyperedges.
    fn flags<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.fh.to_document(&self.g))
    }

    fn flags_dot(&self) -> String {
        self.fh.to_dot(&self.g)
    }

    fn decompositions<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let docs: Vec<_> = self
            .fh
            .hyperedges
            .iter()
            .map(|e| build_graph_of_groups(&self.g, &self.fh, e).to_document(&self.g))
            .collect();
        to_py(py, &docs)
    }

    fn laurence_generators(&self) -> PyResult<Vec<String>> {
        Ok(enumerate_laurence_generators(&self.g)
            .map_err(err)?
            .iter()
            .map(|x| x.id(&self.g))
            .collect())
    }

    fn aut1_generators(&self) -> Vec<String> {
        enumerate_aut1_generators(&self.g, &self.fh)
            .iter()
            .map(|x| x.id(&self.g))
            .collect()
    }

    /// Routes every classical generator to per-hyperedge witnesses and verifies them.
    #[pyo3(signature = (radius = 4, depth = 3))]
    fn factor<'py>(
        &self,
        py: Python<'py>,
        radius: usize,
        depth: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let config = SearchConfig { radius, depth };
        let rep = py
            .detach(|| factor_report("graph", &self.g, &self.fh, config))
            .map_err(err)?;
        to_py(py, &rep)
    }

    fn verify15<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(
            py,
            &verify15_report("graph", &self.g, &self.fh, true).map_err(err)?,
        )
    }
}

/// Connected graphs up to isomorphism with `min_n..=max_n` vertices.
#[pyfunction]
#[pyo3(signature = (max_n, min_n = 3))]
fn corpus(max_n: usize, min_n: usize) -> PyResult<Vec<PyGraph>> {
    build_corpus(min_n, max_n, None)
        .map_err(err)?
        .into_iter()
        .map(|c| PyGraph::wrap(c.graph))
        .collect()
}

#[pymodule]
fn raag_flags(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    Ok(())
}
