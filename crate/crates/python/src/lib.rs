//! Python module `pywordrep`.
//!
//! Words cross the boundary as a string (`"a b a c"` or `"abac"`) or a list
//! of letter names, and come back as lists of names.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wordrep::cartesian;
use wordrep::oracle::{self, SearchBudget, SearchOptions};
use wordrep::products;
use wordrep::rooted;
use wordrep::{Error, Letter, Word};

create_exception!(pywordrep, BudgetExhausted, PyRuntimeError);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::BudgetExhausted { .. } => BudgetExhausted::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

#[derive(FromPyObject)]
enum WordArg {
    Text(String),
    Letters(Vec<String>),
}

impl WordArg {
    fn word(&self) -> PyResult<Word> {
        match self {
            WordArg::Text(text) => Word::parse(text).map_err(to_py),
            WordArg::Letters(names) => names
                .iter()
                .map(|n| Letter::new(n).map_err(to_py))
                .collect::<PyResult<Vec<_>>>()
                .map(Word::new),
        }
    }
}

fn letter(name: &str) -> PyResult<Letter> {
    Letter::new(name).map_err(to_py)
}

fn names(word: &Word) -> Vec<String> {
    word.iter().map(|x| x.to_string()).collect()
}

#[pyclass(name = "Graph", module = "pywordrep", frozen)]
struct PyGraph {
    inner: wordrep::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph from an edge list, plus optional extra (isolated) vertices.
    #[new]
    #[pyo3(signature = (edges=Vec::new(), vertices=Vec::new()))]
    fn new(edges: Vec<(String, String)>, vertices: Vec<String>) -> PyResult<Self> {
        let mut g = wordrep::Graph::new();
        for v in &vertices {
            g.add_vertex(letter(v)?);
        }
        for (a, b) in &edges {
            g.add_edge(letter(a)?, letter(b)?).map_err(to_py)?;
        }
        Ok(PyGraph { inner: g })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        wordrep::Graph::parse(text)
            .map(|inner| PyGraph { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_word(word: WordArg) -> PyResult<Self> {
        wordrep::Graph::from_word(&word.word()?)
            .map(|inner| PyGraph { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        wordrep::Graph::complete(n)
            .map(|inner| PyGraph { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        wordrep::Graph::path(n)
            .map(|inner| PyGraph { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        wordrep::Graph::cycle(n)
            .map(|inner| PyGraph { inner })
            .map_err(to_py)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner
            .vertices()
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn has_edge(&self, a: &str, b: &str) -> PyResult<bool> {
        Ok(self.inner.has_edge(&letter(a)?, &letter(b)?))
    }

    fn is_represented_by(&self, word: WordArg) -> PyResult<bool> {
        Ok(self.inner.is_represented_by(&word.word()?))
    }

    fn clique_number(&self) -> PyResult<usize> {
        self.inner.clique_number().map_err(to_py)
    }

    fn diameter(&self) -> PyResult<usize> {
        self.inner.diameter().map_err(to_py)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, size={})",
            self.inner.order(),
            self.inner.size()
        )
    }
}

#[pyclass(name = "BoundReport", module = "pywordrep", frozen, get_all)]
struct PyBoundReport {
    construction: String,
    word: Vec<String>,
    achieved_length: usize,
    bound_value: usize,
    bound_holds: bool,
    verified_represents: bool,
    root: Option<String>,
    certified_minimal: bool,
    g_vertices: usize,
    h_vertices: usize,
    wg_length: usize,
    wh_length: usize,
    json: String,
}

impl From<wordrep::BoundReport> for PyBoundReport {
    fn from(r: wordrep::BoundReport) -> Self {
        PyBoundReport {
            construction: r.construction.tag().to_string(),
            word: names(&r.word),
            achieved_length: r.achieved_length,
            bound_value: r.bound_value,
            bound_holds: r.bound_holds,
            verified_represents: r.verified_represents,
            root: r.root.as_ref().map(|x| x.to_string()),
            certified_minimal: r.certified_minimal,
            g_vertices: r.factors.g_vertices,
            h_vertices: r.factors.h_vertices,
            wg_length: r.factors.wg_length,
            wh_length: r.factors.wh_length,
            json: r.to_json(),
        }
    }
}

#[pymethods]
impl PyBoundReport {
    fn is_success(&self) -> bool {
        self.verified_represents && self.bound_holds
    }

    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "BoundReport({}, length={}, bound={}, represents={})",
            self.construction, self.achieved_length, self.bound_value, self.verified_represents
        )
    }
}

type Report = PyResult<PyBoundReport>;

#[pyfunction]
fn alternates(word: WordArg, x: &str, y: &str) -> PyResult<bool> {
    word.word()?
        .alternates(&letter(x)?, &letter(y)?)
        .map_err(to_py)
}

#[pyfunction]
fn restrict(word: WordArg, keep: Vec<String>) -> PyResult<Vec<String>> {
    let keep = keep
        .iter()
        .map(|n| letter(n))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(names(&word.word()?.restrict(&keep)))
}

#[pyfunction]
fn initial_permutation(word: WordArg) -> PyResult<Vec<String>> {
    word.word()?
        .initial_permutation()
        .map(|w| names(&w))
        .map_err(to_py)
}

#[pyfunction]
fn final_permutation(word: WordArg) -> PyResult<Vec<String>> {
    word.word()?
        .final_permutation()
        .map(|w| names(&w))
        .map_err(to_py)
}

#[pyfunction]
fn reverse(word: WordArg) -> PyResult<Vec<String>> {
    Ok(names(&word.word()?.reverse()))
}

#[pyfunction]
fn occurrence_class(word: WordArg, i: usize) -> PyResult<Vec<String>> {
    let class = word.word()?.occurrence_class(i).map_err(to_py)?;
    Ok(class.iter().map(|x| x.to_string()).collect())
}

#[pyfunction]
fn label_occurrences(word: WordArg) -> PyResult<Vec<(String, usize)>> {
    Ok(rooted::label_occurrences(&word.word()?)
        .into_iter()
        .map(|o| (o.letter.to_string(), o.index))
        .collect())
}

#[pyfunction]
fn morphism_g(w_g: WordArg, w_h: WordArg) -> PyResult<Vec<String>> {
    cartesian::morphism_g(&w_g.word()?, &w_h.word()?)
        .map(|w| names(&w))
        .map_err(to_py)
}

#[pyfunction]
fn morphism_j(w_g: WordArg, w_h: WordArg) -> PyResult<Vec<String>> {
    cartesian::morphism_j(&w_g.word()?, &w_h.word()?)
        .map(|w| names(&w))
        .map_err(to_py)
}

#[pyfunction]
fn cartesian_product(g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    products::cartesian_product(&g.inner, &h.inner)
        .map(|inner| PyGraph { inner })
        .map_err(to_py)
}

#[pyfunction]
fn rooted_product(g: &PyGraph, h: &PyGraph, root: &str) -> PyResult<PyGraph> {
    products::rooted_product(&g.inner, &h.inner, &letter(root)?)
        .map(|inner| PyGraph { inner })
        .map_err(to_py)
}

#[pyfunction]
fn construct_g_k2(g: &PyGraph, w_g: WordArg) -> Report {
    Ok(cartesian::construct_g_k2(&g.inner, &w_g.word()?)
        .map_err(to_py)?
        .into())
}

#[pyfunction]
fn construct_kn_k2(n: usize) -> Report {
    Ok(cartesian::construct_kn_k2(n).map_err(to_py)?.into())
}

#[pyfunction]
fn construct_g_kn(g: &PyGraph, w_g: WordArg, n: usize) -> Report {
    Ok(cartesian::construct_g_kn(&g.inner, &w_g.word()?, n)
        .map_err(to_py)?
        .into())
}

#[pyfunction]
fn construct_g_h(g: &PyGraph, w_g: WordArg, h: &PyGraph, w_h: WordArg) -> Report {
    Ok(
        cartesian::construct_g_h(&g.inner, &w_g.word()?, &h.inner, &w_h.word()?)
            .map_err(to_py)?
            .into(),
    )
}

#[pyfunction]
fn construct_rooted_k2(g: &PyGraph, w_g: WordArg) -> Report {
    Ok(rooted::construct_rooted_k2(&g.inner, &w_g.word()?)
        .map_err(to_py)?
        .into())
}

#[pyfunction]
fn construct_rooted_kn(g: &PyGraph, w_g: WordArg, n: usize) -> Report {
    Ok(rooted::construct_rooted_kn(&g.inner, &w_g.word()?, n)
        .map_err(to_py)?
        .into())
}

#[pyfunction]
fn construct_rooted_h(g: &PyGraph, w_g: WordArg, h: &PyGraph, w_h: WordArg, root: &str) -> Report {
    Ok(rooted::construct_rooted_h(
        &g.inner,
        &w_g.word()?,
        &h.inner,
        &w_h.word()?,
        &letter(root)?,
    )
    .map_err(to_py)?
    .into())
}

fn budget(
    g: &PyGraph,
    max_length: Option<usize>,
    max_uniform_k: Option<usize>,
    max_states: Option<u64>,
) -> SearchBudget {
    let mut budget = SearchBudget::for_graph(&g.inner);
    if let Some(v) = max_length {
        budget.max_length = v;
    }
    if let Some(v) = max_uniform_k {
        budget.max_uniform_k = v;
    }
    if let Some(v) = max_states {
        budget.max_states = v;
    }
    budget
}

/// `(word, length)` of the lexicographically first minimum-length
/// representant, or `None` when nothing fits within `max_length`.
#[pyfunction]
#[pyo3(signature = (g, max_length=None, max_states=None, threads=None, first=None))]
fn min_length_word(
    py: Python<'_>,
    g: &PyGraph,
    max_length: Option<usize>,
    max_states: Option<u64>,
    threads: Option<usize>,
    first: Option<&str>,
) -> PyResult<Option<(Vec<String>, usize)>> {
    let budget = budget(g, max_length, None, max_states);
    let first = first.map(letter).transpose()?;
    let found = py.detach(|| match &first {
        Some(first) => oracle::min_length_word_starting_with(&g.inner, first, &budget),
        None => oracle::min_length_word_with(
            &g.inner,
            &budget,
            &SearchOptions {
                threads,
                symmetry_reduction: false,
            },
        ),
    });
    Ok(found.map_err(to_py)?.map(|(w, len)| (names(&w), len)))
}

/// `(k, word)` for the least uniform `k`, or `None` above `max_uniform_k`.
#[pyfunction]
#[pyo3(signature = (g, max_uniform_k=None, max_states=None))]
fn representation_number(
    py: Python<'_>,
    g: &PyGraph,
    max_uniform_k: Option<usize>,
    max_states: Option<u64>,
) -> PyResult<Option<(usize, Vec<String>)>> {
    let budget = budget(g, None, max_uniform_k, max_states);
    let found = py.detach(|| oracle::representation_number(&g.inner, &budget));
    Ok(found.map_err(to_py)?.map(|(k, w)| (k, names(&w))))
}

#[pyfunction]
fn minimal_word_audit<'py>(
    py: Python<'py>,
    g: &PyGraph,
    word: WordArg,
) -> PyResult<Bound<'py, PyDict>> {
    let audit = oracle::minimal_word_audit(&g.inner, &word.word()?).map_err(to_py)?;
    let record = PyDict::new(py);
    record.set_item("l", audit.l)?;
    record.set_item("word", names(&audit.word))?;
    record.set_item("singletons", audit.singletons)?;
    record.set_item("clique_number", audit.clique_number)?;
    record.set_item("o_min", audit.o_min)?;
    record.set_item("o_max", audit.o_max)?;
    record.set_item("diameter", audit.diameter)?;
    record.set_item("lemma_kap_holds", audit.lemma_kap_holds)?;
    record.set_item("theorem_di_holds", audit.theorem_di_holds)?;
    Ok(record)
}

#[pymodule]
fn pywordrep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyBoundReport>()?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add_function(wrap_pyfunction!(alternates, m)?)?;
    m.add_function(wrap_pyfunction!(restrict, m)?)?;
    m.add_function(wrap_pyfunction!(initial_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(final_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(reverse, m)?)?;
    m.add_function(wrap_pyfunction!(occurrence_class, m)?)?;
    m.add_function(wrap_pyfunction!(label_occurrences, m)?)?;
    m.add_function(wrap_pyfunction!(morphism_g, m)?)?;
    m.add_function(wrap_pyfunction!(morphism_j, m)?)?;
    m.add_function(wrap_pyfunction!(cartesian_product, m)?)?;
    m.add_function(wrap_pyfunction!(rooted_product, m)?)?;
    m.add_function(wrap_pyfunction!(construct_g_k2, m)?)?;
    m.add_function(wrap_pyfunction!(construct_kn_k2, m)?)?;
    m.add_function(wrap_pyfunction!(construct_g_kn, m)?)?;
    m.add_function(wrap_pyfunction!(construct_g_h, m)?)?;
    m.add_function(wrap_pyfunction!(construct_rooted_k2, m)?)?;
    m.add_function(wrap_pyfunction!(construct_rooted_kn, m)?)?;
    m.add_function(wrap_pyfunction!(construct_rooted_h, m)?)?;
    m.add_function(wrap_pyfunction!(min_length_word, m)?)?;
    m.add_function(wrap_pyfunction!(representation_number, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_word_audit, m)?)?;
    Ok(())
}
