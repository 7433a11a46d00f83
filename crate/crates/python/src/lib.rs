//! Python bindings. Vertices and colors are 0-based here, unlike the text
//! format. Weights cross the boundary as `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use p5hom::{
    Color, ColorSet, Density, Error, GenSpec, Graph, GraphFamily, PatternSpec, SolveOptions, Vertex, VertexSet,
    WeightedGraph,
};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NotP5Free(w) => PyValueError::new_err(format!("graph is not P5-free: induced P5 {w:?}")),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, w: &p5hom::Weight) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((p5hom::format_weight(w),))
}

/// Accepts int, str (`"3/2"`) or anything whose `str()` parses, such as
/// `Fraction`.
fn weight_arg(obj: &Bound<'_, PyAny>) -> PyResult<p5hom::Weight> {
    let text = obj.str()?.to_string();
    let w = p5hom::parse_weight(text.trim()).map_err(to_py_err)?;
    Ok(w)
}

/// A list-coloring instance: graph, pattern, weights and lists.
#[pyclass(name = "Instance", module = "p5hom_py")]
struct PyInstance {
    inner: p5hom::Instance,
}

#[pyclass(name = "Solution", module = "p5hom_py")]
struct PySolution {
    inner: p5hom::Solution,
}

fn options(parallel: usize, budget: Option<u64>) -> SolveOptions {
    SolveOptions::exhaustive().with_parallel(parallel).with_budget(budget)
}

#[pymethods]
impl PyInstance {
    /// `pattern` is a spec such as `"K3"`, `"P4"` or `"edges:3:1-2,2-3"`.
    #[new]
    #[pyo3(signature = (n, edges, pattern, weights=None, lists=None))]
    fn new(
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
        pattern: &str,
        weights: Option<Vec<Bound<'_, PyAny>>>,
        lists: Option<Vec<Vec<Color>>>,
    ) -> PyResult<Self> {
        let pattern = pattern.parse::<PatternSpec>().and_then(|p| p.build()).map_err(to_py_err)?;
        let graph = Graph::from_edges(n, edges).map_err(to_py_err)?;
        let mut inst = p5hom::Instance::new(graph, pattern);
        if let Some(weights) = weights {
            let weights = weights.iter().map(weight_arg).collect::<PyResult<Vec<_>>>()?;
            inst = inst.with_weights(weights).map_err(to_py_err)?;
        }
        if let Some(lists) = lists {
            let k = inst.k();
            let mut sets = Vec::with_capacity(lists.len());
            for list in lists {
                if let Some(&c) = list.iter().find(|&&c| c >= k) {
                    return Err(to_py_err(Error::ColorOutOfRange { color: c, k }));
                }
                sets.push(list.into_iter().collect::<ColorSet>());
            }
            inst = inst.with_lists(sets).map_err(to_py_err)?;
        }
        Ok(PyInstance { inner: inst })
    }

    /// Parses the line-oriented text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyInstance { inner: p5hom::parse_instance(text).map_err(to_py_err)? })
    }

    fn to_text(&self) -> String {
        p5hom::write_instance(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.graph.edges().collect()
    }

    #[getter]
    fn lists(&self) -> Vec<Vec<Color>> {
        self.inner.lists().iter().map(|l| l.iter().collect()).collect()
    }

    #[getter]
    fn weights<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner.weights().iter().map(|w| fraction(py, w)).collect()
    }

    fn find_induced_p5(&self) -> Option<Vec<Vertex>> {
        self.inner.graph.find_induced_p5().map(|p| p.to_vec())
    }

    fn is_p5_free(&self) -> bool {
        self.inner.graph.find_induced_p5().is_none()
    }

    /// Exact optimum. Raises `ValueError` if the graph has an induced P5.
    #[pyo3(signature = (parallel=1, budget=None))]
    fn solve(&self, py: Python<'_>, parallel: usize, budget: Option<u64>) -> PyResult<PySolution> {
        let inst = &self.inner;
        let outcome = py.detach(|| p5hom::solve_full_with(inst, &options(parallel, budget))).map_err(to_py_err)?;
        Ok(PySolution { inner: outcome.solution })
    }

    /// Connected-case solver only.
    #[pyo3(signature = (parallel=1, budget=None))]
    fn solve_connected(&self, py: Python<'_>, parallel: usize, budget: Option<u64>) -> PySolution {
        let inst = &self.inner;
        let outcome = py.detach(|| p5hom::solve_connected_case_with(inst, &options(parallel, budget)));
        PySolution { inner: outcome.value }
    }

    /// Exhaustive reference solver, no size cap.
    fn oracle(&self, py: Python<'_>) -> PyResult<PySolution> {
        let inst = &self.inner;
        let sol = py.detach(|| p5hom::oracle_solve_capped(inst, None)).map_err(to_py_err)?;
        Ok(PySolution { inner: sol })
    }

    /// Family members as sorted vertex lists.
    fn family(&self) -> PyResult<Vec<Vec<Vertex>>> {
        let family = p5hom::build_family(&self.inner).map_err(to_py_err)?;
        let mut members: Vec<Vec<Vertex>> = family.members().iter().map(VertexSet::to_vec).collect();
        members.sort();
        Ok(members)
    }

    /// `None` if valid, otherwise a description of the first violation.
    fn verify(&self, solution: &PySolution) -> Option<String> {
        p5hom::verify_solution(&self.inner, &solution.inner).err().map(|v| v.to_string())
    }

    fn __eq__(&self, other: &PyInstance) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Instance(n={}, k={}, edges={})", self.inner.n(), self.inner.k(), self.inner.graph.edge_count())
    }
}

#[pymethods]
impl PySolution {
    #[getter]
    fn weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.weight)
    }

    /// `{vertex: color}`.
    #[getter]
    fn coloring<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let dict = PyDict::new(py);
        for (&v, &c) in &self.inner.coloring {
            dict.set_item(v, c)?;
        }
        Ok(dict)
    }

    fn to_text(&self) -> String {
        p5hom::write_solution(&self.inner)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PySolution { inner: p5hom::parse_solution(text).map_err(to_py_err)? })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Solution(weight={}, size={})", p5hom::format_weight(&self.inner.weight), self.inner.len())
    }
}

/// Seeded random P5-free instance; same arguments give the same instance.
#[pyfunction]
#[pyo3(signature = (family, n, pattern, seed, density="1/2", list_density="1", max_weight=1, max_denominator=1))]
#[allow(clippy::too_many_arguments)]
fn generate(
    family: &str,
    n: usize,
    pattern: &str,
    seed: u64,
    density: &str,
    list_density: &str,
    max_weight: u32,
    max_denominator: u32,
) -> PyResult<PyInstance> {
    let family: GraphFamily = family.parse().map_err(to_py_err)?;
    let pattern: PatternSpec = pattern.parse().map_err(to_py_err)?;
    let mut spec = GenSpec::new(family, n, pattern, seed);
    spec.density = density.parse::<Density>().map_err(to_py_err)?;
    spec.list_density = list_density.parse::<Density>().map_err(to_py_err)?;
    spec.weight_numerators = (1, max_weight);
    spec.max_denominator = max_denominator;
    Ok(PyInstance { inner: p5hom::generate(&spec).map_err(to_py_err)? })
}

/// Maximum-weight independent set; returns `(vertices, weight)`.
#[pyfunction]
fn solve_mwis<'py>(
    py: Python<'py>,
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    weights: Vec<Bound<'py, PyAny>>,
) -> PyResult<(Vec<Vertex>, Bound<'py, PyAny>)> {
    let graph = Graph::from_edges(n, edges).map_err(to_py_err)?;
    let weights = weights.iter().map(weight_arg).collect::<PyResult<Vec<_>>>()?;
    if weights.len() != n {
        return Err(PyValueError::new_err(format!("expected {n} weights, got {}", weights.len())));
    }
    let (set, weight) = p5hom::solve_mwis(&WeightedGraph::new(graph, weights));
    Ok((set.to_vec(), fraction(py, &weight)?))
}

#[pymodule]
fn p5hom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(solve_mwis, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
