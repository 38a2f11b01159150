use std::io::BufReader;
use std::time::Duration;

use balanced_biclique::bbwc::wedge_type as core_wedge_type;
use balanced_biclique::ingest::{
    self, canonical_string, generate_random_bigraph, EdgeBudget, GeneratorParams, IngestError, IngestSpec, RatingRule,
};
use balanced_biclique::oracle::{self, Biclique, DEFAULT_SIZE_CAP};
use balanced_biclique::{
    count_balanced, Algorithm, AnchorSide, CandidateDirection, CountError, CountOptions, Side, Sign,
    SignedBipartiteGraph, VertexRef,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyIOError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(pybbcount, CountOverflowError, PyRuntimeError);
create_exception!(pybbcount, TimeLimitError, PyRuntimeError);

fn count_err(e: CountError) -> PyErr {
    match e {
        CountError::Overflow => CountOverflowError::new_err(e.to_string()),
        CountError::TimeLimitExceeded(_) => TimeLimitError::new_err(e.to_string()),
        CountError::ThreadPool(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ingest_err(e: IngestError) -> PyErr {
    match e {
        IngestError::Io(_) => PyIOError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sign_from_int(s: i64) -> PyResult<Sign> {
    match s {
        1 => Ok(Sign::Positive),
        0 | -1 => Ok(Sign::Negative),
        _ => Err(PyValueError::new_err(format!(
            "sign must be 1 (positive) or 0/-1 (negative), got {s}"
        ))),
    }
}

fn sign_to_int(s: Sign) -> i8 {
    match s {
        Sign::Positive => 1,
        Sign::Negative => -1,
    }
}

fn parse_side(s: &str) -> PyResult<Side> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        _ => Err(PyValueError::new_err(format!(
            "side must be 'left' or 'right', got '{s}'"
        ))),
    }
}

fn matrix(rows: Vec<Vec<i64>>) -> PyResult<Biclique> {
    let p = rows.len();
    let q = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != q) {
        return Err(PyValueError::new_err("sign matrix rows must have equal length"));
    }
    let signs = rows
        .into_iter()
        .flatten()
        .map(sign_from_int)
        .collect::<PyResult<Vec<_>>>()?;
    Ok(Biclique::from_matrix(p, q, signs))
}

/// Signed bipartite graph with dense 0-based vertex indices per side.
///
/// Signs are `1` for positive and `-1` (or `0`) for negative edges.
#[pyclass(name = "SignedBipartiteGraph", module = "pybbcount", frozen)]
struct PyGraph {
    inner: SignedBipartiteGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (edges, left=None, right=None))]
    fn new(edges: Vec<(u32, u32, i64)>, left: Option<usize>, right: Option<usize>) -> PyResult<Self> {
        let edges = edges
            .into_iter()
            .map(|(u, v, s)| Ok((u, v, sign_from_int(s)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let m = left.unwrap_or_else(|| edges.iter().map(|e| e.0 as usize + 1).max().unwrap_or(0));
        let n = right.unwrap_or_else(|| edges.iter().map(|e| e.1 as usize + 1).max().unwrap_or(0));
        let inner = SignedBipartiteGraph::with_counts(m, n, &edges).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    /// Parses text in one of `canonical`, `edgelist`, `ratings`, `unsigned`.
    #[staticmethod]
    #[pyo3(signature = (text, format="canonical", pos_rule=None, p_pos=0.7, seed=0))]
    fn parse(text: &str, format: &str, pos_rule: Option<&str>, p_pos: f64, seed: u64) -> PyResult<Self> {
        let spec = match format {
            "canonical" => IngestSpec::canonical(),
            "edgelist" => IngestSpec::signed(),
            "ratings" => {
                let rule: RatingRule = pos_rule
                    .ok_or_else(|| PyValueError::new_err("format 'ratings' needs pos_rule"))?
                    .parse()
                    .map_err(value_err)?;
                IngestSpec::rated(rule)
            }
            "unsigned" => IngestSpec::unsigned(p_pos, seed),
            other => return Err(PyValueError::new_err(format!("unknown format '{other}'"))),
        };
        spec.validate().map_err(ingest_err)?;
        let ingested = ingest::ingest(text.as_bytes(), &spec).map_err(ingest_err)?;
        Ok(PyGraph { inner: ingested.graph })
    }

    #[staticmethod]
    fn read_canonical(path: &str) -> PyResult<Self> {
        let file = std::fs::File::open(path).map_err(|e| PyIOError::new_err(format!("{path}: {e}")))?;
        let inner = ingest::read_canonical(BufReader::new(file)).map_err(ingest_err)?;
        Ok(PyGraph { inner })
    }

    /// Random graph; give exactly one of `density` and `edges`.
    #[staticmethod]
    #[pyo3(signature = (left, right, density=None, edges=None, p_pos=0.7, seed=0))]
    fn generate(
        left: usize,
        right: usize,
        density: Option<f64>,
        edges: Option<usize>,
        p_pos: f64,
        seed: u64,
    ) -> PyResult<Self> {
        let budget = match (density, edges) {
            (Some(d), None) => EdgeBudget::Density(d),
            (None, Some(k)) => EdgeBudget::Exact(k),
            _ => return Err(PyValueError::new_err("give exactly one of density and edges")),
        };
        let inner = generate_random_bigraph(GeneratorParams {
            left,
            right,
            edges: budget,
            p_pos,
            seed,
        })
        .map_err(ingest_err)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn left_count(&self) -> usize {
        self.inner.left_count()
    }

    #[getter]
    fn right_count(&self) -> usize {
        self.inner.right_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(u32, u32, i8)> {
        self.inner.edges().map(|(u, v, s)| (u, v, sign_to_int(s))).collect()
    }

    fn edge_sign(&self, left: u32, right: u32) -> Option<i8> {
        self.inner.edge_sign(left, right).map(sign_to_int)
    }

    /// Neighbors of a vertex as `(index, sign)`, highest priority first.
    fn neighbors(&self, side: &str, index: u32) -> PyResult<Vec<(u32, i8)>> {
        let side = parse_side(side)?;
        if index as usize >= self.inner.count(side) {
            return Err(PyValueError::new_err(format!("{side} vertex {index} out of range")));
        }
        Ok(self
            .inner
            .neighbors(side, index)
            .iter()
            .map(|n| (n.vertex, sign_to_int(n.sign)))
            .collect())
    }

    fn priority_gt(&self, side: &str, a: u32, b: u32) -> PyResult<bool> {
        let side = parse_side(side)?;
        let count = self.inner.count(side);
        if a as usize >= count || b as usize >= count {
            return Err(PyValueError::new_err(format!("{side} vertex out of range")));
        }
        self.inner
            .priority_gt(VertexRef { side, index: a }, VertexRef { side, index: b })
            .map_err(value_err)
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.stats();
        let d = PyDict::new(py);
        d.set_item("left_count", s.left_count)?;
        d.set_item("right_count", s.right_count)?;
        d.set_item("edge_count", s.edge_count)?;
        d.set_item("positive_edges", s.positive_edges)?;
        d.set_item("negative_edges", s.negative_edges)?;
        d.set_item("max_degree", s.max_degree)?;
        d.set_item("left_degree_histogram", s.left_degree_histogram)?;
        d.set_item("right_degree_histogram", s.right_degree_histogram)?;
        Ok(d)
    }

    fn to_canonical(&self) -> String {
        canonical_string(&self.inner)
    }

    fn write_canonical(&self, path: &str) -> PyResult<()> {
        std::fs::write(path, canonical_string(&self.inner)).map_err(|e| PyIOError::new_err(format!("{path}: {e}")))
    }

    fn transposed(&self) -> Self {
        PyGraph {
            inner: self.inner.transposed(),
        }
    }

    fn sign_flipped(&self) -> Self {
        PyGraph {
            inner: self.inner.sign_flipped(),
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "SignedBipartiteGraph(left={}, right={}, edges={})",
            self.inner.left_count(),
            self.inner.right_count(),
            self.inner.edge_count()
        )
    }
}

/// Counts balanced (p,q)-bicliques; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (graph, p, q, algo="bbvp", anchor_side="auto", threads=1, time_limit=None, candidates="below"))]
#[allow(clippy::too_many_arguments)]
fn count<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    p: usize,
    q: usize,
    algo: &str,
    anchor_side: &str,
    threads: usize,
    time_limit: Option<f64>,
    candidates: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let algorithm: Algorithm = algo.parse().map_err(value_err)?;
    let anchor_side: AnchorSide = anchor_side.parse().map_err(value_err)?;
    let candidate_direction: CandidateDirection = candidates.parse().map_err(value_err)?;
    let time_limit = match time_limit {
        Some(t) if t.is_finite() && t > 0.0 => Some(Duration::from_secs_f64(t)),
        Some(t) => {
            return Err(PyValueError::new_err(format!(
                "time_limit must be positive seconds, got {t}"
            )))
        }
        None => None,
    };
    let opts = CountOptions {
        anchor_side,
        threads,
        time_limit,
        candidate_direction,
        ..Default::default()
    };
    let g = &graph.inner;
    let report = py
        .detach(|| count_balanced(g, algorithm, p, q, &opts))
        .map_err(count_err)?;

    let d = PyDict::new(py);
    d.set_item("algorithm", report.algorithm.name())?;
    d.set_item("p", report.p)?;
    d.set_item("q", report.q)?;
    d.set_item("anchor_side", report.anchor_side.to_string())?;
    d.set_item("count", report.count)?;
    let w = report.work;
    d.set_item("wedges", w.wedges)?;
    d.set_item("subsets", w.subsets)?;
    d.set_item("intersections", w.intersections)?;
    d.set_item("candidate_sets", w.candidate_sets)?;
    d.set_item("bicliques_materialized", w.bicliques_materialized)?;
    d.set_item("bicliques_rejected", w.bicliques_rejected)?;
    d.set_item("wall_seconds", report.wall.as_secs_f64())?;
    d.set_item("peak_mem_bytes", report.peak_mem_bytes)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (graph, p, q, cap=DEFAULT_SIZE_CAP))]
fn count_all_bruteforce(graph: &PyGraph, p: usize, q: usize, cap: usize) -> PyResult<u128> {
    oracle::count_all_bruteforce(&graph.inner, p, q, cap).map_err(count_err)
}

#[pyfunction]
#[pyo3(signature = (graph, p, q, cap=DEFAULT_SIZE_CAP))]
fn count_balanced_bruteforce(graph: &PyGraph, p: usize, q: usize, cap: usize) -> PyResult<u128> {
    oracle::count_balanced_bruteforce(&graph.inner, p, q, cap).map_err(count_err)
}

/// Whether a sign matrix (rows of 1 / -1) has no unbalanced butterfly.
#[pyfunction]
fn is_balanced_pairwise(signs: Vec<Vec<i64>>) -> PyResult<bool> {
    Ok(matrix(signs)?.is_balanced_pairwise())
}

/// Whether a sign matrix factors as row sign times column sign.
#[pyfunction]
fn is_balanced_rank1(signs: Vec<Vec<i64>>) -> PyResult<bool> {
    Ok(matrix(signs)?.is_balanced_rank1())
}

/// s/d label of the wedge centered at `center` with the given anchor and tail.
#[pyfunction]
fn wedge_type(graph: &PyGraph, side: &str, anchor: u32, center: u32, tail: Vec<u32>) -> PyResult<String> {
    let side = parse_side(side)?;
    let code = core_wedge_type(&graph.inner, side, anchor, center, &tail).map_err(value_err)?;
    Ok(code.label(tail.len()))
}

/// Signs `edges` independently with probability `p_pos` of positive.
#[pyfunction]
fn assign_random_signs(edges: Vec<(u32, u32)>, p_pos: f64, seed: u64) -> PyResult<PyGraph> {
    let inner = ingest::assign_random_signs(&edges, p_pos, seed).map_err(ingest_err)?;
    Ok(PyGraph { inner })
}

#[pymodule]
fn pybbcount(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(count_all_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(count_balanced_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(is_balanced_pairwise, m)?)?;
    m.add_function(wrap_pyfunction!(is_balanced_rank1, m)?)?;
    m.add_function(wrap_pyfunction!(wedge_type, m)?)?;
    m.add_function(wrap_pyfunction!(assign_random_signs, m)?)?;
    m.add("CountOverflowError", m.py().get_type::<CountOverflowError>())?;
    m.add("TimeLimitError", m.py().get_type::<TimeLimitError>())?;
    m.add("ALGORITHMS", Algorithm::ALL.map(Algorithm::name).to_vec())?;
    Ok(())
}
