//! Python bindings: `Matrix`, `Graph`, `Digraph` and `TreeDecomposition` wrappers
//! around the exact engines and their oracles.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use twcount::ccdp::{self, Limits};
use twcount::gadget::{ord_gadget_variant, OrdVariant};
use twcount::io::{self, GraphFile};
use twcount::nice::{make_nice, NiceTreeDecomposition};
use twcount::{
    algebra, counting, heuristic_tree_decomposition, oracle, validate_tree_decomposition, DirectedMultigraph,
    SquareIntMatrix, UnderlyingGraph, UndirectedMultigraph,
};

create_exception!(twcount_py, TwcountError, PyValueError, "Raised when an engine or oracle rejects its input.");

fn err(e: twcount::Error) -> PyErr {
    TwcountError::new_err(format!("{}: {e}", e.name()))
}

fn parse_err(e: io::ParseError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn limits(max_width: Option<usize>) -> Limits {
    max_width.map_or_else(Limits::default, Limits::with_max_width)
}

fn decomposition<G: UnderlyingGraph>(g: &G, td: Option<&TreeDecomposition>) -> twcount::TreeDecomposition {
    td.map_or_else(|| heuristic_tree_decomposition(g), |t| t.inner.clone())
}

fn nice<G: UnderlyingGraph>(g: &G, td: Option<&TreeDecomposition>) -> PyResult<NiceTreeDecomposition> {
    make_nice(g, &decomposition(g, td)).map_err(err)
}

/// A tree decomposition: bags of 0-based vertex ids plus tree edges between bag indices.
#[pyclass(module = "twcount_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct TreeDecomposition {
    inner: twcount::TreeDecomposition,
}

#[pymethods]
impl TreeDecomposition {
    #[new]
    fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition {
            inner: twcount::TreeDecomposition::new(bags, tree_edges),
        }
    }

    #[getter]
    fn bags(&self) -> Vec<Vec<usize>> {
        self.inner.bags().to_vec()
    }

    #[getter]
    fn tree_edges(&self) -> Vec<(usize, usize)> {
        self.inner.tree_edges().to_vec()
    }

    #[getter]
    fn width(&self) -> usize {
        self.inner.width()
    }

    fn __repr__(&self) -> String {
        format!("TreeDecomposition(bags={}, width={})", self.inner.bags().len(), self.inner.width())
    }
}

/// Square integer matrix; entries are arbitrary-precision Python ints.
#[pyclass(module = "twcount_py", frozen)]
pub struct Matrix {
    inner: SquareIntMatrix,
}

#[pymethods]
impl Matrix {
    #[new]
    fn new(rows: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(Matrix {
            inner: SquareIntMatrix::from_rows(rows).map_err(err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Matrix {
            inner: io::parse_matrix(text).map_err(parse_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.inner.rows().map(<[BigInt]>::to_vec).collect()
    }

    fn heuristic_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition {
            inner: heuristic_tree_decomposition(&self.inner),
        }
    }

    #[pyo3(signature = (td=None, max_width=None))]
    fn determinant(&self, td: Option<&TreeDecomposition>, max_width: Option<usize>) -> PyResult<BigInt> {
        let nt = nice(&self.inner, td)?;
        ccdp::determinant(&self.inner, &nt, limits(max_width)).map_err(err)
    }

    /// Coefficients of det(xI - A), constant term first.
    #[pyo3(signature = (td=None, max_width=None))]
    fn characteristic_polynomial(
        &self,
        td: Option<&TreeDecomposition>,
        max_width: Option<usize>,
    ) -> PyResult<Vec<BigInt>> {
        let nt = nice(&self.inner, td)?;
        let chi = ccdp::characteristic_polynomial(&self.inner, &nt, limits(max_width)).map_err(err)?;
        Ok(chi.coeffs().to_vec())
    }

    #[pyo3(signature = (k, td=None, max_width=None))]
    fn trace_power(&self, k: usize, td: Option<&TreeDecomposition>, max_width: Option<usize>) -> PyResult<BigInt> {
        let nt = nice(&self.inner, td)?;
        algebra::trace_power(&self.inner, &nt, k, limits(max_width)).map_err(err)
    }

    /// Weighted cycle covers by number of cycles, as `{k: total weight}`.
    #[pyo3(signature = (td=None, max_width=None))]
    fn cycle_cover_histogram(
        &self,
        td: Option<&TreeDecomposition>,
        max_width: Option<usize>,
    ) -> PyResult<BTreeMap<usize, BigInt>> {
        let nt = nice(&self.inner, td)?;
        let h = ccdp::weighted_cycle_cover_histogram(&self.inner, &nt, limits(max_width)).map_err(err)?;
        Ok(h.counts().clone())
    }

    fn det_permutation_expansion(&self) -> PyResult<BigInt> {
        oracle::det_permutation_expansion(&self.inner).map_err(err)
    }

    fn det_fraction_free(&self) -> BigInt {
        oracle::det_fraction_free(&self.inner)
    }

    fn charpoly_interpolation(&self) -> Vec<BigInt> {
        oracle::charpoly_interpolation(&self.inner).coeffs().to_vec()
    }

    fn matrix_power_trace(&self, k: usize) -> BigInt {
        oracle::matrix_power_trace(&self.inner, k)
    }

    fn __repr__(&self) -> String {
        format!("Matrix(n={})", self.inner.n())
    }
}

/// Undirected multigraph on vertices `0..n`; repeated edges are parallel edges.
#[pyclass(module = "twcount_py", frozen)]
pub struct Graph {
    inner: UndirectedMultigraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: UndirectedMultigraph::new(n, edges).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn heuristic_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition {
            inner: heuristic_tree_decomposition(&self.inner),
        }
    }

    /// Width of `td` if it is a valid decomposition of this graph.
    fn validate(&self, td: &TreeDecomposition) -> PyResult<usize> {
        validate_tree_decomposition(&self.inner, &td.inner).map_err(err)
    }

    #[pyo3(signature = (td=None, max_width=None))]
    fn spanning_trees(&self, td: Option<&TreeDecomposition>, max_width: Option<usize>) -> PyResult<BigInt> {
        let t = decomposition(&self.inner, td);
        counting::count_spanning_trees(&self.inner, &t, limits(max_width)).map_err(err)
    }

    /// Euler circuits up to rotation and reversal.
    #[pyo3(signature = (max_width=None))]
    fn euler_tours(&self, max_width: Option<usize>) -> PyResult<BigInt> {
        counting::count_undirected_euler_tours(&self.inner, limits(max_width)).map_err(err)
    }

    fn enumerate_spanning_trees(&self) -> PyResult<BigInt> {
        oracle::enumerate_spanning_trees(&self.inner).map_err(err)
    }

    fn enumerate_euler_tours(&self) -> PyResult<BigInt> {
        oracle::enumerate_undirected_euler_tours(&self.inner).map_err(err)
    }

    fn bidirected(&self) -> Digraph {
        Digraph {
            inner: self.inner.bidirected(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.vertex_count(), self.inner.edges().len())
    }
}

/// Directed multigraph on vertices `0..n`; loops and parallel arcs are allowed.
#[pyclass(module = "twcount_py", frozen)]
pub struct Digraph {
    inner: DirectedMultigraph,
}

#[pymethods]
impl Digraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Digraph {
            inner: DirectedMultigraph::new(n, arcs).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().to_vec()
    }

    fn adjacency_matrix(&self) -> Matrix {
        Matrix {
            inner: self.inner.adjacency_matrix(),
        }
    }

    fn heuristic_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition {
            inner: heuristic_tree_decomposition(&self.inner),
        }
    }

    /// Cycle covers by number of cycles, counting parallel arcs separately.
    #[pyo3(signature = (td=None, max_width=None))]
    fn cycle_cover_histogram(
        &self,
        td: Option<&TreeDecomposition>,
        max_width: Option<usize>,
    ) -> PyResult<BTreeMap<usize, BigInt>> {
        let nt = nice(&self.inner, td)?;
        let h = ccdp::cycle_cover_histogram(&self.inner, &nt, limits(max_width)).map_err(err)?;
        Ok(h.counts().clone())
    }

    /// Spanning arborescences with every arc pointing toward `root`.
    #[pyo3(signature = (root, td=None, max_width=None))]
    fn arborescences(&self, root: usize, td: Option<&TreeDecomposition>, max_width: Option<usize>) -> PyResult<BigInt> {
        let t = decomposition(&self.inner, td);
        counting::count_arborescences(&self.inner, root, &t, limits(max_width)).map_err(err)
    }

    /// Euler circuits up to rotation.
    #[pyo3(signature = (max_width=None))]
    fn euler_tours(&self, max_width: Option<usize>) -> PyResult<BigInt> {
        counting::count_directed_euler_tours(&self.inner, limits(max_width)).map_err(err)
    }

    fn enumerate_cycle_covers(&self) -> PyResult<BTreeMap<usize, BigInt>> {
        Ok(oracle::enumerate_cycle_covers(&self.inner).map_err(err)?.counts().clone())
    }

    fn enumerate_arborescences(&self, root: usize) -> PyResult<BigInt> {
        oracle::enumerate_arborescences(&self.inner, root).map_err(err)
    }

    fn enumerate_euler_tours(&self) -> PyResult<BigInt> {
        oracle::enumerate_directed_euler_tours(&self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.vertex_count(), self.inner.arcs().len())
    }
}

/// Parse a `p tw` or `p dgr` graph file into a `Graph` or `Digraph`.
#[pyfunction]
fn parse_graph(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(match io::parse_graph(text).map_err(parse_err)? {
        GraphFile::Undirected(g) => Py::new(py, Graph { inner: g })?.into_any(),
        GraphFile::Directed(d) => Py::new(py, Digraph { inner: d })?.into_any(),
    })
}

/// Ordering gadget on the path `0..n-1` with inner vertices `s != t`.
#[pyfunction]
#[pyo3(signature = (n, s, t, variant="reconciled"))]
fn ord_gadget(n: usize, s: usize, t: usize, variant: &str) -> PyResult<Digraph> {
    let variant = match variant {
        "literal" => OrdVariant::Literal,
        "reconciled" => OrdVariant::Reconciled,
        other => return Err(PyValueError::new_err(format!("unknown variant '{other}'"))),
    };
    Ok(Digraph {
        inner: ord_gadget_variant(n, s, t, variant).map_err(err)?,
    })
}

#[pymodule]
fn twcount_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TwcountError", m.py().get_type::<TwcountError>())?;
    m.add_class::<TreeDecomposition>()?;
    m.add_class::<Matrix>()?;
    m.add_class::<Graph>()?;
    m.add_class::<Digraph>()?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(ord_gadget, m)?)?;
    Ok(())
}
