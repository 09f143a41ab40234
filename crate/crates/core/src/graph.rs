//! Directed and undirected multigraphs with 0-based vertex ids.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::SquareIntMatrix;

/// Anything with a vertex count and an underlying simple undirected edge set.
///
/// Tree decompositions are always taken with respect to this underlying graph:
/// orientation, multiplicity and self-loops are forgotten.
pub trait UnderlyingGraph {
    fn vertex_count(&self) -> usize;

    /// Distinct pairs `(u, v)` with `u < v`, sorted.
    fn underlying_edges(&self) -> Vec<(usize, usize)>;
}

fn check_endpoint(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: n,
        })
    } else {
        Ok(())
    }
}

fn simple_pairs<'a>(pairs: impl Iterator<Item = &'a (usize, usize)>) -> Vec<(usize, usize)> {
    pairs
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// A directed multigraph; repeated arcs encode multiplicity, self-loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl DirectedMultigraph {
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &arcs {
            check_endpoint(u, vertex_count)?;
            check_endpoint(v, vertex_count)?;
        }
        Ok(DirectedMultigraph { vertex_count, arcs })
    }

    pub fn empty(vertex_count: usize) -> Self {
        DirectedMultigraph {
            vertex_count,
            arcs: Vec::new(),
        }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        check_endpoint(u, self.vertex_count)?;
        check_endpoint(v, self.vertex_count)?;
        self.arcs.push((u, v));
        Ok(())
    }

    /// Appends a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    /// Number of arcs `u -> v` (counting parallel copies).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.arcs.iter().filter(|&&a| a == (u, v)).count()
    }

    /// Out-degree counting self-loops.
    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    /// In-degree counting self-loops.
    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    /// Out-degree ignoring self-loops; this is the degree used by the Laplacian.
    pub fn loopless_out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v && a.1 != v).count()
    }

    /// Multiplicity adjacency matrix: entry `(i, j)` counts arcs `i -> j`.
    pub fn adjacency_matrix(&self) -> SquareIntMatrix {
        let mut m = SquareIntMatrix::zeros(self.vertex_count);
        for &(u, v) in &self.arcs {
            m[(u, v)] += 1;
        }
        m
    }

    pub fn reversed(&self) -> Self {
        DirectedMultigraph {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Copies the arcs into a graph on `vertex_count` vertices, renaming `v` to `label[v]`.
    pub fn relabel_into(&self, vertex_count: usize, label: &[usize]) -> Self {
        DirectedMultigraph {
            vertex_count,
            arcs: self.arcs.iter().map(|&(u, v)| (label[u], label[v])).collect(),
        }
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        DirectedMultigraph {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        }
    }
}

impl UnderlyingGraph for DirectedMultigraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn underlying_edges(&self) -> Vec<(usize, usize)> {
        simple_pairs(self.arcs.iter())
    }
}

/// An undirected multigraph; each edge is kept in input order with its endpoints as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedMultigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedMultigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            check_endpoint(u, vertex_count)?;
            check_endpoint(v, vertex_count)?;
        }
        Ok(UndirectedMultigraph {
            vertex_count,
            edges,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree with self-loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Replaces every edge `{u, v}` by the antiparallel pair `u -> v`, `v -> u`.
    pub fn bidirected(&self) -> DirectedMultigraph {
        let mut arcs = Vec::with_capacity(2 * self.edges.len());
        for &(u, v) in &self.edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        DirectedMultigraph {
            vertex_count: self.vertex_count,
            arcs,
        }
    }

    /// Orients edge `i` as given when `reverse[i]` is false and reversed otherwise.
    pub fn orient(&self, reverse: &[bool]) -> DirectedMultigraph {
        assert_eq!(reverse.len(), self.edges.len(), "one direction bit per edge");
        let arcs = self
            .edges
            .iter()
            .zip(reverse)
            .map(|(&(u, v), &r)| if r { (v, u) } else { (u, v) })
            .collect();
        DirectedMultigraph {
            vertex_count: self.vertex_count,
            arcs,
        }
    }
}

impl UnderlyingGraph for UndirectedMultigraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn underlying_edges(&self) -> Vec<(usize, usize)> {
        simple_pairs(self.edges.iter())
    }
}

impl UnderlyingGraph for SquareIntMatrix {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let pairs: Vec<_> = self.nonzero_positions().collect();
        simple_pairs(pairs.iter())
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::*;

    pub fn cycle(n: usize) -> UndirectedMultigraph {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        UndirectedMultigraph::new(n, edges).unwrap()
    }

    pub fn path(n: usize) -> UndirectedMultigraph {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        UndirectedMultigraph::new(n, edges).unwrap()
    }

    pub fn complete(n: usize) -> UndirectedMultigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        UndirectedMultigraph::new(n, edges).unwrap()
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> UndirectedMultigraph {
        UndirectedMultigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    pub fn directed_cycle(n: usize) -> DirectedMultigraph {
        DirectedMultigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    /// Every ordered pair of distinct vertices, no loops.
    pub fn complete_bidirected(n: usize) -> DirectedMultigraph {
        complete(n).bidirected()
    }
}
