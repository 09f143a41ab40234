//! Spanning trees, arborescences and Euler tours via Laplacian cofactors.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ccdp::{self, Limits};
use crate::construct::laplacian;
use crate::decomposition::{heuristic_tree_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UnderlyingGraph, UndirectedMultigraph};
use crate::nice::{make_nice, NiceTreeDecomposition};

/// Spanning arborescences oriented toward `root` (every arc points up the tree).
///
/// Computed as the `(root, root)` cofactor of the Laplacian. `t` must decompose
/// the underlying graph of `d`; it is restricted to `G - root` for the minor.
pub fn count_arborescences(
    d: &DirectedMultigraph,
    root: usize,
    t: &TreeDecomposition,
    limits: Limits,
) -> Result<BigInt> {
    let n = d.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            vertex_count: n,
        });
    }
    let minor = laplacian(d).delete_row_col(root);
    let nt = make_nice(&minor, &t.delete_vertex(root))?;
    ccdp::determinant(&minor, &nt, limits)
}

/// Kirchhoff count of spanning trees, rooted at vertex 0 of the bidirected graph.
///
/// Zero for disconnected graphs, including the empty graph.
pub fn count_spanning_trees(
    g: &UndirectedMultigraph,
    t: &TreeDecomposition,
    limits: Limits,
) -> Result<BigInt> {
    if g.vertex_count() == 0 {
        return Ok(BigInt::zero());
    }
    count_spanning_trees_at_root(g, 0, t, limits)
}

/// Spanning trees counted as arborescences toward `root`; the value does not depend on `root`.
pub fn count_spanning_trees_at_root(
    g: &UndirectedMultigraph,
    root: usize,
    t: &TreeDecomposition,
    limits: Limits,
) -> Result<BigInt> {
    count_arborescences(&g.bidirected(), root, t, limits)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Vertices touched by some edge, and whether those edges form one connected piece.
fn active_component(n: usize, pairs: &[(usize, usize)]) -> (Vec<usize>, bool) {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    let active: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    let Some(&start) = active.first() else {
        return (active, true);
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    let connected = reached == active.len();
    (active, connected)
}

fn compact_labels(n: usize, active: &[usize]) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    for (i, &v) in active.iter().enumerate() {
        label[v] = i;
    }
    label
}

/// Euler circuits of a directed multigraph, counted up to rotation (BEST theorem).
///
/// Returns 0 when some vertex is unbalanced, the arcs are not connected, or there
/// are no arcs. Isolated vertices are ignored.
pub fn count_directed_euler_tours(d: &DirectedMultigraph, limits: Limits) -> Result<BigInt> {
    let n = d.vertex_count();
    if d.arcs().is_empty() {
        return Ok(BigInt::zero());
    }
    if (0..n).any(|v| d.in_degree(v) != d.out_degree(v)) {
        return Ok(BigInt::zero());
    }
    let (active, connected) = active_component(n, d.arcs());
    if !connected {
        return Ok(BigInt::zero());
    }
    let label = compact_labels(n, &active);
    let k = d.relabel_into(active.len(), &label);
    let t = count_arborescences(&k, 0, &heuristic_tree_decomposition(&k), limits)?;
    let mult: BigInt = active.iter().map(|&v| factorial(d.out_degree(v) - 1)).product();
    Ok(t * mult)
}

/// Direction bits for the edges of an undirected graph, in edge order:
/// `false` keeps the edge as listed (`u -> v`), `true` reverses it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation(pub Vec<bool>);

impl Orientation {
    pub fn apply(&self, g: &UndirectedMultigraph) -> DirectedMultigraph {
        g.orient(&self.0)
    }

    /// Flips every direction bit (self-loops keep bit `false`).
    pub fn reversed(&self, g: &UndirectedMultigraph) -> Orientation {
        Orientation(
            self.0
                .iter()
                .zip(g.edges())
                .map(|(&b, &(u, v))| u != v && !b)
                .collect(),
        )
    }

    pub fn is_eulerian(&self, g: &UndirectedMultigraph) -> bool {
        let d = self.apply(g);
        (0..g.vertex_count()).all(|v| d.in_degree(v) == d.out_degree(v))
    }
}

/// Every Eulerian orientation exactly once, in lexicographic order of direction bits.
///
/// Empty when some degree is odd. Self-loops are balanced either way and always get bit `false`.
pub fn enumerate_eulerian_orientations(
    g: &UndirectedMultigraph,
    max_edges: usize,
) -> Result<Vec<Orientation>> {
    if g.degrees().iter().any(|d| d % 2 == 1) {
        return Ok(Vec::new());
    }
    let m = g.edges().len();
    if m > max_edges {
        return Err(Error::EdgeLimitExceeded {
            edges: m,
            limit: max_edges,
        });
    }
    let mut search = OrientationSearch {
        edges: g.edges(),
        remaining: g.degrees(),
        balance: vec![0; g.vertex_count()],
        bits: Vec::with_capacity(m),
        found: Vec::new(),
    };
    for &(u, v) in g.edges() {
        if u == v {
            search.remaining[u] -= 2;
        }
    }
    search.extend();
    Ok(search.found)
}

struct OrientationSearch<'a> {
    edges: &'a [(usize, usize)],
    /// Unassigned non-loop edge endpoints at each vertex.
    remaining: Vec<usize>,
    /// Out-degree minus in-degree among assigned edges.
    balance: Vec<i64>,
    bits: Vec<bool>,
    found: Vec<Orientation>,
}

impl OrientationSearch<'_> {
    fn extend(&mut self) {
        let i = self.bits.len();
        if i == self.edges.len() {
            self.found.push(Orientation(self.bits.clone()));
            return;
        }
        let (u, v) = self.edges[i];
        if u == v {
            self.bits.push(false);
            self.extend();
            self.bits.pop();
            return;
        }
        for reverse in [false, true] {
            let (from, to) = if reverse { (v, u) } else { (u, v) };
            self.balance[from] += 1;
            self.balance[to] -= 1;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            let feasible = [u, v]
                .iter()
                .all(|&x| self.balance[x].unsigned_abs() as usize <= self.remaining[x]);
            if feasible {
                self.bits.push(reverse);
                self.extend();
                self.bits.pop();
            }
            self.balance[from] -= 1;
            self.balance[to] += 1;
            self.remaining[u] += 1;
            self.remaining[v] += 1;
        }
    }
}

/// Per-orientation data behind the undirected count, for callers that want to inspect it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationTours {
    pub orientation: Orientation,
    /// Directed Euler circuits of the oriented graph, up to rotation.
    pub directed_tours: BigInt,
}

fn undirected_preconditions(g: &UndirectedMultigraph) -> Result<Option<Vec<usize>>> {
    if let Some(&(u, _)) = g.edges().iter().find(|(u, v)| u == v) {
        return Err(Error::SelfLoopUnsupported(u));
    }
    if g.edges().is_empty() || g.degrees().iter().any(|d| d % 2 == 1) {
        return Ok(None);
    }
    let (active, connected) = active_component(g.vertex_count(), g.edges());
    Ok(connected.then_some(active))
}

/// Directed tour counts of every Eulerian orientation of `g`.
///
/// Empty for graphs with no Euler circuit. Arborescences of each orientation are
/// counted at one fixed root with a shared decomposition of the underlying graph.
pub fn eulerian_orientation_tours(g: &UndirectedMultigraph, limits: Limits) -> Result<Vec<OrientationTours>> {
    let Some(active) = undirected_preconditions(g)? else {
        return Ok(Vec::new());
    };
    let orientations = enumerate_eulerian_orientations(g, limits.max_orientation_edges)?;
    let label = compact_labels(g.vertex_count(), &active);
    let compact = UndirectedMultigraph::new(
        active.len(),
        g.edges().iter().map(|&(u, v)| (label[u], label[v])).collect(),
    )?;
    let minor_nt: NiceTreeDecomposition = {
        let t = heuristic_tree_decomposition(&compact);
        let minor_support = laplacian(&compact.bidirected()).delete_row_col(0);
        make_nice(&minor_support, &t.delete_vertex(0))?
    };
    let balance_factor: BigInt = active.iter().map(|&v| factorial(g.degree(v) / 2 - 1)).product();
    orientations
        .into_iter()
        .map(|o| {
            let minor = laplacian(&o.apply(&compact)).delete_row_col(0);
            let t = ccdp::determinant(&minor, &minor_nt, limits)?;
            Ok(OrientationTours {
                orientation: o,
                directed_tours: t * &balance_factor,
            })
        })
        .collect()
}

/// Undirected Euler circuits up to rotation and reversal: half the directed tours
/// summed over all Eulerian orientations.
///
/// Returns 0 when a degree is odd, the edges are disconnected, or there are no edges.
pub fn count_undirected_euler_tours(g: &UndirectedMultigraph, limits: Limits) -> Result<BigInt> {
    let total: BigInt = eulerian_orientation_tours(g, limits)?
        .into_iter()
        .map(|o| o.directed_tours)
        .sum();
    debug_assert!((&total % 2u32).is_zero(), "orientations pair up under reversal");
    Ok(total / 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn arbs(d: &DirectedMultigraph, root: usize) -> BigInt {
        count_arborescences(d, root, &heuristic_tree_decomposition(d), Limits::default()).unwrap()
    }

    fn trees(g: &UndirectedMultigraph) -> BigInt {
        count_spanning_trees(g, &heuristic_tree_decomposition(g), Limits::default()).unwrap()
    }

    #[test]
    fn arborescence_examples() {
        assert_eq!(arbs(&named::directed_cycle(3), 0), BigInt::one());
        let anti = DirectedMultigraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(arbs(&anti, 0), BigInt::one());
        assert_eq!(arbs(&named::complete_bidirected(3), 0), BigInt::from(3));
        assert_eq!(arbs(&DirectedMultigraph::empty(1), 0), BigInt::one());
        assert_eq!(arbs(&DirectedMultigraph::empty(2), 0), BigInt::zero());
    }

    #[test]
    fn spanning_tree_examples() {
        assert_eq!(trees(&named::complete(4)), BigInt::from(16));
        assert_eq!(trees(&named::cycle(4)), BigInt::from(4));
        assert_eq!(trees(&named::bowtie()), BigInt::from(9));
        let split = UndirectedMultigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(trees(&split), BigInt::zero());
        let doubled = UndirectedMultigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(trees(&doubled), BigInt::from(2));
    }

    #[test]
    fn directed_tours() {
        let l = Limits::default();
        for n in 1..7 {
            assert_eq!(count_directed_euler_tours(&named::directed_cycle(n), l).unwrap(), BigInt::one());
        }
        assert_eq!(count_directed_euler_tours(&named::complete_bidirected(3), l).unwrap(), BigInt::from(3));
        let single = DirectedMultigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(count_directed_euler_tours(&single, l).unwrap(), BigInt::zero());
        let two_loops = DirectedMultigraph::new(3, vec![(1, 1), (1, 1)]).unwrap();
        assert_eq!(count_directed_euler_tours(&two_loops, l).unwrap(), BigInt::one());
        let apart = DirectedMultigraph::new(4, vec![(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert_eq!(count_directed_euler_tours(&apart, l).unwrap(), BigInt::zero());
    }

    #[test]
    fn orientations() {
        let max = 30;
        assert_eq!(enumerate_eulerian_orientations(&named::cycle(3), max).unwrap().len(), 2);
        assert_eq!(enumerate_eulerian_orientations(&named::bowtie(), max).unwrap().len(), 4);
        assert!(enumerate_eulerian_orientations(&named::path(3), max).unwrap().is_empty());
        let found = enumerate_eulerian_orientations(&named::cycle(4), max).unwrap();
        assert_eq!(found[0], Orientation(vec![false; 4]));
        assert!(found.windows(2).all(|w| w[0] < w[1]));
        let err = enumerate_eulerian_orientations(&named::cycle(31), max).unwrap_err();
        assert_eq!(err, Error::EdgeLimitExceeded { edges: 31, limit: 30 });
    }

    #[test]
    fn undirected_tours() {
        let l = Limits::default();
        for n in 3..8 {
            assert_eq!(count_undirected_euler_tours(&named::cycle(n), l).unwrap(), BigInt::one());
        }
        assert_eq!(count_undirected_euler_tours(&named::bowtie(), l).unwrap(), BigInt::from(2));
        assert_eq!(count_undirected_euler_tours(&named::path(3), l).unwrap(), BigInt::zero());
        let looped = UndirectedMultigraph::new(3, vec![(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap();
        assert_eq!(count_undirected_euler_tours(&looped, l).unwrap_err(), Error::SelfLoopUnsupported(1));
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let g = UndirectedMultigraph::new(6, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(count_undirected_euler_tours(&g, Limits::default()).unwrap(), BigInt::one());
    }
}
