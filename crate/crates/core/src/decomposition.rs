//! Tree decompositions: validation and a deterministic min-fill heuristic.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::UnderlyingGraph;

/// A tree of vertex bags.
///
/// Bags are kept sorted and deduplicated. `tree_edges` index into `bags`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree_edges }
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Largest bag size minus one (0 when there are no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Removes vertex `v` from every bag and shifts larger ids down by one.
    ///
    /// The result decomposes any subgraph of `G - v` relabelled the same way,
    /// e.g. the support of a principal minor.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let bags = self
            .bags
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|&&x| x != v)
                    .map(|&x| if x > v { x - 1 } else { x })
                    .collect()
            })
            .collect();
        TreeDecomposition {
            bags,
            tree_edges: self.tree_edges.clone(),
        }
    }

    /// Relabels vertex `x` as `perm[x]` in every bag.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        TreeDecomposition::new(
            self.bags.iter().map(|b| b.iter().map(|&x| perm[x]).collect()).collect(),
            self.tree_edges.clone(),
        )
    }

    /// Adjacency lists of the bag tree; fails with `NotATree` unless the edges form a spanning tree.
    pub(crate) fn tree_adjacency(&self) -> Result<Vec<Vec<usize>>> {
        let k = self.bags.len();
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.tree_edges {
            for x in [a, b] {
                if x >= k {
                    return Err(Error::BagOutOfRange {
                        index: x,
                        bag_count: k,
                    });
                }
            }
            if a == b {
                return Err(Error::NotATree(format!("self-loop at bag {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if k == 0 {
            return Ok(adj);
        }
        if self.tree_edges.len() != k - 1 {
            return Err(Error::NotATree(format!(
                "{} bags need {} tree edges, found {}",
                k,
                k - 1,
                self.tree_edges.len()
            )));
        }
        let mut seen = vec![false; k];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
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
        if reached != k {
            return Err(Error::NotATree("bag tree is disconnected".into()));
        }
        Ok(adj)
    }
}

/// Checks the three tree-decomposition conditions and returns the width.
pub fn validate_tree_decomposition<G: UnderlyingGraph + ?Sized>(
    g: &G,
    t: &TreeDecomposition,
) -> Result<usize> {
    let n = g.vertex_count();
    let adj = t.tree_adjacency()?;

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in t.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
            holders[v].push(i);
        }
    }
    if let Some(v) = holders.iter().position(Vec::is_empty) {
        return Err(Error::VertexUncovered(v));
    }

    for (u, v) in g.underlying_edges() {
        let covered = holders[u]
            .iter()
            .any(|&i| t.bags[i].binary_search(&v).is_ok());
        if !covered {
            return Err(Error::EdgeUncovered(u, v));
        }
    }

    // Bags holding v must form a connected subtree: BFS restricted to them.
    let mut mark = vec![usize::MAX; t.bags.len()];
    for (v, hs) in holders.iter().enumerate() {
        for &i in hs {
            mark[i] = v;
        }
        let mut seen = BTreeSet::from([hs[0]]);
        let mut queue = VecDeque::from([hs[0]]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if mark[y] == v && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        if seen.len() != hs.len() {
            return Err(Error::ConnectivityViolated(v));
        }
    }

    Ok(t.width())
}

/// Decomposition induced by eliminating vertices in the given order.
///
/// Each vertex contributes the bag `{v} ∪ N(v)` at the time it is eliminated;
/// the bag hangs below the bag of its earliest-eliminated remaining neighbour.
pub fn decomposition_from_elimination_order<G: UnderlyingGraph + ?Sized>(
    g: &G,
    order: &[usize],
) -> TreeDecomposition {
    let n = g.vertex_count();
    assert_eq!(order.len(), n, "elimination order must list every vertex once");
    let mut adj = adjacency_sets(g);
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        eliminate(&mut adj, v);
        let mut bag = nbrs.clone();
        bag.push(v);
        bags.push(bag);
        let parent = nbrs
            .iter()
            .map(|&u| position[u])
            .min()
            .or(if i + 1 < n { Some(i + 1) } else { None });
        if let Some(p) = parent {
            tree_edges.push((i, p));
        }
    }
    if n == 0 {
        bags.push(Vec::new());
    }
    TreeDecomposition::new(bags, tree_edges)
}

/// Greedy min-fill elimination ordering, ties broken by smallest vertex id.
pub fn min_fill_order<G: UnderlyingGraph + ?Sized>(g: &G) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj = adjacency_sets(g);
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        let v = *alive
            .iter()
            .min_by_key(|&&v| (fill_in(&adj, v), v))
            .expect("nonempty");
        eliminate(&mut adj, v);
        alive.remove(&v);
        order.push(v);
    }
    order
}

/// Deterministic min-fill decomposition. Always valid; width is not guaranteed minimal.
pub fn heuristic_tree_decomposition<G: UnderlyingGraph + ?Sized>(g: &G) -> TreeDecomposition {
    decomposition_from_elimination_order(g, &min_fill_order(g))
}

fn adjacency_sets<G: UnderlyingGraph + ?Sized>(g: &G) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); g.vertex_count()];
    for (u, v) in g.underlying_edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nbrs: Vec<usize> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

fn eliminate(adj: &mut [BTreeSet<usize>], v: usize) {
    let nbrs: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
    for &a in &nbrs {
        adj[a].remove(&v);
        for &b in &nbrs {
            if a != b {
                adj[a].insert(b);
            }
        }
    }
}
