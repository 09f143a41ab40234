//! Nice tree decompositions: leaf / introduce-vertex / introduce-edge / forget / join.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::decomposition::{validate_tree_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::UnderlyingGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NiceNodeKind {
    Leaf,
    IntroduceVertex(usize),
    /// Introduces every arc between the two endpoints (`u < v`), in both directions.
    IntroduceEdge(usize, usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceNodeKind,
    /// Sorted bag after this node is applied.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// A rooted nice tree decomposition stored bottom-up: every child index is smaller
/// than its parent's, and the root is the last node.
///
/// Edges are those of the underlying simple undirected graph, so one decomposition
/// serves every matrix or digraph whose support it covers. Self-loops need no
/// introduce node; the engines account for them when the vertex is forgotten.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    vertex_count: usize,
    nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// The set of introduced edges, as `(min, max)` pairs.
    pub fn introduced_edges(&self) -> HashSet<(usize, usize)> {
        self.nodes
            .iter()
            .filter_map(|n| match n.kind {
                NiceNodeKind::IntroduceEdge(u, v) => Some((u, v)),
                _ => None,
            })
            .collect()
    }

    /// Checks the structural invariants of the normal form and that it decomposes `g`.
    pub fn check<G: UnderlyingGraph + ?Sized>(&self, g: &G) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if g.vertex_count() != self.vertex_count {
            return bad("vertex count mismatch".into());
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return bad("root bag is not empty".into());
        }
        let mut forgotten = vec![0usize; self.vertex_count];
        let mut introduced = HashSet::new();
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= i) {
                return bad(format!("node {i} is not stored after its children"));
            }
            let child_bag = |k: usize| &self.nodes[node.children[k]].bag;
            let expect = |ok: bool| if ok { Ok(()) } else { bad(format!("node {i} is malformed")) };
            match node.kind {
                NiceNodeKind::Leaf => expect(node.children.is_empty() && node.bag.is_empty())?,
                NiceNodeKind::IntroduceVertex(v) => {
                    let mut b = child_bag(0).clone();
                    expect(node.children.len() == 1 && !b.contains(&v))?;
                    b.push(v);
                    b.sort_unstable();
                    expect(b == node.bag)?;
                }
                NiceNodeKind::Forget(v) => {
                    let mut b = child_bag(0).clone();
                    expect(node.children.len() == 1 && b.contains(&v))?;
                    b.retain(|&x| x != v);
                    expect(b == node.bag)?;
                    forgotten[v] += 1;
                }
                NiceNodeKind::IntroduceEdge(u, v) => {
                    expect(node.children.len() == 1 && child_bag(0) == &node.bag)?;
                    expect(u < v && node.bag.contains(&u) && node.bag.contains(&v))?;
                    if !introduced.insert((u, v)) {
                        return bad(format!("edge ({u}, {v}) introduced twice"));
                    }
                }
                NiceNodeKind::Join => {
                    expect(node.children.len() == 2)?;
                    expect(child_bag(0) == &node.bag && child_bag(1) == &node.bag)?;
                }
            }
        }
        if let Some(v) = forgotten.iter().position(|&c| c != 1) {
            return bad(format!("vertex {v} forgotten {} times", forgotten[v]));
        }
        for e in g.underlying_edges() {
            if !introduced.contains(&e) {
                return Err(Error::EdgeUncovered(e.0, e.1));
            }
        }
        // Each vertex forgotten exactly once plus bottom-up bag consistency gives
        // connectivity; coverage of vertices follows from the forget count.
        Ok(())
    }
}

/// Converts a valid decomposition of `g` into nice form rooted at bag 0.
///
/// Every underlying edge of `g` is introduced once, at the topmost bag holding both endpoints.
pub fn make_nice<G: UnderlyingGraph + ?Sized>(
    g: &G,
    t: &TreeDecomposition,
) -> Result<NiceTreeDecomposition> {
    validate_tree_decomposition(g, t).map_err(|e| Error::InvalidDecomposition(e.to_string()))?;
    let n = g.vertex_count();
    let mut builder = Builder { nodes: Vec::new() };

    if t.bags().is_empty() {
        builder.push(NiceNodeKind::Leaf, Vec::new(), vec![]);
        return Ok(NiceTreeDecomposition {
            vertex_count: n,
            nodes: builder.nodes,
        });
    }

    let adj = t.tree_adjacency()?;
    let k = t.bags().len();
    let mut parent = vec![usize::MAX; k];
    let mut bfs = Vec::with_capacity(k);
    let mut queue = VecDeque::from([0usize]);
    parent[0] = 0;
    while let Some(x) = queue.pop_front() {
        bfs.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }

    let mut pending: HashSet<(usize, usize)> = g.underlying_edges().into_iter().collect();
    let mut edges_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &b in &bfs {
        let bag = &t.bags()[b];
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                if pending.remove(&(u, v)) {
                    edges_at[b].push((u, v));
                }
            }
        }
    }
    debug_assert!(pending.is_empty());

    let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &b in &bfs[1..] {
        children[parent[b]].push(b);
    }

    let mut top = vec![usize::MAX; k];
    for &b in bfs.iter().rev() {
        let bag = &t.bags()[b];
        let mut branches = Vec::new();
        for &c in &children[b] {
            branches.push(builder.transition(top[c], bag));
        }
        if branches.is_empty() {
            let leaf = builder.push(NiceNodeKind::Leaf, Vec::new(), vec![]);
            branches.push(builder.transition(leaf, bag));
        }
        let mut node = branches[0];
        for &other in &branches[1..] {
            node = builder.push(NiceNodeKind::Join, bag.clone(), vec![node, other]);
        }
        for &(u, v) in &edges_at[b] {
            node = builder.push(NiceNodeKind::IntroduceEdge(u, v), bag.clone(), vec![node]);
        }
        top[b] = node;
    }
    builder.transition(top[0], &[]);

    Ok(NiceTreeDecomposition {
        vertex_count: n,
        nodes: builder.nodes,
    })
}

/// Nice form of `t` if given, otherwise of the min-fill heuristic decomposition.
pub fn make_nice_or_heuristic<G: UnderlyingGraph + ?Sized>(
    g: &G,
    t: Option<&TreeDecomposition>,
) -> Result<NiceTreeDecomposition> {
    match t {
        Some(t) => make_nice(g, t),
        None => make_nice(g, &crate::decomposition::heuristic_tree_decomposition(g)),
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceNodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forget everything not in `target`, then introduce what is missing.
    fn transition(&mut self, mut node: usize, target: &[usize]) -> usize {
        let wanted: BTreeSet<usize> = target.iter().copied().collect();
        let mut bag = self.nodes[node].bag.clone();
        for v in bag.clone() {
            if !wanted.contains(&v) {
                bag.retain(|&x| x != v);
                node = self.push(NiceNodeKind::Forget(v), bag.clone(), vec![node]);
            }
        }
        for &v in &wanted {
            if let Err(pos) = bag.binary_search(&v) {
                bag.insert(pos, v);
                node = self.push(NiceNodeKind::IntroduceVertex(v), bag.clone(), vec![node]);
            }
        }
        node
    }
}
