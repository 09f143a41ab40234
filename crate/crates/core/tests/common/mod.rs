#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use twcount::{DirectedMultigraph, SquareIntMatrix, TreeDecomposition, UndirectedMultigraph};

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random subgraph of a random `k`-tree together with the decomposition the
/// construction yields (one bag per added vertex), so the width is at most `k`.
pub struct PartialKTree {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub decomposition: TreeDecomposition,
}

pub fn partial_k_tree(rng: &mut TestRng, n: usize, k: usize, keep: f64) -> PartialKTree {
    let base = n.min(k + 1);
    let mut bags: Vec<Vec<usize>> = vec![(0..base).collect()];
    let mut tree_edges = Vec::new();
    let mut edges = Vec::new();
    for u in 0..base {
        for v in u + 1..base {
            if rng.gen_bool(keep) {
                edges.push((u, v));
            }
        }
    }
    for v in base..n {
        let parent = rng.gen_range(0..bags.len());
        let mut clique = bags[parent].clone();
        if clique.len() > k {
            let drop = rng.gen_range(0..clique.len());
            clique.remove(drop);
        }
        for &u in &clique {
            if rng.gen_bool(keep) {
                edges.push((u, v));
            }
        }
        clique.push(v);
        bags.push(clique);
        tree_edges.push((parent, bags.len() - 1));
    }
    PartialKTree {
        n,
        edges,
        decomposition: TreeDecomposition::new(bags, tree_edges),
    }
}

/// Random integer matrix supported on the diagonal and on the pairs of `shape`,
/// entries drawn uniformly from `-bound..=bound`.
pub fn matrix_on(rng: &mut TestRng, shape: &PartialKTree, bound: i64) -> SquareIntMatrix {
    let mut m = SquareIntMatrix::zeros(shape.n);
    for i in 0..shape.n {
        m[(i, i)] = rng.gen_range(-bound..=bound).into();
    }
    for &(u, v) in &shape.edges {
        m[(u, v)] = rng.gen_range(-bound..=bound).into();
        m[(v, u)] = rng.gen_range(-bound..=bound).into();
    }
    m
}

/// Random simple digraph on the pairs of `shape`: each direction kept with probability
/// `p`, loops with probability `p_loop`.
pub fn digraph_on(rng: &mut TestRng, shape: &PartialKTree, p: f64, p_loop: f64) -> DirectedMultigraph {
    let mut arcs = Vec::new();
    for v in 0..shape.n {
        if rng.gen_bool(p_loop) {
            arcs.push((v, v));
        }
    }
    for &(u, v) in &shape.edges {
        if rng.gen_bool(p) {
            arcs.push((u, v));
        }
        if rng.gen_bool(p) {
            arcs.push((v, u));
        }
    }
    DirectedMultigraph::new(shape.n, arcs).unwrap()
}

pub fn all_ones_digraph(n: usize) -> DirectedMultigraph {
    DirectedMultigraph::new(n, (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect()).unwrap()
}

/// Random closed walk of `len` steps on `n` vertices with no immediate repeats
/// (so no loops); returns the walk's vertex sequence with the start repeated at the end.
fn closed_walk(rng: &mut TestRng, n: usize, len: usize) -> Vec<usize> {
    // On two vertices every loopless closed walk has even length.
    let len = if n == 2 { 2 * len.div_ceil(2) } else { len };
    loop {
        let mut walk = vec![rng.gen_range(0..n)];
        for _ in 1..len {
            let last = *walk.last().unwrap();
            let mut next = rng.gen_range(0..n - 1);
            if next >= last {
                next += 1;
            }
            walk.push(next);
        }
        if walk[len - 1] != walk[0] {
            walk.push(walk[0]);
            return walk;
        }
    }
}

/// Balanced digraphs built as unions of random closed walks, at most `max_arcs` arcs.
pub fn eulerian_digraph_corpus(seed: u64, count: usize, max_arcs: usize) -> Vec<DirectedMultigraph> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=5);
        let mut arcs = Vec::new();
        let pieces = rng.gen_range(1..=3);
        for _ in 0..pieces {
            let len = rng.gen_range(2..=4);
            if arcs.len() + len > max_arcs {
                break;
            }
            let w = closed_walk(&mut rng, n, len);
            arcs.extend(w.windows(2).map(|p| (p[0], p[1])));
        }
        if rng.gen_bool(0.2) && arcs.len() < max_arcs {
            let v = rng.gen_range(0..n);
            arcs.push((v, v));
        }
        if arcs.is_empty() {
            continue;
        }
        arcs.shuffle(&mut rng);
        out.push(DirectedMultigraph::new(n, arcs).unwrap());
    }
    out
}

/// Even-degree loopless multigraphs built as unions of random closed walks, at most `max_edges` edges.
pub fn eulerian_graph_corpus(seed: u64, count: usize, max_edges: usize) -> Vec<UndirectedMultigraph> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=6);
        let mut edges = Vec::new();
        let pieces = rng.gen_range(1..=3);
        for _ in 0..pieces {
            let len = rng.gen_range(3..=5);
            if edges.len() + len > max_edges {
                break;
            }
            let w = closed_walk(&mut rng, n, len);
            edges.extend(w.windows(2).map(|p| (p[0], p[1])));
        }
        if edges.is_empty() {
            continue;
        }
        edges.shuffle(&mut rng);
        out.push(UndirectedMultigraph::new(n, edges).unwrap());
    }
    out
}

/// A permutation of `0..n` drawn uniformly.
pub fn permutation(rng: &mut TestRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
