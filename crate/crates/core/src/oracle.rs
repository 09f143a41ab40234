//! Brute-force and classical reference computations.
//!
//! Nothing here touches tree decompositions or the cycle-cover engine; these are
//! the independent anchors the engines are tested against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ccdp::CycleCoverHistogram;
use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UnderlyingGraph, UndirectedMultigraph};
use crate::matrix::SquareIntMatrix;
use crate::poly::IntPolynomial;

pub const MAX_PERMUTATION_DIM: usize = 8;
pub const MAX_CYCLE_COVER_VERTICES: usize = 8;
/// Candidate arcs (non-loop, not leaving the root) for arborescence enumeration.
pub const MAX_ARBORESCENCE_ARCS: usize = 24;
pub const MAX_SPANNING_TREE_EDGES: usize = 20;
pub const MAX_EULER_TOUR_EDGES: usize = 12;

fn too_large(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::DimensionTooLarge { size, limit })
    } else {
        Ok(())
    }
}

/// Leibniz expansion over all `n!` permutations.
pub fn det_permutation_expansion(m: &SquareIntMatrix) -> Result<BigInt> {
    let n = m.n();
    too_large(n, MAX_PERMUTATION_DIM)?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(m, &mut perm, 0, true, &mut total);
    Ok(total)
}

fn permute(m: &SquareIntMatrix, perm: &mut [usize], k: usize, even: bool, total: &mut BigInt) {
    let n = perm.len();
    if k == n {
        let mut prod = BigInt::one();
        for (i, &j) in perm.iter().enumerate() {
            let e = m.get(i, j);
            if e.is_zero() {
                return;
            }
            prod *= e;
        }
        if even {
            *total += prod;
        } else {
            *total -= prod;
        }
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(m, perm, k + 1, even == (i == k), total);
        perm.swap(k, i);
    }
}

/// Bareiss fraction-free elimination; every division is exact.
pub fn det_fraction_free(m: &SquareIntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.rows().map(<[BigInt]>::to_vec).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exhaustive enumeration of arc choices with in- and out-degree one everywhere.
pub fn enumerate_cycle_covers(d: &DirectedMultigraph) -> Result<CycleCoverHistogram> {
    enumerate_cycle_covers_with_cap(d, MAX_CYCLE_COVER_VERTICES)
}

/// As [`enumerate_cycle_covers`] with a caller-chosen vertex cap, for sparse inputs
/// where the search stays small beyond the default cap.
pub fn enumerate_cycle_covers_with_cap(
    d: &DirectedMultigraph,
    max_vertices: usize,
) -> Result<CycleCoverHistogram> {
    let n = d.vertex_count();
    too_large(n, max_vertices)?;
    let mut out_arcs = vec![Vec::new(); n];
    for &(u, v) in d.arcs() {
        out_arcs[u].push(v);
    }
    let mut succ = vec![usize::MAX; n];
    let mut used_in = vec![false; n];
    let mut counts = BTreeMap::new();
    choose_successor(&out_arcs, 0, &mut succ, &mut used_in, &mut counts);
    Ok(CycleCoverHistogram::new(n, counts))
}

fn choose_successor(
    out_arcs: &[Vec<usize>],
    u: usize,
    succ: &mut [usize],
    used_in: &mut [bool],
    counts: &mut BTreeMap<usize, BigInt>,
) {
    let n = out_arcs.len();
    if u == n {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = succ[x];
                }
            }
        }
        *counts.entry(cycles).or_insert_with(BigInt::zero) += 1;
        return;
    }
    for &v in &out_arcs[u] {
        if !used_in[v] {
            used_in[v] = true;
            succ[u] = v;
            choose_successor(out_arcs, u + 1, succ, used_in, counts);
            used_in[v] = false;
        }
    }
}

/// Counts spanning in-trees toward `root`: every other vertex picks one out-arc
/// and following picks from any vertex reaches `root`.
pub fn enumerate_arborescences(d: &DirectedMultigraph, root: usize) -> Result<BigInt> {
    let n = d.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            vertex_count: n,
        });
    }
    let mut out_arcs = vec![Vec::new(); n];
    let mut candidates = 0;
    for &(u, v) in d.arcs() {
        if u != v && u != root {
            out_arcs[u].push(v);
            candidates += 1;
        }
    }
    too_large(candidates, MAX_ARBORESCENCE_ARCS)?;
    let mut parent = vec![usize::MAX; n];
    let mut count = BigInt::zero();
    pick_parent(&out_arcs, root, 0, &mut parent, &mut count);
    Ok(count)
}

fn pick_parent(out_arcs: &[Vec<usize>], root: usize, u: usize, parent: &mut [usize], count: &mut BigInt) {
    let n = out_arcs.len();
    if u == n {
        let reaches_root = (0..n).all(|s| {
            let mut x = s;
            for _ in 0..n {
                if x == root {
                    return true;
                }
                x = parent[x];
            }
            x == root
        });
        if reaches_root {
            *count += 1;
        }
        return;
    }
    if u == root {
        pick_parent(out_arcs, root, u + 1, parent, count);
        return;
    }
    for &v in &out_arcs[u] {
        parent[u] = v;
        pick_parent(out_arcs, root, u + 1, parent, count);
    }
}

/// Counts spanning trees by testing every `(n-1)`-subset of edges for acyclicity.
pub fn enumerate_spanning_trees(g: &UndirectedMultigraph) -> Result<BigInt> {
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|(u, v)| u != v).collect();
    too_large(edges.len(), MAX_SPANNING_TREE_EDGES)?;
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(BigInt::one());
    }
    let mut count = BigInt::zero();
    for mask in 0u32..(1u32 << edges.len()) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        let acyclic = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).all(|(_, &(u, v))| {
            let (a, b) = (find(&mut root, u), find(&mut root, v));
            root[a] = b;
            a != b
        });
        if acyclic {
            count += 1;
        }
    }
    Ok(count)
}

/// Directed Euler circuits up to rotation: the lexicographically least arc is fixed
/// as the first arc and the completions are counted. Parallel arcs are distinct.
pub fn enumerate_directed_euler_tours(d: &DirectedMultigraph) -> Result<BigInt> {
    let arcs = d.arcs();
    too_large(arcs.len(), MAX_EULER_TOUR_EDGES)?;
    let Some(first) = (0..arcs.len()).min_by_key(|&i| (arcs[i], i)) else {
        return Ok(BigInt::zero());
    };
    let mut used = vec![false; arcs.len()];
    used[first] = true;
    let (start, next) = arcs[first];
    Ok(BigInt::from(walk(&|i, at| (arcs[i].0 == at).then_some(arcs[i].1), arcs.len(), &mut used, next, start, 1)))
}

/// Undirected Euler circuits up to rotation and reversal: the lexicographically least
/// edge is fixed as the first edge, traversed from its smaller endpoint.
pub fn enumerate_undirected_euler_tours(g: &UndirectedMultigraph) -> Result<BigInt> {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    too_large(edges.len(), MAX_EULER_TOUR_EDGES)?;
    if let Some(&(u, _)) = edges.iter().find(|(u, v)| u == v) {
        return Err(Error::SelfLoopUnsupported(u));
    }
    let Some(first) = (0..edges.len()).min_by_key(|&i| (edges[i], i)) else {
        return Ok(BigInt::zero());
    };
    let mut used = vec![false; edges.len()];
    used[first] = true;
    let (start, next) = edges[first];
    let step = |i: usize, at: usize| {
        let (a, b) = edges[i];
        if a == at {
            Some(b)
        } else if b == at {
            Some(a)
        } else {
            None
        }
    };
    Ok(BigInt::from(walk(&step, edges.len(), &mut used, next, start, 1)))
}

fn walk(
    step: &dyn Fn(usize, usize) -> Option<usize>,
    m: usize,
    used: &mut [bool],
    at: usize,
    start: usize,
    depth: usize,
) -> u64 {
    if depth == m {
        return (at == start) as u64;
    }
    let mut total = 0;
    for i in 0..m {
        if used[i] {
            continue;
        }
        if let Some(next) = step(i, at) {
            used[i] = true;
            total += walk(step, m, used, next, start, depth + 1);
            used[i] = false;
        }
    }
    total
}

/// `det(xI - A)` recovered from its values at `x = 0..=n` by exact Newton interpolation.
pub fn charpoly_interpolation(m: &SquareIntMatrix) -> IntPolynomial {
    let n = m.n();
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|x0| {
            let shifted = SquareIntMatrix::from_fn(n, |i, j| {
                let a = -m.get(i, j);
                if i == j {
                    a + x0
                } else {
                    a
                }
            });
            det_fraction_free(&shifted)
        })
        .collect();
    // Forward differences: diffs[k] becomes Δ^k f(0); divided by k! it is the
    // coefficient on the falling factorial x(x-1)...(x-k+1), an integer here.
    for k in 1..=n {
        for i in (k..=n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }
    let mut result = IntPolynomial::zero();
    let mut falling = IntPolynomial::one();
    let mut factorial = BigInt::one();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            factorial *= k;
            falling = &falling * &IntPolynomial::linear_root(&BigInt::from(k - 1));
        }
        let (q, r) = d.div_rem(&factorial);
        debug_assert!(r.is_zero());
        result += &(&falling * &IntPolynomial::constant(q));
    }
    result
}

/// Trace of the literal `k`-th power.
pub fn matrix_power_trace(m: &SquareIntMatrix, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::from(m.n());
    }
    let mut p = m.clone();
    for _ in 1..k {
        p = p.mul(m);
    }
    p.trace()
}
