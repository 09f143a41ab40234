//! Graph and matrix constructions: support digraph, Laplacian, subdivision, degree padding.

use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UnderlyingGraph, UndirectedMultigraph};
use crate::matrix::SquareIntMatrix;

/// Arc `i -> j` (multiplicity one) for every nonzero entry, loops for nonzero diagonal entries.
pub fn support_digraph(m: &SquareIntMatrix) -> DirectedMultigraph {
    DirectedMultigraph::new(m.n(), m.nonzero_positions().collect()).expect("positions in range")
}

/// Directed Laplacian `D - A` with out-degrees on the diagonal.
///
/// Arc multiplicities count in both `D` and `A`; self-loops are left out of both.
pub fn laplacian(d: &DirectedMultigraph) -> SquareIntMatrix {
    let mut l = SquareIntMatrix::zeros(d.vertex_count());
    for &(u, v) in d.arcs() {
        if u != v {
            l[(u, u)] += 1;
            l[(u, v)] -= 1;
        }
    }
    l
}

/// Replaces every edge `{u, v}` by a path `u - w - v` through a new vertex `w`.
///
/// New vertices get ids `n, n+1, ...` in edge order; edge `i` becomes edges `2i`
/// (`u - w`) and `2i+1` (`w - v`).
pub fn subdivide(g: &UndirectedMultigraph) -> UndirectedMultigraph {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edges().len());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((n + i, v));
    }
    UndirectedMultigraph::new(n + g.edges().len(), edges).expect("ids in range")
}

/// Pads every vertex to out-degree `n = |V|` by attaching `n - od(v)` new vertices,
/// each joined to `v` by a pair of antiparallel arcs.
///
/// Out-degrees ignore self-loops. Arborescence counts toward any original root are
/// unchanged: a pendant vertex must use its arc into `v` and `v` can never use an
/// arc out to a pendant. New vertices are appended vertex by vertex.
pub fn degree_pad(d: &DirectedMultigraph) -> Result<DirectedMultigraph> {
    let n = d.vertex_count();
    let mut out = d.clone();
    for v in 0..n {
        let od = d.loopless_out_degree(v);
        if od > n {
            return Err(Error::OutDegreeExceedsN {
                vertex: v,
                out_degree: od,
                vertex_count: n,
            });
        }
        for _ in od..n {
            let w = out.add_vertex();
            out.add_arc(w, v)?;
            out.add_arc(v, w)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::oracle::enumerate_arborescences;

    fn mat(rows: Vec<Vec<i64>>) -> SquareIntMatrix {
        SquareIntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn supports() {
        let id = support_digraph(&SquareIntMatrix::identity(3));
        assert_eq!(id.arcs(), &[(0, 0), (1, 1), (2, 2)]);
        assert!(support_digraph(&SquareIntMatrix::zeros(3)).arcs().is_empty());
        let m = mat(vec![vec![0, 5], vec![-2, 0]]);
        assert_eq!(support_digraph(&m).arcs(), &[(0, 1), (1, 0)]);
    }

    #[test]
    fn laplacians() {
        assert_eq!(
            laplacian(&named::directed_cycle(3)),
            mat(vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]])
        );
        assert_eq!(laplacian(&DirectedMultigraph::empty(1)), mat(vec![vec![0]]));
        let doubled = DirectedMultigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(laplacian(&doubled), mat(vec![vec![2, -2], vec![0, 0]]));
        let looped = DirectedMultigraph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(laplacian(&looped), mat(vec![vec![1, -1], vec![0, 0]]));
    }

    #[test]
    fn subdivisions() {
        let c6 = subdivide(&named::cycle(3));
        assert_eq!(c6.vertex_count(), 6);
        assert_eq!(c6.edges().len(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2));
        let p = subdivide(&named::path(2));
        assert_eq!(p.edges(), &[(0, 2), (2, 1)]);
        let b = subdivide(&named::bowtie());
        assert_eq!((b.vertex_count(), b.edges().len()), (11, 12));
    }

    #[test]
    fn padding_counts() {
        let single = DirectedMultigraph::new(2, vec![(0, 1)]).unwrap();
        let padded = degree_pad(&single).unwrap();
        assert_eq!(padded.vertex_count(), 5);
        assert_eq!(padded.loopless_out_degree(0), 2);
        assert_eq!(padded.loopless_out_degree(1), 2);
        for w in 2..5 {
            assert_eq!(padded.out_degree(w), 1);
        }

        let full = named::complete_bidirected(3);
        let full = DirectedMultigraph::new(3, [full.arcs(), &[(0, 1), (1, 0), (2, 0)]].concat()).unwrap();
        assert_eq!(degree_pad(&full).unwrap().vertex_count(), 3);

        let too_many = DirectedMultigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(degree_pad(&too_many).unwrap_err().name(), "OutDegreeExceedsN");
    }

    #[test]
    fn padding_preserves_arborescences_of_three_cycle() {
        let c3 = named::directed_cycle(3);
        let padded = degree_pad(&c3).unwrap();
        assert_eq!(enumerate_arborescences(&c3, 0).unwrap(), 1.into());
        assert_eq!(enumerate_arborescences(&padded, 0).unwrap(), 1.into());
    }
}
