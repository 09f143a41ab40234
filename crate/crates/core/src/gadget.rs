//! Path gadgets for the ordering problem: given a directed path and two inner
//! vertices `s`, `t`, build a low-treewidth digraph whose adjacency determinant
//! tells whether `s` comes before `t`.

use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrdVariant {
    /// Path `0 -> 1 -> ... -> n-1` with `s' = s-1`, `t' = t+1`; add arcs
    /// `(a, s')`, `(s', t)`, `(t, s)`, `(s, a)`, `(b, t')` and remove `(s', s)`, `(t, t')`.
    /// Does not have the determinant dichotomy in general.
    #[default]
    Literal,
    /// Path with a self-loop on every vertex plus arcs `s -> a` and `t' -> t`.
    /// Determinant is 0 when `s` precedes `t` and ±1 otherwise.
    Reconciled,
}

fn check(n: usize, s: usize, t: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidEndpoints(format!("path needs at least 4 vertices, got {n}")));
    }
    if s == t {
        return Err(Error::InvalidEndpoints("s and t must differ".into()));
    }
    for (name, x) in [("s", s), ("t", t)] {
        if x == 0 || x >= n - 1 {
            return Err(Error::InvalidEndpoints(format!(
                "{name} = {x} must be an inner vertex of the path 0..{}",
                n - 1
            )));
        }
    }
    Ok(())
}

pub fn ord_gadget(n: usize, s: usize, t: usize) -> Result<DirectedMultigraph> {
    ord_gadget_variant(n, s, t, OrdVariant::Literal)
}

pub fn ord_gadget_reconciled(n: usize, s: usize, t: usize) -> Result<DirectedMultigraph> {
    ord_gadget_variant(n, s, t, OrdVariant::Reconciled)
}

pub fn ord_gadget_variant(n: usize, s: usize, t: usize, variant: OrdVariant) -> Result<DirectedMultigraph> {
    check(n, s, t)?;
    let (a, b) = (0, n - 1);
    let (s_pred, t_succ) = (s - 1, t + 1);
    let mut arcs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    match variant {
        OrdVariant::Literal => {
            for gone in [(s_pred, s), (t, t_succ)] {
                if let Some(i) = arcs.iter().position(|&e| e == gone) {
                    arcs.remove(i);
                }
            }
            arcs.extend([(a, s_pred), (s_pred, t), (t, s), (s, a), (b, t_succ)]);
        }
        OrdVariant::Reconciled => {
            arcs.extend((0..n).map(|v| (v, v)));
            arcs.extend([(s, a), (t_succ, t)]);
        }
    }
    DirectedMultigraph::new(n, arcs)
}
