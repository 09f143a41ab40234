//! Bottom-up evaluation of a nice tree decomposition.

use std::collections::HashMap;

use super::state::{DpState, Slot};
use super::weight::CoverWeight;
use crate::nice::{NiceNodeKind, NiceTreeDecomposition};

type Table<W> = HashMap<DpState, W>;

fn add_to<W: CoverWeight>(table: &mut Table<W>, state: DpState, value: W) {
    if value.is_zero() {
        return;
    }
    match table.get_mut(&state) {
        Some(acc) => {
            acc.accumulate(value);
            if acc.is_zero() {
                table.remove(&state);
            }
        }
        None => {
            table.insert(state, value);
        }
    }
}

/// Sums `W` over all cycle covers of the weighted digraph described by `arc` and
/// `self_loop`, whose support must be covered by `nt`.
///
/// `arc(u, v)` is the weight of arc `u -> v` for `u != v` (`None` when absent);
/// `self_loop(v)` the weight of the loop at `v`.
pub fn run<W, A, L>(nt: &NiceTreeDecomposition, arc: A, self_loop: L) -> W
where
    W: CoverWeight,
    A: Fn(usize, usize) -> Option<W::Arc>,
    L: Fn(usize) -> Option<W::Arc>,
{
    let nodes = nt.nodes();
    let mut tables: Vec<Option<Table<W>>> = Vec::with_capacity(nodes.len());
    for node in nodes {
        let mut take = |i: usize| tables[i].take().expect("child evaluated once");
        let table: Table<W> = match node.kind {
            NiceNodeKind::Leaf => Table::from([(DpState::default(), W::one())]),
            NiceNodeKind::IntroduceVertex(v) => take(node.children[0])
                .into_iter()
                .map(|(s, w)| (s.introduce(&node.bag, v), w))
                .collect(),
            NiceNodeKind::Forget(v) => {
                let child_bag = &nodes[node.children[0]].bag;
                let loop_w = self_loop(v);
                let mut out = Table::new();
                for (s, w) in take(node.children[0]) {
                    match s.slot(child_bag, v) {
                        Slot::Done => add_to(&mut out, s.forget(child_bag, v), w),
                        Slot::Free => {
                            if let Some(lw) = &loop_w {
                                let s = s.take_loop(child_bag, v).expect("free slot");
                                add_to(&mut out, s.forget(child_bag, v), w.times_arc(lw).close_cycle());
                            }
                        }
                        _ => {}
                    }
                }
                out
            }
            NiceNodeKind::IntroduceEdge(u, v) => {
                let mut table = take(node.children[0]);
                for (from, to) in [(u, v), (v, u)] {
                    if let Some(aw) = arc(from, to) {
                        table = apply_arc(table, &node.bag, from, to, &aw);
                    }
                }
                table
            }
            NiceNodeKind::Join => {
                let left = take(node.children[0]);
                let right = take(node.children[1]);
                let mut out = Table::new();
                for (sl, wl) in &left {
                    for (sr, wr) in &right {
                        if let Some((s, cycles)) = sl.join(sr, &node.bag) {
                            let mut w = wl.join(wr);
                            for _ in 0..cycles {
                                w = w.close_cycle();
                            }
                            add_to(&mut out, s, w);
                        }
                    }
                }
                out
            }
        };
        tables.push(Some(table));
    }
    let mut root = tables.pop().flatten().unwrap_or_default();
    root.remove(&DpState::default()).unwrap_or_else(W::zero)
}

fn apply_arc<W: CoverWeight>(
    table: Table<W>,
    bag: &[usize],
    from: usize,
    to: usize,
    weight: &W::Arc,
) -> Table<W> {
    let mut out = Table::with_capacity(table.len() * 2);
    for (s, w) in table {
        if let Some((next, closed)) = s.take_arc(bag, from, to) {
            let mut taken = w.times_arc(weight);
            if closed {
                taken = taken.close_cycle();
            }
            add_to(&mut out, next, taken);
        }
        add_to(&mut out, s, w);
    }
    out
}
