//! Partial cycle-cover states restricted to a bag.
//!
//! A partial cover is a set of already-introduced arcs in which every vertex has
//! in- and out-degree at most one, so it decomposes into closed cycles and open
//! directed paths. Forgotten vertices are saturated, hence every open path has both
//! endpoints in the current bag and the state only needs, per bag vertex, its
//! degree usage and the partner endpoint of its path.

/// Status of one bag vertex. Partners are vertex ids, not bag positions, so a
/// state stays valid while the bag around it grows or shrinks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    /// No chosen arc touches the vertex.
    Free,
    /// In- and out-degree both used: interior of a path or on a closed cycle.
    Done,
    /// First vertex of an open path (out used, in free); holds the path's last vertex.
    Head(u32),
    /// Last vertex of an open path (in used, out free); holds the path's first vertex.
    Tail(u32),
}

impl Slot {
    fn degrees(self) -> (u8, u8) {
        match self {
            Slot::Free => (0, 0),
            Slot::Done => (1, 1),
            Slot::Head(_) => (0, 1),
            Slot::Tail(_) => (1, 0),
        }
    }
}

/// One slot per bag vertex, aligned with the sorted bag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DpState {
    pub(crate) slots: Vec<Slot>,
}

fn pos(bag: &[usize], v: usize) -> usize {
    bag.binary_search(&v).expect("vertex must be in the bag")
}

impl DpState {
    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Inserts a free slot for `v`; `bag` is the bag after the introduction.
    pub fn introduce(&self, bag: &[usize], v: usize) -> DpState {
        let mut slots = self.slots.clone();
        slots.insert(pos(bag, v), Slot::Free);
        DpState { slots }
    }

    /// Removes `v`, which must already be saturated; `bag` is the bag before forgetting.
    pub fn forget(&self, bag: &[usize], v: usize) -> DpState {
        let mut slots = self.slots.clone();
        let s = slots.remove(pos(bag, v));
        debug_assert_eq!(s, Slot::Done);
        DpState { slots }
    }

    pub fn slot(&self, bag: &[usize], v: usize) -> Slot {
        self.slots[pos(bag, v)]
    }

    /// Marks a free vertex as covered by its own self-loop.
    pub fn take_loop(&self, bag: &[usize], v: usize) -> Option<DpState> {
        let p = pos(bag, v);
        if self.slots[p] != Slot::Free {
            return None;
        }
        let mut slots = self.slots.clone();
        slots[p] = Slot::Done;
        Some(DpState { slots })
    }

    /// Adds arc `u -> v` (`u != v`) to the partial cover.
    ///
    /// Returns the new state and whether the arc closed a cycle, or `None` if `u`
    /// already has an outgoing or `v` an incoming arc.
    pub fn take_arc(&self, bag: &[usize], u: usize, v: usize) -> Option<(DpState, bool)> {
        debug_assert_ne!(u, v);
        let (pu, pv) = (pos(bag, u), pos(bag, v));
        let (su, sv) = (self.slots[pu], self.slots[pv]);
        let start = match su {
            Slot::Free => u,
            Slot::Tail(s) => s as usize,
            _ => return None,
        };
        let end = match sv {
            Slot::Free => v,
            Slot::Head(e) => e as usize,
            _ => return None,
        };
        let mut slots = self.slots.clone();
        if su == Slot::Tail(v as u32) {
            slots[pu] = Slot::Done;
            slots[pv] = Slot::Done;
            return Some((DpState { slots }, true));
        }
        slots[pu] = match su {
            Slot::Free => Slot::Head(end as u32),
            _ => Slot::Done,
        };
        slots[pv] = match sv {
            Slot::Free => Slot::Tail(start as u32),
            _ => Slot::Done,
        };
        if start != u {
            slots[pos(bag, start)] = Slot::Head(end as u32);
        }
        if end != v {
            slots[pos(bag, end)] = Slot::Tail(start as u32);
        }
        Some((DpState { slots }, false))
    }

    /// Glues two partial covers built from disjoint arc sets over the same bag.
    ///
    /// Returns the merged state and the number of cycles closed by the gluing, or
    /// `None` if some vertex would get in- or out-degree two.
    pub fn join(&self, other: &DpState, bag: &[usize]) -> Option<(DpState, usize)> {
        let k = bag.len();
        let mut degrees = Vec::with_capacity(k);
        let mut jump = vec![usize::MAX; k];
        for i in 0..k {
            let (a, b) = (self.slots[i], other.slots[i]);
            let (ia, oa) = a.degrees();
            let (ib, ob) = b.degrees();
            if ia + ib > 1 || oa + ob > 1 {
                return None;
            }
            degrees.push((ia + ib, oa + ob));
            for s in [a, b] {
                if let Slot::Head(e) = s {
                    jump[i] = pos(bag, e as usize);
                }
            }
        }

        let mut slots = vec![Slot::Free; k];
        let mut visited = vec![false; k];
        for i in 0..k {
            match degrees[i] {
                (1, 1) => slots[i] = Slot::Done,
                (0, 1) => {
                    visited[i] = true;
                    let mut cur = jump[i];
                    while degrees[cur].1 == 1 {
                        visited[cur] = true;
                        cur = jump[cur];
                    }
                    visited[cur] = true;
                    slots[i] = Slot::Head(bag[cur] as u32);
                    slots[cur] = Slot::Tail(bag[i] as u32);
                }
                _ => {}
            }
        }
        let mut cycles = 0;
        for i in 0..k {
            if jump[i] != usize::MAX && !visited[i] {
                cycles += 1;
                let mut cur = i;
                while !visited[cur] {
                    visited[cur] = true;
                    cur = jump[cur];
                }
            }
        }
        Some((DpState { slots }, cycles))
    }
}
