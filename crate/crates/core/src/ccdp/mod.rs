//! Cycle-cover dynamic programming over nice tree decompositions.
//!
//! A cycle cover of a digraph is a set of vertex-disjoint cycles (self-loops
//! included) covering every vertex; it is the cycle structure of a permutation
//! `σ` with `a_{i,σ(i)} ≠ 0`. Weighting a cover by the product of its arc entries
//! and signing it by `(-1)^(n + cycles)` turns the sum over covers into the
//! determinant, so the engine below produces the cycle-count histogram, the
//! determinant and `det(xI - A)` from the same state space.

mod engine;
pub mod state;
pub mod weight;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UnderlyingGraph};
use crate::matrix::SquareIntMatrix;
use crate::nice::NiceTreeDecomposition;
use crate::poly::IntPolynomial;

use weight::{Graded, Signed, SignedPoly};

pub const DEFAULT_MAX_WIDTH: usize = 10;
pub const DEFAULT_MAX_ORIENTATION_EDGES: usize = 30;

/// Engine configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest decomposition width the engine accepts.
    pub max_width: usize,
    /// Largest edge count for which Eulerian orientations are enumerated.
    pub max_orientation_edges: usize,
}

impl Limits {
    pub fn with_max_width(max_width: usize) -> Self {
        Limits {
            max_width,
            ..Limits::default()
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_width: DEFAULT_MAX_WIDTH,
            max_orientation_edges: DEFAULT_MAX_ORIENTATION_EDGES,
        }
    }
}

/// Cycle covers (or their weight sums) tabulated by number of cycles.
///
/// Only nonzero entries are stored. For `n = 0` the single empty cover gives `{0: 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleCoverHistogram {
    n: usize,
    counts: BTreeMap<usize, BigInt>,
}

impl CycleCoverHistogram {
    pub fn new(n: usize, counts: BTreeMap<usize, BigInt>) -> Self {
        let counts = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        CycleCoverHistogram { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<usize, BigInt> {
        &self.counts
    }

    pub fn get(&self, k: usize) -> BigInt {
        self.counts.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// `Σ_k (-1)^(n+k) counts[k]`: the determinant when the counts are weighted sums.
    pub fn signed_sum(&self) -> BigInt {
        self.counts
            .iter()
            .map(|(&k, c)| if (self.n + k) % 2 == 0 { c.clone() } else { -c })
            .sum()
    }
}

fn check_nice<G: UnderlyingGraph + ?Sized>(
    g: &G,
    nt: &NiceTreeDecomposition,
    limits: Limits,
) -> Result<()> {
    if nt.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition has {} vertices, input has {}",
            nt.vertex_count(),
            g.vertex_count()
        )));
    }
    if nt.width() > limits.max_width {
        return Err(Error::WidthLimitExceeded {
            width: nt.width(),
            limit: limits.max_width,
        });
    }
    let introduced = nt.introduced_edges();
    if let Some((u, v)) = g.underlying_edges().into_iter().find(|e| !introduced.contains(e)) {
        return Err(Error::InvalidDecomposition(format!(
            "edge {{{u}, {v}}} of the input is never introduced"
        )));
    }
    Ok(())
}

fn multiplicities(d: &DirectedMultigraph) -> HashMap<(usize, usize), BigInt> {
    let mut mult: HashMap<(usize, usize), BigInt> = HashMap::new();
    for &a in d.arcs() {
        *mult.entry(a).or_default() += 1;
    }
    mult
}

fn graded_histogram(n: usize, graded: Graded) -> CycleCoverHistogram {
    CycleCoverHistogram::new(n, graded.0.into_iter().enumerate().collect())
}

/// Number of cycle covers of `d` with exactly `k` cycles, for every `k`.
///
/// Parallel arcs are distinguishable, so a cover's count is the product of the
/// multiplicities of its arcs.
pub fn cycle_cover_histogram(
    d: &DirectedMultigraph,
    nt: &NiceTreeDecomposition,
    limits: Limits,
) -> Result<CycleCoverHistogram> {
    check_nice(d, nt, limits)?;
    let mult = multiplicities(d);
    let graded: Graded = engine::run(
        nt,
        |u, v| mult.get(&(u, v)).cloned(),
        |v| mult.get(&(v, v)).cloned(),
    );
    Ok(graded_histogram(d.vertex_count(), graded))
}

fn entry(m: &SquareIntMatrix, u: usize, v: usize) -> Option<BigInt> {
    let e = m.get(u, v);
    (!e.is_zero()).then(|| e.clone())
}

/// Cycle covers of the support of `m` weighted by the product of their entries,
/// tabulated by number of cycles.
pub fn weighted_cycle_cover_histogram(
    m: &SquareIntMatrix,
    nt: &NiceTreeDecomposition,
    limits: Limits,
) -> Result<CycleCoverHistogram> {
    check_nice(m, nt, limits)?;
    let graded: Graded = engine::run(nt, |u, v| entry(m, u, v), |v| entry(m, v, v));
    Ok(graded_histogram(m.n(), graded))
}

/// Exact determinant as the signed sum of weighted cycle covers.
pub fn determinant(
    m: &SquareIntMatrix,
    nt: &NiceTreeDecomposition,
    limits: Limits,
) -> Result<BigInt> {
    check_nice(m, nt, limits)?;
    let Signed(sum) = engine::run(nt, |u, v| entry(m, u, v), |v| entry(m, v, v));
    Ok(if m.n() % 2 == 0 { sum } else { -sum })
}

/// `det(xI - A)`: diagonal arcs carry `x - a_vv`, off-diagonal arcs `-a_uv`.
pub fn characteristic_polynomial(
    m: &SquareIntMatrix,
    nt: &NiceTreeDecomposition,
    limits: Limits,
) -> Result<IntPolynomial> {
    check_nice(m, nt, limits)?;
    let SignedPoly(p) = engine::run(
        nt,
        |u, v| entry(m, u, v).map(|a| IntPolynomial::constant(-a)),
        |v| Some(IntPolynomial::linear_root(m.get(v, v))),
    );
    Ok(if m.n() % 2 == 0 { p } else { -p })
}

/// `(-1)^n`, exposed for callers assembling determinants from histograms.
pub fn parity_sign(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
