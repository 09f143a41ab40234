//! Value semirings carried by the cycle-cover DP.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;

/// Accumulated weight of a family of partial covers.
///
/// `join` multiplies weights of covers glued at a join node and `close_cycle` is
/// applied once for every cycle a transition completes.
pub trait CoverWeight: Clone {
    type Arc;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn accumulate(&mut self, other: Self);
    fn times_arc(&self, w: &Self::Arc) -> Self;
    fn close_cycle(self) -> Self;
    fn join(&self, other: &Self) -> Self;
}

/// Sum of arc-weight products, each cover signed by `(-1)^cycles`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signed(pub BigInt);

impl CoverWeight for Signed {
    type Arc = BigInt;

    fn zero() -> Self {
        Signed(BigInt::zero())
    }

    fn one() -> Self {
        Signed(BigInt::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn accumulate(&mut self, other: Self) {
        self.0 += other.0;
    }

    fn times_arc(&self, w: &BigInt) -> Self {
        Signed(&self.0 * w)
    }

    fn close_cycle(self) -> Self {
        Signed(-self.0)
    }

    fn join(&self, other: &Self) -> Self {
        Signed(&self.0 * &other.0)
    }
}

/// Weight sums graded by cycle count: entry `k` collects covers with `k` closed cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graded(pub Vec<BigInt>);

impl CoverWeight for Graded {
    type Arc = BigInt;

    fn zero() -> Self {
        Graded(vec![BigInt::zero()])
    }

    fn one() -> Self {
        Graded(vec![BigInt::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn accumulate(&mut self, other: Self) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
    }

    fn times_arc(&self, w: &BigInt) -> Self {
        Graded(self.0.iter().map(|c| c * w).collect())
    }

    fn close_cycle(mut self) -> Self {
        self.0.insert(0, BigInt::zero());
        self
    }

    fn join(&self, other: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Graded(out)
    }
}

/// Signed sum with polynomial arc weights, used for `det(xI - A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPoly(pub IntPolynomial);

impl CoverWeight for SignedPoly {
    type Arc = IntPolynomial;

    fn zero() -> Self {
        SignedPoly(IntPolynomial::zero())
    }

    fn one() -> Self {
        SignedPoly(IntPolynomial::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn accumulate(&mut self, other: Self) {
        self.0 += &other.0;
    }

    fn times_arc(&self, w: &IntPolynomial) -> Self {
        SignedPoly(&self.0 * w)
    }

    fn close_cycle(self) -> Self {
        SignedPoly(-self.0)
    }

    fn join(&self, other: &Self) -> Self {
        SignedPoly(&self.0 * &other.0)
    }
}
