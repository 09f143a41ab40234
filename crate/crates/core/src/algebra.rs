//! Power sums of eigenvalues via Newton's identities.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ccdp::{self, Limits};
use crate::error::{Error, Result};
use crate::matrix::SquareIntMatrix;
use crate::nice::NiceTreeDecomposition;
use crate::poly::IntPolynomial;

/// `p_1, ..., p_K` where `p_k` is the sum of the `k`-th powers of the roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumSequence(pub Vec<BigInt>);

impl PowerSumSequence {
    /// `p_k` for `k >= 1`.
    pub fn get(&self, k: usize) -> &BigInt {
        &self.0[k - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }
}

/// Elementary symmetric functions of the roots of a monic polynomial:
/// `e_i = (-1)^i c_{n-i}`, with `e_0 = 1`.
pub fn elementary_symmetric(chi: &IntPolynomial) -> Result<Vec<BigInt>> {
    if !chi.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = chi.degree().unwrap_or(0);
    Ok((0..=n)
        .map(|i| {
            let c = chi.coeff(n - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect())
}

/// Power sums of the roots of `chi` for `k = 1..=count`.
///
/// Newton: `p_k = Σ_{i=1}^{min(k-1,n)} (-1)^(i-1) e_i p_{k-i} + [k <= n] (-1)^(k-1) k e_k`.
pub fn power_sums_from_charpoly(chi: &IntPolynomial, count: usize) -> Result<PowerSumSequence> {
    let e = elementary_symmetric(chi)?;
    let n = e.len() - 1;
    // p[0] = n is never emitted but keeps the recurrence uniform.
    let mut p: Vec<BigInt> = vec![BigInt::from(n)];
    for k in 1..=count {
        let mut acc = BigInt::zero();
        for i in 1..=n.min(k - 1) {
            let term = &e[i] * &p[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if k <= n {
            let term = &e[k] * BigInt::from(k);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.remove(0);
    Ok(PowerSumSequence(p))
}

/// `trace(A^k)`, as the `k`-th power sum of the eigenvalues read off `det(xI - A)`.
pub fn trace_power(
    m: &SquareIntMatrix,
    nt: &NiceTreeDecomposition,
    k: usize,
    limits: Limits,
) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::from(m.n()));
    }
    let chi = ccdp::characteristic_polynomial(m, nt, limits)?;
    let sums = power_sums_from_charpoly(&chi, k)?;
    Ok(sums.get(k).clone())
}
