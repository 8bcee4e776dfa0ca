//! Ordinary and Gaussian (q-analog) binomial coefficients.
//!
//! The Gaussian binomial `[n k]` is computed in the polynomial ring by the
//! Pascal-style recurrence
//!
//! ```text
//! [n k] = [n-1 k-1] + x^k [n-1 k],    [0 0] = 1,
//! ```
//!
//! with `[n k] = 0` whenever `k < 0` or `k > n`. Staying with the
//! recurrence instead of the quotient-of-products formula keeps every
//! intermediate value inside the ring: no division is ever needed.

use crate::poly::Poly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// A memo table of Gaussian binomials keyed by `(n, k)`.
///
/// The table is a pure cache: results never depend on what was queried
/// before. Access goes through `&mut self`, so concurrent use needs either
/// one table per thread or external serialization; the table-free
/// [`gaussian_binomial`] is the shared-nothing alternative.
#[derive(Debug, Default)]
pub struct QBinomTable {
    memo: HashMap<(u32, u32), Poly>,
}

impl QBinomTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The Gaussian binomial `[n k]`, memoized. Out-of-range `k` gives the
    /// zero polynomial.
    pub fn gaussian(&mut self, n: u32, k: i64) -> Poly {
        if k < 0 || k > n as i64 {
            return Poly::zero();
        }
        self.gaussian_in_range(n, k as u32)
    }

    fn gaussian_in_range(&mut self, n: u32, k: u32) -> Poly {
        if let Some(p) = self.memo.get(&(n, k)) {
            return p.clone();
        }
        let value = if n == 0 {
            Poly::one() // only (0, 0) reaches here
        } else {
            let left = self.gaussian(n - 1, k as i64 - 1);
            let right = self.gaussian(n - 1, k as i64).shift(k as usize);
            left.add(&right).expect("exact polynomials cannot mismatch")
        };
        self.memo.insert((n, k), value.clone());
        value
    }

    /// Number of cached entries.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// Table-free Gaussian binomial: fills the triangle row by row with the
/// same recurrence, keeping only the previous row. Pure function of its
/// arguments, suitable for property tests and parallel callers.
pub fn gaussian_binomial(n: u32, k: i64) -> Poly {
    if k < 0 || k > n as i64 {
        return Poly::zero();
    }
    let k = k as usize;
    let mut row = vec![Poly::one()]; // row 0: [0 0]
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 { row.get(j - 1) } else { None };
            let right = row.get(j).map(|p| p.shift(j));
            let entry = match (left, right) {
                (Some(l), Some(r)) => l.add(&r).expect("exact polynomials cannot mismatch"),
                (Some(l), None) => l.clone(),
                (None, Some(r)) => r,
                (None, None) => unreachable!("every cell has a parent"),
            };
            next.push(entry);
        }
        row = next;
    }
    row[k].clone()
}

/// The ordinary binomial coefficient, zero when `k < 0` or `k > n`.
/// Computed by the multiplicative formula with exact division.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::one();
    for i in 1..=k as u64 {
        acc = acc * BigInt::from(n as u64 - k as u64 + i) / BigInt::from(i);
    }
    acc
}
