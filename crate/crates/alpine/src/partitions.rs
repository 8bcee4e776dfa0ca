//! Integer partitions, restricted-partition enumeration, and the truncated
//! products and theta series they generate.
//!
//! - [`enumerate_partitions`] / [`weight_poly`]: brute-force weight sums
//!   over partitions matching a [`PartitionPredicate`], the combinatorial
//!   oracle everything else is checked against
//! - [`euler_e`]: the partition generating function `prod 1/(1-x^i)`
//! - [`euler_product`]: `prod (1-x^i)`, whose series is the pentagonal
//!   number theorem
//! - [`theta_series`]: the alternating sums `sum (-1)^l x^(e(l))` for the
//!   three quadratic exponents
//! - [`mod5_product`]: products of `(1-x^e)` (or their reciprocals) over
//!   exponents in prescribed residue classes mod 5
//! - [`rr_check`]: both Rogers-Ramanujan identities at any truncation order
//!
//! All series carry an explicit truncation order; nothing is approximate.

use crate::identities::{gs1_sum, gs2_sum, ExponentKind};
use crate::poly::Poly;
use num_bigint::BigInt;
use std::collections::BTreeSet;
use std::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and at least 1.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(parts.last().is_none_or(|&p| p >= 1), "partition parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Conjunction of bounds a partition must satisfy. An empty predicate
/// admits every partition; `min_gap >= 2` with nothing else is the
/// kangaroo condition (consecutive parts differ by at least 2).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartitionPredicate {
    max_part: Option<u64>,
    min_part: Option<u64>,
    max_parts: Option<usize>,
    min_gap: Option<u64>,
    residue_filter: Option<(u64, BTreeSet<u64>)>,
}

impl PartitionPredicate {
    /// The unrestricted predicate.
    pub fn any() -> Self {
        Self::default()
    }

    /// Consecutive parts must differ by at least 2.
    pub fn kangaroo() -> Self {
        Self::any().min_gap(2)
    }

    pub fn max_part(mut self, bound: u64) -> Self {
        self.max_part = Some(bound);
        self
    }

    pub fn min_part(mut self, bound: u64) -> Self {
        self.min_part = Some(bound);
        self
    }

    pub fn max_parts(mut self, bound: usize) -> Self {
        self.max_parts = Some(bound);
        self
    }

    pub fn min_gap(mut self, bound: u64) -> Self {
        self.min_gap = Some(bound);
        self
    }

    /// Every part must be congruent (mod `modulus`) to one of `residues`.
    pub fn residues(mut self, modulus: u64, residues: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus >= 1);
        let set: BTreeSet<u64> = residues.into_iter().map(|r| r % modulus).collect();
        self.residue_filter = Some((modulus, set));
        self
    }

    /// Whether the partition meets every present bound.
    pub fn matches(&self, p: &Partition) -> bool {
        let parts = p.parts();
        if let Some(b) = self.max_part {
            if parts.first().is_some_and(|&a| a > b) {
                return false;
            }
        }
        if let Some(b) = self.min_part {
            if parts.last().is_some_and(|&a| a < b) {
                return false;
            }
        }
        if let Some(b) = self.max_parts {
            if parts.len() > b {
                return false;
            }
        }
        if let Some(g) = self.min_gap {
            if parts.windows(2).any(|w| w[0] - w[1] < g) {
                return false;
            }
        }
        if let Some((m, ref set)) = self.residue_filter {
            if parts.iter().any(|&a| !set.contains(&(a % m))) {
                return false;
            }
        }
        true
    }
}

/// All partitions of weight at most `max_weight` satisfying `pred`, each
/// exactly once, ordered by weight and then by decreasing lexicographic
/// part sequence (so the one-part partition of each weight comes first).
///
/// Generation is a bounded descent on the largest remaining part, pruned
/// by the predicate, so only matching partitions are ever built.
pub fn enumerate_partitions(pred: &PartitionPredicate, max_weight: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<u64> = Vec::new();
    for w in 0..=max_weight {
        descend(pred, w, None, &mut acc, &mut out);
    }
    out
}

fn descend(
    pred: &PartitionPredicate,
    remaining: u64,
    prev_part: Option<u64>,
    acc: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: acc.clone() });
        return;
    }
    if pred.max_parts.is_some_and(|b| acc.len() >= b) {
        return;
    }
    let mut hi = remaining;
    if let Some(b) = pred.max_part {
        hi = hi.min(b);
    }
    if let Some(p) = prev_part {
        let gap = pred.min_gap.unwrap_or(0);
        if p < gap {
            return;
        }
        hi = hi.min(p - gap);
    }
    let lo = pred.min_part.unwrap_or(1).max(1);
    if lo > hi {
        return;
    }
    for part in (lo..=hi).rev() {
        if let Some((m, ref set)) = pred.residue_filter {
            if !set.contains(&(part % m)) {
                continue;
            }
        }
        acc.push(part);
        descend(pred, remaining - part, Some(part), acc, out);
        acc.pop();
    }
}

/// Total weight `sum x^(weight)` over all partitions of weight at most `d`
/// satisfying `pred`, as a series truncated at order `d`.
pub fn weight_poly(pred: &PartitionPredicate, d: u64) -> Poly {
    let mut coeffs = vec![BigInt::from(0); d as usize + 1];
    for p in enumerate_partitions(pred, d) {
        coeffs[p.weight() as usize] += 1;
    }
    Poly::from_coeffs(coeffs).truncated(d as usize)
}

/// The partition generating function `E = prod_(i>=1) 1/(1-x^i)`, truncated
/// at order `d`. Only factors with `i <= d` contribute below the cut.
pub fn euler_e(d: usize) -> Poly {
    let mut acc = Poly::one().truncated(d);
    for i in 1..=d {
        acc = acc.mul(&Poly::geometric_factor(i, d));
    }
    acc
}

/// `prod_(i=1..d) (1 - x^i)` truncated at order `d`: the Euler product
/// whose expansion is the pentagonal number series.
pub fn euler_product(d: usize) -> Poly {
    let mut acc = Poly::one().truncated(d);
    for i in 1..=d {
        acc = acc.mul_trunc(&Poly::one_minus_monomial(i), d);
    }
    acc
}

/// The alternating theta-type series `sum_l (-1)^l x^(e(l))` over all
/// integers `l` with exponent at most `d`, truncated at order `d`.
pub fn theta_series(kind: ExponentKind, d: usize) -> Poly {
    let mut coeffs = vec![BigInt::from(0); d + 1];
    coeffs[0] += 1; // lambda = 0
    for step in [1i64, -1] {
        let mut lambda = step;
        loop {
            let e = kind.exponent(lambda) as usize;
            if e > d {
                break;
            }
            if lambda.rem_euclid(2) == 0 {
                coeffs[e] += 1;
            } else {
                coeffs[e] -= 1;
            }
            lambda += step;
        }
    }
    Poly::from_coeffs(coeffs).truncated(d)
}

/// Product over all exponents `e in 1..=d` whose residue mod 5 lies in
/// `residues` of either `(1 - x^e)` or, when `reciprocal` is set, its
/// geometric inverse; truncated at order `d`. Residue 5 stands for the
/// multiples of 5. An empty residue set yields 1.
pub fn mod5_product(residues: &[u8], reciprocal: bool, d: usize) -> Poly {
    assert!(
        residues.iter().all(|&r| (1..=5).contains(&r)),
        "residues must lie in 1..=5 (5 denoting multiples of 5)"
    );
    let mut acc = Poly::one().truncated(d);
    for e in 1..=d {
        let r = match (e % 5) as u8 {
            0 => 5,
            r => r,
        };
        if !residues.contains(&r) {
            continue;
        }
        let factor = if reciprocal {
            Poly::geometric_factor(e, d)
        } else {
            Poly::one_minus_monomial(e)
        };
        acc = acc.mul_trunc(&factor, d);
    }
    acc
}

/// Result of checking one Rogers-Ramanujan identity at a truncation order:
/// the kangaroo-sum side, the mod-5 product side, and their equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrCheck {
    pub variant: u8,
    pub degree: usize,
    pub sum_side: Poly,
    pub product_side: Poly,
    pub equal: bool,
}

/// Check the first (`variant = 1`) or second (`variant = 2`)
/// Rogers-Ramanujan identity exactly modulo `x^(d+1)`.
///
/// The infinite sum side is realized by a finite row: `P(n)` is stable
/// through degree `n - 1`, so `P(d+1)` (and likewise `Q(d+2)`) truncates to
/// the limit series. The product side is the corresponding reciprocal
/// mod-5 product.
pub fn rr_check(variant: u8, d: usize) -> RrCheck {
    let (sum_side, product_side) = match variant {
        1 => (
            gs1_sum(d as i64 + 1).truncated(d),
            mod5_product(&[1, 4], true, d),
        ),
        2 => (
            gs2_sum(d as i64 + 2).truncated(d),
            mod5_product(&[2, 3], true, d),
        ),
        _ => panic!("Rogers-Ramanujan variant must be 1 or 2"),
    };
    let equal = sum_side == product_side;
    RrCheck { variant, degree: d, sum_side, product_side, equal }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_by_weight(parts: &[Partition], max: u64) -> Vec<usize> {
        let mut c = vec![0usize; max as usize + 1];
        for p in parts {
            c[p.weight() as usize] += 1;
        }
        c
    }

    #[test]
    fn unrestricted_counts() {
        let all = enumerate_partitions(&PartitionPredicate::any(), 4);
        assert_eq!(counts_by_weight(&all, 4), vec![1, 1, 2, 3, 5]);
    }

    #[test]
    fn kangaroo_counts_and_listing() {
        let ks = enumerate_partitions(&PartitionPredicate::kangaroo(), 4);
        assert_eq!(counts_by_weight(&ks, 4), vec![1, 1, 1, 1, 2]);
        let listed: Vec<Vec<u64>> = ks.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            listed,
            vec![vec![], vec![1], vec![2], vec![3], vec![4], vec![3, 1]]
        );
    }

    #[test]
    fn bounded_part_listing() {
        let ones = enumerate_partitions(&PartitionPredicate::any().max_part(1), 3);
        let listed: Vec<Vec<u64>> = ones.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(listed, vec![vec![], vec![1], vec![1, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn enumeration_matches_predicate_filter() {
        // pruned descent against filtering the unrestricted list
        let preds = [
            PartitionPredicate::kangaroo(),
            PartitionPredicate::any().max_part(3).max_parts(2),
            PartitionPredicate::any().min_part(2).residues(5, [1, 4]),
            PartitionPredicate::kangaroo().min_part(2).max_part(7),
        ];
        let all = enumerate_partitions(&PartitionPredicate::any(), 12);
        for pred in &preds {
            let filtered: Vec<&Partition> = all.iter().filter(|p| pred.matches(p)).collect();
            let direct = enumerate_partitions(pred, 12);
            assert_eq!(direct.len(), filtered.len());
            for (a, b) in direct.iter().zip(filtered) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn weight_polys_match_identity_rows() {
        // kangaroo partitions with max part <= 1
        let w = weight_poly(&PartitionPredicate::kangaroo().max_part(1), 6);
        assert_eq!(w.without_trunc(), Poly::from_ints(&[1, 1]));
        assert_eq!(w.clone(), gs1_sum(2).truncated(6));
        // kangaroo, min part >= 2, max part <= 4
        let w = weight_poly(&PartitionPredicate::kangaroo().min_part(2).max_part(4), 6);
        assert_eq!(w.without_trunc(), gs2_sum(5));
        // partitions in a 2 x 2 box
        let w = weight_poly(&PartitionPredicate::any().max_part(2).max_parts(2), 4);
        assert_eq!(w.without_trunc(), Poly::from_ints(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn euler_e_small_orders() {
        assert_eq!(euler_e(0), Poly::one().truncated(0));
        assert_eq!(euler_e(5).coeffs(), Poly::from_ints(&[1, 1, 2, 3, 5, 7]).coeffs());
        // brute-force partition count of 10
        let all = enumerate_partitions(&PartitionPredicate::any(), 10);
        let tens = all.iter().filter(|p| p.weight() == 10).count();
        assert_eq!(tens, 42);
        assert_eq!(euler_e(10).coeff(10), BigInt::from(42));
    }

    #[test]
    fn euler_product_small_orders() {
        assert_eq!(euler_product(0), Poly::one().truncated(0));
        assert_eq!(euler_product(2).coeffs(), Poly::from_ints(&[1, -1, -1]).coeffs());
        assert_eq!(
            euler_product(7).coeffs(),
            Poly::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1]).coeffs()
        );
    }

    #[test]
    fn theta_series_small_orders() {
        assert_eq!(
            theta_series(ExponentKind::Slalom, 13).coeffs(),
            Poly::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0]).coeffs()
        );
        assert_eq!(
            theta_series(ExponentKind::Gs1, 12).coeffs(),
            Poly::from_ints(&[1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0]).coeffs()
        );
        assert_eq!(
            theta_series(ExponentKind::Gs2, 8).coeffs(),
            Poly::from_ints(&[1, -1, 0, 0, -1, 0, 0, 1, 0]).coeffs()
        );
    }

    #[test]
    fn mod5_products() {
        assert_eq!(
            mod5_product(&[2, 3, 5], false, 12),
            theta_series(ExponentKind::Gs1, 12)
        );
        // partitions into parts congruent to 1 or 4 mod 5, by brute force
        let pred = PartitionPredicate::any().residues(5, [1, 4]);
        assert_eq!(mod5_product(&[1, 4], true, 6), weight_poly(&pred, 6));
        assert_eq!(
            mod5_product(&[1, 4], true, 6).coeffs(),
            Poly::from_ints(&[1, 1, 1, 1, 2, 2, 3]).coeffs()
        );
        assert_eq!(mod5_product(&[], true, 9), Poly::one().truncated(9));
        assert_eq!(mod5_product(&[], false, 9), Poly::one().truncated(9));
    }

    #[test]
    fn rr_checks_small_orders() {
        let rr1 = rr_check(1, 6);
        assert!(rr1.equal);
        assert_eq!(rr1.sum_side.coeffs(), Poly::from_ints(&[1, 1, 1, 1, 2, 2, 3]).coeffs());
        let rr2 = rr_check(2, 6);
        assert!(rr2.equal);
        assert_eq!(rr2.sum_side.coeffs(), Poly::from_ints(&[1, 0, 1, 1, 1, 1, 2]).coeffs());
        let rr0 = rr_check(1, 0);
        assert!(rr0.equal);
        assert!(rr0.sum_side.is_one());
    }

    #[test]
    #[should_panic(expected = "variant must be 1 or 2")]
    fn rr_check_rejects_other_variants() {
        rr_check(3, 5);
    }
}
