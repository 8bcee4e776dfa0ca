//! The alpine identities: the slalom identity and the two Giant Slalom
//! (GS) identities, in both their amateur (ordinary binomial, integer
//! valued) and pro (Gaussian binomial, polynomial valued) forms.
//!
//! Each identity equates an alternating sum over a quadratic sequence of
//! columns with a simple recurrence:
//!
//! - GS1: `P(n) = sum (-1)^l x^(a(l)) [n, floor((n+5l)/2)]` satisfies
//!   `P(n) = P(n-1) + x^(n-1) P(n-2)`, `P(-1) = 0`, `P(0) = 1`.
//! - GS2: `Q(n) = sum (-1)^l x^(b(l)) [n, floor((n-1+5l)/2)]` satisfies
//!   `Q(n) = Q(n-1) + x^(n-1) Q(n-2)`, `Q(0) = 0`, `Q(1) = 1`.
//! - Slalom: `R(n) = sum (-1)^l x^(c(l)) [n, floor((n+3l)/2)]` is the
//!   constant sequence `1, 1, 1, ...`.
//!
//! with exponents `a(l) = (5l^2-l)/2`, `b(l) = (5l^2-3l)/2`, and
//! `c(l) = (3l^2-l)/2`. Setting `x = 1` turns the GS identities into the
//! Fibonacci alternating-binomial sums `p(n)` and `q(n)` and the slalom
//! identity into the constant sequence `r(n) = 1`.
//!
//! Summation indices run over every `l` whose column lands inside `[0, n]`;
//! all other terms vanish because the binomial does.

use crate::poly::Poly;
use crate::qbinom::{binomial, QBinomTable};
use num_bigint::BigInt;
use num_traits::Zero;

/// Selects one of the three quadratic exponent/column families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentKind {
    /// `a(l) = (5l^2 - l)/2`, columns `floor((n+5l)/2)`.
    Gs1,
    /// `b(l) = (5l^2 - 3l)/2`, columns `floor((n-1+5l)/2)`.
    Gs2,
    /// `c(l) = (3l^2 - l)/2` (the pentagonal numbers), columns `floor((n+3l)/2)`.
    Slalom,
}

impl ExponentKind {
    /// The quadratic exponent at `lambda`. Always a nonnegative integer:
    /// the numerator is a product of two factors of opposite parity.
    pub fn exponent(self, lambda: i64) -> u64 {
        let v = match self {
            ExponentKind::Gs1 => 5 * lambda * lambda - lambda,
            ExponentKind::Gs2 => 5 * lambda * lambda - 3 * lambda,
            ExponentKind::Slalom => 3 * lambda * lambda - lambda,
        };
        debug_assert!(v >= 0 && v % 2 == 0);
        (v / 2) as u64
    }

    /// Column index of the `lambda` term in row `n`.
    pub fn column(self, n: i64, lambda: i64) -> i64 {
        match self {
            ExponentKind::Gs1 => (n + 5 * lambda).div_euclid(2),
            ExponentKind::Gs2 => (n - 1 + 5 * lambda).div_euclid(2),
            ExponentKind::Slalom => (n + 3 * lambda).div_euclid(2),
        }
    }

    /// All `lambda` whose column lies in `[0, n]`, in increasing order.
    pub fn lambda_range(self, n: i64) -> Vec<i64> {
        let bound = n / 3 + 1;
        (-bound..=bound)
            .filter(|&l| {
                let c = self.column(n, l);
                0 <= c && c <= n
            })
            .collect()
    }
}

fn pro_sum_with(table: &mut QBinomTable, kind: ExponentKind, n: i64) -> Poly {
    let mut acc = Poly::zero();
    for lambda in kind.lambda_range(n) {
        let col = kind.column(n, lambda);
        let term = table.gaussian(n as u32, col).shift(kind.exponent(lambda) as usize);
        acc = if lambda.rem_euclid(2) == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
        .expect("exact polynomials cannot mismatch");
    }
    acc
}

/// `P(n)` by explicit summation. Requires `n >= -1`; `P(-1) = 0`.
pub fn gs1_sum(n: i64) -> Poly {
    gs1_sum_with(&mut QBinomTable::new(), n)
}

/// [`gs1_sum`] against a caller-supplied memo table, for sweeps.
pub fn gs1_sum_with(table: &mut QBinomTable, n: i64) -> Poly {
    assert!(n >= -1, "gs1_sum requires n >= -1");
    if n == -1 {
        return Poly::zero();
    }
    pro_sum_with(table, ExponentKind::Gs1, n)
}

/// `Q(n)` by explicit summation. Requires `n >= 0`.
pub fn gs2_sum(n: i64) -> Poly {
    gs2_sum_with(&mut QBinomTable::new(), n)
}

/// [`gs2_sum`] against a caller-supplied memo table, for sweeps.
pub fn gs2_sum_with(table: &mut QBinomTable, n: i64) -> Poly {
    assert!(n >= 0, "gs2_sum requires n >= 0");
    pro_sum_with(table, ExponentKind::Gs2, n)
}

/// `R(n)` by explicit summation. Requires `n >= 0`.
pub fn slalom_sum(n: i64) -> Poly {
    slalom_sum_with(&mut QBinomTable::new(), n)
}

/// [`slalom_sum`] against a caller-supplied memo table, for sweeps.
pub fn slalom_sum_with(table: &mut QBinomTable, n: i64) -> Poly {
    assert!(n >= 0, "slalom_sum requires n >= 0");
    pro_sum_with(table, ExponentKind::Slalom, n)
}

/// `P(n)` built purely from the recurrence
/// `P(n) = P(n-1) + x^(n-1) P(n-2)` with `P(-1) = 0`, `P(0) = 1`.
pub fn gs1_rec(n: i64) -> Poly {
    assert!(n >= -1, "gs1_rec requires n >= -1");
    let (mut prev, mut cur) = (Poly::zero(), Poly::one()); // P(-1), P(0)
    for m in 1..=n {
        let next = cur
            .add(&prev.shift((m - 1) as usize))
            .expect("exact polynomials cannot mismatch");
        prev = cur;
        cur = next;
    }
    if n == -1 {
        Poly::zero()
    } else {
        cur
    }
}

/// `Q(n)` built purely from the recurrence
/// `Q(n) = Q(n-1) + x^(n-1) Q(n-2)` with `Q(0) = 0`, `Q(1) = 1`.
pub fn gs2_rec(n: i64) -> Poly {
    assert!(n >= 0, "gs2_rec requires n >= 0");
    if n == 0 {
        return Poly::zero();
    }
    let (mut prev, mut cur) = (Poly::zero(), Poly::one()); // Q(0), Q(1)
    for m in 2..=n {
        let next = cur
            .add(&prev.shift((m - 1) as usize))
            .expect("exact polynomials cannot mismatch");
        prev = cur;
        cur = next;
    }
    cur
}

/// `R(n)` from the recurrence `R(n) = R(n-1)`, `R(0) = 1`: constantly 1.
pub fn slalom_rec(n: i64) -> Poly {
    assert!(n >= 0, "slalom_rec requires n >= 0");
    Poly::one()
}

/// The amateur (ordinary binomial) alternating sum of the given family,
/// computed with integer binomials only: `p`, `q`, or `r` according to
/// `kind`. Requires `n >= -1` for GS1 and `n >= 0` otherwise.
pub fn amateur_sum(kind: ExponentKind, n: i64) -> BigInt {
    match kind {
        ExponentKind::Gs1 => assert!(n >= -1, "amateur p requires n >= -1"),
        _ => assert!(n >= 0, "amateur q and r require n >= 0"),
    }
    if n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for lambda in kind.lambda_range(n) {
        let term = binomial(n as u32, kind.column(n, lambda));
        if lambda.rem_euclid(2) == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Amateur recurrence values: Fibonacci for `p` and `q`, constant 1 for `r`.
fn amateur_rec(kind: ExponentKind, n: i64) -> BigInt {
    match kind {
        ExponentKind::Gs1 => {
            // p(-1) = 0, p(0) = 1
            let (mut prev, mut cur) = (BigInt::zero(), BigInt::from(1));
            for _ in 1..=n {
                let next = &prev + &cur;
                prev = cur;
                cur = next;
            }
            if n == -1 {
                BigInt::zero()
            } else {
                cur
            }
        }
        ExponentKind::Gs2 => {
            // q(0) = 0, q(1) = 1
            if n == 0 {
                return BigInt::zero();
            }
            let (mut prev, mut cur) = (BigInt::zero(), BigInt::from(1));
            for _ in 2..=n {
                let next = &prev + &cur;
                prev = cur;
                cur = next;
            }
            cur
        }
        ExponentKind::Slalom => BigInt::from(1),
    }
}

/// The six verifiable identities: three pro, three amateur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Gs1,
    Gs2,
    Slalom,
    AmateurP,
    AmateurQ,
    AmateurR,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Gs1 => "gs1",
            IdentityKind::Gs2 => "gs2",
            IdentityKind::Slalom => "slalom",
            IdentityKind::AmateurP => "amateur-p",
            IdentityKind::AmateurQ => "amateur-q",
            IdentityKind::AmateurR => "amateur-r",
        }
    }

    /// The exponent/column family behind this identity.
    pub fn exponent_kind(self) -> ExponentKind {
        match self {
            IdentityKind::Gs1 | IdentityKind::AmateurP => ExponentKind::Gs1,
            IdentityKind::Gs2 | IdentityKind::AmateurQ => ExponentKind::Gs2,
            IdentityKind::Slalom | IdentityKind::AmateurR => ExponentKind::Slalom,
        }
    }

    pub fn is_amateur(self) -> bool {
        matches!(
            self,
            IdentityKind::AmateurP | IdentityKind::AmateurQ | IdentityKind::AmateurR
        )
    }
}

/// One row of an identity verification: the summation value and the
/// recurrence value at the same `n`. Amateur rows hold constant
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRow {
    pub n: i64,
    pub sum: Poly,
    pub rec: Poly,
    pub equal: bool,
}

/// Outcome of comparing sum form against recurrence form for `0 <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub max_n: i64,
    pub rows: Vec<IdentityRow>,
    pub all_pass: bool,
}

/// Compare the explicit sum against the recurrence for every `n` up to
/// `max_n` (exact equality, row by row).
pub fn verify_identity(kind: IdentityKind, max_n: i64) -> IdentityReport {
    assert!(max_n >= 0, "verify_identity requires max_n >= 0");
    let mut table = QBinomTable::new();
    let mut rows = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        let (sum, rec) = if kind.is_amateur() {
            let family = kind.exponent_kind();
            (
                Poly::constant(amateur_sum(family, n)),
                Poly::constant(amateur_rec(family, n)),
            )
        } else {
            match kind {
                IdentityKind::Gs1 => (gs1_sum_with(&mut table, n), gs1_rec(n)),
                IdentityKind::Gs2 => (gs2_sum_with(&mut table, n), gs2_rec(n)),
                IdentityKind::Slalom => (slalom_sum_with(&mut table, n), slalom_rec(n)),
                _ => unreachable!(),
            }
        };
        let equal = sum == rec;
        rows.push(IdentityRow { n, sum, rec, equal });
    }
    let all_pass = rows.iter().all(|r| r.equal);
    IdentityReport { kind, max_n, rows, all_pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_values() {
        assert_eq!(ExponentKind::Gs1.exponent(0), 0);
        assert_eq!(ExponentKind::Gs1.exponent(1), 2);
        assert_eq!(ExponentKind::Gs1.exponent(-1), 3);
        assert_eq!(ExponentKind::Gs2.exponent(1), 1);
        assert_eq!(ExponentKind::Gs2.exponent(-1), 4);
        assert_eq!(ExponentKind::Slalom.exponent(-2), 7);
    }

    #[test]
    fn gs1_base_cases_and_small_values() {
        assert_eq!(gs1_sum(-1), Poly::zero());
        assert_eq!(gs1_sum(0), Poly::one());
        assert_eq!(gs1_sum(2), Poly::from_ints(&[1, 1]));
        assert_eq!(gs1_sum(8).eval_at_one().unwrap(), BigInt::from(34));
    }

    #[test]
    fn gs2_base_cases_and_small_values() {
        assert_eq!(gs2_sum(0), Poly::zero());
        assert_eq!(gs2_sum(1), Poly::one());
        // lambda = 0 contributes [3 1] = 1 + x + x^2, lambda = 1 subtracts x [3 3]
        assert_eq!(gs2_sum(3), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(gs2_sum(5), Poly::from_ints(&[1, 0, 1, 1, 1, 0, 1]));
    }

    #[test]
    fn slalom_sum_is_one() {
        assert_eq!(slalom_sum(0), Poly::one());
        // [3 1] - x^2 [3 0] - x [3 3]
        assert_eq!(slalom_sum(3), Poly::one());
        assert_eq!(slalom_sum(12), Poly::one());
    }

    #[test]
    fn recurrence_forms() {
        assert_eq!(gs1_rec(1), Poly::one());
        assert_eq!(gs2_rec(4), Poly::from_ints(&[1, 0, 1, 1]));
        for n in 0..20 {
            assert_eq!(slalom_rec(n), Poly::one());
        }
    }

    #[test]
    fn amateur_sequences() {
        let p: Vec<i64> = (0..=8).map(|n| i64::try_from(&amateur_sum(ExponentKind::Gs1, n)).unwrap()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let q: Vec<i64> = (0..=6).map(|n| i64::try_from(&amateur_sum(ExponentKind::Gs2, n)).unwrap()).collect();
        assert_eq!(q, vec![0, 1, 1, 2, 3, 5, 8]);
        for n in 0..=30 {
            assert_eq!(amateur_sum(ExponentKind::Slalom, n), BigInt::from(1));
        }
    }

    #[test]
    fn verify_reports() {
        let r = verify_identity(IdentityKind::Gs1, 20);
        assert!(r.all_pass);
        assert_eq!(r.rows.len(), 21);
        let r = verify_identity(IdentityKind::Slalom, 20);
        assert!(r.all_pass);
        assert!(r.rows.iter().all(|row| row.sum == Poly::one()));
        let r = verify_identity(IdentityKind::Gs2, 0);
        assert_eq!(r.rows.len(), 1);
        assert!(r.all_pass);
        assert_eq!(r.rows[0].sum, Poly::zero());
    }

    #[test]
    fn amateur_equals_pro_at_one() {
        let mut table = QBinomTable::new();
        for n in 0..=25 {
            assert_eq!(
                gs1_sum_with(&mut table, n).eval_at_one().unwrap(),
                amateur_sum(ExponentKind::Gs1, n)
            );
            assert_eq!(
                gs2_sum_with(&mut table, n).eval_at_one().unwrap(),
                amateur_sum(ExponentKind::Gs2, n)
            );
            assert_eq!(
                slalom_sum_with(&mut table, n).eval_at_one().unwrap(),
                amateur_sum(ExponentKind::Slalom, n)
            );
        }
    }
}
