//! Dense univariate polynomials over the integers, with truncated power
//! series as a first-class variant.
//!
//! Every value is either an exact polynomial or a series known exactly
//! modulo `x^(D+1)` for an explicit truncation order `D`. Coefficients are
//! arbitrary-precision integers; nothing in this module rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors from polynomial operations that mix incompatible values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Two truncated series with different orders were combined.
    #[error("truncation orders differ: {0} vs {1}")]
    TruncMismatch(usize, usize),
    /// Integer evaluation was requested on a truncated series.
    #[error("cannot evaluate a series truncated at order {0} at an integer point")]
    EvalTruncated(usize),
}

/// A dense polynomial (or truncated power series) with exact integer
/// coefficients. `coeffs[i]` is the coefficient of `x^i`.
///
/// Canonical form: an exact polynomial carries no trailing zero
/// coefficients (the zero polynomial has an empty list); a series truncated
/// at order `D` carries exactly `D + 1` coefficients, trailing zeros
/// included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
    trunc: Option<usize>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new(), trunc: None }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c], trunc: None }
        }
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Poly { coeffs, trunc: None }
    }

    /// An exact polynomial from a coefficient list, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs, trunc: None };
        p.canonicalize();
        p
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 - x^k` as an exact polynomial.
    pub fn one_minus_monomial(k: usize) -> Self {
        assert!(k >= 1, "1 - x^0 is zero; use Poly::zero()");
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        Poly { coeffs, trunc: None }
    }

    /// The geometric series `1 + x^i + x^(2i) + ...` truncated at order `d`,
    /// i.e. the reciprocal of `1 - x^i` modulo `x^(d+1)`.
    ///
    /// Panics if `i < 1`.
    pub fn geometric_factor(i: usize, d: usize) -> Self {
        assert!(i >= 1, "geometric factor requires exponent step i >= 1");
        let mut coeffs = vec![BigInt::zero(); d + 1];
        let mut e = 0;
        while e <= d {
            coeffs[e] = BigInt::one();
            e += i;
        }
        Poly { coeffs, trunc: Some(d) }
    }

    fn canonicalize(&mut self) {
        match self.trunc {
            None => {
                while self.coeffs.last().is_some_and(Zero::is_zero) {
                    self.coeffs.pop();
                }
            }
            Some(d) => self.coeffs.resize(d + 1, BigInt::zero()),
        }
    }

    /// Coefficient list, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The truncation order, if this value is a truncated series.
    pub fn trunc(&self) -> Option<usize> {
        self.trunc
    }

    /// Degree of the highest nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeffs[0].is_one()
    }

    /// Reinterpret as a series truncated at order `d`, discarding any
    /// coefficients above `x^d`.
    ///
    /// Panics if the value is already truncated at an order below `d`:
    /// that would claim precision the coefficients do not have.
    pub fn truncated(mut self, d: usize) -> Self {
        if let Some(d0) = self.trunc {
            assert!(d <= d0, "cannot extend a series truncated at {d0} to order {d}");
        }
        self.trunc = Some(d);
        self.canonicalize();
        self
    }

    /// Drop the truncation marker, reinterpreting the stored coefficients
    /// as an exact polynomial. The caller asserts that nothing was lost to
    /// the truncation.
    pub fn without_trunc(mut self) -> Self {
        self.trunc = None;
        self.canonicalize();
        self
    }

    fn combined_trunc(&self, other: &Poly) -> Result<Option<usize>, PolyError> {
        match (self.trunc, other.trunc) {
            (None, None) => Ok(None),
            (Some(d), None) | (None, Some(d)) => Ok(Some(d)),
            (Some(a), Some(b)) if a == b => Ok(Some(a)),
            (Some(a), Some(b)) => Err(PolyError::TruncMismatch(a, b)),
        }
    }

    /// Coefficientwise sum. Fails if both operands are truncated at
    /// different orders; otherwise the result carries the stricter marker.
    pub fn add(&self, other: &Poly) -> Result<Poly, PolyError> {
        let trunc = self.combined_trunc(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        let mut p = Poly { coeffs, trunc };
        p.canonicalize();
        Ok(p)
    }

    /// Coefficientwise difference, with the same truncation contract as
    /// [`Poly::add`].
    pub fn sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect(), trunc: self.trunc }
    }

    /// Exact convolution product. If either operand is truncated the result
    /// is truncated at the smaller present order.
    pub fn mul(&self, other: &Poly) -> Poly {
        let trunc = match (self.trunc, other.trunc) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        self.mul_impl(other, trunc)
    }

    /// Product truncated at order `d` (on top of any truncation the
    /// operands already carry). Coefficients above `x^d` are never formed.
    pub fn mul_trunc(&self, other: &Poly, d: usize) -> Poly {
        let carried = match (self.trunc, other.trunc) {
            (None, None) => d,
            (Some(t), None) | (None, Some(t)) => t.min(d),
            (Some(a), Some(b)) => a.min(b).min(d),
        };
        self.mul_impl(other, Some(carried))
    }

    fn mul_impl(&self, other: &Poly, trunc: Option<usize>) -> Poly {
        if self.is_zero() || other.is_zero() {
            let mut p = Poly { coeffs: Vec::new(), trunc };
            p.canonicalize();
            return p;
        }
        let full_len = self.coeffs.len() + other.coeffs.len() - 1;
        let len = match trunc {
            Some(d) => full_len.min(d + 1),
            None => full_len,
        };
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let mut p = Poly { coeffs, trunc };
        p.canonicalize();
        p
    }

    /// Multiply by `x^k`: prepend `k` zero coefficients. A truncated series
    /// keeps its order, so the top `k` coefficients fall away.
    pub fn shift(&self, k: usize) -> Poly {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        let mut p = Poly { coeffs, trunc: self.trunc };
        p.canonicalize();
        p
    }

    /// Exact integer evaluation by Horner's rule. Refused on truncated
    /// series, whose high coefficients are unknown.
    pub fn eval_int(&self, t: &BigInt) -> Result<BigInt, PolyError> {
        if let Some(d) = self.trunc {
            return Err(PolyError::EvalTruncated(d));
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        Ok(acc)
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn eval_at_one(&self) -> Result<BigInt, PolyError> {
        self.eval_int(&BigInt::one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        if let Some(d) = self.trunc {
            write!(f, " + O(x^{})", d + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_identity_and_small_cases() {
        let p = Poly::from_ints(&[3, 0, 1]);
        assert_eq!(Poly::zero().add(&p).unwrap(), p);
        assert_eq!(
            Poly::from_ints(&[1, 1]).add(&Poly::from_ints(&[0, 1])).unwrap(),
            Poly::from_ints(&[1, 2])
        );
    }

    #[test]
    fn add_cancels_to_canonical_zero() {
        let cube = Poly::monomial(3);
        let sum = cube.add(&cube.neg()).unwrap();
        assert_eq!(sum, Poly::zero());
        assert!(sum.coeffs().is_empty());
    }

    #[test]
    fn sub_small_cases() {
        let p = Poly::from_ints(&[5, 2, 7]);
        assert_eq!(p.sub(&p).unwrap(), Poly::zero());
        assert_eq!(Poly::one().sub(&Poly::monomial(1)).unwrap(), Poly::from_ints(&[1, -1]));
        assert_eq!(
            Poly::from_ints(&[1, 0, 2]).sub(&Poly::one()).unwrap(),
            Poly::from_ints(&[0, 0, 2])
        );
    }

    #[test]
    fn add_rejects_mismatched_orders() {
        let a = Poly::one().truncated(3);
        let b = Poly::one().truncated(4);
        assert_eq!(a.add(&b), Err(PolyError::TruncMismatch(3, 4)));
    }

    #[test]
    fn mul_small_cases() {
        assert_eq!(
            Poly::from_ints(&[1, 1]).mul(&Poly::from_ints(&[1, -1])),
            Poly::from_ints(&[1, 0, -1])
        );
        assert_eq!(Poly::zero().mul(&Poly::from_ints(&[4, 5])), Poly::zero());
    }

    #[test]
    fn mul_trunc_discards_high_terms() {
        let p = Poly::from_ints(&[1, 1]);
        let sq = p.mul_trunc(&p, 1);
        assert_eq!(sq.coeffs(), Poly::from_ints(&[1, 2]).coeffs());
        assert_eq!(sq.trunc(), Some(1));
    }

    #[test]
    fn shift_cases() {
        assert_eq!(Poly::one().shift(3), Poly::monomial(3));
        let p = Poly::from_ints(&[1, 1]);
        assert_eq!(p.shift(0), p);
        let t = Poly::from_ints(&[1, 1]).truncated(2).shift(2);
        assert_eq!(t.coeffs(), Poly::from_ints(&[0, 0, 1]).coeffs());
        assert_eq!(t.trunc(), Some(2));
    }

    #[test]
    fn eval_cases() {
        // coefficient list of the 4-choose-2 Gaussian binomial
        let p = Poly::from_ints(&[1, 1, 2, 1, 1]);
        assert_eq!(p.eval_at_one().unwrap(), BigInt::from(6));
        assert_eq!(
            Poly::from_ints(&[9, 4, 4]).eval_int(&BigInt::zero()).unwrap(),
            BigInt::from(9)
        );
        assert_eq!(Poly::monomial(5).eval_int(&BigInt::from(2)).unwrap(), BigInt::from(32));
    }

    #[test]
    fn eval_refuses_truncated_series() {
        let s = Poly::one().truncated(5);
        assert_eq!(s.eval_at_one(), Err(PolyError::EvalTruncated(5)));
    }

    #[test]
    fn geometric_factor_cases() {
        assert_eq!(Poly::geometric_factor(1, 3).coeffs(), Poly::from_ints(&[1, 1, 1, 1]).coeffs());
        assert_eq!(
            Poly::geometric_factor(2, 5).coeffs(),
            Poly::from_ints(&[1, 0, 1, 0, 1, 0]).coeffs()
        );
        let high = Poly::geometric_factor(7, 5);
        assert_eq!(high.coeffs(), Poly::from_ints(&[1, 0, 0, 0, 0, 0]).coeffs());
        assert_eq!(high.trunc(), Some(5));
    }

    #[test]
    #[should_panic(expected = "i >= 1")]
    fn geometric_factor_rejects_zero_step() {
        Poly::geometric_factor(0, 4);
    }

    #[test]
    fn truncated_pads_to_exact_length() {
        let t = Poly::from_ints(&[1, 1]).truncated(4);
        assert_eq!(t.coeffs().len(), 5);
        assert_eq!(t.without_trunc(), Poly::from_ints(&[1, 1]));
    }

    #[test]
    #[should_panic(expected = "cannot extend")]
    fn truncated_cannot_extend_order() {
        let _ = Poly::one().truncated(2).truncated(5);
    }

    #[test]
    fn display_formats() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_ints(&[1, -1]).to_string(), "1 - x");
        assert_eq!(Poly::from_ints(&[0, 1, 2]).to_string(), "x + 2x^2");
        assert_eq!(Poly::from_ints(&[1, 1]).truncated(2).to_string(), "1 + x + O(x^3)");
    }
}
