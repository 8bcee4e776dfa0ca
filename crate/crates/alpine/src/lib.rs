//! Exact verification of the alpine identities — the slalom identity and
//! the two Giant Slalom identities for Gaussian binomial coefficients —
//! together with their integer (Fibonacci) specializations at `x = 1`, the
//! limits they imply (Euler's pentagonal number theorem and both
//! Rogers-Ramanujan identities, at any truncation order), and the
//! sign-reversing cancellation that proves GS1 bijectively.
//!
//! Modules:
//! - [`poly`]: dense integer polynomials and truncated power series
//! - [`qbinom`]: ordinary and Gaussian binomial coefficients
//! - [`identities`]: the six identity sequences, by summation and by
//!   recurrence, with verification sweeps
//! - [`partitions`]: partition enumeration oracles, Euler products, theta
//!   series, and the Rogers-Ramanujan checks
//! - [`bijection`]: the leftmatch/rightmatch rewrite system and the
//!   pairing it induces on GS1 terms
//!
//! Everything is computed in exact integer arithmetic; a result is either
//! an exact polynomial or a series with an explicit truncation order.

pub mod bijection;
pub mod identities;
pub mod partitions;
pub mod poly;
pub mod qbinom;

pub use identities::{ExponentKind, IdentityKind, IdentityReport, IdentityRow};
pub use poly::{Poly, PolyError};
pub use qbinom::QBinomTable;
