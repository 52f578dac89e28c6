//! Exact computation of Hecke operator matrices on cusp-form spaces of the
//! full modular group, in terms of Bernoulli numbers and divisor sums.
//!
//! Everything is exact big-rational arithmetic; no floating point anywhere.
//! The crate splits into:
//!
//! * [`exact`] — scalars: rationals, binomials, Bernoulli numbers and
//!   polynomials, the periodic Bernoulli function, divisor sums.
//! * [`poly`] — homogeneous period polynomials, the closed-formula
//!   construction and its independent pointwise oracle, the basis
//!   selection `4i +- 1`, parity and space-membership checks.
//! * [`matrix`] — dense exact-rational linear algebra (Gauss-Jordan solve,
//!   Faddeev-LeVerrier characteristic polynomial).
//! * [`hecke`] — Gram matrices, the Hecke action matrix `S1^{-1} S2`,
//!   the Ramanujan tau q-expansion oracle, and algebra identities.
//! * [`dedekind`] — weighted Dedekind symbols, their Hecke transform, and
//!   the polynomial reciprocity law.
//! * [`mod2`] — integer relation matrices, their F2 reductions, the
//!   Pascal-Sierpinski family, and the basis-selection verification.

pub mod dedekind;
pub mod error;
pub mod exact;
pub mod hecke;
pub mod matrix;
pub mod mod2;
pub mod poly;

pub use error::{Error, Result};
pub use exact::Rational;
