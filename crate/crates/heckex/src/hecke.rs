//! Hecke operator matrices on the cusp-form space of weight `w + 2`.
//!
//! The matrix of the `m`-th Hecke operator with respect to the chosen basis
//! is `T_m = S1^{-1} S2`, where `S1` and `S2` are Gram matrices of
//! coefficientwise inner products between the basis polynomials and their
//! Hecke transforms. Everything is exact; the weight-12 column is
//! cross-checked against an independent q-expansion of the discriminant
//! form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::matrix::RationalMatrix;
use crate::poly::{basis_exponents, inner_product, s_poly, HomogPoly};

pub use crate::matrix::{char_poly, trace, CharPoly};

/// The Gram pair `(S1, S2)`: `S1[i][j] = <P_i, P_j>` and
/// `S2[i][j] = <P_i, P_j^m>` over the `d_w` basis polynomials. Both are
/// `d_w x d_w`; both are `0 x 0` when the space is trivial.
pub fn gram_matrices(w: u32, m: u32) -> Result<(RationalMatrix, RationalMatrix)> {
    if m == 0 {
        return Err(Error::InvalidHeckeIndex { m });
    }
    let basis = basis_exponents(w)?;
    let d = basis.dim();
    let base: Vec<HomogPoly> = basis
        .exponents()
        .iter()
        .map(|&n| s_poly(w, n, 1))
        .collect::<Result<_>>()?;
    let transformed: Vec<HomogPoly> = basis
        .exponents()
        .iter()
        .map(|&n| s_poly(w, n, m))
        .collect::<Result<_>>()?;

    let mut s1 = RationalMatrix::zero(d, d);
    let mut s2 = RationalMatrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            *s1.get_mut(i, j) = inner_product(&base[i], &base[j])?;
            *s2.get_mut(i, j) = inner_product(&base[i], &transformed[j])?;
        }
    }
    debug_assert!(s1.is_symmetric());
    Ok((s1, s2))
}

/// The exact `d_w x d_w` matrix of the `m`-th Hecke operator, obtained by
/// solving `S1 T = S2`.
///
/// Panics if `S1` is singular: the basis polynomials are linearly
/// independent, so a singular Gram matrix can only mean an internal
/// arithmetic bug and there is no meaningful recovery.
pub fn action_matrix(w: u32, m: u32) -> Result<RationalMatrix> {
    let (s1, s2) = gram_matrices(w, m)?;
    if s1.rows() == 0 {
        return Ok(RationalMatrix::zero(0, 0));
    }
    match s1.solve(&s2) {
        Some(t) => Ok(t),
        None => panic!("Gram matrix unexpectedly singular for w = {w}, m = {m}"),
    }
}

/// Coefficients `tau(1), ..., tau(max_m)` of the discriminant cusp form
/// `q prod_{n>=1} (1 - q^n)^24`, by exact truncated power-series
/// multiplication. Serves as the independent oracle for the weight-12
/// eigenvalue column.
pub fn ramanujan_tau(max_m: usize) -> Vec<BigInt> {
    assert!(max_m >= 1);
    // product to degree max_m - 1, then the q shift reindexes by one
    let len = max_m;
    let mut series = vec![BigInt::zero(); len];
    series[0] = BigInt::one();
    for j in 1..len {
        for _ in 0..24 {
            for i in (j..len).rev() {
                let sub = &series[i] - &series[i - j];
                series[i] = sub;
            }
        }
    }
    series
}

/// `T_p T_{p^r} = T_{p^{r+1}} + p^{w+1} T_{p^{r-1}}`, checked exactly.
pub fn hecke_recurrence_holds(w: u32, p: u32, r: u32) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidPowerIndex { r });
    }
    let t_p = action_matrix(w, p)?;
    let t_pr = action_matrix(w, p.pow(r))?;
    let t_up = action_matrix(w, p.pow(r + 1))?;
    let t_down = action_matrix(w, p.pow(r - 1))?;
    let lhs = t_p.mul(&t_pr);
    let scale = Rational::from_integer(BigInt::from(p).pow(w + 1));
    let rhs = t_up.add(&t_down.scale(&scale));
    Ok(lhs == rhs)
}

/// `T_m T_n = T_{mn}` for coprime `m, n`, checked exactly.
pub fn hecke_multiplicative_holds(w: u32, m: u32, n: u32) -> Result<bool> {
    let lhs = action_matrix(w, m)?.mul(&action_matrix(w, n)?);
    Ok(lhs == action_matrix(w, m * n)?)
}

/// Composite check: the prime-power recurrence at `(p, r)` together with
/// multiplicativity over the coprime pairs (2,3), (2,5), (3,5).
pub fn verify_hecke_algebra(w: u32, p: u32, r: u32) -> Result<bool> {
    if !hecke_recurrence_holds(w, p, r)? {
        return Ok(false);
    }
    for (m, n) in [(2, 3), (2, 5), (3, 5)] {
        if !hecke_multiplicative_holds(w, m, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}
