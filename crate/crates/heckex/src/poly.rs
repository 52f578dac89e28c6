//! Homogeneous degree-`w` polynomials in `(h, k)` over exact rationals, and
//! the two independent constructions of the Hecke-transformed basis period
//! polynomials:
//!
//! * [`s_poly`] — the closed formula: one sign-weighted double-divisor sum
//!   over even powers of `h`, four Bernoulli-coefficient sums, and a
//!   `h^w - k^w` correction. This is the production path.
//! * [`s_poly_oracle`] — the defining expression summed over determinant-`m`
//!   integer matrices with `abcd < 0`, evaluated pointwise at `(1, t)` for
//!   `t = 1, ..., w+1` and recovered through an exact Vandermonde solve.
//!   This path shares no code with `s_poly` beyond the scalar layer and
//!   exists to cross-check it.
//!
//! Coefficient indexing is by the exponent of `h`: `coeffs[nu]` multiplies
//! `h^nu k^(w-nu)`, `nu = 0..=w`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    bernoulli, bernoulli_poly, binomial, binomial_row, divisor_sigma, divisors, rat, Rational,
};
use crate::matrix::RationalMatrix;

/// Homogeneous polynomial of even degree `w` in `(h, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogPoly {
    w: u32,
    coeffs: Vec<Rational>,
}

impl HomogPoly {
    /// `coeffs[nu]` is the coefficient of `h^nu k^(w-nu)`; the vector must
    /// have exactly `w + 1` entries and `w` must be even and >= 2.
    pub fn new(w: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if w < 2 || w % 2 != 0 {
            return Err(Error::InvalidWeight { w });
        }
        if coeffs.len() != w as usize + 1 {
            return Err(Error::CoefficientLength { w, len: coeffs.len() });
        }
        Ok(Self { w, coeffs })
    }

    pub fn zero(w: u32) -> Result<Self> {
        Self::new(w, vec![Rational::zero(); w as usize + 1])
    }

    /// `h^w - k^w`.
    pub fn h_pow_minus_k_pow(w: u32) -> Result<Self> {
        let mut p = Self::zero(w)?;
        p.coeffs[w as usize] = Rational::one();
        p.coeffs[0] = -Rational::one();
        Ok(p)
    }

    pub fn degree(&self) -> u32 {
        self.w
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, nu: usize) -> &Rational {
        &self.coeffs[nu]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, h: &Rational, k: &Rational) -> Rational {
        let w = self.w as usize;
        let mut acc = Rational::zero();
        let mut hp = vec![Rational::one(); w + 1];
        let mut kp = vec![Rational::one(); w + 1];
        for i in 1..=w {
            hp[i] = &hp[i - 1] * h;
            kp[i] = &kp[i - 1] * k;
        }
        for (nu, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc += a * &hp[nu] * &kp[w - nu];
            }
        }
        acc
    }

    pub fn add(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.w, other.w, "degrees must agree");
        HomogPoly {
            w: self.w,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.w, other.w, "degrees must agree");
        HomogPoly {
            w: self.w,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Parity of a homogeneous polynomial under `k -> -k`. The zero polynomial
/// reports `Even` by convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// The chosen basis exponents for one weight: `d_w` odd integers `4i +- 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSpec {
    w: u32,
    exponents: Vec<u32>,
}

impl BasisSpec {
    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }
}

/// Dimension of the cusp-form space of weight `w + 2`:
/// `floor((w+2)/12) - 1` when `w = 0 (mod 12)`, else `floor((w+2)/12)`.
pub fn dim_cusp(w: u32) -> Result<usize> {
    if w < 2 || w % 2 != 0 {
        return Err(Error::InvalidWeight { w });
    }
    let q = ((w + 2) / 12) as usize;
    Ok(if w % 12 == 0 { q - 1 } else { q })
}

/// The basis exponents `4i + 1` (when `w = 0 (mod 4)`) or `4i - 1`
/// (when `w = 2 (mod 4)`) for `i = 1, ..., d_w`.
pub fn basis_exponents(w: u32) -> Result<BasisSpec> {
    let d = dim_cusp(w)? as u32;
    let exponents: Vec<u32> = if w % 4 == 0 {
        (1..=d).map(|i| 4 * i + 1).collect()
    } else {
        (1..=d).map(|i| 4 * i - 1).collect()
    };
    debug_assert!(exponents.iter().all(|&n| n % 2 == 1 && 0 < n && n < w));
    Ok(BasisSpec { w, exponents })
}

fn validate_s_params(w: u32, n: u32, m: u32) -> Result<()> {
    if w < 2 || w % 2 != 0 {
        return Err(Error::InvalidWeight { w });
    }
    if n == 0 || n >= w || n % 2 == 0 {
        return Err(Error::InvalidExponent { w, n });
    }
    if m == 0 {
        return Err(Error::InvalidHeckeIndex { m });
    }
    Ok(())
}

fn big(r: BigInt) -> Rational {
    Rational::from_integer(r)
}

/// Closed-formula construction of the degree-`w` polynomial attached to the
/// odd exponent `n` and Hecke index `m`.
///
/// The five pieces, written on the coefficient of `h^nu k^(w-nu)` with
/// `tn = w - n` (`n` is odd throughout, so `(-1)^n = -1`):
///
/// 1. for even `nu`, the doubled sum over `mu = 1..m-1` and
///    `lambda = max(0, nu-tn)..min(n, nu)` of
///    `mu^lambda (mu-m)^(n-lambda) C(tn, nu-lambda) C(n, lambda)
///     sigma_(tn-nu)(mu) sigma_(nu-n)(m-mu)`;
/// 2. `- m^tn/(n+1) * C(n+1, nu-tn+1) B_(nu-tn+1) sigma_(n-nu)(m)` for
///    `nu = tn-1..w`;
/// 3. `- m^n/(tn+1) * C(tn+1, nu-n+1) B_(nu-n+1) sigma_(tn-nu)(m)` for
///    `nu = n-1..w`;
/// 4. `+ m^tn/(n+1) * C(n+1, n-nu+1) B_(n-nu+1) sigma_(nu-tn)(m)` for
///    `nu = 0..n+1`;
/// 5. `+ m^n/(tn+1) * C(tn+1, tn-nu+1) B_(tn-nu+1) sigma_(nu-n)(m)` for
///    `nu = 0..tn+1`;
///
/// plus `sigma_(w+1)(m) * (w+2)/B_(w+2) * B_(n+1)/(n+1) * B_(tn+1)/(tn+1)`
/// times `h^w - k^w`. Divisor sums with negative index stay exact rationals.
pub fn s_poly(w: u32, n: u32, m: u32) -> Result<HomogPoly> {
    validate_s_params(w, n, m)?;
    let tn = w - n;
    let wi = w as usize;
    let (ni, tni, mi) = (n as i64, tn as i64, m as i64);
    let mut coeffs = vec![Rational::zero(); wi + 1];

    // piece 1: even powers of h only
    for nu in (0..=wi).step_by(2) {
        let nui = nu as i64;
        let mut acc = Rational::zero();
        for mu in 1..mi {
            let s1 = divisor_sigma(tni - nui, mu as u64)?;
            let s2 = divisor_sigma(nui - ni, (mi - mu) as u64)?;
            let sig = &s1 * &s2;
            if sig.is_zero() {
                continue;
            }
            let lo = (nui - tni).max(0);
            let hi = ni.min(nui);
            for lambda in lo..=hi {
                let term = BigInt::from(mu).pow(lambda as u32)
                    * BigInt::from(mu - mi).pow((ni - lambda) as u32)
                    * binomial(tn as u64, nui - lambda)
                    * binomial(n as u64, lambda);
                acc += big(term * 2) * &sig;
            }
        }
        coeffs[nu] += acc;
    }

    let m_tn = big(BigInt::from(m).pow(tn));
    let m_n = big(BigInt::from(m).pow(n));
    let inv_n1 = rat(ni + 1);
    let inv_tn1 = rat(tni + 1);

    // piece 2
    for nu in (tn - 1) as usize..=wi {
        let idx = nu as u32 - (tn - 1);
        let b = bernoulli(idx);
        if b.is_zero() {
            continue;
        }
        let term = &m_tn / &inv_n1
            * big(binomial((n + 1) as u64, idx as i64))
            * b
            * divisor_sigma(ni - nu as i64, m as u64)?;
        coeffs[nu] -= term;
    }

    // piece 3
    for nu in (n - 1) as usize..=wi {
        let idx = nu as u32 - (n - 1);
        let b = bernoulli(idx);
        if b.is_zero() {
            continue;
        }
        let term = &m_n / &inv_tn1
            * big(binomial((tn + 1) as u64, idx as i64))
            * b
            * divisor_sigma(tni - nu as i64, m as u64)?;
        coeffs[nu] -= term;
    }

    // piece 4
    for nu in 0..=(n + 1) as usize {
        let idx = n + 1 - nu as u32;
        let b = bernoulli(idx);
        if b.is_zero() {
            continue;
        }
        let term = &m_tn / &inv_n1
            * big(binomial((n + 1) as u64, idx as i64))
            * b
            * divisor_sigma(nu as i64 - tni, m as u64)?;
        coeffs[nu] += term;
    }

    // piece 5
    for nu in 0..=(tn + 1) as usize {
        let idx = tn + 1 - nu as u32;
        let b = bernoulli(idx);
        if b.is_zero() {
            continue;
        }
        let term = &m_n / &inv_tn1
            * big(binomial((tn + 1) as u64, idx as i64))
            * b
            * divisor_sigma(nu as i64 - ni, m as u64)?;
        coeffs[nu] += term;
    }

    // h^w - k^w correction
    let corr = divisor_sigma((w + 1) as i64, m as u64)?
        * rat((w + 2) as i64)
        / bernoulli(w + 2)
        * bernoulli(n + 1)
        / &inv_n1
        * bernoulli(tn + 1)
        / &inv_tn1;
    coeffs[wi] += &corr;
    coeffs[0] -= &corr;

    HomogPoly::new(w, coeffs)
}

/// The `m = 1` specialization as its own code path: the four Bernoulli sums
/// with unit prefactors plus the `h^w - k^w` correction. `s_poly(w, n, 1)`
/// must agree with this coefficient-for-coefficient.
pub fn s_poly_base(w: u32, n: u32) -> Result<HomogPoly> {
    validate_s_params(w, n, 1)?;
    let tn = w - n;
    let wi = w as usize;
    let mut coeffs = vec![Rational::zero(); wi + 1];
    let inv_n1 = rat((n + 1) as i64);
    let inv_tn1 = rat((tn + 1) as i64);

    // n odd, so the two leading sums carry a minus sign
    for nu in (tn - 1) as usize..=wi {
        let idx = nu as u32 - (tn - 1);
        coeffs[nu] -= big(binomial((n + 1) as u64, idx as i64)) * bernoulli(idx) / &inv_n1;
    }
    for nu in (n - 1) as usize..=wi {
        let idx = nu as u32 - (n - 1);
        coeffs[nu] -= big(binomial((tn + 1) as u64, idx as i64)) * bernoulli(idx) / &inv_tn1;
    }
    for nu in 0..=(n + 1) as usize {
        let idx = n + 1 - nu as u32;
        coeffs[nu] += big(binomial((n + 1) as u64, idx as i64)) * bernoulli(idx) / &inv_n1;
    }
    for nu in 0..=(tn + 1) as usize {
        let idx = tn + 1 - nu as u32;
        coeffs[nu] += big(binomial((tn + 1) as u64, idx as i64)) * bernoulli(idx) / &inv_tn1;
    }

    let corr = rat((w + 2) as i64) / bernoulli(w + 2) * bernoulli(n + 1) / &inv_n1
        * bernoulli(tn + 1)
        / &inv_tn1;
    coeffs[wi] += &corr;
    coeffs[0] -= &corr;

    HomogPoly::new(w, coeffs)
}

/// Signed factorizations `(a, d)` of `mu > 0` with `a d = mu`, including the
/// both-negative pairs.
fn signed_factorizations(mu: u64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in divisors(mu) {
        let d = (mu / a) as i64;
        let a = a as i64;
        out.push((a, d));
        out.push((-a, -d));
    }
    out
}

/// Signed factorizations `(b, c)` of `-neg` (so `b c < 0`), both sign splits.
fn signed_factorizations_neg(neg: u64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for b in divisors(neg) {
        let c = (neg / b) as i64;
        let b = b as i64;
        out.push((b, -c));
        out.push((-b, c));
    }
    out
}

/// Evaluates the defining expression at the point `(1, k)`.
fn oracle_value(w: u32, n: u32, m: u32, k: &Rational) -> Result<Rational> {
    let tn = w - n;
    let mut acc = Rational::zero();
    let half = Rational::new(BigInt::one(), BigInt::from(2));

    // matrix sum over determinant-m integer matrices with a b c d < 0,
    // split through mu = a d in [1, m-1] (forced by a d > 0 > b c)
    for mu in 1..m as u64 {
        for (a, d) in signed_factorizations(mu) {
            for (b, c) in signed_factorizations_neg(m as u64 - mu) {
                let sgn = rat((a * b).signum());
                let first = rat(a) * k + rat(b);
                let second = rat(c) * k + rat(d);
                acc += &half * sgn * pow_rat(&first, tn) * pow_rat(&second, n);
            }
        }
    }

    // Bernoulli-polynomial terms over a d = m, a > 0, at h = 1
    let sign_n = rat(if n % 2 == 0 { 1 } else { -1 });
    let kw = pow_rat(k, w);
    for a in divisors(m as u64) {
        let d = m as u64 / a;
        let d_tn = big(BigInt::from(d).pow(tn));
        let d_n = big(BigInt::from(d).pow(n));
        let ak = rat(a as i64) * k;
        let a_over_k = rat(a as i64) / k;
        acc += &d_tn
            * (&sign_n * bernoulli_poly(n + 1, &ak) + bernoulli_poly(n + 1, &a_over_k) * &kw)
            / rat((n + 1) as i64);
        acc -= &d_n
            * (bernoulli_poly(tn + 1, &ak) + &sign_n * bernoulli_poly(tn + 1, &a_over_k) * &kw)
            / rat((tn + 1) as i64);
    }

    // constant correction, odd n only
    if n % 2 == 1 {
        acc += divisor_sigma((w + 1) as i64, m as u64)?
            * rat((w + 2) as i64)
            / bernoulli(w + 2)
            * bernoulli(n + 1)
            / rat((n + 1) as i64)
            * bernoulli(tn + 1)
            / rat((tn + 1) as i64)
            * (Rational::one() - &kw);
    }
    Ok(acc)
}

fn pow_rat(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Independent oracle for [`s_poly`]: the defining matrix-and-Bernoulli sum
/// evaluated at `(1, t)` for `t = 1, ..., w+1`, then interpolated through an
/// exact Vandermonde solve.
pub fn s_poly_oracle(w: u32, n: u32, m: u32) -> Result<HomogPoly> {
    validate_s_params(w, n, m)?;
    let wi = w as usize;
    let size = wi + 1;

    // F(t) = sum_j x_j t^j with x_j the coefficient of h^(w-j) k^j
    let vander = RationalMatrix::from_fn(size, size, |i, j| {
        big(BigInt::from(i as u64 + 1).pow(j as u32))
    });
    let mut rhs = Vec::with_capacity(size);
    for t in 1..=size as u64 {
        rhs.push(oracle_value(w, n, m, &rat(t as i64))?);
    }
    let rhs = RationalMatrix::new(size, 1, rhs)?;
    let sol = vander
        .solve(&rhs)
        .expect("Vandermonde matrix with distinct nodes is nonsingular");

    let coeffs = (0..size).map(|nu| sol.get(wi - nu, 0).clone()).collect();
    HomogPoly::new(w, coeffs)
}

/// Coefficientwise inner product `sum_nu a_nu b_nu` (coefficients are
/// rational, so conjugation is the identity).
pub fn inner_product(f: &HomogPoly, g: &HomogPoly) -> Result<Rational> {
    if f.w != g.w {
        return Err(Error::DegreeMismatch { left: f.w, right: g.w });
    }
    let mut acc = Rational::zero();
    for (a, b) in f.coeffs.iter().zip(&g.coeffs) {
        acc += a * b;
    }
    Ok(acc)
}

/// Exact composition `f(p h + q k, r h + s k)`; homogeneity is preserved.
pub fn substitute_linear(f: &HomogPoly, p: i64, q: i64, r: i64, s: i64) -> HomogPoly {
    let w = f.w as usize;
    let mut out = vec![Rational::zero(); w + 1];
    for (nu, a) in f.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let first = linear_pow(p, q, nu);
        let second = linear_pow(r, s, w - nu);
        for (i, ci) in first.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (l, cl) in second.iter().enumerate() {
                if cl.is_zero() {
                    continue;
                }
                out[i + l] += a * big(ci * cl);
            }
        }
    }
    HomogPoly { w: f.w, coeffs: out }
}

// (x h + y k)^e as a vector over the exponent of h.
fn linear_pow(x: i64, y: i64, e: usize) -> Vec<BigInt> {
    let row = binomial_row(e as u64);
    (0..=e)
        .map(|i| {
            &row[i] * BigInt::from(x).pow(i as u32) * BigInt::from(y).pow((e - i) as u32)
        })
        .collect()
}

/// Membership in the period-polynomial space: `g(h+k, k) + g(h, h+k) = g(h, k)`
/// as coefficient vectors, together with `g(1, 1) = 0`.
pub fn is_in_u(f: &HomogPoly) -> bool {
    let relation = substitute_linear(f, 1, 1, 0, 1)
        .add(&substitute_linear(f, 1, 0, 1, 1));
    relation == *f && f.eval(&rat(1), &rat(1)).is_zero()
}

/// Even iff every coefficient with odd `h`-exponent vanishes (equivalently,
/// `f(h, -k) = f(h, k)`); Odd for the complementary pattern. The zero
/// polynomial reports Even.
pub fn parity(f: &HomogPoly) -> Parity {
    let even_ok = f
        .coeffs
        .iter()
        .enumerate()
        .all(|(nu, a)| nu % 2 == 0 || a.is_zero());
    if even_ok {
        return Parity::Even;
    }
    let odd_ok = f
        .coeffs
        .iter()
        .enumerate()
        .all(|(nu, a)| nu % 2 == 1 || a.is_zero());
    if odd_ok {
        Parity::Odd
    } else {
        Parity::Neither
    }
}
