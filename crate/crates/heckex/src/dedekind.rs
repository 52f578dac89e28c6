//! Exact evaluation of weighted Dedekind symbols on `Z+ x Z`, the Hecke
//! transform on symbols, and the polynomial reciprocity check.
//!
//! A symbol value is a half-weighted sign sum over determinant-`m` integer
//! matrices, a periodic-Bernoulli part over the divisor pairs of `m`, and
//! (for odd `n`) a constant correction. The matrix sum is finite: every
//! contributing matrix has `|a| <= m h` and `|c| <= m h`, and for fixed
//! `(a, c)` the substitution `u = a k + b h`, `v = c k + d h` pins `u` to
//! one residue class inside the open interval between `0` and `-m h / c`
//! (see [`eval_symbol`] for the details), so the whole sum is a short
//! bounded loop.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, bernoulli_periodic, divisor_sigma, divisors, rat, Rational};
use crate::poly::s_poly;

/// A point of `Z+ x Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolPoint {
    h: u64,
    k: i64,
}

impl SymbolPoint {
    pub fn new(h: u64, k: i64) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidSymbolPoint { h });
        }
        Ok(Self { h, k })
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn k(&self) -> i64 {
        self.k
    }
}

/// Parameters `(w, n, m)` of a weighted Dedekind symbol; `0 < n < w` of
/// either parity (odd `n` gives an even symbol and vice versa), `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolSpec {
    w: u32,
    n: u32,
    m: u32,
}

impl SymbolSpec {
    pub fn new(w: u32, n: u32, m: u32) -> Result<Self> {
        if w < 2 || w % 2 != 0 {
            return Err(Error::InvalidWeight { w });
        }
        if n == 0 || n >= w {
            return Err(Error::InvalidSymbolExponent { w, n });
        }
        if m == 0 {
            return Err(Error::InvalidHeckeIndex { m });
        }
        Ok(Self { w, n, m })
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

// Sign sum over determinant-m matrices, enumerated over (a, c) with
// 0 < |a|, |c| <= bound. For each pair, u = a k + b h determines the matrix:
// v = (c u + m h) / a must be integral, as must d = (v - c k) / h, and the
// inequality constraint collapses to u lying strictly between 0 and -m h / c
// within the residue class u = a k (mod h). Each surviving (a, c, u)
// contributes (1/2) sgn(u) sgn(a) u^(w-n) v^n.
fn matrix_sum_with_bound(spec: &SymbolSpec, pt: &SymbolPoint, bound: i64) -> Rational {
    let (n, tn) = (spec.n, spec.w - spec.n);
    let h = pt.h as i64;
    let k = pt.k;
    let mh = spec.m as i64 * h;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut acc = Rational::zero();

    let mut push_term = |a: i64, c: i64, u: i64| {
        let num = c * u + mh; // equals a * v, always in (0, m h) on the open interval
        if num % a != 0 {
            return;
        }
        let v = num / a;
        if (v - c * k) % h != 0 {
            return;
        }
        // contributing matrices must stay inside the certified bound
        debug_assert!(a.abs() <= mh && c.abs() <= mh);
        let sign = u.signum() * a.signum();
        let term = BigInt::from(u).pow(tn) * BigInt::from(v).pow(n);
        acc += &half * rat(sign) * Rational::from_integer(term);
    };

    for a in -bound..=bound {
        if a == 0 {
            continue;
        }
        let residue = ((a % h) * (k % h) % h + h) % h; // a k mod h, in [0, h)
        for c in -bound..=bound {
            if c == 0 {
                continue;
            }
            if c < 0 {
                // u in (0, m h / -c)
                let mut u = if residue == 0 { h } else { residue };
                while u * (-c) < mh {
                    push_term(a, c, u);
                    u += h;
                }
            } else {
                // u in (-m h / c, 0)
                let mut u = residue - h;
                while -u * c < mh {
                    push_term(a, c, u);
                    u -= h;
                }
            }
        }
    }
    acc
}

/// Exact value of the weighted Dedekind symbol at a lattice point.
pub fn eval_symbol(spec: &SymbolSpec, pt: &SymbolPoint) -> Rational {
    let (w, n, m) = (spec.w, spec.n, spec.m);
    let tn = w - n;
    let mh = m as i64 * pt.h as i64;
    let mut acc = matrix_sum_with_bound(spec, pt, mh);

    // periodic-Bernoulli part over a d = m, a > 0
    let h_big = BigInt::from(pt.h);
    let hw = Rational::from_integer(h_big.pow(w));
    let sign_n = rat(if n % 2 == 0 { 1 } else { -1 });
    for a in divisors(m as u64) {
        let d = m as u64 / a;
        let x = Rational::new(BigInt::from(a as i64 * pt.k), BigInt::from(pt.h));
        acc += &sign_n
            * Rational::from_integer(BigInt::from(d).pow(tn))
            * bernoulli_periodic(n + 1, &x)
            * &hw
            / rat((n + 1) as i64);
        acc -= Rational::from_integer(BigInt::from(d).pow(n))
            * bernoulli_periodic(tn + 1, &x)
            * &hw
            / rat((tn + 1) as i64);
    }

    // constant part, odd n only
    if n % 2 == 1 {
        acc += divisor_sigma((w + 1) as i64, m as u64).expect("m >= 1")
            * rat((w + 2) as i64)
            / bernoulli(w + 2)
            * bernoulli(n + 1)
            / rat((n + 1) as i64)
            * bernoulli(tn + 1)
            / rat((tn + 1) as i64)
            * &hw;
    }
    acc
}

/// The Hecke transform of an `m = 1` base symbol:
/// `sum over a d = m', d > 0, b = 0..d-1 of E(d h, a k + b h)`.
pub fn hecke_transform(base: &SymbolSpec, m_prime: u32, pt: &SymbolPoint) -> Result<Rational> {
    if base.m != 1 {
        return Err(Error::BaseNotUnit { m: base.m });
    }
    if m_prime == 0 {
        return Err(Error::InvalidHeckeIndex { m: m_prime });
    }
    let mut acc = Rational::zero();
    for d in divisors(m_prime as u64) {
        let a = (m_prime as u64 / d) as i64;
        for b in 0..d as i64 {
            let shifted = SymbolPoint::new(d * pt.h, a * pt.k + b * pt.h as i64)?;
            acc += eval_symbol(base, &shifted);
        }
    }
    Ok(acc)
}

/// Checks `E(h, k) - E(k, -h) = S(h, k)` exactly, where `S` is the closed
/// polynomial form for the same parameters. Requires `h, k >= 1`.
pub fn reciprocity_holds(spec: &SymbolSpec, h: u64, k: u64) -> Result<bool> {
    let poly = s_poly(spec.w, spec.n, spec.m)?;
    let lhs = eval_symbol(spec, &SymbolPoint::new(h, k as i64)?)
        - eval_symbol(spec, &SymbolPoint::new(k, -(h as i64))?);
    let rhs = poly.eval(&rat(h as i64), &rat(k as i64));
    Ok(lhs == rhs)
}

/// The trivial symbol `F_w(h, k) = h^w`.
pub fn symbol_f(w: u32, h: u64) -> BigInt {
    BigInt::from(h).pow(w)
}

/// The trivial symbol `G_w(h, k) = gcd(h, k)^w`; `gcd(h, 0) = h`.
pub fn symbol_g(w: u32, h: u64, k: i64) -> BigInt {
    BigInt::from(h.gcd(&k.unsigned_abs())).pow(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(w: u32, n: u32, m: u32) -> SymbolSpec {
        SymbolSpec::new(w, n, m).unwrap()
    }

    fn pt(h: u64, k: i64) -> SymbolPoint {
        SymbolPoint::new(h, k).unwrap()
    }

    #[test]
    fn boundary_value_closed_expression() {
        // at (1, 0) with m = 1 only the Bernoulli and constant parts survive:
        // -B_(n+1)/(n+1) - B_(tn+1)/(tn+1)
        //   + (w+2)/B_(w+2) * B_(n+1)/(n+1) * B_(tn+1)/(tn+1)
        let s = spec(10, 3, 1);
        let b4 = bernoulli(4) / rat(4);
        let b8 = bernoulli(8) / rat(8);
        let expect = -&b4 - &b8 + rat(12) / bernoulli(12) * &b4 * &b8;
        assert_eq!(eval_symbol(&s, &pt(1, 0)), expect);
    }

    #[test]
    fn translation_invariance() {
        let s = spec(10, 3, 1);
        assert_eq!(eval_symbol(&s, &pt(1, 5)), eval_symbol(&s, &pt(1, 0)));
        let s2 = spec(10, 3, 2);
        for k in -3..3 {
            assert_eq!(
                eval_symbol(&s2, &pt(2, k)),
                eval_symbol(&s2, &pt(2, k + 2)),
                "k = {k}"
            );
        }
    }

    #[test]
    fn homogeneity() {
        let s = spec(10, 3, 1);
        let scaled = eval_symbol(&s, &pt(2, 0));
        assert_eq!(scaled, rat(1 << 10) * eval_symbol(&s, &pt(1, 0)));
        let s2 = spec(10, 3, 2);
        assert_eq!(
            eval_symbol(&s2, &pt(3, 6)),
            rat(3i64.pow(10)) * eval_symbol(&s2, &pt(1, 2))
        );
    }

    #[test]
    fn symbol_parity() {
        // odd n: even symbol
        let even = spec(10, 3, 2);
        for k in 1..4 {
            assert_eq!(eval_symbol(&even, &pt(2, -k)), eval_symbol(&even, &pt(2, k)));
        }
        // even n: odd symbol
        let odd = spec(10, 4, 2);
        for k in 1..4 {
            assert_eq!(eval_symbol(&odd, &pt(2, -k)), -eval_symbol(&odd, &pt(2, k)));
        }
    }

    #[test]
    fn enumeration_respects_certified_bound() {
        // doubling the (a, c) window must not pick up extra terms
        for (s, p) in [
            (spec(10, 3, 2), pt(2, 3)),
            (spec(10, 3, 3), pt(1, -2)),
            (spec(14, 3, 2), pt(3, 1)),
        ] {
            let mh = s.m() as i64 * p.h() as i64;
            assert_eq!(
                matrix_sum_with_bound(&s, &p, mh),
                matrix_sum_with_bound(&s, &p, 2 * mh)
            );
        }
    }

    #[test]
    fn transform_with_unit_index_is_identity() {
        let base = spec(10, 3, 1);
        let p = pt(2, 3);
        assert_eq!(hecke_transform(&base, 1, &p).unwrap(), eval_symbol(&base, &p));
    }

    #[test]
    fn transform_matches_direct_symbol() {
        let base = spec(10, 3, 1);
        let direct2 = spec(10, 3, 2);
        let p = pt(1, 1);
        assert_eq!(
            hecke_transform(&base, 2, &p).unwrap(),
            eval_symbol(&direct2, &p)
        );
        let direct3 = spec(10, 3, 3);
        let p2 = pt(2, 1);
        assert_eq!(
            hecke_transform(&base, 3, &p2).unwrap(),
            eval_symbol(&direct3, &p2)
        );
    }

    #[test]
    fn transform_requires_unit_base() {
        let base = spec(10, 3, 2);
        assert!(hecke_transform(&base, 2, &pt(1, 1)).is_err());
    }

    #[test]
    fn reciprocity_samples() {
        assert!(reciprocity_holds(&spec(10, 3, 1), 1, 1).unwrap());
        assert!(reciprocity_holds(&spec(10, 3, 2), 3, 2).unwrap());
        assert!(reciprocity_holds(&spec(14, 3, 3), 2, 5).unwrap());
    }

    #[test]
    fn trivial_symbols() {
        assert_eq!(symbol_g(10, 4, 6), BigInt::from(1024));
        assert_eq!(symbol_f(10, 3), BigInt::from(3u64).pow(10));
        assert_eq!(symbol_g(10, 7, 0), BigInt::from(7u64).pow(10));
    }

    #[test]
    fn spec_validation() {
        assert!(SymbolSpec::new(10, 0, 1).is_err());
        assert!(SymbolSpec::new(10, 10, 1).is_err());
        assert!(SymbolSpec::new(10, 3, 0).is_err());
        assert!(SymbolSpec::new(11, 3, 1).is_err());
        assert!(SymbolSpec::new(10, 4, 1).is_ok()); // even n is a valid symbol
        assert!(SymbolPoint::new(0, 1).is_err());
    }

    #[test]
    fn negative_k_uses_periodic_extension() {
        // translation by h = 1 maps (1, -1) to (1, 0)
        let s = spec(10, 3, 1);
        assert_eq!(eval_symbol(&s, &pt(1, -1)), eval_symbol(&s, &pt(1, 0)));
    }
}
