//! Exact scalar arithmetic: arbitrary-precision rationals, binomial
//! coefficients, Bernoulli numbers/polynomials, the 1-periodic Bernoulli
//! function, and divisor sums with arbitrary (possibly negative) exponent.
//!
//! Every value is an exact `BigInt` or [`Rational`]; nothing in this crate
//! touches floating point. The Bernoulli convention is fixed by the
//! generating function `t e^{xt} / (e^t - 1)`, which gives **B_1 = -1/2**
//! (the opposite sign convention is common elsewhere, so be careful when
//! comparing against tables).

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The universal scalar: an arbitrary-precision fraction, always in lowest
/// terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an `i64`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num / den` (reduced, sign normalized). Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient `C(n, k)`, with the convention that out-of-range
/// `k` (negative or above `n`) gives 0.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: acc holds C(n, i) and (i+1) | acc * (n-i).
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The full row `[C(n,0), C(n,1), ..., C(n,n)]`, built by one sweep of the
/// multiplicative recurrence. Cheaper than `n+1` independent `binomial`
/// calls when a whole row is consumed.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for k in 0..n {
        acc = acc * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(acc.clone());
    }
    row
}

static BERNOULLI_CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_m` with `B_1 = -1/2`.
///
/// Computed by the recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0` (n >= 1)
/// that falls out of the generating function, and memoized per process.
/// The cache is grown under a mutex, so concurrent callers are safe and
/// fills are idempotent.
pub fn bernoulli(m: u32) -> Rational {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= m as usize {
        let n = cache.len() as u64; // next index to fill
        let row = binomial_row(n + 1);
        let mut acc = Rational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += Rational::from_integer(row[k].clone()) * b;
        }
        let b_n = -acc / Rational::from_integer(BigInt::from(n + 1));
        cache.push(b_n);
    }
    cache[m as usize].clone()
}

/// Bernoulli polynomial `B_m(x) = sum_{k=0}^{m} C(m, k) B_k x^{m-k}`, exact.
pub fn bernoulli_poly(m: u32, x: &Rational) -> Rational {
    let row = binomial_row(m as u64);
    let mut acc = Rational::zero();
    let mut xpow = Rational::one();
    // Accumulate from k = m down to 0 so the running power of x climbs.
    for k in (0..=m).rev() {
        acc += Rational::from_integer(row[k as usize].clone()) * bernoulli(k) * &xpow;
        xpow *= x;
    }
    acc
}

/// 1-periodic Bernoulli function: `B_m(x - floor(x))`, defined for every
/// rational `x` including negative ones (floor rounds toward minus
/// infinity, so e.g. `x = -1/4` evaluates the polynomial at `3/4`).
pub fn bernoulli_periodic(m: u32, x: &Rational) -> Rational {
    let frac = x - x.floor();
    bernoulli_poly(m, &frac)
}

/// Positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    debug_assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `a^k` as an exact rational for integer `k` of either sign (`a >= 1`).
pub fn int_pow(a: u64, k: i64) -> Rational {
    let p = BigInt::from(a).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Divisor sum `sigma_k(n) = sum_{d | n, d > 0} d^k`.
///
/// `k` may be negative, in which case the value is a non-integral rational
/// in general (e.g. `sigma_{-1}(2) = 3/2`).
pub fn divisor_sigma(k: i64, n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::NonpositiveSigmaArgument);
    }
    let mut acc = Rational::zero();
    for d in divisors(n) {
        acc += int_pow(d, k);
    }
    Ok(acc)
}

/// Checks the canonical-form invariant: lowest terms, positive denominator.
pub fn is_canonical(x: &Rational) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}
