//! Verification suites behind `heckex check`. Each suite prints one line
//! per verified block and returns the first failure as an error string, so
//! the caller can exit 1 with a diagnostic.

use num_traits::Zero;

use heckex::dedekind::{eval_symbol, hecke_transform, reciprocity_holds, SymbolPoint, SymbolSpec};
use heckex::exact::{rat, Rational};
use heckex::hecke::{action_matrix, ramanujan_tau, verify_hecke_algebra};
use heckex::mod2::verify_basis_selection;
use heckex::poly::{basis_exponents, is_in_u, parity, s_poly, Parity};

pub type SuiteResult = Result<(), String>;

fn fail(msg: String) -> SuiteResult {
    Err(msg)
}

/// Weight-12 Hecke eigenvalues against the discriminant q-expansion.
pub fn check_tau(m_max: u32) -> heckex::Result<SuiteResult> {
    let tau = ramanujan_tau(m_max as usize);
    for m in 1..=m_max {
        let t = action_matrix(10, m)?;
        let expect = Rational::from_integer(tau[m as usize - 1].clone());
        if t.get(0, 0) != &expect {
            return Ok(fail(format!(
                "weight-12 eigenvalue mismatch at m = {m}: matrix gives {}, expansion gives {expect}",
                t.get(0, 0)
            )));
        }
    }
    println!("tau: matrix eigenvalues match the q-expansion for m = 1..{m_max}");
    Ok(Ok(()))
}

/// Mod-2 basis-selection sweep over even weights up to `w_max`.
pub fn check_mod2(w_max: u32) -> heckex::Result<SuiteResult> {
    let mut count = 0;
    for w in (12..=w_max).step_by(2) {
        let report = verify_basis_selection(w)?;
        if !report.all_ok() {
            return Ok(fail(format!("basis selection failed at w = {w}: {report:?}")));
        }
        count += 1;
    }
    println!("mod2: selection verified for {count} weights (even w in 12..={w_max})");
    Ok(Ok(()))
}

/// Reciprocity law on the grid `(h, k) in [1, grid]^2` for each basis
/// exponent of `w` and each `m <= m_max`.
pub fn check_reciprocity(w: u32, m_max: u32, grid: u32) -> heckex::Result<SuiteResult> {
    let basis = basis_exponents(w)?;
    let mut count = 0;
    for &n in basis.exponents() {
        for m in 1..=m_max {
            let spec = SymbolSpec::new(w, n, m)?;
            for h in 1..=grid as u64 {
                for k in 1..=grid as u64 {
                    if !reciprocity_holds(&spec, h, k)? {
                        return Ok(fail(format!(
                            "reciprocity failed at w = {w}, n = {n}, m = {m}, (h, k) = ({h}, {k})"
                        )));
                    }
                    count += 1;
                }
            }
        }
    }
    println!("reciprocity: {count} points verified for w = {w}, m <= {m_max}, grid {grid}");
    Ok(Ok(()))
}

/// Space membership, parity and vanishing at (1, 1) for the transformed
/// basis polynomials.
pub fn check_uspace(w_max: u32, m_max: u32) -> heckex::Result<SuiteResult> {
    let mut count = 0;
    for w in (10..=w_max).step_by(2) {
        for &n in basis_exponents(w)?.exponents() {
            for m in 1..=m_max {
                let f = s_poly(w, n, m)?;
                if !is_in_u(&f) {
                    return Ok(fail(format!(
                        "period-space membership failed at w = {w}, n = {n}, m = {m}"
                    )));
                }
                if parity(&f) != Parity::Even {
                    return Ok(fail(format!("parity not even at w = {w}, n = {n}, m = {m}")));
                }
                if !f.eval(&rat(1), &rat(1)).is_zero() {
                    return Ok(fail(format!("nonzero at (1,1) for w = {w}, n = {n}, m = {m}")));
                }
                count += 1;
            }
        }
    }
    println!("uspace: {count} polynomials verified (even w in 10..={w_max}, m <= {m_max})");
    Ok(Ok(()))
}

/// Symbol-level Hecke compatibility: the transform of the base symbol
/// equals the direct `m`-symbol on a small grid.
pub fn check_symbol_transform(w: u32, m_max: u32, grid: u32) -> heckex::Result<SuiteResult> {
    let mut count = 0;
    for &n in basis_exponents(w)?.exponents() {
        let base = SymbolSpec::new(w, n, 1)?;
        for m in 2..=m_max {
            let direct = SymbolSpec::new(w, n, m)?;
            for h in 1..=grid as u64 {
                for k in 1..=grid as i64 {
                    let pt = SymbolPoint::new(h, k)?;
                    if hecke_transform(&base, m, &pt)? != eval_symbol(&direct, &pt) {
                        return Ok(fail(format!(
                            "symbol transform mismatch at w = {w}, n = {n}, m = {m}, ({h}, {k})"
                        )));
                    }
                    count += 1;
                }
            }
        }
    }
    println!("transform: {count} points verified for w = {w}, m <= {m_max}, grid {grid}");
    Ok(Ok(()))
}

/// Composition identities for the action matrices on a list of weights.
pub fn check_hecke_algebra(w_list: &[u32]) -> heckex::Result<SuiteResult> {
    for &w in w_list {
        for p in [2, 3] {
            if !verify_hecke_algebra(w, p, 1)? {
                return Ok(fail(format!("algebra identity failed at w = {w}, p = {p}")));
            }
        }
        println!("hecke-algebra: identities hold for w = {w} (p = 2, 3; coprime pairs)");
    }
    Ok(Ok(()))
}
