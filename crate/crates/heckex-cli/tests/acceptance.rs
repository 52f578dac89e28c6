//! Acceptance suite. Each test is one numbered criterion; the test name is
//! the pass/fail line. Everything is bit-exact: no tolerances, only
//! equality of exact rationals, and a wall-clock budget per criterion.
//!
//! Run with `cargo test -p heckex-cli --test acceptance` (add
//! `-- --nocapture` to see the per-criterion PASS details).

use std::process::Command;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use heckex::dedekind::{eval_symbol, hecke_transform, reciprocity_holds, SymbolPoint, SymbolSpec};
use heckex::exact::Rational;
use heckex::hecke::{
    action_matrix, char_poly, gram_matrices, hecke_multiplicative_holds, hecke_recurrence_holds,
    ramanujan_tau, trace,
};
use heckex::matrix::RationalMatrix;
use heckex::mod2::{build_c, verify_basis_selection};
use heckex::poly::{basis_exponents, dim_cusp, is_in_u, parity, s_poly, s_poly_oracle, Parity};

fn frac(num: &str, den: &str) -> Rational {
    Rational::new(BigInt::from_str(num).unwrap(), BigInt::from_str(den).unwrap())
}

fn int(s: &str) -> Rational {
    Rational::from_integer(BigInt::from_str(s).unwrap())
}

fn budget(started: Instant, limit: Duration, label: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= limit,
        "{label} exceeded its budget: {elapsed:?} > {limit:?}"
    );
    println!("criterion {label}: PASS ({elapsed:?})");
}

/// Criterion 1: `matrix --w 28 --m 7` through the real binary reproduces the
/// reference matrix and characteristic polynomial, bit-exact, under 10 s.
#[test]
fn criterion_01_reference_matrix_via_cli() {
    let started = Instant::now();

    let output = Command::new(env!("CARGO_BIN_EXE_heckex"))
        .args(["matrix", "--w", "28", "--m", "7", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(
        stdout,
        concat!(
            r#"{"w":28,"m":7,"dim":2,"basis_exponents":[5,9],"#,
            r#""matrix":[["-597428921326303528/6439","-4321468293778944/6439"],"#,
            r#"["79904984173167605760/6439","577981127961754328/6439"]],"#,
            r#""charpoly":["101633401431659687926336","3020312682800","1"],"#,
            r#""trace":"-3020312682800"}"#,
            "\n"
        )
    );

    // same values through the library path
    let t = action_matrix(28, 7).unwrap();
    let expect = RationalMatrix::new(
        2,
        2,
        vec![
            frac("-597428921326303528", "6439"),
            frac("-4321468293778944", "6439"),
            frac("79904984173167605760", "6439"),
            frac("577981127961754328", "6439"),
        ],
    )
    .unwrap();
    assert_eq!(t, expect);
    let p = char_poly(&t).unwrap();
    assert_eq!(
        p.coeffs(),
        &[int("101633401431659687926336"), int("3020312682800"), int("1")]
    );

    budget(started, Duration::from_secs(10), "1 (reference matrix)");
}

/// Criterion 2: the weight-12 action matrix is `[[tau(m)]]` for m = 1..12,
/// with tau from the independent q-expansion, under 30 s.
#[test]
fn criterion_02_weight_twelve_eigenvalues() {
    let started = Instant::now();
    let tau = ramanujan_tau(12);
    assert_eq!(tau[0], BigInt::from(1));
    assert_eq!(tau[1], BigInt::from(-24));
    assert_eq!(tau[2], BigInt::from(252));
    assert_eq!(tau[4], BigInt::from(4830));
    assert_eq!(tau[6], BigInt::from(-16744));
    for m in 1..=12u32 {
        let t = action_matrix(10, m).unwrap();
        assert_eq!((t.rows(), t.cols()), (1, 1), "m = {m}");
        assert_eq!(
            t.get(0, 0),
            &Rational::from_integer(tau[m as usize - 1].clone()),
            "m = {m}"
        );
    }
    budget(started, Duration::from_secs(30), "2 (weight-12 eigenvalues)");
}

/// Criterion 3: closed formula equals the pointwise oracle,
/// coefficient-exact, for even w in [10, 24], all basis exponents,
/// m in [1, 6], under 2 min.
#[test]
fn criterion_03_oracle_equivalence() {
    let started = Instant::now();
    let mut cases = 0;
    for w in (10..=24u32).step_by(2) {
        for &n in basis_exponents(w).unwrap().exponents() {
            for m in 1..=6u32 {
                assert_eq!(
                    s_poly(w, n, m).unwrap(),
                    s_poly_oracle(w, n, m).unwrap(),
                    "w = {w}, n = {n}, m = {m}"
                );
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 48, "one case per basis exponent of each weight and each m");
    budget(started, Duration::from_secs(120), "3 (oracle equivalence)");
}

/// Criterion 4: period-space membership and even parity for the
/// transformed polynomials, w in {10..28}, basis n, m in {1,2,3}, under 1 min.
#[test]
fn criterion_04_membership_and_parity() {
    let started = Instant::now();
    for w in (10..=28u32).step_by(2) {
        for &n in basis_exponents(w).unwrap().exponents() {
            for m in 1..=3u32 {
                let f = s_poly(w, n, m).unwrap();
                assert!(is_in_u(&f), "w = {w}, n = {n}, m = {m}");
                assert_eq!(parity(&f), Parity::Even, "w = {w}, n = {n}, m = {m}");
            }
        }
    }
    budget(started, Duration::from_secs(60), "4 (membership and parity)");
}

/// Criterion 5: reciprocity law, w in {10, 14}, basis n, m in {1,2,3},
/// (h, k) in [1,5]^2, exact, under 2 min.
#[test]
fn criterion_05_reciprocity() {
    let started = Instant::now();
    for w in [10u32, 14] {
        for &n in basis_exponents(w).unwrap().exponents() {
            for m in 1..=3u32 {
                let spec = SymbolSpec::new(w, n, m).unwrap();
                for h in 1..=5u64 {
                    for k in 1..=5u64 {
                        assert!(
                            reciprocity_holds(&spec, h, k).unwrap(),
                            "w = {w}, n = {n}, m = {m}, (h, k) = ({h}, {k})"
                        );
                    }
                }
            }
        }
    }
    budget(started, Duration::from_secs(120), "5 (reciprocity)");
}

/// Criterion 6: the Hecke transform of the base symbol equals the direct
/// m-symbol, w in {10, 14}, basis n, m in {2,3}, (h, k) in [1,4]^2, under 2 min.
#[test]
fn criterion_06_symbol_transform() {
    let started = Instant::now();
    for w in [10u32, 14] {
        for &n in basis_exponents(w).unwrap().exponents() {
            let base = SymbolSpec::new(w, n, 1).unwrap();
            for m in 2..=3u32 {
                let direct = SymbolSpec::new(w, n, m).unwrap();
                for h in 1..=4u64 {
                    for k in 1..=4i64 {
                        let pt = SymbolPoint::new(h, k).unwrap();
                        assert_eq!(
                            hecke_transform(&base, m, &pt).unwrap(),
                            eval_symbol(&direct, &pt),
                            "w = {w}, n = {n}, m = {m}, ({h}, {k})"
                        );
                    }
                }
            }
        }
    }
    budget(started, Duration::from_secs(120), "6 (symbol transform)");
}

/// Criterion 7: `T_2 T_3 = T_6` and `T_2^2 = T_4 + 2^(w+1) I` for
/// w in {10, 22, 26, 28}, exact, under 1 min.
#[test]
fn criterion_07_hecke_algebra() {
    let started = Instant::now();
    for w in [10u32, 22, 26, 28] {
        assert!(hecke_multiplicative_holds(w, 2, 3).unwrap(), "T2 T3 = T6 at w = {w}");
        assert!(hecke_recurrence_holds(w, 2, 1).unwrap(), "T2^2 = T4 + 2^(w+1) at w = {w}");
    }
    budget(started, Duration::from_secs(60), "7 (algebra identities)");
}

/// Criterion 8: the Gram matrix is symmetric and invertible for every even
/// w in [10, 60] with nontrivial space, and every characteristic polynomial
/// from criteria 1, 2 and 7 has integer coefficients. Under 2 min.
#[test]
fn criterion_08_gram_nonsingular_charpoly_integral() {
    let started = Instant::now();
    for w in (10..=60u32).step_by(2) {
        if dim_cusp(w).unwrap() == 0 {
            continue;
        }
        let (s1, _) = gram_matrices(w, 1).unwrap();
        assert!(s1.is_symmetric(), "w = {w}");
        let d = s1.rows();
        assert!(
            s1.solve(&RationalMatrix::identity(d)).is_some(),
            "Gram matrix singular at w = {w}"
        );
    }

    let mut matrices = vec![action_matrix(28, 7).unwrap()];
    for m in 1..=12u32 {
        matrices.push(action_matrix(10, m).unwrap());
    }
    for w in [10u32, 22, 26, 28] {
        for m in [2u32, 3, 4, 6] {
            matrices.push(action_matrix(w, m).unwrap());
        }
    }
    for t in &matrices {
        let p = char_poly(t).unwrap();
        assert!(p.is_integral());
        if t.rows() > 0 {
            // the trace reappears, negated, one below the leading coefficient
            assert_eq!(trace(t).unwrap(), -p.coeffs()[t.rows() - 1].clone());
        }
    }
    budget(started, Duration::from_secs(120), "8 (Gram and integrality)");
}

/// Criterion 9: the four mod-2 structural checks hold for every even
/// w in [12, 200], under 1 min.
#[test]
fn criterion_09_mod2_selection_sweep() {
    let started = Instant::now();
    for w in (12..=200u32).step_by(2) {
        let report = verify_basis_selection(w).unwrap();
        assert!(report.independent, "independence failed at w = {w}");
        assert!(report.cardinality_ok, "cardinality failed at w = {w}");
        assert!(report.pascal_ok, "Pascal block failed at w = {w}");
        assert!(report.rowsum_ok, "row-sum relation failed at w = {w}");
    }
    budget(started, Duration::from_secs(60), "9 (mod-2 selection sweep)");
}

/// Criterion 10: the two small endpoint-relation matrix fixtures,
/// entry for entry.
#[test]
fn criterion_10_c_matrix_fixtures() {
    let started = Instant::now();
    let c8 = build_c(8);
    let expect8: [[i64; 5]; 3] = [[0, 1, 0, 0, -1], [0, 0, 1, -1, 0], [0, 0, 0, 1, 1]];
    for (i, row) in expect8.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            assert_eq!(c8.get(i, j), &BigInt::from(v), "C(8) at ({i}, {j})");
        }
    }
    let c10 = build_c(10);
    let expect10: [[i64; 6]; 3] =
        [[0, 1, 0, 0, 0, -1], [0, 0, 1, 0, -1, 0], [0, 0, 0, 1, 2, 2]];
    for (i, row) in expect10.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            assert_eq!(c10.get(i, j), &BigInt::from(v), "C(10) at ({i}, {j})");
        }
    }
    budget(started, Duration::from_secs(10), "10 (endpoint fixtures)");
}
