//! Known-value integration tests: the reference weight-30 example matrix
//! and the weight-12 eigenvalue column.

use num_bigint::BigInt;
use std::str::FromStr;

use heckex::exact::Rational;
use heckex::hecke::{action_matrix, char_poly, ramanujan_tau, trace};
use heckex::matrix::RationalMatrix;

fn frac(num: &str, den: &str) -> Rational {
    Rational::new(BigInt::from_str(num).unwrap(), BigInt::from_str(den).unwrap())
}

fn int(s: &str) -> Rational {
    Rational::from_integer(BigInt::from_str(s).unwrap())
}

#[test]
fn weight_thirty_hecke_seven_matrix() {
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
    assert!(p.is_integral());

    assert_eq!(trace(&t).unwrap(), int("-3020312682800"));
}

#[test]
fn weight_twelve_matches_tau_expansion() {
    let tau = ramanujan_tau(12);
    for m in 1..=12u32 {
        let t = action_matrix(10, m).unwrap();
        assert_eq!((t.rows(), t.cols()), (1, 1));
        assert_eq!(
            t.get(0, 0),
            &Rational::from_integer(tau[m as usize - 1].clone()),
            "tau({m})"
        );
    }
}
