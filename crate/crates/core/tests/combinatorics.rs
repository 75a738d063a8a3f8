use num_bigint::BigInt;

use tlb_core::combinatorics::{
    binomial, catalan, check_bijection, count_atmost, count_tilde, count_tilde_formula,
    cut_is_bijective, enumerate_disk, BijectionCheck,
};

#[test]
fn tilde_count_formula() {
    for n in 1..=6 {
        for k in 0..=8 - n {
            assert_eq!(
                BigInt::from(count_tilde(n, k).unwrap()),
                count_tilde_formula(n, k),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn disk_totals_are_catalan() {
    for n in 1..=4 {
        for k in 0..=3 {
            assert_eq!(
                BigInt::from(enumerate_disk(n, k).unwrap().len()),
                catalan(n + k)
            );
        }
    }
}

#[test]
fn large_k_saturates() {
    // k ≥ n leaves every annular diagram available
    for n in 1..=4 {
        assert_eq!(count_tilde_formula(n, n), binomial(2 * n as i64, n as i64));
    }
}

#[test]
fn atmost_equals_tilde() {
    for n in 1..=5 {
        for k in 0..=(8 - n).min(n + 1) {
            assert_eq!(
                count_atmost(n, k).unwrap(),
                count_tilde(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn cutting_is_bijective() {
    for n in 1..=4 {
        for k in 0..=(8 - n).min(n) {
            assert!(cut_is_bijective(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn bijection_exhaustive() {
    for n in 1..=4 {
        assert!(
            check_bijection(n).unwrap().iter().all(BijectionCheck::pass),
            "n={n}"
        );
    }
}
