//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). All
//! comparisons are exact integer equalities.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use canon::bijection::{
    all_layering_swap_sequences, apply_swap_sequence_path, des_global_involution, des_involution,
    drop_top_descent, lalanne_kreweras, to_identity_class, to_layered_class,
    to_layered_class_path, wdes_global_involution, wdes_involution,
};
use canon::enumerate::{dyck_paths, factorial, multinomial_count, permutations};
use canon::poly::BivariatePoly;
use canon::verify::{check_identity, VerifyOptions};
use canon::{DyckPath, Multipermutation};

fn assert_identity(name: &str, n: usize, opts: &VerifyOptions) {
    let report = check_identity(name, n, opts).unwrap();
    assert!(
        report.pass,
        "{name} {} failed: {:?}",
        report.params,
        report.witness
    );
}

fn poly_from(pairs: &[(i64, u32, u32)]) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for &(c, i, j) in pairs {
        p.add_term(&BigInt::from(c), i, j);
    }
    p
}

#[test]
fn criterion_1_main_theorem() {
    let start = Instant::now();
    for n in 1..=6 {
        assert_identity("main", n, &VerifyOptions::default());
    }

    // Spot values from the displayed n <= 4 polynomials.
    let c2 = canon::families::nonnesting_distribution(2);
    assert_eq!(c2, poly_from(&[(1, 0, 2), (1, 1, 0), (1, 1, 2), (1, 2, 0)]));

    let c3 = canon::families::nonnesting_distribution(3);
    assert_eq!(
        c3,
        poly_from(&[
            (1, 0, 3),
            (1, 1, 0),
            (2, 1, 1),
            (4, 1, 3),
            (5, 2, 0),
            (8, 2, 1),
            (1, 2, 3),
            (5, 3, 0),
            (2, 3, 1),
            (1, 4, 0),
        ])
    );
    assert_eq!(
        c3.substitute_u_one().to_string(),
        "1 + 7t + 14t^2 + 7t^3 + t^4"
    );

    let c4 = canon::families::nonnesting_distribution(4);
    assert_eq!(
        c4,
        poly_from(&[
            (1, 0, 4),
            (1, 1, 0),
            (2, 1, 1),
            (3, 1, 2),
            (11, 1, 4),
            (15, 2, 0),
            (24, 2, 1),
            (33, 2, 2),
            (11, 2, 4),
            (56, 3, 0),
            (44, 3, 1),
            (33, 3, 2),
            (1, 3, 4),
            (56, 4, 0),
            (24, 4, 1),
            (3, 4, 2),
            (15, 5, 0),
            (2, 5, 1),
            (1, 6, 0),
        ])
    );
    assert_eq!(
        c4.substitute_u_one().to_string(),
        "1 + 17t + 83t^2 + 134t^3 + 83t^4 + 17t^5 + t^6"
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "criterion 1 took {elapsed:?}");
    println!("[acceptance] criterion 1 (main theorem, n=1..6): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_refined_theorem() {
    let start = Instant::now();
    for n in 1..=5 {
        assert_identity("refined", n, &VerifyOptions::default());
    }
    println!(
        "[acceptance] criterion 2 (refined theorem, all classes, n=1..5): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_3_narayana_identities() {
    let start = Instant::now();
    for n in 1..=10 {
        for name in ["eq6", "eq7", "eq12", "eq13"] {
            assert_identity(name, n, &VerifyOptions::default());
        }
    }
    println!(
        "[acceptance] criterion 3 (Narayana identities, n=1..10): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_4_symmetry_corollaries() {
    let start = Instant::now();
    for n in 1..=6 {
        assert_identity("cor23", n, &VerifyOptions::default());
        assert_identity("cor24", n, &VerifyOptions::default());
    }
    for n in 1..=5 {
        assert_identity("cor25", n, &VerifyOptions::default());
        assert_identity("cor26", n, &VerifyOptions::default());
    }
    println!(
        "[acceptance] criterion 4 (symmetry corollaries): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_5_worked_examples() {
    let start = Instant::now();

    // Lalanne-Kreweras on the 18-step figure path.
    let d: DyckPath = "ENEENENENENEEENNNN".parse().unwrap();
    assert_eq!(
        d.peak_stats().peak_corners,
        vec![(1, 0), (3, 1), (4, 2), (5, 3), (6, 4), (9, 5)]
    );
    assert_eq!(
        lalanne_kreweras(&d).peak_stats().peak_corners,
        vec![(6, 0), (7, 2), (8, 7), (9, 8)]
    );

    let w: Multipermutation = "228183175437954696".parse().unwrap();

    // Class normalization.
    let layered = to_layered_class(&w).unwrap();
    assert_eq!(layered.to_string(), "889596576423741231");

    // Top-descent removal chain, with the descent count at each stage.
    let chain = [
        ("889596576423741231", 9),
        ("889596576412374123", 8),
        ("889596576172341234", 7),
        ("889192132435674567", 6),
        ("112324354657896789", 5),
    ];
    let mut cur = layered;
    assert_eq!(cur.statistics().des, chain[0].1);
    for &(expected, des) in &chain[1..] {
        cur = drop_top_descent(&cur).unwrap();
        assert_eq!(cur.to_string(), expected);
        assert_eq!(cur.statistics().des, des);
    }

    // Full composite to the identity class.
    assert_eq!(
        to_identity_class(&w).unwrap().to_string(),
        "112324354657896789"
    );

    // The four symmetry involutions.
    assert_eq!(
        wdes_involution(&w).unwrap().to_string(),
        "281372581347549966"
    );
    assert_eq!(
        wdes_global_involution(&w).unwrap().to_string(),
        "694573691457318822"
    );
    assert_eq!(des_involution(&w).unwrap().to_string(), "282811337574956496");
    assert_eq!(
        des_global_involution(&w).unwrap().to_string(),
        "696944557371823182"
    );

    println!(
        "[acceptance] criterion 5 (worked bijection examples, bit-exact): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_6_involution_suites() {
    let start = Instant::now();
    for n in 1..=5 {
        assert_identity("involutions", n, &VerifyOptions::default());
    }
    println!(
        "[acceptance] criterion 6 (involutions and statistic contracts, n=1..5): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_7_normalization_well_defined() {
    let start = Instant::now();
    for n in 1..=4 {
        let paths: Vec<DyckPath> = dyck_paths(n).collect();
        for sigma in permutations(n) {
            let sequences = all_layering_swap_sequences(&sigma);
            for d in &paths {
                let canonical = to_layered_class_path(&sigma, d).unwrap();
                for seq in &sequences {
                    assert_eq!(
                        apply_swap_sequence_path(&sigma, seq, d).unwrap(),
                        canonical,
                        "sigma={sigma} d={d} seq={seq:?}"
                    );
                }
            }
        }
    }
    println!(
        "[acceptance] criterion 7 (normalization independent of swap sequence, n=1..4): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_8_generalizations() {
    let start = Instant::now();

    // Closed form vs brute force for the avoider distribution.
    for n in 1..=4 {
        for k in [3, 4] {
            let opts = VerifyOptions { k: Some(k), ..Default::default() };
            assert_identity("thm51", n, &opts);
        }
    }

    // Avoider counts up to n = 5.
    for n in 1..=5 {
        for k in [3, 4] {
            let opts = VerifyOptions { k: Some(k), ..Default::default() };
            assert_identity("acount", n, &opts);
        }
    }

    // Nonnesting-partition counts for every enumerable pair.
    for k in 1..=5 {
        for n in 1..=5 {
            let opts = VerifyOptions { k: Some(k), ..Default::default() };
            assert_identity("b_count", n, &opts);
        }
    }

    // Inclusions wherever the full word space fits under the cap.
    for k in 1..=5 {
        for n in 1..=6 {
            if multinomial_count(n, k) > BigUint::from(500_000u32) {
                continue;
            }
            let opts = VerifyOptions { k: Some(k), ..Default::default() };
            assert_identity("inclusions", n, &opts);
        }
    }

    // Canon class polynomial shift for k = 3, n <= 4.
    for n in 1..=4 {
        let opts = VerifyOptions { k: Some(3), ..Default::default() };
        assert_identity("eq34", n, &opts);
    }

    // Negative check: the descent distribution is not palindromic at (4,3).
    let opts = VerifyOptions { k: Some(3), ..Default::default() };
    assert_identity("b_asymmetry", 4, &opts);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "criterion 8 took {elapsed:?}");
    println!("[acceptance] criterion 8 (k-copy generalizations): PASS in {elapsed:?}");
}

#[test]
fn criterion_9_counting() {
    let start = Instant::now();
    for n in 1..=7 {
        assert_identity("count", n, &VerifyOptions::default());
    }
    // The stated value for n = 7.
    assert_eq!(
        factorial(7) * canon::enumerate::catalan(7),
        BigUint::from(2_162_160u64)
    );
    // And the explicit count 95,040 at n = 6 by direct enumeration.
    assert_eq!(canon::enumerate::nonnesting(6).count(), 95_040);
    println!(
        "[acceptance] criterion 9 (counting, n=1..7): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn acceptance_identities_reachable_by_name() {
    // Every identity exercised above is reachable through the single
    // dispatch entry point used by the command-line verifier.
    let names: BTreeSet<&str> = canon::verify::IDENTITIES.iter().copied().collect();
    for required in [
        "main",
        "refined",
        "eq6",
        "eq7",
        "eq12",
        "eq13",
        "cor23",
        "cor24",
        "cor25",
        "cor26",
        "thm51",
        "acount",
        "b_count",
        "eq34",
        "b_asymmetry",
        "count",
        "inclusions",
        "involutions",
    ] {
        assert!(names.contains(required), "{required} missing");
    }
}
