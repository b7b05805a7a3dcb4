// SPDX-License-Identifier: Apache-2.0

//! Cross-checks of every fast routine against its definitional oracle.

mod common;

use bfc_core::measures::{certificate_complexity, decision_tree_depth, sensitivity};
use bfc_core::{anf, vc_dimension, wht, zeta_subset_f2, BitTable, BooleanFunction};
use common::SplitMix;

fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    (0..1u64 << (1 << n)).map(move |t| BooleanFunction::from_u64(n, t).unwrap())
}

fn check_transforms(f: &BooleanFunction) {
    let t = common::table(f);
    let got = wht(f)
        .coeffs()
        .iter()
        .map(|&c| i64::from(c))
        .collect::<Vec<_>>();
    assert_eq!(got, common::wht(&t), "{f:?}");
    let coeffs = anf(f);
    let got = (0..t.len() as u32)
        .map(|s| coeffs.coefficient(s))
        .collect::<Vec<_>>();
    assert_eq!(got, common::anf(&t), "{f:?}");
}

#[test]
fn transforms_match_direct_sums_on_every_function_up_to_n4() {
    for n in 1..=4 {
        all_functions(n).for_each(|f| check_transforms(&f));
    }
}

#[test]
fn transforms_match_direct_sums_on_random_functions_n6() {
    let mut rng = SplitMix(6);
    for _ in 0..200 {
        check_transforms(&rng.function(6));
    }
}

#[test]
fn subset_zeta_is_an_involution_at_n8() {
    let mut rng = SplitMix(8);
    for _ in 0..100 {
        let f = rng.function(8);
        assert_eq!(&zeta_subset_f2(&zeta_subset_f2(f.table())), f.table());
    }
    let t = BitTable::from_fn(4, |i| i == 0);
    assert_eq!(
        common::anf(&common::table(&BooleanFunction::from_table(t).unwrap())),
        vec![true; 16]
    );
}

fn check_measures(f: &BooleanFunction) {
    let t = common::table(f);
    assert_eq!(sensitivity(f), common::sensitivity(&t), "{f:?}");
    assert_eq!(
        certificate_complexity(f, 10).unwrap(),
        common::certificate(&t),
        "{f:?}"
    );
    assert_eq!(
        decision_tree_depth(f, 12).unwrap(),
        common::decision_tree(&t),
        "{f:?}"
    );
}

#[test]
fn query_measures_match_definitions_up_to_n3() {
    for n in 1..=3 {
        all_functions(n).for_each(|f| check_measures(&f));
    }
}

#[test]
fn query_measures_match_definitions_on_random_functions_n5() {
    let mut rng = SplitMix(5);
    for _ in 0..200 {
        check_measures(&rng.function(5));
    }
}

#[test]
fn vc_matches_brute_force() {
    for n in 1..=4 {
        for f in all_functions(n).skip(1) {
            let (d, w) = vc_dimension(&f.support()).unwrap();
            assert_eq!(Some(d), common::vc(&common::table(&f)), "{f:?}");
            assert!(w.validate(&f.support()));
            assert_eq!(w.size(), d);
        }
    }
    let mut rng = SplitMix(7);
    for _ in 0..200 {
        let f = rng.function(7);
        let (d, _) = vc_dimension(&f.support()).unwrap();
        assert_eq!(Some(d), common::vc(&common::table(&f)));
    }
}

#[test]
fn census_matches_naive_counts_up_to_n2() {
    for n in 1..=2 {
        let row = bfc_core::census::equality_census(n).unwrap();
        assert_eq!(
            (row.deg_equality_count, row.f2_equality_count),
            common::census(n),
            "n = {n}"
        );
    }
}
