// SPDX-License-Identifier: Apache-2.0

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bfc_core::census::equality_census;
use bfc_core::constructions::{counterexample_n15, random_function};
use bfc_core::measures::{certificate_complexity, decision_tree_depth, sensitivity};
use bfc_core::vc_dimension;

fn vc(c: &mut Criterion) {
    let mut group = c.benchmark_group("vc");
    group.sample_size(10);
    let cx = counterexample_n15().support();
    group.bench_function("counterexample_n15", |b| {
        b.iter(|| vc_dimension(black_box(&cx)))
    });
    for n in [10, 14] {
        let fam = random_function(n, 0.5, 3).unwrap().support();
        group.bench_with_input(BenchmarkId::new("random", n), &fam, |b, fam| {
            b.iter(|| vc_dimension(black_box(fam)))
        });
    }
    group.finish();
}

fn query(c: &mut Criterion) {
    let mut group = c.benchmark_group("query");
    group.sample_size(10);
    for n in [8, 10] {
        let f = random_function(n, 0.5, 11).unwrap();
        group.bench_with_input(BenchmarkId::new("sensitivity", n), &f, |b, f| {
            b.iter(|| sensitivity(black_box(f)))
        });
        group.bench_with_input(BenchmarkId::new("certificate", n), &f, |b, f| {
            b.iter(|| certificate_complexity(black_box(f), 10))
        });
        group.bench_with_input(BenchmarkId::new("decision_tree", n), &f, |b, f| {
            b.iter(|| decision_tree_depth(black_box(f), 12))
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| equality_census(black_box(n)))
        });
    }
    group.finish();
}

criterion_group!(benches, vc, query, census);
criterion_main!(benches);
