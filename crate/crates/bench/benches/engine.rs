use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use altacyclic::arrangement::{characteristic_polynomial, direct_point_count};
use altacyclic::bijections::{ds_decode, ds_encode};
use altacyclic::enumeration::count_report;
use altacyclic::forest::{
    induce_tournament, largest_maximal_representation, BiorderedCode, ParentFunction,
};
use altacyclic::numbers::type_table;
use altacyclic::perm::Permutation;
use altacyclic::series::median_genocchi_series;
use altacyclic::tournament::{has_alternating_4cycle, Tournament};

/// An 8-vertex alt-acyclic tournament with nontrivial walk structure.
fn sample_tournament() -> Tournament {
    let pi = Permutation::new(vec![5, 3, 1, 2, 4, 6, 8, 7]).unwrap();
    let p = ParentFunction::from_compact(&[0, 3, 6, 0, 6, 8, 8, 0]).unwrap();
    induce_tournament(&BiorderedCode::new(pi, p).unwrap())
}

fn bench_predicates(c: &mut Criterion) {
    let t = sample_tournament();
    c.bench_function("alternating_4cycle_n8", |b| {
        b.iter(|| has_alternating_4cycle(black_box(&t)))
    });
    c.bench_function("lmax_representation_n8", |b| {
        b.iter(|| largest_maximal_representation(black_box(&t)).unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("count_report_n5", |b| {
        b.iter(|| count_report(black_box(5)).unwrap())
    });
}

fn bench_numbers(c: &mut Criterion) {
    c.bench_function("type_table_n20", |b| b.iter(|| type_table(black_box(20))));
    c.bench_function("charpoly_n10", |b| {
        b.iter(|| characteristic_polynomial(black_box(10)))
    });
}

fn bench_point_count(c: &mut Criterion) {
    c.bench_function("point_count_n2_q13", |b| {
        b.iter(|| direct_point_count(black_box(2), black_box(13)).unwrap())
    });
}

fn bench_codes(c: &mut Criterion) {
    let word: Vec<usize> = (1..=200).rev().collect();
    let pi = Permutation::new(word).unwrap();
    c.bench_function("ds_round_trip_n200", |b| {
        b.iter(|| ds_decode(&ds_encode(black_box(&pi))))
    });
}

fn bench_series(c: &mut Criterion) {
    c.bench_function("median_series_8_terms", |b| {
        b.iter(|| median_genocchi_series(black_box(8)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_predicates,
    bench_enumeration,
    bench_numbers,
    bench_point_count,
    bench_codes,
    bench_series
);
criterion_main!(benches);
