use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use homjmp::identity::{check_admissible_jmp, check_hom_flexible, check_power_hom_associative, PowerMode};
use homjmp::linalg::Matrix;
use homjmp::triples::{check_hlts_axioms, triple_from_malcev};
use homjmp::algebra::minus_algebra;
use homjmp_bench::{ex3, ex5, ex5_pair, p6_extension};

fn identities(c: &mut Criterion) {
    let a3 = ex3();
    let a5 = ex5();
    c.bench_function("flexible ex5", |b| b.iter(|| check_hom_flexible(black_box(&a5))));
    c.bench_function("admissible ex3", |b| b.iter(|| check_admissible_jmp(black_box(&a3))));
    c.bench_function("power strict ex5", |b| {
        b.iter(|| check_power_hom_associative(black_box(&a5), PowerMode::Strict))
    });
    c.bench_function("leibniz ex5", |b| {
        let j = ex5_pair();
        b.iter(|| homjmp::identity::check_hom_leibniz(black_box(&j)))
    });
}

fn triples(c: &mut Criterion) {
    let t = triple_from_malcev(&minus_algebra(&ex3())).expect("hom-malcev");
    c.bench_function("hlts ex3", |b| b.iter(|| check_hlts_axioms(black_box(&t))));
}

fn linalg(c: &mut Criterion) {
    let ext = p6_extension();
    let stacked = Matrix::from_fn(36, 6, |r, i| ext.result.bracket().get(i, r / 6, r % 6).clone());
    c.bench_function("rank 36x6", |b| b.iter(|| black_box(&stacked).rank()));
    c.bench_function("kernel 36x6", |b| b.iter(|| black_box(&stacked).kernel()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = identities, triples, linalg
}
criterion_main!(benches);
