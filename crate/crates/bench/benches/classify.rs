use criterion::{criterion_group, criterion_main, Criterion};
use realnf_bench::{germ, FIXTURES};
use realnf_core::local::milnor_number;
use realnf_core::{classify, Automorphism, Rational};
use std::hint::black_box;

fn sheared(terms: &[((u32, u32), i64)]) -> realnf_core::BiPoly<Rational> {
    let q = |v: i64| Rational::from_integer(v.into());
    Automorphism::linear(q(2), q(1), q(1), q(1)).unwrap().apply(&germ(terms))
}

fn bench_classify(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    for &(name, terms) in FIXTURES {
        let f = germ(terms);
        g.bench_function(name, |b| b.iter(|| classify(black_box(&f))));
        let f = sheared(terms);
        g.bench_function(format!("{name} sheared"), |b| b.iter(|| classify(black_box(&f))));
    }
    g.finish();
}

fn bench_milnor(c: &mut Criterion) {
    let mut g = c.benchmark_group("milnor");
    for &(name, terms) in FIXTURES {
        let f = sheared(terms);
        g.bench_function(name, |b| b.iter(|| milnor_number(black_box(&f))));
    }
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_classify, bench_milnor
}
criterion_main!(benches);
