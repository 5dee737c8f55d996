use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hstar_core::numeral::factoradic_triangle;
use hstar_core::realroot::{is_real_rooted, sturm_certificate};

fn sturm(c: &mut Criterion) {
    let rows = factoradic_triangle(12);
    let mut group = c.benchmark_group("sturm_certificate");
    for n in [4usize, 8, 12] {
        let p = &rows[n - 1];
        group.bench_with_input(BenchmarkId::from_parameter(n), p, |b, p| {
            b.iter(|| sturm_certificate(black_box(p)).unwrap())
        });
    }
    group.finish();

    let p = &rows[9];
    c.bench_function("is_real_rooted_n10", |b| {
        b.iter(|| is_real_rooted(black_box(p)))
    });
}

criterion_group!(benches, sturm);
criterion_main!(benches);
