use criterion::{criterion_group, criterion_main, Criterion};

use braidex_bench::{sample_braid, squared_axis_link};
use braidex_core::conway::{alexander_burau, SkeinEngine};
use braidex_core::LinkDiagram;

fn skein(c: &mut Criterion) {
    let mut group = c.benchmark_group("conway_a3_squared_axis_link");
    group.sample_size(10);
    for n in [5usize, 7, 9] {
        let d = squared_axis_link(n, 1);
        group.bench_function(format!("n{n}_m1_{}x", d.crossing_count()), |b| {
            b.iter(|| SkeinEngine::new().conway_truncated(&d, 3))
        });
    }
    group.finish();

    let d = squared_axis_link(5, 1);
    c.bench_function("conway_a3_no_cache_n5", |b| {
        b.iter(|| SkeinEngine::with_cache(false).conway_truncated(&d, 3))
    });
}

fn oracles(c: &mut Criterion) {
    let w = sample_braid();
    c.bench_function("alexander_burau_4strand", |b| b.iter(|| alexander_burau(&w)));
    c.bench_function("axis_link_simplify", |b| {
        b.iter(|| LinkDiagram::axis_link(&w).simplify())
    });
}

criterion_group!(benches, skein, oracles);
criterion_main!(benches);
