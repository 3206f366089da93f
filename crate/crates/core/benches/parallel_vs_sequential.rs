use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use diagram_homology::homology::tor;
use diagram_homology::par::{self, Mode};
use diagram_homology::verify::{verify_vanishing, Setting};
use diagram_homology::{BasedAlgebra, BasedModule, Family, Ring};

fn modes() -> Vec<(&'static str, Mode)> {
    vec![("sequential", Mode::Sequential), ("default", Mode::default())]
}

fn structure_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure-table-rbr4");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| BasedAlgebra::with_ints(Family::RookBrauer, 4, Ring::Integers, 1, 1).unwrap())
        });
    }
    g.finish();
}

fn tor_rbr3(c: &mut Criterion) {
    let f2 = Ring::prime_field(2).unwrap();
    let a = BasedAlgebra::with_ints(Family::RookBrauer, 3, f2, 1, 1).unwrap();
    let t = BasedModule::trivial(&a);
    let mut g = c.benchmark_group("tor-rbr3-f2-degree2");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| tor(black_box(&t), 2).unwrap())
        });
    }
    g.finish();
}

fn vanishing_sweep(c: &mut Criterion) {
    let setting = Setting::with_ints(Family::Motzkin, 2, Ring::Integers, 2, 1);
    let sets = vec![vec![], vec![1], vec![2], vec![1, 2]];
    let mut g = c.benchmark_group("vanishing-motzkin2-all-x");
    g.sample_size(10);
    for (name, mode) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| verify_vanishing(&setting, black_box(&sets), 3).unwrap())
        });
    }
    g.finish();
    par::set_mode(Mode::default());
}

criterion_group!(benches, structure_table, tor_rbr3, vanishing_sweep);
criterion_main!(benches);
