//! Benchmarks for the exact computational kernels on fixed catalog inputs.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use liecheck_core::catalog;
use liecheck_core::covariants::{apply_phi, graded_kernel, random_polymap, DixmierSolver, MapKind};
use liecheck_core::lie::Representation;

fn bench_symbolic_index(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic-index");
    for name in ["sl3", "sp4"] {
        let entry = catalog::catalog(name).unwrap();
        group.bench_function(name, |b| b.iter(|| entry.algebra.index()));
        let double = entry.algebra.semidirect_double();
        group.bench_function(format!("{name}-double"), |b| b.iter(|| double.index()));
    }
    group.finish();
}

fn bench_graded_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("graded-kernel");
    let (sl2, _) = catalog::sl2();
    let adj = Representation::adjoint(Arc::new(sl2));
    group.bench_function("sl2-adjoint-degree-3", |b| {
        b.iter(|| graded_kernel(MapKind::Phi, &adj, 3))
    });
    let takiff = catalog::catalog("sl2-ltimes-sl2").unwrap();
    let co = Representation::coadjoint(takiff.algebra.clone());
    group.bench_function("takiff-coadjoint-degree-2", |b| {
        b.iter(|| graded_kernel(MapKind::Phi, &co, 2))
    });
    group.finish();
}

fn bench_decomposition(c: &mut Criterion) {
    let takiff = catalog::catalog("sl2-ltimes-sl2").unwrap();
    let co = Representation::coadjoint(takiff.algebra.clone());
    let mut rng = ChaCha20Rng::seed_from_u64(0);
    let f = random_polymap(&mut rng, 6, 6, 2);
    let x = apply_phi(&co, &f).unwrap();
    // Warm solver: the per-degree factorizations are cached, so this
    // measures the per-decomposition cost of a batch run.
    let mut solver = DixmierSolver::new(co.clone());
    solver.decompose(&x, 3).unwrap();
    c.bench_function("decompose-takiff-degree-2-warm", |b| {
        b.iter(|| solver.decompose(&x, 3).unwrap())
    });
}

criterion_group!(
    benches,
    bench_symbolic_index,
    bench_graded_kernel,
    bench_decomposition
);
criterion_main!(benches);
