//! Compares the sequential and worker-pool execution of a representative
//! verification grid. The cells are pure and independent, so the parallel
//! route should approach linear speedup once cell costs dominate dispatch.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qcong::verify::{registry_cells, run_cells, run_cells_seq, GridBounds};

fn bench_bounds() -> GridBounds {
    GridBounds {
        primes: vec![5, 7, 11],
        max_n: 5,
        max_exponent: 4,
        max_t: 4,
        max_weight: 3,
        max_depth: 3,
        reversal_samples: 5,
        max_r_ones_twos: 4,
        max_r_twos_threes: 5,
    }
}

fn sweep(c: &mut Criterion) {
    let cells = registry_cells(&bench_bounds());
    let mut group = c.benchmark_group("registry_sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(run_cells_seq(black_box(&cells))))
    });
    for workers in [2usize, 4, 0] {
        let label = if workers == 0 {
            "workers_all".to_string()
        } else {
            format!("workers_{workers}")
        };
        group.bench_function(&label, |b| {
            b.iter(|| black_box(run_cells(black_box(&cells), workers)))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
