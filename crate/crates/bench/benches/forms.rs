use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use toeplitz_lab::{form_matrix, psd_check, w_scan, Convention};
use toeplitz_lab_bench::{grid, mixed_pair, weight};

fn bench_form_matrix(c: &mut Criterion) {
    let (phi, psi) = mixed_pair();
    let w = weight();
    let mut group = c.benchmark_group("form_matrix");
    for n in [4usize, 8, 16] {
        for conv in Convention::ALL {
            group.bench_with_input(BenchmarkId::new(conv.as_str(), n), &n, |b, &n| {
                b.iter(|| form_matrix(black_box(&phi), black_box(&psi), &w, n, conv))
            });
        }
    }
    group.finish();
}

fn bench_psd_check(c: &mut Criterion) {
    let (phi, psi) = mixed_pair();
    let w = weight();
    let mut group = c.benchmark_group("psd_check");
    for n in [4usize, 8, 16] {
        let q = form_matrix(&phi, &psi, &w, n, Convention::Circle).q;
        group.bench_with_input(BenchmarkId::from_parameter(n), &q, |b, q| b.iter(|| psd_check(black_box(q))));
    }
    group.finish();
}

fn bench_w_scan(c: &mut Criterion) {
    let (phi, psi) = mixed_pair();
    let mut group = c.benchmark_group("w_scan");
    group.sample_size(10);
    for steps in [5usize, 9] {
        let g = grid(steps);
        group.bench_with_input(BenchmarkId::from_parameter(steps * steps), &g, |b, g| {
            b.iter(|| w_scan(&phi, &psi, g, 6, Convention::PaperDisk))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_form_matrix, bench_psd_check, bench_w_scan);
criterion_main!(benches);
