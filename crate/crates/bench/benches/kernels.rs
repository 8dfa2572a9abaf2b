use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use icosa_core::exact::Cyclotomic;
use icosa_core::poly::{scan_singular_labeled, PrimeFieldConfig};
use icosa_core::{hashimoto, pencil};

fn cyclotomic_mul(c: &mut Criterion) {
    let a = Cyclotomic::zeta(7) + Cyclotomic::from_frac(3, 5) * Cyclotomic::zeta(11) - Cyclotomic::from_i64(2);
    let b = Cyclotomic::zeta(13) * Cyclotomic::from_frac(-7, 4) + Cyclotomic::zeta(1);
    c.bench_function("cyclotomic mul", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("cyclotomic inverse", |bench| bench.iter(|| black_box(&a).inverse().unwrap()));
}

fn determinants(c: &mut Criterion) {
    c.bench_function("det A(y) over Q(zeta60)[y]", |bench| bench.iter(|| pencil::discriminant_identity().unwrap()));
}

fn scans(c: &mut Criterion) {
    let s3 = pencil::s3().unwrap();
    let m = hashimoto::member(&icosa_core::exact::rat(1, 4)).unwrap().poly4;
    let cfg = PrimeFieldConfig::new(61).unwrap();
    let mut g = c.benchmark_group("singular scan mod 61");
    g.sample_size(20);
    g.bench_function("S3", |bench| bench.iter(|| scan_singular_labeled(&s3, &cfg, "s3").unwrap()));
    g.bench_function("hashimoto t = 1/4", |bench| bench.iter(|| scan_singular_labeled(&m, &cfg, "t").unwrap()));
    g.finish();
}

criterion_group!(benches, cyclotomic_mul, determinants, scans);
criterion_main!(benches);
