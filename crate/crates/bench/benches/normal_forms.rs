use coxnf::{
    CoxeterMatrix, CoxeterSystem, CyclotomicElement, CyclotomicRing, GraphGroup, Independence, InverseMonoid, Letter,
    RightAngledCoxeter, Word,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::hint::black_box;

const LENGTHS: [usize; 4] = [16, 32, 64, 128];

fn random_word(rng: &mut StdRng, n: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

fn random_signed(rng: &mut StdRng, n: usize, len: usize) -> Word {
    Word::new(
        (0..len)
            .map(|_| Letter::from_doubled_index(rng.gen_range(0..2 * n)))
            .collect(),
    )
}

fn geodesic_length(c: &mut Criterion) {
    let mut matrix = CoxeterMatrix::free(4);
    matrix.set(0, 1, 3);
    matrix.set(1, 2, 4);
    matrix.set(2, 3, 3);
    matrix.set(0, 3, 2);
    let system = CoxeterSystem::new(matrix);
    let mut rng = StdRng::seed_from_u64(7);
    let mut group = c.benchmark_group("geodesic_length");
    for len in LENGTHS {
        let w = random_word(&mut rng, 4, len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| system.geodesic_length(black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn racg_shortlex(c: &mut Criterion) {
    let g = RightAngledCoxeter::new(Independence::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]));
    let mut rng = StdRng::seed_from_u64(11);
    let mut group = c.benchmark_group("racg_shortlex");
    for len in LENGTHS {
        let w = random_word(&mut rng, 5, len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| g.shortlex(black_box(w)))
        });
    }
    group.finish();
}

fn graph_shortlex(c: &mut Criterion) {
    let independence = Independence::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]);
    let g = GraphGroup::new(&independence);
    let m = InverseMonoid::new(&independence);
    let mut rng = StdRng::seed_from_u64(13);
    let mut group = c.benchmark_group("graph_shortlex");
    for len in LENGTHS {
        let w = random_signed(&mut rng, 4, len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| g.shortlex(black_box(w)))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("munn_set");
    for len in LENGTHS {
        let w = random_signed(&mut rng, 4, len);
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| m.munn_set(black_box(w)))
        });
    }
    group.finish();
}

fn cyclotomic_sign(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(17);
    let mut group = c.benchmark_group("cyclotomic_sign");
    for m in [3usize, 6, 12] {
        let ring = CyclotomicRing::new(m);
        let coeffs: Vec<i64> = (0..2 * m).map(|_| rng.gen_range(-100..=100)).collect();
        let x = CyclotomicElement::from_i64(m, &coeffs).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &x, |b, x| {
            b.iter(|| ring.sign_real(black_box(x)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, geodesic_length, racg_shortlex, graph_shortlex, cyclotomic_sign);
criterion_main!(benches);
