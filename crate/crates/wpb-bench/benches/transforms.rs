use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use wpb_core::{
    BooleanFunction, Bits, FitnessEvaluator, FitnessKind, SignTable, WeightClassIndex,
    WeightwiseGenotype,
};

fn random_function(n: usize, rng: &mut ChaCha8Rng) -> BooleanFunction {
    BooleanFunction::new(n, Bits::from_fn(1 << n, |_| rng.random::<bool>())).unwrap()
}

fn bench_walsh(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = random_function(8, &mut rng);
    c.bench_function("walsh_butterfly_n8", |b| {
        b.iter(|| black_box(&f).walsh_spectrum())
    });
    c.bench_function("walsh_naive_n8", |b| {
        b.iter(|| black_box(&f).walsh_spectrum_naive())
    });
}

fn bench_restricted(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = random_function(8, &mut rng);
    let idx = WeightClassIndex::new(8);
    let signs = SignTable::new(&idx, 4).unwrap();
    c.bench_function("restricted_spectrum_naive_k4", |b| {
        b.iter(|| black_box(&f).restricted_spectrum(4, &idx).unwrap())
    });
    c.bench_function("restricted_spectrum_bitparallel_k4", |b| {
        b.iter(|| black_box(&f).restricted_spectrum_fast(&idx, &signs))
    });
}

fn bench_fitness(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let idx = WeightClassIndex::new(8);
    let evaluator = FitnessEvaluator::new(FitnessKind::Fit1, &idx).unwrap();
    let genotype = WeightwiseGenotype::random(8, &mut rng);
    let table = genotype.decode(&idx);
    c.bench_function("fit1_balanced_slices", |b| {
        b.iter(|| evaluator.evaluate_balanced_slices(black_box(genotype.slices())))
    });
    c.bench_function("fit1_full_table", |b| {
        b.iter(|| evaluator.evaluate(black_box(&table)))
    });
}

criterion_group!(benches, bench_walsh, bench_restricted, bench_fitness);
criterion_main!(benches);
