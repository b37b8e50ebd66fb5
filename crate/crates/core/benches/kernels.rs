use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use froblab::homological::{free_resolution_with, hochschild_with};
use froblab::linalg::{rref_with, Matrix};
use froblab::verify::{self, VerifyConfig};
use froblab::{builtin, enveloping, AlgebraPresentation, Builtin, Execution, Field, ModuleRep, Side};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn random_matrix(field: Field, n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(field, n, n, |_, _| field.from_i64(rng.random_range(-2..=2)))
}

fn bench_rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    group.sample_size(10);
    for (label, field, n) in [("Q", Field::Rational, 32), ("F3", Field::Prime(3), 160)] {
        let m = random_matrix(field, n, 7);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(format!("{label}/{mode}"), n), &m, |b, m| {
                b.iter(|| rref_with(black_box(m), exec))
            });
        }
    }
    group.finish();
}

fn bench_hochschild(c: &mut Criterion) {
    let mut group = c.benchmark_group("hochschild");
    group.sample_size(10);
    let alg = Builtin::GroupSym3.build(Field::Prime(3)).unwrap();
    let x = env_algebra_module(&alg);
    for (mode, exec) in MODES {
        group.bench_function(format!("sym3_F3/{mode}"), |b| b.iter(|| hochschild_with(&alg, black_box(&x), 2, exec).unwrap()));
    }
    group.finish();
}

/// `A` itself as an `A^e`-module.
fn env_algebra_module(alg: &AlgebraPresentation) -> ModuleRep {
    let env = enveloping(alg);
    ModuleRep::new(Side::Left, alg.field(), alg.dim(), env.action_on_algebra()).unwrap()
}

fn bench_resolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("free_resolution");
    group.sample_size(10);
    let alg = builtin("matrix", Some(2), Field::Rational).unwrap();
    let env = enveloping(&alg);
    let a = env_algebra_module(&alg);
    for (mode, exec) in MODES {
        group.bench_function(format!("A_over_Ae_M2/{mode}"), |b| {
            b.iter(|| free_resolution_with(env.algebra(), black_box(&a), 3, exec).unwrap())
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (mode, exec) in MODES {
        let config = VerifyConfig {
            checks: verify::select_checks(&["cotensorhom".into(), "cotorext".into()]).unwrap(),
            exec,
            ..VerifyConfig::default()
        };
        group.bench_function(mode, |b| b.iter(|| verify::run(black_box(&config))));
    }
    group.finish();
}

criterion_group!(benches, bench_rref, bench_hochschild, bench_resolution, bench_verify);
criterion_main!(benches);
