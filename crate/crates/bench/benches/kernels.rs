use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use std::hint::black_box;

use spherimult::branchkit::{m_restriction, pair_embedding, tensor_decompose, weight_multiplicities};
use spherimult::chevalley::ChevalleyAlgebra;
use spherimult::classifier::{Classifier, TableId, Window};
use spherimult::linalg::{rank_bigint, PrimeField};
use spherimult::rootsys::{RootSystem, Weight};
use spherimult::satake::Catalog;
use spherimult::spherical::{is_spherical, TrialPolicy};
use spherimult::Theta;
use spherimult_bench::pair_span;

fn root_systems(c: &mut Criterion) {
    let mut g = c.benchmark_group("root_system");
    for t in ["A4", "D6", "E8"] {
        let ct = t.parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(t), &ct, |b, ct| b.iter(|| RootSystem::new(black_box(ct)).unwrap()));
    }
    g.finish();
}

fn chevalley(c: &mut Criterion) {
    let mut g = c.benchmark_group("chevalley_algebra");
    for t in ["A3", "D4", "F4"] {
        let ct = t.parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(t), &ct, |b, ct| b.iter(|| ChevalleyAlgebra::new(black_box(ct)).unwrap()));
    }
    g.finish();
}

fn linear_algebra(c: &mut Criterion) {
    let n = 40;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| ((i * 31 + j * 17) % 23) as i64 - 11).collect())
        .collect();
    let f = PrimeField::new(1_000_000_007);
    c.bench_function("rank_mod_p_40x40", |b| {
        b.iter(|| {
            let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            f.rank(black_box(&mut m))
        })
    });
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    c.bench_function("rank_bareiss_40x40", |b| b.iter(|| rank_bigint(black_box(&big))));
}

fn sphericity(c: &mut Criterion) {
    let policy = TrialPolicy::default();
    let mut g = c.benchmark_group("is_spherical_full_flag");
    g.sample_size(20);
    for (name, h) in [("sl4", "gl3"), ("so8", "so7"), ("sl4", "sl2+sl2+c")] {
        let (alg, span) = pair_span(name, h);
        g.bench_function(format!("({name}, {h})"), |b| {
            b.iter(|| is_spherical(&alg, &Theta::empty(), black_box(&span), &policy).unwrap())
        });
    }
    g.finish();
}

fn branching(c: &mut Criterion) {
    let a3 = RootSystem::new(&"A3".parse().unwrap()).unwrap();
    let lam = Weight::from_ints(&[2, 1, 2]);
    c.bench_function("freudenthal_A3_(2,1,2)", |b| b.iter(|| weight_multiplicities(&a3, black_box(&lam)).unwrap()));
    let b2 = RootSystem::new(&"B2".parse().unwrap()).unwrap();
    let (x, y) = (Weight::from_ints(&[3, 2]), Weight::from_ints(&[2, 3]));
    c.bench_function("tensor_B2_(3,2)x(2,3)", |b| b.iter(|| tensor_decompose(&b2, black_box(&x), &y).unwrap()));
    let cat = Catalog::builtin().unwrap();
    let emb = pair_embedding(&cat.lookup("sl4", "sp2").unwrap()).unwrap();
    c.bench_function("branch_sl4_sp2_(2,2,2)", |b| {
        b.iter(|| m_restriction(&a3, black_box(&Weight::from_ints(&[2, 2, 2])), &emb).unwrap())
    });
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("reproduce_table");
    g.sample_size(10);
    g.bench_function("table2_default", |b| {
        b.iter(|| {
            let cl = Classifier::builtin().unwrap();
            cl.reproduce_table(TableId::Tensor, Window::default())
        })
    });
    g.bench_function("table1_n4_m2", |b| {
        b.iter(|| {
            let cl = Classifier::builtin().unwrap();
            cl.reproduce_table(TableId::Restriction, Window { n_max: 4, m_max: 2 })
        })
    });
    g.finish();
}

criterion_group!(benches, root_systems, chevalley, linear_algebra, sphericity, branching, tables);
criterion_main!(benches);
