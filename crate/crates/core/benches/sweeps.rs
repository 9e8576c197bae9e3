use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use nilcone::checks::{characters_consistent, euler_matches_bott, vanishing_rules};
use nilcone::lv::lv_audit;
use nilcone::tilting::{irreducibility_audit, subregular_lambdas, zero_orbit_lambdas};
use nilcone::{Exec, Level, LvMode};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn box_sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("box_sweeps");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new("euler_vs_bott_r12", name), &exec, |b, &e| {
            b.iter(|| euler_matches_bott(black_box(12), e))
        });
        g.bench_with_input(BenchmarkId::new("vanishing_r30", name), &exec, |b, &e| {
            b.iter(|| vanishing_rules(black_box(30), e))
        });
        g.bench_with_input(BenchmarkId::new("characters_12", name), &exec, |b, &e| {
            b.iter(|| characters_consistent(black_box(12), e))
        });
    }
    g.finish();
}

fn audits(c: &mut Criterion) {
    let mut g = c.benchmark_group("audits");
    g.sample_size(10);
    let five = Level::new(5).unwrap();
    let mut lambdas = subregular_lambdas(12);
    lambdas.extend(zero_orbit_lambdas(8));
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new("lv_audit_r30", name), &exec, |b, &e| {
            b.iter(|| lv_audit(black_box(30), LvMode::Verbatim, e))
        });
        g.bench_with_input(BenchmarkId::new("irreducibility", name), &exec, |b, &e| {
            b.iter(|| irreducibility_audit(black_box(&lambdas), five, 40, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, box_sweeps, audits);
criterion_main!(benches);
