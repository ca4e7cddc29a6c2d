use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pairflip::catalecticant::{det_multiplicity, hankel_rank, splitting_type};
use pairflip::divisor::certify_log_flip;
use pairflip::stability::classify_pair;
use pairflip::tower::tower;
use pairflip::{PairInvariants, RationalSampler, Status};
use pairflip_bench::{generic_fixture, secant_fixture, sigma};

fn hankel(c: &mut Criterion) {
    let mut group = c.benchmark_group("hankel_rank");
    for d in [8, 12, 16] {
        let p = secant_fixture(d, 2, 3);
        group.bench_with_input(BenchmarkId::from_parameter(d), &p, |b, p| {
            b.iter(|| hankel_rank(d, d / 2, black_box(p)))
        });
    }
    group.finish();

    let p = generic_fixture(12, 5);
    c.bench_function("splitting_type/12", |b| {
        b.iter(|| splitting_type(12, black_box(&p)))
    });
}

fn multiplicity(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_multiplicity");
    for d in [8, 10] {
        let p = secant_fixture(d, 1, 9);
        group.bench_with_input(BenchmarkId::from_parameter(d), &p, |b, p| {
            b.iter(|| {
                let mut s = RationalSampler::with_seed(1);
                det_multiplicity(d, 3, &[1, 2, 3], black_box(p), 3, &mut s)
            })
        });
    }
    group.finish();
}

fn tower_and_flips(c: &mut Criterion) {
    c.bench_function("tower/g5_d40", |b| {
        b.iter(|| tower(black_box(5), black_box(40)))
    });
    c.bench_function("certify_log_flip/g5_d40", |b| {
        b.iter(|| {
            for k in 2..20 {
                let _ = certify_log_flip(5, 40, k, &sigma(1, 1));
            }
        })
    });
    let p = PairInvariants::new(12, 3, 7).unwrap();
    c.bench_function("classify_pair/grid_d12", |b| {
        b.iter(|| {
            (0..=48)
                .filter(|&j| classify_pair(&p, &sigma(j, 4)).unwrap().status == Status::Stable)
                .count()
        })
    });
}

criterion_group!(benches, hankel, multiplicity, tower_and_flips);
criterion_main!(benches);
