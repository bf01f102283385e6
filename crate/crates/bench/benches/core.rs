use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use magical::classify::{enumerate_magical, DEFAULT_CAP};
use magical::matlie::{
    chevalley_algebra, classical_algebra, is_magical_oracle, triple_from_diagram, triple_from_partition, Classical,
    DIAGRAM_RETRIES,
};
use magical::rootsys::{build_root_system, graded_dimensions};
use magical::sl2data::{all_records, check_record};
use magical::{AlgebraType, DynkinLabels, Family, Partition, RealFormId};
use std::hint::black_box;

fn root_systems(c: &mut Criterion) {
    let mut g = c.benchmark_group("root_system");
    for ty in [AlgebraType::exceptional(Family::F4), AlgebraType::exceptional(Family::E8), AlgebraType::d(10)] {
        g.bench_with_input(BenchmarkId::from_parameter(ty), &ty, |b, &ty| b.iter(|| build_root_system(black_box(ty))));
    }
    g.finish();

    let e8 = build_root_system(AlgebraType::exceptional(Family::E8)).unwrap();
    let labels = DynkinLabels::new(vec![0, 0, 0, 0, 0, 0, 2, 2]).unwrap();
    c.bench_function("graded_dimensions/E8", |b| b.iter(|| graded_dimensions(&e8, black_box(&labels))));
}

fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_magical");
    for rf in [RealFormId::So(9, 9), RealFormId::Su(9, 9), RealFormId::SpR(18), RealFormId::SoStar(18)] {
        g.bench_with_input(BenchmarkId::from_parameter(rf), &rf, |b, &rf| {
            b.iter(|| enumerate_magical(black_box(rf), DEFAULT_CAP))
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    let so6 = classical_algebra(Classical::So, 6).unwrap();
    let t = triple_from_partition(&so6, &Partition::from_rows(&[3, 3]).unwrap(), None).unwrap();
    g.bench_function("so6 3,3", |b| b.iter(|| is_magical_oracle(&so6, black_box(&t))));
    let f4 = chevalley_algebra(AlgebraType::exceptional(Family::F4)).unwrap();
    let labels = DynkinLabels::new(vec![0, 0, 2, 2]).unwrap();
    g.bench_function("F4 triple", |b| b.iter(|| triple_from_diagram(&f4, black_box(&labels), 0, DIAGRAM_RETRIES)));
    let t = triple_from_diagram(&f4, &labels, 0, DIAGRAM_RETRIES).unwrap();
    g.bench_function("F4 sweep", |b| b.iter(|| is_magical_oracle(&f4, black_box(&t))));
    g.finish();
}

fn records(c: &mut Criterion) {
    c.bench_function("all_records", |b| b.iter(all_records));
    let recs = all_records().unwrap();
    c.bench_function("check_record/all", |b| {
        b.iter(|| recs.iter().map(|r| check_record(black_box(r)).unwrap().passed()).filter(|&p| p).count())
    });
}

criterion_group!(benches, root_systems, classification, oracle, records);
criterion_main!(benches);
