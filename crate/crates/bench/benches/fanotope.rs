use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fanotope_core::enumerate::{enumerate_3dm1, SearchConfig};
use fanotope_core::families::{construct, FamilyId};
use fanotope_core::hull::{facets_by_pivoting, facets_by_subsets};
use fanotope_core::linalg::IntMatrix;
use fanotope_core::are_isomorphic;

fn fixture(d: usize) -> fanotope_core::Polytope {
    construct(if d % 2 == 0 { FamilyId::P1 } else { FamilyId::P2 }, d).unwrap()
}

fn hull(c: &mut Criterion) {
    let mut g = c.benchmark_group("facets");
    for d in [3, 4, 5] {
        let p = fixture(d);
        g.bench_with_input(BenchmarkId::new("pivoting", d), &p, |b, p| {
            b.iter(|| facets_by_pivoting(black_box(p.vertices()), d).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("subsets", d), &p, |b, p| {
            b.iter(|| facets_by_subsets(black_box(p.vertices()), d).unwrap())
        });
    }
    g.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut g = c.benchmark_group("isomorphism");
    for d in [3, 5, 7] {
        let p2 = construct(FamilyId::P2, d).unwrap();
        let p3 = construct(FamilyId::P3, d).unwrap();
        // shear e1 += e2 keeps everything small
        let mut rows = IntMatrix::identity(d).into_rows();
        rows[0][1] = 1;
        let q = p2.transformed(&IntMatrix::new(rows).unwrap()).unwrap();
        g.bench_with_input(BenchmarkId::new("image", d), &(&p2, &q), |b, (p, q)| {
            b.iter(|| are_isomorphic(p, q).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("distinct", d), &(&p2, &p3), |b, (p, q)| {
            b.iter(|| are_isomorphic(p, q).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for d in [3, 4] {
        let mut cfg = SearchConfig::new(d);
        cfg.jobs = 1;
        g.bench_with_input(BenchmarkId::from_parameter(d), &cfg, |b, cfg| b.iter(|| enumerate_3dm1(cfg).unwrap()));
    }
    g.finish();
}

fn lattice_points(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice_points");
    for d in [3, 4, 5] {
        let p = fixture(d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &p, |b, p| b.iter(|| p.lattice_points()));
    }
    g.finish();
}

criterion_group!(benches, hull, isomorphism, enumeration, lattice_points);
criterion_main!(benches);
