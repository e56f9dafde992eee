use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use pcdfs::{build_pc_lists, pc_dfs_forest, DfsOptions};
use pcdfs_bench::{ladder, FAMILIES};

fn bench_dfs(c: &mut Criterion) {
    for kind in FAMILIES {
        let mut group = c.benchmark_group(format!("pc_dfs/{kind}"));
        for g in ladder(kind, 10, 16) {
            group.throughput(Throughput::Elements(g.n() as u64 + g.m_tilde() as u64));
            group.bench_with_input(BenchmarkId::from_parameter(g.n()), &g, |b, g| {
                b.iter(|| pc_dfs_forest(black_box(g), DfsOptions::default()).unwrap())
            });
        }
        group.finish();
    }
}

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_pc_lists");
    for g in ladder(pcdfs::oracle::GeneratorKind::Random, 10, 16) {
        let mut pairs: Vec<(u32, u32)> = g.entry_pairs().map(|(v, w)| (v.get(), w.get())).collect();
        pairs.reverse();
        let flags = g.complement_flags().to_vec();
        group.throughput(Throughput::Elements(g.n() as u64 + pairs.len() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(g.n()), &g.n(), |b, &n| {
            b.iter(|| build_pc_lists(n, black_box(&pairs), &flags).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_dfs, bench_build);
criterion_main!(benches);
