use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ywall_core::{adjoint_graph, path_component, phi_inv, wall_component, Column, WallContext};

fn bench_adjoint_graph(c: &mut Criterion) {
    c.bench_function("adjoint graph, level 4", |b| {
        b.iter(|| adjoint_graph(black_box(4)).unwrap())
    });
}

fn bench_wall_component(c: &mut Criterion) {
    let ctx = WallContext::finite(4, 1).unwrap();
    c.bench_function("reduced wall component, depth 5", |b| {
        b.iter(|| wall_component(black_box(ctx), 5).unwrap())
    });
    c.bench_function("limit wall component, depth 5", |b| {
        b.iter(|| wall_component(black_box(WallContext::Infinite), 5).unwrap())
    });
}

fn bench_path_component(c: &mut Criterion) {
    let ctx = WallContext::finite(4, 1).unwrap();
    c.bench_function("path component, depth 5", |b| {
        b.iter(|| path_component(black_box(ctx), 5).unwrap())
    });
}

fn bench_column_bijection(c: &mut Criterion) {
    let ctx = WallContext::finite(4, 1).unwrap();
    let columns: Vec<Column> = (0..=10)
        .flat_map(|s| {
            (0..=8)
                .flat_map(move |sb| (0..=8).filter_map(move |tb| Column::new(ctx, s, sb, tb).ok()))
        })
        .collect();
    c.bench_function("psi / phi_inv round trip", |b| {
        b.iter(|| {
            for col in &columns {
                let g = col.psi().unwrap();
                black_box(phi_inv(col.ctx, &g).unwrap());
            }
        })
    });
}

criterion_group!(
    benches,
    bench_adjoint_graph,
    bench_wall_component,
    bench_path_component,
    bench_column_bijection
);
criterion_main!(benches);
