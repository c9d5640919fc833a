use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use viscolor::coloring::four_color_with;
use viscolor::gadgets::{embed_in_hex_grid, gen_hard4h, gen_hard5, verify_hard4h_with, verify_hard5_with, InputGraph};
use viscolor::geom::random_simple_polygon;
use viscolor::visibility::visibility_graph_with;
use viscolor::Exec;

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn visibility(c: &mut Criterion) {
    let mut group = c.benchmark_group("visibility_graph");
    for n in [40, 120] {
        let poly = random_simple_polygon(n, 1).unwrap();
        for (name, exec) in EXECS {
            group.bench_with_input(BenchmarkId::new(name, n), &poly, |b, p| {
                b.iter(|| visibility_graph_with(p, exec))
            });
        }
    }
    group.finish();
}

fn colouring(c: &mut Criterion) {
    let mut group = c.benchmark_group("four_color");
    let g = visibility_graph_with(&random_simple_polygon(120, 3).unwrap(), Exec::Sequential);
    for (name, exec) in EXECS {
        group.bench_function(name, |b| b.iter(|| four_color_with(&g, exec).unwrap()));
    }
    group.finish();
}

fn gadgets(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_gadget");
    group.sample_size(10);
    let k4 = InputGraph::complete(4);
    let h5 = gen_hard5(&k4).unwrap();
    let k3 = InputGraph::complete(3);
    let h4 = gen_hard4h(&k3, &embed_in_hex_grid(&k3).unwrap()).unwrap();
    for (name, exec) in EXECS {
        group.bench_function(BenchmarkId::new("hard5_k4", name), |b| {
            b.iter(|| verify_hard5_with(&h5, exec))
        });
        group.bench_function(BenchmarkId::new("hard4h_k3", name), |b| {
            b.iter(|| verify_hard4h_with(&h4, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, visibility, colouring, gadgets);
criterion_main!(benches);
