use criterion::{black_box, criterion_group, criterion_main, Criterion};
use omega_core::ncgraph::centralizer_family;
use omega_core::structure::is_minimal_non_abelian;
use omega_core::{constructors, NonCommutingGraph};

fn benches(c: &mut Criterion) {
    let g80 = constructors::minimal_nonabelian_pq(5, 1, 2).unwrap();
    let graph = NonCommutingGraph::build(&g80).unwrap();
    c.bench_function("max_clique/G80", |b| b.iter(|| black_box(&graph).max_clique().unwrap()));
    c.bench_function("max_clique_parallel/G80", |b| b.iter(|| black_box(&graph).max_clique_parallel().unwrap()));
    c.bench_function("build_graph/G80", |b| b.iter(|| NonCommutingGraph::build(black_box(&g80)).unwrap()));
    c.bench_function("is_minimal_non_abelian/G80", |b| b.iter(|| is_minimal_non_abelian(black_box(&g80))));
    c.bench_function("centralizer_family/G80", |b| b.iter(|| centralizer_family(black_box(&g80)).unwrap()));

    let s4 = omega_core::build_group("perm:(1 2 3 4),(1 2)", &Default::default()).unwrap();
    let s4_graph = NonCommutingGraph::build(&s4).unwrap();
    c.bench_function("max_clique/S4", |b| b.iter(|| black_box(&s4_graph).max_clique().unwrap()));
    c.bench_function("construct/mna:7,1,2", |b| b.iter(|| constructors::minimal_nonabelian_pq(7, 1, 2).unwrap()));
}

criterion_group!(omega_benches, benches);
criterion_main!(omega_benches);
