use criterion::{black_box, criterion_group, criterion_main, Criterion};
use theta2::anodyne::{lift_check, replay_matrix, spine_anodyne, vert_equiv, HornFamily};
use theta2::boxprod::{boundary, horn_h};
use theta2::cellset::{from_simplicial, Chaotic};
use theta2::parse::parse_shape;
use theta2::{CellularOperator, ThetaShape};

fn operators(c: &mut Criterion) {
    let shapes = ThetaShape::all_up_to(3);
    c.bench_function("compose all operators between dim <= 2 shapes", |b| {
        let small = ThetaShape::all_up_to(2);
        let homs: Vec<(CellularOperator, CellularOperator)> = small
            .iter()
            .flat_map(|a| small.iter().map(move |m| (a, m)))
            .flat_map(|(a, m)| {
                let fs = CellularOperator::all(a, m);
                small.iter().flat_map(move |z| {
                    let gs = CellularOperator::all(m, z);
                    let fs = fs.clone();
                    gs.into_iter().flat_map(move |g| fs.clone().into_iter().map(move |f| (g.clone(), f)))
                })
            })
            .collect();
        b.iter(|| homs.iter().for_each(|(g, f)| drop(black_box(g.after(f).unwrap()))))
    });
    c.bench_function("reedy factor every operator into dim <= 3 shapes", |b| {
        let ops: Vec<CellularOperator> =
            shapes.iter().flat_map(|a| shapes.iter().flat_map(move |z| CellularOperator::all(a, z))).collect();
        b.iter(|| ops.iter().for_each(|f| drop(black_box(f.reedy_factor()))))
    });
}

fn subobjects(c: &mut Criterion) {
    let s = parse_shape("[2;1,2]").unwrap();
    c.bench_function("boundary of [2;1,2]", |b| b.iter(|| boundary(black_box(&s)).domain.len()));
    c.bench_function("inner horizontal horn of [2;1,2]", |b| b.iter(|| horn_h(black_box(&s), 1).unwrap().domain.len()));
}

fn replays(c: &mut Criterion) {
    let s = parse_shape("[2;1,1]").unwrap();
    c.bench_function("spine_anodyne [2;1,1]", |b| b.iter(|| spine_anodyne(black_box(&s)).unwrap().ok()));
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    slow.bench_function("replay matrix dim <= 3", |b| b.iter(|| replay_matrix(3).unwrap().len()));
    let s = parse_shape("[2;0,1]").unwrap();
    slow.bench_function("vert_equiv [2;0,1] k=1 D=4", |b| b.iter(|| vert_equiv(&s, 1, 4).unwrap().ok()));
    let j = from_simplicial(Chaotic::J, 4);
    slow.bench_function("inner horns into J through dim 3", |b| {
        b.iter(|| lift_check(&j, &HornFamily::inner(3), 4).unwrap().maps())
    });
    slow.finish();
}

criterion_group!(benches, operators, subobjects, replays);
criterion_main!(benches);
