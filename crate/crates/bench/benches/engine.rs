use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use jonesmod::knot::{bracket_contracted, bracket_state_sum, jones};
use jonesmod::knotdb::KnotDb;
use jonesmod::modp::{canonical_residue, enumerate_admissible};
use jonesmod::{parse_poly, Prime};

fn bracket(c: &mut Criterion) {
    let db = KnotDb::bundled();
    let pd = db.get("12n237").expect("in table").pd.clone();
    let mut g = c.benchmark_group("bracket_12n237");
    g.bench_function("state_sum", |b| b.iter(|| bracket_state_sum(black_box(&pd))));
    g.bench_function("contracted", |b| b.iter(|| bracket_contracted(black_box(&pd))));
    g.finish();
    c.bench_function("jones_full_table", |b| {
        b.iter(|| db.records().iter().map(|r| jones(&r.pd).expect("knot")).collect::<Vec<_>>())
    });
}

fn census(c: &mut Criterion) {
    let two = Prime::new(2).unwrap();
    c.bench_function("enumerate_p2_0_15", |b| {
        b.iter(|| enumerate_admissible(two, 0, black_box(15)).unwrap())
    });
    let g = parse_poly("t^40-3t^17+5t^3-t^-9+2", None).unwrap().reduce_mod_p(7).unwrap();
    c.bench_function("canonical_residue_p7", |b| b.iter(|| canonical_residue(black_box(&g)).unwrap()));
}

criterion_group!(benches, bracket, census);
criterion_main!(benches);
