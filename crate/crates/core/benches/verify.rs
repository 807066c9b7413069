//! Sequential vs parallel timings of the heavy verification loops.
//!
//! With the `parallel` feature each case runs twice: inside a one-thread
//! rayon pool (the sequential baseline) and on a pool with one worker per
//! core. Without the feature only the sequential path exists and each case
//! runs once.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lm_atlas_core::affine_weyl::BoundedWindow;
use lm_atlas_core::{AdmissibleSet, AffineWeylGroup, RootDatum, Wonderful};

fn affine(ty: &str) -> AffineWeylGroup {
    AffineWeylGroup::from_datum(&RootDatum::adjoint(ty).unwrap()).unwrap()
}

#[cfg(feature = "parallel")]
fn modes() -> Vec<(String, rayon::ThreadPool)> {
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    let pool = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
    vec![("sequential".into(), pool(1)), (format!("parallel-{cores}"), pool(cores))]
}

/// Runs `f` once per mode under the mode's pool.
fn each_mode(c: &mut Criterion, group: &str, case: &str, f: impl Fn() + Sync) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    #[cfg(feature = "parallel")]
    for (name, pool) in modes() {
        g.bench_function(BenchmarkId::new(name, case), |b| b.iter(|| pool.install(&f)));
    }
    #[cfg(not(feature = "parallel"))]
    g.bench_function(BenchmarkId::new("sequential", case), |b| b.iter(&f));
    g.finish();
}

fn helam_iso(c: &mut Criterion) {
    for (ty, node) in [("A3", 2), ("D4", 1)] {
        let w = Wonderful::from_affine(affine(ty)).unwrap();
        let mu = w.affine().datum().parse_coweight(&format!("minuscule:{node}")).unwrap();
        each_mode(c, "helam_iso", &format!("{ty}-omega{node}"), || {
            black_box(w.verify_helam_poset_iso(&mu).unwrap());
        });
    }
}

fn adm(c: &mut Criterion) {
    for (ty, mu) in [("A4", "minuscule:2"), ("C3", "0,1,0")] {
        let g = affine(ty);
        let mu = g.datum().parse_coweight(mu).unwrap();
        each_mode(c, "adm_compute", &format!("{ty}-{mu}"), || {
            black_box(AdmissibleSet::compute(&g, &mu).unwrap());
        });
    }
}

fn slices(c: &mut Criterion) {
    let w = Wonderful::from_affine(affine("B3")).unwrap();
    each_mode(c, "slice_formulas", "B3", || {
        black_box(w.verify_slice_formulas(None, None));
    });
}

fn window(c: &mut Criterion) {
    let g = affine("A3");
    each_mode(c, "window_build", "A3-L6", || {
        black_box(BoundedWindow::build(&g, 6, 200_000).unwrap());
    });
}

criterion_group!(benches, helam_iso, adm, slices, window);
criterion_main!(benches);
