mod common;

use hypertile::constructions::{check_certificate, generate, generate_general, kind_coefficient, predicted_degree};
use hypertile::tiler::has_perfect_tiling;
use hypertile::{classify, Barrier, KSpec, Limits};

const SPECS: [(u64, u64, u64); 7] = [(1, 1, 1), (1, 1, 2), (2, 2, 2), (1, 1, 4), (1, 4, 7), (1, 3, 5), (2, 3, 7)];

fn feasible(kind: Barrier, spec: &KSpec, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    range.filter(|&n| predicted_degree(kind, spec, n).is_ok()).collect()
}

#[test]
fn min_degree_matches_brute_force() {
    let limits = Limits::default();
    let mut checked = 0;
    for (a, b, c) in SPECS {
        let spec = classify(a, b, c).unwrap();
        for kind in Barrier::ALL {
            for n in feasible(kind, &spec, 3..=30).into_iter().take(2) {
                let inst = generate(kind, &spec, n, &limits).unwrap();
                assert_eq!(
                    common::brute_min_degree(&inst.graph),
                    inst.predicted_min_degree,
                    "{kind:?} {spec} n={n}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "only {checked} instances were feasible");
}

#[test]
fn small_constructions_have_no_perfect_tiling() {
    let limits = Limits::default();
    for (a, b, c) in [(1, 1, 1), (1, 1, 2), (1, 2, 2)] {
        let spec = classify(a, b, c).unwrap();
        let k = spec.k_usize();
        for kind in Barrier::ALL {
            for n in feasible(kind, &spec, 3..=16).into_iter().filter(|n| n % k == 0).take(1) {
                let inst = generate(kind, &spec, n, &limits).unwrap();
                let supports = common::copy_supports(&inst.graph, a as usize, b as usize, c as usize);
                let packed = common::max_packing(n, &supports);
                assert!(packed * k < n, "{kind:?} {spec} n={n} packs {packed}");
                assert!(has_perfect_tiling(&inst.graph, &spec, &limits).unwrap().is_none());
                let cert = check_certificate(&inst, &limits).unwrap();
                assert!(cert.holds, "{kind:?} {spec} n={n}: {}", cert.detail);
                assert!(cert.counterexample.is_none());
            }
        }
    }
}

#[test]
fn degree_ratio_approaches_coefficient() {
    let limits = Limits::default();
    for (a, b, c) in [(1, 1, 1), (1, 2, 3), (2, 3, 7)] {
        let spec = classify(a, b, c).unwrap();
        let k = spec.k_usize();
        for kind in Barrier::ALL {
            let target = kind_coefficient(kind, &spec).to_f64();
            let mut errs = Vec::new();
            for n in [60 * k, 120 * k] {
                let Ok(deg) = predicted_degree(kind, &spec, n) else {
                    continue;
                };
                let ratio = deg as f64 / ((n * (n - 1) / 2) as f64);
                errs.push((ratio - target).abs());
            }
            if let [e60, e120] = errs[..] {
                assert!(e120 < 0.05, "{kind:?} {spec}: error {e120}");
                assert!(e120 <= e60 + 1e-3, "{kind:?} {spec}: {e60} -> {e120}");
            }
        }
        // the construction itself agrees with the formula at a moderate size
        let inst = generate(Barrier::SpaceI, &spec, 4 * k, &limits).unwrap();
        assert_eq!(inst.graph.min_vertex_degree() as u128, inst.predicted_min_degree);
    }
}

#[test]
fn four_uniform_space_barrier() {
    let g = generate_general(4, 3, &[1, 1, 1, 1], 8, &Limits::default()).unwrap();
    assert!(g.edges_respect_rule());
    assert!(g.arithmetic_holds());
    assert_eq!(g.min_degree(2).unwrap(), 0);
    assert!(g.min_degree(1).unwrap() > 0);
    assert!(generate_general(4, 4, &[1, 1, 1, 1], 8, &Limits::default()).is_err());
}

#[test]
fn size_guard_is_reported() {
    let spec = classify(1, 1, 1).unwrap();
    let limits = Limits {
        max_subsets: 10,
        ..Limits::default()
    };
    let err = generate(Barrier::SpaceI, &spec, 30, &limits).unwrap_err();
    assert!(err.is_guard());
}
