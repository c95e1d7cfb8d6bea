mod common;

use hypertile::fractional::{
    convert_fractional, format_fht, gadget_l1, gadget_l2, parse_fht, standard_weighting, verify, FractionalHomTiling,
    L1Case, L2Case,
};
use hypertile::rational::q;
use hypertile::tiler::GreedyStop;
use hypertile::{classify, Hypergraph3, KSpec, Rational, VertexPartition};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent check of the three conditions, straight from the definition.
fn oracle_valid(ft: &FractionalHomTiling, spec: &KSpec) -> bool {
    let h = ft.host();
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    let mut totals = vec![zero; h.n()];
    for (&(v, e), &w) in ft.weights() {
        if w < zero || w > one || !h.edges()[e].contains(&v) {
            return false;
        }
        totals[v] += w;
    }
    if totals.iter().any(|t| *t > one) {
        return false;
    }
    let (a, b, c) = (Rational::from_integer(spec.a as i128), Rational::from_integer(spec.b as i128), Rational::from_integer(spec.c as i128));
    h.edges().iter().enumerate().all(|(id, e)| {
        let w: Vec<Rational> = e.iter().map(|&v| ft.get(v, id)).collect();
        (0..3).any(|i| {
            (0..3).filter(|&j| j != i).any(|j| {
                let l = 3 - i - j;
                let (x, y, z) = (w[i], w[j], w[l]);
                x <= y && y <= z && x / a >= y / b && y / b >= z / c
            })
        })
    })
}

fn specs() -> Vec<KSpec> {
    let mut out = Vec::new();
    for a in 1..=3 {
        for b in a..=4 {
            for c in b..=5 {
                out.push(classify(a, b, c).unwrap());
            }
        }
    }
    out
}

#[test]
fn gadgets_agree_with_oracle() {
    let mut seen = 0;
    for spec in specs() {
        for case in L1Case::ALL {
            if let Ok(g) = gadget_l1(&spec, case) {
                assert!(oracle_valid(&g.tiling, &spec), "{spec} {}", g.case_label);
                assert_eq!(g.family_triples, g.family_threshold);
                assert_eq!(verify(&g.tiling, &spec).unwrap().weight, g.weight);
                seen += 1;
            }
        }
        for case in L2Case::ALL {
            if let Ok(g) = gadget_l2(&spec, case) {
                assert!(oracle_valid(&g.tiling, &spec), "{spec} {}", g.case_label);
                assert_eq!(g.family_triples, g.family_threshold);
                seen += 1;
            }
        }
    }
    assert!(seen > 50);
}

proptest! {
    #[test]
    fn relabeling_preserves_validity(si in 0usize..30, seed in any::<u64>()) {
        let all = specs();
        let spec = all[si % all.len()];
        let ft = standard_weighting(&spec);
        let mut perm: Vec<usize> = (0..ft.host().n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let moved = ft.relabel(&perm).unwrap();
        let before = verify(&ft, &spec).unwrap();
        let after = verify(&moved, &spec).unwrap();
        prop_assert!(before.valid && after.valid);
        prop_assert_eq!(before.weight, after.weight);
        prop_assert_eq!(before.hmin, after.hmin);
        prop_assert_eq!(moved.host(), &ft.host().relabel(&perm).unwrap());
    }

    #[test]
    fn perturbations_match_oracle(si in 0usize..30, pick in any::<prop::sample::Index>(), num in -3i128..=3) {
        let all = specs();
        let spec = all[si % all.len()];
        let mut ft = standard_weighting(&spec);
        let keys: Vec<(usize, usize)> = ft.weights().keys().copied().collect();
        let (v, e) = keys[pick.index(keys.len())];
        ft.add(v, e, q(num, 64)).unwrap();
        let ver = verify(&ft, &spec).unwrap();
        prop_assert_eq!(ver.valid, oracle_valid(&ft, &spec));
        if num > 0 {
            // every vertex is saturated, so any increase breaks condition (2)
            prop_assert!(!ver.valid);
        }
    }

    #[test]
    fn fht_round_trip(si in 0usize..30) {
        let all = specs();
        let ft = standard_weighting(&all[si % all.len()]);
        let back = parse_fht(&format_fht(&ft), ft.host().clone()).unwrap();
        prop_assert_eq!(back.weights(), ft.weights());
    }
}

fn blocks(t: usize, ell: usize) -> (VertexPartition, Vec<Vec<usize>>) {
    let clusters: Vec<Vec<usize>> = (0..t).map(|i| (i * ell..(i + 1) * ell).collect()).collect();
    (VertexPartition::without_exceptional(t * ell, clusters.clone()).unwrap(), clusters)
}

#[test]
fn single_edge_conversion() {
    let spec = classify(1, 1, 2).unwrap();
    let ell = 12;
    let (p, cl) = blocks(3, ell);
    let h = Hypergraph3::complete_tripartite(3 * ell, [&cl[0], &cl[1], &cl[2]]).unwrap();
    let r = Hypergraph3::from_edges(3, [[0, 1, 2]]).unwrap();
    let mut ft = FractionalHomTiling::new(r.clone());
    ft.set_edge([0, 1, 2], [q(1, 2), q(1, 2), q(1, 1)]).unwrap();
    let conv = convert_fractional(&h, &p, &r, &ft, &spec, &q(1, 12)).unwrap();
    assert!(conv.tiling.is_valid_in(&h));
    assert_eq!(conv.edges[0].sizes, [6, 6, 12]);
    // ε' = bc²ε = 1/3, so the greedy stops once the smallest residual set
    // drops below 4: (6,6,12) -> (3,3,6)
    assert_eq!(conv.edges[0].stop, Some(GreedyStop::BelowThreshold));
    assert_eq!(conv.tiling.covered_count(), 12);
    assert!(Rational::from_integer(12) >= conv.bound);
}

#[test]
fn perfect_matching_conversion() {
    let spec = classify(1, 1, 1).unwrap();
    let ell = 8;
    let (p, cl) = blocks(9, ell);
    let mut h = Hypergraph3::new(9 * ell);
    let r = Hypergraph3::from_edges(9, [[0, 1, 2], [3, 4, 5], [6, 7, 8]]).unwrap();
    for e in r.edges() {
        for &x in &cl[e[0]] {
            for &y in &cl[e[1]] {
                for &z in &cl[e[2]] {
                    h.add_edge(x, y, z).unwrap();
                }
            }
        }
    }
    let mut ft = FractionalHomTiling::new(r.clone());
    for e in r.edges().to_vec() {
        ft.set_edge(e, [q(1, 1); 3]).unwrap();
    }
    let eps = q(1, 16);
    let conv = convert_fractional(&h, &p, &r, &ft, &spec, &eps).unwrap();
    assert!(conv.tiling.is_valid_in(&h));
    let eps2 = eps; // b*c^2 = 1
    for ec in &conv.edges {
        let leftover = 3 * ell - ec.covered;
        assert!(Rational::from_integer(leftover as i128) <= eps2 * Rational::from_integer(9 * ell as i128));
    }
    assert!(Rational::from_integer(conv.tiling.covered_count() as i128) >= conv.bound);
}

#[test]
fn zero_weighting_gives_empty_tiling() {
    let spec = classify(1, 1, 1).unwrap();
    let (p, cl) = blocks(3, 4);
    let h = Hypergraph3::complete_tripartite(12, [&cl[0], &cl[1], &cl[2]]).unwrap();
    let r = Hypergraph3::from_edges(3, [[0, 1, 2]]).unwrap();
    let ft = FractionalHomTiling::new(r.clone());
    let conv = convert_fractional(&h, &p, &r, &ft, &spec, &q(1, 10)).unwrap();
    assert!(conv.tiling.is_empty());
    assert_eq!(conv.bound, Rational::from_integer(0));
}

#[test]
fn invalid_weighting_is_rejected() {
    let spec = classify(1, 1, 2).unwrap();
    let (p, cl) = blocks(3, 4);
    let h = Hypergraph3::complete_tripartite(12, [&cl[0], &cl[1], &cl[2]]).unwrap();
    let r = Hypergraph3::from_edges(3, [[0, 1, 2]]).unwrap();
    let mut ft = FractionalHomTiling::new(r.clone());
    ft.set_edge([0, 1, 2], [q(1, 1), q(1, 4), q(1, 4)]).unwrap();
    assert!(!verify(&ft, &spec).unwrap().valid);
    assert!(convert_fractional(&h, &p, &r, &ft, &spec, &q(1, 10)).is_err());
}
