mod common;

use hypertile::constructions::generate;
use hypertile::lattice::{
    index_vector, lattice_contains, robust_edge_vectors, robust_k_vectors, transferral_check, IndexVector, LatticeBasis,
    Threshold,
};
use hypertile::{classify, Barrier, Hypergraph3, Limits, VertexPartition};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn combine(gens: &[IndexVector], coeffs: &[i64], dim: usize) -> Vec<i64> {
    let mut out = vec![0i64; dim];
    for (g, &c) in gens.iter().zip(coeffs) {
        for (o, x) in out.iter_mut().zip(&g.0) {
            *o += c * x;
        }
    }
    out
}

/// Searches integer combinations with every coefficient in `[-w, w]`.
fn brute_member(gens: &[IndexVector], target: &[i64], w: i64) -> bool {
    fn rec(gens: &[IndexVector], target: &[i64], w: i64, coeffs: &mut Vec<i64>) -> bool {
        if coeffs.len() == gens.len() {
            return combine(gens, coeffs, target.len()) == target;
        }
        for c in -w..=w {
            coeffs.push(c);
            if rec(gens, target, w, coeffs) {
                return true;
            }
            coeffs.pop();
        }
        false
    }
    rec(gens, target, w, &mut Vec::new())
}

fn arb_basis() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<i64>)> {
    (1usize..=3).prop_flat_map(|dim| {
        (
            Just(dim),
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, dim), 0..=3),
            proptest::collection::vec(-6i64..=6, dim),
        )
    })
}

proptest! {
    #[test]
    fn membership_agrees_with_search((dim, gens, target) in arb_basis()) {
        let gens: Vec<IndexVector> = gens.into_iter().map(IndexVector).collect();
        let basis = LatticeBasis::new(dim, gens.clone()).unwrap();
        let found = brute_member(&gens, &target, 5);
        match lattice_contains(&basis, &IndexVector(target.clone())).unwrap() {
            Some(coeffs) => {
                prop_assert_eq!(coeffs.len(), gens.len());
                let small: Vec<i64> = coeffs.iter().map(|c| c.to_i64().unwrap()).collect();
                prop_assert_eq!(combine(&gens, &small, dim), target);
            }
            None => prop_assert!(!found),
        }
    }

    #[test]
    fn one_dimensional_membership_is_divisibility(gens in proptest::collection::vec(-30i64..=30, 1..4), t in -60i64..=60) {
        let g = gens.iter().fold(0u64, |acc, &x| common::gcd(acc, x.unsigned_abs()));
        let basis = LatticeBasis::new(1, gens.iter().map(|&x| IndexVector(vec![x])).collect()).unwrap();
        let member = lattice_contains(&basis, &IndexVector(vec![t])).unwrap().is_some();
        let expect = if g == 0 { t == 0 } else { t.unsigned_abs() % g == 0 };
        prop_assert_eq!(member, expect);
    }

    #[test]
    fn census_accounts_for_every_edge(seed in any::<u64>(), n in 6usize..11, cut in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_graph(n, 0.5, &mut rng);
        let half = n / 2;
        let parts = vec![(0..cut).collect(), (cut..half).collect(), (half..n).collect::<Vec<_>>()];
        let p = VertexPartition::new(n, parts).unwrap();
        let census = robust_edge_vectors(&h, &p, &Threshold::MinCount(1)).unwrap();
        let counted: u128 = census.counts.values().sum();
        prop_assert_eq!(counted + census.excluded, h.edge_count() as u128);
        for v in census.counts.keys() {
            prop_assert_eq!(v.0.iter().sum::<i64>(), 3);
        }

        let spec = classify(1, 1, 2).unwrap();
        let kc = robust_k_vectors(&h, &p, &spec, &Threshold::MinCount(1), &Limits::default()).unwrap();
        let expect = common::all_copies(&h, 1, 1, 2)
            .into_iter()
            .filter(|cls| cls.iter().flatten().all(|&v| v >= cut))
            .count() as u128;
        prop_assert_eq!(kc.counts.values().sum::<u128>(), expect);
        for (v, c) in &kc.counts {
            let direct = common::all_copies(&h, 1, 1, 2)
                .into_iter()
                .filter(|cls| cls.iter().flatten().all(|&x| x >= cut))
                .filter(|cls| {
                    let all: Vec<usize> = cls.iter().flatten().copied().collect();
                    &index_vector(&p, &all).unwrap() == v
                })
                .count() as u128;
            prop_assert_eq!(*c, direct);
        }
    }
}

#[test]
fn transferral_on_constructions() {
    let limits = Limits::default();
    for (a, b, c) in [(1, 1, 1), (1, 1, 2)] {
        let spec = classify(a, b, c).unwrap();
        let k = spec.k_usize();
        let n = 4 * k;
        let complete = Hypergraph3::complete(n);
        let p = VertexPartition::without_exceptional(n, vec![(0..n / 2).collect(), (n / 2..n).collect()]).unwrap();
        let rep = transferral_check(&complete, &p, &spec, &Threshold::MinCount(1), &limits).unwrap();
        assert!(rep.pass, "complete graph on {n} vertices for {spec}");

        // edges inside one part only: every copy lies in a single part
        let inst = generate(Barrier::DivI, &spec, n, &limits).unwrap();
        let rep = transferral_check(&inst.graph, &inst.parts, &spec, &Threshold::MinCount(1), &limits).unwrap();
        assert!(!rep.pass, "{spec}");
        assert_eq!(rep.missing, vec![(1, 2)]);
        let basis = rep.basis;
        let t = IndexVector::unit(2, 1).sub(&IndexVector::unit(2, 2));
        assert!(lattice_contains(&basis, &t).unwrap().is_none());
    }
}

#[test]
fn witness_coefficients_can_be_large() {
    // the basis is unimodular and (1,-1) = -5*(7,5) + 12*(3,2)
    let basis = LatticeBasis::new(2, vec![IndexVector(vec![7, 5]), IndexVector(vec![3, 2])]).unwrap();
    let target = IndexVector(vec![1, -1]);
    let coeffs = lattice_contains(&basis, &target).unwrap().unwrap();
    let v: Vec<BigInt> = (0..2)
        .map(|i| &coeffs[0] * BigInt::from(basis.generators[0].0[i]) + &coeffs[1] * BigInt::from(basis.generators[1].0[i]))
        .collect();
    assert_eq!(v, vec![BigInt::from(1), BigInt::from(-1)]);
    assert_eq!(coeffs, vec![BigInt::from(-5), BigInt::from(12)]);
}
