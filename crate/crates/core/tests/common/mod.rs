//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's search code; only the plain graph container is used.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hypertile::Hypergraph3;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], size - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn complete_tripartite_in(h: &Hypergraph3, x: &[usize], y: &[usize], z: &[usize]) -> bool {
    x.iter()
        .all(|&p| y.iter().all(|&q| z.iter().all(|&r| h.has_edge(p, q, r))))
}

/// Whether `set` (of size a+b+c) spans a copy of `K_{a,b,c}`.
pub fn spans_copy(h: &Hypergraph3, set: &[usize], a: usize, b: usize, c: usize) -> bool {
    assert_eq!(set.len(), a + b + c);
    for x in subsets(set, a) {
        let rest: Vec<usize> = set.iter().copied().filter(|v| !x.contains(v)).collect();
        for y in subsets(&rest, b) {
            let z: Vec<usize> = rest.iter().copied().filter(|v| !y.contains(v)).collect();
            if complete_tripartite_in(h, &x, &y, &z) {
                return true;
            }
        }
    }
    false
}

/// All labeled copies `(X, Y, Z)`, with classes of equal size put in sorted
/// order so each subgraph appears once.
pub fn all_copies(h: &Hypergraph3, a: usize, b: usize, c: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let verts: Vec<usize> = (0..h.n()).collect();
    let mut out = BTreeSet::new();
    for set in subsets(&verts, a + b + c) {
        for x in subsets(&set, a) {
            let rest: Vec<usize> = set.iter().copied().filter(|v| !x.contains(v)).collect();
            for y in subsets(&rest, b) {
                let z: Vec<usize> = rest.iter().copied().filter(|v| !y.contains(v)).collect();
                if complete_tripartite_in(h, &x, &y, &z) {
                    let mut cls = vec![x.clone(), y, z];
                    if a == b && cls[0] > cls[1] {
                        cls.swap(0, 1);
                    }
                    if b == c && cls[1] > cls[2] {
                        cls.swap(1, 2);
                    }
                    if a == b && cls[0] > cls[1] {
                        cls.swap(0, 1);
                    }
                    out.insert(cls);
                }
            }
        }
    }
    out
}

/// Vertex sets (as bitmasks) spanning at least one copy.
pub fn copy_supports(h: &Hypergraph3, a: usize, b: usize, c: usize) -> Vec<u32> {
    let verts: Vec<usize> = (0..h.n()).collect();
    subsets(&verts, a + b + c)
        .into_iter()
        .filter(|s| spans_copy(h, s, a, b, c))
        .map(|s| s.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect()
}

/// Maximum number of disjoint copies, by exhaustive search over subsets of
/// vertices. Only for `n <= 20`.
pub fn max_packing(n: usize, supports: &[u32]) -> usize {
    fn go(avail: u32, supports: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if avail == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&avail) {
            return v;
        }
        let low = avail.trailing_zeros();
        let mut best = go(avail & !(1 << low), supports, memo);
        for &s in supports {
            if s & (1 << low) != 0 && s & avail == s {
                best = best.max(1 + go(avail & !s, supports, memo));
            }
        }
        memo.insert(avail, best);
        best
    }
    assert!(n <= 20);
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    go(full, supports, &mut HashMap::new())
}

/// Minimum over `v` of the number of edges `{v, x, y}`, counted by testing
/// every pair.
pub fn brute_min_degree(h: &Hypergraph3) -> u128 {
    let n = h.n();
    (0..n)
        .map(|v| {
            let mut d = 0u128;
            for x in 0..n {
                for y in x + 1..n {
                    if x != v && y != v && h.has_edge(v, x, y) {
                        d += 1;
                    }
                }
            }
            d
        })
        .min()
        .unwrap_or(0)
}

pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Hypergraph3 {
    let mut h = Hypergraph3::new(n);
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if rng.gen::<f64>() < p {
                    h.add_edge(x, y, z).unwrap();
                }
            }
        }
    }
    h
}
