//! Absorbing tools at desk scale: the weak/strong edge reduction,
//! reachability witness counting, absorbing sets and a seeded absorbing
//! family builder.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Vertex, VertexPartition};
use crate::kspec::KSpec;
use crate::limits::Limits;
use crate::rational::{self, q, Rational};
use crate::tiler::{bit, bits, copies_through, full_mask, has_perfect_tiling, mask_of};

/// Result of deleting weak edges and the vertices crowded by them.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// `H_ε` on the original labels; removed vertices are isolated.
    pub graph: Hypergraph3,
    /// `V_ε`, sorted.
    pub removed: Vec<Vertex>,
    pub weak_edges: usize,
}

impl Reduction {
    pub fn kept(&self) -> Vec<Vertex> {
        let gone: HashSet<_> = self.removed.iter().copied().collect();
        (0..self.graph.n()).filter(|v| !gone.contains(v)).collect()
    }

    /// Checks `|V_ε| <= 3εn`, `deg_{H_ε}(v) >= deg_H(v) − 7ε·C(n,2)` for kept
    /// `v`, and `deg_H(S) > ε²n` for every pair `S` in the shadow of `H_ε`.
    pub fn guarantees_hold(&self, h: &Hypergraph3, eps: &Rational) -> [bool; 3] {
        let n = h.n() as i128;
        let nn = rational::int(n);
        let removed_ok = rational::int(self.removed.len() as i128) <= rational::int(3) * *eps * nn;
        let pairs = rational::int(n * (n - 1) / 2);
        let degree_ok = self.kept().into_iter().all(|v| {
            rational::int(self.graph.vertex_degree(v) as i128)
                >= rational::int(h.vertex_degree(v) as i128) - rational::int(7) * *eps * pairs
        });
        let floor = *eps * *eps * nn;
        let shadow_ok = self
            .graph
            .shadow()
            .into_iter()
            .all(|(x, y)| rational::int(h.codegree(x, y) as i128) > floor);
        [removed_ok, degree_ok, shadow_ok]
    }
}

/// An edge is weak if one of its pairs has codegree at most `ε²n`; `V_ε`
/// holds the vertices in at least `ε·C(n,2)` weak edges and `H_ε` keeps the
/// strong edges avoiding `V_ε`.
pub fn epsilon_reduction(h: &Hypergraph3, eps: &Rational) -> Result<Reduction> {
    if *eps <= rational::zero() || *eps >= rational::int(1) {
        return Err(Error::invalid("ε must lie in (0, 1)"));
    }
    let n = h.n() as i128;
    let low = *eps * *eps * rational::int(n);
    let weak: Vec<bool> = h
        .edges()
        .iter()
        .map(|&[x, y, z]| {
            [(x, y), (x, z), (y, z)]
                .iter()
                .any(|&(s, t)| rational::int(h.codegree(s, t) as i128) <= low)
        })
        .collect();
    let mut weak_deg = vec![0usize; h.n()];
    for (e, _) in h.edges().iter().zip(&weak).filter(|(_, w)| **w) {
        for &v in e {
            weak_deg[v] += 1;
        }
    }
    let crowd = *eps * rational::int(n * (n - 1) / 2);
    let removed: Vec<Vertex> = (0..h.n())
        .filter(|&v| rational::int(weak_deg[v] as i128) >= crowd)
        .collect();
    let gone: HashSet<_> = removed.iter().copied().collect();
    let mut graph = Hypergraph3::new(h.n());
    for (e, w) in h.edges().iter().zip(&weak) {
        if !*w && e.iter().all(|v| !gone.contains(v)) {
            graph.add_edge(e[0], e[1], e[2])?;
        }
    }
    Ok(Reduction {
        graph,
        removed,
        weak_edges: weak.iter().filter(|w| **w).count(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityReport {
    pub u: Vertex,
    pub v: Vertex,
    pub i: usize,
    /// Exact count, or the scaled estimate when `sampled`.
    pub witness_count: u128,
    /// `C(n−2, ik−1)`.
    pub total: u128,
    /// `witness_count / total`, or the hit rate of the samples.
    pub normalized: Rational,
    pub sampled: bool,
    pub samples: u64,
}

fn check_pair(h: &Hypergraph3, u: Vertex, v: Vertex, spec: &KSpec, i: usize) -> Result<usize> {
    if u >= h.n() || v >= h.n() {
        return Err(Error::invalid("vertex out of range"));
    }
    if u == v {
        return Err(Error::invalid("u and v must differ"));
    }
    if i == 0 {
        return Err(Error::invalid("the depth i must be positive"));
    }
    Ok(i * spec.k_usize() - 1)
}

fn tileable(h: &Hypergraph3, verts: &[Vertex], spec: &KSpec, limits: &Limits) -> Result<bool> {
    Ok(has_perfect_tiling(&h.induced(verts), spec, limits)?.is_some())
}

/// `W` is a witness for `u, v` when both `{u} ∪ W` and `{v} ∪ W` induce
/// graphs with perfect `K`-tilings.
pub fn is_witness(h: &Hypergraph3, u: Vertex, v: Vertex, w: &[Vertex], spec: &KSpec, limits: &Limits) -> Result<bool> {
    if w.contains(&u) || w.contains(&v) {
        return Ok(false);
    }
    let mut a: Vec<Vertex> = w.to_vec();
    a.push(u);
    if !tileable(h, &a, spec, limits)? {
        return Ok(false);
    }
    *a.last_mut().unwrap() = v;
    tileable(h, &a, spec, limits)
}

/// `(k−1)`-sets completing `u` to a copy, as vertex masks.
fn completions(h: &Hypergraph3, u: Vertex, spec: &KSpec, limits: &Limits) -> Result<HashSet<u128>> {
    Ok(copies_through(h, spec, u, limits)?
        .into_iter()
        .map(|c| c.mask() & !bit(u))
        .collect())
}

fn count_common(a: &HashSet<u128>, b: &HashSet<u128>, u: Vertex, v: Vertex) -> u128 {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let avoid = bit(u) | bit(v);
    small
        .iter()
        .filter(|m| *m & avoid == 0 && large.contains(m))
        .count() as u128
}

/// Exact number of `(ik−1)`-sets `W ⊆ V ∖ {u, v}` reaching `u` and `v`.
///
/// For `i = 1` the witnesses are read off the copies through `u` and `v`;
/// deeper levels enumerate all candidates, guarded by `max_subsets`.
pub fn reachability_count(
    h: &Hypergraph3,
    u: Vertex,
    v: Vertex,
    spec: &KSpec,
    i: usize,
    limits: &Limits,
) -> Result<ReachabilityReport> {
    let size = check_pair(h, u, v, spec, i)?;
    let n = h.n();
    let total = rational::binom_saturating(n.saturating_sub(2) as u128, size as u128);
    let count = if size + 2 > n {
        0
    } else if i == 1 {
        count_common(&completions(h, u, spec, limits)?, &completions(h, v, spec, limits)?, u, v)
    } else {
        if total > limits.max_subsets {
            return Err(Error::size_limit("number of candidate witness sets", limits.max_subsets));
        }
        let rest: Vec<Vertex> = (0..n).filter(|&x| x != u && x != v).collect();
        let mut count = 0;
        for w in rest.into_iter().combinations(size) {
            if is_witness(h, u, v, &w, spec, limits)? {
                count += 1;
            }
        }
        count
    };
    Ok(ReachabilityReport {
        u,
        v,
        i,
        witness_count: count,
        total,
        normalized: if total == 0 {
            rational::zero()
        } else {
            q(count as i128, total.min(i128::MAX as u128) as i128)
        },
        sampled: false,
        samples: 0,
    })
}

/// Seeded estimate of the witness count from `samples` uniform candidates.
pub fn reachability_estimate(
    h: &Hypergraph3,
    u: Vertex,
    v: Vertex,
    spec: &KSpec,
    i: usize,
    samples: u64,
    seed: u64,
    limits: &Limits,
) -> Result<ReachabilityReport> {
    let size = check_pair(h, u, v, spec, i)?;
    let n = h.n();
    let total = rational::binom_saturating(n.saturating_sub(2) as u128, size as u128);
    let rest: Vec<Vertex> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    if size <= rest.len() && samples > 0 {
        for _ in 0..samples {
            let w: Vec<Vertex> = sample(&mut rng, rest.len(), size).into_iter().map(|j| rest[j]).collect();
            if is_witness(h, u, v, &w, spec, limits)? {
                hits += 1;
            }
        }
    }
    let normalized = if samples == 0 { rational::zero() } else { q(hits as i128, samples as i128) };
    let scaled = rational::to_f64(&normalized) * total as f64;
    Ok(ReachabilityReport {
        u,
        v,
        i,
        witness_count: scaled.round() as u128,
        total,
        normalized,
        sampled: true,
        samples,
    })
}

fn check_absorbing_args(h: &Hypergraph3, a: &[Vertex], s: &[Vertex], spec: &KSpec) -> Result<()> {
    let k = spec.k_usize();
    if a.iter().chain(s).any(|&x| x >= h.n()) {
        return Err(Error::invalid("vertex out of range"));
    }
    let (ma, ms) = (mask_of(a), mask_of(s));
    if ma.count_ones() as usize != a.len() || ms.count_ones() as usize != s.len() {
        return Err(Error::invalid("repeated vertices"));
    }
    if ma & ms != 0 {
        return Err(Error::invalid("A and S must be disjoint"));
    }
    if s.len() != k || !a.len().is_multiple_of(k) {
        return Err(Error::invalid(format!(
            "need |S| = k = {k} and k dividing |A| = {}",
            a.len()
        )));
    }
    Ok(())
}

/// `A` absorbs `S` when both `H[A]` and `H[A ∪ S]` have perfect tilings.
pub fn is_absorbing_set(h: &Hypergraph3, a: &[Vertex], s: &[Vertex], spec: &KSpec, limits: &Limits) -> Result<bool> {
    check_absorbing_args(h, a, s, spec)?;
    if !tileable(h, a, spec, limits)? {
        return Ok(false);
    }
    let both: Vec<Vertex> = a.iter().chain(s).copied().collect();
    tileable(h, &both, spec, limits)
}

/// Exact `|A^m(S)|`, enumerating all `m`-subsets of `V ∖ S`.
pub fn count_absorbing_sets(h: &Hypergraph3, s: &[Vertex], m: usize, spec: &KSpec, limits: &Limits) -> Result<u128> {
    let dummy: Vec<Vertex> = Vec::new();
    check_absorbing_args(h, &dummy, s, spec)?;
    if !m.is_multiple_of(spec.k_usize()) {
        return Err(Error::invalid("k must divide m"));
    }
    let rest: Vec<Vertex> = (0..h.n()).filter(|x| !s.contains(x)).collect();
    let total = rational::binom_saturating(rest.len() as u128, m as u128);
    if total > limits.max_subsets {
        return Err(Error::size_limit("number of candidate m-sets", limits.max_subsets));
    }
    let mut count = 0;
    for a in rest.into_iter().combinations(m) {
        if is_absorbing_set(h, &a, s, spec, limits)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Seeded estimate of `|A^m(S)|` from `samples` uniform `m`-sets.
pub fn estimate_absorbing_sets(
    h: &Hypergraph3,
    s: &[Vertex],
    m: usize,
    spec: &KSpec,
    samples: u64,
    seed: u64,
    limits: &Limits,
) -> Result<(Rational, u128)> {
    let dummy: Vec<Vertex> = Vec::new();
    check_absorbing_args(h, &dummy, s, spec)?;
    let rest: Vec<Vertex> = (0..h.n()).filter(|x| !s.contains(x)).collect();
    let total = rational::binom_saturating(rest.len() as u128, m as u128);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    if m <= rest.len() {
        for _ in 0..samples {
            let a: Vec<Vertex> = sample(&mut rng, rest.len(), m).into_iter().map(|j| rest[j]).collect();
            if is_absorbing_set(h, &a, s, spec, limits)? {
                hits += 1;
            }
        }
    }
    let rate = if samples == 0 { rational::zero() } else { q(hits as i128, samples as i128) };
    Ok((rate, (rational::to_f64(&rate) * total as f64).round() as u128))
}

/// Pairwise disjoint `m`-sets, each absorbing the recorded `k`-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorbingFamily {
    pub m: usize,
    /// `(member, k-set it absorbs)`.
    pub sets: Vec<(Vec<Vertex>, Vec<Vertex>)>,
    /// Members drawn before the disjointness and absorption filters.
    pub sampled: usize,
}

impl AbsorbingFamily {
    pub fn is_disjoint(&self) -> bool {
        let mut seen = 0u128;
        self.sets.iter().all(|(a, _)| {
            let m = mask_of(a);
            let ok = seen & m == 0;
            seen |= m;
            ok
        })
    }

    /// Members absorbing `s`.
    pub fn coverage(&self, h: &Hypergraph3, s: &[Vertex], spec: &KSpec, limits: &Limits) -> Result<usize> {
        let mut count = 0;
        for (a, _) in &self.sets {
            if mask_of(a) & mask_of(s) == 0 && is_absorbing_set(h, a, s, spec, limits)? {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// The `m`-subset of `0..n` with colex rank `r`.
fn unrank(mut r: u128, n: usize, m: usize) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(m);
    let mut top = n;
    for j in (1..=m).rev() {
        let mut c = j - 1;
        while c + 1 < top && rational::binom((c + 1) as u128, j as u128) <= r {
            c += 1;
        }
        r -= rational::binom(c as u128, j as u128);
        out.push(c);
        top = c;
    }
    out.reverse();
    out
}

/// Samples every `m`-set (`m = i0·k² − i0·k`) independently with
/// probability `p`, in colex order with geometric skips; keeps a member only
/// if it avoids all earlier kept members, then drops members absorbing none
/// of the queried `k`-sets (all `k`-sets when `queries` is `None`).
pub fn build_absorbing_family(
    h: &Hypergraph3,
    spec: &KSpec,
    i0: usize,
    seed: u64,
    p: &Rational,
    queries: Option<&[Vec<Vertex>]>,
    limits: &Limits,
) -> Result<AbsorbingFamily> {
    if *p < rational::zero() || *p > rational::int(1) {
        return Err(Error::invalid("p must lie in [0, 1]"));
    }
    let k = spec.k_usize();
    let m = i0 * k * k - i0 * k;
    let n = h.n();
    let mut family = AbsorbingFamily {
        m,
        sets: Vec::new(),
        sampled: 0,
    };
    if *p == rational::zero() || m > n {
        return Ok(family);
    }
    let total = rational::binom_saturating(n as u128, m as u128);
    let pf = rational::to_f64(p);
    if (total as f64) * pf > limits.max_subsets as f64 {
        return Err(Error::size_limit("expected number of sampled m-sets", limits.max_subsets));
    }
    if queries.is_none() && rational::binom_saturating(n as u128, k as u128) > limits.max_subsets {
        return Err(Error::size_limit("number of queried k-sets", limits.max_subsets));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept: Vec<Vec<Vertex>> = Vec::new();
    let mut used = 0u128;
    let mut idx: u128 = 0;
    loop {
        if pf < 1.0 {
            let u: f64 = rng.gen();
            let skip = ((1.0 - u).ln() / (1.0 - pf).ln()).floor();
            if !skip.is_finite() || skip >= (total - idx) as f64 {
                break;
            }
            idx += skip as u128;
        }
        if idx >= total {
            break;
        }
        let a = unrank(idx, n, m);
        family.sampled += 1;
        let ma = mask_of(&a);
        if used & ma == 0 {
            used |= ma;
            kept.push(a);
        }
        idx += 1;
    }
    for a in kept {
        let ma = mask_of(&a);
        let found = match queries {
            Some(qs) => {
                let mut hit = None;
                for s in qs {
                    if mask_of(s) & ma == 0 && is_absorbing_set(h, &a, s, spec, limits)? {
                        hit = Some(s.clone());
                        break;
                    }
                }
                hit
            }
            None => {
                let rest: Vec<Vertex> = bits(!ma & full_mask(n)).collect();
                let mut hit = None;
                for s in rest.into_iter().combinations(k) {
                    if is_absorbing_set(h, &a, &s, spec, limits)? {
                        hit = Some(s);
                        break;
                    }
                }
                hit
            }
        };
        if let Some(s) = found {
            family.sets.push((a, s));
        }
    }
    Ok(family)
}

/// Components of the graph joining `u, v` when they have at least
/// `min_witnesses` depth-1 witnesses. Vertices without such a partner go to
/// `V0`.
#[derive(Clone, Debug)]
pub struct ReachabilityPartition {
    pub partition: VertexPartition,
    /// Joined pairs `(u, v, witnesses)` with `u < v`.
    pub links: Vec<(Vertex, Vertex, u128)>,
}

pub fn reachability_partition(
    h: &Hypergraph3,
    spec: &KSpec,
    min_witnesses: u128,
    limits: &Limits,
) -> Result<ReachabilityPartition> {
    let n = h.n();
    let comps: Vec<HashSet<u128>> = (0..n)
        .map(|u| completions(h, u, spec, limits))
        .collect::<Result<_>>()?;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut links = Vec::new();
    let threshold = min_witnesses.max(1);
    for u in 0..n {
        for v in u + 1..n {
            let c = count_common(&comps[u], &comps[v], u, v);
            if c >= threshold {
                links.push((u, v, c));
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
    }
    let mut linked = vec![false; n];
    for &(u, v, _) in &links {
        linked[u] = true;
        linked[v] = true;
    }
    let mut v0 = Vec::new();
    let mut groups: Vec<(usize, Vec<Vertex>)> = Vec::new();
    for x in 0..n {
        if !linked[x] {
            v0.push(x);
            continue;
        }
        let r = find(&mut parent, x);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, g)) => g.push(x),
            None => groups.push((r, vec![x])),
        }
    }
    let mut parts = vec![v0];
    parts.extend(groups.into_iter().map(|(_, g)| g));
    Ok(ReachabilityPartition {
        partition: VertexPartition::new(n, parts)?,
        links,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::generate;
    use crate::kspec::{classify, Barrier};

    fn k111() -> KSpec {
        classify(1, 1, 1).unwrap()
    }

    fn two_cliques(s: usize) -> Hypergraph3 {
        let mut h = Hypergraph3::new(2 * s);
        for off in [0, s] {
            for e in (off..off + s).combinations(3) {
                h.add_edge(e[0], e[1], e[2]).unwrap();
            }
        }
        h
    }

    #[test]
    fn reduction_examples() {
        let h = Hypergraph3::complete(20);
        let r = epsilon_reduction(&h, &q(1, 10)).unwrap();
        assert_eq!(r.graph, h);
        assert!(r.removed.is_empty());

        let single = Hypergraph3::from_edges(30, [[0, 1, 2]]).unwrap();
        let r = epsilon_reduction(&single, &q(1, 2)).unwrap();
        assert_eq!(r.weak_edges, 1);
        assert!(r.removed.is_empty());
        assert_eq!(r.graph.edge_count(), 0);
        assert_eq!(r.guarantees_hold(&single, &q(1, 2)), [true; 3]);

        let empty = Hypergraph3::new(7);
        let r = epsilon_reduction(&empty, &q(1, 3)).unwrap();
        assert!(r.removed.is_empty() && r.graph.edge_count() == 0);
        assert!(epsilon_reduction(&empty, &q(1, 1)).is_err());
    }

    #[test]
    fn reachability_examples() {
        let lim = Limits::default();
        let s = k111();
        let r = reachability_count(&Hypergraph3::complete(6), 0, 1, &s, 1, &lim).unwrap();
        assert_eq!((r.witness_count, r.total), (6, 6));
        assert_eq!(reachability_count(&Hypergraph3::new(6), 0, 1, &s, 1, &lim).unwrap().witness_count, 0);
        assert_eq!(reachability_count(&two_cliques(5), 0, 7, &s, 1, &lim).unwrap().witness_count, 0);
        assert!(reachability_count(&Hypergraph3::new(6), 2, 2, &s, 1, &lim).is_err());
    }

    #[test]
    fn depth_two_matches_brute_force() {
        let lim = Limits::default();
        let s = k111();
        let h = two_cliques(5);
        let r = reachability_count(&h, 0, 1, &s, 2, &lim).unwrap();
        let rest: Vec<Vertex> = (2..10).collect();
        let brute = rest
            .into_iter()
            .combinations(5)
            .filter(|w| is_witness(&h, 0, 1, w, &s, &lim).unwrap())
            .count() as u128;
        assert_eq!(r.witness_count, brute);
    }

    #[test]
    fn absorbing_examples() {
        let lim = Limits::default();
        let s = k111();
        let h = Hypergraph3::complete(9);
        assert!(is_absorbing_set(&h, &[0, 1, 2], &[3, 4, 5], &s, &lim).unwrap());
        assert!(!is_absorbing_set(&Hypergraph3::new(9), &[0, 1, 2], &[3, 4, 5], &s, &lim).unwrap());
        assert!(is_absorbing_set(&h, &[0, 1, 2], &[2, 4, 5], &s, &lim).is_err());
        assert_eq!(count_absorbing_sets(&h, &[0, 1, 2], 3, &s, &lim).unwrap(), 20);
        assert_eq!(count_absorbing_sets(&Hypergraph3::new(9), &[0, 1, 2], 3, &s, &lim).unwrap(), 0);

        let inst = generate(Barrier::DivI, &s, 12, &lim).unwrap();
        let v1 = inst.parts.part(1).to_vec();
        let v2 = inst.parts.part(2).to_vec();
        let a = v1[..3].to_vec();
        let straddle = vec![v1[3], v1[4], v2[0]];
        assert!(!is_absorbing_set(&inst.graph, &a, &straddle, &s, &lim).unwrap());
    }

    #[test]
    fn family_examples() {
        let lim = Limits::default();
        let s = k111();
        let h = Hypergraph3::complete(30);
        let f = build_absorbing_family(&h, &s, 1, 7, &q(1, 200), None, &lim).unwrap();
        assert!(!f.sets.is_empty());
        assert!(f.is_disjoint());
        for (a, t) in &f.sets {
            assert_eq!(a.len(), 6);
            assert!(is_absorbing_set(&h, a, t, &s, &lim).unwrap());
        }
        let again = build_absorbing_family(&h, &s, 1, 7, &q(1, 200), None, &lim).unwrap();
        assert_eq!(f, again);
        assert!(build_absorbing_family(&h, &s, 1, 7, &q(0, 1), None, &lim).unwrap().sets.is_empty());
        let empty = Hypergraph3::new(12);
        assert!(build_absorbing_family(&empty, &s, 1, 3, &q(1, 10), None, &lim).unwrap().sets.is_empty());
    }

    #[test]
    fn unrank_is_colex() {
        let all: Vec<Vec<Vertex>> = (0..6u128).map(|r| unrank(r, 4, 2)).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn partition_examples() {
        let lim = Limits::default();
        let s = k111();
        let p = reachability_partition(&Hypergraph3::complete(9), &s, 1, &lim).unwrap();
        assert_eq!(p.partition.r(), 1);
        assert!(p.partition.exceptional().is_empty());
        let p = reachability_partition(&two_cliques(6), &s, 1, &lim).unwrap();
        assert_eq!(p.partition.r(), 2);
        let p = reachability_partition(&Hypergraph3::new(5), &s, 1, &lim).unwrap();
        assert_eq!(p.partition.r(), 0);
        assert_eq!(p.partition.exceptional().len(), 5);
    }
}
