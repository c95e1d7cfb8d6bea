//! Extremal constructions without a perfect `K_{a,b,c}`-tiling, with their
//! exact minimum vertex degrees and machine-checkable certificates.
//!
//! Part sizes given by real expressions in `n` are floored. Vertices are laid
//! out part by part: `V1` first, then `V2` (and for the tiling barrier the apex
//! `0`, then `V1`, `V2`, `V3`).

use std::ops::ControlFlow;

use num_integer::Integer;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Vertex, VertexPartition};
use crate::kspec::{self, Barrier, Exact, KSpec, TypeClass};
use crate::limits::Limits;
use crate::rational::{binom, binom_saturating, q};
use crate::tiler::{self, bit, copy_count_estimate, CopyQuery, KCopy, PairIndex};

pub const DEFAULT_CERTIFICATE_SEED: u64 = 0x6b61_6263;

fn infeasible(msg: impl Into<String>) -> Error {
    Error::InfeasibleSize(msg.into())
}

fn not_applicable(kind: Barrier, spec: &KSpec, why: &str) -> Error {
    Error::NotApplicable(format!("{} for {spec}: {why}", kind.name()))
}

fn divii_applies(spec: &KSpec) -> bool {
    match spec.type_class {
        TypeClass::Type0 => true,
        TypeClass::TypeD(d) => d % 2 == 0,
    }
}

/// Sizes of the defining parts: `[|V1|, |V2|]`, or `[1, |V1|, |V2|, |V3|]`
/// for the tiling barrier (the leading `1` is the apex).
pub fn part_sizes(kind: Barrier, spec: &KSpec, n: usize) -> Result<Vec<usize>> {
    let k = spec.k_usize();
    let (a, b) = (spec.a as usize, spec.b as usize);
    if n < k {
        return Err(infeasible(format!("n = {n} is smaller than k = {k}")));
    }
    let two = |v1: usize| -> Result<Vec<usize>> {
        if v1 == 0 || v1 >= n {
            return Err(infeasible(format!(
                "{} at n = {n} would have an empty part",
                kind.name()
            )));
        }
        Ok(vec![v1, n - v1])
    };
    match kind {
        Barrier::SpaceI => two((a * n / k).saturating_sub(1)),
        Barrier::SpaceII => two(((a + b) * n / k).saturating_sub(1)),
        Barrier::DivI => two(n / 2 + 1),
        Barrier::DivII => {
            if !divii_applies(spec) {
                return Err(not_applicable(kind, spec, "needs type 0 or an even type"));
            }
            // smallest odd |V2| with n − 4 <= 2|V2| <= n + 4, avoiding multiples of g
            let v2 = (1..n)
                .filter(|&x| x % 2 == 1 && 2 * x + 4 >= n && 2 * x <= n + 4)
                .find(|&x| spec.g == 1 || !(x as u64).is_multiple_of(spec.g))
                .ok_or_else(|| infeasible(format!("no admissible |V2| at n = {n}")))?;
            two(n - v2)
        }
        Barrier::DivIII => {
            let d = spec.d as usize;
            if !(spec.g == 1 && d >= 3 && d % 2 == 1) {
                return Err(not_applicable(kind, spec, "needs an odd type d >= 3"));
            }
            if !n.is_multiple_of(k) {
                return Err(infeasible(format!("k = {k} does not divide n = {n}")));
            }
            let na = (n / k * a) as i64;
            let v1 = (1..n)
                .filter(|&x| 3 * x + 3 >= n && 3 * x <= n + 3)
                .find(|&x| (x as i64 - na).rem_euclid(d as i64) != 0)
                .ok_or_else(|| infeasible(format!("no admissible |V1| at n = {n}")))?;
            two(v1)
        }
        Barrier::Tiling => {
            if spec.a < 2 {
                return Err(not_applicable(kind, spec, "needs a >= 2"));
            }
            let s = ((std::f64::consts::SQRT_2 - 1.0) * n as f64).round() as usize;
            if s == 0 || 2 * s + 1 > n {
                return Err(infeasible(format!("tiling barrier at n = {n}")));
            }
            Ok(vec![1, s, s, n - 1 - 2 * s])
        }
    }
}

fn c2(x: usize) -> u128 {
    binom(x as u128, 2)
}

/// Exact minimum vertex degree of the construction at `n`.
pub fn predicted_degree(kind: Barrier, spec: &KSpec, n: usize) -> Result<u128> {
    let sizes = part_sizes(kind, spec, n)?;
    Ok(match kind {
        Barrier::SpaceI => {
            let v2 = sizes[1];
            c2(n - 1) - c2(v2 - 1)
        }
        Barrier::SpaceII => {
            let (v1, v2) = (sizes[0], sizes[1]);
            (c2(n - 1) - c2(v2)).min(c2(v1))
        }
        Barrier::DivI => c2(sizes[0] - 1).min(c2(sizes[1] - 1)),
        Barrier::DivII => {
            let (v1, v2) = (sizes[0] as u128, sizes[1] as u128);
            (c2(sizes[0] - 1) + c2(sizes[1])).min(v1 * (v2 - 1))
        }
        Barrier::DivIII => {
            let (v1, v2) = (sizes[0] as u128, sizes[1] as u128);
            c2(sizes[1]).min(v1 * (v2 - 1))
        }
        Barrier::Tiling => {
            let (s, s3) = (sizes[1], sizes[3]);
            let su = s as u128;
            let apex = su * su;
            // x in V1 (and symmetrically y in V2)
            let side = c2(s + s3 - 1) + su;
            let mut best = apex.min(side);
            if s3 > 0 {
                let z = 2 * c2(s + s3 - 1) - c2(s3 - 1);
                best = best.min(z);
            }
            best
        }
    })
}

/// The asymptotic value of `predicted_degree / C(n, 2)`.
pub fn kind_coefficient(kind: Barrier, spec: &KSpec) -> Exact {
    match kind {
        Barrier::SpaceI => Exact::Rational(kspec::space1_coefficient(spec)),
        Barrier::SpaceII => Exact::Rational(kspec::space2_coefficient(spec)),
        Barrier::DivI => Exact::Rational(q(1, 4)),
        Barrier::DivII => Exact::Rational(q(1, 2)),
        Barrier::DivIII => Exact::Rational(q(4, 9)),
        Barrier::Tiling => Exact::SixMinusFourSqrt2,
    }
}

/// A generated construction.
#[derive(Clone, Debug)]
pub struct BarrierInstance {
    pub kind: Barrier,
    pub spec: KSpec,
    pub graph: Hypergraph3,
    /// `V0` is always empty; the remaining parts follow `part_sizes`.
    pub parts: VertexPartition,
    pub predicted_min_degree: u128,
}

impl BarrierInstance {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The apex of the tiling barrier.
    pub fn apex(&self) -> Option<Vertex> {
        (self.kind == Barrier::Tiling).then_some(0)
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.parts()[1..].iter().map(Vec::len).collect()
    }
}

fn in_edge_rule(kind: Barrier, owner: &[usize], e: [Vertex; 3]) -> bool {
    let cnt = |p: usize| e.iter().filter(|&&v| owner[v] == p).count();
    match kind {
        Barrier::SpaceI => cnt(1) >= 1,
        Barrier::SpaceII => cnt(1) >= 2,
        Barrier::DivI => cnt(1) == 3 || cnt(2) == 3,
        Barrier::DivII => cnt(2) % 2 == 0,
        Barrier::DivIII => cnt(1) == 1,
        Barrier::Tiling => {
            if cnt(1) == 1 {
                // apex triples: v x y
                cnt(2) == 1 && cnt(3) == 1
            } else {
                cnt(2) == 0 || cnt(3) == 0
            }
        }
    }
}

/// Builds the construction of the given kind on `n` vertices.
pub fn generate(kind: Barrier, spec: &KSpec, n: usize, limits: &Limits) -> Result<BarrierInstance> {
    let sizes = part_sizes(kind, spec, n)?;
    let triples = binom_saturating(n as u128, 3);
    if triples > limits.max_subsets {
        return Err(Error::size_limit(
            format!("generating a construction with C({n},3) candidate triples"),
            limits.max_subsets,
        ));
    }
    let mut parts = vec![Vec::new()];
    let mut next = 0;
    for &s in &sizes {
        parts.push((next..next + s).collect());
        next += s;
    }
    let parts = VertexPartition::new(n, parts)?;
    let owner = parts.owner_map();
    let mut graph = Hypergraph3::new(n);
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if in_edge_rule(kind, &owner, [x, y, z]) {
                    graph.add_edge(x, y, z)?;
                }
            }
        }
    }
    Ok(BarrierInstance {
        kind,
        spec: *spec,
        graph,
        parts,
        predicted_min_degree: predicted_degree(kind, spec, n)?,
    })
}

/// Result of checking a construction's non-tileability certificate.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: Barrier,
    /// Per-copy condition and counting obstruction both hold.
    pub holds: bool,
    /// The counting obstruction on the part sizes.
    pub arithmetic: bool,
    /// Copies were sampled instead of exhaustively enumerated.
    pub sampled: bool,
    /// Number of copies whose class structure was examined.
    pub copies_checked: u128,
    pub counterexample: Option<KCopy>,
    pub detail: String,
}

fn copy_condition(inst: &BarrierInstance, owner: &[usize], c: &KCopy) -> bool {
    let spec = &inst.spec;
    let in_part = |m: u128, p: usize| tiler::bits(m).filter(|&v| owner[v] == p).count();
    let classes_inside_v1 = (0..3)
        .filter(|&i| {
            let m = c.class_mask(i);
            in_part(m, 1) == m.count_ones() as usize
        })
        .count();
    let (a, b, cc) = (spec.a as usize, spec.b as usize, spec.c as usize);
    match inst.kind {
        Barrier::SpaceI => classes_inside_v1 >= 1,
        Barrier::SpaceII => classes_inside_v1 >= 2,
        Barrier::DivI => {
            let m = c.mask();
            let i1 = in_part(m, 1);
            i1 == 0 || i1 == spec.k_usize()
        }
        Barrier::DivII => {
            let i2 = in_part(c.mask(), 2);
            [0, a + b, a + cc, b + cc].contains(&i2)
        }
        Barrier::DivIII => [a, b, cc].contains(&in_part(c.mask(), 1)),
        Barrier::Tiling => !c.contains(0),
    }
}

fn arithmetic_obstruction(inst: &BarrierInstance) -> (bool, String) {
    let spec = &inst.spec;
    let n = inst.n() as u64;
    let sizes: Vec<u64> = inst.part_sizes().iter().map(|&s| s as u64).collect();
    let k = spec.k;
    match inst.kind {
        Barrier::SpaceI => {
            let cover = k * (sizes[0] / spec.a);
            (cover < n, format!("tilings cover at most k*floor(|V1|/a) = {cover} of {n} vertices"))
        }
        Barrier::SpaceII => {
            let cover = k * (sizes[0] / (spec.a + spec.b));
            (
                cover < n,
                format!("tilings cover at most k*floor(|V1|/(a+b)) = {cover} of {n} vertices"),
            )
        }
        Barrier::DivI => (
            !(sizes[0].is_multiple_of(k) && sizes[1].is_multiple_of(k)),
            format!("part sizes {} and {} are not both divisible by k = {k}", sizes[0], sizes[1]),
        ),
        Barrier::DivII => {
            let m = (spec.a + spec.b).gcd(&(spec.a + spec.c)).gcd(&(spec.b + spec.c));
            (
                !sizes[1].is_multiple_of(m),
                format!("every copy meets V2 in a multiple of {m}, but |V2| = {}", sizes[1]),
            )
        }
        Barrier::DivIII => {
            let d = spec.d as i64;
            let shift = sizes[0] as i64 - (n / k * spec.a) as i64;
            (
                shift.rem_euclid(d) != 0,
                format!("|V1| - na/k = {shift} is not divisible by d = {d}"),
            )
        }
        Barrier::Tiling => (true, "the apex lies in no copy".to_string()),
    }
}

/// Verifies the construction's certificate with the default sampling seed.
pub fn check_certificate(inst: &BarrierInstance, limits: &Limits) -> Result<Certificate> {
    check_certificate_seeded(inst, limits, DEFAULT_CERTIFICATE_SEED)
}

/// Checks every copy (or, above the copy-count guard, a uniform sample of
/// candidate copies) against the per-copy condition of the construction,
/// together with its counting obstruction.
pub fn check_certificate_seeded(inst: &BarrierInstance, limits: &Limits, seed: u64) -> Result<Certificate> {
    let pairs = PairIndex::new(&inst.graph)?;
    let owner = inst.parts.owner_map();
    let spec = inst.spec;
    let n = inst.n();
    let (arithmetic, detail) = arithmetic_obstruction(inst);
    let mut checked: u128 = 0;
    let mut counterexample = None;
    let mut sampled = false;

    let mut visit = |c: &KCopy| {
        checked += 1;
        if copy_condition(inst, &owner, c) {
            ControlFlow::Continue(())
        } else {
            counterexample = Some(*c);
            ControlFlow::Break(())
        }
    };

    if inst.kind == Barrier::Tiling {
        let q = CopyQuery::through(n, 0);
        let _ = tiler::for_each_copy(&pairs, &spec, &q, &mut visit);
    } else if copy_count_estimate(n, &spec) <= limits.certificate_copies {
        let _ = tiler::for_each_copy(&pairs, &spec, &CopyQuery::all(n), &mut visit);
    } else {
        sampled = true;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [a, b, c] = spec.sizes();
        for _ in 0..limits.certificate_samples {
            let pick = sample(&mut rng, n, spec.k_usize()).into_vec();
            let classes = [&pick[..a], &pick[a..a + b], &pick[a + b..a + b + c]];
            let masks = classes.map(|cl| cl.iter().fold(0u128, |m, &v| m | bit(v)));
            let copy = KCopy::from_masks(masks);
            if copy.is_copy_in(&inst.graph) && visit(&copy).is_break() {
                break;
            }
        }
    }
    Ok(Certificate {
        kind: inst.kind,
        holds: arithmetic && counterexample.is_none(),
        arithmetic,
        sampled,
        copies_checked: checked,
        counterexample,
        detail,
    })
}

/// The `r`-uniform space barrier: vertex set `A ∪ B` with
/// `|A| = ⌊(a_1+…+a_i)n/s⌋ − 1`, edges all `r`-sets meeting `A` in at least
/// `i` vertices. `A` is `0..|A|`.
#[derive(Clone, Debug)]
pub struct GeneralSpaceBarrier {
    pub r: usize,
    pub i: usize,
    pub sizes: Vec<usize>,
    pub n: usize,
    pub a_size: usize,
    /// Sorted `r`-sets.
    pub edges: Vec<Vec<Vertex>>,
}

fn for_each_subset(n: usize, r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, r, cur, f);
            cur.pop();
        }
    }
    rec(0, n, r, &mut Vec::with_capacity(r), f);
}

pub fn generate_general(r: usize, i: usize, sizes: &[usize], n: usize, limits: &Limits) -> Result<GeneralSpaceBarrier> {
    if !(1 <= i && i < r) || sizes.len() != r {
        return Err(Error::invalid("need 1 <= i < r and exactly r part sizes"));
    }
    if sizes.contains(&0) || sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::invalid("part sizes must be positive and nondecreasing"));
    }
    let s: usize = sizes.iter().sum();
    if n < s {
        return Err(infeasible(format!("n = {n} is smaller than {s}")));
    }
    let a_size = (sizes[..i].iter().sum::<usize>() * n / s).saturating_sub(1);
    if a_size == 0 {
        return Err(infeasible("A would be empty"));
    }
    if binom_saturating(n as u128, r as u128) > limits.max_subsets {
        return Err(Error::size_limit(format!("C({n},{r}) candidate edges"), limits.max_subsets));
    }
    let mut edges = Vec::new();
    for_each_subset(n, r, &mut |e| {
        if e.iter().filter(|&&v| v < a_size).count() >= i {
            edges.push(e.to_vec());
        }
    });
    Ok(GeneralSpaceBarrier {
        r,
        i,
        sizes: sizes.to_vec(),
        n,
        a_size,
        edges,
    })
}

impl GeneralSpaceBarrier {
    /// Every edge meets `A` in at least `i` vertices.
    pub fn edges_respect_rule(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.len() == self.r && e.iter().filter(|&&v| v < self.a_size).count() >= self.i)
    }

    /// Minimum `d`-degree by brute force over all `d`-sets.
    pub fn min_degree(&self, d: usize) -> Result<u128> {
        if d == 0 || d >= self.r {
            return Err(Error::invalid("need 1 <= d < r"));
        }
        let mut best = u128::MAX;
        for_each_subset(self.n, d, &mut |set| {
            let cnt = self
                .edges
                .iter()
                .filter(|e| set.iter().all(|v| e.binary_search(v).is_ok()))
                .count() as u128;
            best = best.min(cnt);
        });
        Ok(best)
    }

    /// Counting obstruction: a factor would need `(a_1+…+a_i)n/s > |A|`
    /// vertices of `A`.
    pub fn arithmetic_holds(&self) -> bool {
        let s: usize = self.sizes.iter().sum();
        let need = self.sizes[..self.i].iter().sum::<usize>() * self.n;
        self.a_size * s < need
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kspec::classify;

    fn spec(a: u64, b: u64, c: u64) -> KSpec {
        classify(a, b, c).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn space_one_example() {
        let inst = generate(Barrier::SpaceI, &spec(1, 1, 1), 9, &lim()).unwrap();
        assert_eq!(inst.part_sizes(), vec![2, 7]);
        assert_eq!(inst.predicted_min_degree, 13);
        assert_eq!(inst.graph.min_vertex_degree(), 13);
        assert_eq!(inst.graph.degree(&[5]).unwrap(), 13);
        assert!(check_certificate(&inst, &lim()).unwrap().holds);
    }

    #[test]
    fn space_two_example() {
        let inst = generate(Barrier::SpaceII, &spec(1, 1, 1), 9, &lim()).unwrap();
        assert_eq!(inst.part_sizes()[0], 5);
        assert_eq!(inst.graph.min_vertex_degree(), 10);
        assert_eq!(inst.predicted_min_degree, 10);
    }

    #[test]
    fn div_examples() {
        let inst = generate(Barrier::DivI, &spec(1, 1, 1), 6, &lim()).unwrap();
        assert_eq!(inst.part_sizes(), vec![4, 2]);
        assert_eq!(part_sizes(Barrier::DivIII, &spec(1, 4, 7), 36).unwrap(), vec![11, 25]);
        assert_eq!(predicted_degree(Barrier::DivIII, &spec(1, 4, 7), 36).unwrap(), 264);
        assert_eq!(part_sizes(Barrier::DivII, &spec(1, 1, 1), 12).unwrap(), vec![7, 5]);
        assert_eq!(predicted_degree(Barrier::DivII, &spec(1, 1, 1), 12).unwrap(), 25);
    }

    #[test]
    fn applicability() {
        assert!(matches!(
            generate(Barrier::DivIII, &spec(1, 3, 5), 18, &lim()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            generate(Barrier::DivII, &spec(1, 1, 2), 8, &lim()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            generate(Barrier::Tiling, &spec(1, 2, 2), 10, &lim()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            generate(Barrier::SpaceI, &spec(1, 1, 1), 2, &lim()),
            Err(Error::InfeasibleSize(_))
        ));
    }

    #[test]
    fn tiling_barrier_apex() {
        let inst = generate(Barrier::Tiling, &spec(2, 2, 2), 20, &lim()).unwrap();
        assert_eq!(inst.part_sizes(), vec![1, 8, 8, 3]);
        let cert = check_certificate(&inst, &lim()).unwrap();
        assert!(cert.holds);
        assert!(!cert.sampled);
        assert_eq!(cert.copies_checked, 0);
        assert_eq!(inst.graph.min_vertex_degree() as u128, inst.predicted_min_degree);
    }

    #[test]
    fn mutated_instance_fails() {
        let mut inst = generate(Barrier::SpaceI, &spec(1, 1, 1), 9, &lim()).unwrap();
        inst.graph.add_edge(6, 7, 8).unwrap();
        let cert = check_certificate(&inst, &lim()).unwrap();
        assert!(!cert.holds);
        let bad = cert.counterexample.unwrap();
        assert_eq!(bad.vertices(), vec![6, 7, 8]);
    }

    #[test]
    fn general_barrier() {
        let g = generate_general(4, 3, &[1, 1, 1, 1], 8, &lim()).unwrap();
        assert!(g.edges_respect_rule());
        assert!(g.arithmetic_holds());
        assert_eq!(g.min_degree(2).unwrap(), 0);
        let g1 = generate_general(4, 1, &[1, 1, 1, 1], 8, &lim()).unwrap();
        assert!(g1.min_degree(2).unwrap() > 0);
    }
}
