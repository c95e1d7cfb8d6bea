//! Copies of `K_{a,b,c}` and tilings: enumeration, exact maximum and perfect
//! tilings, the greedy tiling of regular triples, and universal-vertex
//! augmentation.
//!
//! Vertex sets are `u128` bitmasks, so everything here is limited to hosts
//! with at most 128 vertices.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Vertex};
use crate::kspec::KSpec;
use crate::limits::{Limits, MAX_SOLVER_VERTICES};
use crate::rational::{self, binom_saturating, Rational};

pub fn bit(v: Vertex) -> u128 {
    1u128 << v
}

/// Vertices of a mask in increasing order.
pub fn bits(mut mask: u128) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vs: &[Vertex]) -> u128 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

pub fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        bit(n) - 1
    }
}

fn popcount(m: u128) -> usize {
    m.count_ones() as usize
}

pub(crate) fn check_solver_size(n: usize) -> Result<()> {
    if n > MAX_SOLVER_VERTICES {
        return Err(Error::size_limit(
            format!("host with {n} vertices"),
            MAX_SOLVER_VERTICES as u128,
        ));
    }
    Ok(())
}

/// A copy of `K_{a,b,c}`: three disjoint classes of sizes `a`, `b`, `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KCopy {
    classes: [u128; 3],
}

impl KCopy {
    pub fn from_masks(classes: [u128; 3]) -> Self {
        KCopy { classes }
    }

    /// Builds a copy from explicit classes, putting equal-sized classes in
    /// canonical order (by smallest element).
    pub fn from_parts(spec: &KSpec, parts: [&[Vertex]; 3]) -> Result<Self> {
        let sizes = spec.sizes();
        let mut classes = [0u128; 3];
        for i in 0..3 {
            if parts[i].len() != sizes[i] {
                return Err(Error::invalid(format!(
                    "class {i} has {} vertices, expected {}",
                    parts[i].len(),
                    sizes[i]
                )));
            }
            if parts[i].iter().any(|&v| v >= MAX_SOLVER_VERTICES) {
                return Err(Error::invalid("vertex label too large for a copy"));
            }
            classes[i] = mask_of(parts[i]);
            if popcount(classes[i]) != sizes[i] {
                return Err(Error::invalid("repeated vertex inside a class"));
            }
        }
        if classes[0] & classes[1] != 0 || classes[0] & classes[2] != 0 || classes[1] & classes[2] != 0
        {
            return Err(Error::invalid("classes of a copy must be disjoint"));
        }
        Ok(KCopy { classes }.canonical(spec))
    }

    fn canonical(mut self, spec: &KSpec) -> Self {
        let low = |m: u128| m.trailing_zeros();
        if spec.b == spec.c && low(self.classes[1]) > low(self.classes[2]) {
            self.classes.swap(1, 2);
        }
        if spec.a == spec.b && low(self.classes[0]) > low(self.classes[1]) {
            self.classes.swap(0, 1);
        }
        if spec.b == spec.c && low(self.classes[1]) > low(self.classes[2]) {
            self.classes.swap(1, 2);
        }
        self
    }

    pub fn class_mask(&self, i: usize) -> u128 {
        self.classes[i]
    }

    pub fn class(&self, i: usize) -> Vec<Vertex> {
        bits(self.classes[i]).collect()
    }

    pub fn mask(&self) -> u128 {
        self.classes[0] | self.classes[1] | self.classes[2]
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        bits(self.mask()).collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < 128 && self.mask() & bit(v) != 0
    }

    /// Checks directly that every cross triple is an edge of `h`.
    pub fn is_copy_in(&self, h: &Hypergraph3) -> bool {
        if h.n() < 128 && self.mask() >> h.n() != 0 {
            return false;
        }
        bits(self.classes[0]).all(|x| {
            bits(self.classes[1])
                .all(|y| bits(self.classes[2]).all(|z| h.has_edge(x, y, z)))
        })
    }
}

/// Vertex-disjoint copies of `K_{a,b,c}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tiling {
    copies: Vec<KCopy>,
}

impl Tiling {
    pub fn new() -> Self {
        Tiling::default()
    }

    /// Fails if the copies are not pairwise disjoint.
    pub fn from_copies(copies: Vec<KCopy>) -> Result<Self> {
        let mut t = Tiling::new();
        for c in copies {
            t.push(c)?;
        }
        Ok(t)
    }

    pub fn push(&mut self, c: KCopy) -> Result<()> {
        if self.covered_mask() & c.mask() != 0 {
            return Err(Error::invalid("copies of a tiling must be disjoint"));
        }
        self.copies.push(c);
        Ok(())
    }

    pub fn extend(&mut self, other: Tiling) -> Result<()> {
        for c in other.copies {
            self.push(c)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn copies(&self) -> &[KCopy] {
        &self.copies
    }

    pub fn covered_mask(&self) -> u128 {
        self.copies.iter().fold(0, |m, c| m | c.mask())
    }

    pub fn covered(&self) -> Vec<Vertex> {
        bits(self.covered_mask()).collect()
    }

    pub fn covered_count(&self) -> usize {
        popcount(self.covered_mask())
    }

    /// True if every copy is a copy in `h` and the copies are disjoint.
    pub fn is_valid_in(&self, h: &Hypergraph3) -> bool {
        let mut seen = 0u128;
        for c in &self.copies {
            if seen & c.mask() != 0 || !c.is_copy_in(h) {
                return false;
            }
            seen |= c.mask();
        }
        true
    }
}

/// `N(x,y)` as bitmasks for every ordered pair of a host.
#[derive(Clone, Debug)]
pub struct PairIndex {
    n: usize,
    masks: Vec<u128>,
}

impl PairIndex {
    pub fn new(h: &Hypergraph3) -> Result<Self> {
        check_solver_size(h.n())?;
        let n = h.n();
        let mut masks = vec![0u128; n * n];
        for e in h.edges() {
            let [x, y, z] = *e;
            for (p, q, r) in [(x, y, z), (x, z, y), (y, z, x)] {
                masks[p * n + q] |= bit(r);
                masks[q * n + p] |= bit(r);
            }
        }
        Ok(PairIndex { n, masks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn link(&self, x: Vertex, y: Vertex) -> u128 {
        self.masks[x * self.n + y]
    }
}

/// Restrictions for copy enumeration.
#[derive(Clone, Copy, Debug)]
pub struct CopyQuery {
    /// Allowed vertices for the `a`-, `b`- and `c`-class respectively.
    pub classes: [u128; 3],
    /// Report each copy once up to permuting equal-sized classes. Only
    /// meaningful when the allowed sets of equal-sized classes coincide.
    pub canonical: bool,
    /// Only copies containing this vertex.
    pub through: Option<Vertex>,
}

impl CopyQuery {
    pub fn all(n: usize) -> Self {
        CopyQuery::within(full_mask(n))
    }

    pub fn within(mask: u128) -> Self {
        CopyQuery {
            classes: [mask; 3],
            canonical: true,
            through: None,
        }
    }

    pub fn through(n: usize, v: Vertex) -> Self {
        CopyQuery {
            through: Some(v),
            ..CopyQuery::all(n)
        }
    }

    /// Class `i` must come from `sets[i]`; no symmetry reduction.
    pub fn tripartite(sets: [u128; 3]) -> Self {
        CopyQuery {
            classes: sets,
            canonical: false,
            through: None,
        }
    }
}

struct Enumerator<'a, F> {
    pairs: &'a PairIndex,
    sizes: [usize; 3],
    canon_ab: bool,
    canon_bc: bool,
    q: CopyQuery,
    good_y: Vec<u128>,
    f: F,
}

impl<F: FnMut(&KCopy) -> ControlFlow<()>> Enumerator<'_, F> {
    fn run(&mut self) -> ControlFlow<()> {
        let n = self.pairs.n;
        let zc = self.q.classes[2];
        // y is usable with x only if N(x,y) can still supply the c-class
        self.good_y = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| popcount(self.pairs.link(x, y) & zc) >= self.sizes[2])
                    .fold(0u128, |m, y| m | bit(y))
            })
            .collect();
        let ycand = self.q.classes[1];
        self.pick_x(self.q.classes[0], self.sizes[0], 0, ycand)
    }

    fn pick_x(&mut self, avail: u128, need: usize, x: u128, ycand: u128) -> ControlFlow<()> {
        if need == 0 {
            let mut ycand = ycand & !x;
            if self.canon_ab {
                ycand &= !(bit(x.trailing_zeros() as usize + 1) - 1);
            }
            if let Some(v) = self.q.through {
                if x & bit(v) == 0 && ycand & bit(v) == 0 && self.q.classes[2] & bit(v) == 0 {
                    return ControlFlow::Continue(());
                }
            }
            let zmask = self.q.classes[2] & !x;
            return self.pick_y(ycand, self.sizes[1], x, 0, zmask);
        }
        if popcount(ycand & !x) < self.sizes[1] {
            return ControlFlow::Continue(());
        }
        let mut rest = avail;
        while popcount(rest) >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.pick_x(rest, need - 1, x | bit(v), ycand & self.good_y[v])?;
        }
        ControlFlow::Continue(())
    }

    fn pick_y(&mut self, avail: u128, need: usize, x: u128, y: u128, zmask: u128) -> ControlFlow<()> {
        if popcount(zmask & !y) < self.sizes[2] {
            return ControlFlow::Continue(());
        }
        if need == 0 {
            let mut zc = zmask & !y;
            if self.canon_bc {
                zc &= !(bit(y.trailing_zeros() as usize + 1) - 1);
            }
            return match self.q.through {
                Some(v) if (x | y) & bit(v) == 0 => {
                    if zc & bit(v) == 0 {
                        ControlFlow::Continue(())
                    } else {
                        self.pick_z(zc & !bit(v), self.sizes[2] - 1, x, y, bit(v))
                    }
                }
                _ => self.pick_z(zc, self.sizes[2], x, y, 0),
            };
        }
        let mut rest = avail;
        while popcount(rest) >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut z = zmask;
            for xv in bits(x) {
                z &= self.pairs.link(xv, v);
            }
            self.pick_y(rest, need - 1, x, y | bit(v), z)?;
        }
        ControlFlow::Continue(())
    }

    fn pick_z(&mut self, avail: u128, need: usize, x: u128, y: u128, z: u128) -> ControlFlow<()> {
        if need == 0 {
            return (self.f)(&KCopy::from_masks([x, y, z]));
        }
        let mut rest = avail;
        while popcount(rest) >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.pick_z(rest, need - 1, x, y, z | bit(v))?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `f` on every copy of `K_{a,b,c}` matching `q`, in a deterministic
/// order; stops early when `f` breaks.
pub fn for_each_copy<F>(pairs: &PairIndex, spec: &KSpec, q: &CopyQuery, f: F) -> ControlFlow<()>
where
    F: FnMut(&KCopy) -> ControlFlow<()>,
{
    let mut e = Enumerator {
        pairs,
        sizes: spec.sizes(),
        canon_ab: q.canonical && spec.a == spec.b,
        canon_bc: q.canonical && spec.b == spec.c,
        q: *q,
        good_y: Vec::new(),
        f,
    };
    e.run()
}

/// First copy matching `q`, if any.
pub fn find_copy(pairs: &PairIndex, spec: &KSpec, q: &CopyQuery) -> Option<KCopy> {
    let mut found = None;
    let _ = for_each_copy(pairs, spec, q, |c| {
        found = Some(*c);
        ControlFlow::Break(())
    });
    found
}

/// Upper bound on the number of copies in any host on `n` vertices:
/// `C(n,a)·C(n−a,b)·C(n−a−b,c)`, saturating.
pub fn copy_count_estimate(n: usize, spec: &KSpec) -> u128 {
    let n = n as u128;
    let (a, b, c) = (spec.a as u128, spec.b as u128, spec.c as u128);
    if n < a + b + c {
        return 0;
    }
    binom_saturating(n, a)
        .saturating_mul(binom_saturating(n - a, b))
        .saturating_mul(binom_saturating(n - a - b, c))
}

fn collect_copies(pairs: &PairIndex, spec: &KSpec, q: &CopyQuery, limit: u128) -> Result<Vec<KCopy>> {
    let mut out = Vec::new();
    let flow = for_each_copy(pairs, spec, q, |c| {
        if out.len() as u128 >= limit {
            return ControlFlow::Break(());
        }
        out.push(*c);
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::size_limit("number of enumerated copies", limit));
    }
    Ok(out)
}

/// All copies of `K_{a,b,c}` in `h`, each once.
pub fn enumerate_copies(h: &Hypergraph3, spec: &KSpec, limits: &Limits) -> Result<Vec<KCopy>> {
    let pairs = PairIndex::new(h)?;
    collect_copies(&pairs, spec, &CopyQuery::all(h.n()), limits.max_copies)
}

/// All copies inside the vertex set `mask`.
pub fn enumerate_copies_within(
    h: &Hypergraph3,
    spec: &KSpec,
    mask: u128,
    limits: &Limits,
) -> Result<Vec<KCopy>> {
    let pairs = PairIndex::new(h)?;
    collect_copies(&pairs, spec, &CopyQuery::within(mask), limits.max_copies)
}

/// All copies containing `v`.
pub fn copies_through(h: &Hypergraph3, spec: &KSpec, v: Vertex, limits: &Limits) -> Result<Vec<KCopy>> {
    if v >= h.n() {
        return Err(Error::invalid(format!("vertex {v} out of range")));
    }
    let pairs = PairIndex::new(h)?;
    collect_copies(&pairs, spec, &CopyQuery::through(h.n(), v), limits.max_copies)
}

pub fn count_copies(h: &Hypergraph3, spec: &KSpec, limits: &Limits) -> Result<u128> {
    let pairs = PairIndex::new(h)?;
    let mut count: u128 = 0;
    let flow = for_each_copy(&pairs, spec, &CopyQuery::all(h.n()), |_| {
        count += 1;
        if count > limits.max_copies {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if flow.is_break() {
        return Err(Error::size_limit("number of counted copies", limits.max_copies));
    }
    Ok(count)
}

struct Search<'a> {
    copies: &'a [KCopy],
    by_vertex: Vec<Vec<usize>>,
    k: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(n: usize, k: usize, copies: &'a [KCopy], budget: u64) -> Self {
        let mut by_vertex = vec![Vec::new(); n];
        for (i, c) in copies.iter().enumerate() {
            for v in bits(c.mask()) {
                by_vertex[v].push(i);
            }
        }
        Search {
            copies,
            by_vertex,
            k,
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.budget
    }

    fn tiling(&self, chosen: &[usize]) -> Tiling {
        Tiling {
            copies: chosen.iter().map(|&i| self.copies[i]).collect(),
        }
    }
}

struct Exhausted;

fn exact_cover(
    s: &mut Search<'_>,
    full: u128,
    covered: u128,
    chosen: &mut Vec<usize>,
    failed: &mut HashSet<u128>,
    deepest: &mut Vec<usize>,
) -> std::result::Result<bool, Exhausted> {
    if covered == full {
        return Ok(true);
    }
    if !s.tick() {
        return Err(Exhausted);
    }
    if chosen.len() > deepest.len() {
        deepest.clone_from(chosen);
    }
    if failed.contains(&covered) {
        return Ok(false);
    }
    // branch on the uncovered vertex with the fewest available copies
    let mut best: Option<(usize, usize)> = None;
    for v in bits(full & !covered) {
        let cnt = s.by_vertex[v]
            .iter()
            .filter(|&&i| s.copies[i].mask() & covered == 0)
            .count();
        if best.is_none_or(|(_, c)| cnt < c) {
            best = Some((v, cnt));
            if cnt <= 1 {
                break;
            }
        }
    }
    let (v, cnt) = best.expect("some vertex is uncovered");
    if cnt > 0 {
        let options: Vec<usize> = s.by_vertex[v]
            .iter()
            .copied()
            .filter(|&i| s.copies[i].mask() & covered == 0)
            .collect();
        for i in options {
            chosen.push(i);
            let m = s.copies[i].mask();
            if exact_cover(s, full, covered | m, chosen, failed, deepest)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    failed.insert(covered);
    Ok(false)
}

/// Decides whether `h` has a perfect `K_{a,b,c}`-tiling, returning one if so.
pub fn has_perfect_tiling(h: &Hypergraph3, spec: &KSpec, limits: &Limits) -> Result<Option<Tiling>> {
    check_solver_size(h.n())?;
    let n = h.n();
    if !n.is_multiple_of(spec.k_usize()) {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Tiling::new()));
    }
    let copies = enumerate_copies(h, spec, limits)?;
    let mut s = Search::new(n, spec.k_usize(), &copies, limits.solver_nodes);
    let mut chosen = Vec::new();
    let mut deepest = Vec::new();
    let mut failed = HashSet::new();
    match exact_cover(&mut s, full_mask(n), 0, &mut chosen, &mut failed, &mut deepest) {
        Ok(true) => Ok(Some(s.tiling(&chosen))),
        Ok(false) => Ok(None),
        Err(Exhausted) => Err(Error::SearchBudget {
            nodes: limits.solver_nodes,
            best: Box::new(s.tiling(&deepest)),
        }),
    }
}

fn greedy_packing(copies: &[KCopy], live: u128) -> Vec<usize> {
    let mut used = !live;
    let mut out = Vec::new();
    for (i, c) in copies.iter().enumerate() {
        if c.mask() & used == 0 {
            used |= c.mask();
            out.push(i);
        }
    }
    out
}

fn pack(
    s: &mut Search<'_>,
    live: u128,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) -> std::result::Result<(), Exhausted> {
    if !s.tick() {
        return Err(Exhausted);
    }
    // vertices outside every still-available copy can never be covered
    let mut usable = 0u128;
    for v in bits(live) {
        if usable & bit(v) != 0 {
            continue;
        }
        for &i in &s.by_vertex[v] {
            let m = s.copies[i].mask();
            if m & !live == 0 {
                usable |= m;
            }
        }
    }
    let live = live & usable;
    if chosen.len() + popcount(live) / s.k <= best.len() {
        return Ok(());
    }
    if live == 0 {
        best.clone_from(chosen);
        return Ok(());
    }
    let mut pick: Option<(usize, usize)> = None;
    for v in bits(live) {
        let cnt = s.by_vertex[v]
            .iter()
            .filter(|&&i| s.copies[i].mask() & !live == 0)
            .count();
        if pick.is_none_or(|(_, c)| cnt < c) {
            pick = Some((v, cnt));
        }
    }
    let (v, _) = pick.expect("live is nonempty");
    let options: Vec<usize> = s.by_vertex[v]
        .iter()
        .copied()
        .filter(|&i| s.copies[i].mask() & !live == 0)
        .collect();
    for i in options {
        chosen.push(i);
        pack(s, live & !s.copies[i].mask(), chosen, best)?;
        chosen.pop();
    }
    // v stays uncovered
    pack(s, live & !bit(v), chosen, best)
}

/// A maximum-cardinality `K_{a,b,c}`-tiling of `h`, optimal by exhausted
/// branch-and-bound search.
pub fn max_tiling(h: &Hypergraph3, spec: &KSpec, limits: &Limits) -> Result<Tiling> {
    check_solver_size(h.n())?;
    let copies = enumerate_copies(h, spec, limits)?;
    let n = h.n();
    let mut s = Search::new(n, spec.k_usize(), &copies, limits.solver_nodes);
    let mut best = greedy_packing(&copies, full_mask(n));
    // a perfect tiling, when one exists, is optimal and usually fast to find
    if best.len() * s.k < n && n.is_multiple_of(s.k) {
        if let Some(t) = has_perfect_tiling(h, spec, limits).ok().flatten() {
            return Ok(t);
        }
    }
    let mut chosen = Vec::new();
    match pack(&mut s, full_mask(n), &mut chosen, &mut best) {
        Ok(()) => Ok(s.tiling(&best)),
        Err(Exhausted) => Err(Error::SearchBudget {
            nodes: limits.solver_nodes,
            best: Box::new(s.tiling(&best)),
        }),
    }
}

/// Why the greedy stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyStop {
    /// The smallest residual set dropped below `ε·|V3|`.
    BelowThreshold,
    /// A residual set is too small for the next copy.
    InsufficientVertices,
    /// No copy of the required shape exists in the residual triple.
    Stalled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyStepKind {
    /// Three rotated copies forming a `K_{k,k,k}`.
    Kkkk,
    /// One copy taking `a`, `b`, `c` vertices from the residual sets in
    /// increasing order of size.
    Kabc,
    /// One copy taken where the `K_{k,k,k}` step no longer fits.
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub kind: GreedyStepKind,
    /// Residual sizes before the step, sorted ascending.
    pub before: [usize; 3],
    /// Residual sizes after the step, sorted ascending.
    pub after: [usize; 3],
    /// `|U1|/a >= |U2|/b >= |U3|/c` before and after the step.
    pub ratio_before: bool,
    pub ratio_after: bool,
}

#[derive(Clone, Debug)]
pub struct GreedyResult {
    pub tiling: Tiling,
    pub stop: GreedyStop,
    pub steps: Vec<GreedyStep>,
    /// Residual sizes at the stop, sorted ascending.
    pub residual: [usize; 3],
}

impl GreedyResult {
    pub fn leftover(&self) -> usize {
        self.residual.iter().sum()
    }

    pub fn stalled(&self) -> bool {
        self.stop == GreedyStop::Stalled
    }

    /// True if the size-ratio invariant survived every regular `K_{a,b,c}`
    /// step at which it held beforehand.
    pub fn invariant_kept(&self) -> bool {
        self.steps
            .iter()
            .filter(|s| s.kind == GreedyStepKind::Kabc)
            .all(|s| !s.ratio_before || s.ratio_after)
    }
}

fn ratio_chain(sizes: [usize; 3], spec: &KSpec) -> bool {
    let [u1, u2, u3] = sizes.map(|s| s as u64);
    u1 * spec.b >= u2 * spec.a && u2 * spec.c >= u3 * spec.b
}

/// Greedy `K_{a,b,c}`-tiling of the triple `(V1, V2, V3)`.
///
/// Requires `|V1| <= |V2| <= |V3|` and `|V1|/a >= |V2|/b >= |V3|/c`. Each round
/// sorts the residual sets `U1 <= U2 <= U3` by size and stops once
/// `|U1| < ε|V3|`. If `|U3| − |U1| <= c − a` it removes a `K_{k,k,k}` as three
/// rotated copies, otherwise one copy with `a`, `b`, `c` vertices from `U1`,
/// `U2`, `U3`. When the `K_{k,k,k}` no longer fits but one copy does, that
/// copy is taken instead.
pub fn greedy_regular_tiling(
    h: &Hypergraph3,
    v1: &[Vertex],
    v2: &[Vertex],
    v3: &[Vertex],
    spec: &KSpec,
    eps: &Rational,
) -> Result<GreedyResult> {
    let pairs = PairIndex::new(h)?;
    let sets = [v1, v2, v3];
    let mut union = 0u128;
    for s in sets {
        let m = mask_of(s);
        if s.iter().any(|&v| v >= h.n()) || popcount(m) != s.len() || union & m != 0 {
            return Err(Error::invalid("the three sets must be disjoint vertex sets of the host"));
        }
        union |= m;
    }
    let sizes = [v1.len(), v2.len(), v3.len()];
    if !(sizes[0] <= sizes[1] && sizes[1] <= sizes[2]) || !ratio_chain(sizes, spec) {
        return Err(Error::invalid(
            "need |V1| <= |V2| <= |V3| and |V1|/a >= |V2|/b >= |V3|/c",
        ));
    }
    if *eps <= rational::zero() {
        return Err(Error::invalid("ε must be positive"));
    }
    let threshold = *eps * rational::int(sizes[2] as i128);
    let [a, b, c] = spec.sizes();
    let mut residual = sets.map(mask_of);
    let mut tiling = Tiling::new();
    let mut steps = Vec::new();

    let stop = loop {
        let mut order = residual;
        order.sort_by_key(|m| popcount(*m));
        let before = order.map(popcount);
        if rational::int(before[0] as i128) < threshold {
            break GreedyStop::BelowThreshold;
        }
        let equal = before[2] - before[0] <= c - a;
        let kkk_fits = before[0] >= spec.k_usize();
        let (kind, shapes): (GreedyStepKind, Vec<[usize; 3]>) = if equal && kkk_fits {
            // class i of copy j is drawn from order[shape[j][i]]
            (GreedyStepKind::Kkkk, vec![[0, 1, 2], [2, 0, 1], [1, 2, 0]])
        } else if before[0] >= a && before[1] >= b && before[2] >= c {
            let kind = if equal {
                GreedyStepKind::Fallback
            } else {
                GreedyStepKind::Kabc
            };
            (kind, vec![[0, 1, 2]])
        } else {
            break GreedyStop::InsufficientVertices;
        };
        let mut local = order;
        let mut found = Vec::new();
        for shape in &shapes {
            let q = CopyQuery::tripartite(shape.map(|i| local[i]));
            match find_copy(&pairs, spec, &q) {
                Some(copy) => {
                    for (cls, &src) in shape.iter().enumerate() {
                        local[src] &= !copy.class_mask(cls);
                    }
                    found.push(copy.canonical(spec));
                }
                None => break,
            }
        }
        if found.len() < shapes.len() {
            break GreedyStop::Stalled;
        }
        for copy in found {
            tiling.push(copy)?;
        }
        for m in residual.iter_mut() {
            *m &= !tiling.covered_mask();
        }
        let mut after = residual.map(popcount);
        after.sort_unstable();
        steps.push(GreedyStep {
            kind,
            before,
            after,
            ratio_before: ratio_chain(before, spec),
            ratio_after: ratio_chain(after, spec),
        });
    };
    let mut rest = residual.map(popcount);
    rest.sort_unstable();
    Ok(GreedyResult {
        tiling,
        stop,
        steps,
        residual: rest,
    })
}

/// Adds `⌈2ρn⌉` new vertices `n, n+1, …` together with every triple that
/// meets the new set.
pub fn augment_universal(h: &Hypergraph3, rho: &Rational) -> Result<Hypergraph3> {
    if *rho < rational::zero() {
        return Err(Error::invalid("ρ must be nonnegative"));
    }
    let n = h.n();
    let extra = rational::ceil_count(&(*rho * rational::int(2 * n as i128))) as usize;
    let total = n + extra;
    let mut out = Hypergraph3::new(total);
    for e in h.edges() {
        out.add_edge(e[0], e[1], e[2])?;
    }
    for z in n..total {
        for x in 0..z {
            for y in x + 1..z {
                out.add_edge(x, y, z)?;
            }
        }
    }
    Ok(out)
}

/// Drops the copies of a tiling of an augmented host that meet vertices
/// `>= n`, giving a tiling of the original host.
pub fn restrict_tiling(t: &Tiling, n: usize) -> Tiling {
    let keep = full_mask(n.min(128));
    Tiling {
        copies: t
            .copies
            .iter()
            .copied()
            .filter(|c| c.mask() & !keep == 0)
            .collect(),
    }
}
