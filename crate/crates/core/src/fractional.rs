//! Fractional hom(K)-tilings: verification, the standard weighting, the
//! weight-boosting gadgets and conversion into integer tilings.
//!
//! A weighting `h` assigns `h(v,e) ∈ [0,1]` to vertex-edge pairs and must
//! satisfy: `h(v,e) = 0` unless `v ∈ e`; `h(v) = Σ_e h(v,e) <= 1`; and every
//! edge has a labeling `uvw` with `h(u,e) <= h(v,e) <= h(w,e)` and
//! `h(u,e)/a >= h(v,e)/b >= h(w,e)/c`.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Vertex, VertexPartition};
use crate::io::content_lines;
use crate::kspec::KSpec;
use crate::rational::{self, q, Rational};
use crate::tiler::{greedy_regular_tiling, GreedyStop, Tiling};

/// An exact-rational weighting of the vertex-edge pairs of a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalHomTiling {
    host: Hypergraph3,
    /// `(vertex, edge index) -> weight`; absent pairs weigh zero.
    weights: BTreeMap<(Vertex, usize), Rational>,
}

impl FractionalHomTiling {
    pub fn new(host: Hypergraph3) -> Self {
        FractionalHomTiling {
            host,
            weights: BTreeMap::new(),
        }
    }

    pub fn host(&self) -> &Hypergraph3 {
        &self.host
    }

    pub fn weights(&self) -> &BTreeMap<(Vertex, usize), Rational> {
        &self.weights
    }

    fn check_ref(&self, v: Vertex, e: usize) -> Result<()> {
        if v >= self.host.n() {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        if e >= self.host.edge_count() {
            return Err(Error::invalid(format!("edge index {e} out of range")));
        }
        Ok(())
    }

    /// Sets `h(v, e)`; zero removes the entry.
    pub fn set(&mut self, v: Vertex, e: usize, w: Rational) -> Result<()> {
        self.check_ref(v, e)?;
        if w.is_zero() {
            self.weights.remove(&(v, e));
        } else {
            self.weights.insert((v, e), w);
        }
        Ok(())
    }

    /// Adds `delta` to `h(v, e)`.
    pub fn add(&mut self, v: Vertex, e: usize, delta: Rational) -> Result<()> {
        let cur = self.get(v, e);
        self.set(v, e, cur + delta)
    }

    pub fn get(&self, v: Vertex, e: usize) -> Rational {
        self.weights.get(&(v, e)).copied().unwrap_or_else(Rational::zero)
    }

    /// Sets the weights of edge `{x,y,z}` to `w` in that vertex order.
    pub fn set_edge(&mut self, verts: [Vertex; 3], w: [Rational; 3]) -> Result<()> {
        let e = self
            .host
            .edge_id(verts[0], verts[1], verts[2])
            .ok_or_else(|| Error::invalid(format!("{verts:?} is not an edge")))?;
        for i in 0..3 {
            self.set(verts[i], e, w[i])?;
        }
        Ok(())
    }

    /// `h(v) = Σ_e h(v,e)`.
    pub fn vertex_total(&self, v: Vertex) -> Rational {
        self.weights
            .range((v, 0)..(v, usize::MAX))
            .map(|(_, w)| *w)
            .sum()
    }

    /// `w(h)`.
    pub fn total(&self) -> Rational {
        self.weights.values().copied().sum()
    }

    /// Smallest positive weight.
    pub fn hmin(&self) -> Option<Rational> {
        self.weights.values().copied().filter(|w| *w > Rational::zero()).min()
    }

    /// The same weighting on the host relabeled by `perm`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<FractionalHomTiling> {
        let host = self.host.relabel(perm)?;
        let weights = self
            .weights
            .iter()
            .map(|(&(v, e), &w)| ((perm[v], e), w))
            .collect();
        Ok(FractionalHomTiling { host, weights })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub weight: Rational,
    /// `None` when every weight is zero.
    pub hmin: Option<Rational>,
    pub violation: Option<String>,
}

fn labeling_ok(w: [Rational; 3], spec: &KSpec) -> bool {
    let (a, b, c) = (
        rational::int(spec.a as i128),
        rational::int(spec.b as i128),
        rational::int(spec.c as i128),
    );
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.iter().any(|p| {
        let (u, v, x) = (w[p[0]], w[p[1]], w[p[2]]);
        u <= v && v <= x && u / a >= v / b && v / b >= x / c
    })
}

/// Checks the three conditions of a fractional hom(K)-tiling exactly.
pub fn verify(ft: &FractionalHomTiling, spec: &KSpec) -> Result<Verification> {
    let h = &ft.host;
    for &(v, e) in ft.weights.keys() {
        ft.check_ref(v, e)?;
    }
    let weight = ft.total();
    let hmin = ft.hmin();
    let fail = |msg: String| {
        Ok(Verification {
            valid: false,
            weight,
            hmin,
            violation: Some(msg),
        })
    };
    for (&(v, e), w) in &ft.weights {
        if *w < Rational::zero() || *w > Rational::one() {
            return fail(format!("h({v}, e{e}) = {} lies outside [0, 1]", rational::to_string(w)));
        }
        if !h.edges()[e].contains(&v) {
            return fail(format!("condition (1): vertex {v} is not in edge e{e} but has weight"));
        }
    }
    for v in 0..h.n() {
        let t = ft.vertex_total(v);
        if t > Rational::one() {
            return fail(format!(
                "condition (2): h({v}) = {} exceeds 1",
                rational::to_string(&t)
            ));
        }
    }
    for (id, e) in h.edges().iter().enumerate() {
        let w = e.map(|v| ft.get(v, id));
        if !labeling_ok(w, spec) {
            return fail(format!(
                "condition (3): edge e{id} = {e:?} with weights ({}, {}, {}) admits no valid labeling",
                rational::to_string(&w[0]),
                rational::to_string(&w[1]),
                rational::to_string(&w[2])
            ));
        }
    }
    Ok(Verification {
        valid: true,
        weight,
        hmin,
        violation: None,
    })
}

fn standard_weight(spec: &KSpec) -> [Rational; 3] {
    let (a, b, c) = (spec.a as i128, spec.b as i128, spec.c as i128);
    [q(1, b * c), q(1, a * c), q(1, a * b)]
}

/// Classes `X = 0..a`, `Y = a..a+b`, `Z = a+b..k` shifted by `offset`.
fn classes(spec: &KSpec, offset: usize) -> [Vec<Vertex>; 3] {
    let [a, b, c] = spec.sizes();
    [
        (offset..offset + a).collect(),
        (offset + a..offset + a + b).collect(),
        (offset + a + b..offset + a + b + c).collect(),
    ]
}

fn add_copy(h: &mut Hypergraph3, cls: &[Vec<Vertex>; 3]) -> Result<()> {
    for &x in &cls[0] {
        for &y in &cls[1] {
            for &z in &cls[2] {
                h.add_edge(x, y, z)?;
            }
        }
    }
    Ok(())
}

fn standard_on(ft: &mut FractionalHomTiling, spec: &KSpec, cls: &[Vec<Vertex>; 3]) -> Result<()> {
    let w = standard_weight(spec);
    for &x in &cls[0] {
        for &y in &cls[1] {
            for &z in &cls[2] {
                ft.set_edge([x, y, z], w)?;
            }
        }
    }
    Ok(())
}

/// `K_{a,b,c}` on `0..k` with every edge weighted `(1/(bc), 1/(ac), 1/(ab))`
/// on its `(X, Y, Z)` vertices.
pub fn standard_weighting(spec: &KSpec) -> FractionalHomTiling {
    let cls = classes(spec, 0);
    let mut h = Hypergraph3::new(spec.k_usize());
    add_copy(&mut h, &cls).expect("classes are disjoint");
    let mut ft = FractionalHomTiling::new(h);
    standard_on(&mut ft, spec, &cls).expect("edges exist");
    ft
}

/// Proof cases for one copy plus two outside vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum L1Case {
    /// `uu'` has a neighbor in `Z`.
    Z,
    /// No neighbor in `Z`, one in `Y`, and `a < b`.
    YLess,
    /// No neighbor in `Z`, neighbors in `X` and `Y`, and `a = b`.
    YEqual,
}

impl L1Case {
    pub const ALL: [L1Case; 3] = [L1Case::Z, L1Case::YLess, L1Case::YEqual];

    pub fn label(&self) -> &'static str {
        match self {
            L1Case::Z => "z",
            L1Case::YLess => "y-a<b",
            L1Case::YEqual => "y-a=b",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        L1Case::ALL.into_iter().find(|c| c.label() == s)
    }

    pub fn applies(&self, spec: &KSpec) -> bool {
        spec.a < spec.c
            && match self {
                L1Case::Z => true,
                L1Case::YLess => spec.a < spec.b,
                L1Case::YEqual => spec.a == spec.b,
            }
    }
}

/// Proof cases for two copies plus one outside vertex `u`, named by the
/// link edges of `u` they use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum L2Case {
    /// `b < c`, link edge `z1 z2`.
    ZZ,
    /// `a < b < c`, link edge `z1 y2`, no `Z1Z2` link edges.
    ZY,
    /// `a < b < c`, link edges `y1 y2` and `z1 x2`, no `Z1Z2`, `Z1Y2`, `Y1Z2`.
    YYZX,
    /// `a = b < c`, link edges `z1 x2` and `z1' y2`; `same` means `z1 = z1'`.
    TwoZxZy { same: bool },
    /// `a = b < c`, link edges `z1 x2`, `x1 z2`, `y1 y2`.
    Cross,
    /// `a < b = c`, link edges `z1 z2` and `y1 x2`.
    C21,
    /// `a < b = c`, link edges `z1 z2` and `y1 y2`.
    C22,
    /// `a < b = c`, link edges `z1 z2` and `y1 z2'`; `same` means `z2 = z2'`.
    C23 { same: bool },
}

impl L2Case {
    pub const ALL: [L2Case; 10] = [
        L2Case::ZZ,
        L2Case::ZY,
        L2Case::YYZX,
        L2Case::TwoZxZy { same: false },
        L2Case::TwoZxZy { same: true },
        L2Case::Cross,
        L2Case::C21,
        L2Case::C22,
        L2Case::C23 { same: false },
        L2Case::C23 { same: true },
    ];

    pub fn label(&self) -> &'static str {
        match self {
            L2Case::ZZ => "1-zz",
            L2Case::ZY => "1.1-zy",
            L2Case::YYZX => "1.1-yy+zx",
            L2Case::TwoZxZy { same: false } => "1.2-two-zx-zy",
            L2Case::TwoZxZy { same: true } => "1.2-two-zx-zy:same",
            L2Case::Cross => "1.2-cross",
            L2Case::C21 => "2.1",
            L2Case::C22 => "2.2",
            L2Case::C23 { same: false } => "2.3",
            L2Case::C23 { same: true } => "2.3:same",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        L2Case::ALL.into_iter().find(|c| c.label() == s)
    }

    pub fn applies(&self, spec: &KSpec) -> bool {
        let (a, b, c) = (spec.a, spec.b, spec.c);
        a < c
            && match self {
                L2Case::ZZ => b < c,
                L2Case::ZY | L2Case::YYZX => a < b && b < c,
                L2Case::TwoZxZy { .. } | L2Case::Cross => a == b && b < c,
                L2Case::C21 | L2Case::C22 | L2Case::C23 { .. } => a < b && b == c,
            }
    }
}

impl fmt::Display for L1Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for L2Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug)]
pub struct GadgetResult {
    pub graph: Hypergraph3,
    pub tiling: FractionalHomTiling,
    pub weight: Rational,
    pub hmin: Option<Rational>,
    pub case_label: String,
    /// Number of triples through the outside vertices (`uu'v`, or `uvw` with
    /// `v ∈ K1`, `w ∈ K2`).
    pub family_triples: usize,
    /// The family's lower bound on that number.
    pub family_threshold: usize,
    /// The outside vertices: `[u, u']` for L1, `[u]` for L2.
    pub outside: Vec<Vertex>,
}

fn case_error(spec: &KSpec, label: &str) -> Error {
    if spec.a == spec.c {
        Error::NotApplicable(format!("gadgets need a < c, got {spec}"))
    } else {
        Error::invalid(format!("case {label} does not apply to {spec}"))
    }
}

fn finish(ft: FractionalHomTiling, label: &str, triples: usize, threshold: usize, outside: Vec<Vertex>) -> GadgetResult {
    GadgetResult {
        graph: ft.host.clone(),
        weight: ft.total(),
        hmin: ft.hmin(),
        case_label: label.to_string(),
        family_triples: triples,
        family_threshold: threshold,
        outside,
        tiling: ft,
    }
}

/// The member of `L1(K1, u, u')` used by the given proof case, with the
/// weighting from that case.
///
/// The host holds `K1` on `0..k` (classes `X`, `Y`, `Z` in order),
/// `u = k`, `u' = k + 1`, and exactly `a + 1` triples `uu'v`, chosen to
/// satisfy the case's premises.
pub fn gadget_l1(spec: &KSpec, case: L1Case) -> Result<GadgetResult> {
    if !case.applies(spec) {
        return Err(case_error(spec, case.label()));
    }
    let k = spec.k_usize();
    let (a, b, c) = (spec.a as i128, spec.b as i128, spec.c as i128);
    let cls = classes(spec, 0);
    let (u, u2) = (k, k + 1);
    let (x, y, z) = (cls[0][0], cls[1][0], cls[2][0]);
    let link: Vec<Vertex> = match case {
        L1Case::Z => std::iter::once(z).chain(cls[0].iter().copied()).collect(),
        L1Case::YLess => cls[1][..spec.a as usize + 1].to_vec(),
        L1Case::YEqual => cls[0].iter().copied().chain(std::iter::once(y)).collect(),
    };
    let mut h = Hypergraph3::new(k + 2);
    add_copy(&mut h, &cls)?;
    for &v in &link {
        h.add_edge(u, u2, v)?;
    }
    let mut ft = FractionalHomTiling::new(h);
    standard_on(&mut ft, spec, &cls)?;
    let std_w = standard_weight(spec);
    let sub = |ft: &mut FractionalHomTiling, d: [Rational; 3]| {
        ft.set_edge([x, y, z], [std_w[0] - d[0], std_w[1] - d[1], std_w[2] - d[2]])
    };
    match case {
        L1Case::Z => {
            ft.set_edge([z, u, u2], std_w)?;
            sub(&mut ft, [q(a, b * c * c), q(1, c * c), q(1, b * c)])?;
        }
        L1Case::YLess => {
            ft.set_edge([y, u, u2], std_w)?;
            sub(&mut ft, [q(a, b * b * c), q(1, b * c), q(1, b * b)])?;
        }
        L1Case::YEqual => {
            let half = [q(1, 2 * a * c), q(1, 2 * a * c), q(1, 2 * a * a)];
            ft.set_edge([x, u, u2], half)?;
            ft.set_edge([y, u, u2], half)?;
            ft.set_edge([x, y, z], half)?;
        }
    }
    Ok(finish(ft, case.label(), link.len(), spec.a as usize + 1, vec![u, u2]))
}

/// Family threshold for `L2`: `max{a² + 2a(b+c), (a+b)²} + 1`.
pub fn l2_threshold(spec: &KSpec) -> usize {
    let (a, b, c) = (spec.a, spec.b, spec.c);
    ((a * a + 2 * a * (b + c)).max((a + b) * (a + b)) + 1) as usize
}

/// The member of `L2(K1, K2, u)` used by the given proof case, with the
/// weighting from that case.
///
/// `K1` lives on `0..k`, `K2` on `k..2k`, `u = 2k`. The link of `u` holds
/// the edges the case uses, then further `K1 × K2` pairs (skipping those the
/// case excludes) until it has exactly the family threshold of pairs.
pub fn gadget_l2(spec: &KSpec, case: L2Case) -> Result<GadgetResult> {
    if !case.applies(spec) {
        return Err(case_error(spec, case.label()));
    }
    let k = spec.k_usize();
    let (a, b, c) = (spec.a as i128, spec.b as i128, spec.c as i128);
    let lam = q(1, a * b * c);
    let zero = Rational::zero();
    let k1 = classes(spec, 0);
    let k2 = classes(spec, k);
    let u = 2 * k;
    let second = |v: &Vec<Vertex>| if v.len() > 1 { v[1] } else { v[0] };
    let (x1, y1, z1) = (k1[0][0], k1[1][0], k1[2][0]);
    let (x2, y2, z2) = (k2[0][0], k2[1][0], k2[2][0]);
    let (x1p, y1p) = (second(&k1[0]), second(&k1[1]));
    let (z1p, z2p, y2p) = (second(&k1[2]), second(&k2[2]), second(&k2[1]));

    // u-edges as (vertex order, weights), reductions as (K-edge, deltas)
    type Assign = ([Vertex; 3], [Rational; 3]);
    let ac = q(a, c) * lam;
    let bc = q(b, c) * lam;
    let (link, forbidden, assign, reduce): (Vec<(Vertex, Vertex)>, Vec<(usize, usize)>, Vec<Assign>, Vec<Assign>) =
        match case {
            L2Case::ZZ => (
                vec![(z1, z2)],
                vec![],
                vec![([u, z1, z2], [lam, lam, lam])],
                vec![([x1, y1, z1], [zero, zero, lam]), ([x2, y2, z2], [zero, zero, lam])],
            ),
            L2Case::ZY => (
                vec![(z1, y2)],
                vec![(2, 2)],
                vec![([y2, z1, u], [ac, bc, lam])],
                vec![
                    ([x1, y1, z1], [zero, zero, bc]),
                    ([x2, y2, z2], [zero, ac, q(a, b) * lam]),
                ],
            ),
            L2Case::YYZX => (
                vec![(y1, y2), (z1, x2)],
                vec![(2, 2), (2, 1), (1, 2)],
                vec![([y1, y2, u], [bc, bc, lam]), ([x2, u, z1], [ac, bc, lam])],
                vec![([x1, y1, z1], [zero, bc, lam]), ([x2, y2, z2], [ac, bc, lam])],
            ),
            L2Case::TwoZxZy { same } => {
                let z1b = if same { z1 } else { z1p };
                (
                    vec![(z1, x2), (z1b, y2)],
                    vec![(2, 2)],
                    vec![([z1, x2, u], [ac, ac, lam]), ([z1b, y2, u], [ac, ac, lam])],
                    vec![
                        ([x1, y1, z1], [zero, zero, ac]),
                        ([x1p, y1p, z1b], [zero, zero, ac]),
                        ([x2, y2, z2], [ac, ac, lam]),
                    ],
                )
            }
            L2Case::Cross => (
                vec![(z1, x2), (x1, z2), (y1, y2)],
                vec![(2, 2), (2, 1), (1, 2)],
                vec![
                    ([u, x2, z1], [ac, ac, lam]),
                    ([u, x1, z2], [ac, ac, lam]),
                    ([y1, y2, u], [ac, ac, lam]),
                ],
                vec![([x1, y1, z1], [ac, ac, lam]), ([x2, y2, z2], [ac, ac, lam])],
            ),
            L2Case::C21 => (
                vec![(z1, z2), (y1, x2)],
                vec![],
                vec![([u, z1, z2], [lam, lam, lam]), ([x2, y1, u], [ac, lam, lam])],
                vec![([x1, y1, z1], [zero, lam, lam]), ([x2, y2, z2], [ac, lam, lam])],
            ),
            L2Case::C22 => (
                vec![(z1, z2), (y1, y2)],
                vec![],
                vec![([u, z1, z2], [lam, lam, lam]), ([u, y1, y2], [lam, lam, lam])],
                vec![([x1, y1, z1], [zero, lam, lam]), ([x2, y2, z2], [zero, lam, lam])],
            ),
            L2Case::C23 { same } => {
                let z2b = if same { z2 } else { z2p };
                // with z2 = z2' the two K2 edges must still differ, so use y2'
                let y2b = if same { y2p } else { y2 };
                (
                    vec![(z1, z2), (y1, z2b)],
                    vec![],
                    vec![([z2, u, z1], [ac, lam, lam]), ([z2b, u, y1], [ac, lam, lam])],
                    vec![
                        ([x1, y1, z1], [zero, lam, lam]),
                        ([x2, y2, z2], [zero, ac, ac]),
                        ([x2, y2b, z2b], [zero, ac, ac]),
                    ],
                )
            }
        };

    let class_of = |v: Vertex| -> usize {
        let local = v % k;
        if local < spec.a as usize {
            0
        } else if local < (spec.a + spec.b) as usize {
            1
        } else {
            2
        }
    };
    let threshold = l2_threshold(spec);
    let mut h = Hypergraph3::new(2 * k + 1);
    add_copy(&mut h, &k1)?;
    add_copy(&mut h, &k2)?;
    let mut triples = 0;
    for &(v, w) in &link {
        if h.add_edge(u, v, w)? {
            triples += 1;
        }
    }
    'fill: for v in 0..k {
        for w in k..2 * k {
            if triples >= threshold {
                break 'fill;
            }
            if forbidden.contains(&(class_of(v), class_of(w))) {
                continue;
            }
            if h.add_edge(u, v, w)? {
                triples += 1;
            }
        }
    }
    if triples < threshold {
        return Err(Error::invalid(format!(
            "case {} cannot reach the family threshold for {spec}",
            case.label()
        )));
    }

    let mut ft = FractionalHomTiling::new(h);
    standard_on(&mut ft, spec, &k1)?;
    standard_on(&mut ft, spec, &k2)?;
    for (verts, w) in assign {
        ft.set_edge(verts, w)?;
    }
    for (verts, d) in reduce {
        let e = ft
            .host
            .edge_id(verts[0], verts[1], verts[2])
            .ok_or_else(|| Error::invalid("reduced edge is missing"))?;
        for i in 0..3 {
            ft.add(verts[i], e, -d[i])?;
        }
    }
    Ok(finish(ft, case.label(), triples, threshold, vec![u]))
}

/// Per-edge record of a conversion.
#[derive(Clone, Debug)]
pub struct EdgeConversion {
    /// Edge of the cluster hypergraph.
    pub edge: [Vertex; 3],
    /// Sizes of the carved subsets, in the greedy's order.
    pub sizes: [usize; 3],
    pub covered: usize,
    pub stop: Option<GreedyStop>,
}

#[derive(Clone, Debug)]
pub struct Conversion {
    pub tiling: Tiling,
    pub edges: Vec<EdgeConversion>,
    /// `(1 − 2bc³ε)·w(h)·n/t`, the coverage guaranteed for regular hosts.
    pub bound: Rational,
    /// Some per-edge greedy run stalled.
    pub stalled: bool,
}

/// Turns a fractional hom(K)-tiling of a cluster hypergraph into a
/// `K`-tiling of the host.
///
/// Cluster vertex `i` of `r` stands for part `V_{i+1}` of `p`. For every
/// edge with three positive weights, disjoint subsets of size
/// `⌊h(v,e)·ℓ⌋` are carved from the clusters (trimmed if flooring breaks the
/// size ratios) and tiled greedily with `ε' = bc²ε`.
pub fn convert_fractional(
    h: &Hypergraph3,
    p: &VertexPartition,
    r: &Hypergraph3,
    ft: &FractionalHomTiling,
    spec: &KSpec,
    eps: &Rational,
) -> Result<Conversion> {
    if ft.host() != r {
        return Err(Error::invalid("the weighting must live on the cluster hypergraph"));
    }
    if r.n() != p.r() {
        return Err(Error::invalid("cluster hypergraph and partition disagree on t"));
    }
    let ver = verify(ft, spec)?;
    if !ver.valid {
        return Err(Error::invalid(format!(
            "not a fractional hom(K)-tiling: {}",
            ver.violation.unwrap_or_default()
        )));
    }
    let t = r.n();
    let ell = if t == 0 { 0 } else { p.part(1).len() };
    if (1..=t).any(|i| p.part(i).len() != ell) {
        return Err(Error::invalid("clusters must be equal-sized"));
    }
    let (a, b, c) = (spec.a as i128, spec.b as i128, spec.c as i128);
    let eps2 = *eps * rational::int(b * c * c);
    let mut next = vec![0usize; t];
    let mut tiling = Tiling::new();
    let mut edges = Vec::new();
    let mut stalled = false;

    for (id, e) in r.edges().iter().enumerate() {
        let w = e.map(|v| ft.get(v, id));
        if w.iter().any(|x| x.is_zero()) {
            continue;
        }
        let mut carve: Vec<(Rational, Vertex, usize)> = (0..3)
            .map(|i| {
                let size = rational::floor(&(w[i] * rational::int(ell as i128))) as usize;
                (w[i], e[i], size)
            })
            .collect();
        // order by weight so the sizes follow the hom labeling
        carve.sort_by(|x, y| x.0.cmp(&y.0).then(x.2.cmp(&y.2)));
        let mut sizes = [carve[0].2, carve[1].2, carve[2].2];
        sizes[1] = sizes[1].min((b * sizes[0] as i128 / a) as usize);
        sizes[2] = sizes[2].min((c * sizes[1] as i128 / b) as usize);
        let mut sets: Vec<Vec<Vertex>> = Vec::with_capacity(3);
        for (i, &(_, v, _)) in carve.iter().enumerate() {
            let cluster = p.part(v + 1);
            let start = next[v];
            if start + sizes[i] > cluster.len() {
                return Err(Error::invalid(format!("cluster {v} is over-subscribed")));
            }
            sets.push(cluster[start..start + sizes[i]].to_vec());
            next[v] += sizes[i];
        }
        let edge = [carve[0].1, carve[1].1, carve[2].1];
        if sizes.contains(&0) {
            edges.push(EdgeConversion {
                edge,
                sizes,
                covered: 0,
                stop: None,
            });
            continue;
        }
        let g = greedy_regular_tiling(h, &sets[0], &sets[1], &sets[2], spec, &eps2)?;
        stalled |= g.stalled();
        let covered = g.tiling.covered_count();
        tiling.extend(g.tiling)?;
        edges.push(EdgeConversion {
            edge,
            sizes,
            covered,
            stop: Some(g.stop),
        });
    }
    let n = h.n() as i128;
    let bound = if t == 0 {
        Rational::zero()
    } else {
        (rational::int(1) - rational::int(2 * b * c * c * c) * *eps) * ver.weight * q(n, t as i128)
    };
    Ok(Conversion {
        tiling,
        edges,
        bound,
        stalled,
    })
}

/// Parses `.fht` weights (`v e_index num/den` per line) for `host`.
pub fn parse_fht(text: &str, host: Hypergraph3) -> Result<FractionalHomTiling> {
    let mut ft = FractionalHomTiling::new(host);
    for (lno, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let perr = |msg: String| Error::Parse { line: lno, msg };
        let [v, e, w] = toks[..] else {
            return Err(perr("expected `v e_index weight`".into()));
        };
        let v: Vertex = v.parse().map_err(|_| perr(format!("bad vertex {v:?}")))?;
        let e: usize = e.parse().map_err(|_| perr(format!("bad edge index {e:?}")))?;
        let w = rational::parse(w).map_err(|err| perr(err.to_string()))?;
        if ft.weights.contains_key(&(v, e)) {
            return Err(perr(format!("pair ({v}, {e}) listed twice")));
        }
        ft.check_ref(v, e).map_err(|err| perr(err.to_string()))?;
        ft.set(v, e, w)?;
    }
    Ok(ft)
}

pub fn format_fht(ft: &FractionalHomTiling) -> String {
    let mut out = String::new();
    for (&(v, e), w) in &ft.weights {
        let _ = writeln!(out, "{v} {e} {}", rational::to_string(w));
    }
    out
}
