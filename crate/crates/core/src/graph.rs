//! The 3-graph data model and its elementary statistics.

use std::collections::{BTreeSet, HashMap};


use crate::error::{Error, Result};
use crate::rational::binom;

pub type Vertex = usize;

/// A 3-element vertex set, always stored sorted ascending.
pub type Edge = [Vertex; 3];

pub fn sorted_edge(u: Vertex, v: Vertex, w: Vertex) -> Edge {
    let mut e = [u, v, w];
    e.sort_unstable();
    e
}

/// A 3-uniform hypergraph on vertices `0..n`.
///
/// Edges keep their insertion order (files and edge-indexed weightings refer
/// to it) alongside a hash index for membership and a per-vertex incidence
/// list.
#[derive(Clone, Debug, Default)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph3 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph3 {}

impl Hypergraph3 {
    pub fn new(n: usize) -> Self {
        Hypergraph3 {
            n,
            edges: Vec::new(),
            index: HashMap::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from a list of triples; unsorted triples are
    /// canonicalized, duplicates and degenerate triples are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut h = Hypergraph3::new(n);
        for e in edges {
            if !h.add_edge(e[0], e[1], e[2])? {
                return Err(Error::invalid(format!("duplicate edge {e:?}")));
            }
        }
        Ok(h)
    }

    /// The complete 3-graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut h = Hypergraph3::new(n);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    h.push_unchecked([i, j, k]);
                }
            }
        }
        h
    }

    /// The complete 3-partite 3-graph with the given (disjoint) parts.
    pub fn complete_tripartite(n: usize, parts: [&[Vertex]; 3]) -> Result<Self> {
        let mut h = Hypergraph3::new(n);
        for &x in parts[0] {
            for &y in parts[1] {
                for &z in parts[2] {
                    h.add_edge(x, y, z)?;
                }
            }
        }
        Ok(h)
    }

    /// Adds the edge `{u, v, w}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, w: Vertex) -> Result<bool> {
        let e = sorted_edge(u, v, w);
        if e[0] == e[1] || e[1] == e[2] {
            return Err(Error::invalid(format!("edge {e:?} repeats a vertex")));
        }
        if e[2] >= self.n {
            return Err(Error::invalid(format!(
                "edge {e:?} out of range for n = {}",
                self.n
            )));
        }
        if self.index.contains_key(&e) {
            return Ok(false);
        }
        self.push_unchecked(e);
        Ok(true)
    }

    fn push_unchecked(&mut self, e: Edge) {
        let id = self.edges.len();
        self.edges.push(e);
        self.index.insert(e, id);
        for &v in &e {
            self.incidence[v].push(id);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<Edge> {
        self.edges.get(id).copied()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex, w: Vertex) -> Option<usize> {
        self.index.get(&sorted_edge(u, v, w)).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex, w: Vertex) -> bool {
        if u == v || v == w || u == w {
            return false;
        }
        self.index.contains_key(&sorted_edge(u, v, w))
    }

    /// Edge ids incident to `v`.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v]
    }

    /// Number of edges containing all of `s`, for `|s|` in {1, 2}.
    pub fn degree(&self, s: &[Vertex]) -> Result<usize> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        match *s {
            [v] => Ok(self.incidence[v].len()),
            [u, v] if u != v => Ok(self.codegree(u, v)),
            _ => Err(Error::invalid(format!(
                "degree is defined for 1- and 2-sets of distinct vertices, got {s:?}"
            ))),
        }
    }

    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn codegree(&self, u: Vertex, v: Vertex) -> usize {
        let (a, b) = if self.incidence[u].len() <= self.incidence[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.incidence[a]
            .iter()
            .filter(|&&id| self.edges[id].contains(&b))
            .count()
    }

    /// All positive codegrees, keyed by the sorted pair.
    pub fn codegrees(&self) -> HashMap<(Vertex, Vertex), usize> {
        let mut map = HashMap::new();
        for e in &self.edges {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                *map.entry((e[i], e[j])).or_insert(0) += 1;
            }
        }
        map
    }

    /// δ₁(H); zero for the graph without vertices.
    pub fn min_vertex_degree(&self) -> usize {
        (0..self.n).map(|v| self.vertex_degree(v)).min().unwrap_or(0)
    }

    /// δ₂(H) over all pairs of distinct vertices.
    pub fn min_codegree(&self) -> usize {
        if self.n < 2 {
            return 0;
        }
        let co = self.codegrees();
        let mut best = usize::MAX;
        for u in 0..self.n {
            for v in u + 1..self.n {
                best = best.min(co.get(&(u, v)).copied().unwrap_or(0));
            }
        }
        best
    }

    /// Pairs contained in at least one edge.
    pub fn shadow(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut s = BTreeSet::new();
        for e in &self.edges {
            s.insert((e[0], e[1]));
            s.insert((e[0], e[2]));
            s.insert((e[1], e[2]));
        }
        s
    }

    /// The subgraph induced on `vertices`, relabeled to `0..vertices.len()`
    /// in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Hypergraph3 {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Hypergraph3::new(vertices.len());
        let mut seen = Vec::new();
        for &v in vertices {
            for &id in &self.incidence[v] {
                let e = self.edges[id];
                if e.iter().all(|&x| pos[x] != usize::MAX) && e[0] == v {
                    seen.push(sorted_edge(pos[e[0]], pos[e[1]], pos[e[2]]));
                }
            }
        }
        seen.sort_unstable();
        for e in seen {
            h.push_unchecked(e);
        }
        h
    }

    /// Applies the vertex bijection `perm` (old label `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Hypergraph3> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from n"));
        }
        let mut h = Hypergraph3::new(self.n);
        for e in &self.edges {
            h.add_edge(perm[e[0]], perm[e[1]], perm[e[2]])?;
        }
        Ok(h)
    }

    /// Number of triples of `0..n`; the maximum possible edge count.
    pub fn max_edges(&self) -> u128 {
        binom(self.n as u128, 3)
    }
}

/// Result of evaluating the shadow bound function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShadowBound {
    pub value: f64,
    /// Whether `d` lies in `[1/4, (47 - 5√57)/24]`, the range on which the bound is known to hold.
    pub in_range: bool,
}

/// Upper end of the interval on which the shadow bound holds.
pub fn shadow_bound_upper() -> f64 {
    (47.0 - 5.0 * 57f64.sqrt()) / 24.0
}

/// `g(d) = 4√d − 2d − 1`, the guaranteed shadow density of a 3-graph with
/// minimum vertex degree `d·C(n,2)`. Values outside the valid interval are
/// still evaluated and flagged.
pub fn shadow_bound(d: f64) -> Result<ShadowBound> {
    if !(d >= 0.0) || !d.is_finite() {
        return Err(Error::invalid(format!("shadow bound needs d >= 0, got {d}")));
    }
    Ok(ShadowBound {
        value: 4.0 * d.sqrt() - 2.0 * d - 1.0,
        in_range: (0.25..=shadow_bound_upper()).contains(&d),
    })
}

/// An ordered vertex partition `V_0, V_1, …, V_r` of a host on `0..n`.
/// `V_0` is the exceptional part and may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<Vertex>>,
}

impl VertexPartition {
    /// `parts[0]` is `V_0`. Every vertex of `0..n` must appear exactly once.
    pub fn new(n: usize, parts: Vec<Vec<Vertex>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a partition needs at least V_0"));
        }
        let mut owner = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= n {
                    return Err(Error::invalid(format!("vertex {v} out of range")));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::invalid(format!(
                        "vertex {v} in parts {} and {i}",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::invalid(format!("vertex {v} is not assigned")));
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(VertexPartition { parts })
    }

    /// Partition with empty `V_0` and the given non-exceptional parts.
    pub fn without_exceptional(n: usize, parts: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut all = vec![Vec::new()];
        all.extend(parts);
        VertexPartition::new(n, all)
    }

    pub fn exceptional(&self) -> &[Vertex] {
        &self.parts[0]
    }

    /// Number of non-exceptional parts `r`.
    pub fn r(&self) -> usize {
        self.parts.len() - 1
    }

    /// Part `V_i`, `i` in `0..=r`.
    pub fn part(&self, i: usize) -> &[Vertex] {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Map from vertex to part index (`0` for `V_0`).
    pub fn owner_map(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n()];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                owner[v] = i;
            }
        }
        owner
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_examples() {
        let k4 = Hypergraph3::complete(4);
        assert_eq!(k4.degree(&[0]).unwrap(), 3);
        assert_eq!(k4.degree(&[0, 1]).unwrap(), 2);
        let empty = Hypergraph3::new(5);
        assert_eq!(empty.degree(&[2]).unwrap(), 0);
        assert_eq!(empty.degree(&[1, 3]).unwrap(), 0);
    }

    #[test]
    fn degree_rejects_bad_sets() {
        let k4 = Hypergraph3::complete(4);
        assert!(k4.degree(&[]).is_err());
        assert!(k4.degree(&[0, 1, 2]).is_err());
        assert!(k4.degree(&[1, 1]).is_err());
        assert!(k4.degree(&[4]).is_err());
    }

    #[test]
    fn shadow_examples() {
        let single = Hypergraph3::from_edges(3, [[0, 1, 2]]).unwrap();
        let s: Vec<_> = single.shadow().into_iter().collect();
        assert_eq!(s, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(Hypergraph3::new(7).shadow().is_empty());
        assert_eq!(Hypergraph3::complete(6).shadow().len(), 15);
    }

    #[test]
    fn shadow_bound_values() {
        let d0 = 6.0 - 4.0 * 2f64.sqrt();
        let g = shadow_bound(d0).unwrap();
        assert!((g.value - (1.0 - d0)).abs() < 1e-12);
        assert!(g.in_range);
        assert!((shadow_bound(1.0).unwrap().value - 1.0).abs() < 1e-12);
        assert!(!shadow_bound(1.0).unwrap().in_range);
        assert!((shadow_bound(0.25).unwrap().value - 0.5).abs() < 1e-12);
        assert!(shadow_bound(-0.1).is_err());
    }

    #[test]
    fn edges_are_canonical() {
        let mut h = Hypergraph3::new(4);
        assert!(h.add_edge(3, 0, 2).unwrap());
        assert!(!h.add_edge(2, 3, 0).unwrap());
        assert_eq!(h.edges(), &[[0, 2, 3]]);
        assert!(h.add_edge(0, 0, 1).is_err());
        assert!(h.add_edge(0, 1, 4).is_err());
        assert!(Hypergraph3::from_edges(4, [[0, 1, 2], [2, 1, 0]]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let k5 = Hypergraph3::complete(5);
        let sub = k5.induced(&[4, 1, 3]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edges(), &[[0, 1, 2]]);
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(4, vec![vec![], vec![0, 1], vec![2, 3]]).is_ok());
        assert!(VertexPartition::new(4, vec![vec![], vec![0, 1], vec![2]]).is_err());
        assert!(VertexPartition::new(4, vec![vec![0], vec![0, 1], vec![2, 3]]).is_err());
        let p = VertexPartition::new(4, vec![vec![3], vec![1, 0], vec![2]]).unwrap();
        assert_eq!(p.r(), 2);
        assert_eq!(p.part(1), &[0, 1]);
        assert_eq!(p.owner_map(), vec![1, 1, 2, 0]);
    }
}
