//! Tripartite density, exact ε-regularity checking and cluster hypergraphs.
//!
//! The exhaustive check enumerates every admissible pair `(A1, A2)` and, for
//! each size of `A3`, only the best and worst choice of `A3` (obtained by
//! sorting the per-vertex link weights), so the work is
//! `2^|V1| · 2^|V2| · |V3| log |V3|` with `V3` the largest part.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Vertex, VertexPartition};
use crate::limits::REGULARITY_PART_GUARD;
use crate::rational::{self, Rational};

fn check_triple(h: &Hypergraph3, parts: [&[Vertex]; 3]) -> Result<()> {
    let mut seen = vec![false; h.n()];
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::invalid(format!("part V{} is empty", i + 1)));
        }
        for &v in p.iter() {
            if v >= h.n() {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::invalid(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
        }
    }
    Ok(())
}

/// Number of edges with exactly one vertex in each of the three sets.
pub fn cross_edges(h: &Hypergraph3, v1: &[Vertex], v2: &[Vertex], v3: &[Vertex]) -> u64 {
    let mut tag = vec![0u8; h.n()];
    for (i, p) in [v1, v2, v3].iter().enumerate() {
        for &v in p.iter() {
            tag[v] = 1 << i;
        }
    }
    // every cross edge has exactly one endpoint in v1
    v1.iter()
        .flat_map(|&x| h.incident(x))
        .filter(|&&id| {
            let e = h.edges()[id];
            (tag[e[0]] | tag[e[1]] | tag[e[2]]) == 0b111
        })
        .count() as u64
}

/// `e(V1,V2,V3) / (|V1||V2||V3|)`.
pub fn tripartite_density(
    h: &Hypergraph3,
    v1: &[Vertex],
    v2: &[Vertex],
    v3: &[Vertex],
) -> Result<Rational> {
    check_triple(h, [v1, v2, v3])?;
    let vol = (v1.len() * v2.len() * v3.len()) as i128;
    Ok(rational::q(cross_edges(h, v1, v2, v3) as i128, vol))
}

/// Extreme densities over the admissible subtriples `|A_i| >= ε|V_i|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityRange {
    pub min: Rational,
    pub max: Rational,
}

/// `num/den` kept unreduced for cheap cross-multiplied comparisons.
#[derive(Clone, Copy)]
struct Frac {
    num: u64,
    den: u64,
}

impl Frac {
    fn lt(self, o: Frac) -> bool {
        (self.num as u128) * (o.den as u128) < (o.num as u128) * (self.den as u128)
    }
}

fn min_size(eps: &Rational, len: usize) -> usize {
    rational::ceil(&(*eps * rational::int(len as i128))).max(1) as usize
}

/// Computes the density range over admissible subtriples, or `None` when no
/// subtriple is admissible (ε > 1). Parts are assumed validated.
pub fn density_range(
    h: &Hypergraph3,
    parts: [&[Vertex]; 3],
    eps: &Rational,
) -> Result<Option<DensityRange>> {
    check_triple(h, parts)?;
    if *eps <= Rational::zero() {
        return Err(Error::invalid("ε must be positive"));
    }
    for p in parts {
        if p.len() > REGULARITY_PART_GUARD {
            return Err(Error::size_limit(
                format!("exhaustive regularity check on a part of size {}", p.len()),
                REGULARITY_PART_GUARD as u128,
            ));
        }
    }
    // density is symmetric in the three parts; keep the largest last
    let mut ps = parts;
    ps.sort_by_key(|p| p.len());
    let [p1, p2, p3] = ps;
    let (s1, s2, s3) = (
        min_size(eps, p1.len()),
        min_size(eps, p2.len()),
        min_size(eps, p3.len()),
    );
    if s1 > p1.len() || s2 > p2.len() || s3 > p3.len() {
        return Ok(None);
    }

    // link[x][y] = bitmask over p3 of z with xyz an edge
    let mut pos3 = vec![usize::MAX; h.n()];
    for (i, &z) in p3.iter().enumerate() {
        pos3[z] = i;
    }
    let mut link = vec![vec![0u32; p2.len()]; p1.len()];
    for (xi, &x) in p1.iter().enumerate() {
        for (yi, &y) in p2.iter().enumerate() {
            for &id in h.incident(x) {
                let e = h.edges()[id];
                if e.contains(&y) {
                    let z = e[0] ^ e[1] ^ e[2] ^ x ^ y;
                    if pos3[z] != usize::MAX {
                        link[xi][yi] |= 1 << pos3[z];
                    }
                }
            }
        }
    }

    let (n1, n2, n3) = (p1.len(), p2.len(), p3.len());
    let mut best = Frac { num: 0, den: 1 };
    let mut worst = Frac { num: 1, den: 1 };
    let mut weights = vec![vec![0u16; n3]; 1 << n2];
    let mut cnt = vec![vec![0u16; n3]; n2];
    let mut sorted = vec![0u16; n3];
    for m1 in 1u32..(1 << n1) {
        let a1 = m1.count_ones() as usize;
        if a1 < s1 {
            continue;
        }
        for (yi, row) in cnt.iter_mut().enumerate() {
            for (zi, c) in row.iter_mut().enumerate() {
                *c = (0..n1)
                    .filter(|&xi| m1 >> xi & 1 == 1 && link[xi][yi] >> zi & 1 == 1)
                    .count() as u16;
            }
        }
        for m2 in 1usize..(1 << n2) {
            let low = m2.trailing_zeros() as usize;
            let rest = m2 & (m2 - 1);
            for zi in 0..n3 {
                weights[m2][zi] = weights[rest][zi] + cnt[low][zi];
            }
            let a2 = m2.count_ones() as usize;
            if a2 < s2 {
                continue;
            }
            sorted.copy_from_slice(&weights[m2]);
            sorted.sort_unstable();
            let base = (a1 * a2) as u64;
            let (mut lo, mut hi) = (0u64, 0u64);
            for s in 1..=n3 {
                lo += sorted[s - 1] as u64;
                hi += sorted[n3 - s] as u64;
                if s < s3 {
                    continue;
                }
                let den = base * s as u64;
                let (f_lo, f_hi) = (Frac { num: lo, den }, Frac { num: hi, den });
                if f_lo.lt(worst) {
                    worst = f_lo;
                }
                if best.lt(f_hi) {
                    best = f_hi;
                }
            }
        }
    }
    Ok(Some(DensityRange {
        min: rational::q(worst.num as i128, worst.den as i128),
        max: rational::q(best.num as i128, best.den as i128),
    }))
}

/// Exact `(ε,d)`-regularity: `|d(A1,A2,A3) − d| <= ε` for every admissible
/// subtriple. Parts larger than the guard yield a size-limit error.
pub fn is_regular(
    h: &Hypergraph3,
    v1: &[Vertex],
    v2: &[Vertex],
    v3: &[Vertex],
    eps: &Rational,
    d: &Rational,
) -> Result<bool> {
    Ok(match density_range(h, [v1, v2, v3], eps)? {
        None => true,
        Some(r) => r.max - *d <= *eps && *d - r.min <= *eps,
    })
}

/// ε-regularity for some `d >= 0`. Such a `d` exists iff the admissible
/// densities span at most `2ε`; the midpoint of the span is returned as the
/// witness.
pub fn regular_witness(
    h: &Hypergraph3,
    v1: &[Vertex],
    v2: &[Vertex],
    v3: &[Vertex],
    eps: &Rational,
) -> Result<Option<Rational>> {
    Ok(match density_range(h, [v1, v2, v3], eps)? {
        None => Some(Rational::zero()),
        Some(r) => {
            if r.max - r.min <= *eps * rational::int(2) {
                Some((r.max + r.min) / rational::int(2))
            } else {
                None
            }
        }
    })
}

pub fn is_epsilon_regular(
    h: &Hypergraph3,
    v1: &[Vertex],
    v2: &[Vertex],
    v3: &[Vertex],
    eps: &Rational,
) -> Result<bool> {
    Ok(regular_witness(h, v1, v2, v3, eps)?.is_some())
}

/// The cluster hypergraph: vertex `i - 1` stands for cluster `V_i`, and a
/// triple of clusters is an edge iff it is ε-regular with density `>= d`.
pub fn cluster_hypergraph(
    h: &Hypergraph3,
    p: &VertexPartition,
    eps: &Rational,
    d: &Rational,
) -> Result<Hypergraph3> {
    let t = p.r();
    if let Some(len) = (1..=t).map(|i| p.part(i).len()).next() {
        if len == 0 || (1..=t).any(|i| p.part(i).len() != len) {
            return Err(Error::invalid("clusters must be nonempty and equal-sized"));
        }
    }
    if *d < Rational::zero() || *d > Rational::one() {
        return Err(Error::invalid("d must lie in [0, 1]"));
    }
    let mut r = Hypergraph3::new(t);
    for i in 1..=t {
        for j in i + 1..=t {
            for l in j + 1..=t {
                let (a, b, c) = (p.part(i), p.part(j), p.part(l));
                if tripartite_density(h, a, b, c)? >= *d && is_epsilon_regular(h, a, b, c, eps)? {
                    r.add_edge(i - 1, j - 1, l - 1)?;
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn tri(sizes: [usize; 3]) -> (Hypergraph3, [Vec<usize>; 3]) {
        let n = sizes.iter().sum();
        let p0: Vec<_> = (0..sizes[0]).collect();
        let p1: Vec<_> = (sizes[0]..sizes[0] + sizes[1]).collect();
        let p2: Vec<_> = (sizes[0] + sizes[1]..n).collect();
        let h = Hypergraph3::complete_tripartite(n, [&p0, &p1, &p2]).unwrap();
        (h, [p0, p1, p2])
    }

    #[test]
    fn density_examples() {
        let (h, [a, b, c]) = tri([2, 3, 2]);
        assert_eq!(tripartite_density(&h, &a, &b, &c).unwrap(), q(1, 1));
        let empty = Hypergraph3::new(7);
        assert_eq!(tripartite_density(&empty, &a, &b, &c).unwrap(), q(0, 1));
        let single = Hypergraph3::from_edges(4, [[0, 1, 2]]).unwrap();
        assert_eq!(
            tripartite_density(&single, &[0], &[1], &[2, 3]).unwrap(),
            q(1, 2)
        );
        assert!(tripartite_density(&single, &[0], &[0], &[2]).is_err());
        assert!(tripartite_density(&single, &[], &[1], &[2]).is_err());
    }

    #[test]
    fn regularity_examples() {
        let (h, [a, b, c]) = tri([3, 3, 3]);
        assert!(is_regular(&h, &a, &b, &c, &q(1, 10), &q(1, 1)).unwrap());
        let empty = Hypergraph3::new(9);
        assert!(is_regular(&empty, &a, &b, &c, &q(1, 10), &q(0, 1)).unwrap());
        let single = Hypergraph3::from_edges(9, [[0, 3, 6]]).unwrap();
        assert!(!is_regular(&single, &a, &b, &c, &q(1, 4), &q(1, 27)).unwrap());
    }

    #[test]
    fn regularity_guard() {
        let h = Hypergraph3::new(45);
        let a: Vec<_> = (0..15).collect();
        let b: Vec<_> = (15..30).collect();
        let c: Vec<_> = (30..45).collect();
        let err = is_regular(&h, &a, &b, &c, &q(1, 2), &q(0, 1)).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn witness_is_midpoint() {
        let single = Hypergraph3::from_edges(6, [[0, 2, 4]]).unwrap();
        let (a, b, c) = ([0, 1], [2, 3], [4, 5]);
        // admissible densities range over [0, 1] at ε = 1/2
        assert_eq!(
            regular_witness(&single, &a, &b, &c, &q(1, 2)).unwrap(),
            Some(q(1, 2))
        );
        assert_eq!(regular_witness(&single, &a, &b, &c, &q(1, 3)).unwrap(), None);
    }

    #[test]
    fn cluster_examples() {
        let h = Hypergraph3::complete(9);
        let p = VertexPartition::without_exceptional(
            9,
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]],
        )
        .unwrap();
        let r = cluster_hypergraph(&h, &p, &q(1, 4), &q(1, 2)).unwrap();
        assert_eq!(r.edges(), &[[0, 1, 2]]);
        let r0 = cluster_hypergraph(&Hypergraph3::new(9), &p, &q(1, 4), &q(1, 2)).unwrap();
        assert_eq!(r0.edge_count(), 0);
        let bad = VertexPartition::without_exceptional(9, vec![vec![0, 1, 2, 3], vec![4, 5], vec![6, 7, 8]])
            .unwrap();
        assert!(cluster_hypergraph(&h, &bad, &q(1, 4), &q(1, 2)).is_err());
    }
}
