//! Index vectors with respect to a vertex partition, robust edge and
//! `K`-vectors, and membership in the integer lattice they generate.
//!
//! Only edges and copies disjoint from the exceptional part `V0` are
//! classified; their index vectors have full weight 3 (resp. `k`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Vertex, VertexPartition};
use crate::kspec::KSpec;
use crate::limits::Limits;
use crate::rational::Rational;
use crate::tiler::{bit, for_each_copy, CopyQuery, PairIndex};

/// `i_P(S)`: coordinate `j` counts `|S ∩ V_{j+1}|`. Also used for arbitrary
/// integer lattice elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexVector(pub Vec<i64>);

impl IndexVector {
    pub fn zero(r: usize) -> Self {
        IndexVector(vec![0; r])
    }

    /// The unit vector `u_j`, `j` counted from 1.
    pub fn unit(r: usize, j: usize) -> Self {
        let mut v = vec![0; r];
        v[j - 1] = 1;
        IndexVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sub(&self, other: &IndexVector) -> IndexVector {
        IndexVector(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect())
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn index_vector(p: &VertexPartition, s: &[Vertex]) -> Result<IndexVector> {
    let owner = p.owner_map();
    let mut v = IndexVector::zero(p.r());
    for &x in s {
        let o = *owner
            .get(x)
            .ok_or_else(|| Error::invalid(format!("vertex {x} out of range")))?;
        if o > 0 {
            v.0[o - 1] += 1;
        }
    }
    Ok(v)
}

/// Generators of an integer lattice in `Z^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub dim: usize,
    pub generators: Vec<IndexVector>,
}

impl LatticeBasis {
    pub fn new(dim: usize, generators: Vec<IndexVector>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::invalid(format!("generator {g} does not have dimension {dim}")));
        }
        Ok(LatticeBasis { dim, generators })
    }
}

/// Robustness threshold: `⌈μ·n^s⌉` for `s`-sets, or a raw count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Mu(Rational),
    MinCount(u128),
}

impl Threshold {
    /// Smallest count that qualifies, never below 1 so that only realized
    /// vectors are reported.
    pub fn count(&self, n: usize, s: u32) -> Result<u128> {
        match self {
            Threshold::MinCount(m) => Ok((*m).max(1)),
            Threshold::Mu(mu) => {
                if *mu < Rational::zero() {
                    return Err(Error::invalid("μ must be nonnegative"));
                }
                let num = BigInt::from(*mu.numer()) * BigInt::from(n).pow(s);
                let den = BigInt::from(*mu.denom());
                let c = Integer::div_ceil(&num, &den);
                Ok(c.to_u128().unwrap_or(u128::MAX).max(1))
            }
        }
    }
}

/// Index-vector census of edges or copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCensus {
    /// Objects disjoint from `V0`, grouped by index vector.
    pub counts: BTreeMap<IndexVector, u128>,
    /// Edges meeting `V0`; copies meeting `V0` are skipped uncounted.
    pub excluded: u128,
    /// Count needed to be robust.
    pub threshold: u128,
}

impl VectorCensus {
    pub fn robust(&self) -> Vec<(IndexVector, u128)> {
        self.counts
            .iter()
            .filter(|(_, &c)| c >= self.threshold)
            .map(|(v, &c)| (v.clone(), c))
            .collect()
    }

    pub fn robust_vectors(&self) -> Vec<IndexVector> {
        self.robust().into_iter().map(|(v, _)| v).collect()
    }
}

fn check_partition(h: &Hypergraph3, p: &VertexPartition) -> Result<()> {
    if p.n() != h.n() {
        return Err(Error::invalid("partition and hypergraph differ in vertex count"));
    }
    Ok(())
}

/// Edge index vectors with counts; robust ones reach `⌈μ·n³⌉`.
pub fn robust_edge_vectors(h: &Hypergraph3, p: &VertexPartition, t: &Threshold) -> Result<VectorCensus> {
    check_partition(h, p)?;
    let owner = p.owner_map();
    let mut counts = BTreeMap::new();
    let mut excluded = 0;
    for e in h.edges() {
        if e.iter().any(|&v| owner[v] == 0) {
            excluded += 1;
            continue;
        }
        let mut v = IndexVector::zero(p.r());
        for &x in e {
            v.0[owner[x] - 1] += 1;
        }
        *counts.entry(v).or_insert(0) += 1;
    }
    Ok(VectorCensus {
        counts,
        excluded,
        threshold: t.count(h.n(), 3)?,
    })
}

/// `K`-vector census over copies avoiding `V0`; robust ones reach
/// `⌈μ'·n^k⌉`. The number of copies visited is capped by `max_copies`.
pub fn robust_k_vectors(
    h: &Hypergraph3,
    p: &VertexPartition,
    spec: &KSpec,
    t: &Threshold,
    limits: &Limits,
) -> Result<VectorCensus> {
    check_partition(h, p)?;
    let owner = p.owner_map();
    let pairs = PairIndex::new(h)?;
    let allowed = (0..h.n()).filter(|&v| owner[v] > 0).fold(0u128, |m, v| m | bit(v));
    let mut counts: BTreeMap<IndexVector, u128> = BTreeMap::new();
    let mut seen: u128 = 0;
    let r = p.r();
    let flow = for_each_copy(&pairs, spec, &CopyQuery::within(allowed), |c| {
        seen += 1;
        if seen > limits.max_copies {
            return ControlFlow::Break(());
        }
        let mut v = IndexVector::zero(r);
        for x in c.vertices() {
            v.0[owner[x] - 1] += 1;
        }
        *counts.entry(v).or_insert(0) += 1;
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::size_limit("number of enumerated copies", limits.max_copies));
    }
    Ok(VectorCensus {
        counts,
        excluded: 0,
        threshold: t.count(h.n(), spec.k as u32)?,
    })
}

/// Integer row echelon form of `[G | I]`; each row keeps the combination of
/// original generators that produced it.
struct Echelon {
    rows: Vec<(usize, Vec<BigInt>, Vec<BigInt>)>,
}

fn echelon(basis: &LatticeBasis) -> Echelon {
    let m = basis.generators.len();
    let mut rows: Vec<(Vec<BigInt>, Vec<BigInt>)> = basis
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let v = g.0.iter().map(|&x| BigInt::from(x)).collect();
            let mut c = vec![BigInt::zero(); m];
            c[i] = BigInt::from(1);
            (v, c)
        })
        .collect();
    let mut out = Vec::new();
    for col in 0..basis.dim {
        // Euclid on the column until a single nonzero entry remains
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].0[col].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    let (mut v, mut c) = rows.swap_remove(i);
                    if v[col].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                        c.iter_mut().for_each(|x| *x = -&*x);
                    }
                    out.push((col, v, c));
                }
                break;
            }
            nz.sort_by(|&i, &j| rows[i].0[col].abs().cmp(&rows[j].0[col].abs()));
            let pivot = nz[0];
            let (pv, pc) = rows[pivot].clone();
            for &i in &nz[1..] {
                let f = rows[i].0[col].div_floor(&pv[col]);
                let row = &mut rows[i];
                for (x, y) in row.0.iter_mut().zip(&pv) {
                    *x -= &f * y;
                }
                for (x, y) in row.1.iter_mut().zip(&pc) {
                    *x -= &f * y;
                }
            }
        }
    }
    Echelon { rows: out }
}

/// Decides whether `target` is an integer combination of the generators.
/// On success returns the coefficients, one per generator.
pub fn lattice_contains(basis: &LatticeBasis, target: &IndexVector) -> Result<Option<Vec<BigInt>>> {
    if target.dim() != basis.dim {
        return Err(Error::invalid(format!(
            "target {target} does not have dimension {}",
            basis.dim
        )));
    }
    let ech = echelon(basis);
    let mut t: Vec<BigInt> = target.0.iter().map(|&x| BigInt::from(x)).collect();
    let mut coef = vec![BigInt::zero(); basis.generators.len()];
    for (col, v, c) in &ech.rows {
        if t[*col].is_zero() {
            continue;
        }
        let (f, rem) = t[*col].div_rem(&v[*col]);
        if !rem.is_zero() {
            return Ok(None);
        }
        for (x, y) in t.iter_mut().zip(v) {
            *x -= &f * y;
        }
        for (x, y) in coef.iter_mut().zip(c) {
            *x += &f * y;
        }
    }
    if t.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    Ok(Some(coef))
}

/// Outcome of testing `u_j − u_l` against the robust `K`-vector lattice.
#[derive(Clone, Debug)]
pub struct TransferralReport {
    pub pass: bool,
    /// Pairs `(j, l)`, `j < l`, with `u_j − u_l` outside the lattice.
    pub missing: Vec<(usize, usize)>,
    pub basis: LatticeBasis,
    pub census: VectorCensus,
}

pub fn transferral_check(
    h: &Hypergraph3,
    p: &VertexPartition,
    spec: &KSpec,
    t: &Threshold,
    limits: &Limits,
) -> Result<TransferralReport> {
    let census = robust_k_vectors(h, p, spec, t, limits)?;
    let r = p.r();
    let basis = LatticeBasis::new(r, census.robust_vectors())?;
    let mut missing = Vec::new();
    for j in 1..=r {
        for l in j + 1..=r {
            let target = IndexVector::unit(r, j).sub(&IndexVector::unit(r, l));
            if lattice_contains(&basis, &target)?.is_none() {
                missing.push((j, l));
            }
        }
    }
    Ok(TransferralReport {
        pass: missing.is_empty(),
        missing,
        basis,
        census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::generate;
    use crate::kspec::{check_gcd_fact, classify, Barrier};
    use crate::rational::q;

    fn iv(v: &[i64]) -> IndexVector {
        IndexVector(v.to_vec())
    }

    fn combo_ok(basis: &LatticeBasis, target: &IndexVector, coef: &[BigInt]) -> bool {
        (0..basis.dim).all(|j| {
            let s: BigInt = basis
                .generators
                .iter()
                .zip(coef)
                .map(|(g, c)| c * BigInt::from(g.0[j]))
                .sum();
            s == BigInt::from(target.0[j])
        })
    }

    #[test]
    fn index_vector_examples() {
        let p = VertexPartition::without_exceptional(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(index_vector(&p, &[]).unwrap(), iv(&[0, 0]));
        assert_eq!(index_vector(&p, &[0, 2, 3]).unwrap(), iv(&[1, 2]));
        let p = VertexPartition::new(5, vec![vec![4], vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(index_vector(&p, &[4]).unwrap(), iv(&[0, 0]));
    }

    #[test]
    fn membership_examples() {
        let b = LatticeBasis::new(2, vec![iv(&[11, -11]), iv(&[8, -8]), iv(&[5, -5])]).unwrap();
        let c = lattice_contains(&b, &iv(&[1, -1])).unwrap().unwrap();
        assert!(combo_ok(&b, &iv(&[1, -1]), &c));
        let b = LatticeBasis::new(2, vec![iv(&[2, -2])]).unwrap();
        assert!(lattice_contains(&b, &iv(&[1, -1])).unwrap().is_none());
        let e = LatticeBasis::new(2, vec![]).unwrap();
        assert!(lattice_contains(&e, &iv(&[0, 0])).unwrap().is_some());
        assert!(lattice_contains(&e, &iv(&[0, 1])).unwrap().is_none());
        assert!(lattice_contains(&e, &iv(&[0])).is_err());
    }

    #[test]
    fn gcd_fact_agrees() {
        for a in 1..=6u64 {
            for b in a..=8 {
                for c in b..=10 {
                    let gens = [b + c, a + c, a + b]
                        .iter()
                        .map(|&s| iv(&[s as i64, -(s as i64)]))
                        .collect();
                    let basis = LatticeBasis::new(2, gens).unwrap();
                    let inside = lattice_contains(&basis, &iv(&[1, -1])).unwrap().is_some();
                    assert_eq!(inside, check_gcd_fact(a, b, c), "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn edge_census() {
        let h = Hypergraph3::complete(12);
        let p = VertexPartition::without_exceptional(12, vec![(0..12).collect()]).unwrap();
        let c = robust_edge_vectors(&h, &p, &Threshold::Mu(q(220, 1728))).unwrap();
        assert_eq!(c.robust(), vec![(iv(&[3]), 220)]);

        let spec = classify(1, 1, 1).unwrap();
        let inst = generate(Barrier::DivII, &spec, 12, &Limits::default()).unwrap();
        let p = inst.parts.clone();
        let c = robust_edge_vectors(&inst.graph, &p, &Threshold::MinCount(1)).unwrap();
        assert!(c.robust_vectors().iter().all(|v| v.0[1] % 2 == 0));
        assert_eq!(c.counts.values().sum::<u128>() + c.excluded, inst.graph.edge_count() as u128);

        let empty = Hypergraph3::new(6);
        let p = VertexPartition::without_exceptional(6, vec![(0..6).collect()]).unwrap();
        assert!(robust_edge_vectors(&empty, &p, &Threshold::MinCount(1)).unwrap().robust().is_empty());
    }

    #[test]
    fn transferral_examples() {
        let spec = classify(1, 1, 1).unwrap();
        let lim = Limits::default();
        let h = Hypergraph3::complete(12);
        let p = VertexPartition::without_exceptional(12, vec![(0..6).collect(), (6..12).collect()]).unwrap();
        assert!(transferral_check(&h, &p, &spec, &Threshold::Mu(q(1, 100_000)), &lim).unwrap().pass);

        let inst = generate(Barrier::DivII, &spec, 12, &lim).unwrap();
        let p = inst.parts.clone();
        let rep = transferral_check(&inst.graph, &p, &spec, &Threshold::MinCount(1), &lim).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.missing, vec![(1, 2)]);

        let single = VertexPartition::without_exceptional(12, vec![(0..12).collect()]).unwrap();
        assert!(transferral_check(&h, &single, &spec, &Threshold::MinCount(1), &lim).unwrap().pass);
    }

    #[test]
    fn k_vectors_complete() {
        let spec = classify(1, 1, 1).unwrap();
        let h = Hypergraph3::complete(8);
        let p = VertexPartition::without_exceptional(8, vec![(0..4).collect(), (4..8).collect()]).unwrap();
        let c = robust_k_vectors(&h, &p, &spec, &Threshold::MinCount(1), &Limits::default()).unwrap();
        assert_eq!(
            c.robust_vectors(),
            vec![iv(&[0, 3]), iv(&[1, 2]), iv(&[2, 1]), iv(&[3, 0])]
        );
    }
}
