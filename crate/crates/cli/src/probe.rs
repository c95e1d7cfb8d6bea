//! Random-host probing around the degree threshold.

use hypertile::constructions::generate;
use hypertile::limits::MAX_SOLVER_VERTICES;
use hypertile::rational::{binom, q};
use hypertile::tiler::has_perfect_tiling;
use hypertile::{Barrier, Error, Hypergraph3, KSpec, Limits, Rational, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct ProbeConfig {
    pub spec: KSpec,
    /// Host size; must be a multiple of `k`.
    pub n: usize,
    /// Target minimum-degree fractions of `C(n−1, 2)`.
    pub density_grid: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    /// Constructions replayed as extra rows.
    pub replay: Vec<Barrier>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeRow {
    /// Target fraction, or the replayed construction's own degree fraction.
    pub fraction: f64,
    /// `None` for grid rows; the construction for replay rows.
    pub barrier: Option<Barrier>,
    pub trials: usize,
    /// Mean observed minimum vertex degree.
    pub mean_min_degree: Rational,
    /// Mean observed minimum degree over `C(n−1, 2)`.
    pub mean_fraction: f64,
    pub tileable: usize,
}

impl ProbeRow {
    pub fn share(&self) -> f64 {
        self.tileable as f64 / self.trials as f64
    }
}

/// Edge probability `p` with `p·C(n−1,2)` equal to the target degree; under
/// the uniform model that is the fraction itself.
fn calibrate(fraction: f64) -> f64 {
    fraction
}

fn random_host(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Hypergraph3 {
    let mut h = Hypergraph3::new(n);
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if rng.gen::<f64>() < p {
                    h.add_edge(x, y, z).expect("distinct in-range vertices");
                }
            }
        }
    }
    h
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn validate(cfg: &ProbeConfig) -> Result<()> {
    let k = cfg.spec.k_usize();
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if cfg.n == 0 || !cfg.n.is_multiple_of(k) {
        return Err(Error::InvalidArgument(format!("n = {} must be a positive multiple of k = {k}", cfg.n)));
    }
    if let Some(f) = cfg.density_grid.iter().find(|f| !(0.0..1.0).contains(*f)) {
        return Err(Error::InvalidArgument(format!("grid fraction {f} must lie in [0, 1)")));
    }
    if cfg.n > MAX_SOLVER_VERTICES {
        return Err(Error::SizeLimit {
            what: format!("probe host size {}", cfg.n),
            limit: MAX_SOLVER_VERTICES as u128,
        });
    }
    Ok(())
}

/// For every grid point, draws `trials` uniform random hosts with
/// per-trial streams derived from the master seed, and records the minimum
/// degree and whether a perfect tiling exists. The output does not depend on
/// the thread count.
pub fn probe(cfg: &ProbeConfig, limits: &Limits) -> Result<Vec<ProbeRow>> {
    validate(cfg)?;
    let n = cfg.n;
    let scale = binom((n - 1) as u128, 2).max(1) as f64;
    let mut rows = Vec::new();
    for (gi, &fraction) in cfg.density_grid.iter().enumerate() {
        let p = calibrate(fraction);
        let outcomes: Vec<(usize, bool)> = (0..cfg.trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(cfg.seed, (gi * cfg.trials + t) as u64);
                let h = random_host(n, p, &mut rng);
                let tiled = has_perfect_tiling(&h, &cfg.spec, limits)?.is_some();
                Ok((h.min_vertex_degree(), tiled))
            })
            .collect::<Result<_>>()?;
        let total: usize = outcomes.iter().map(|o| o.0).sum();
        let mean = q(total as i128, cfg.trials as i128);
        rows.push(ProbeRow {
            fraction,
            barrier: None,
            trials: cfg.trials,
            mean_min_degree: mean,
            mean_fraction: total as f64 / cfg.trials as f64 / scale,
            tileable: outcomes.iter().filter(|o| o.1).count(),
        });
    }
    for &kind in &cfg.replay {
        let inst = generate(kind, &cfg.spec, n, limits)?;
        let deg = inst.graph.min_vertex_degree();
        let tiled = has_perfect_tiling(&inst.graph, &cfg.spec, limits)?.is_some();
        let frac = deg as f64 / scale;
        rows.push(ProbeRow {
            fraction: frac,
            barrier: Some(kind),
            trials: 1,
            mean_min_degree: q(deg as i128, 1),
            mean_fraction: frac,
            tileable: tiled as usize,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypertile::classify;

    fn cfg(grid: Vec<f64>, trials: usize) -> ProbeConfig {
        ProbeConfig {
            spec: classify(1, 1, 1).unwrap(),
            n: 9,
            density_grid: grid,
            trials,
            seed: 11,
            replay: vec![],
        }
    }

    #[test]
    fn dense_hosts_tile() {
        let rows = probe(&cfg(vec![0.95], 50), &Limits::default()).unwrap();
        assert!(rows[0].share() >= 0.9, "share {}", rows[0].share());
    }

    #[test]
    fn empty_hosts_do_not() {
        let rows = probe(&cfg(vec![0.0], 5), &Limits::default()).unwrap();
        assert_eq!(rows[0].tileable, 0);
        assert_eq!(rows[0].mean_min_degree, q(0, 1));
    }

    #[test]
    fn deterministic() {
        let c = cfg(vec![0.3, 0.6], 20);
        let limits = Limits::default();
        assert_eq!(probe(&c, &limits).unwrap(), probe(&c, &limits).unwrap());
    }

    #[test]
    fn replayed_barrier_is_not_tileable() {
        let mut c = cfg(vec![], 1);
        c.replay = vec![Barrier::SpaceI];
        let rows = probe(&c, &Limits::default()).unwrap();
        assert_eq!(rows[0].barrier, Some(Barrier::SpaceI));
        assert_eq!(rows[0].tileable, 0);
        assert!(rows[0].fraction > 0.0);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(probe(&cfg(vec![1.5], 1), &Limits::default()).is_err());
        assert!(probe(&cfg(vec![0.5], 0), &Limits::default()).is_err());
        let mut c = cfg(vec![0.5], 1);
        c.n = 10;
        assert!(probe(&c, &Limits::default()).is_err());
    }
}
