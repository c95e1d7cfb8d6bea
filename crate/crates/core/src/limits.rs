//! Enumeration guards.
//!
//! Every exhaustive routine in the crate checks its estimated work against one
//! of these caps before starting. The environment variable `HYPERTILE_GUARD`
//! overrides the enumeration caps (copies, subsets, certificate copies) with a
//! single integer; it is read only by [`Limits::from_env`].

/// Largest part size accepted by the exhaustive regularity check.
pub const REGULARITY_PART_GUARD: usize = 14;

/// Largest host accepted by the bitmask-based solver and copy enumerator.
pub const MAX_SOLVER_VERTICES: usize = 128;

pub const GUARD_ENV: &str = "HYPERTILE_GUARD";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of copies materialized by `enumerate_copies`.
    pub max_copies: u128,
    /// Maximum number of subsets enumerated by reachability and absorbing counts.
    pub max_subsets: u128,
    /// Estimated copy count above which certificate checks switch to sampling.
    pub certificate_copies: u128,
    /// Number of candidate copies drawn when a certificate check is sampled.
    pub certificate_samples: u64,
    /// Branch-and-bound node budget for the exact tiling solver.
    pub solver_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_copies: 1_000_000,
            max_subsets: 10_000_000,
            certificate_copies: 10_000_000,
            certificate_samples: 100_000,
            solver_nodes: 20_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with the enumeration caps replaced by `HYPERTILE_GUARD` when it
    /// is set to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(GUARD_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u128>().ok())
            .filter(|&v| v > 0)
        {
            limits.max_copies = v;
            limits.max_subsets = v;
            limits.certificate_copies = v;
        }
        limits
    }
}
