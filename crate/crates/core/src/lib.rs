//! Exact tools for tiling 3-uniform hypergraphs with complete 3-partite
//! 3-graphs `K_{a,b,c}`.
//!
//! The crate covers the threshold formulas for perfect tilings, generators
//! for the extremal constructions together with checkable certificates,
//! exact tiling solvers, fractional hom-tilings, index-vector lattices and
//! desk-scale absorbing tools.

pub mod absorb;
pub mod constructions;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod io;
pub mod kspec;
pub mod lattice;
pub mod limits;
pub mod rational;
pub mod regularity;
pub mod tiler;

pub use error::{Error, Result};
pub use graph::{Hypergraph3, Vertex, VertexPartition};
pub use kspec::{classify, Barrier, Exact, KSpec, TypeClass};
pub use limits::Limits;
pub use rational::Rational;
pub use tiler::{KCopy, Tiling};
