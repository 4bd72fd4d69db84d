//! Permutation groups, coset graphs and graph symmetry, aimed at verifying
//! censuses of pentavalent symmetric graphs by direct computation.

pub mod catalog;
pub mod cli;
pub mod cosetgraph;
pub mod error;
pub mod feasibility;
pub mod graphauto;
pub mod group;
pub mod perm;
pub mod subgroups;

pub use error::{Error, Result};
pub use group::{GroupHandle, GrpFile, StabilizerChain};
pub use perm::Permutation;
