//! Young tableau machinery (hook lengths, row insertion, Robinson-Schensted,
//! jeu de taquin) and its use for priority-based task reassignment on
//! hierarchical 2D mesh-connected processor grids.

pub mod error;
pub mod hms;
pub mod jdt;
pub mod json;
pub mod partitions;
pub mod random;
pub mod rational;
pub mod rsk;
pub mod scenarios;
pub mod tableaux;

pub use error::{Error, Result};
pub use hms::{CapacityGrid, HmtState, ReassignmentTrace, TaskSet};
pub use partitions::{Cell, Partition, SkewShape};
pub use rational::Rational;
pub use rsk::Permutation;
pub use tableaux::Tableau;
