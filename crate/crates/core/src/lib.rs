//! Combinatorics and verdict engines for cohomological modules of `U(p,q)` and
//! `O(p,q)`: Young-diagram parameters, root data, the module catalog, branching
//! multiplicities, isolation, and Lefschetz-type restriction and cup-product
//! statements.

pub mod branching;
pub mod catalog;
pub mod error;
pub mod isolation;
pub mod lefschetz;
pub mod partitions;
pub mod rootdata;

pub use catalog::{catalog, ModuleData, VZModule};
pub use error::{CoreError, Result};
pub use partitions::{BoxContext, CompatiblePair, OrthoPartition, Partition};
pub use rootdata::GroupKind;
