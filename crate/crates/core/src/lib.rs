//! Exact computation of classical and quantum weighted double Hurwitz numbers.
//!
//! Three independent pipelines compute the same quantities:
//! character sums over branched-cover configurations, central-element algebra
//! on Jucys-Murphy elements, and brute-force monotone path enumeration in the
//! Cayley graph of the symmetric group. Hypergeometric tau-function
//! coefficients provide a fourth, series-level cross-check.

pub mod characters;
pub mod classalg;
pub mod error;
pub mod exact;
pub mod hurwitz;
pub mod partitions;
pub mod published;
pub mod symfun;
pub mod tauseries;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use exact::{MultiPoly, RationalFunction, TruncatedSeries, Var};
pub use hurwitz::Pipeline;
pub use partitions::Partition;
pub use weights::WeightGenerator;
