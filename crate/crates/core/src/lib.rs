//! Dual numbers, quaternions, dual quaternions and norms of dual quaternion
//! vectors.
//!
//! Every type is an immutable `Copy` (or owned, for vectors) value with finite
//! components. The total order on [`DualNumber`] is lexicographic: standard
//! parts first, infinitesimal parts on a tie.
//!
//! The [`verify`] module turns the algebraic laws of these types into
//! randomized property suites, and [`cli`] exposes everything through the
//! `dualq` command-line tool.

pub mod cli;
pub mod dq_vector;
pub mod dual_number;
pub mod dual_quaternion;
mod error;
mod format;
pub mod quaternion;
pub mod verify;

pub use dq_vector::{DQVector, RealEmbedding};
pub use dual_number::{sgn, DualInterval, DualNumber, IntervalBound};
pub use dual_quaternion::DualQuaternion;
pub use error::{Error, Result};
pub use format::format_real;
pub use quaternion::Quaternion;
