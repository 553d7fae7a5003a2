//! Exact computation of higher Lie characters of the symmetric groups and
//! their decomposition into irreducibles.
//!
//! The pieces, bottom up:
//!
//! * [`partition`]: partitions, conjugation, `z_λ`, enumeration.
//! * [`tableaux`]: hook-length and skew dimensions, standard tableaux,
//!   major-index residue profiles.
//! * [`characters`]: Murnaghan–Nakayama character values and cached tables.
//! * [`symfunc`]: symmetric functions in the Schur and power-sum bases,
//!   products, plethysm, `ω`, the Hall inner product.
//! * [`higher_lie`]: `L_λ`, its twists, derangement and conjugacy sums,
//!   regularity residuals.
//! * [`sampling`]: seeded random permutations, RSK, virtual permutations.

pub mod characters;
pub mod error;
pub mod higher_lie;
pub mod partition;
pub mod sampling;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use higher_lie::{LieSpec, Residual};
pub use partition::{parse_partition, partitions_of, Partition, SkewShape};
pub use symfunc::{Basis, SymFunc};
