//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything here is exact; equality is structural and there are no
//! tolerances. Subspaces are kept in a canonical RREF basis so that two
//! spanning sets of the same space produce identical values.

mod field;
mod matrix;
mod subspace;
mod system;

pub use field::{is_prime, Field, PrimeField, Rational, Rationals};
pub use matrix::{Matrix, Rref};
pub use subspace::{is_complement, Subspace};
pub use system::LinearSystem;

/// Dense matrices over the rationals, used for module actions.
pub type QMatrix = Matrix<Rationals>;
/// Subspaces of rational vector spaces.
pub type QSubspace = Subspace<Rationals>;
