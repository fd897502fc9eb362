//! Exact computations with EI categories of type `A∞` and their modules.
//!
//! * [`exactalg`]: linear algebra over `Q` and `F_p`.
//! * [`eicat`]: the categories `FI_Γ`, VI and VIC.
//! * [`orbitlab`]: stabilizers, orbit maps and the transitivity and
//!   bijectivity conditions.
//! * [`kcmod`]: truncated `kC`-modules over `Q`.
//! * [`stabcheck`]: equivariant Hom-spaces and the stabilization chain.
//! * [`cli`]: configuration and deterministic JSON reports.

pub mod cli;
pub mod eicat;
pub mod error;
pub mod exactalg;
pub mod kcmod;
mod once_map;
pub mod orbitlab;
pub mod stabcheck;

pub use error::{Error, Result};
