//! Concrete EI categories of type `A∞`: `FI_Γ`, VI and VIC over a prime
//! field. Objects are the integers `0..=J`; hom-sets are enumerated on demand
//! and cached.

mod group;
mod instance;
mod morphism;
mod quiver;

pub use group::FiniteGroupTable;
pub use instance::{
    CategoryInstance, CategoryKind, Guard, HomSet, SchreierTree, TransporterTable,
    DEFAULT_GROUP_GUARD, DEFAULT_HOM_GUARD,
};
pub use morphism::{FiArrow, LinearArrow, Morphism, VicArrow};
pub use quiver::{underlying_quiver, Quiver};

pub(crate) use instance::{subspaces_of_dim, tuples};
