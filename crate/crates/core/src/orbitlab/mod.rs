//! Stabilizers `H_{i,j}`, orbit decompositions of `C(i,j)`, the maps
//! `m_{i,j}`, `μ_{i,j}` and `μ'_{i,j}`, the `θ` invariants, and checkers for
//! the transitivity and bijectivity conditions.
//!
//! All verdicts are finite: a condition "for all j sufficiently large" is
//! reported as an onset within the truncation, never extrapolated.

mod conditions;
mod maps;
mod orbits;
mod theta;

pub use conditions::{
    assemble_bijectivity, bijectivity_cell, check_bijectivity, check_transitivity, transitive_pair,
    BijectivityCell, BijectivityReport, PairVerdict, StepVerdict, TransitivityReport,
};
pub use maps::{m_map, mu_map, mu_prime_map, MMap, MuMap, MuPrimeMap};
pub use orbits::{
    double_cosets, orbits, stabilizer, transporter, DoubleCosets, OrbitDecomposition,
    StabilizerSubgroup,
};
pub use theta::{theta_census, theta_codomain, theta_invariant, ThetaCensus, ThetaInvariant};

pub(crate) use orbits::subgroup_generators;
