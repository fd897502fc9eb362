//! Equivariant Hom-spaces `F_j(X) = Hom_{G_j}(M(i)_j, X_j)`, the orbit
//! endomorphisms `f_O`, the idempotents `e_{i,j}`, the maps `ν_{i,j}` and
//! the dimension chain behind finite generation of submodules of `M(i)`.
//!
//! Checks of proved identities fail with [`crate::Error::Violation`].

mod chain;
mod endo;
mod hom;
mod nu;

pub use chain::{chain_report, ChainDegree, ChainReport, ChainStep, MaschkePair};
pub use endo::{
    averaging_check, averaging_suite, e_idempotent, end_basis, AveragingReport, EIdempotent, EndBasis,
    EXHAUSTIVE_SUBSETS_UP_TO,
};
pub use hom::{hom_space, HomSpace};
pub use nu::{nu_map, nu_preserves_hom, NuHomCheck, NuMap};
