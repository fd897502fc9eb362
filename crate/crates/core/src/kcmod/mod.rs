//! Truncated `kC`-modules over `Q`: free modules `M(i)` and `M(S)`,
//! submodule generation, the `ρ_j` finite-generation criterion, torsion
//! and the projections `p_s`.
//!
//! Every verdict here is "up to J": the truncation degree of the module.

mod builtin;
mod genfile;
mod module;
mod projection;
mod submodule;

pub use builtin::{builtin_module, generated_in_free, ModuleSpec, BUILTIN_MODULES};
pub use genfile::{load_generators, parse_generators};
pub use module::{
    atom_module, direct_sum, free_module, sum_free_module, FreeModule, GradedModule, SumFreeModule,
};
pub use projection::{complement_summands, sum_and_project, ProjectionDegree, ProjectionReport};
pub use submodule::{
    fg_verdict, rho_image, submodule_generated, torsion, FgReport, GradedSubmodule, HomogeneousElement,
    RhoFlag, Torsion,
};

pub(crate) use module::injection_matrix;
