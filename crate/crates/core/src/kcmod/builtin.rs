use std::sync::Arc;

use super::module::{atom_module, free_module, sum_free_module, FreeModule, SumFreeModule};
use super::submodule::{submodule_generated, GradedSubmodule, HomogeneousElement};
use crate::eicat::CategoryInstance;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Rationals};

pub const BUILTIN_MODULES: &[&str] = &["free", "zero", "sum-zero", "atom", "diagonal"];

/// A module to run checks on, with the ambient free module when there is one.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    pub name: String,
    /// Set when `X ⊆ M(i)`.
    pub free: Option<FreeModule>,
    /// Set when `X ⊆ M(S)` for `|S| > 1`.
    pub sum: Option<SumFreeModule>,
    pub submodule: GradedSubmodule,
    /// Degrees of the homogeneous elements `X` was generated from.
    pub seed_degrees: Vec<usize>,
}

/// Builtin examples:
/// `free` = `M(i)`; `zero` = `0 ⊆ M(i)`; `sum-zero` = the submodule of
/// `M(1)` generated by `e_{b0} - e_{b1}` for the first two arrows of
/// `C(1,2)`; `atom` = `Q` in degree 0; `diagonal` = the copy of `M(1)` in
/// `M(1) ⊕ M(1)` generated by `(b, b)` for the identity `b ∈ C(1,1)`.
pub fn builtin_module(name: &str, cat: &Arc<CategoryInstance>, i: usize, top: usize) -> Result<ModuleSpec> {
    let q = Rationals;
    match name {
        "free" => {
            let m = free_module(cat, i, top)?;
            Ok(ModuleSpec {
                name: name.into(),
                submodule: GradedSubmodule::full(m.module()),
                free: Some(m),
                sum: None,
                seed_degrees: vec![i],
            })
        }
        "zero" => {
            let m = free_module(cat, i, top)?;
            Ok(ModuleSpec {
                name: name.into(),
                submodule: GradedSubmodule::zero(m.module()),
                free: Some(m),
                sum: None,
                seed_degrees: vec![],
            })
        }
        "sum-zero" => {
            if top < 2 {
                return Err(Error::Precondition("sum-zero lives in degree 2; need J >= 2".into()));
            }
            let m = free_module(cat, 1, top)?;
            let n = m.module().dim(2);
            let mut coords = vec![q.zero(); n];
            coords[0] = q.one();
            coords[1] = q.from_i64(-1);
            let x = submodule_generated(m.module(), &[HomogeneousElement::new(2, coords)])?;
            Ok(ModuleSpec {
                name: name.into(),
                submodule: x,
                free: Some(m),
                sum: None,
                seed_degrees: vec![2],
            })
        }
        "atom" => {
            let a = Arc::new(atom_module(cat, 0, top)?);
            Ok(ModuleSpec {
                name: name.into(),
                submodule: GradedSubmodule::full(&a),
                free: None,
                sum: None,
                seed_degrees: vec![0],
            })
        }
        "diagonal" => {
            if top < 1 {
                return Err(Error::Precondition("diagonal lives in degree 1; need J >= 1".into()));
            }
            let sum = sum_free_module(cat, &[1, 1], top)?;
            let b = sum
                .summand(0)
                .basis(1)?
                .position(&cat.identity(1))
                .expect("identity in C(1,1)");
            let mut coords = vec![q.zero(); sum.module().dim(1)];
            for s in 0..2 {
                coords[sum.block(s, 1).start + b] = q.one();
            }
            let x = submodule_generated(sum.module(), &[HomogeneousElement::new(1, coords)])?;
            Ok(ModuleSpec {
                name: name.into(),
                submodule: x,
                free: None,
                sum: Some(sum),
                seed_degrees: vec![1],
            })
        }
        other => Err(Error::Precondition(format!(
            "unknown builtin module `{other}` (known: {})",
            BUILTIN_MODULES.join(", ")
        ))),
    }
}

/// The submodule of `M(i)` generated by the given homogeneous elements.
pub fn generated_in_free(
    name: impl Into<String>,
    cat: &Arc<CategoryInstance>,
    i: usize,
    top: usize,
    generators: &[HomogeneousElement],
) -> Result<ModuleSpec> {
    let m = free_module(cat, i, top)?;
    let x = submodule_generated(m.module(), generators)?;
    let mut seed_degrees: Vec<usize> = generators.iter().map(|g| g.degree).collect();
    seed_degrees.sort_unstable();
    seed_degrees.dedup();
    Ok(ModuleSpec {
        name: name.into(),
        submodule: x,
        free: Some(m),
        sum: None,
        seed_degrees,
    })
}
