use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::endo::end_basis;
use super::hom::{flat, hom_space};
use super::nu::NuMap;
use crate::error::{Error, Result};
use crate::exactalg::{QSubspace, Rationals};
use crate::kcmod::{submodule_generated, FreeModule, GradedSubmodule};
use crate::orbitlab::check_bijectivity;

#[derive(Clone, Debug, Serialize)]
pub struct MaschkePair {
    pub lower: String,
    pub upper: String,
    pub dim_lower: usize,
    pub dim_upper: usize,
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainDegree {
    pub j: usize,
    pub dim_x: usize,
    pub dim_free: usize,
    /// `dim F_j(X)`.
    pub dim_f_x: usize,
    /// `dim F_j(M(i))`.
    pub dim_f_free: usize,
    pub maschke: Vec<MaschkePair>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub j: usize,
    pub bottom_bijective: bool,
    pub top_injective: bool,
    /// `ν(F_j(X)) ⊆ F_{j+1}(X)`.
    pub top_lands_in_x: bool,
    pub square_commutes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub i: usize,
    pub j0: usize,
    pub top: usize,
    /// Bijectivity onset `N` for this `i`, observed within the truncation.
    pub onset: usize,
    /// `dim F_N(M(i))`.
    pub bound: usize,
    pub bound_holds: bool,
    pub monotone: bool,
    pub degrees: Vec<ChainDegree>,
    pub steps: Vec<ChainStep>,
    /// Least `n` with `X(n) = X` through the truncation, where `X(n)` is
    /// generated by the degrees `≤ n` of `X`.
    pub generated_by: usize,
    pub qualifier: String,
}

/// The finite diagram of Hom-spaces along `[j0, J]`:
/// top row `F_j(X)` with `ν` computed from the module data of `X`'s parent,
/// bottom row `F_j(M(i))` with `ν` by orbit transport. Any failed verdict is
/// a hard error.
pub fn chain_report(m: &FreeModule, x: &GradedSubmodule, j0: usize, audit: bool) -> Result<ChainReport> {
    let i = m.source();
    let cat = m.module().category();
    if !Arc::ptr_eq(x.parent(), m.module()) {
        return Err(Error::Precondition(format!("X must be a submodule of M({i})")));
    }
    let top = x.top();
    if top < i + 2 {
        return Err(Error::Precondition(format!(
            "the chain for i={i} needs J >= {}, got {top}",
            i + 2
        )));
    }
    let onset = check_bijectivity(cat, i, top - 1)?.onset.ok_or_else(|| {
        Error::Precondition(format!("μ_{{{i},j}} is not bijective at j = {}", top - 1))
    })?;
    if j0 < onset || j0 > top {
        return Err(Error::Precondition(format!(
            "chain start j0={j0} must lie in [N, J] = [{onset}, {top}]"
        )));
    }
    let bound = end_basis(m, onset, audit)?.len();

    let degrees = (j0..=top)
        .into_par_iter()
        .map(|j| chain_degree(m, x, j, audit))
        .collect::<Result<Vec<_>>>()?;
    let steps = (j0..top)
        .into_par_iter()
        .map(|j| chain_step(m, x, j, audit))
        .collect::<Result<Vec<_>>>()?;

    let bound_holds = degrees.iter().all(|d| d.dim_f_x <= bound && d.dim_f_free <= bound);
    let monotone = degrees.windows(2).all(|w| w[0].dim_f_x <= w[1].dim_f_x);
    for s in &steps {
        if !(s.bottom_bijective && s.top_injective && s.top_lands_in_x && s.square_commutes) {
            return Err(Error::violation("stabilization diagram", format!("{s:?}")));
        }
    }
    if let Some(d) = degrees.iter().find(|d| d.maschke.iter().any(|p| !p.strict)) {
        return Err(Error::violation("Maschke strictness", format!("degree {}", d.j)));
    }
    if !(bound_holds && monotone) {
        return Err(Error::violation(
            "bounded monotone chain",
            format!("bound {bound}, dims {:?}", degrees.iter().map(|d| d.dim_f_x).collect::<Vec<_>>()),
        ));
    }
    Ok(ChainReport {
        i,
        j0,
        top,
        onset,
        bound,
        bound_holds,
        monotone,
        degrees,
        steps,
        generated_by: generated_by(x)?,
        qualifier: format!(
            "verified for all j in [{onset}, {top}] only; nothing is claimed beyond J = {top}"
        ),
    })
}

fn chain_degree(m: &FreeModule, x: &GradedSubmodule, j: usize, audit: bool) -> Result<ChainDegree> {
    let f_x = hom_space(m, x, j, audit)?;
    let f_free = end_basis(m, j, audit)?.len();
    let dim_x = x.space(j).dim();
    let dim_free = m.module().dim(j);
    let mut maschke = Vec::new();
    if dim_x > 0 {
        maschke.push(MaschkePair {
            lower: "0".into(),
            upper: format!("X_{j}"),
            dim_lower: 0,
            dim_upper: f_x.dim,
            strict: f_x.dim > 0,
        });
    }
    if dim_x < dim_free {
        maschke.push(MaschkePair {
            lower: format!("X_{j}"),
            upper: format!("M({})_{j}", m.source()),
            dim_lower: f_x.dim,
            dim_upper: f_free,
            strict: f_x.dim < f_free,
        });
    }
    Ok(ChainDegree {
        j,
        dim_x,
        dim_free,
        dim_f_x: f_x.dim,
        dim_f_free: f_free,
        maschke,
    })
}

fn chain_step(m: &FreeModule, x: &GradedSubmodule, j: usize, audit: bool) -> Result<ChainStep> {
    let nu = NuMap::new(m, j, audit)?;
    let bottom_bijective = nu.is_bijective()?;
    let from = hom_space(m, x, j, audit)?;
    let to = hom_space(m, x, j + 1, audit)?;
    let top_images = from
        .basis
        .iter()
        .map(|f| nu.by_formula(x.parent(), f))
        .collect::<Result<Vec<_>>>()?;
    let mut square_commutes = true;
    for (f, image) in from.basis.iter().zip(&top_images) {
        square_commutes &= nu.by_transport(f)? == *image;
    }
    let flat_images = flat(&top_images);
    let target = to.flat_span()?;
    let mut top_lands_in_x = true;
    for v in &flat_images {
        top_lands_in_x &= target.contains(v)?;
    }
    let rank = QSubspace::span(Rationals, to.target_dim * to.source_dim, &flat_images)?.dim();
    Ok(ChainStep {
        j,
        bottom_bijective,
        top_injective: rank == from.dim,
        top_lands_in_x,
        square_commutes,
    })
}

fn generated_by(x: &GradedSubmodule) -> Result<usize> {
    let elements = x.spanning_elements();
    for n in 0..=x.top() {
        let low: Vec<_> = elements.iter().filter(|e| e.degree <= n).cloned().collect();
        if submodule_generated(x.parent(), &low)? == *x {
            return Ok(n);
        }
    }
    Ok(x.top())
}
