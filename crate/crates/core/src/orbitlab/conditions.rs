use std::collections::HashSet;

use serde::Serialize;

use super::maps::{m_map, mu_from_parts, mu_prime_map};
use super::orbits::orbits;
use crate::eicat::CategoryInstance;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct StepVerdict {
    pub i: usize,
    pub transitive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub transitive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitivityReport {
    pub category: String,
    pub max_object: usize,
    /// `G_{i+1}` on `C(i,i+1)`, by orbit enumeration.
    pub single_step: Vec<StepVerdict>,
    /// `G_j` on `C(i,j)` for all `i < j`, by transporters out of `α_{i,j}`.
    pub full: Vec<PairVerdict>,
    pub passed: bool,
}

/// Checks the single-step condition and, independently, transitivity on
/// every `C(i,j)`. The single-step condition implies the full one; a
/// disagreement in that direction is a hard error.
pub fn check_transitivity(cat: &CategoryInstance, max_object: usize) -> Result<TransitivityReport> {
    if max_object > cat.max_object() {
        return Err(Error::ObjectOutOfRange {
            object: max_object,
            max: cat.max_object(),
        });
    }
    let mut single_step = Vec::new();
    for i in 0..max_object {
        let homs = cat.hom_set(i, i + 1)?;
        let group = cat.group(i + 1)?;
        let transitive = match homs.elements().first() {
            None => false,
            Some(first) => {
                let orbit: HashSet<_> = group.iter().map(|g| cat.compose_unchecked(g, first)).collect();
                orbit.len() == homs.len()
            }
        };
        single_step.push(StepVerdict { i, transitive });
    }
    let mut full = Vec::new();
    for j in 1..=max_object {
        for i in 0..j {
            full.push(PairVerdict {
                i,
                j,
                transitive: transitive_pair(cat, i, j)?,
            });
        }
    }
    let step_ok = single_step.iter().all(|s| s.transitive);
    let full_ok = full.iter().all(|p| p.transitive);
    if step_ok && !full_ok {
        return Err(Error::violation(
            "transitivity lemma",
            format!("{}: single-step transitivity holds but some C(i,j) is not transitive", cat.descriptor()),
        ));
    }
    Ok(TransitivityReport {
        category: cat.descriptor(),
        max_object,
        single_step,
        full,
        passed: step_ok && full_ok,
    })
}

pub fn transitive_pair(cat: &CategoryInstance, i: usize, j: usize) -> Result<bool> {
    let table = cat.transporters_from_alpha(i, j)?;
    Ok(table.witness.iter().all(Option::is_some))
}

/// Verdicts for one `(i, j)` cell of the bijectivity check.
#[derive(Clone, Debug, Serialize)]
pub struct BijectivityCell {
    pub j: usize,
    pub source_orbits: usize,
    pub target_orbits: usize,
    pub m_injective: bool,
    pub mu_injective: bool,
    pub mu_surjective: bool,
    pub mu_bijective: bool,
    pub mu_prime_surjective: bool,
    pub mu_prime_bijective: bool,
}

pub fn bijectivity_cell(cat: &CategoryInstance, i: usize, j: usize) -> Result<BijectivityCell> {
    let m = m_map(cat, i, j)?;
    let mu = mu_from_parts(&m, &orbits(cat, i, j)?, &orbits(cat, i, j + 1)?)?;
    let mu_prime = mu_prime_map(cat, i, j)?;
    if mu.injective && !m.injective {
        return Err(Error::violation(
            "μ injective implies m injective",
            format!("{} at ({i},{j})", cat.descriptor()),
        ));
    }
    Ok(BijectivityCell {
        j,
        source_orbits: mu.source_orbits,
        target_orbits: mu.target_orbits,
        m_injective: m.injective,
        mu_injective: mu.injective,
        mu_surjective: mu.surjective,
        mu_bijective: mu.bijective,
        mu_prime_surjective: mu_prime.surjective,
        mu_prime_bijective: mu_prime.bijective,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectivityReport {
    pub category: String,
    pub i: usize,
    pub j_max: usize,
    pub cells: Vec<BijectivityCell>,
    /// Least `j₀` with `μ_{i,j}` bijective and `m_{i,j}` injective for every
    /// `j ∈ [j₀, j_max]`. Verified only up to the truncation.
    pub onset: Option<usize>,
    /// Least `j₀` with `μ'_{i,j}` surjective on `[j₀, j_max]`.
    pub mu_prime_surjective_onset: Option<usize>,
    pub verified_up_to: usize,
}

/// Trailing-window onset of a per-`j` predicate.
fn onset(cells: &[BijectivityCell], pred: impl Fn(&BijectivityCell) -> bool) -> Option<usize> {
    let mut start = None;
    for c in cells.iter().rev() {
        if pred(c) {
            start = Some(c.j);
        } else {
            break;
        }
    }
    start
}

pub fn check_bijectivity(cat: &CategoryInstance, i: usize, j_max: usize) -> Result<BijectivityReport> {
    if i >= j_max || j_max + 1 > cat.max_object() {
        return Err(Error::Precondition(format!(
            "need i < j_max <= J-1, got i={i}, j_max={j_max}, J={}",
            cat.max_object()
        )));
    }
    let cells = (i + 1..=j_max)
        .map(|j| bijectivity_cell(cat, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_bijectivity(cat, i, j_max, cells))
}

/// Builds the report from cells computed elsewhere (possibly concurrently);
/// cells are ordered by `j` here.
pub fn assemble_bijectivity(
    cat: &CategoryInstance,
    i: usize,
    j_max: usize,
    mut cells: Vec<BijectivityCell>,
) -> BijectivityReport {
    cells.sort_by_key(|c| c.j);
    BijectivityReport {
        category: cat.descriptor(),
        i,
        j_max,
        onset: onset(&cells, |c| c.mu_bijective && c.m_injective),
        mu_prime_surjective_onset: onset(&cells, |c| c.mu_prime_surjective),
        cells,
        verified_up_to: cat.max_object(),
    }
}
