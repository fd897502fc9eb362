use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::config::RunConfig;
use super::report::Report;
use crate::eicat::{CategoryInstance, CategoryKind};
use crate::error::{Error, Result};
use crate::kcmod::{
    builtin_module, fg_verdict, generated_in_free, load_generators, sum_and_project, torsion, FgReport, ModuleSpec,
    ProjectionReport,
};
use crate::orbitlab::{
    assemble_bijectivity, bijectivity_cell, check_bijectivity, check_transitivity, mu_map, mu_prime_map, orbits,
    theta_census, BijectivityReport, ThetaCensus,
};
use crate::stabcheck::{
    averaging_suite, chain_report, e_idempotent, end_basis, nu_preserves_hom, AveragingReport, EIdempotent, NuHomCheck,
    NuMap,
};

#[derive(Serialize)]
struct OnsetRow {
    i: usize,
    onset: Option<usize>,
    mu_prime_surjective_onset: Option<usize>,
    verified_up_to: usize,
}

pub fn check_conditions(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let cat = cfg.category_instance()?;
    let top = cat.max_object();
    report.section("transitivity", "transitivity condition", || check_transitivity(&cat, top))?;
    let mut onsets = Vec::new();
    for &i in &cfg.i {
        let mut bij: Option<BijectivityReport> = None;
        report.section(&format!("bijectivity i={i}"), "bijectivity condition; m_{i,j} injective where μ_{i,j} is", || {
            let j_max = top.saturating_sub(1);
            let cells = (i + 1..=j_max)
                .into_par_iter()
                .map(|j| bijectivity_cell(&cat, i, j))
                .collect::<Result<Vec<_>>>()?;
            let r = assemble_bijectivity(&cat, i, j_max.max(i), cells);
            bij = Some(r.clone());
            Ok(r)
        })?;
        let r = bij.expect("section ran");
        onsets.push(OnsetRow {
            i,
            onset: r.onset,
            mu_prime_surjective_onset: r.mu_prime_surjective_onset,
            verified_up_to: r.verified_up_to,
        });
    }
    report.section("onsets", "bijectivity condition", || Ok(onsets))
}

#[derive(Serialize)]
struct OrbitRow {
    i: usize,
    j: usize,
    hom_set_size: usize,
    stabilizer_order: usize,
    orbit_count: usize,
    orbit_sizes: Vec<usize>,
    mu: Option<MuVerdicts>,
    theta: Option<ThetaCensus>,
}

#[derive(Serialize)]
struct MuVerdicts {
    images: Vec<usize>,
    injective: bool,
    surjective: bool,
    bijective: bool,
    double_coset_injective: bool,
    double_coset_surjective: bool,
}

fn orbit_row(cat: &CategoryInstance, i: usize, j: usize) -> Result<OrbitRow> {
    let decomposition = orbits(cat, i, j)?;
    let mu = if j > i && j < cat.max_object() {
        let mu = mu_map(cat, i, j)?;
        let prime = mu_prime_map(cat, i, j)?;
        if (prime.injective, prime.surjective) != (mu.injective, mu.surjective) {
            return Err(Error::violation(
                "double coset formulation of μ",
                format!("{} at ({i},{j})", cat.descriptor()),
            ));
        }
        Some(MuVerdicts {
            images: mu.images,
            injective: mu.injective,
            surjective: mu.surjective,
            bijective: mu.bijective,
            double_coset_injective: prime.injective,
            double_coset_surjective: prime.surjective,
        })
    } else {
        None
    };
    let theta = if j > i && cat.kind() != CategoryKind::Vic {
        let census = theta_census(cat, i, j)?;
        if !census.classes_match_orbits || census.compatible_with_step == Some(false) {
            return Err(Error::violation(
                "θ is a complete orbit invariant compatible with m_{i,j}",
                format!("{} at ({i},{j})", cat.descriptor()),
            ));
        }
        Some(census)
    } else {
        None
    };
    Ok(OrbitRow {
        i,
        j,
        hom_set_size: cat.hom_set(i, j)?.len(),
        stabilizer_order: decomposition.stabilizer_order,
        orbit_count: decomposition.len(),
        orbit_sizes: decomposition.sizes(),
        mu,
        theta,
    })
}

pub fn orbits_cmd(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let cat = cfg.category_instance()?;
    for &i in &cfg.i {
        report.section(&format!("orbits i={i}"), "orbit maps μ_{i,j} and θ_{i,j}", || {
            (i + 1..=cat.max_object())
                .into_par_iter()
                .map(|j| orbit_row(&cat, i, j))
                .collect::<Result<Vec<_>>>()
        })?;
    }
    Ok(())
}

fn load_module(cfg: &RunConfig, cat: &Arc<CategoryInstance>, default: &str) -> Result<ModuleSpec> {
    let i = cfg.i[0];
    let top = cat.max_object();
    match &cfg.generators {
        Some(path) => {
            let m = crate::kcmod::free_module(cat, i, top)?;
            let gens = load_generators(path, |d| (d <= top).then(|| m.module().dim(d)))?;
            let name = path.display().to_string();
            generated_in_free(name, cat, i, top, &gens)
        }
        None => builtin_module(cfg.module.as_deref().unwrap_or(default), cat, i, top),
    }
}

#[derive(Serialize)]
struct EndRow {
    j: usize,
    dim: usize,
    orbit_count: usize,
    idempotent: EIdempotent,
    averaging: AveragingReport,
}

#[derive(Serialize)]
struct NuRow {
    j: usize,
    bijective_on_end: bool,
    orbit_images: Vec<usize>,
    hom: NuHomCheck,
}

pub fn stabilize(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let cat = Arc::new(cfg.category_instance()?);
    let spec = load_module(cfg, &cat, "sum-zero")?;
    let m = spec.free.clone().ok_or_else(|| {
        Error::Precondition(format!("stabilize needs a submodule of M(i); `{}` is not one", spec.name))
    })?;
    let i = m.source();
    let top = cat.max_object();
    if top < i + 2 {
        return Err(Error::Precondition(format!("stabilize needs J >= i + 2, got i={i}, J={top}")));
    }
    let j0 = match cfg.j0 {
        Some(j0) => j0,
        None => check_bijectivity(&cat, i, top - 1)?.onset.ok_or_else(|| {
            Error::Precondition(format!("no bijectivity onset for i={i} within J={top}; pass --j0"))
        })?,
    };
    let x = &spec.submodule;
    report.section("chain", "stabilization diagram; bounded monotone Hom chain", || {
        chain_report(&m, x, j0, cfg.audit)
    })?;
    report.section("endomorphisms", "f_O basis of End; e_{i,j} idempotent; averaging lemma", || {
        (j0..=top)
            .into_par_iter()
            .map(|j| {
                let basis = end_basis(&m, j, cfg.audit)?;
                Ok(EndRow {
                    j,
                    dim: basis.len(),
                    orbit_count: basis.orbits.len(),
                    idempotent: e_idempotent(&m, j)?,
                    averaging: averaging_suite(&m, j)?,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    report.section("nu", "ν_{i,j} value formula; ν preserves Hom(M(i)_j, X_j)", || {
        (j0..top)
            .into_par_iter()
            .map(|j| {
                let nu = NuMap::new(&m, j, cfg.audit)?;
                let bijective_on_end = nu.is_bijective()?;
                let hom = nu_preserves_hom(&nu, x)?;
                if !(bijective_on_end && hom.preserved && hom.injective) {
                    return Err(Error::violation("ν bijective and Hom-preserving", format!("({i},{j})")));
                }
                Ok(NuRow {
                    j,
                    bijective_on_end,
                    orbit_images: nu.mu.images.clone(),
                    hom,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    report.section("finite-generation", "finite generation criterion ρ_j(V) = V_{j+1}", || fg_verdict(x))
}

#[derive(Serialize)]
struct TorsionSection {
    module_dims: Vec<usize>,
    torsion_dims: Vec<usize>,
    vanishes_from: usize,
    equals_module: bool,
    generator_ceiling: Option<usize>,
    vanishes_beyond_generators: Option<bool>,
}

pub fn fg_torsion(cfg: &RunConfig, report: &mut Report) -> Result<()> {
    let cat = Arc::new(cfg.category_instance()?);
    let spec = load_module(cfg, &cat, "free")?;
    let x = &spec.submodule;
    let mut fg: Option<FgReport> = None;
    report.section("finite-generation", "finite generation criterion ρ_j(V) = V_{j+1}", || {
        let r = fg_verdict(x)?;
        fg = Some(r.clone());
        Ok(r)
    })?;
    let fg = fg.expect("section ran");
    report.section("torsion", "torsion submodule; α_j injective for large j", || {
        let t = torsion(x)?;
        let module_dims = x.dims();
        let ceiling = fg.generator_degrees.iter().max().copied();
        let vanishes_from = t.vanishes_from();
        Ok(TorsionSection {
            equals_module: t.dims[..] == module_dims[..t.dims.len()],
            module_dims,
            vanishes_from,
            generator_ceiling: ceiling,
            vanishes_beyond_generators: ceiling.map(|c| vanishes_from <= c + 1),
            torsion_dims: t.dims,
        })
    })?;
    if let Some(sum) = &spec.sum {
        let s = sum.degrees().len() - 1;
        report.section("projection", "projections p_s on M(S)", || -> Result<ProjectionReport> {
            sum_and_project(sum, x, s)
        })?;
    }
    Ok(())
}
