use serde::Serialize;

use super::orbits::{double_cosets, orbits, require_lt, stabilizer, subgroup_generators, DoubleCosets, OrbitDecomposition};
use crate::eicat::CategoryInstance;
use crate::error::{Error, Result};

fn check_top(cat: &CategoryInstance, i: usize, j: usize) -> Result<()> {
    require_lt(i, j)?;
    if j + 1 > cat.max_object() {
        return Err(Error::Precondition(format!(
            "maps out of degree {j} need object {} but the truncation is {}",
            j + 1,
            cat.max_object()
        )));
    }
    Ok(())
}

/// `m_{i,j}: C(i,j) → C(i,j+1)`, `γ ↦ α_j γ`, as an index table.
#[derive(Clone, Debug, Serialize)]
pub struct MMap {
    pub source: usize,
    pub target: usize,
    pub images: Vec<usize>,
    pub injective: bool,
}

pub fn m_map(cat: &CategoryInstance, i: usize, j: usize) -> Result<MMap> {
    check_top(cat, i, j)?;
    let from = cat.hom_set(i, j)?;
    let to = cat.hom_set(i, j + 1)?;
    let alpha = cat.alpha(j)?;
    let images: Vec<usize> = from
        .iter()
        .map(|g| {
            to.position(&cat.compose_unchecked(&alpha, g))
                .ok_or_else(|| Error::violation("m_{i,j} codomain", "α_j γ not in C(i,j+1)"))
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![false; to.len()];
    let injective = images.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
    Ok(MMap {
        source: i,
        target: j,
        images,
        injective,
    })
}

/// Verdicts for a map between finite sets given as an index table.
fn verdicts(images: &[usize], codomain: usize) -> (bool, bool) {
    let mut hit = vec![0usize; codomain];
    for &y in images {
        hit[y] += 1;
    }
    let injective = hit.iter().all(|&c| c <= 1);
    let surjective = hit.iter().all(|&c| c >= 1);
    (injective, surjective)
}

/// `μ_{i,j}` on `H_{i,j}`-orbits.
#[derive(Clone, Debug, Serialize)]
pub struct MuMap {
    pub source: usize,
    pub target: usize,
    pub source_orbits: usize,
    pub target_orbits: usize,
    pub images: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

pub(crate) fn mu_from_parts(m: &MMap, from: &OrbitDecomposition, to: &OrbitDecomposition) -> Result<MuMap> {
    let mut images = Vec::with_capacity(from.len());
    for (k, orbit) in from.orbits.iter().enumerate() {
        let target = to.orbit_of[m.images[orbit[0]]];
        if let Some(&bad) = orbit.iter().find(|&&g| to.orbit_of[m.images[g]] != target) {
            return Err(Error::violation(
                "μ_{i,j} well-definedness",
                format!(
                    "orbit {k} of C({},{}) meets target orbits {target} and {} (element {bad})",
                    m.source,
                    m.target,
                    to.orbit_of[m.images[bad]]
                ),
            ));
        }
        images.push(target);
    }
    let (injective, surjective) = verdicts(&images, to.len());
    Ok(MuMap {
        source: m.source,
        target: m.target,
        source_orbits: from.len(),
        target_orbits: to.len(),
        images,
        injective,
        surjective,
        bijective: injective && surjective,
    })
}

/// `μ_{i,j}`, with well-definedness checked on every orbit element.
pub fn mu_map(cat: &CategoryInstance, i: usize, j: usize) -> Result<MuMap> {
    let m = m_map(cat, i, j)?;
    mu_from_parts(&m, &orbits(cat, i, j)?, &orbits(cat, i, j + 1)?)
}

/// `μ'_{i,j}` on double cosets `H_{i,j}\G_j/H_{i,j}`.
#[derive(Clone, Debug, Serialize)]
pub struct MuPrimeMap {
    pub source: usize,
    pub target: usize,
    pub source_cosets: usize,
    pub target_cosets: usize,
    pub images: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

/// Computes `μ'_{i,j}` with `u` taken from the transporter table of `α_j`,
/// verifies that the image does not depend on the choice of coset
/// representative or of `u`, and checks it against `μ_{i,j}` through
/// `g H_{i,j} ↦ g α_{i,j}`.
pub fn mu_prime_map(cat: &CategoryInstance, i: usize, j: usize) -> Result<MuPrimeMap> {
    check_top(cat, i, j)?;
    let stab_j = stabilizer(cat, i, j)?;
    let stab_next = stabilizer(cat, i, j + 1)?;
    let source = double_cosets(cat, &stab_j)?;
    let target = double_cosets(cat, &stab_next)?;
    let g_j = stab_j.group().clone();
    let g_next = stab_next.group().clone();
    let alpha_j = cat.alpha(j)?;
    let step = cat.hom_set(j, j + 1)?;
    let table = cat.transporters_from_alpha(j, j + 1)?;

    let lift = |g: usize| -> Result<usize> {
        let beta = cat.compose_unchecked(&alpha_j, g_j.get(g));
        let pos = step.position(&beta).expect("α_j g ∈ C(j,j+1)");
        table.witness[pos].ok_or_else(|| {
            Error::violation(
                "transitivity",
                format!("no u ∈ G_{} with α_j g = u α_j", j + 1),
            )
        })
    };

    let mut images = vec![usize::MAX; source.len()];
    for g in 0..g_j.len() {
        let image = target.class_of[lift(g)?];
        let class = source.class_of[g];
        if images[class] == usize::MAX {
            images[class] = image;
        } else if images[class] != image {
            return Err(Error::violation(
                "μ'_{i,j} well-definedness",
                format!("double coset {class} of G_{j} has two images"),
            ));
        }
    }
    // Other valid choices of u differ by the stabilizer of α_j in G_{j+1}.
    let stab_step = stabilizer(cat, j, j + 1)?;
    let alt = subgroup_generators(cat, &g_next, &stab_step.elements);
    for (class, members) in source.classes.iter().enumerate() {
        let u = g_next.get(lift(members[0])?);
        for &s in &alt {
            let other = g_next
                .position(&cat.compose_unchecked(u, g_next.get(s)))
                .expect("group closed");
            if target.class_of[other] != images[class] {
                return Err(Error::violation(
                    "μ'_{i,j} independence of u",
                    format!("double coset {class} depends on the choice of u"),
                ));
            }
        }
    }
    let (injective, surjective) = verdicts(&images, target.len());
    let mu_prime = MuPrimeMap {
        source: i,
        target: j,
        source_cosets: source.len(),
        target_cosets: target.len(),
        images,
        injective,
        surjective,
        bijective: injective && surjective,
    };
    let mu = mu_map(cat, i, j)?;
    check_agreement(cat, i, j, &source, &target, &mu_prime, &mu)?;
    Ok(mu_prime)
}

/// Double coset `D ↦` the `H`-orbit of `g α_{i,j}` for `g ∈ D`; must be a
/// bijection intertwining `μ'` and `μ`.
fn coset_to_orbit(cat: &CategoryInstance, i: usize, j: usize, cosets: &DoubleCosets) -> Result<Vec<usize>> {
    let decomposition = orbits(cat, i, j)?;
    let homs = cat.hom_set(i, j)?;
    let group = cat.group(j)?;
    let alpha = cat.alpha_path(i, j)?;
    let mut map = vec![usize::MAX; cosets.len()];
    for (g, &class) in cosets.class_of.iter().enumerate() {
        let pos = homs
            .position(&cat.compose_unchecked(group.get(g), &alpha))
            .expect("G_j preserves C(i,j)");
        let orbit = decomposition.orbit_of[pos];
        if map[class] == usize::MAX {
            map[class] = orbit;
        } else if map[class] != orbit {
            return Err(Error::violation(
                "double coset formulation",
                format!("double coset {class} of G_{j} meets two H-orbits"),
            ));
        }
    }
    let (injective, surjective) = verdicts(&map, decomposition.len());
    if !(injective && surjective) {
        return Err(Error::violation(
            "double coset formulation",
            format!("double cosets of G_{j} are not in bijection with H-orbits on C({i},{j})"),
        ));
    }
    Ok(map)
}

fn check_agreement(
    cat: &CategoryInstance,
    i: usize,
    j: usize,
    source: &DoubleCosets,
    target: &DoubleCosets,
    mu_prime: &MuPrimeMap,
    mu: &MuMap,
) -> Result<()> {
    let phi = coset_to_orbit(cat, i, j, source)?;
    let phi_next = coset_to_orbit(cat, i, j + 1, target)?;
    for (d, &image) in mu_prime.images.iter().enumerate() {
        if mu.images[phi[d]] != phi_next[image] {
            return Err(Error::violation(
                "double coset formulation",
                format!("μ' and μ disagree on double coset {d} at ({i},{j})"),
            ));
        }
    }
    if (mu.injective, mu.surjective) != (mu_prime.injective, mu_prime.surjective) {
        return Err(Error::violation(
            "double coset formulation",
            format!("μ and μ' verdicts differ at ({i},{j})"),
        ));
    }
    Ok(())
}
