use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::eicat::{CategoryInstance, HomSet, Morphism};
use crate::error::{Error, Result};

pub(crate) fn require_lt(i: usize, j: usize) -> Result<()> {
    if i >= j {
        return Err(Error::Precondition(format!("need i < j, got ({i},{j})")));
    }
    Ok(())
}

/// `H_{i,j} = Stab_{G_j}(α_{i,j})` as indices into `G_j`, in canonical order.
#[derive(Clone, Debug)]
pub struct StabilizerSubgroup {
    pub source: usize,
    pub target: usize,
    pub elements: Vec<usize>,
    group: Arc<HomSet>,
}

impl StabilizerSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn group(&self) -> &Arc<HomSet> {
        &self.group
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &Morphism> + Clone + '_ {
        self.elements.iter().map(|&k| self.group.get(k))
    }
}

pub fn stabilizer(cat: &CategoryInstance, i: usize, j: usize) -> Result<StabilizerSubgroup> {
    require_lt(i, j)?;
    let alpha = cat.alpha_path(i, j)?;
    let group = cat.group(j)?;
    let elements = group
        .iter()
        .enumerate()
        .filter(|(_, g)| cat.compose_unchecked(g, &alpha) == alpha)
        .map(|(k, _)| k)
        .collect();
    Ok(StabilizerSubgroup {
        source: i,
        target: j,
        elements,
        group,
    })
}

/// Partition of `C(i,j)` into `H_{i,j}`-orbits. Orbits are listed in order of
/// their representative, which is the canonical minimum of the orbit.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitDecomposition {
    pub source: usize,
    pub target: usize,
    /// Orbit id of every element of `C(i,j)`.
    pub orbit_of: Vec<usize>,
    /// Member indices of each orbit, ascending.
    pub orbits: Vec<Vec<usize>>,
    pub stabilizer_order: usize,
}

impl OrbitDecomposition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn representative(&self, orbit: usize) -> usize {
        self.orbits[orbit][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// Orbits of the left action of `H_{i,j}` on `C(i,j)`, by applying every
/// stabilizer element to each not-yet-assigned element.
pub fn orbits(cat: &CategoryInstance, i: usize, j: usize) -> Result<OrbitDecomposition> {
    let stab = stabilizer(cat, i, j)?;
    let homs = cat.hom_set(i, j)?;
    orbits_under(cat, &homs, stab.morphisms(), stab.order())
}

pub(crate) fn orbits_under<'a>(
    cat: &CategoryInstance,
    homs: &HomSet,
    acting: impl Iterator<Item = &'a Morphism> + Clone,
    acting_order: usize,
) -> Result<OrbitDecomposition> {
    const UNSET: usize = usize::MAX;
    let mut orbit_of = vec![UNSET; homs.len()];
    let mut orbits = Vec::new();
    for k in 0..homs.len() {
        if orbit_of[k] != UNSET {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        for h in acting.clone() {
            let image = cat.compose_unchecked(h, homs.get(k));
            let pos = homs
                .position(&image)
                .ok_or_else(|| Error::violation("hom-set closure", "H·γ left C(i,j)"))?;
            if orbit_of[pos] == UNSET {
                orbit_of[pos] = id;
                members.push(pos);
            } else if orbit_of[pos] != id {
                return Err(Error::violation("orbit partition", "orbits overlap"));
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(OrbitDecomposition {
        source: homs.source,
        target: homs.target,
        orbit_of,
        orbits,
        stabilizer_order: acting_order,
    })
}

/// Some `g ∈ G_j` with `g·a = b`: the identity when `a = b`, otherwise the
/// first in canonical order. `None` is a transitivity counterexample.
pub fn transporter(cat: &CategoryInstance, a: &Morphism, b: &Morphism) -> Result<Option<Morphism>> {
    if (a.source(), a.target()) != (b.source(), b.target()) {
        return Err(Error::Precondition(format!(
            "transporter needs a common hom-set, got C({},{}) and C({},{})",
            a.source(),
            a.target(),
            b.source(),
            b.target()
        )));
    }
    // validates kinds
    cat.compose(&cat.identity(a.target()), a)?;
    cat.compose(&cat.identity(b.target()), b)?;
    if a == b {
        return Ok(Some(cat.identity(a.target())));
    }
    let group = cat.group(a.target())?;
    Ok(group.iter().find(|g| cat.compose_unchecked(g, a) == *b).cloned())
}

/// Small generating set of a subgroup given by element indices into `G_j`.
pub(crate) fn subgroup_generators(cat: &CategoryInstance, group: &HomSet, elements: &[usize]) -> Vec<usize> {
    let mut reached = vec![false; group.len()];
    let identity = group.position(&cat.identity(group.target)).expect("identity present");
    reached[identity] = true;
    let mut members = vec![identity];
    let mut gens: Vec<usize> = Vec::new();
    for &h in elements {
        if reached[h] {
            continue;
        }
        gens.push(h);
        let mut queue: VecDeque<usize> = members.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = group
                    .position(&cat.compose_unchecked(group.get(s), group.get(x)))
                    .expect("group closed");
                if !reached[y] {
                    reached[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    gens
}

/// The double cosets `H g H` of a subgroup `H ⊆ G_j`.
#[derive(Clone, Debug)]
pub struct DoubleCosets {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl DoubleCosets {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Closure of each element under left and right multiplication by a
/// generating set of `H`, directly in the group.
pub fn double_cosets(cat: &CategoryInstance, stab: &StabilizerSubgroup) -> Result<DoubleCosets> {
    let group = stab.group();
    let gens = subgroup_generators(cat, group, &stab.elements);
    const UNSET: usize = usize::MAX;
    let mut class_of = vec![UNSET; group.len()];
    let mut classes = Vec::new();
    for start in 0..group.len() {
        if class_of[start] != UNSET {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let gx = group.get(x);
            for &s in &gens {
                let s = group.get(s);
                for y in [cat.compose_unchecked(s, gx), cat.compose_unchecked(gx, s)] {
                    let y = group.position(&y).expect("group closed");
                    if class_of[y] == UNSET {
                        class_of[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(DoubleCosets { class_of, classes })
}
