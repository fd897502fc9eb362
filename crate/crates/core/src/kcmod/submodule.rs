use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use super::module::GradedModule;
use crate::error::{Error, Result};
use crate::exactalg::{Field, QSubspace, Rational, Rationals};

/// A homogeneous element: a coordinate vector against the canonical basis
/// of `V_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousElement {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl HomogeneousElement {
    pub fn new(degree: usize, coords: Vec<Rational>) -> Self {
        HomogeneousElement { degree, coords }
    }

    /// Integer coordinates, mostly for tests and builtins.
    pub fn from_ints(degree: usize, coords: &[i64]) -> Self {
        let q = Rationals;
        HomogeneousElement {
            degree,
            coords: coords.iter().map(|&c| q.from_i64(c)).collect(),
        }
    }
}

/// A graded family of subspaces `X_j ⊆ V_j`, closed under the module action
/// up to the truncation of the parent.
#[derive(Clone, Debug)]
pub struct GradedSubmodule {
    parent: Arc<GradedModule>,
    spaces: Vec<QSubspace>,
}

impl GradedSubmodule {
    pub fn full(parent: &Arc<GradedModule>) -> Self {
        let spaces = parent.dims().iter().map(|&d| QSubspace::full(Rationals, d)).collect();
        GradedSubmodule {
            parent: parent.clone(),
            spaces,
        }
    }

    pub fn zero(parent: &Arc<GradedModule>) -> Self {
        let spaces = parent.dims().iter().map(|&d| QSubspace::zero(Rationals, d)).collect();
        GradedSubmodule {
            parent: parent.clone(),
            spaces,
        }
    }

    /// Wraps explicit subspaces after checking closure.
    pub fn from_spaces(parent: &Arc<GradedModule>, spaces: Vec<QSubspace>) -> Result<Self> {
        if spaces.len() != parent.dims().len() {
            return Err(Error::DimensionMismatch {
                expected: parent.dims().len(),
                found: spaces.len(),
            });
        }
        for (j, s) in spaces.iter().enumerate() {
            if s.ambient() != parent.dim(j) {
                return Err(Error::DimensionMismatch {
                    expected: parent.dim(j),
                    found: s.ambient(),
                });
            }
        }
        let x = GradedSubmodule {
            parent: parent.clone(),
            spaces,
        };
        if !x.is_closed()? {
            return Err(Error::Precondition(format!(
                "subspaces are not a submodule of {}",
                parent.label()
            )));
        }
        Ok(x)
    }

    pub fn parent(&self) -> &Arc<GradedModule> {
        &self.parent
    }

    pub fn top(&self) -> usize {
        self.parent.top()
    }

    pub fn space(&self, j: usize) -> &QSubspace {
        &self.spaces[j]
    }

    pub fn spaces(&self) -> &[QSubspace] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(QSubspace::dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(QSubspace::is_zero)
    }

    /// Closed under the designated generators of every `G_j` and every `α_j`.
    pub fn is_closed(&self) -> Result<bool> {
        let v = &self.parent;
        for j in 0..=self.top() {
            let s = &self.spaces[j];
            for a in v.generator_actions(j) {
                if !s.contains_subspace(&s.image_under(a)?)? {
                    return Ok(false);
                }
            }
            if j < self.top() && !self.spaces[j + 1].contains_subspace(&s.image_under(v.alpha_action(j))?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains(&self, other: &GradedSubmodule) -> Result<bool> {
        if !Arc::ptr_eq(&self.parent, &other.parent) {
            return Err(Error::Precondition("submodules of different modules".into()));
        }
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            if !a.contains_subspace(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Homogeneous spanning elements: the stored basis of every degree.
    pub fn spanning_elements(&self) -> Vec<HomogeneousElement> {
        self.spaces
            .iter()
            .enumerate()
            .flat_map(|(j, s)| {
                s.basis_vectors()
                    .into_iter()
                    .map(move |coords| HomogeneousElement { degree: j, coords })
            })
            .collect()
    }
}

impl PartialEq for GradedSubmodule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.spaces == other.spaces
    }
}

/// Smallest `G_j`-stable subspace of `V_j` containing `start`.
pub(crate) fn close_under_group(v: &GradedModule, j: usize, start: QSubspace) -> Result<QSubspace> {
    let mut space = start;
    let mut queue: VecDeque<Vec<Rational>> = space.basis_vectors().into();
    while let Some(x) = queue.pop_front() {
        let mut fresh = Vec::new();
        for a in v.generator_actions(j) {
            let y = a.mul_vec(&x)?;
            if !space.contains(&y)? && !fresh.contains(&y) {
                fresh.push(y);
            }
        }
        if !fresh.is_empty() {
            space = space.extend(&fresh)?;
            queue.extend(fresh);
        }
    }
    Ok(space)
}

/// The submodule generated by homogeneous elements: seed each degree with
/// the generators of that degree and the `α`-image of the previous degree,
/// then close under `G_j`.
pub fn submodule_generated(parent: &Arc<GradedModule>, generators: &[HomogeneousElement]) -> Result<GradedSubmodule> {
    for g in generators {
        if g.degree > parent.top() {
            return Err(Error::ObjectOutOfRange {
                object: g.degree,
                max: parent.top(),
            });
        }
        if g.coords.len() != parent.dim(g.degree) {
            return Err(Error::DimensionMismatch {
                expected: parent.dim(g.degree),
                found: g.coords.len(),
            });
        }
    }
    let mut spaces: Vec<QSubspace> = Vec::with_capacity(parent.top() + 1);
    for j in 0..=parent.top() {
        let mut seeds: Vec<Vec<Rational>> = generators
            .iter()
            .filter(|g| g.degree == j)
            .map(|g| g.coords.clone())
            .collect();
        if j > 0 {
            let prev = &spaces[j - 1];
            for r in 0..prev.dim() {
                seeds.push(parent.alpha_action(j - 1).mul_vec(prev.basis().row(r))?);
            }
        }
        let start = QSubspace::span(Rationals, parent.dim(j), &seeds)?;
        spaces.push(close_under_group(parent, j, start)?);
    }
    Ok(GradedSubmodule {
        parent: parent.clone(),
        spaces,
    })
}

/// `ρ_j(X) ⊆ X_{j+1}`, computed from every arrow of `C(j,j+1)` and,
/// independently, as the `G_{j+1}`-closure of `α_j(X_j)`. The two must agree.
pub fn rho_image(x: &GradedSubmodule, j: usize) -> Result<QSubspace> {
    let v = x.parent();
    if j >= x.top() {
        return Err(Error::Precondition(format!(
            "ρ_j needs j < J, got j={j}, J={}",
            x.top()
        )));
    }
    let source = x.space(j).basis_vectors();
    let via_alpha = close_under_group(v, j + 1, x.space(j).image_under(v.alpha_action(j))?)?;
    let cat = v.category();
    let mut via_arrows = QSubspace::zero(Rationals, v.dim(j + 1));
    if !source.is_empty() {
        for beta in cat.hom_set(j, j + 1)?.iter() {
            let images = source
                .iter()
                .map(|s| v.apply_morphism(beta, s))
                .collect::<Result<Vec<_>>>()?;
            let fresh: Vec<_> = images
                .into_iter()
                .filter(|y| !via_arrows.contains(y).unwrap_or(false))
                .collect();
            if !fresh.is_empty() {
                via_arrows = via_arrows.extend(&fresh)?;
            }
            // ρ_j(X) ⊆ X_{j+1}, so reaching its dimension is final.
            if via_arrows.dim() == via_alpha.dim() && via_arrows == via_alpha {
                break;
            }
        }
    }
    if via_arrows != via_alpha {
        return Err(Error::violation(
            "ρ_j two-way computation",
            format!("{} at j={j}: arrows span {} dims, G-closure {}", v.label(), via_arrows.dim(), via_alpha.dim()),
        ));
    }
    if !x.space(j + 1).contains_subspace(&via_alpha)? {
        return Err(Error::violation("submodule closure", format!("ρ_{j}(X) ⊄ X_{}", j + 1)));
    }
    Ok(via_alpha)
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoFlag {
    pub j: usize,
    pub rho_dim: usize,
    pub next_dim: usize,
    /// `ρ_j(V) = V_{j+1}`.
    pub surjective: bool,
}

/// Finite-generation verdict up to the truncation.
#[derive(Clone, Debug, Serialize)]
pub struct FgReport {
    pub top: usize,
    pub flags: Vec<RhoFlag>,
    /// `0` when `V_0 ≠ 0`, plus `j+1` for every failing flag.
    pub generator_degrees: Vec<usize>,
    /// Least `w` with every flag in `[w, J-1]` true; `None` when the last one fails.
    pub window_start: Option<usize>,
    pub verdict: String,
}

pub fn fg_verdict(x: &GradedSubmodule) -> Result<FgReport> {
    let top = x.top();
    let mut flags = Vec::with_capacity(top);
    for j in 0..top {
        let rho = rho_image(x, j)?;
        let next_dim = x.space(j + 1).dim();
        flags.push(RhoFlag {
            j,
            rho_dim: rho.dim(),
            next_dim,
            surjective: rho.dim() == next_dim,
        });
    }
    let mut generator_degrees = Vec::new();
    if !x.space(0).is_zero() {
        generator_degrees.push(0);
    }
    generator_degrees.extend(flags.iter().filter(|f| !f.surjective).map(|f| f.j + 1));
    let mut window_start = Some(top);
    for f in flags.iter().rev() {
        if !f.surjective {
            break;
        }
        window_start = Some(f.j);
    }
    if flags.last().is_some_and(|f| !f.surjective) {
        window_start = None;
    }
    let verdict = match window_start {
        Some(w) => format!("no failure in [{w}, {top}]; nothing is claimed beyond J = {top}"),
        None => format!("ρ_{}(V) ≠ V_{top}; no trailing window within J = {top}", top - 1),
    };
    Ok(FgReport {
        top,
        flags,
        generator_degrees,
        window_start,
        verdict,
    })
}

/// Degreewise kernels of `α_j` on `X_j` for `j < J`. Degree `J` has no
/// outgoing `α` inside the truncation and is left at zero.
#[derive(Clone, Debug)]
pub struct Torsion {
    pub submodule: GradedSubmodule,
    /// Dimensions for degrees `0..J`.
    pub dims: Vec<usize>,
}

impl Torsion {
    /// Least degree from which the torsion vanishes through `J-1`.
    pub fn vanishes_from(&self) -> usize {
        self.dims.iter().rposition(|&d| d != 0).map_or(0, |k| k + 1)
    }
}

pub fn torsion(x: &GradedSubmodule) -> Result<Torsion> {
    let v = x.parent();
    let top = x.top();
    let mut spaces = Vec::with_capacity(top + 1);
    for j in 0..top {
        let kernel = v.alpha_action(j).kernel();
        spaces.push(kernel.intersection(x.space(j))?);
    }
    spaces.push(QSubspace::zero(Rationals, v.dim(top)));
    // The closure argument: β = g α_j for β ∈ C(j,j+1), so β(t) = g(α_j t) = 0.
    let cat = v.category();
    for (j, t) in spaces.iter().enumerate().take(top) {
        if t.is_zero() {
            continue;
        }
        for a in v.generator_actions(j) {
            if !t.contains_subspace(&t.image_under(a)?)? {
                return Err(Error::violation("torsion closure", format!("G_{j} leaves the kernel of α_{j}")));
            }
        }
        for beta in cat.hom_set(j, j + 1)?.iter() {
            for b in t.basis_vectors() {
                if v.apply_morphism(beta, &b)?.iter().any(|c| !Rationals.is_zero(c)) {
                    return Err(Error::violation(
                        "torsion closure",
                        format!("an arrow of C({j},{}) does not kill the kernel of α_{j}", j + 1),
                    ));
                }
            }
        }
    }
    let dims = spaces[..top].iter().map(QSubspace::dim).collect();
    Ok(Torsion {
        submodule: GradedSubmodule {
            parent: v.clone(),
            spaces,
        },
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eicat::CategoryInstance;
    use crate::kcmod::{atom_module, free_module};

    fn m1(top: usize) -> Arc<GradedModule> {
        let cat = Arc::new(CategoryInstance::fi(top));
        free_module(&cat, 1, top).unwrap().module().clone()
    }

    #[test]
    fn empty_generators_give_zero() {
        let v = m1(3);
        let x = submodule_generated(&v, &[]).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn sum_zero_dims() {
        let v = m1(4);
        let x = submodule_generated(&v, &[HomogeneousElement::from_ints(2, &[1, -1])]).unwrap();
        assert_eq!(x.dims(), vec![0, 0, 1, 2, 3]);
        assert!(x.is_closed().unwrap());
    }

    #[test]
    fn regenerating_is_a_fixed_point() {
        let v = m1(4);
        let x = submodule_generated(&v, &[HomogeneousElement::from_ints(2, &[1, -1])]).unwrap();
        let again = submodule_generated(&v, &x.spanning_elements()).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn free_module_fg() {
        let v = m1(4);
        let report = fg_verdict(&GradedSubmodule::full(&v)).unwrap();
        assert_eq!(report.generator_degrees, vec![1]);
        assert_eq!(report.window_start, Some(1));
    }

    #[test]
    fn atom_is_all_torsion() {
        let cat = Arc::new(CategoryInstance::fi(3));
        let a = Arc::new(atom_module(&cat, 0, 3).unwrap());
        let t = torsion(&GradedSubmodule::full(&a)).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0]);
        assert_eq!(t.vanishes_from(), 1);
    }

    #[test]
    fn wrong_length_rejected() {
        let v = m1(2);
        assert!(submodule_generated(&v, &[HomogeneousElement::from_ints(2, &[1])]).is_err());
        assert!(submodule_generated(&v, &[HomogeneousElement::from_ints(3, &[1])]).is_err());
    }
}
