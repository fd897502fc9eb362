use std::sync::Arc;

use serde::Serialize;

use super::endo::{end_basis, EndBasis};
use super::hom::{flat, hom_space};
use crate::eicat::TransporterTable;
use crate::error::{Error, Result};
use crate::exactalg::{Field, QMatrix, QSubspace, Rational, Rationals};
use crate::kcmod::{FreeModule, GradedModule, GradedSubmodule};
use crate::orbitlab::{m_map, mu_map, stabilizer, MuMap};

/// `ν_{i,j}: End_{G_j}(M(i)_j) → End_{G_{j+1}}(M(i)_{j+1})`, available only
/// where `μ_{i,j}` is bijective and `m_{i,j}` injective.
#[derive(Clone, Debug)]
pub struct NuMap {
    pub i: usize,
    pub j: usize,
    pub mu: MuMap,
    pub from: EndBasis,
    pub to: EndBasis,
    free: FreeModule,
    stab_next: Vec<usize>,
    table_next: Arc<TransporterTable>,
}

impl NuMap {
    pub fn new(m: &FreeModule, j: usize, audit: bool) -> Result<Self> {
        let i = m.source();
        let cat = m.module().category();
        if j + 1 > m.module().top() {
            return Err(Error::Precondition(format!(
                "ν_{{{i},{j}}} needs degree {} but M({i}) is truncated at {}",
                j + 1,
                m.module().top()
            )));
        }
        let mu = mu_map(cat, i, j)?;
        let injective = m_map(cat, i, j)?.injective;
        if !(mu.bijective && injective) {
            return Err(Error::Precondition(format!(
                "ν_{{{i},{j}}} is only defined where μ_{{{i},{j}}} is bijective and m_{{{i},{j}}} injective"
            )));
        }
        Ok(NuMap {
            i,
            j,
            from: end_basis(m, j, audit)?,
            to: end_basis(m, j + 1, audit)?,
            mu,
            free: m.clone(),
            stab_next: stabilizer(cat, i, j + 1)?.elements,
            table_next: cat.transporters_from_alpha(i, j + 1)?,
        })
    }

    /// Coordinates of an equivariant `f` in the `f_O` basis. The `f_O` have
    /// disjoint supports in the column of `α_{i,j}`, so `c_O = |O| f(α)_{rep O}`.
    pub fn coordinates(&self, f: &QMatrix) -> Result<Vec<Rational>> {
        let q = Rationals;
        let a = self.from.alpha_position;
        let coords: Vec<Rational> = self
            .from
            .orbits
            .orbits
            .iter()
            .map(|o| q.mul(&q.from_i64(o.len() as i64), f.get(o[0], a)))
            .collect();
        if combine(&self.from.maps, &coords)? != *f {
            return Err(Error::Precondition(format!(
                "not a G_{}-endomorphism of M({})_{}",
                self.j, self.i, self.j
            )));
        }
        Ok(coords)
    }

    /// `f_O ↦ f_{μ(O)}`, extended linearly.
    pub fn by_transport(&self, f: &QMatrix) -> Result<QMatrix> {
        let coords = self.coordinates(f)?;
        let mut moved = vec![Rationals.zero(); self.to.len()];
        for (o, c) in coords.into_iter().enumerate() {
            moved[self.mu.images[o]] = c;
        }
        combine(&self.to.maps, &moved)
    }

    /// `ν(f)(α_{i,j+1}) = e_{i,j+1} α_j (f(α_{i,j}))` computed with the module
    /// actions of `v`, then extended by `ν(f)(g α_{i,j+1}) = g ν(f)(α_{i,j+1})`.
    /// `f` is a `dim V_j × |C(i,j)|` matrix.
    pub fn by_formula(&self, v: &GradedModule, f: &QMatrix) -> Result<QMatrix> {
        let q = Rationals;
        let j = self.j;
        let x = f.column(self.from.alpha_position);
        let y = v.alpha_action(j).mul_vec(&x)?;
        let weight = Rational::new(1.into(), self.stab_next.len().into());
        let mut w = vec![q.zero(); v.dim(j + 1)];
        for &h in &self.stab_next {
            for (acc, z) in w.iter_mut().zip(v.apply_group(j + 1, h, &y)?) {
                if !q.is_zero(&z) {
                    *acc = q.add(acc, &q.mul(&weight, &z));
                }
            }
        }
        let n = self.table_next.witness.len();
        let mut columns = Vec::with_capacity(n);
        for c in 0..n {
            let g = self.table_next.witness[c]
                .ok_or_else(|| Error::violation("transitivity", format!("C({},{})", self.i, j + 1)))?;
            columns.push(v.apply_group(j + 1, g, &w)?);
        }
        QMatrix::from_columns(q, v.dim(j + 1), &columns)
    }

    /// Both constructions on `M(i)`; they must agree exactly.
    pub fn apply(&self, f: &QMatrix) -> Result<QMatrix> {
        let a = self.by_transport(f)?;
        let b = self.by_formula(self.free.module(), f)?;
        if a != b {
            return Err(Error::violation(
                "ν value formula",
                format!("orbit transport and e α_j f(α) disagree at ({},{})", self.i, self.j),
            ));
        }
        Ok(a)
    }

    /// Images of the `f_O` basis, and whether they form a basis of the target.
    pub fn is_bijective(&self) -> Result<bool> {
        let images = self.from.maps.iter().map(|f| self.apply(f)).collect::<Result<Vec<_>>>()?;
        let n = self.to.maps.first().map_or(0, |f| f.rows() * f.cols());
        let span = QSubspace::span(Rationals, n, &flat(&images))?;
        let target = QSubspace::span(Rationals, n, &flat(&self.to.maps))?;
        Ok(self.from.len() == self.to.len() && span == target)
    }
}

fn combine(maps: &[QMatrix], coords: &[Rational]) -> Result<QMatrix> {
    let q = Rationals;
    let (r, c) = maps.first().map_or((0, 0), |f| (f.rows(), f.cols()));
    let mut acc = QMatrix::zeros(q, r, c);
    for (f, k) in maps.iter().zip(coords) {
        if !q.is_zero(k) {
            acc = acc.add(&f.scale(k))?;
        }
    }
    Ok(acc)
}

/// `ν` of a single equivariant endomorphism, both ways.
pub fn nu_map(m: &FreeModule, j: usize, f: &QMatrix) -> Result<QMatrix> {
    NuMap::new(m, j, false)?.apply(f)
}

#[derive(Clone, Debug, Serialize)]
pub struct NuHomCheck {
    pub i: usize,
    pub j: usize,
    pub dim_from: usize,
    pub dim_to: usize,
    /// Every `ν(f)` lies in `Hom_{G_{j+1}}(M(i)_{j+1}, X_{j+1})`.
    pub preserved: bool,
    pub injective: bool,
}

/// `ν` restricted to `Hom(M(i)_j, X_j)` for a submodule `X ⊆ M(i)`.
pub fn nu_preserves_hom(nu: &NuMap, x: &GradedSubmodule) -> Result<NuHomCheck> {
    if !Arc::ptr_eq(x.parent(), nu.free.module()) {
        return Err(Error::Precondition(format!("X must be a submodule of M({})", nu.i)));
    }
    let from = hom_space(&nu.free, x, nu.j, false)?;
    let to = hom_space(&nu.free, x, nu.j + 1, false)?;
    let images = from.basis.iter().map(|f| nu.apply(f)).collect::<Result<Vec<_>>>()?;
    let flat_images = flat(&images);
    let target = to.flat_span()?;
    let mut preserved = true;
    for v in &flat_images {
        preserved &= target.contains(v)?;
    }
    let rank = QSubspace::span(Rationals, to.target_dim * to.source_dim, &flat_images)?.dim();
    Ok(NuHomCheck {
        i: nu.i,
        j: nu.j,
        dim_from: from.dim,
        dim_to: to.dim,
        preserved,
        injective: rank == from.dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eicat::CategoryInstance;
    use crate::kcmod::{builtin_module, free_module};

    #[test]
    fn identity_goes_to_identity() {
        let cat = Arc::new(CategoryInstance::fi(4));
        let m = free_module(&cat, 1, 4).unwrap();
        let nu = NuMap::new(&m, 2, false).unwrap();
        let id = QMatrix::identity(Rationals, 2);
        assert_eq!(nu.apply(&id).unwrap(), QMatrix::identity(Rationals, 3));
        assert_eq!(nu.mu.images, vec![0, 1]);
        assert!(nu.is_bijective().unwrap());
    }

    #[test]
    fn refuses_below_onset() {
        let cat = Arc::new(CategoryInstance::fi(3));
        let m = free_module(&cat, 1, 3).unwrap();
        assert!(matches!(NuMap::new(&m, 1, false), Err(Error::Precondition(_))));
    }

    #[test]
    fn linear() {
        let cat = Arc::new(CategoryInstance::fi(4));
        let m = free_module(&cat, 1, 4).unwrap();
        let nu = NuMap::new(&m, 3, false).unwrap();
        let (a, b) = (&nu.from.maps[0], &nu.from.maps[1]);
        let sum = nu.apply(&a.add(b).unwrap()).unwrap();
        assert_eq!(sum, nu.apply(a).unwrap().add(&nu.apply(b).unwrap()).unwrap());
    }

    #[test]
    fn sum_zero_preserved() {
        let cat = Arc::new(CategoryInstance::fi(4));
        let x = builtin_module("sum-zero", &cat, 1, 4).unwrap();
        let m = x.free.clone().unwrap();
        let nu = NuMap::new(&m, 2, false).unwrap();
        let check = nu_preserves_hom(&nu, &x.submodule).unwrap();
        assert!(check.preserved && check.injective);
        assert_eq!((check.dim_from, check.dim_to), (1, 1));
    }
}
