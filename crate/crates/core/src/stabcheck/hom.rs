use serde::Serialize;

use crate::eicat::Morphism;
use crate::error::{Error, Result};
use crate::exactalg::{Field, LinearSystem, QMatrix, QSubspace, Rational, Rationals};
use crate::kcmod::{FreeModule, GradedModule, GradedSubmodule};

/// `Hom_{G_j}(M(i)_j, X_j)`, with maps written as `dim V_j × |C(i,j)|`
/// matrices in the coordinates of the parent `V ⊇ X`.
#[derive(Clone, Debug, Serialize)]
pub struct HomSpace {
    pub i: usize,
    pub j: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub dim: usize,
    #[serde(skip)]
    pub basis: Vec<QMatrix>,
}

impl HomSpace {
    /// The basis flattened into `Q^{target_dim · source_dim}`.
    pub fn flat_span(&self) -> Result<QSubspace> {
        QSubspace::span(Rationals, self.target_dim * self.source_dim, &flat(&self.basis))
    }
}

pub(crate) fn flat(maps: &[QMatrix]) -> Vec<Vec<Rational>> {
    maps.iter().map(|m| m.entries().to_vec()).collect()
}

/// Permutation of `C(i,j)` induced by post-composition with `g ∈ G_j`.
pub(crate) fn basis_permutation(m: &FreeModule, j: usize, g: &Morphism) -> Result<Vec<usize>> {
    let cat = m.module().category();
    let homs = m.basis(j)?;
    homs.iter()
        .map(|b| {
            homs.position(&cat.compose(g, b)?)
                .ok_or_else(|| Error::violation("hom-set closure", "g·β left C(i,j)"))
        })
        .collect()
}

/// The elements an equivariance system is stacked over: the designated
/// generators, or all of `G_j` in audit mode. Each comes with its
/// permutation of `C(i,j)` and its matrix on `V_j`.
pub(crate) fn acting_elements(
    m: &FreeModule,
    v: &GradedModule,
    j: usize,
    audit: bool,
) -> Result<Vec<(Vec<usize>, QMatrix)>> {
    let cat = m.module().category();
    if audit {
        let group = cat.group(j)?;
        group
            .iter()
            .enumerate()
            .map(|(k, g)| Ok((basis_permutation(m, j, g)?, v.group_action(j, k)?)))
            .collect()
    } else {
        cat.generators(j)?
            .iter()
            .zip(v.generator_actions(j))
            .map(|(g, a)| Ok((basis_permutation(m, j, g)?, a.clone())))
            .collect()
    }
}

/// Solves for every linear `F: M(i)_j → X_j` with `A_g F = F P_g`, where
/// `P_g` permutes the basis `C(i,j)` and `A_g` is the action on `V_j`.
/// Writing `F = B Y` for the basis `B` of `X_j` and `A_g B = B R_g`, the
/// unknown `Y` satisfies `Y_{π_g(c)} = R_g Y_c` column by column.
pub fn hom_space(m: &FreeModule, x: &GradedSubmodule, j: usize, audit: bool) -> Result<HomSpace> {
    let v = x.parent();
    if j > v.top() || j > m.module().top() {
        return Err(Error::ObjectOutOfRange {
            object: j,
            max: v.top().min(m.module().top()),
        });
    }
    let q = Rationals;
    let n = m.module().dim(j);
    let target = x.space(j);
    let d = target.dim();
    let basis_rows = target.basis_vectors();
    let mut system = LinearSystem::new(q, d * n);
    for (perm, a) in acting_elements(m, v, j, audit)? {
        // R[a][b] = coefficient of basis vector a in A·b_b
        let mut r = vec![vec![q.zero(); d]; d];
        for (b, row) in basis_rows.iter().enumerate() {
            let image = a.mul_vec(row)?;
            let coords = target
                .coordinates(&image)?
                .ok_or_else(|| Error::Precondition(format!("X_{j} is not G_{j}-stable")))?;
            for (k, c) in coords.into_iter().enumerate() {
                r[k][b] = c;
            }
        }
        for row in 0..d {
            for c in 0..n {
                let mut terms = vec![(row * n + perm[c], q.one())];
                for (b, coeff) in r[row].iter().enumerate() {
                    if !q.is_zero(coeff) {
                        terms.push((b * n + c, q.neg(coeff)));
                    }
                }
                system.push(&terms)?;
            }
        }
    }
    let solutions = system.solutions();
    let target_dim = v.dim(j);
    let basis = solutions
        .basis_vectors()
        .into_iter()
        .map(|y| {
            let mut f = QMatrix::zeros(q, target_dim, n);
            for (k, row) in basis_rows.iter().enumerate() {
                for c in 0..n {
                    let coeff = &y[k * n + c];
                    if q.is_zero(coeff) {
                        continue;
                    }
                    for (r, b) in row.iter().enumerate() {
                        if !q.is_zero(b) {
                            let cur = f.get(r, c).clone();
                            f.set(r, c, q.add(&cur, &q.mul(coeff, b)));
                        }
                    }
                }
            }
            f
        })
        .collect::<Vec<_>>();
    Ok(HomSpace {
        i: m.source(),
        j,
        source_dim: n,
        target_dim,
        dim: basis.len(),
        basis,
    })
}
