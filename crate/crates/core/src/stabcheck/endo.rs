use serde::Serialize;

use super::hom::{basis_permutation, flat, hom_space};
use crate::error::{Error, Result};
use crate::exactalg::{Field, LinearSystem, QMatrix, QSubspace, Rational, Rationals};
use crate::kcmod::{FreeModule, GradedSubmodule};
use crate::orbitlab::{orbits, stabilizer, OrbitDecomposition};

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num.into(), den.into())
}

/// The endomorphisms `f_O` of `M(i)_j`, one per `H_{i,j}`-orbit.
#[derive(Clone, Debug)]
pub struct EndBasis {
    pub i: usize,
    pub j: usize,
    pub orbits: OrbitDecomposition,
    pub maps: Vec<QMatrix>,
    /// Position of `α_{i,j}` in `C(i,j)`.
    pub alpha_position: usize,
}

impl EndBasis {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Index of the orbit whose `f_O` is the identity: the singleton `{α_{i,j}}`.
    pub fn identity_orbit(&self) -> usize {
        self.orbits.orbit_of[self.alpha_position]
    }
}

/// `f_O(g α_{i,j}) = (1/|O|) Σ_{γ∈O} g γ`, with `g` read off the transporter
/// table. Checks equivariance on generators, independence, and that the
/// span equals the solution space of the intertwining system.
pub fn end_basis(m: &FreeModule, j: usize, audit: bool) -> Result<EndBasis> {
    let i = m.source();
    let cat = m.module().category();
    let q = Rationals;
    let decomposition = orbits(cat, i, j)?;
    let homs = m.basis(j)?;
    let group = cat.group(j)?;
    let table = cat.transporters_from_alpha(i, j)?;
    let n = homs.len();
    let mut maps = Vec::with_capacity(decomposition.len());
    for orbit in &decomposition.orbits {
        let weight = ratio(1, orbit.len());
        let mut f = QMatrix::zeros(q, n, n);
        for c in 0..n {
            let g = group.get(table.witness[c].ok_or_else(|| {
                Error::violation("transitivity", format!("C({i},{j}) is not a single G_{j}-orbit"))
            })?);
            for &o in orbit {
                let r = homs
                    .position(&cat.compose(g, homs.get(o))?)
                    .expect("hom-set closed under G_j");
                let cur = f.get(r, c).clone();
                f.set(r, c, q.add(&cur, &weight));
            }
        }
        maps.push(f);
    }
    for s in cat.generators(j)?.iter() {
        let p = crate::kcmod::injection_matrix(&basis_permutation(m, j, s)?, n);
        for f in &maps {
            if p.mul(f)? != f.mul(&p)? {
                return Err(Error::violation("f_O equivariance", format!("({i},{j})")));
            }
        }
    }
    let span = QSubspace::span(q, n * n, &flat(&maps))?;
    if span.dim() != maps.len() {
        return Err(Error::violation(
            "f_O linear independence",
            format!("({i},{j}): rank {} for {} orbits", span.dim(), maps.len()),
        ));
    }
    let solved = hom_space(m, &GradedSubmodule::full(m.module()), j, audit)?.flat_span()?;
    if solved != span {
        return Err(Error::violation(
            "f_O basis of End",
            format!(
                "({i},{j}): f_O span {} dims, intertwining solve {} dims",
                span.dim(),
                solved.dim()
            ),
        ));
    }
    let alpha_position = homs.position(&cat.alpha_path(i, j)?).expect("α_{i,j} ∈ C(i,j)");
    Ok(EndBasis {
        i,
        j,
        orbits: decomposition,
        maps,
        alpha_position,
    })
}

/// `e_{i,j}` on `M(i)_j` with its checked properties.
#[derive(Clone, Debug, Serialize)]
pub struct EIdempotent {
    pub i: usize,
    pub j: usize,
    pub stabilizer_order: usize,
    pub orbit_count: usize,
    pub trace: String,
    pub rank: usize,
    #[serde(skip)]
    pub matrix: QMatrix,
}

/// `e_{i,j} = (1/|H_{i,j}|) Σ_h h` acting on `M(i)_j`. Hard errors unless
/// `e² = e`, `trace e = rank e = #orbits`, and the image of `e` is the
/// `H_{i,j}`-fixed space.
pub fn e_idempotent(m: &FreeModule, j: usize) -> Result<EIdempotent> {
    let i = m.source();
    let cat = m.module().category();
    let q = Rationals;
    let stab = stabilizer(cat, i, j)?;
    let n = m.module().dim(j);
    let mut counts = vec![0usize; n * n];
    let mut perms = Vec::with_capacity(stab.order());
    for h in stab.morphisms() {
        let perm = basis_permutation(m, j, h)?;
        for (c, &r) in perm.iter().enumerate() {
            counts[r * n + c] += 1;
        }
        perms.push(perm);
    }
    let data = counts.iter().map(|&k| ratio(k, stab.order())).collect();
    let e = QMatrix::from_vec(q, n, n, data)?;
    let orbit_count = orbits(cat, i, j)?.len();
    if e.mul(&e)? != e {
        return Err(Error::violation("e_{i,j}² = e_{i,j}", format!("({i},{j})")));
    }
    let trace = e.trace();
    if trace != q.from_i64(orbit_count as i64) {
        return Err(Error::violation(
            "trace e_{i,j} = number of H_{i,j}-orbits",
            format!("({i},{j}): trace {trace}, {orbit_count} orbits"),
        ));
    }
    let image = QSubspace::from_spanning_matrix(&e.transpose())?;
    let mut fixed = LinearSystem::new(q, n);
    for perm in &perms {
        // (P_h v)_{h(c)} = v_c, so v is fixed iff v_{h(c)} = v_c.
        for (c, &r) in perm.iter().enumerate() {
            if r != c {
                fixed.push(&[(r, q.one()), (c, q.from_i64(-1))])?;
            }
        }
    }
    if image != fixed.solutions() || image.dim() != orbit_count {
        return Err(Error::violation(
            "image of e_{i,j} = H_{i,j}-fixed vectors",
            format!("({i},{j}): rank {}, fixed {}", image.dim(), fixed.solutions().dim()),
        ));
    }
    Ok(EIdempotent {
        i,
        j,
        stabilizer_order: stab.order(),
        orbit_count,
        trace: trace.to_string(),
        rank: image.dim(),
        matrix: e,
    })
}

/// The averaging lemma on a finite `H`-set: `H` is given by the permutations
/// it induces on `O_1 = {0, …, n-1}`, which must be transitive. Checks
/// `(1/|H|) Σ_h h·avg(O_2) = avg(O_1)` exactly.
pub fn averaging_check(perms: &[Vec<usize>], n: usize, o2: &[usize]) -> Result<bool> {
    if o2.is_empty() || perms.is_empty() {
        return Err(Error::Precondition("averaging needs nonempty H and O_2".into()));
    }
    if perms.iter().any(|p| p.len() != n) || o2.iter().any(|&x| x >= n) {
        return Err(Error::Precondition("permutations and O_2 must live on O_1".into()));
    }
    let mut reach = vec![false; n];
    for p in perms {
        reach[p[0]] = true;
    }
    if reach.iter().any(|r| !r) {
        return Err(Error::Precondition("H is not transitive on O_1".into()));
    }
    let q = Rationals;
    let weight = ratio(1, perms.len() * o2.len());
    let mut lhs = vec![q.zero(); n];
    for p in perms {
        for &x in o2 {
            lhs[p[x]] = q.add(&lhs[p[x]], &weight);
        }
    }
    let rhs = ratio(1, n);
    Ok(lhs.iter().all(|y| *y == rhs))
}

#[derive(Clone, Debug, Serialize)]
pub struct AveragingReport {
    pub i: usize,
    pub j: usize,
    pub orbits: usize,
    pub triples: usize,
    pub passed: bool,
}

/// Largest orbit whose nonempty subsets are all used as `O_2`; larger
/// orbits use singletons, initial segments and the whole orbit.
pub const EXHAUSTIVE_SUBSETS_UP_TO: usize = 6;

/// Runs [`averaging_check`] on `H_{i,j}` acting on each of its orbits in
/// `C(i,j)`. A failure is a hard error.
pub fn averaging_suite(m: &FreeModule, j: usize) -> Result<AveragingReport> {
    let i = m.source();
    let cat = m.module().category();
    let stab = stabilizer(cat, i, j)?;
    let decomposition = orbits(cat, i, j)?;
    let full_perms = stab
        .morphisms()
        .map(|h| basis_permutation(m, j, h))
        .collect::<Result<Vec<_>>>()?;
    let mut triples = 0;
    for orbit in &decomposition.orbits {
        let local: std::collections::HashMap<usize, usize> =
            orbit.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let perms: Vec<Vec<usize>> = full_perms
            .iter()
            .map(|p| orbit.iter().map(|x| local[&p[*x]]).collect())
            .collect();
        let n = orbit.len();
        let subsets: Vec<Vec<usize>> = if n <= EXHAUSTIVE_SUBSETS_UP_TO {
            (1u32..(1 << n))
                .map(|bits| (0..n).filter(|k| bits & (1 << k) != 0).collect())
                .collect()
        } else {
            (0..n).map(|k| vec![k]).chain((2..=n).map(|k| (0..k).collect())).collect()
        };
        for o2 in subsets {
            triples += 1;
            if !averaging_check(&perms, n, &o2)? {
                return Err(Error::violation(
                    "averaging lemma",
                    format!("({i},{j}): orbit of {n}, sub-orbit {o2:?}"),
                ));
            }
        }
    }
    Ok(AveragingReport {
        i,
        j,
        orbits: decomposition.len(),
        triples,
        passed: true,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::eicat::CategoryInstance;
    use crate::kcmod::free_module;

    fn m1(top: usize) -> FreeModule {
        free_module(&Arc::new(CategoryInstance::fi(top)), 1, top).unwrap()
    }

    #[test]
    fn singleton_orbit_gives_identity() {
        let m = m1(3);
        let b = end_basis(&m, 3, false).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.maps[b.identity_orbit()], QMatrix::identity(Rationals, 3));
    }

    #[test]
    fn idempotent_trace() {
        let m = m1(3);
        let e = e_idempotent(&m, 3).unwrap();
        assert_eq!(e.trace, "2");
        assert_eq!(e.stabilizer_order, 2);
        // H_{1,2} is trivial in FI
        assert_eq!(e_idempotent(&m, 2).unwrap().matrix, QMatrix::identity(Rationals, 2));
    }

    #[test]
    fn averaging_small_cases() {
        // C_3 acting on 3 points
        let perms = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert!(averaging_check(&perms, 3, &[0]).unwrap());
        assert!(averaging_check(&perms, 3, &[0, 1, 2]).unwrap());
        assert!(averaging_check(&perms, 3, &[1, 2]).unwrap());
        assert!(averaging_check(&perms, 3, &[]).is_err());
        assert!(averaging_check(&[vec![0, 1]], 2, &[0]).is_err());
    }

    #[test]
    fn suite_on_fi() {
        let r = averaging_suite(&m1(3), 3).unwrap();
        assert_eq!(r.orbits, 2);
        // orbits of sizes 1 and 2: 1 + 3 subsets
        assert_eq!(r.triples, 4);
    }
}
