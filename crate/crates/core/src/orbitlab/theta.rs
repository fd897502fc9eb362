use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::maps::m_map;
use super::orbits::{orbits, require_lt};
use crate::eicat::{subspaces_of_dim, tuples, CategoryInstance, CategoryKind, Morphism};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, PrimeField, Subspace};

/// The orbit invariant `θ_{i,j}` of a morphism in `C(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ThetaInvariant {
    /// `(U, a, b)` with `U = f^{-1}[i]`, `a = f|_U`, `b = c|_U`.
    FiGamma {
        domain: Vec<usize>,
        map: Vec<usize>,
        colors: Vec<usize>,
    },
    /// `(U_A, f_A)`: the span of the last `j-i` rows, and the top `i` rows
    /// reduced to normal form modulo `U_A`.
    Vi {
        kernel_span: Subspace<PrimeField>,
        reduced_rows: Matrix<PrimeField>,
    },
}

pub fn theta_invariant(cat: &CategoryInstance, m: &Morphism) -> Result<ThetaInvariant> {
    let i = m.source();
    match m {
        Morphism::FiGamma(a) if cat.kind() == CategoryKind::FiGamma => {
            let mut domain = Vec::new();
            let mut map = Vec::new();
            let mut colors = Vec::new();
            for r in 1..=i {
                let v = a.map()[r - 1];
                if v <= i {
                    domain.push(r);
                    map.push(v);
                    colors.push(a.colors()[r - 1]);
                }
            }
            Ok(ThetaInvariant::FiGamma { domain, map, colors })
        }
        Morphism::Vi(a) if cat.kind() == CategoryKind::Vi => {
            let mat = a.matrix();
            let f = *mat.field();
            let lower: Vec<Vec<u32>> = (i..mat.rows()).map(|r| mat.row(r).to_vec()).collect();
            let kernel_span = Subspace::span(f, i, &lower)?;
            let top = (0..i)
                .map(|r| kernel_span.reduce(mat.row(r)))
                .collect::<Result<Vec<_>>>()?;
            Ok(ThetaInvariant::Vi {
                kernel_span,
                reduced_rows: Matrix::from_rows(f, i, &top)?,
            })
        }
        _ => Err(Error::Unsupported(format!(
            "θ is defined for FI_Γ and VI, not {}",
            cat.descriptor()
        ))),
    }
}

/// Enumerates the codomain `G'_i` of `θ_{i,j}`.
pub fn theta_codomain(cat: &CategoryInstance, i: usize) -> Result<Vec<ThetaInvariant>> {
    match cat.kind() {
        CategoryKind::FiGamma => {
            let gamma = cat.gamma().expect("FI_Γ").order();
            let mut out = Vec::new();
            for bits in 0u32..(1 << i) {
                let domain: Vec<usize> = (1..=i).filter(|r| bits & (1 << (r - 1)) != 0).collect();
                for map in injections_into(domain.len(), i) {
                    for colors in tuples(gamma, domain.len()) {
                        out.push(ThetaInvariant::FiGamma {
                            domain: domain.clone(),
                            map: map.clone(),
                            colors,
                        });
                    }
                }
            }
            Ok(out)
        }
        CategoryKind::Vi => {
            let f = *cat.field().expect("VI");
            let mut out = Vec::new();
            for d in 0..=i {
                for u in subspaces_of_dim(&f, i, d) {
                    let free: Vec<usize> = (0..i).filter(|c| !u.pivots().contains(c)).collect();
                    // rows are vectors supported off the pivots of U
                    let row_choices: Vec<Vec<u32>> = tuples(f.modulus() as usize, free.len())
                        .into_iter()
                        .map(|t| {
                            let mut v = vec![f.zero(); i];
                            for (&c, &x) in free.iter().zip(&t) {
                                v[c] = x as u32;
                            }
                            v
                        })
                        .collect();
                    for pick in tuples(row_choices.len(), i) {
                        let rows: Vec<Vec<u32>> = pick.iter().map(|&k| row_choices[k].clone()).collect();
                        // surjective onto F^i / U
                        if u.extend(&rows)?.is_full() {
                            out.push(ThetaInvariant::Vi {
                                kernel_span: u.clone(),
                                reduced_rows: Matrix::from_rows(f, i, &rows)?,
                            });
                        }
                    }
                }
            }
            Ok(out)
        }
        CategoryKind::Vic => Err(Error::Unsupported("θ is not defined for VIC".into())),
    }
}

/// Comparison of `θ_{i,j}` with the orbit decomposition of `C(i,j)`.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaCensus {
    pub source: usize,
    pub target: usize,
    pub orbit_count: usize,
    pub image_size: usize,
    pub codomain_size: usize,
    /// θ-classes coincide exactly with `H_{i,j}`-orbits.
    pub classes_match_orbits: bool,
    pub surjective: bool,
    /// `θ_{i,j+1} ∘ m_{i,j} = θ_{i,j}` when `j + 1` is within the truncation.
    pub compatible_with_step: Option<bool>,
}

pub fn theta_census(cat: &CategoryInstance, i: usize, j: usize) -> Result<ThetaCensus> {
    require_lt(i, j)?;
    let homs = cat.hom_set(i, j)?;
    let decomposition = orbits(cat, i, j)?;
    let invariants = homs
        .iter()
        .map(|m| theta_invariant(cat, m))
        .collect::<Result<Vec<_>>>()?;
    let mut class_of: HashMap<&ThetaInvariant, usize> = HashMap::new();
    let mut classes_match = true;
    for (k, inv) in invariants.iter().enumerate() {
        let orbit = decomposition.orbit_of[k];
        match class_of.get(inv) {
            Some(&o) if o != orbit => classes_match = false,
            Some(_) => {}
            None => {
                class_of.insert(inv, orbit);
            }
        }
    }
    // distinct orbits must carry distinct invariants
    let orbits_seen: BTreeSet<usize> = class_of.values().copied().collect();
    if orbits_seen.len() != class_of.len() {
        classes_match = false;
    }
    let codomain = theta_codomain(cat, i)?;
    let image: BTreeSet<usize> = {
        let index: HashMap<&ThetaInvariant, usize> =
            codomain.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut image = BTreeSet::new();
        for inv in class_of.keys() {
            let k = index.get(inv).ok_or_else(|| {
                Error::violation("θ codomain", format!("invariant of C({i},{j}) outside G'_{i}"))
            })?;
            image.insert(*k);
        }
        image
    };
    let compatible_with_step = if j < cat.max_object() {
        let m = m_map(cat, i, j)?;
        let next = cat.hom_set(i, j + 1)?;
        let mut ok = true;
        for (k, &y) in m.images.iter().enumerate() {
            ok &= theta_invariant(cat, next.get(y))? == invariants[k];
        }
        Some(ok)
    } else {
        None
    };
    Ok(ThetaCensus {
        source: i,
        target: j,
        orbit_count: decomposition.len(),
        image_size: image.len(),
        codomain_size: codomain.len(),
        classes_match_orbits: classes_match,
        surjective: image.len() == codomain.len(),
        compatible_with_step,
    })
}

fn injections_into(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(len: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !cur.contains(&v) {
                cur.push(v);
                go(len, n, cur, out);
                cur.pop();
            }
        }
    }
    go(len, n, &mut Vec::new(), &mut out);
    out
}
