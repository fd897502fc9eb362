use std::collections::BTreeMap;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A homogeneous linear system fed one sparse equation at a time and kept
/// in reduced row-echelon form, so that long, sparse, highly redundant
/// systems stay cheap.
#[derive(Clone, Debug)]
pub struct LinearSystem<F: Field> {
    field: F,
    unknowns: usize,
    /// Pivot column of each row.
    pivots: BTreeMap<usize, BTreeMap<usize, F::Elem>>,
}

impl<F: Field> LinearSystem<F> {
    pub fn new(field: F, unknowns: usize) -> Self {
        LinearSystem {
            field,
            unknowns,
            pivots: BTreeMap::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `sum coeff * x_col = 0`. Repeated columns are summed.
    /// Returns whether the equation was independent of the previous ones.
    pub fn push(&mut self, terms: &[(usize, F::Elem)]) -> Result<bool> {
        let f = self.field.clone();
        let mut row: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (c, a) in terms {
            if *c >= self.unknowns {
                return Err(Error::DimensionMismatch {
                    expected: self.unknowns,
                    found: c + 1,
                });
            }
            let e = row.entry(*c).or_insert_with(|| f.zero());
            *e = f.add(e, a);
        }
        row.retain(|_, a| !f.is_zero(a));
        // Pivot rows are zero in every other pivot column, so one pass suffices.
        let hits: Vec<(usize, F::Elem)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .map(|(c, a)| (*c, a.clone()))
            .collect();
        for (c, a) in hits {
            for (k, b) in &self.pivots[&c] {
                let e = row.entry(*k).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(&a, b));
            }
            row.retain(|_, x| !f.is_zero(x));
        }
        let Some((&p, lead)) = row.iter().next() else {
            return Ok(false);
        };
        let inv = f.inv(lead).expect("nonzero lead");
        for a in row.values_mut() {
            *a = f.mul(a, &inv);
        }
        for other in self.pivots.values_mut() {
            if let Some(a) = other.get(&p).cloned() {
                for (k, b) in &row {
                    let e = other.entry(*k).or_insert_with(|| f.zero());
                    *e = f.sub(e, &f.mul(&a, b));
                }
                other.retain(|_, x| !f.is_zero(x));
            }
        }
        self.pivots.insert(p, row);
        Ok(true)
    }

    /// The solution space as a subspace of `F^unknowns`.
    pub fn solutions(&self) -> Subspace<F> {
        let f = &self.field;
        let vectors: Vec<Vec<F::Elem>> = (0..self.unknowns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = vec![f.zero(); self.unknowns];
                v[free] = f.one();
                for (&p, row) in &self.pivots {
                    if let Some(a) = row.get(&free) {
                        v[p] = f.neg(a);
                    }
                }
                v
            })
            .collect();
        Subspace::span(f.clone(), self.unknowns, &vectors).expect("solution vectors have ambient length")
    }
}
