use serde::Serialize;

use super::module::SumFreeModule;
use super::submodule::GradedSubmodule;
use crate::error::{Error, Result};
use crate::exactalg::{Field, QSubspace, Rationals};

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionDegree {
    pub j: usize,
    pub dim_x: usize,
    /// `dim (X ∩ M(S'))_j`.
    pub dim_kernel: usize,
    /// `dim p_s(X)_j`.
    pub dim_image: usize,
}

/// The split `0 → X ∩ M(S') → X → p_s(X) → 0` for the summand `s`.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionReport {
    pub summand: usize,
    pub summand_degree: usize,
    pub degrees: Vec<ProjectionDegree>,
}

/// `M(S')` inside `M(S)`: every coordinate outside the block of `s`.
pub fn complement_summands(sum: &SumFreeModule, s: usize, j: usize) -> QSubspace {
    let q = Rationals;
    let n = sum.module().dim(j);
    let block = sum.block(s, j);
    let vectors: Vec<_> = (0..n)
        .filter(|c| !block.contains(c))
        .map(|c| {
            let mut v = vec![q.zero(); n];
            v[c] = q.one();
            v
        })
        .collect();
    QSubspace::span(q, n, &vectors).expect("unit vectors")
}

/// Computes `X ∩ M(S')` and `p_s(X)` degreewise and checks that the
/// dimensions add up to `dim X_j`.
pub fn sum_and_project(sum: &SumFreeModule, x: &GradedSubmodule, s: usize) -> Result<ProjectionReport> {
    if !std::sync::Arc::ptr_eq(x.parent(), sum.module()) {
        return Err(Error::Precondition("X must be a submodule of M(S)".into()));
    }
    if s >= sum.degrees().len() {
        return Err(Error::Precondition(format!(
            "summand {s} out of range for |S| = {}",
            sum.degrees().len()
        )));
    }
    let mut degrees = Vec::with_capacity(x.top() + 1);
    for j in 0..=x.top() {
        let xj = x.space(j);
        let kernel = xj.intersection(&complement_summands(sum, s, j))?;
        let image = xj.image_under(&sum.projection(s, j))?;
        if kernel.dim() + image.dim() != xj.dim() {
            return Err(Error::violation(
                "exactness of 0 → X ∩ M(S') → X → p_s(X) → 0",
                format!("degree {j}: {} + {} ≠ {}", kernel.dim(), image.dim(), xj.dim()),
            ));
        }
        degrees.push(ProjectionDegree {
            j,
            dim_x: xj.dim(),
            dim_kernel: kernel.dim(),
            dim_image: image.dim(),
        });
    }
    Ok(ProjectionReport {
        summand: s,
        summand_degree: sum.degrees()[s],
        degrees,
    })
}
