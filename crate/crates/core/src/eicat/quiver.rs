use serde::Serialize;

use super::instance::CategoryInstance;
use crate::error::{Error, Result};

/// The quiver underlying a truncated EI category: one arrow `i → j` whenever
/// `C(i,j)` contains an unfactorizable morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// The path `0 → 1 → ⋯ → n-1`.
    pub fn path(vertices: usize) -> Self {
        Quiver {
            vertices,
            arrows: (1..vertices).map(|k| (k - 1, k)).collect(),
        }
    }

    pub fn is_a_infinity_path(&self) -> bool {
        *self == Self::path(self.vertices)
    }
}

pub fn underlying_quiver(cat: &CategoryInstance, max_object: usize) -> Result<Quiver> {
    if max_object > cat.max_object() {
        return Err(Error::ObjectOutOfRange {
            object: max_object,
            max: cat.max_object(),
        });
    }
    let mut arrows = Vec::new();
    for i in 0..=max_object {
        for j in i + 1..=max_object {
            if cat.has_unfactorizable(i, j)? {
                arrows.push((i, j));
            }
        }
    }
    Ok(Quiver {
        vertices: max_object + 1,
        arrows,
    })
}
