use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactalg::{is_complement, Field, Matrix, PrimeField, Subspace};

/// An arrow of `FI_Γ`: an injection `[i] → [j]` with a `Γ`-colouring of `[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiArrow {
    target: usize,
    /// `map[r-1] = f(r)`, values in `1..=target`.
    map: Vec<usize>,
    /// `colors[r-1] = c(r)` as an index into the `Γ` table.
    colors: Vec<usize>,
}

impl FiArrow {
    pub fn new(target: usize, map: Vec<usize>, colors: Vec<usize>, gamma_order: usize) -> Result<Self> {
        if map.len() != colors.len() {
            return Err(Error::InvalidMorphism(format!(
                "injection has length {} but colouring has length {}",
                map.len(),
                colors.len()
            )));
        }
        let mut seen = vec![false; target + 1];
        for &v in &map {
            if v == 0 || v > target {
                return Err(Error::InvalidMorphism(format!("value {v} outside [1, {target}]")));
            }
            if seen[v] {
                return Err(Error::InvalidMorphism(format!("value {v} hit twice; not injective")));
            }
            seen[v] = true;
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= gamma_order) {
            return Err(Error::InvalidMorphism(format!("colour {c} outside Γ of order {gamma_order}")));
        }
        Ok(FiArrow { target, map, colors })
    }

    pub(crate) fn new_unchecked(target: usize, map: Vec<usize>, colors: Vec<usize>) -> Self {
        FiArrow { target, map, colors }
    }

    pub fn source(&self) -> usize {
        self.map.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }
}

/// An injective linear map `F_q^i → F_q^j`, stored as a `j × i` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearArrow {
    matrix: Matrix<PrimeField>,
}

impl LinearArrow {
    pub fn new(matrix: Matrix<PrimeField>) -> Result<Self> {
        if matrix.rank() != matrix.cols() {
            return Err(Error::InvalidMorphism(format!(
                "{}x{} matrix has rank {}; not injective",
                matrix.rows(),
                matrix.cols(),
                matrix.rank()
            )));
        }
        Ok(LinearArrow { matrix })
    }

    pub(crate) fn new_unchecked(matrix: Matrix<PrimeField>) -> Self {
        LinearArrow { matrix }
    }

    pub fn source(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<PrimeField> {
        &self.matrix
    }

    pub fn image(&self) -> Subspace<PrimeField> {
        Subspace::from_spanning_matrix(&self.matrix.transpose()).expect("shapes agree")
    }

    fn column_major_cmp(&self, other: &Self) -> Ordering {
        (self.source(), self.target())
            .cmp(&(other.source(), other.target()))
            .then_with(|| self.matrix.column_major().cmp(other.matrix.column_major()))
    }
}

/// An arrow of VIC: an injective linear map with a complement of its image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VicArrow {
    map: LinearArrow,
    complement: Subspace<PrimeField>,
}

impl VicArrow {
    pub fn new(map: LinearArrow, complement: Subspace<PrimeField>) -> Result<Self> {
        if !is_complement(&map.image(), &complement, map.target())? {
            return Err(Error::InvalidMorphism(
                "subspace is not a complement of the image".into(),
            ));
        }
        Ok(VicArrow { map, complement })
    }

    pub(crate) fn new_unchecked(map: LinearArrow, complement: Subspace<PrimeField>) -> Self {
        VicArrow { map, complement }
    }

    pub fn map(&self) -> &LinearArrow {
        &self.map
    }

    pub fn complement(&self) -> &Subspace<PrimeField> {
        &self.complement
    }

    pub fn source(&self) -> usize {
        self.map.source()
    }

    pub fn target(&self) -> usize {
        self.map.target()
    }
}

/// A morphism of one of the three category families.
///
/// The total order is lexicographic on the flat encoding (see
/// [`Morphism::encoding`]); within one hom-set this is the canonical
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Morphism {
    FiGamma(FiArrow),
    Vi(LinearArrow),
    Vic(VicArrow),
}

impl Morphism {
    pub fn source(&self) -> usize {
        match self {
            Morphism::FiGamma(a) => a.source(),
            Morphism::Vi(a) => a.source(),
            Morphism::Vic(a) => a.source(),
        }
    }

    pub fn target(&self) -> usize {
        match self {
            Morphism::FiGamma(a) => a.target(),
            Morphism::Vi(a) => a.target(),
            Morphism::Vic(a) => a.target(),
        }
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source() == self.target()
    }

    /// Flat integer encoding: `FI_Γ` is `f` then `c`; VI is the column-major
    /// matrix; VIC is the matrix then the RREF complement basis, row-major.
    pub fn encoding(&self) -> Vec<u32> {
        match self {
            Morphism::FiGamma(a) => a
                .map
                .iter()
                .chain(&a.colors)
                .map(|&x| x as u32)
                .collect(),
            Morphism::Vi(a) => a.matrix.column_major().copied().collect(),
            Morphism::Vic(a) => a
                .map
                .matrix
                .column_major()
                .chain(a.complement.basis().entries())
                .copied()
                .collect(),
        }
    }

    fn variant_rank(&self) -> u8 {
        match self {
            Morphism::FiGamma(_) => 0,
            Morphism::Vi(_) => 1,
            Morphism::Vic(_) => 2,
        }
    }
}

impl Ord for Morphism {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Morphism::FiGamma(a), Morphism::FiGamma(b)) => (a.source(), a.target(), a)
                .cmp(&(b.source(), b.target(), b)),
            (Morphism::Vi(a), Morphism::Vi(b)) => a.column_major_cmp(b),
            (Morphism::Vic(a), Morphism::Vic(b)) => a.map.column_major_cmp(&b.map).then_with(|| {
                a.complement
                    .basis()
                    .entries()
                    .cmp(b.complement.basis().entries())
            }),
            _ => self.variant_rank().cmp(&other.variant_rank()),
        }
    }
}

impl PartialOrd for Morphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Column vector helper for building linear arrows.
pub(crate) fn unit_vector(field: &PrimeField, n: usize, k: usize) -> Vec<u32> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}
