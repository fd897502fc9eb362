use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A linear subspace of `F^ambient`, stored by the RREF of any spanning set.
/// The stored basis is therefore canonical: equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        Self::from_spanning_matrix(&Matrix::from_rows(field, ambient, vectors)?)
    }

    /// The row space of `m`.
    pub fn from_spanning_matrix(m: &Matrix<F>) -> Result<Self> {
        let rref = m.rref();
        let rows: Vec<Vec<F::Elem>> = (0..rref.rank).map(|r| rref.reduced.row(r).to_vec()).collect();
        Ok(Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field().clone(), m.cols(), &rows)?,
            pivots: rref.pivots,
        })
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis rows (the nonzero rows of the RREF).
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field().name(),
                other.field().name()
            )));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Canonical representative of `v + self` in `F^ambient / self`:
    /// the vector with zeros in every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let coeff = out[p].clone();
            if f.is_zero(&coeff) {
                continue;
            }
            for (c, b) in self.basis.row(r).iter().enumerate() {
                if !f.is_zero(b) {
                    out[c] = f.sub(&out[c], &f.mul(&coeff, b));
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        let f = self.field().clone();
        Ok(self.reduce(v)?.iter().all(|x| f.is_zero(x)))
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        for r in 0..other.dim() {
            if !self.contains(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Self::from_spanning_matrix(&self.basis.vstack(&other.basis)?)
    }

    /// Adds vectors to the span.
    pub fn extend(&self, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        let extra = Matrix::from_rows(self.field().clone(), self.ambient, vectors)?;
        Self::from_spanning_matrix(&self.basis.vstack(&extra)?)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field().clone();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Self::zero(f, self.ambient));
        }
        // Solve sum_r x_r u_r - sum_s y_s w_s = 0.
        let mut sys = Matrix::zeros(f.clone(), self.ambient, a + b);
        for c in 0..self.ambient {
            for r in 0..a {
                sys.set(c, r, self.basis.get(r, c).clone());
            }
            for s in 0..b {
                sys.set(c, a + s, f.neg(other.basis.get(s, c)));
            }
        }
        let kernel = sys.kernel();
        let mut vectors = Vec::with_capacity(kernel.dim());
        for k in 0..kernel.dim() {
            let coeffs = kernel.basis.row(k);
            let mut v = vec![f.zero(); self.ambient];
            for (r, x) in coeffs[..a].iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                for (c, u) in self.basis.row(r).iter().enumerate() {
                    v[c] = f.add(&v[c], &f.mul(x, u));
                }
            }
            vectors.push(v);
        }
        Self::span(f, self.ambient, &vectors)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, map: &Matrix<F>) -> Result<Self> {
        if map.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: map.cols(),
            });
        }
        let vectors = (0..self.dim())
            .map(|r| map.mul_vec(self.basis.row(r)))
            .collect::<Result<Vec<_>>>()?;
        Self::span(self.field().clone(), map.rows(), &vectors)
    }

    /// Coordinates of `v` against the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        // RREF basis: the coefficient of row r is the entry of v at pivot r.
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }
}

/// `u ⊕ z = F^ambient`.
pub fn is_complement<F: Field>(u: &Subspace<F>, z: &Subspace<F>, ambient: usize) -> Result<bool> {
    if u.ambient() != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: u.ambient(),
        });
    }
    u.check_compatible(z)?;
    if u.dim() + z.dim() != ambient {
        return Ok(false);
    }
    Ok(u.sum(z)?.dim() == ambient)
}
