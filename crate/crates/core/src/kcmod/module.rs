use std::sync::Arc;

use crate::eicat::{CategoryInstance, HomSet, Morphism};
use crate::error::{Error, Result};
use crate::exactalg::{Field, QMatrix, Rational, Rationals};
use crate::orbitlab::{stabilizer, subgroup_generators};

/// A `kC`-module truncated at degree `top`, over `Q`.
///
/// Only the action of the designated generators of each `G_j` and of the
/// chosen `α_j` are stored; everything else is derived through Schreier
/// words and transporter factorizations.
#[derive(Clone, Debug)]
pub struct GradedModule {
    cat: Arc<CategoryInstance>,
    label: String,
    dims: Vec<usize>,
    generators: Vec<Vec<QMatrix>>,
    alphas: Vec<QMatrix>,
}

impl GradedModule {
    /// `generators[j]` is aligned with `cat.generators(j)`; `alphas[j]` is
    /// the action of `α_j`, a `dims[j+1] × dims[j]` matrix.
    pub fn new(
        cat: Arc<CategoryInstance>,
        label: impl Into<String>,
        generators: Vec<Vec<QMatrix>>,
        alphas: Vec<QMatrix>,
        dims: Vec<usize>,
    ) -> Result<Self> {
        let module = Self::new_unverified(cat, label, generators, alphas, dims)?;
        module.verify()?;
        Ok(module)
    }

    fn new_unverified(
        cat: Arc<CategoryInstance>,
        label: impl Into<String>,
        generators: Vec<Vec<QMatrix>>,
        alphas: Vec<QMatrix>,
        dims: Vec<usize>,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Precondition("a module needs at least degree 0".into()));
        }
        let top = dims.len() - 1;
        if top > cat.max_object() {
            return Err(Error::ObjectOutOfRange {
                object: top,
                max: cat.max_object(),
            });
        }
        if generators.len() != dims.len() || alphas.len() != top {
            return Err(Error::DimensionMismatch {
                expected: dims.len(),
                found: generators.len(),
            });
        }
        for (j, mats) in generators.iter().enumerate() {
            let expected = cat.generators(j)?.len();
            if mats.len() != expected {
                return Err(Error::DimensionMismatch {
                    expected,
                    found: mats.len(),
                });
            }
            for m in mats {
                check_shape(m, dims[j], dims[j])?;
            }
        }
        for (j, a) in alphas.iter().enumerate() {
            check_shape(a, dims[j + 1], dims[j])?;
        }
        Ok(GradedModule {
            cat,
            label: label.into(),
            dims,
            generators,
            alphas,
        })
    }

    pub fn category(&self) -> &Arc<CategoryInstance> {
        &self.cat
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The truncation degree `J`.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, j: usize) -> usize {
        self.dims[j]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn generator_actions(&self, j: usize) -> &[QMatrix] {
        &self.generators[j]
    }

    pub fn alpha_action(&self, j: usize) -> &QMatrix {
        &self.alphas[j]
    }

    fn check_degree(&self, j: usize) -> Result<()> {
        if j > self.top() {
            return Err(Error::ObjectOutOfRange {
                object: j,
                max: self.top(),
            });
        }
        Ok(())
    }

    /// Action of `α_{j,l}`.
    pub fn alpha_path_action(&self, j: usize, l: usize) -> Result<QMatrix> {
        self.check_degree(l)?;
        if j > l {
            return Err(Error::Precondition(format!("need j <= l, got ({j},{l})")));
        }
        let mut m = QMatrix::identity(Rationals, self.dims[j]);
        for k in j..l {
            m = self.alphas[k].mul(&m)?;
        }
        Ok(m)
    }

    /// Action of the element of `G_j` with the given index in canonical order.
    pub fn group_action(&self, j: usize, element: usize) -> Result<QMatrix> {
        self.check_degree(j)?;
        let word = self.cat.schreier_tree(j)?.word(element);
        let mut m = QMatrix::identity(Rationals, self.dims[j]);
        for k in word {
            m = self.generators[j][k].mul(&m)?;
        }
        Ok(m)
    }

    pub fn apply_group(&self, j: usize, element: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_degree(j)?;
        let word = self.cat.schreier_tree(j)?.word(element);
        let mut v = v.to_vec();
        for k in word {
            v = self.generators[j][k].mul_vec(&v)?;
        }
        Ok(v)
    }

    /// Factors `γ ∈ C(j,l)` as `g α_{j,l}` and returns the index of `g`.
    fn factor(&self, gamma: &Morphism) -> Result<usize> {
        let (j, l) = (gamma.source(), gamma.target());
        self.check_degree(l)?;
        let homs = self.cat.hom_set(j, l)?;
        let pos = homs
            .position(gamma)
            .ok_or_else(|| Error::InvalidMorphism(format!("not an arrow of {}", self.cat.descriptor())))?;
        let table = self.cat.transporters_from_alpha(j, l)?;
        table.witness[pos].ok_or_else(|| {
            Error::violation(
                "transitivity",
                format!("no g in G_{l} carries α_{{{j},{l}}} to the given arrow"),
            )
        })
    }

    /// The linear map `V_j → V_l` of `γ ∈ C(j,l)`.
    pub fn morphism_action(&self, gamma: &Morphism) -> Result<QMatrix> {
        let g = self.factor(gamma)?;
        let (j, l) = (gamma.source(), gamma.target());
        self.group_action(l, g)?.mul(&self.alpha_path_action(j, l)?)
    }

    pub fn apply_morphism(&self, gamma: &Morphism, v: &[Rational]) -> Result<Vec<Rational>> {
        let g = self.factor(gamma)?;
        let (j, l) = (gamma.source(), gamma.target());
        let mut v = v.to_vec();
        for k in j..l {
            v = self.alphas[k].mul_vec(&v)?;
        }
        self.apply_group(l, g, &v)
    }

    /// Checks the stored data against the module axioms on generators:
    /// products of generator pairs, `α_j s = u α_j` compatibility, and
    /// triviality of `Stab(α_{j,l})` on the image of `α_{j,l}`.
    pub fn verify(&self) -> Result<()> {
        let cat = &self.cat;
        for j in 0..=self.top() {
            let group = cat.group(j)?;
            let gens = cat.generators(j)?;
            let idx = |m: &Morphism| group.position(m).expect("generators lie in G_j");
            for (a, s) in gens.iter().enumerate() {
                for (b, t) in gens.iter().enumerate() {
                    let st = idx(&cat.compose(s, t)?);
                    if self.generators[j][a].mul(&self.generators[j][b])? != self.group_action(j, st)? {
                        return Err(Error::violation(
                            "representation property",
                            format!("{}: generators {a},{b} of G_{j}", self.label),
                        ));
                    }
                }
            }
        }
        for j in 0..self.top() {
            let step = cat.hom_set(j, j + 1)?;
            let table = cat.transporters_from_alpha(j, j + 1)?;
            let alpha = cat.alpha(j)?;
            for (k, s) in cat.generators(j)?.iter().enumerate() {
                let beta = cat.compose(&alpha, s)?;
                let u = table.witness[step.position(&beta).expect("α_j s ∈ C(j,j+1)")]
                    .ok_or_else(|| Error::violation("transitivity", format!("C({j},{}) ", j + 1)))?;
                let lhs = self.alphas[j].mul(&self.generators[j][k])?;
                let rhs = self.group_action(j + 1, u)?.mul(&self.alphas[j])?;
                if lhs != rhs {
                    return Err(Error::violation(
                        "α_j compatibility",
                        format!("{}: generator {k} of G_{j}", self.label),
                    ));
                }
            }
        }
        for l in 1..=self.top() {
            for j in 0..l {
                if self.dims[j] == 0 || self.dims[l] == 0 {
                    continue;
                }
                let path = self.alpha_path_action(j, l)?;
                let stab = stabilizer(cat, j, l)?;
                for h in subgroup_generators(cat, stab.group(), &stab.elements) {
                    if self.group_action(l, h)?.mul(&path)? != path {
                        return Err(Error::violation(
                            "factorization independence",
                            format!("{}: Stab(α_{{{j},{l}}}) moves the image", self.label),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Expands every `G_j` and checks `A_s · action(g) = action(s g)` for all
    /// group elements `g` and generators `s`, which makes the word-defined
    /// action a homomorphism. Cost grows with `|G_j|`.
    pub fn audit(&self) -> Result<()> {
        let cat = &self.cat;
        for j in 0..=self.top() {
            let group = cat.group(j)?;
            let gens = cat.generators(j)?;
            let actions = (0..group.len())
                .map(|g| self.group_action(j, g))
                .collect::<Result<Vec<_>>>()?;
            for (g, m) in actions.iter().enumerate() {
                for (k, s) in gens.iter().enumerate() {
                    let sg = group
                        .position(&cat.compose(s, group.get(g))?)
                        .expect("group closed");
                    if self.generators[j][k].mul(m)? != actions[sg] {
                        return Err(Error::violation(
                            "representation property (audit)",
                            format!("{}: G_{j} element {g}, generator {k}", self.label),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_shape(m: &QMatrix, rows: usize, cols: usize) -> Result<()> {
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(Error::DimensionMismatch {
            expected: rows * cols,
            found: m.rows() * m.cols(),
        });
    }
    Ok(())
}

/// Matrix sending basis vector `c` to basis vector `images[c]`.
pub(crate) fn injection_matrix(images: &[usize], rows: usize) -> QMatrix {
    let q = Rationals;
    let mut m = QMatrix::zeros(q, rows, images.len());
    for (c, &r) in images.iter().enumerate() {
        m.set(r, c, q.one());
    }
    m
}

/// Images of `homs` under post-composition with `gamma`, as positions in `target`.
fn post_compose(cat: &CategoryInstance, gamma: &Morphism, homs: &HomSet, target: &HomSet) -> Result<Vec<usize>> {
    homs.iter()
        .map(|b| {
            let c = cat.compose(gamma, b)?;
            target
                .position(&c)
                .ok_or_else(|| Error::violation("hom-set closure", "composite left the hom-set"))
        })
        .collect()
}

/// The free module `M(i)`, with basis `C(i,j)` in degree `j`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    source: usize,
    module: Arc<GradedModule>,
}

impl FreeModule {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn basis(&self, j: usize) -> Result<Arc<HomSet>> {
        self.module.category().hom_set(self.source, j)
    }

    /// `γ ∈ C(j,l)` acting by post-composition on the basis, without any
    /// factorization. Used to cross-check [`GradedModule::morphism_action`].
    pub fn basis_action(&self, gamma: &Morphism) -> Result<QMatrix> {
        let cat = self.module.category();
        let from = self.basis(gamma.source())?;
        let to = self.basis(gamma.target())?;
        Ok(injection_matrix(&post_compose(cat, gamma, &from, &to)?, to.len()))
    }
}

pub fn free_module(cat: &Arc<CategoryInstance>, i: usize, top: usize) -> Result<FreeModule> {
    if top > cat.max_object() {
        return Err(Error::ObjectOutOfRange {
            object: top,
            max: cat.max_object(),
        });
    }
    let bases = (0..=top).map(|j| cat.hom_set(i, j)).collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let mut generators = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let mats = cat
            .generators(j)?
            .iter()
            .map(|s| Ok(injection_matrix(&post_compose(cat, s, &bases[j], &bases[j])?, dims[j])))
            .collect::<Result<Vec<_>>>()?;
        generators.push(mats);
    }
    let alphas = (0..top)
        .map(|j| {
            let alpha = cat.alpha(j)?;
            Ok(injection_matrix(&post_compose(cat, &alpha, &bases[j], &bases[j + 1])?, dims[j + 1]))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = GradedModule::new(cat.clone(), format!("M({i})"), generators, alphas, dims)?;
    Ok(FreeModule {
        source: i,
        module: Arc::new(module),
    })
}

/// `Q` in degree `degree` with trivial `G_degree` action, zero elsewhere.
pub fn atom_module(cat: &Arc<CategoryInstance>, degree: usize, top: usize) -> Result<GradedModule> {
    if degree > top {
        return Err(Error::Precondition(format!("atom degree {degree} beyond truncation {top}")));
    }
    let dims: Vec<usize> = (0..=top).map(|j| usize::from(j == degree)).collect();
    let generators = (0..=top)
        .map(|j| {
            let n = cat.generators(j)?.len();
            Ok(vec![QMatrix::identity(Rationals, dims[j]); n])
        })
        .collect::<Result<Vec<_>>>()?;
    let alphas = (0..top).map(|j| QMatrix::zeros(Rationals, dims[j + 1], dims[j])).collect();
    GradedModule::new(cat.clone(), format!("atom({degree})"), generators, alphas, dims)
}

/// `M(S) = ⊕_{s∈S} M(deg s)` with per-summand offsets.
#[derive(Clone, Debug)]
pub struct SumFreeModule {
    degrees: Vec<usize>,
    summands: Vec<FreeModule>,
    module: Arc<GradedModule>,
    /// `offsets[j][s]`: first coordinate of summand `s` in degree `j`.
    offsets: Vec<Vec<usize>>,
}

impl SumFreeModule {
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn summand(&self, s: usize) -> &FreeModule {
        &self.summands[s]
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    /// Coordinate range of summand `s` in degree `j`.
    pub fn block(&self, s: usize, j: usize) -> std::ops::Range<usize> {
        let start = self.offsets[j][s];
        start..start + self.summands[s].module().dim(j)
    }

    pub fn injection(&self, s: usize, j: usize) -> QMatrix {
        let block = self.block(s, j);
        let images: Vec<usize> = block.collect();
        injection_matrix(&images, self.module.dim(j))
    }

    pub fn projection(&self, s: usize, j: usize) -> QMatrix {
        self.injection(s, j).transpose()
    }
}

pub fn sum_free_module(cat: &Arc<CategoryInstance>, degrees: &[usize], top: usize) -> Result<SumFreeModule> {
    if degrees.is_empty() {
        return Err(Error::Precondition("M(S) needs a nonempty S".into()));
    }
    let summands = degrees
        .iter()
        .map(|&d| free_module(cat, d, top))
        .collect::<Result<Vec<_>>>()?;
    let parts: Vec<&GradedModule> = summands.iter().map(|m| m.module().as_ref()).collect();
    let label = format!(
        "M({{{}}})",
        degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    );
    let (module, offsets) = direct_sum(label, &parts)?;
    Ok(SumFreeModule {
        degrees: degrees.to_vec(),
        summands,
        module: Arc::new(module),
        offsets,
    })
}

/// Block-diagonal direct sum; also returns per-degree summand offsets.
pub fn direct_sum(label: impl Into<String>, parts: &[&GradedModule]) -> Result<(GradedModule, Vec<Vec<usize>>)> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Precondition("empty direct sum".into()))?;
    let cat = first.category().clone();
    let top = first.top();
    if parts.iter().any(|p| p.top() != top || !Arc::ptr_eq(p.category(), &cat)) {
        return Err(Error::Precondition(
            "summands must share the category instance and truncation".into(),
        ));
    }
    let mut offsets = Vec::with_capacity(top + 1);
    let mut dims = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let mut acc = 0;
        let mut row = Vec::with_capacity(parts.len());
        for p in parts {
            row.push(acc);
            acc += p.dim(j);
        }
        offsets.push(row);
        dims.push(acc);
    }
    let block = |j_rows: usize, j_cols: usize, pick: &dyn Fn(&GradedModule) -> QMatrix| {
        let mut m = QMatrix::zeros(Rationals, dims[j_rows], dims[j_cols]);
        for (s, p) in parts.iter().enumerate() {
            let b = pick(p);
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    let x = b.get(r, c);
                    if !Rationals.is_zero(x) {
                        m.set(offsets[j_rows][s] + r, offsets[j_cols][s] + c, x.clone());
                    }
                }
            }
        }
        m
    };
    let mut generators = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let n = cat.generators(j)?.len();
        generators.push(
            (0..n)
                .map(|k| block(j, j, &|p: &GradedModule| p.generator_actions(j)[k].clone()))
                .collect(),
        );
    }
    let alphas = (0..top)
        .map(|j| block(j + 1, j, &|p: &GradedModule| p.alpha_action(j).clone()))
        .collect();
    // Summands are verified modules; the block sum satisfies the same identities.
    let module = GradedModule::new_unverified(cat, label, generators, alphas, dims.clone())?;
    Ok((module, offsets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(top: usize) -> Arc<CategoryInstance> {
        Arc::new(CategoryInstance::fi(top))
    }

    #[test]
    fn free_module_dims() {
        let m = free_module(&fi(4), 1, 4).unwrap();
        assert_eq!(m.module().dims(), &[0, 1, 2, 3, 4]);
        let m0 = free_module(&fi(3), 0, 3).unwrap();
        assert_eq!(m0.module().dims(), &[1, 1, 1, 1]);
    }

    #[test]
    fn identity_acts_as_identity() {
        let cat = fi(3);
        let m = free_module(&cat, 1, 3).unwrap();
        let id = cat.identity(2);
        assert_eq!(m.module().morphism_action(&id).unwrap(), QMatrix::identity(Rationals, 2));
    }

    #[test]
    fn factored_action_matches_composition() {
        let cat = fi(3);
        let m = free_module(&cat, 1, 3).unwrap();
        for gamma in cat.hom_set(2, 3).unwrap().iter() {
            assert_eq!(
                m.module().morphism_action(gamma).unwrap(),
                m.basis_action(gamma).unwrap()
            );
        }
    }

    #[test]
    fn atom_has_zero_alpha() {
        let a = atom_module(&fi(2), 0, 2).unwrap();
        assert_eq!(a.dims(), &[1, 0, 0]);
        assert!(a.alpha_action(0).is_zero());
    }

    #[test]
    fn sum_projections_split_injections() {
        let cat = fi(3);
        let s = sum_free_module(&cat, &[1, 2], 3).unwrap();
        assert_eq!(s.module().dims(), &[0, 1, 4, 9]);
        for j in 0..=3 {
            for k in 0..2 {
                let pi = s.projection(k, j).mul(&s.injection(k, j)).unwrap();
                assert_eq!(pi, QMatrix::identity(Rationals, s.summand(k).module().dim(j)));
            }
        }
    }
}
