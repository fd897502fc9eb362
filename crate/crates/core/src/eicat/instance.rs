use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::group::FiniteGroupTable;
use super::morphism::{unit_vector, FiArrow, LinearArrow, Morphism, VicArrow};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, PrimeField, Subspace};
use crate::once_map::OnceMap;

pub const DEFAULT_HOM_GUARD: usize = 200_000;
pub const DEFAULT_GROUP_GUARD: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CategoryKind {
    FiGamma,
    Vi,
    Vic,
}

impl CategoryKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CategoryKind::FiGamma => "fi_gamma",
            CategoryKind::Vi => "vi",
            CategoryKind::Vic => "vic",
        }
    }
}

/// Limits on enumeration sizes. Hom-sets `C(i,j)` with `i < j` are checked
/// against `max_hom_set`, automorphism groups `C(j,j)` against `max_group`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Guard {
    pub max_hom_set: usize,
    pub max_group: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_hom_set: DEFAULT_HOM_GUARD,
            max_group: DEFAULT_GROUP_GUARD,
        }
    }
}

/// A hom-set in canonical order with a reverse index.
#[derive(Debug)]
pub struct HomSet {
    pub source: usize,
    pub target: usize,
    elements: Vec<Morphism>,
    index: HashMap<Morphism, usize>,
}

impl HomSet {
    fn new(source: usize, target: usize, elements: Vec<Morphism>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        HomSet {
            source,
            target,
            elements,
            index,
        }
    }

    pub fn elements(&self) -> &[Morphism] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, k: usize) -> &Morphism {
        &self.elements[k]
    }

    pub fn position(&self, m: &Morphism) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Morphism> {
        self.elements.iter()
    }
}

/// For a fixed source morphism `a ∈ C(i,j)`, the canonical `g ∈ G_j` with
/// `g·a = b` for every `b ∈ C(i,j)`: the identity for `b = a`, otherwise the
/// first such `g` in canonical order. Entries are indices into `G_j`.
#[derive(Debug)]
pub struct TransporterTable {
    pub source: usize,
    pub target: usize,
    pub from: usize,
    pub witness: Vec<Option<usize>>,
}

/// Breadth-first words for every element of `G_j` in the designated generators.
#[derive(Debug)]
pub struct SchreierTree {
    parent: Vec<Option<(usize, usize)>>,
}

impl SchreierTree {
    /// Generator indices to apply in order (first one acts first).
    pub fn word(&self, element: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = element;
        while let Some((parent, generator)) = self.parent[cur] {
            word.push(generator);
            cur = parent;
        }
        word.reverse();
        word
    }
}

#[derive(Clone, Debug)]
enum Parameters {
    Gamma(FiniteGroupTable),
    Field(PrimeField),
}

/// A skeletal EI category of type `A∞` truncated at objects `0..=max_object`.
#[derive(Debug)]
pub struct CategoryInstance {
    kind: CategoryKind,
    params: Parameters,
    max_object: usize,
    guard: Guard,
    homs: OnceMap<(usize, usize), HomSet>,
    transporters: OnceMap<(usize, usize), TransporterTable>,
    generators: OnceMap<usize, Vec<Morphism>>,
    words: OnceMap<usize, SchreierTree>,
}

impl CategoryInstance {
    pub fn fi_gamma(gamma: FiniteGroupTable, max_object: usize) -> Self {
        Self::build(CategoryKind::FiGamma, Parameters::Gamma(gamma), max_object)
    }

    /// Plain FI, i.e. `FI_Γ` with trivial `Γ`.
    pub fn fi(max_object: usize) -> Self {
        Self::fi_gamma(FiniteGroupTable::trivial(), max_object)
    }

    pub fn vi(q: u32, max_object: usize) -> Result<Self> {
        Ok(Self::build(
            CategoryKind::Vi,
            Parameters::Field(PrimeField::new(q)?),
            max_object,
        ))
    }

    pub fn vic(q: u32, max_object: usize) -> Result<Self> {
        Ok(Self::build(
            CategoryKind::Vic,
            Parameters::Field(PrimeField::new(q)?),
            max_object,
        ))
    }

    fn build(kind: CategoryKind, params: Parameters, max_object: usize) -> Self {
        CategoryInstance {
            kind,
            params,
            max_object,
            guard: Guard::default(),
            homs: OnceMap::new(),
            transporters: OnceMap::new(),
            generators: OnceMap::new(),
            words: OnceMap::new(),
        }
    }

    pub fn with_guard(mut self, guard: Guard) -> Self {
        self.guard = guard;
        self
    }

    pub fn kind(&self) -> CategoryKind {
        self.kind
    }

    pub fn max_object(&self) -> usize {
        self.max_object
    }

    pub fn guard(&self) -> Guard {
        self.guard
    }

    pub fn gamma(&self) -> Option<&FiniteGroupTable> {
        match &self.params {
            Parameters::Gamma(g) => Some(g),
            Parameters::Field(_) => None,
        }
    }

    pub fn field(&self) -> Option<&PrimeField> {
        match &self.params {
            Parameters::Field(f) => Some(f),
            Parameters::Gamma(_) => None,
        }
    }

    /// e.g. `FI`, `FI_Γ(C_2)`, `VI(q=2)`, `VIC(q=3)`.
    pub fn descriptor(&self) -> String {
        match (&self.kind, &self.params) {
            (CategoryKind::FiGamma, Parameters::Gamma(g)) if g.is_trivial() => "FI".into(),
            (CategoryKind::FiGamma, Parameters::Gamma(g)) => format!("FI_Γ({})", g.label()),
            (CategoryKind::Vi, Parameters::Field(f)) => format!("VI(q={})", f.modulus()),
            (CategoryKind::Vic, Parameters::Field(f)) => format!("VIC(q={})", f.modulus()),
            _ => unreachable!("kind and parameters are built together"),
        }
    }

    fn check_object(&self, object: usize) -> Result<()> {
        if object > self.max_object {
            return Err(Error::ObjectOutOfRange {
                object,
                max: self.max_object,
            });
        }
        Ok(())
    }

    /// `|C(i,j)|` from closed-form counting. Saturates at `u128::MAX`.
    pub fn hom_set_size(&self, i: usize, j: usize) -> u128 {
        if i > j {
            return 0;
        }
        match &self.params {
            Parameters::Gamma(g) => {
                let falling = (j - i + 1..=j).fold(1u128, |acc, x| acc.saturating_mul(x as u128));
                falling.saturating_mul((g.order() as u128).saturating_pow(i as u32))
            }
            Parameters::Field(f) => {
                let q = f.modulus() as u128;
                let vi = (0..i).fold(1u128, |acc, r| {
                    acc.saturating_mul(q.saturating_pow(j as u32) - q.saturating_pow(r as u32))
                });
                match self.kind {
                    CategoryKind::Vi => vi,
                    _ => vi.saturating_mul(q.saturating_pow((i * (j - i)) as u32)),
                }
            }
        }
    }

    fn check_guard(&self, i: usize, j: usize) -> Result<()> {
        let size = self.hom_set_size(i, j);
        let limit = if i == j {
            self.guard.max_group
        } else {
            self.guard.max_hom_set
        };
        if size > limit as u128 {
            return Err(Error::TooLarge { i, j, size, limit });
        }
        Ok(())
    }

    /// `C(i,j)` in canonical order.
    pub fn hom_set(&self, i: usize, j: usize) -> Result<Arc<HomSet>> {
        self.check_object(i)?;
        self.check_object(j)?;
        self.check_guard(i, j)?;
        self.homs.get_or_try_init(&(i, j), || {
            let mut elements = self.enumerate(i, j);
            elements.sort();
            Ok(HomSet::new(i, j, elements))
        })
    }

    /// `G_j = C(j,j)`.
    pub fn group(&self, j: usize) -> Result<Arc<HomSet>> {
        self.hom_set(j, j)
    }

    fn enumerate(&self, i: usize, j: usize) -> Vec<Morphism> {
        if i > j {
            return Vec::new();
        }
        match &self.params {
            Parameters::Gamma(g) => {
                let mut out = Vec::new();
                let colourings = tuples(g.order(), i);
                for f in injections(i, j) {
                    for c in &colourings {
                        out.push(Morphism::FiGamma(FiArrow::new_unchecked(j, f.clone(), c.clone())));
                    }
                }
                out
            }
            Parameters::Field(f) => {
                let maps = injective_matrices(f, i, j);
                match self.kind {
                    CategoryKind::Vi => maps.into_iter().map(Morphism::Vi).collect(),
                    _ => {
                        let candidates = subspaces_of_dim(f, j, j - i);
                        let mut out = Vec::new();
                        for m in maps {
                            let image = m.image();
                            for z in &candidates {
                                if image.sum(z).expect("same ambient").is_full() {
                                    out.push(Morphism::Vic(VicArrow::new_unchecked(m.clone(), z.clone())));
                                }
                            }
                        }
                        out
                    }
                }
            }
        }
    }

    fn check_kind(&self, m: &Morphism) -> Result<()> {
        let ok = matches!(
            (self.kind, m),
            (CategoryKind::FiGamma, Morphism::FiGamma(_))
                | (CategoryKind::Vi, Morphism::Vi(_))
                | (CategoryKind::Vic, Morphism::Vic(_))
        );
        if !ok {
            return Err(Error::InvalidMorphism(format!(
                "morphism does not belong to {}",
                self.descriptor()
            )));
        }
        Ok(())
    }

    /// `b ∘ a`.
    pub fn compose(&self, b: &Morphism, a: &Morphism) -> Result<Morphism> {
        self.check_kind(a)?;
        self.check_kind(b)?;
        if a.target() != b.source() {
            return Err(Error::ObjectMismatch {
                outer_source: b.source(),
                inner_target: a.target(),
            });
        }
        Ok(self.compose_unchecked(b, a))
    }

    pub(crate) fn compose_unchecked(&self, b: &Morphism, a: &Morphism) -> Morphism {
        match (b, a) {
            (Morphism::FiGamma(b), Morphism::FiGamma(a)) => {
                let g = self.gamma().expect("FI_Γ has Γ");
                let map = a.map().iter().map(|&r| b.map()[r - 1]).collect();
                let colors = a
                    .map()
                    .iter()
                    .zip(a.colors())
                    .map(|(&r, &c)| g.mul(b.colors()[r - 1], c))
                    .collect();
                Morphism::FiGamma(FiArrow::new_unchecked(b.target(), map, colors))
            }
            (Morphism::Vi(b), Morphism::Vi(a)) => Morphism::Vi(LinearArrow::new_unchecked(
                b.matrix().mul(a.matrix()).expect("shapes agree"),
            )),
            (Morphism::Vic(b), Morphism::Vic(a)) => {
                let map = LinearArrow::new_unchecked(
                    b.map().matrix().mul(a.map().matrix()).expect("shapes agree"),
                );
                let pushed = a
                    .complement()
                    .image_under(b.map().matrix())
                    .expect("shapes agree");
                let complement = b.complement().sum(&pushed).expect("same ambient");
                Morphism::Vic(VicArrow::new_unchecked(map, complement))
            }
            _ => unreachable!("kinds checked by caller"),
        }
    }

    pub fn identity(&self, i: usize) -> Morphism {
        match &self.params {
            Parameters::Gamma(_) => Morphism::FiGamma(FiArrow::new_unchecked(i, (1..=i).collect(), vec![0; i])),
            Parameters::Field(f) => {
                let id = LinearArrow::new_unchecked(Matrix::identity(*f, i));
                match self.kind {
                    CategoryKind::Vi => Morphism::Vi(id),
                    _ => Morphism::Vic(VicArrow::new_unchecked(id, Subspace::zero(*f, i))),
                }
            }
        }
    }

    /// The chosen `α_i ∈ C(i, i+1)`: the standard inclusion, with constant
    /// identity colouring for `FI_Γ` and complement `{(0,…,0,z)}` for VIC.
    pub fn alpha(&self, i: usize) -> Result<Morphism> {
        self.check_object(i + 1)?;
        Ok(match &self.params {
            Parameters::Gamma(_) => {
                Morphism::FiGamma(FiArrow::new_unchecked(i + 1, (1..=i).collect(), vec![0; i]))
            }
            Parameters::Field(f) => {
                let inclusion = inclusion_matrix(f, i, i + 1);
                match self.kind {
                    CategoryKind::Vi => Morphism::Vi(LinearArrow::new_unchecked(inclusion)),
                    _ => Morphism::Vic(VicArrow::new_unchecked(
                        LinearArrow::new_unchecked(inclusion),
                        Subspace::span(*f, i + 1, &[unit_vector(f, i + 1, i)]).expect("shape"),
                    )),
                }
            }
        })
    }

    /// `α_{i,j} = α_{j-1} ⋯ α_i`; the identity when `i = j`.
    pub fn alpha_path(&self, i: usize, j: usize) -> Result<Morphism> {
        self.check_object(j)?;
        if i > j {
            return Err(Error::Precondition(format!("alpha_path needs i <= j, got ({i},{j})")));
        }
        let mut acc = self.identity(i);
        for k in i..j {
            acc = self.compose_unchecked(&self.alpha(k)?, &acc);
        }
        Ok(acc)
    }

    /// Two-sided inverse within `G_i`, found by search.
    pub fn inverse(&self, g: &Morphism) -> Result<Option<Morphism>> {
        self.check_kind(g)?;
        if !g.is_endomorphism() {
            return Ok(None);
        }
        let i = g.source();
        let id = self.identity(i);
        let group = self.group(i)?;
        Ok(group
            .iter()
            .find(|h| self.compose_unchecked(h, g) == id && self.compose_unchecked(g, h) == id)
            .cloned())
    }

    /// In a skeletal EI category the isomorphisms are exactly the endomorphisms.
    pub fn is_isomorphism(&self, m: &Morphism) -> bool {
        m.is_endomorphism()
    }

    /// Decides unfactorizability by exhaustive search. Factorizations through
    /// the endpoints always have an isomorphism factor, so only objects
    /// strictly between source and target are searched.
    pub fn is_unfactorizable(&self, m: &Morphism) -> Result<bool> {
        self.check_kind(m)?;
        if self.is_isomorphism(m) {
            return Ok(false);
        }
        let (i, j) = (m.source(), m.target());
        for l in i + 1..j {
            let inner = self.hom_set(i, l)?;
            let outer = self.hom_set(l, j)?;
            for b2 in inner.iter() {
                for b1 in outer.iter() {
                    if self.compose_unchecked(b1, b2) == *m {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Whether some morphism of `C(i,j)` is unfactorizable: true iff the
    /// composites through intermediate objects miss part of `C(i,j)`.
    pub fn has_unfactorizable(&self, i: usize, j: usize) -> Result<bool> {
        let target = self.hom_set(i, j)?;
        if i >= j || target.is_empty() {
            return Ok(false);
        }
        let mut covered = HashSet::new();
        for l in i + 1..j {
            let inner = self.hom_set(i, l)?;
            let outer = self.hom_set(l, j)?;
            for b2 in inner.iter() {
                for b1 in outer.iter() {
                    covered.insert(self.compose_unchecked(b1, b2));
                }
                if covered.len() == target.len() {
                    return Ok(false);
                }
            }
        }
        Ok(covered.len() < target.len())
    }

    /// The designated generating set of `G_j`: adjacent transpositions and
    /// one `Γ`-generator per coordinate for `FI_Γ`; elementary transvections
    /// plus `diag(λ,1,…,1)` for a primitive `λ` when `q > 2` for VI/VIC.
    pub fn generators(&self, j: usize) -> Result<Arc<Vec<Morphism>>> {
        self.check_object(j)?;
        self.generators.get_or_try_init(&j, || {
            let mut gens = Vec::new();
            match &self.params {
                Parameters::Gamma(g) => {
                    for r in 1..j {
                        let mut map: Vec<usize> = (1..=j).collect();
                        map.swap(r - 1, r);
                        gens.push(Morphism::FiGamma(FiArrow::new_unchecked(j, map, vec![0; j])));
                    }
                    for r in 0..j {
                        for s in g.generators() {
                            let mut colors = vec![0; j];
                            colors[r] = s;
                            gens.push(Morphism::FiGamma(FiArrow::new_unchecked(j, (1..=j).collect(), colors)));
                        }
                    }
                }
                Parameters::Field(f) => {
                    let mut mats = Vec::new();
                    for r in 0..j {
                        for s in 0..j {
                            if r != s {
                                let mut m = Matrix::identity(*f, j);
                                m.set(r, s, f.one());
                                mats.push(m);
                            }
                        }
                    }
                    if f.modulus() > 2 && j > 0 {
                        let mut m = Matrix::identity(*f, j);
                        m.set(0, 0, f.primitive_element());
                        mats.push(m);
                    }
                    for m in mats {
                        let arrow = LinearArrow::new_unchecked(m);
                        gens.push(match self.kind {
                            CategoryKind::Vi => Morphism::Vi(arrow),
                            _ => Morphism::Vic(VicArrow::new_unchecked(arrow, Subspace::zero(*f, j))),
                        });
                    }
                }
            }
            Ok(gens)
        })
    }

    /// Breadth-first words for all of `G_j`. Fails with a violation if the
    /// designated generators do not generate.
    pub fn schreier_tree(&self, j: usize) -> Result<Arc<SchreierTree>> {
        let group = self.group(j)?;
        let gens = self.generators(j)?;
        self.words.get_or_try_init(&j, || {
            let start = group
                .position(&self.identity(j))
                .ok_or_else(|| Error::violation("identity in G_j", format!("missing at j={j}")))?;
            let mut parent = vec![None; group.len()];
            let mut seen = vec![false; group.len()];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut reached = 1;
            while let Some(x) = queue.pop_front() {
                for (k, s) in gens.iter().enumerate() {
                    let y = group
                        .position(&self.compose_unchecked(s, group.get(x)))
                        .expect("group is closed");
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, k));
                        reached += 1;
                        queue.push_back(y);
                    }
                }
            }
            if reached != group.len() {
                return Err(Error::violation(
                    "generating set",
                    format!("designated generators reach {reached} of {} elements of G_{j}", group.len()),
                ));
            }
            Ok(SchreierTree { parent })
        })
    }

    /// Transporter table out of `α_{i,j}` (see [`TransporterTable`]).
    pub fn transporters_from_alpha(&self, i: usize, j: usize) -> Result<Arc<TransporterTable>> {
        if i > j {
            return Err(Error::Precondition(format!("need i <= j, got ({i},{j})")));
        }
        let homs = self.hom_set(i, j)?;
        let group = self.group(j)?;
        let alpha = self.alpha_path(i, j)?;
        self.transporters.get_or_try_init(&(i, j), || {
            let from = homs
                .position(&alpha)
                .ok_or_else(|| Error::violation("α_{i,j} ∈ C(i,j)", format!("({i},{j})")))?;
            let mut witness = vec![None; homs.len()];
            witness[from] = group.position(&self.identity(j));
            for (k, g) in group.iter().enumerate() {
                let target = homs
                    .position(&self.compose_unchecked(g, &alpha))
                    .expect("hom-set closed under G_j");
                if witness[target].is_none() {
                    witness[target] = Some(k);
                }
            }
            Ok(TransporterTable {
                source: i,
                target: j,
                from,
                witness,
            })
        })
    }
}

impl fmt::Display for CategoryInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} up to object {}", self.descriptor(), self.max_object)
    }
}

fn inclusion_matrix(f: &PrimeField, i: usize, j: usize) -> Matrix<PrimeField> {
    let mut m = Matrix::zeros(*f, j, i);
    for k in 0..i {
        m.set(k, k, f.one());
    }
    m
}

/// Injections `[i] → [j]` as 1-based image lists, in lexicographic order.
fn injections(i: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, j: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for v in 1..=j {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(i, j, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(i, j, &mut Vec::with_capacity(i), &mut vec![false; j + 1], &mut out);
    out
}

/// All tuples in `[0, n)^len`, lexicographic.
pub(crate) fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Every vector of `F_q^n` in lexicographic order.
fn all_vectors(f: &PrimeField, n: usize) -> Vec<Vec<u32>> {
    tuples(f.modulus() as usize, n)
        .into_iter()
        .map(|t| t.into_iter().map(|x| x as u32).collect())
        .collect()
}

/// `j × i` matrices of rank `i`, in column-major lexicographic order.
fn injective_matrices(f: &PrimeField, i: usize, j: usize) -> Vec<LinearArrow> {
    let vectors = all_vectors(f, j);
    let mut out = Vec::new();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    fn go(
        f: &PrimeField,
        i: usize,
        j: usize,
        vectors: &[Vec<u32>],
        cols: &mut Vec<Vec<u32>>,
        span: Subspace<PrimeField>,
        out: &mut Vec<LinearArrow>,
    ) {
        if cols.len() == i {
            let m = Matrix::from_columns(*f, j, cols).expect("column lengths agree");
            out.push(LinearArrow::new_unchecked(m));
            return;
        }
        for v in vectors {
            if span.contains(v).expect("ambient agrees") {
                continue;
            }
            let next = span.extend(std::slice::from_ref(v)).expect("ambient agrees");
            cols.push(v.clone());
            go(f, i, j, vectors, cols, next, out);
            cols.pop();
        }
    }
    go(f, i, j, &vectors, &mut cols, Subspace::zero(*f, j), &mut out);
    out
}

/// All `d`-dimensional subspaces of `F_q^n`, by enumerating RREF shapes.
pub(crate) fn subspaces_of_dim(f: &PrimeField, n: usize, d: usize) -> Vec<Subspace<PrimeField>> {
    let mut out = Vec::new();
    for pivots in combinations(n, d) {
        // free positions: (row r, column c) with c > pivot r and c not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                let p = &pivots;
                (p[r] + 1..n).filter(move |c| !p.contains(c)).map(move |c| (r, c))
            })
            .collect();
        for fill in tuples(f.modulus() as usize, free.len()) {
            let mut rows = vec![vec![0u32; n]; d];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for (&(r, c), &x) in free.iter().zip(&fill) {
                rows[r][c] = x as u32;
            }
            out.push(Subspace::span(*f, n, &rows).expect("shape"));
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
