//! Finite additive categories given by a skeleton: indecomposable objects,
//! hom spaces as coordinate spaces and a composition tensor.
//!
//! Morphisms between direct sums are block matrices of coordinate vectors
//! ([`CatMor`]). Ideal quotients, radicals, Auslander-Reiten quivers,
//! categorical mono/epi tests and generic kernels and cokernels all work at
//! this level, independently of how the category was produced.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::exactla::{self, min_poly, roots_in_field, Field, Mat, QuotientSpace, Scalar, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinCatError {
    #[error("no kernel found within multiplicity bound {0}")]
    NotFoundWithinBound(usize),
    #[error("endomorphism ring of `{0}` is not split local")]
    NotLocal(String),
    #[error("inconsistent category data: {0}")]
    Inconsistent(String),
}

/// A morphism between formal direct sums of objects. `blocks[i][j]` holds
/// the coordinates of the component `source[j] -> target[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatMor {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub blocks: Vec<Vec<Vec<Scalar>>>,
}

impl CatMor {
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().all(|b| exactla::vec_is_zero(b))
    }

    pub fn add(&self, other: &CatMor) -> CatMor {
        assert_eq!((&self.source, &self.target), (&other.source, &other.target));
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| exactla::vec_add(a, b)).collect())
            .collect();
        CatMor {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn scale(&self, s: &Scalar) -> CatMor {
        CatMor {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|r| r.iter().map(|b| exactla::vec_scale(b, s)).collect())
                .collect(),
        }
    }

    /// The component out of source summand `j`, as a morphism from a single
    /// object.
    pub fn column(&self, j: usize) -> CatMor {
        CatMor {
            source: vec![self.source[j]],
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|r| vec![r[j].clone()]).collect(),
        }
    }

    /// The component into target summand `i`.
    pub fn row(&self, i: usize) -> CatMor {
        CatMor {
            source: self.source.clone(),
            target: vec![self.target[i]],
            blocks: vec![self.blocks[i].clone()],
        }
    }

    pub fn without_source(&self, j: usize) -> CatMor {
        let mut m = self.clone();
        m.source.remove(j);
        for r in &mut m.blocks {
            r.remove(j);
        }
        m
    }

    pub fn without_target(&self, i: usize) -> CatMor {
        let mut m = self.clone();
        m.target.remove(i);
        m.blocks.remove(i);
        m
    }

    /// Restrict to the source summands `keep_s` and target summands `keep_t`.
    pub fn restrict(&self, keep_s: &[usize], keep_t: &[usize]) -> CatMor {
        CatMor {
            source: keep_s.iter().map(|&j| self.source[j]).collect(),
            target: keep_t.iter().map(|&i| self.target[i]).collect(),
            blocks: keep_t
                .iter()
                .map(|&i| keep_s.iter().map(|&j| self.blocks[i][j].clone()).collect())
                .collect(),
        }
    }

    /// `(f, g)^T : A -> B + C` from `f: A -> B` and `g: A -> C`.
    pub fn stack(f: &CatMor, g: &CatMor) -> CatMor {
        assert_eq!(f.source, g.source);
        let mut target = f.target.clone();
        target.extend(&g.target);
        let mut blocks = f.blocks.clone();
        blocks.extend(g.blocks.iter().cloned());
        CatMor {
            source: f.source.clone(),
            target,
            blocks,
        }
    }

    /// `(f, g) : A + B -> C` from `f: A -> C` and `g: B -> C`.
    pub fn juxtapose(f: &CatMor, g: &CatMor) -> CatMor {
        assert_eq!(f.target, g.target);
        let mut source = f.source.clone();
        source.extend(&g.source);
        let blocks = f
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        CatMor {
            source,
            target: f.target.clone(),
            blocks,
        }
    }
}

/// A functor between skeleta: an object map and, per pair of source objects,
/// the matrix on hom coordinates.
#[derive(Debug, Clone)]
pub struct Functor {
    pub obj: Vec<usize>,
    pub hom: HashMap<(usize, usize), Mat>,
}

impl Functor {
    pub fn apply(&self, x: usize, y: usize, f: &[Scalar]) -> Vec<Scalar> {
        match self.hom.get(&(x, y)) {
            Some(m) => m.mul_vec(f),
            None => vec![],
        }
    }

    pub fn apply_mor(&self, f: &CatMor) -> CatMor {
        CatMor {
            source: f.source.iter().map(|&x| self.obj[x]).collect(),
            target: f.target.iter().map(|&y| self.obj[y]).collect(),
            blocks: f
                .target
                .iter()
                .zip(&f.blocks)
                .map(|(&y, row)| row.iter().zip(&f.source).map(|(b, &x)| self.apply(x, y, b)).collect())
                .collect(),
        }
    }

    /// Identities go to identities and composites to composites, checked on
    /// all basis pairs.
    pub fn verify(&self, src: &LinCategory, tgt: &LinCategory) -> Result<(), String> {
        let n = src.len();
        for x in 0..n {
            if tgt.len() <= self.obj[x] {
                return Err(format!("object {x} maps outside the target"));
            }
            if self.apply(x, x, &src.identity[x]) != tgt.identity[self.obj[x]] {
                return Err(format!("identity of `{}` not preserved", src.objects[x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for i in 0..src.dim(x, y) {
                        for j in 0..src.dim(y, z) {
                            let f = src.unit(x, y, i);
                            let g = src.unit(y, z, j);
                            let lhs = self.apply(x, z, &src.compose(x, y, z, &f, &g));
                            let rhs = tgt.compose(
                                self.obj[x],
                                self.obj[y],
                                self.obj[z],
                                &self.apply(x, y, &f),
                                &self.apply(y, z, &g),
                            );
                            if lhs != rhs {
                                return Err(format!(
                                    "composition {} -> {} -> {} not preserved",
                                    src.objects[x], src.objects[y], src.objects[z]
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl Functor {
    /// `other . self`.
    pub fn then(&self, other: &Functor) -> Functor {
        let mut hom = HashMap::new();
        for (&(x, y), m) in &self.hom {
            if let Some(m2) = other.hom.get(&(self.obj[x], self.obj[y])) {
                hom.insert((x, y), m2.mul(m));
            }
        }
        Functor {
            obj: self.obj.iter().map(|&x| other.obj[x]).collect(),
            hom,
        }
    }

    pub fn is_object_bijection(&self) -> bool {
        let mut seen = vec![false; self.obj.len()];
        for &y in &self.obj {
            if y >= seen.len() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct LinCategory {
    pub field: Field,
    pub objects: Vec<String>,
    pub hom_dims: Vec<Vec<usize>>,
    /// Coordinates of each identity morphism.
    pub identity: Vec<Vec<Scalar>>,
    /// For `(x, y, z)`, row `i * dim(y, z) + j` holds the coordinates of
    /// `g_j . f_i` for basis maps `f_i: x -> y` and `g_j: y -> z`. Missing
    /// entries are zero.
    comp: HashMap<(usize, usize, usize), Mat>,
    radicals: OnceLock<Vec<Subspace>>,
}

/// Data attached to an ideal quotient: which old object each new object
/// was, and per kept pair the quotient of the hom space.
#[derive(Debug, Clone)]
pub struct FactorData {
    pub keep: Vec<usize>,
    pub old_to_new: Vec<Option<usize>>,
    pub spaces: HashMap<(usize, usize), QuotientSpace>,
    pub ideal_dims: HashMap<(usize, usize), usize>,
}

impl FactorData {
    /// Image of a morphism of the old category; summands in the ideal's
    /// generating set vanish.
    pub fn project(&self, f: &CatMor) -> CatMor {
        let ks: Vec<usize> = (0..f.source.len()).filter(|&j| self.old_to_new[f.source[j]].is_some()).collect();
        let kt: Vec<usize> = (0..f.target.len()).filter(|&i| self.old_to_new[f.target[i]].is_some()).collect();
        CatMor {
            source: ks.iter().map(|&j| self.old_to_new[f.source[j]].unwrap()).collect(),
            target: kt.iter().map(|&i| self.old_to_new[f.target[i]].unwrap()).collect(),
            blocks: kt
                .iter()
                .map(|&i| {
                    ks.iter()
                        .map(|&j| self.spaces[&(f.source[j], f.target[i])].proj.mul_vec(&f.blocks[i][j]))
                        .collect()
                })
                .collect(),
        }
    }

    /// Coordinates of a single old morphism `x -> y` in the quotient.
    pub fn project_coords(&self, x: usize, y: usize, c: &[Scalar]) -> Vec<Scalar> {
        self.spaces[&(x, y)].proj.mul_vec(c)
    }

    /// A preimage of a quotient morphism, using the fixed section.
    pub fn lift(&self, f: &CatMor) -> CatMor {
        let source: Vec<usize> = f.source.iter().map(|&x| self.keep[x]).collect();
        let target: Vec<usize> = f.target.iter().map(|&y| self.keep[y]).collect();
        CatMor {
            blocks: target
                .iter()
                .zip(&f.blocks)
                .map(|(&y, row)| {
                    row.iter()
                        .zip(&source)
                        .map(|(b, &x)| self.spaces[&(x, y)].reps.transpose().mul_vec(b))
                        .collect()
                })
                .collect(),
            source,
            target,
        }
    }
}

/// Result of a kernel or cokernel search, with the universal property
/// replay per test object.
#[derive(Debug, Clone, Serialize)]
pub struct UniversalCheck {
    pub object: String,
    pub hom_dim: usize,
    pub expected_dim: usize,
    pub injective: bool,
    pub image_matches: bool,
}

impl UniversalCheck {
    pub fn passed(&self) -> bool {
        self.injective && self.image_matches
    }
}

impl LinCategory {
    pub fn new(
        field: Field,
        objects: Vec<String>,
        hom_dims: Vec<Vec<usize>>,
        identity: Vec<Vec<Scalar>>,
        comp: HashMap<(usize, usize, usize), Mat>,
    ) -> Self {
        LinCategory {
            field,
            objects,
            hom_dims,
            identity,
            comp,
            radicals: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.hom_dims[x][y]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn indices(&self, labels: &[&str]) -> Option<Vec<usize>> {
        labels.iter().map(|l| self.index(l)).collect()
    }

    pub fn unit(&self, x: usize, y: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim(x, y)];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vec(&self, x: usize, y: usize) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim(x, y)]
    }

    /// `g . f` for `f: x -> y` and `g: y -> z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        let dxz = self.dim(x, z);
        let mut out = vec![self.field.zero(); dxz];
        let Some(t) = self.comp.get(&(x, y, z)) else {
            return out;
        };
        let dyz = self.dim(y, z);
        for (i, a) in f.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = t.get(i * dyz + j, k);
                    if !c.is_zero() {
                        *slot = &*slot + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Associativity and identities on all basis triples.
    pub fn verify(&self) -> Result<(), String> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.dim(x, y) {
                    let f = self.unit(x, y, i);
                    if self.compose(x, x, y, &self.identity[x], &f) != f
                        || self.compose(x, y, y, &f, &self.identity[y]) != f
                    {
                        return Err(format!("identity fails on {} -> {}", self.objects[x], self.objects[y]));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.dim(x, y) == 0 {
                    continue;
                }
                for z in 0..n {
                    if self.dim(y, z) == 0 {
                        continue;
                    }
                    for w in 0..n {
                        if self.dim(z, w) == 0 || self.dim(x, w) == 0 {
                            continue;
                        }
                        for i in 0..self.dim(x, y) {
                            for j in 0..self.dim(y, z) {
                                for k in 0..self.dim(z, w) {
                                    let f = self.unit(x, y, i);
                                    let g = self.unit(y, z, j);
                                    let h = self.unit(z, w, k);
                                    let left = self.compose(x, z, w, &self.compose(x, y, z, &f, &g), &h);
                                    let right = self.compose(x, y, w, &f, &self.compose(y, z, w, &g, &h));
                                    if left != right {
                                        return Err(format!(
                                            "associativity fails on {} -> {} -> {} -> {}",
                                            self.objects[x], self.objects[y], self.objects[z], self.objects[w]
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The full subcategory on `objs`, in that order.
    pub fn full_subcategory(&self, objs: &[usize]) -> LinCategory {
        let hom_dims = objs.iter().map(|&x| objs.iter().map(|&y| self.dim(x, y)).collect()).collect();
        let identity = objs.iter().map(|&x| self.identity[x].clone()).collect();
        let mut comp = HashMap::new();
        for (a, &x) in objs.iter().enumerate() {
            for (b, &y) in objs.iter().enumerate() {
                for (c, &z) in objs.iter().enumerate() {
                    if let Some(t) = self.comp.get(&(x, y, z)) {
                        comp.insert((a, b, c), t.clone());
                    }
                }
            }
        }
        LinCategory::new(
            self.field,
            objs.iter().map(|&x| self.objects[x].clone()).collect(),
            hom_dims,
            identity,
            comp,
        )
    }

    // ---- morphisms between formal sums ----

    pub fn zero_mor(&self, source: &[usize], target: &[usize]) -> CatMor {
        CatMor {
            source: source.to_vec(),
            target: target.to_vec(),
            blocks: target
                .iter()
                .map(|&y| source.iter().map(|&x| self.zero_vec(x, y)).collect())
                .collect(),
        }
    }

    pub fn identity_mor(&self, objs: &[usize]) -> CatMor {
        let mut m = self.zero_mor(objs, objs);
        for (i, &x) in objs.iter().enumerate() {
            m.blocks[i][i] = self.identity[x].clone();
        }
        m
    }

    pub fn single(&self, x: usize, y: usize, c: Vec<Scalar>) -> CatMor {
        CatMor {
            source: vec![x],
            target: vec![y],
            blocks: vec![vec![c]],
        }
    }

    /// `g . f`.
    pub fn compose_mor(&self, f: &CatMor, g: &CatMor) -> CatMor {
        assert_eq!(f.target, g.source, "composable sums");
        let mut out = self.zero_mor(&f.source, &g.target);
        for (i, &z) in g.target.iter().enumerate() {
            for (j, &x) in f.source.iter().enumerate() {
                for (k, &y) in f.target.iter().enumerate() {
                    let c = self.compose(x, y, z, &f.blocks[k][j], &g.blocks[i][k]);
                    out.blocks[i][j] = exactla::vec_add(&out.blocks[i][j], &c);
                }
            }
        }
        out
    }

    fn sum_dim_into(&self, w: usize, objs: &[usize]) -> usize {
        objs.iter().map(|&a| self.dim(w, a)).sum()
    }

    fn sum_dim_from(&self, objs: &[usize], w: usize) -> usize {
        objs.iter().map(|&a| self.dim(a, w)).sum()
    }

    /// `Hom(w, f): Hom(w, source) -> Hom(w, target)` on concatenated
    /// coordinates.
    pub fn post_map(&self, w: usize, f: &CatMor) -> Mat {
        let rows = self.sum_dim_into(w, &f.target);
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for (j, &s) in f.source.iter().enumerate() {
            for k in 0..self.dim(w, s) {
                let e = self.unit(w, s, k);
                let mut col = Vec::with_capacity(rows);
                for (i, &t) in f.target.iter().enumerate() {
                    col.extend(self.compose(w, s, t, &e, &f.blocks[i][j]));
                }
                cols.push(col);
            }
        }
        if cols.is_empty() {
            Mat::zeros(self.field, rows, 0)
        } else {
            Mat::from_cols(self.field, rows, &cols)
        }
    }

    /// `Hom(f, w): Hom(target, w) -> Hom(source, w)` on concatenated
    /// coordinates.
    pub fn pre_map(&self, w: usize, f: &CatMor) -> Mat {
        let rows = self.sum_dim_from(&f.source, w);
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for (i, &t) in f.target.iter().enumerate() {
            for k in 0..self.dim(t, w) {
                let e = self.unit(t, w, k);
                let mut col = Vec::with_capacity(rows);
                for (j, &s) in f.source.iter().enumerate() {
                    col.extend(self.compose(s, t, w, &f.blocks[i][j], &e));
                }
                cols.push(col);
            }
        }
        if cols.is_empty() {
            Mat::zeros(self.field, rows, 0)
        } else {
            Mat::from_cols(self.field, rows, &cols)
        }
    }

    /// Split concatenated coordinates of `Hom(w, objs)` into a morphism
    /// `w -> objs`.
    pub fn mor_into(&self, w: usize, objs: &[usize], v: &[Scalar]) -> CatMor {
        let mut blocks = Vec::new();
        let mut off = 0;
        for &t in objs {
            let d = self.dim(w, t);
            blocks.push(vec![v[off..off + d].to_vec()]);
            off += d;
        }
        CatMor {
            source: vec![w],
            target: objs.to_vec(),
            blocks,
        }
    }

    /// Split concatenated coordinates of `Hom(objs, w)` into a morphism
    /// `objs -> w`.
    pub fn mor_from(&self, objs: &[usize], w: usize, v: &[Scalar]) -> CatMor {
        let mut row = Vec::new();
        let mut off = 0;
        for &s in objs {
            let d = self.dim(s, w);
            row.push(v[off..off + d].to_vec());
            off += d;
        }
        CatMor {
            source: objs.to_vec(),
            target: vec![w],
            blocks: vec![row],
        }
    }

    /// `f` is a monomorphism: `Hom(w, f)` is injective for every object `w`.
    pub fn is_mono(&self, f: &CatMor) -> bool {
        (0..self.len()).all(|w| {
            let m = self.post_map(w, f);
            m.rank() == m.cols()
        })
    }

    /// `f` is an epimorphism: `Hom(f, w)` is injective for every object `w`.
    pub fn is_epi(&self, f: &CatMor) -> bool {
        (0..self.len()).all(|w| {
            let m = self.pre_map(w, f);
            m.rank() == m.cols()
        })
    }

    pub fn is_iso(&self, f: &CatMor) -> bool {
        (0..self.len()).all(|w| {
            let m = self.post_map(w, f);
            m.rows() == m.cols() && m.rank() == m.cols()
        })
    }

    // ---- radical and Auslander-Reiten quiver ----

    fn end_radical(&self, x: usize) -> Result<Subspace, LinCatError> {
        let d = self.dim(x, x);
        let f = self.field;
        let mut rows = Vec::new();
        for i in 0..d {
            let e = self.unit(x, x, i);
            // left multiplication by e on End(x)
            let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.compose(x, x, x, &self.unit(x, x, j), &e)).collect();
            let l = Mat::from_cols(f, d, &cols);
            let roots = roots_in_field(&min_poly(&l), f);
            let [lambda] = roots.as_slice() else {
                return Err(LinCatError::NotLocal(self.objects[x].clone()));
            };
            let shifted = exactla::vec_add(&e, &exactla::vec_scale(&self.identity[x], &-lambda));
            rows.push(shifted);
        }
        let rad = Subspace::span(f, d, &rows);
        if d > 0 && rad.dim() != d - 1 {
            return Err(LinCatError::NotLocal(self.objects[x].clone()));
        }
        Ok(rad)
    }

    fn radicals(&self) -> &Vec<Subspace> {
        self.radicals.get_or_init(|| {
            (0..self.len())
                .map(|x| self.end_radical(x).expect("indecomposable objects have local endomorphism rings"))
                .collect()
        })
    }

    /// Check that every object has a split local endomorphism ring.
    pub fn check_local(&self) -> Result<(), LinCatError> {
        for x in 0..self.len() {
            self.end_radical(x)?;
        }
        Ok(())
    }

    /// `rad(x, y)`: all of `Hom(x, y)` for distinct objects, the maximal
    /// ideal of `End(x)` otherwise.
    pub fn radical(&self, x: usize, y: usize) -> Subspace {
        if x == y {
            self.radicals()[x].clone()
        } else {
            Subspace::full(self.field, self.dim(x, y))
        }
    }

    pub fn radical_sq(&self, x: usize, y: usize) -> Subspace {
        let mut rows = Vec::new();
        for z in 0..self.len() {
            let r1 = self.radical(x, z);
            let r2 = self.radical(z, y);
            for a in r1.vectors() {
                for b in r2.vectors() {
                    rows.push(self.compose(x, z, y, &a, &b));
                }
            }
        }
        Subspace::span(self.field, self.dim(x, y), &rows)
    }

    /// Number of irreducible maps `x -> y`, i.e. `dim rad / rad^2`.
    pub fn irreducible_count(&self, x: usize, y: usize) -> usize {
        self.radical(x, y).dim() - self.radical_sq(x, y).dim()
    }

    /// Arrows of the Auslander-Reiten quiver as `(source, target,
    /// multiplicity)`.
    pub fn ar_quiver(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                let m = self.irreducible_count(x, y);
                if m > 0 {
                    out.push((x, y, m));
                }
            }
        }
        out
    }

    /// DOT description of the Auslander-Reiten quiver; one edge line per
    /// irreducible map.
    pub fn ar_quiver_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        for o in &self.objects {
            let _ = writeln!(s, "  \"{o}\";");
        }
        for (x, y, m) in self.ar_quiver() {
            for _ in 0..m {
                let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.objects[x], self.objects[y]);
            }
        }
        s.push_str("}\n");
        s
    }

    /// Sum of all radical maps into `y`: `W^{dim rad(W, y)} -> y` over all
    /// objects `W`.
    pub fn sink_map(&self, y: usize) -> CatMor {
        let mut source = Vec::new();
        let mut row = Vec::new();
        for w in 0..self.len() {
            for v in self.radical(w, y).vectors() {
                source.push(w);
                row.push(v);
            }
        }
        CatMor {
            source,
            target: vec![y],
            blocks: vec![row],
        }
    }

    /// Sum of all radical maps out of `x`.
    pub fn source_map(&self, x: usize) -> CatMor {
        let mut target = Vec::new();
        let mut blocks = Vec::new();
        for w in 0..self.len() {
            for v in self.radical(x, w).vectors() {
                target.push(w);
                blocks.push(vec![v]);
            }
        }
        CatMor {
            source: vec![x],
            target,
            blocks,
        }
    }

    /// `y` is projective exactly when the map collecting all radical maps
    /// into it is not an epimorphism: a non-split epimorphism onto `y` has
    /// radical components, so it factors through that map.
    pub fn is_projective(&self, y: usize) -> bool {
        !self.is_epi(&self.sink_map(y))
    }

    pub fn is_injective(&self, x: usize) -> bool {
        !self.is_mono(&self.source_map(x))
    }

    pub fn projectives(&self) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.is_projective(y)).collect()
    }

    pub fn injectives(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_injective(x)).collect()
    }

    // ---- ideal quotients ----

    /// The quotient by the ideal of maps factoring through objects of `s`.
    pub fn factor_ideal(&self, s: &[usize]) -> Result<(LinCategory, FactorData), LinCatError> {
        let n = self.len();
        let f = self.field;
        let keep: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
        let mut old_to_new = vec![None; n];
        for (k, &x) in keep.iter().enumerate() {
            old_to_new[x] = Some(k);
        }
        let mut spaces = HashMap::new();
        let mut ideal_dims = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                let mut rows = Vec::new();
                for &t in s {
                    for i in 0..self.dim(x, t) {
                        for j in 0..self.dim(t, y) {
                            rows.push(self.compose(x, t, y, &self.unit(x, t, i), &self.unit(t, y, j)));
                        }
                    }
                }
                let q = exactla::quotient_coords(f, self.dim(x, y), &rows);
                ideal_dims.insert((x, y), self.dim(x, y) - q.dim());
                spaces.insert((x, y), q);
            }
        }
        // the ideal must be closed under composition on both sides
        for x in 0..n {
            for y in 0..n {
                let q = &spaces[&(x, y)];
                let ideal = exactla::kernel_basis(&q.proj);
                for a in ideal.vectors() {
                    for z in 0..n {
                        for j in 0..self.dim(y, z) {
                            let c = self.compose(x, y, z, &a, &self.unit(y, z, j));
                            if !exactla::vec_is_zero(&spaces[&(x, z)].proj.mul_vec(&c)) {
                                return Err(LinCatError::Inconsistent("ideal not closed under composition".into()));
                            }
                        }
                        for j in 0..self.dim(z, x) {
                            let c = self.compose(z, x, y, &self.unit(z, x, j), &a);
                            if !exactla::vec_is_zero(&spaces[&(z, y)].proj.mul_vec(&c)) {
                                return Err(LinCatError::Inconsistent("ideal not closed under composition".into()));
                            }
                        }
                    }
                }
            }
        }
        let m = keep.len();
        let hom_dims: Vec<Vec<usize>> = keep
            .iter()
            .map(|&x| keep.iter().map(|&y| spaces[&(x, y)].dim()).collect())
            .collect();
        let identity: Vec<Vec<Scalar>> = keep
            .iter()
            .map(|&x| spaces[&(x, x)].proj.mul_vec(&self.identity[x]))
            .collect();
        for (k, id) in identity.iter().enumerate() {
            if exactla::vec_is_zero(id) {
                return Err(LinCatError::Inconsistent(format!(
                    "object `{}` vanishes in the quotient",
                    self.objects[keep[k]]
                )));
            }
        }
        let mut comp = HashMap::new();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let (x, y, z) = (keep[a], keep[b], keep[c]);
                    let (dab, dbc, dac) = (hom_dims[a][b], hom_dims[b][c], hom_dims[a][c]);
                    if dab == 0 || dbc == 0 || dac == 0 {
                        continue;
                    }
                    let rx = spaces[&(x, y)].reps.clone();
                    let ry = spaces[&(y, z)].reps.clone();
                    let mut t = Mat::zeros(f, dab * dbc, dac);
                    for i in 0..dab {
                        for j in 0..dbc {
                            let old = self.compose(x, y, z, rx.row(i), ry.row(j));
                            let new = spaces[&(x, z)].proj.mul_vec(&old);
                            for (k, v) in new.into_iter().enumerate() {
                                t.set(i * dbc + j, k, v);
                            }
                        }
                    }
                    if !t.is_zero() {
                        comp.insert((a, b, c), t);
                    }
                }
            }
        }
        let cat = LinCategory::new(
            f,
            keep.iter().map(|&x| self.objects[x].clone()).collect(),
            hom_dims,
            identity,
            comp,
        );
        if cat.len() != n - s.len() {
            return Err(LinCatError::Inconsistent("object count after factoring".into()));
        }
        Ok((
            cat,
            FactorData {
                keep,
                old_to_new,
                spaces,
                ideal_dims,
            },
        ))
    }

    // ---- approximations, kernels and cokernels ----

    /// The universal map `sum_{s in objs} s^{dim Hom(s, M)} -> M`.
    pub fn right_approximation(&self, objs: &[usize], target: &[usize]) -> CatMor {
        let mut source = Vec::new();
        let mut cols: Vec<Vec<Vec<Scalar>>> = Vec::new();
        for &s in objs {
            let d = self.sum_dim_into(s, target);
            for k in 0..d {
                let mut v = vec![self.field.zero(); d];
                v[k] = self.field.one();
                source.push(s);
                cols.push(self.mor_into(s, target, &v).blocks.into_iter().map(|mut b| b.remove(0)).collect());
            }
        }
        CatMor {
            source,
            target: target.to_vec(),
            blocks: (0..target.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect(),
        }
    }

    /// The universal map `M -> sum_{s in objs} s^{dim Hom(M, s)}`.
    pub fn left_approximation(&self, objs: &[usize], source: &[usize]) -> CatMor {
        let mut target = Vec::new();
        let mut blocks = Vec::new();
        for &s in objs {
            let d = self.sum_dim_from(source, s);
            for k in 0..d {
                let mut v = vec![self.field.zero(); d];
                v[k] = self.field.one();
                target.push(s);
                blocks.push(self.mor_from(source, s, &v).blocks.remove(0));
            }
        }
        CatMor {
            source: source.to_vec(),
            target,
            blocks,
        }
    }

    /// Every map from an object of `objs` into the target of `f` factors
    /// through `f`.
    pub fn is_right_approximation(&self, objs: &[usize], f: &CatMor) -> bool {
        objs.iter().all(|&s| {
            let m = self.post_map(s, f);
            m.rank() == m.rows()
        })
    }

    pub fn is_left_approximation(&self, objs: &[usize], f: &CatMor) -> bool {
        objs.iter().all(|&s| {
            let m = self.pre_map(s, f);
            m.rank() == m.rows()
        })
    }

    /// Drop source summands whose component factors through the others, up
    /// to a radical endomorphism of itself. The image of `Hom(W, -)` under
    /// composition with the result is unchanged for every `W`.
    pub fn minimize_right(&self, f: &CatMor) -> CatMor {
        let mut cur = f.clone();
        let mut k = 0;
        while k < cur.source.len() {
            let sk = cur.source[k];
            let col = |m: &CatMor, j: usize| -> Vec<Scalar> { m.blocks.iter().flat_map(|r| r[j].clone()).collect() };
            let mut span: Vec<Vec<Scalar>> = Vec::new();
            for (j, &sj) in cur.source.iter().enumerate() {
                let basis: Vec<Vec<Scalar>> = if j == k {
                    self.radical(sk, sk).vectors()
                } else {
                    (0..self.dim(sk, sj)).map(|i| self.unit(sk, sj, i)).collect()
                };
                for phi in basis {
                    let v: Vec<Scalar> = cur
                        .target
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &t)| self.compose(sk, sj, t, &phi, &cur.blocks[i][j]))
                        .collect();
                    span.push(v);
                }
            }
            let total: usize = cur.target.iter().map(|&t| self.dim(sk, t)).sum();
            if Subspace::span(self.field, total, &span).contains(&col(&cur, k)) {
                cur = cur.without_source(k);
            } else {
                k += 1;
            }
        }
        cur
    }

    /// Dual of [`LinCategory::minimize_right`] on target summands.
    pub fn minimize_left(&self, f: &CatMor) -> CatMor {
        let mut cur = f.clone();
        let mut k = 0;
        while k < cur.target.len() {
            let tk = cur.target[k];
            let mut span: Vec<Vec<Scalar>> = Vec::new();
            for (i, &ti) in cur.target.iter().enumerate() {
                let basis: Vec<Vec<Scalar>> = if i == k {
                    self.radical(tk, tk).vectors()
                } else {
                    (0..self.dim(ti, tk)).map(|j| self.unit(ti, tk, j)).collect()
                };
                for phi in basis {
                    let v: Vec<Scalar> = cur
                        .source
                        .iter()
                        .enumerate()
                        .flat_map(|(j, &s)| self.compose(s, ti, tk, &cur.blocks[i][j], &phi))
                        .collect();
                    span.push(v);
                }
            }
            let total: usize = cur.source.iter().map(|&s| self.dim(s, tk)).sum();
            let row: Vec<Scalar> = cur.blocks[k].iter().flatten().cloned().collect();
            if Subspace::span(self.field, total, &span).contains(&row) {
                cur = cur.without_target(k);
            } else {
                k += 1;
            }
        }
        cur
    }

    /// Replay of the kernel property of `k` for `f`: for every object `W`,
    /// `Hom(W, k)` is injective with image `ker Hom(W, f)`.
    pub fn check_kernel(&self, f: &CatMor, k: &CatMor) -> Vec<UniversalCheck> {
        (0..self.len())
            .map(|w| {
                let pk = self.post_map(w, k);
                let pf = self.post_map(w, f);
                let ker = exactla::kernel_basis(&pf);
                let img = exactla::image_basis(&pk);
                UniversalCheck {
                    object: self.objects[w].clone(),
                    hom_dim: pk.cols(),
                    expected_dim: ker.dim(),
                    injective: pk.rank() == pk.cols(),
                    image_matches: img == ker,
                }
            })
            .collect()
    }

    /// Replay of the cokernel property of `c` for `f`.
    pub fn check_cokernel(&self, f: &CatMor, c: &CatMor) -> Vec<UniversalCheck> {
        (0..self.len())
            .map(|w| {
                let pc = self.pre_map(w, c);
                let pf = self.pre_map(w, f);
                let ker = exactla::kernel_basis(&pf);
                let img = exactla::image_basis(&pc);
                UniversalCheck {
                    object: self.objects[w].clone(),
                    hom_dim: pc.cols(),
                    expected_dim: ker.dim(),
                    injective: pc.rank() == pc.cols(),
                    image_matches: img == ker,
                }
            })
            .collect()
    }

    /// Kernel of `f`, built from the functor `ker Hom(-, f)`: collect a
    /// basis of it on every object, minimise, then replay the universal
    /// property. Fails when a multiplicity exceeds `mult_bound` or the
    /// replay fails.
    pub fn kernel_search(&self, f: &CatMor, mult_bound: usize) -> Result<(CatMor, Vec<UniversalCheck>), LinCatError> {
        let mut k = self.zero_mor(&[], &f.source);
        for w in 0..self.len() {
            let ker = exactla::kernel_basis(&self.post_map(w, f));
            for v in ker.vectors() {
                let col = self.mor_into(w, &f.source, &v);
                k = CatMor::juxtapose(&k, &col);
            }
        }
        let k = self.minimize_right(&k);
        if max_multiplicity(&k.source) > mult_bound {
            return Err(LinCatError::NotFoundWithinBound(mult_bound));
        }
        let checks = self.check_kernel(f, &k);
        if checks.iter().all(UniversalCheck::passed) {
            Ok((k, checks))
        } else {
            Err(LinCatError::NotFoundWithinBound(mult_bound))
        }
    }

    pub fn cokernel_search(&self, f: &CatMor, mult_bound: usize) -> Result<(CatMor, Vec<UniversalCheck>), LinCatError> {
        let mut c = self.zero_mor(&f.target, &[]);
        for w in 0..self.len() {
            let ker = exactla::kernel_basis(&self.pre_map(w, f));
            for v in ker.vectors() {
                let row = self.mor_from(&f.target, w, &v);
                c = CatMor::stack(&c, &row);
            }
        }
        let c = self.minimize_left(&c);
        if max_multiplicity(&c.target) > mult_bound {
            return Err(LinCatError::NotFoundWithinBound(mult_bound));
        }
        let checks = self.check_cokernel(f, &c);
        if checks.iter().all(UniversalCheck::passed) {
            Ok((c, checks))
        } else {
            Err(LinCatError::NotFoundWithinBound(mult_bound))
        }
    }

    /// Default search bound: twice the largest hom dimension.
    pub fn default_mult_bound(&self) -> usize {
        2 * self.hom_dims.iter().flatten().copied().max().unwrap_or(0).max(1)
    }

    /// Every basis morphism between two objects, as `(x, y, coords)`.
    pub fn basis_morphisms(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                for i in 0..self.dim(x, y) {
                    out.push((x, y, self.unit(x, y, i)));
                }
            }
        }
        out
    }
}

impl LinCategory {
    /// `dim` of the space of morphisms `src -> tgt` between formal sums.
    pub fn mor_dim(&self, src: &[usize], tgt: &[usize]) -> usize {
        tgt.iter().map(|&y| src.iter().map(|&x| self.dim(x, y)).sum::<usize>()).sum()
    }

    /// Concatenated block coordinates, target-major.
    pub fn mor_coords(f: &CatMor) -> Vec<Scalar> {
        f.blocks.iter().flatten().flatten().cloned().collect()
    }

    /// Inverse of [`LinCategory::mor_coords`].
    pub fn mor_from_coords(&self, src: &[usize], tgt: &[usize], v: &[Scalar]) -> CatMor {
        let mut off = 0;
        let blocks = tgt
            .iter()
            .map(|&y| {
                src.iter()
                    .map(|&x| {
                        let d = self.dim(x, y);
                        let b = v[off..off + d].to_vec();
                        off += d;
                        b
                    })
                    .collect()
            })
            .collect();
        CatMor {
            source: src.to_vec(),
            target: tgt.to_vec(),
            blocks,
        }
    }

    /// The matrix of a linear operation on morphisms `src -> tgt`, whose
    /// values are flattened to vectors of length `rows`.
    pub fn mor_operator<F>(&self, src: &[usize], tgt: &[usize], rows: usize, op: F) -> Mat
    where
        F: Fn(&CatMor) -> Vec<Scalar>,
    {
        let n = self.mor_dim(src, tgt);
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                let mut e = vec![self.field.zero(); n];
                e[k] = self.field.one();
                op(&self.mor_from_coords(src, tgt, &e))
            })
            .collect();
        if cols.is_empty() {
            Mat::zeros(self.field, rows, 0)
        } else {
            Mat::from_cols(self.field, rows, &cols)
        }
    }

    /// Some `x: src -> tgt` with `op(x) = rhs`, for a linear `op`.
    pub fn solve_mor<F>(&self, src: &[usize], tgt: &[usize], op: F, rhs: &[Scalar]) -> Option<CatMor>
    where
        F: Fn(&CatMor) -> Vec<Scalar>,
    {
        let m = self.mor_operator(src, tgt, rhs.len(), op);
        let x = exactla::solve(&m, rhs).ok()??;
        Some(self.mor_from_coords(src, tgt, &x))
    }

    /// `x` is an invertible endomorphism of object `o`.
    pub fn is_automorphism(&self, o: usize, x: &[Scalar]) -> bool {
        let d = self.dim(o, o);
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.compose(o, o, o, &self.unit(o, o, j), x)).collect();
        d > 0 && Mat::from_cols(self.field, d, &cols).rank() == d
    }

    /// Same labels, hom dimensions, identities and composition tables.
    pub fn same_structure(&self, other: &LinCategory) -> bool {
        if self.objects != other.objects || self.hom_dims != other.hom_dims || self.identity != other.identity {
            return false;
        }
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    (0..self.dim(x, y)).all(|i| {
                        (0..self.dim(y, z)).all(|j| {
                            let (f, g) = (self.unit(x, y, i), self.unit(y, z, j));
                            self.compose(x, y, z, &f, &g) == other.compose(x, y, z, &f, &g)
                        })
                    })
                })
            })
        })
    }

    /// A natural isomorphism `g => id` for an endofunctor `g` that is the
    /// identity on objects, as one automorphism per object.
    pub fn natural_iso_to_identity(&self, g: &Functor) -> Option<Vec<Vec<Scalar>>> {
        let n = self.len();
        if g.obj.iter().enumerate().any(|(i, &x)| i != x) {
            return None;
        }
        let offs: Vec<usize> = (0..n)
            .scan(0, |acc, x| {
                let o = *acc;
                *acc += self.dim(x, x);
                Some(o)
            })
            .collect();
        let total: usize = (0..n).map(|x| self.dim(x, x)).sum();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.dim(x, y) {
                    let phi = self.unit(x, y, i);
                    let gphi = g.apply(x, y, &phi);
                    // eta_y . g(phi) - phi . eta_x, one row per coordinate
                    let mut block = vec![vec![self.field.zero(); total]; self.dim(x, y)];
                    for k in 0..self.dim(y, y) {
                        let c = self.compose(x, y, y, &gphi, &self.unit(y, y, k));
                        for (r, v) in c.into_iter().enumerate() {
                            block[r][offs[y] + k] = &block[r][offs[y] + k] + &v;
                        }
                    }
                    for k in 0..self.dim(x, x) {
                        let c = self.compose(x, x, y, &self.unit(x, x, k), &phi);
                        for (r, v) in c.into_iter().enumerate() {
                            block[r][offs[x] + k] = &block[r][offs[x] + k] - &v;
                        }
                    }
                    rows.extend(block);
                }
            }
        }
        let sol = if rows.is_empty() {
            Subspace::full(self.field, total)
        } else {
            exactla::kernel_basis(&Mat::from_rows(self.field, rows, total))
        };
        let basis = sol.vectors();
        for attempt in 1..=8i64 {
            let mut v = vec![self.field.zero(); total];
            for (k, b) in basis.iter().enumerate() {
                let c = self.field.int(1 + (k as i64 * attempt) % 7);
                v = exactla::vec_add(&v, &exactla::vec_scale(b, &c));
            }
            let eta: Vec<Vec<Scalar>> = (0..n).map(|x| v[offs[x]..offs[x] + self.dim(x, x)].to_vec()).collect();
            if (0..n).all(|x| self.is_automorphism(x, &eta[x])) {
                return Some(eta);
            }
        }
        None
    }
}

pub fn max_multiplicity(objs: &[usize]) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &o in objs {
        *counts.entry(o).or_default() += 1;
    }
    counts.values().copied().max().unwrap_or(0)
}

/// A vertex bijection `p` with `(p[x], p[y], m)` an edge of the second
/// graph for every edge `(x, y, m)` of the first, if one exists.
pub fn digraph_isomorphism(
    n1: usize,
    e1: &[(usize, usize, usize)],
    n2: usize,
    e2: &[(usize, usize, usize)],
) -> Option<Vec<usize>> {
    if n1 != n2 || e1.len() != e2.len() {
        return None;
    }
    let adj = |n: usize, e: &[(usize, usize, usize)]| {
        let mut a = vec![vec![0usize; n]; n];
        for &(x, y, m) in e {
            a[x][y] = m;
        }
        a
    };
    let (a1, a2) = (adj(n1, e1), adj(n2, e2));
    let degree = |a: &Vec<Vec<usize>>, v: usize| -> (usize, usize) {
        (a[v].iter().sum(), a.iter().map(|r| r[v]).sum())
    };
    fn extend(
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        a1: &[Vec<usize>],
        a2: &[Vec<usize>],
        deg_ok: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let n = a1.len();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || !deg_ok(k, cand) {
                continue;
            }
            let consistent = (0..k).all(|j| a1[k][j] == a2[cand][perm[j]] && a1[j][k] == a2[perm[j]][cand])
                && a1[k][k] == a2[cand][cand];
            if !consistent {
                continue;
            }
            perm.push(cand);
            used[cand] = true;
            if extend(k + 1, perm, used, a1, a2, deg_ok) {
                return true;
            }
            perm.pop();
            used[cand] = false;
        }
        false
    }
    let deg_ok = |x: usize, y: usize| degree(&a1, x) == degree(&a2, y);
    let mut perm = Vec::new();
    let mut used = vec![false; n1];
    if extend(0, &mut perm, &mut used, &a1, &a2, &deg_ok) {
        Some(perm)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::modcat::{ModCat, Strategy};

    fn mod_a3() -> LinCategory {
        ModCat::build(&corpus::a3(), Strategy::HereditaryKnit).unwrap().skeleton()
    }

    #[test]
    fn skeleton_is_a_category() {
        let c = mod_a3();
        assert_eq!(c.len(), 6);
        c.verify().unwrap();
    }

    #[test]
    fn trivial_ideal_quotients() {
        let c = mod_a3();
        let (same, _) = c.factor_ideal(&[]).unwrap();
        assert_eq!(same.hom_dims, c.hom_dims);
        let all: Vec<usize> = (0..c.len()).collect();
        let (empty, _) = c.factor_ideal(&all).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn identities_and_zero_maps() {
        let c = mod_a3();
        let id = c.identity_mor(&[0]);
        assert!(c.is_mono(&id) && c.is_epi(&id));
        let z = c.zero_mor(&[0], &[3]);
        assert!(!c.is_mono(&z));
    }

    #[test]
    fn ar_quiver_of_the_line() {
        let c = mod_a3();
        let edges = c.ar_quiver();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(x, y, m)| {
                assert_eq!(m, 1);
                (c.objects[x].clone(), c.objects[y].clone())
            })
            .collect();
        let expected = [
            ("c", "b/c"),
            ("b/c", "a/b/c"),
            ("b/c", "b"),
            ("a/b/c", "a/b"),
            ("b", "a/b"),
            ("a/b", "a"),
        ];
        assert_eq!(named.len(), expected.len());
        for (x, y) in expected {
            assert!(named.contains(&(x.to_string(), y.to_string())), "{x} -> {y}");
        }
        assert!(c.ar_quiver_dot("A3").contains("\"b/c\" -> \"b\";"));
    }

    #[test]
    fn kernels_of_identity_and_zero() {
        let c = mod_a3();
        let x = c.index("b/c").unwrap();
        let (k, _) = c.kernel_search(&c.identity_mor(&[x]), 2).unwrap();
        assert!(k.source.is_empty());
        let y = c.index("a").unwrap();
        let (k, _) = c.kernel_search(&c.zero_mor(&[x], &[y]), 2).unwrap();
        assert_eq!(k.source, vec![x]);
        let (q, _) = c.cokernel_search(&c.zero_mor(&[x], &[y]), 2).unwrap();
        assert_eq!(q.target, vec![y]);
    }

    #[test]
    fn projectives_of_the_module_category() {
        let c = mod_a3();
        let names: Vec<&str> = c.projectives().iter().map(|&i| c.objects[i].as_str()).collect();
        assert_eq!(names, ["c", "b/c", "a/b/c"]);
        let names: Vec<&str> = c.injectives().iter().map(|&i| c.objects[i].as_str()).collect();
        assert_eq!(names, ["a", "a/b", "a/b/c"]);
    }

    #[test]
    fn graph_isomorphism() {
        let e1 = [(0, 1, 1), (1, 2, 1)];
        let e2 = [(2, 0, 1), (1, 2, 1)];
        assert_eq!(digraph_isomorphism(3, &e1, 3, &e2), Some(vec![1, 2, 0]));
        assert!(digraph_isomorphism(3, &e1, 3, &[(0, 1, 1), (0, 2, 1)]).is_none());
    }
}
