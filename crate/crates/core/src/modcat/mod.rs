//! Finite-dimensional right modules over a bound quiver algebra, given as
//! representations: one vector space per vertex and one matrix per arrow.
//!
//! The matrix of an arrow `s -> t` has shape `dim(t) x dim(s)`, so a path
//! `a1 a2 .. ak` acts by `A_k .. A_2 A_1`.

mod ar;
mod decompose;
mod hom;
mod indec;

pub use ar::{
    ar_sequence_ending_at, ar_translate, ar_translate_inv, cosyzygy, ext1, ext1_dim, has_injective_summand,
    has_projective_summand, injective_envelope, presentation, projective_cover, syzygy, transpose, ArSequence, Ext1,
    Presentation,
};
pub use decompose::{decompose, decompose_with_maps, end_radical, is_indecomposable, isomorphic, Summand};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub use indec::{indecomposables, is_selfinjective, ModCat, Strategy};

use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{self, Field, Mat, Scalar};
use crate::quiver::{BoundQuiverAlgebra, Path};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid module map: {0}")]
    InvalidMap(String),
    #[error("module has a projective summand")]
    HasProjectiveSummand,
    #[error("module has an injective summand")]
    HasInjectiveSummand,
    #[error("module is projective")]
    IsProjective,
    #[error("endomorphism ring is not split local: {0}")]
    NonSplitField(String),
    #[error("closure did not stabilise within the fuel bound ({found} modules found)")]
    FuelExhausted { found: usize },
    #[error("strategy `{0}` does not apply to this algebra")]
    StrategyMismatch(String),
    #[error("algebra is not self-injective")]
    NotSelfInjective,
}

pub type Alg = Arc<BoundQuiverAlgebra>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module {
    pub alg: Alg,
    pub dims: Vec<usize>,
    pub action: Vec<Mat>,
}

impl Module {
    pub fn new(alg: Alg, dims: Vec<usize>, action: Vec<Mat>) -> Result<Self, ModError> {
        if dims.len() != alg.n_vertices() || action.len() != alg.quiver.arrows.len() {
            return Err(ModError::InvalidModule("wrong number of vertices or arrows".into()));
        }
        for (a, m) in alg.quiver.arrows.iter().zip(&action) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(ModError::InvalidModule(format!("arrow `{}` has the wrong shape", a.label)));
            }
            if m.field() != alg.field {
                return Err(ModError::InvalidModule("entries over the wrong field".into()));
            }
        }
        let m = Module { alg, dims, action };
        for r in &m.alg.relations {
            if !m.path_action(r).is_zero() {
                return Err(ModError::InvalidModule(format!(
                    "relation `{}` does not act as zero",
                    r.display(&m.alg.quiver)
                )));
            }
        }
        Ok(m)
    }

    fn unchecked(alg: Alg, dims: Vec<usize>, action: Vec<Mat>) -> Self {
        Module { alg, dims, action }
    }

    pub fn field(&self) -> Field {
        self.alg.field
    }

    pub fn zero(alg: &Alg) -> Self {
        let f = alg.field;
        let action = alg.quiver.arrows.iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        Module::unchecked(alg.clone(), vec![0; alg.n_vertices()], action)
    }

    pub fn simple(alg: &Alg, v: usize) -> Self {
        let f = alg.field;
        let mut dims = vec![0; alg.n_vertices()];
        dims[v] = 1;
        let action = alg
            .quiver
            .arrows
            .iter()
            .map(|a| Mat::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Module::unchecked(alg.clone(), dims, action)
    }

    /// `P_v`, spanned by the basis paths starting at `v`.
    pub fn projective(alg: &Alg, v: usize) -> Self {
        Module::proj_sum(alg, &[v])
    }

    /// `P_{v1} + .. + P_{vn}`. At each vertex the basis lists the summands in
    /// order, each by its basis paths in algebra basis order.
    pub fn proj_sum(alg: &Alg, verts: &[usize]) -> Self {
        let f = alg.field;
        let n = alg.n_vertices();
        let blocks: Vec<Vec<Vec<&Path>>> = verts
            .iter()
            .map(|&v| (0..n).map(|w| alg.paths_between(v, w)).collect())
            .collect();
        let dims: Vec<usize> = (0..n).map(|w| blocks.iter().map(|b| b[w].len()).sum()).collect();
        let mut action = Vec::new();
        for (ai, a) in alg.quiver.arrows.iter().enumerate() {
            let mut m = Mat::zeros(f, dims[a.target], dims[a.source]);
            let (mut off_s, mut off_t) = (0, 0);
            for b in &blocks {
                for (j, p) in b[a.source].iter().enumerate() {
                    let step = Path {
                        source: a.source,
                        target: a.target,
                        arrows: vec![ai],
                    };
                    if let Some(q) = alg.compose(p, &step) {
                        let i = b[a.target].iter().position(|x| **x == q).expect("basis path");
                        m.set(off_t + i, off_s + j, f.one());
                    }
                }
                off_s += b[a.source].len();
                off_t += b[a.target].len();
            }
            action.push(m);
        }
        Module::unchecked(alg.clone(), dims, action)
    }

    /// `I_v`, the dual of the projective at `v` over the opposite algebra.
    pub fn injective(alg: &Alg, v: usize) -> Self {
        let op = Arc::new(alg.opposite());
        Module::projective(&op, v).dual_over(alg)
    }

    /// Vertex-wise transpose: a module over the opposite algebra `target`.
    pub fn dual_over(&self, target: &Alg) -> Module {
        let action = self.action.iter().map(Mat::transpose).collect();
        Module::unchecked(target.clone(), self.dims.clone(), action)
    }

    pub fn dual(&self) -> Module {
        self.dual_over(&Arc::new(self.alg.opposite()))
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Offsets of each vertex block in the concatenated total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    pub fn path_action(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        assert!(self.alg == other.alg, "direct sum over different algebras");
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Module::unchecked(self.alg.clone(), dims, action)
    }

    pub fn direct_sum_all(alg: &Alg, parts: &[&Module]) -> Module {
        parts.iter().fold(Module::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// Submodule spanned per vertex by the columns of `cols[v]`, which must
    /// be linearly independent and closed under the action.
    pub fn submodule(&self, cols: Vec<Mat>) -> Result<(Module, ModuleMap), ModError> {
        let f = self.field();
        let mut action = Vec::new();
        for (ai, a) in self.alg.quiver.arrows.iter().enumerate() {
            let rhs = self.action[ai].mul(&cols[a.source]);
            let x = exactla::solve_matrix(&cols[a.target], &rhs)
                .ok_or_else(|| ModError::InvalidModule("subspace not closed under the action".into()))?;
            action.push(x);
        }
        let dims: Vec<usize> = cols.iter().map(Mat::cols).collect();
        let sub = Module::unchecked(self.alg.clone(), dims, action);
        let comps = cols
            .into_iter()
            .map(|c| if c.cols() == 0 { Mat::zeros(f, c.rows(), 0) } else { c })
            .collect();
        let inc = ModuleMap::unchecked(sub.clone(), self.clone(), comps);
        Ok((sub, inc))
    }

    /// `rad M`: the sum of the images of all arrows.
    pub fn radical(&self) -> (Module, ModuleMap) {
        let cols = self.radical_cols(&self.identity_cols());
        self.submodule(cols).expect("radical is a submodule")
    }

    /// `soc M`: vectors killed by every arrow.
    pub fn socle(&self) -> (Module, ModuleMap) {
        let f = self.field();
        let mut cols = Vec::new();
        for v in 0..self.dims.len() {
            let outgoing: Vec<&Mat> = self
                .alg
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(i, _)| &self.action[i])
                .collect();
            let stacked = outgoing
                .iter()
                .fold(Mat::zeros(f, 0, self.dims[v]), |acc, m| acc.vstack(m));
            cols.push(exactla::kernel_basis(&stacked).basis.transpose());
        }
        self.submodule(cols).expect("socle is a submodule")
    }

    /// `M / rad M` with the quotient map.
    pub fn top(&self) -> (Module, ModuleMap) {
        let (_, inc) = self.radical();
        inc.cokernel()
    }

    fn identity_cols(&self) -> Vec<Mat> {
        self.dims.iter().map(|&d| Mat::identity(self.field(), d)).collect()
    }

    fn radical_cols(&self, u: &[Mat]) -> Vec<Mat> {
        let f = self.field();
        (0..self.dims.len())
            .map(|t| {
                let mut rows: Vec<Vec<Scalar>> = Vec::new();
                for (ai, a) in self.alg.quiver.arrows.iter().enumerate() {
                    if a.target != t {
                        continue;
                    }
                    let img = self.action[ai].mul(&u[a.source]);
                    for c in 0..img.cols() {
                        rows.push(img.col(c));
                    }
                }
                exactla::Subspace::span(f, self.dims[t], &rows).basis.transpose()
            })
            .collect()
    }

    /// Composition factors of the radical layers, top first, as vertex
    /// multiplicities.
    pub fn loewy_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut u = self.identity_cols();
        loop {
            let total: usize = u.iter().map(Mat::cols).sum();
            if total == 0 {
                break;
            }
            let next = self.radical_cols(&u);
            layers.push(u.iter().zip(&next).map(|(a, b)| a.cols() - b.cols()).collect());
            u = next;
        }
        layers
    }

    /// Loewy-layer label such as `a/b/a`; within a layer, factors are
    /// joined by `+`.
    pub fn label(&self) -> String {
        let layers = self.loewy_layers();
        if layers.is_empty() {
            return "0".into();
        }
        layers
            .iter()
            .map(|mult| {
                let mut parts = Vec::new();
                for (v, &m) in mult.iter().enumerate() {
                    for _ in 0..m {
                        parts.push(self.alg.vertex_name(v).to_string());
                    }
                }
                parts.join("+")
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub comps: Vec<Mat>,
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, comps: Vec<Mat>) -> Result<Self, ModError> {
        if source.alg != target.alg {
            return Err(ModError::AlgebraMismatch);
        }
        if comps.len() != source.dims.len() {
            return Err(ModError::InvalidMap("wrong number of components".into()));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(ModError::InvalidMap(format!("component {v} has the wrong shape")));
            }
        }
        let m = ModuleMap::unchecked(source, target, comps);
        for (ai, a) in m.source.alg.quiver.arrows.iter().enumerate() {
            let lhs = m.comps[a.target].mul(&m.source.action[ai]);
            let rhs = m.target.action[ai].mul(&m.comps[a.source]);
            if lhs != rhs {
                return Err(ModError::InvalidMap(format!("does not intertwine `{}`", a.label)));
            }
        }
        Ok(m)
    }

    pub(crate) fn unchecked(source: Module, target: Module, comps: Vec<Mat>) -> Self {
        ModuleMap { source, target, comps }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let f = source.field();
        let comps = (0..source.dims.len())
            .map(|v| Mat::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        ModuleMap::unchecked(source.clone(), target.clone(), comps)
    }

    pub fn identity(m: &Module) -> Self {
        let comps = m.dims.iter().map(|&d| Mat::identity(m.field(), d)).collect();
        ModuleMap::unchecked(m.clone(), m.clone(), comps)
    }

    /// The map out of `P_{v1} + .. + P_{vn}` sending the `i`-th generator to
    /// `gens[i]`, a vector of `target` at vertex `verts[i]`.
    pub fn from_proj_sum(alg: &Alg, verts: &[usize], target: &Module, gens: &[Vec<Scalar>]) -> Self {
        let source = Module::proj_sum(alg, verts);
        let f = alg.field;
        let comps = (0..alg.n_vertices())
            .map(|w| {
                let mut cols = Vec::new();
                for (&v, g) in verts.iter().zip(gens) {
                    for p in alg.paths_between(v, w) {
                        cols.push(target.path_action(p).mul_vec(g));
                    }
                }
                if cols.is_empty() {
                    Mat::zeros(f, target.dims[w], 0)
                } else {
                    Mat::from_cols(f, target.dims[w], &cols)
                }
            })
            .collect();
        ModuleMap::unchecked(source, target.clone(), comps)
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        debug_assert_eq!(self.target.dims, g.source.dims);
        let comps = self.comps.iter().zip(&g.comps).map(|(f, g)| g.mul(f)).collect();
        ModuleMap::unchecked(self.source.clone(), g.target.clone(), comps)
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        ModuleMap::unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        let comps = self.comps.iter().map(|a| a.scale(s)).collect();
        ModuleMap::unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims == self.target.dims && self.is_injective()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let comps = self.comps.iter().map(Mat::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMap::unchecked(self.target.clone(), self.source.clone(), comps))
    }

    /// Entries of all components, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.comps.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    /// Block-diagonal action on the total space.
    pub fn total_matrix(&self) -> Mat {
        let f = self.source.field();
        self.comps
            .iter()
            .fold(Mat::zeros(f, 0, 0), |acc, c| acc.direct_sum(c))
    }

    pub fn kernel(&self) -> (Module, ModuleMap) {
        let cols = self
            .comps
            .iter()
            .map(|c| exactla::kernel_basis(c).basis.transpose())
            .collect();
        self.source.submodule(cols).expect("kernel is a submodule")
    }

    pub fn image(&self) -> (Module, ModuleMap) {
        let cols = self
            .comps
            .iter()
            .map(|c| exactla::image_basis(c).basis.transpose())
            .collect();
        self.target.submodule(cols).expect("image is a submodule")
    }

    /// Cokernel module and the quotient map onto it.
    pub fn cokernel(&self) -> (Module, ModuleMap) {
        let f = self.source.field();
        let n = &self.target;
        let mut projs = Vec::new();
        let mut sections = Vec::new();
        for (v, c) in self.comps.iter().enumerate() {
            let rows: Vec<Vec<Scalar>> = (0..c.cols()).map(|j| c.col(j)).collect();
            let q = exactla::quotient_coords(f, n.dims[v], &rows);
            sections.push(q.reps.transpose());
            projs.push(q.proj);
        }
        let action = n
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| projs[a.target].mul(&n.action[ai]).mul(&sections[a.source]))
            .collect();
        let dims = projs.iter().map(Mat::rows).collect();
        let q = Module::unchecked(n.alg.clone(), dims, action);
        let pi = ModuleMap::unchecked(n.clone(), q.clone(), projs);
        (q, pi)
    }

    /// `D f : D N -> D M` over the opposite algebra `target`.
    pub fn dual_over(&self, target: &Alg) -> ModuleMap {
        ModuleMap::unchecked(
            self.target.dual_over(target),
            self.source.dual_over(target),
            self.comps.iter().map(Mat::transpose).collect(),
        )
    }

    /// Injection of `parts[i]` into the direct sum of `parts`.
    pub fn injection(alg: &Alg, parts: &[&Module], i: usize) -> ModuleMap {
        let sum = Module::direct_sum_all(alg, parts);
        let f = alg.field;
        let comps = (0..alg.n_vertices())
            .map(|v| {
                let off: usize = parts[..i].iter().map(|p| p.dims[v]).sum();
                let mut m = Mat::zeros(f, sum.dims[v], parts[i].dims[v]);
                for k in 0..parts[i].dims[v] {
                    m.set(off + k, k, f.one());
                }
                m
            })
            .collect();
        ModuleMap::unchecked(parts[i].clone(), sum, comps)
    }

    pub fn projection(alg: &Alg, parts: &[&Module], i: usize) -> ModuleMap {
        let inj = ModuleMap::injection(alg, parts, i);
        ModuleMap::unchecked(
            inj.target.clone(),
            inj.source.clone(),
            inj.comps.iter().map(Mat::transpose).collect(),
        )
    }

    /// The map `A -> B1 + .. + Bn` with components `maps`.
    pub fn column(alg: &Alg, source: &Module, maps: &[&ModuleMap]) -> ModuleMap {
        let targets: Vec<&Module> = maps.iter().map(|m| &m.target).collect();
        let sum = Module::direct_sum_all(alg, &targets);
        let f = alg.field;
        let comps = (0..alg.n_vertices())
            .map(|v| {
                maps.iter()
                    .fold(Mat::zeros(f, 0, source.dims[v]), |acc, m| acc.vstack(&m.comps[v]))
            })
            .collect();
        ModuleMap::unchecked(source.clone(), sum, comps)
    }

    /// The map `A1 + .. + An -> B` with components `maps`.
    pub fn row(alg: &Alg, target: &Module, maps: &[&ModuleMap]) -> ModuleMap {
        let sources: Vec<&Module> = maps.iter().map(|m| &m.source).collect();
        let sum = Module::direct_sum_all(alg, &sources);
        let f = alg.field;
        let comps = (0..alg.n_vertices())
            .map(|v| {
                maps.iter()
                    .fold(Mat::zeros(f, target.dims[v], 0), |acc, m| acc.hstack(&m.comps[v]))
            })
            .collect();
        ModuleMap::unchecked(sum, target.clone(), comps)
    }

    /// Block matrix map between two direct sums; `blocks[i][j]` goes from
    /// `sources[j]` to `targets[i]`.
    pub fn matrix(alg: &Alg, sources: &[&Module], targets: &[&Module], blocks: &[Vec<ModuleMap>]) -> ModuleMap {
        let src = Module::direct_sum_all(alg, sources);
        let tgt = Module::direct_sum_all(alg, targets);
        let f = alg.field;
        let comps = (0..alg.n_vertices())
            .map(|v| {
                let mut m = Mat::zeros(f, tgt.dims[v], src.dims[v]);
                let mut r0 = 0;
                for (i, t) in targets.iter().enumerate() {
                    let mut c0 = 0;
                    for (j, s) in sources.iter().enumerate() {
                        m.set_block(r0, c0, &blocks[i][j].comps[v]);
                        c0 += s.dims[v];
                    }
                    r0 += t.dims[v];
                }
                m
            })
            .collect();
        ModuleMap::unchecked(src, tgt, comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn projectives_and_injectives() {
        let a1 = corpus::a1();
        let pa = Module::projective(&a1, 0);
        assert_eq!(pa.dims, vec![2, 2]);
        assert_eq!(pa.label(), "a/b/a/b");
        let a3 = corpus::a3();
        assert_eq!(Module::projective(&a3, 0).dims, vec![1, 1, 1]);
        assert_eq!(Module::projective(&a3, 2), Module::simple(&a3, 2));
        assert_eq!(Module::injective(&a3, 2).label(), "a/b/c");
        assert_eq!(Module::injective(&a3, 0).label(), "a");
    }

    #[test]
    fn relations_are_enforced() {
        let a2 = corpus::a2();
        let pa = Module::projective(&a2, 0);
        assert!(Module::new(a2.clone(), pa.dims.clone(), pa.action.clone()).is_ok());
        let f = a2.field;
        let bad = Module::new(
            a2.clone(),
            vec![2, 2],
            vec![Mat::identity(f, 2), Mat::identity(f, 2)],
        );
        assert!(matches!(bad, Err(ModError::InvalidModule(_))));
    }

    #[test]
    fn kernel_cokernel_top() {
        let a1 = corpus::a1();
        let pa = Module::projective(&a1, 0);
        let (rad, inc) = pa.radical();
        assert_eq!(rad.label(), "b/a/b");
        assert!(inc.is_injective());
        let (top, pi) = pa.top();
        assert_eq!(top, Module::simple(&a1, 0));
        assert!(inc.then(&pi).is_zero());
        let (soc, _) = pa.socle();
        assert_eq!(soc.label(), "b");
        let (k, _) = pi.kernel();
        assert_eq!(k.label(), "b/a/b");
    }

    #[test]
    fn double_dual_is_identity() {
        let a2 = corpus::a2();
        let m = Module::projective(&a2, 1);
        assert_eq!(m.dual().dual_over(&a2), m);
    }
}
