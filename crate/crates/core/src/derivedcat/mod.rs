//! Bounded derived categories of representation-finite hereditary algebras,
//! restricted to a window of degrees, and their cluster categories.
//!
//! Indecomposable objects are shifted modules `M[d]`. Morphisms come from
//! the mesh category of `ZQ`: the vertex `(x, n)` stands for
//! `tau^-n P_x`.

mod cluster;
mod mesh;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{Mat, Scalar};
use crate::lincat::{LinCatError, LinCategory};
use crate::modcat::{ext1_dim, Alg, ModCat, ModError, Module, Strategy};
use crate::stablecat::{SerreReport, StableError};

pub use cluster::{build_cluster, covering_check, ClusterModel, CoveringReport};
pub use mesh::Mesh;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DerivedError {
    #[error("algebra is not hereditary")]
    NotHereditary,
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error(transparent)]
    Module(#[from] ModError),
    #[error(transparent)]
    Category(#[from] LinCatError),
    #[error(transparent)]
    Triangulated(#[from] StableError),
    #[error("{0} lies outside the degree window")]
    WindowExceeded(String),
    #[error("degree window [{min}, {max}] is too narrow: {reason}")]
    WindowTooNarrow { min: i64, max: i64, reason: String },
    #[error("subcategory is not stable under F: {0}")]
    NotFStable(String),
    #[error("inconsistent model: {0}")]
    Inconsistent(String),
}

/// An inclusive range of cohomological degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub min_degree: i64,
    pub max_degree: i64,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            min_degree: -4,
            max_degree: 4,
        }
    }
}

impl Window {
    pub fn new(min_degree: i64, max_degree: i64) -> Self {
        Window { min_degree, max_degree }
    }

    pub fn contains(&self, d: i64) -> bool {
        (self.min_degree..=self.max_degree).contains(&d)
    }

    pub fn widened(&self, by: i64) -> Self {
        Window::new(self.min_degree - by, self.max_degree + by)
    }
}

/// The stalk complex `M[degree]` of an indecomposable module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DObject {
    pub module: usize,
    pub degree: i64,
}

/// The derived category on a window, backed by a mesh category covering the
/// window with two degrees of margin on each side.
#[derive(Debug, Clone)]
pub struct DerivedModel {
    pub alg: Alg,
    pub modcat: ModCat,
    pub window: Window,
    /// Objects of [`DerivedModel::cat`], sorted by degree then module.
    pub objects: Vec<DObject>,
    pub cat: LinCategory,
    pub mesh: Mesh,
    vertex_of_dobj: HashMap<DObject, usize>,
    dobj_of_vertex: Vec<DObject>,
    proj: Vec<usize>,
    inj: Vec<usize>,
    tau_mod: Vec<Option<usize>>,
    tau_inv_mod: Vec<Option<usize>>,
}

const MARGIN: i64 = 2;

/// Vertices of a quiver with every arrow going from a later vertex to an
/// earlier one.
fn sinks_first(alg: &Alg) -> Result<Vec<usize>, DerivedError> {
    let q = &alg.quiver;
    let n = q.n_vertices();
    let mut out_deg = vec![0usize; n];
    for a in &q.arrows {
        out_deg[a.source] += 1;
    }
    let mut order = Vec::new();
    let mut ready: Vec<usize> = (0..n).filter(|&v| out_deg[v] == 0).collect();
    while let Some(v) = ready.pop() {
        order.push(v);
        for a in q.arrows.iter().filter(|a| a.target == v) {
            out_deg[a.source] -= 1;
            if out_deg[a.source] == 0 {
                ready.push(a.source);
            }
        }
    }
    if order.len() < n {
        return Err(DerivedError::Cyclic);
    }
    Ok(order)
}

impl DerivedModel {
    pub fn build(alg: &Alg, window: Window) -> Result<Self, DerivedError> {
        if !alg.is_hereditary() {
            return Err(DerivedError::NotHereditary);
        }
        let order = sinks_first(alg)?;
        let modcat = ModCat::build(alg, Strategy::auto(alg))?;
        let k = alg.n_vertices();
        let find = |m: Module| {
            modcat
                .index_of(&m)
                .ok_or_else(|| DerivedError::Inconsistent(format!("{} missing from the module list", m.label())))
        };
        let proj = (0..k).map(|v| find(Module::projective(alg, v))).collect::<Result<Vec<_>, _>>()?;
        let inj = (0..k).map(|v| find(Module::injective(alg, v))).collect::<Result<Vec<_>, _>>()?;
        let tau_mod = modcat.tau_map();
        let mut tau_inv_mod = vec![None; modcat.len()];
        for (i, t) in tau_mod.iter().enumerate() {
            if let Some(t) = *t {
                tau_inv_mod[t] = Some(i);
            }
        }
        let mut model = DerivedModel {
            alg: alg.clone(),
            modcat,
            window,
            objects: Vec::new(),
            cat: LinCategory::new(alg.field, Vec::new(), Vec::new(), Vec::new(), HashMap::new()),
            mesh: Mesh::new(alg.field, k, &[], &order, 0, 0),
            vertex_of_dobj: HashMap::new(),
            dobj_of_vertex: Vec::new(),
            proj,
            inj,
            tau_mod,
            tau_inv_mod,
        };
        let (lo, hi) = (window.min_degree - MARGIN, window.max_degree + MARGIN);
        let slice0: Vec<DObject> = (0..k).map(|x| DObject { module: model.proj[x], degree: 0 }).collect();
        let mut slices = vec![slice0.clone()];
        let mut n_lo = 0i64;
        loop {
            let s: Vec<DObject> = slices[0].iter().map(|&d| model.tau(d)).collect();
            if s.iter().all(|d| d.degree < lo) {
                break;
            }
            slices.insert(0, s);
            n_lo -= 1;
        }
        loop {
            let s: Vec<DObject> = slices.last().unwrap().iter().map(|&d| model.tau_inv(d)).collect();
            if s.iter().all(|d| d.degree > hi) {
                break;
            }
            slices.push(s);
        }
        let n_hi = n_lo + slices.len() as i64 - 1;
        let q_arrows: Vec<(usize, usize)> = alg.quiver.arrows.iter().map(|a| (a.source, a.target)).collect();
        model.mesh = Mesh::new(alg.field, k, &q_arrows, &order, n_lo, n_hi);
        model.dobj_of_vertex = slices.concat();
        model.vertex_of_dobj = model.dobj_of_vertex.iter().enumerate().map(|(v, &d)| (d, v)).collect();
        let mut objects: Vec<DObject> = model
            .dobj_of_vertex
            .iter()
            .copied()
            .filter(|d| window.contains(d.degree))
            .collect();
        objects.sort_by_key(|d| (d.degree, d.module));
        let verts: Vec<usize> = objects.iter().map(|d| model.vertex_of_dobj[d]).collect();
        model.cat = model.mesh_category(&objects, &verts);
        model.objects = objects;
        Ok(model)
    }

    fn mesh_category(&self, objects: &[DObject], verts: &[usize]) -> LinCategory {
        let f = self.alg.field;
        let n = objects.len();
        let m = &self.mesh;
        let hom_dims: Vec<Vec<usize>> = verts.iter().map(|&u| verts.iter().map(|&w| m.dim(u, w)).collect()).collect();
        let identity = (0..n).map(|_| vec![f.one()]).collect();
        let mut comp = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                let dxy = hom_dims[x][y];
                if dxy == 0 {
                    continue;
                }
                for z in 0..n {
                    let (dyz, dxz) = (hom_dims[y][z], hom_dims[x][z]);
                    if dyz == 0 || dxz == 0 {
                        continue;
                    }
                    let mut t = Mat::zeros(f, dxy * dyz, dxz);
                    for i in 0..dxy {
                        for j in 0..dyz {
                            let mut p = m.basis_path(verts[x], verts[y], i).to_vec();
                            p.extend_from_slice(m.basis_path(verts[y], verts[z], j));
                            for (c, v) in m.path_coords(verts[x], &p).into_iter().enumerate() {
                                t.set(i * dyz + j, c, v);
                            }
                        }
                    }
                    comp.insert((x, y, z), t);
                }
            }
        }
        let labels = objects.iter().map(|&d| self.label(d)).collect();
        LinCategory::new(f, labels, hom_dims, identity, comp)
    }

    pub fn label(&self, d: DObject) -> String {
        format!("{}[{}]", self.modcat.labels[d.module], d.degree)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Index in [`DerivedModel::cat`].
    pub fn index(&self, d: DObject) -> Option<usize> {
        self.objects.iter().position(|&o| o == d)
    }

    pub fn index_checked(&self, d: DObject) -> Result<usize, DerivedError> {
        self.index(d).ok_or_else(|| DerivedError::WindowExceeded(self.label(d)))
    }

    pub fn vertex(&self, d: DObject) -> Option<usize> {
        self.vertex_of_dobj.get(&d).copied()
    }

    pub fn dobj(&self, v: usize) -> DObject {
        self.dobj_of_vertex[v]
    }

    pub fn projective(&self, x: usize) -> DObject {
        DObject { module: self.proj[x], degree: 0 }
    }

    /// Stalk complexes of the indecomposable projectives.
    pub fn projectives(&self) -> Vec<DObject> {
        (0..self.proj.len()).map(|x| self.projective(x)).collect()
    }

    pub fn module_object(&self, module: usize, degree: i64) -> DObject {
        DObject { module, degree }
    }

    pub fn tau(&self, d: DObject) -> DObject {
        match self.proj.iter().position(|&p| p == d.module) {
            Some(x) => DObject {
                module: self.inj[x],
                degree: d.degree - 1,
            },
            None => DObject {
                module: self.tau_mod[d.module].expect("non-projective has a translate"),
                degree: d.degree,
            },
        }
    }

    pub fn tau_inv(&self, d: DObject) -> DObject {
        match self.inj.iter().position(|&i| i == d.module) {
            Some(x) => DObject {
                module: self.proj[x],
                degree: d.degree + 1,
            },
            None => DObject {
                module: self.tau_inv_mod[d.module].expect("non-injective has an inverse translate"),
                degree: d.degree,
            },
        }
    }

    pub fn shift(&self, d: DObject, k: i64) -> DObject {
        DObject {
            module: d.module,
            degree: d.degree + k,
        }
    }

    /// `F^k` for `F = tau^-1 [1]`.
    pub fn f_pow(&self, d: DObject, k: i64) -> DObject {
        let mut d = d;
        for _ in 0..k.unsigned_abs() {
            d = if k > 0 {
                self.tau_inv(self.shift(d, 1))
            } else {
                self.tau(self.shift(d, -1))
            };
        }
        d
    }

    /// A map on mesh vertices induced by a map on objects.
    pub fn vertex_map<'a>(&'a self, sigma: impl Fn(DObject) -> DObject + 'a) -> impl Fn(usize) -> Option<usize> + 'a {
        move |v| self.vertex(sigma(self.dobj(v)))
    }

    /// Image of a morphism `x -> y` under an object map that extends to an
    /// automorphism of the mesh category. `None` if it leaves the mesh.
    pub fn map_hom(&self, sigma: impl Fn(DObject) -> DObject, x: DObject, y: DObject, c: &[Scalar]) -> Option<Vec<Scalar>> {
        let vm = self.vertex_map(sigma);
        self.mesh.map_coords(&vm, self.vertex(x)?, self.vertex(y)?, c)
    }

    /// `dim Hom(x, y)` read off the mesh, for objects in its range.
    pub fn hom_dim(&self, x: DObject, y: DObject) -> Option<usize> {
        Some(self.mesh.dim(self.vertex(x)?, self.vertex(y)?))
    }

    /// `dim Hom(M[i], N[j])` from module homs and extensions, valid for
    /// hereditary algebras.
    pub fn module_hom_dim(&self, x: DObject, y: DObject) -> usize {
        match y.degree - x.degree {
            0 => self.modcat.hom(x.module, y.module).dim(),
            1 => ext1_dim(&self.modcat.objects[x.module], &self.modcat.objects[y.module]),
            _ => 0,
        }
    }

    /// Pairs of window objects where the mesh and module computations of
    /// hom dimensions disagree.
    pub fn hom_dim_mismatches(&self) -> Vec<(String, String)> {
        let mut bad = Vec::new();
        for (i, &x) in self.objects.iter().enumerate() {
            for (j, &y) in self.objects.iter().enumerate() {
                if self.cat.dim(i, j) != self.module_hom_dim(x, y) {
                    bad.push((self.label(x), self.label(y)));
                }
            }
        }
        bad
    }

    /// Indices of window objects in the `F`-orbits of `seeds`.
    pub fn f_orbits(&self, seeds: &[DObject]) -> Vec<usize> {
        let mut out = Vec::new();
        for &s in seeds {
            for dir in [1i64, -1] {
                let mut k = if dir == 1 { 0 } else { -1 };
                loop {
                    let d = self.f_pow(s, k);
                    let past = if dir == 1 {
                        d.degree > self.window.max_degree
                    } else {
                        d.degree < self.window.min_degree
                    };
                    if past {
                        break;
                    }
                    if let Some(i) = self.index(d) {
                        out.push(i);
                    }
                    k += dir;
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether a set of window objects is closed under `F` and `F^-1` as far
    /// as the window sees.
    pub fn is_f_stable(&self, objs: &[usize]) -> Result<(), DerivedError> {
        for &i in objs {
            for k in [1, -1] {
                let d = self.f_pow(self.objects[i], k);
                if let Some(j) = self.index(d) {
                    if !objs.contains(&j) {
                        return Err(DerivedError::NotFStable(format!(
                            "{} is in the set but {} is not",
                            self.label(self.objects[i]),
                            self.label(d)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `dim Hom(X, Y) = dim Hom(Y, tau X [1])` for all window pairs whose
    /// Serre image stays in the window.
    pub fn serre_verify(&self) -> SerreReport {
        let mut pairs = 0;
        let mut violations = Vec::new();
        for (i, &x) in self.objects.iter().enumerate() {
            let Some(sx) = self.index(self.shift(self.tau(x), 1)) else { continue };
            for (j, &y) in self.objects.iter().enumerate() {
                pairs += 1;
                let (a, b) = (self.cat.dim(i, j), self.cat.dim(j, sx));
                if a != b {
                    violations.push((self.label(x), self.label(y), a, b));
                }
            }
        }
        SerreReport { pairs, violations }
    }

    /// Objects at least one degree away from both window ends.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let d = self.objects[i].degree;
                d > self.window.min_degree && d < self.window.max_degree
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn window_objects_of_a3() {
        let d = DerivedModel::build(&corpus::a3(), Window::default()).unwrap();
        assert_eq!(d.len(), 6 * 9);
        assert!(d.cat.verify().is_ok());
        assert!(d.hom_dim_mismatches().is_empty());
        let serre = d.serre_verify();
        assert!(serre.pairs > 0 && serre.passed(), "{serre:?}");
    }

    #[test]
    fn translate_conventions() {
        let d = DerivedModel::build(&corpus::a3(), Window::default()).unwrap();
        let pc = d.projective(2);
        let ic = d.tau(pc);
        assert_eq!(d.label(ic), "a/b/c[-1]");
        assert_eq!(d.tau_inv(ic), pc);
        let pa = d.projective(0);
        // P_a = I_a is projective-injective: F(P_a) = P_a[2] shifted by tau^-1
        assert_eq!(d.label(d.f_pow(pa, 1)), "c[2]");
        assert_eq!(d.f_pow(d.f_pow(pa, 3), -3), pa);
    }

    #[test]
    fn shift_is_a_mesh_automorphism() {
        let d = DerivedModel::build(&corpus::a3(), Window::default()).unwrap();
        for (i, &x) in d.objects.iter().enumerate() {
            for (j, &y) in d.objects.iter().enumerate() {
                if x.degree.abs() > 2 || y.degree.abs() > 2 {
                    continue;
                }
                for b in 0..d.cat.dim(i, j) {
                    let c = d.cat.unit(i, j, b);
                    let img = d.map_hom(|o| d.shift(o, 1), x, y, &c).unwrap();
                    assert!(!crate::exactla::vec_is_zero(&img));
                }
            }
        }
    }

    #[test]
    fn rejects_non_hereditary() {
        assert!(matches!(
            DerivedModel::build(&corpus::a1(), Window::default()),
            Err(DerivedError::NotHereditary)
        ));
    }
}
