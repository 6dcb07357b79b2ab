//! Covers, envelopes, syzygies, `Ext^1`, the Auslander-Reiten translate and
//! almost split sequences.

use std::sync::Arc;

use super::decompose::end_radical;
use super::hom::{hom_basis, HomSpace};
use super::{Alg, ModError, Module, ModuleMap};
use crate::exactla::{self, Mat, QuotientSpace, Scalar};

/// A minimal projective presentation `P1 -> P0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub cover: ModuleMap,
    pub syzygy: Module,
    pub syzygy_inc: ModuleMap,
    pub p1: Vec<usize>,
    pub p1_to_p0: ModuleMap,
}

/// `0 -> tau X -> E -> X -> 0`.
#[derive(Debug, Clone)]
pub struct ArSequence {
    pub f: ModuleMap,
    pub g: ModuleMap,
}

impl ArSequence {
    pub fn left(&self) -> &Module {
        &self.f.source
    }

    pub fn middle(&self) -> &Module {
        &self.f.target
    }

    pub fn right(&self) -> &Module {
        &self.g.target
    }

    pub fn is_exact(&self) -> bool {
        self.f.is_injective()
            && self.g.is_surjective()
            && self.f.then(&self.g).is_zero()
            && self.left().total_dim() + self.right().total_dim() == self.middle().total_dim()
    }

    pub fn splits(&self) -> bool {
        let h = hom_basis(self.right(), self.middle()).expect("same algebra");
        h.solve(|s| s.then(&self.g), &ModuleMap::identity(self.right())).is_some()
    }

    /// Every radical map from an indecomposable in `indecs` into the right
    /// end factors through `g`, and `g` itself is radical.
    pub fn is_right_almost_split(&self, indecs: &[Module]) -> Result<bool, ModError> {
        let x = self.right();
        for w in indecs {
            let hwx = hom_basis(w, x)?;
            let hwe = hom_basis(w, self.middle())?;
            let rad: Vec<Vec<Scalar>> = if super::isomorphic(w, x).is_some() {
                let iso = super::isomorphic(w, x).unwrap();
                end_radical(x)?
                    .iter()
                    .map(|r| hwx.coords(&iso.then(r)))
                    .collect()
            } else {
                hwx.basis.iter().map(|b| hwx.coords(b)).collect()
            };
            let through: Vec<Vec<Scalar>> = hwe.basis.iter().map(|h| hwx.coords(&h.then(&self.g))).collect();
            let f = x.field();
            let a = exactla::Subspace::span(f, hwx.dim(), &rad);
            let b = exactla::Subspace::span(f, hwx.dim(), &through);
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Minimal projective cover, as the list of summand vertices and the map.
pub fn projective_cover(m: &Module) -> (Vec<usize>, ModuleMap) {
    let f = m.field();
    let (_, rad) = m.radical();
    let mut verts = Vec::new();
    let mut gens = Vec::new();
    for v in 0..m.dims.len() {
        let c = &rad.comps[v];
        let rows: Vec<Vec<Scalar>> = (0..c.cols()).map(|j| c.col(j)).collect();
        let q = exactla::quotient_coords(f, m.dims[v], &rows);
        for i in 0..q.dim() {
            verts.push(v);
            gens.push(q.reps.row(i).to_vec());
        }
    }
    let cover = ModuleMap::from_proj_sum(&m.alg, &verts, m, &gens);
    (verts, cover)
}

/// Minimal injective envelope `M -> I`, with the summand vertices of `I`.
pub fn injective_envelope(m: &Module) -> (Vec<usize>, ModuleMap) {
    let op: Alg = Arc::new(m.alg.opposite());
    let (verts, cover) = projective_cover(&m.dual_over(&op));
    (verts, cover.dual_over(&m.alg))
}

pub fn syzygy(m: &Module) -> Module {
    projective_cover(m).1.kernel().0
}

pub fn cosyzygy(m: &Module) -> Module {
    injective_envelope(m).1.cokernel().0
}

pub fn presentation(m: &Module) -> Presentation {
    let (p0, cover) = projective_cover(m);
    let (syz, inc) = cover.kernel();
    let (p1, c1) = projective_cover(&syz);
    let p1_to_p0 = c1.then(&inc);
    Presentation {
        p0,
        cover,
        syzygy: syz,
        syzygy_inc: inc,
        p1,
        p1_to_p0,
    }
}

/// `Ext^1(M, N)` as `Hom(Omega M, N)` modulo maps extending to `P0`.
#[derive(Debug, Clone)]
pub struct Ext1 {
    pub presentation: Presentation,
    pub hom: HomSpace,
    pub quotient: QuotientSpace,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Representatives `Omega M -> N` of a basis of extension classes.
    pub fn classes(&self) -> Vec<ModuleMap> {
        (0..self.dim())
            .map(|i| self.hom.from_coords(self.quotient.reps.row(i)))
            .collect()
    }

    pub fn class_of(&self, phi: &ModuleMap) -> Vec<Scalar> {
        self.quotient.proj.mul_vec(&self.hom.coords(phi))
    }
}

pub fn ext1(m: &Module, n: &Module) -> Result<Ext1, ModError> {
    if m.alg != n.alg {
        return Err(ModError::AlgebraMismatch);
    }
    let pres = presentation(m);
    let hom = hom_basis(&pres.syzygy, n)?;
    let h0 = hom_basis(&pres.cover.source, n)?;
    let rows: Vec<Vec<Scalar>> = h0
        .basis
        .iter()
        .map(|h| hom.coords(&pres.syzygy_inc.then(h)))
        .collect();
    let quotient = exactla::quotient_coords(m.field(), hom.dim(), &rows);
    Ok(Ext1 {
        presentation: pres,
        hom,
        quotient,
    })
}

pub fn ext1_dim(m: &Module, n: &Module) -> usize {
    ext1(m, n).map(|e| e.dim()).unwrap_or(0)
}

/// Does `p` occur as a direct summand of `m`? Requires `End(p)` local.
fn has_summand(m: &Module, p: &Module) -> bool {
    let hpm = hom_basis(p, m).expect("same algebra");
    let hmp = hom_basis(m, p).expect("same algebra");
    let d = p.total_dim();
    hpm.basis.iter().any(|f| {
        hmp.basis.iter().any(|g| {
            let e = f.then(g);
            e.comps.iter().any(|c| !c.pow(d).is_zero())
        })
    })
}

pub fn has_projective_summand(m: &Module) -> bool {
    (0..m.dims.len()).any(|v| has_summand(m, &Module::projective(&m.alg, v)))
}

pub fn has_injective_summand(m: &Module) -> bool {
    (0..m.dims.len()).any(|v| has_summand(m, &Module::injective(&m.alg, v)))
}

/// `Tr M`, a module over `op`, the opposite of `M`'s algebra.
pub fn transpose(m: &Module, op: &Alg) -> Module {
    let alg = &m.alg;
    let pres = presentation(m);
    let p0 = &pres.p0;
    let p1 = &pres.p1;
    let target = Module::proj_sum(op, p1);
    let f = alg.field;
    let mut gens: Vec<Vec<Scalar>> = p0
        .iter()
        .map(|&v| vec![f.zero(); target.dims[v]])
        .collect();
    for (j, &u) in p1.iter().enumerate() {
        // the j-th generator of P1 sits at the trivial path of its block
        let src_off = block_offsets(alg, p1, u)[j];
        let img = pres.p1_to_p0.comps[u].col(src_off);
        let offs0 = block_offsets(alg, p0, u);
        for (i, &v) in p0.iter().enumerate() {
            let op_offs = block_offsets(op, p1, v);
            let op_paths = op.paths_between(u, v);
            for (k, q) in alg.paths_between(v, u).iter().enumerate() {
                let c = &img[offs0[i] + k];
                if c.is_zero() {
                    continue;
                }
                let qop = q.reversed();
                let pos = op_paths.iter().position(|x| **x == qop).expect("reversed basis path");
                let idx = op_offs[j] + pos;
                gens[i][idx] = &gens[i][idx] + c;
            }
        }
    }
    let map = ModuleMap::from_proj_sum(op, p0, &target, &gens);
    map.cokernel().0
}

/// Offset of each block at vertex `w` in the projective sum on `verts`.
fn block_offsets(alg: &Alg, verts: &[usize], w: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut acc = 0;
    for &v in verts {
        out.push(acc);
        acc += alg.paths_between(v, w).len();
    }
    out
}

/// `tau M = D Tr M`.
pub fn ar_translate(m: &Module) -> Result<Module, ModError> {
    if has_projective_summand(m) {
        return Err(ModError::HasProjectiveSummand);
    }
    let op: Alg = Arc::new(m.alg.opposite());
    Ok(transpose(m, &op).dual_over(&m.alg))
}

/// `tau^-1 M = Tr D M`.
pub fn ar_translate_inv(m: &Module) -> Result<Module, ModError> {
    if has_injective_summand(m) {
        return Err(ModError::HasInjectiveSummand);
    }
    let op: Alg = Arc::new(m.alg.opposite());
    Ok(transpose(&m.dual_over(&op), &m.alg))
}

/// The almost split sequence ending at an indecomposable non-projective
/// `x`, built as the pushout of `0 -> Omega X -> P0 -> X -> 0` along an
/// extension class in the socle of `Ext^1(X, tau X)` as an `End(X)`-module.
pub fn ar_sequence_ending_at(x: &Module) -> Result<ArSequence, ModError> {
    if has_projective_summand(x) {
        return Err(ModError::IsProjective);
    }
    let alg = x.alg.clone();
    let f = x.field();
    let tx = ar_translate(x)?;
    let ext = ext1(x, &tx)?;
    let pres = &ext.presentation;
    let p0 = &pres.cover.source;
    let omega = &pres.syzygy;
    let end_p0 = hom_basis(p0, p0)?;
    let end_om = hom_basis(omega, omega)?;
    let classes = ext.classes();
    // the right action of each radical endomorphism on extension classes
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in end_radical(x)? {
        let lift = end_p0
            .solve(|h| h.then(&pres.cover), &pres.cover.then(&r))
            .expect("projective lifting");
        let restricted = end_om
            .solve(|h| h.then(&pres.syzygy_inc), &pres.syzygy_inc.then(&lift))
            .expect("restriction to the syzygy");
        let images: Vec<Vec<Scalar>> = classes
            .iter()
            .map(|c| ext.class_of(&restricted.then(c)))
            .collect();
        for k in 0..ext.dim() {
            rows.push(images.iter().map(|v| v[k].clone()).collect());
        }
    }
    let system = Mat::from_rows(f, rows, ext.dim());
    let socle = exactla::kernel_basis(&system);
    let xi = socle
        .vectors()
        .into_iter()
        .next()
        .ok_or_else(|| ModError::InvalidModule("no almost split extension class".into()))?;
    let phi = ext.hom.from_coords(&ext.quotient.reps.transpose().mul_vec(&xi));

    let parts = [p0, &tx];
    let into = ModuleMap::column(&alg, omega, &[&pres.syzygy_inc, &phi.scale(&f.int(-1))]);
    let (e, q) = into.cokernel();
    let f_map = ModuleMap::injection(&alg, &parts, 1).then(&q);
    let zero = ModuleMap::zero(&tx, x);
    let target = ModuleMap::row(&alg, x, &[&pres.cover, &zero]);
    let hex = hom_basis(&e, x)?;
    let g_map = hex.solve(|h| q.then(h), &target).expect("pushout property");
    Ok(ArSequence { f: f_map, g: g_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::modcat::{hom_dim, isomorphic};

    #[test]
    fn syzygies_and_cosyzygies() {
        let a1 = corpus::a1();
        let sa = Module::simple(&a1, 0);
        assert_eq!(syzygy(&sa).label(), "b/a/b");
        assert_eq!(cosyzygy(&sa).label(), "b/a/b");
        assert!(syzygy(&Module::projective(&a1, 0)).is_zero());
        let (verts, cover) = projective_cover(&sa);
        assert_eq!(verts, vec![0]);
        assert!(cover.is_surjective());
    }

    #[test]
    fn ext_dimensions() {
        let a3 = corpus::a3();
        let s = |v| Module::simple(&a3, v);
        assert_eq!(ext1_dim(&s(0), &s(1)), 1);
        assert_eq!(ext1_dim(&s(1), &s(0)), 0);
        assert_eq!(ext1_dim(&Module::projective(&a3, 0), &s(2)), 0);
        let a1 = corpus::a1();
        let sa = Module::simple(&a1, 0);
        assert_eq!(ext1_dim(&sa, &sa), 0);
    }

    #[test]
    fn translates() {
        let a3 = corpus::a3();
        let t = ar_translate(&Module::simple(&a3, 0)).unwrap();
        assert!(isomorphic(&t, &Module::simple(&a3, 1)).is_some());
        assert_eq!(
            ar_translate(&Module::projective(&a3, 0)).unwrap_err(),
            ModError::HasProjectiveSummand
        );
        let back = ar_translate_inv(&t).unwrap();
        assert!(isomorphic(&back, &Module::simple(&a3, 0)).is_some());

        let a2 = corpus::a2();
        let pa = Module::projective(&a2, 1);
        // b/a is the top two layers of P_b
        let (soc, inc) = pa.socle();
        let _ = soc;
        let (ba, _) = inc.cokernel();
        assert_eq!(ba.label(), "b/a");
        assert_eq!(ar_translate(&ba).unwrap().label(), "a/b");
    }

    #[test]
    fn almost_split_sequence_on_the_line() {
        let a3 = corpus::a3();
        let sb = Module::simple(&a3, 1);
        let seq = ar_sequence_ending_at(&sb).unwrap();
        assert!(seq.is_exact());
        assert!(!seq.splits());
        assert_eq!(seq.left().label(), "c");
        assert_eq!(seq.middle().label(), "b/c");
        assert_eq!(hom_dim(seq.middle(), seq.middle()), 1);
        assert_eq!(
            ar_sequence_ending_at(&Module::projective(&a3, 0)).unwrap_err(),
            ModError::IsProjective
        );
    }
}
