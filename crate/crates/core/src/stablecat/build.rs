//! The stable module category of a self-injective algebra.

use std::collections::HashMap;
use std::sync::Arc;

use super::{ConeOracle, StableError, TriangModel, Triangle};
use crate::exactla::Mat;
use crate::lincat::{CatMor, FactorData, Functor, LinCategory};
use crate::modcat::{
    hom_basis, injective_envelope, is_selfinjective, projective_cover, Alg, ModCat, ModError, Module, ModuleMap,
    Strategy,
};

/// A fixed short exact sequence `0 -> X -> E -> Q -> 0` with `E`
/// projective-injective, and an isomorphism from the skeleton object for
/// `Q`.
#[derive(Debug, Clone)]
struct Ses {
    left: ModuleMap,
    right: ModuleMap,
    /// Object `Q` stands for, as a stable index.
    object: usize,
    /// Skeleton object to `Q` (envelopes) or to `X` (covers).
    theta: ModuleMap,
    theta_inv: ModuleMap,
}

/// Module-level data behind a stable model.
#[derive(Debug, Clone)]
pub struct StableData {
    pub modcat: ModCat,
    pub skeleton: LinCategory,
    pub factor: FactorData,
    envelopes: Vec<Ses>,
    covers: Vec<Ses>,
}

fn diag(alg: &Alg, maps: &[&ModuleMap]) -> ModuleMap {
    let sources: Vec<&Module> = maps.iter().map(|m| &m.source).collect();
    let targets: Vec<&Module> = maps.iter().map(|m| &m.target).collect();
    let blocks: Vec<Vec<ModuleMap>> = (0..maps.len())
        .map(|i| {
            (0..maps.len())
                .map(|j| if i == j { maps[i].clone() } else { ModuleMap::zero(sources[j], targets[i]) })
                .collect()
        })
        .collect();
    ModuleMap::matrix(alg, &sources, &targets, &blocks)
}

impl StableData {
    pub fn module(&self, x: usize) -> &Module {
        &self.modcat.objects[self.factor.keep[x]]
    }

    /// A module map representing a stable morphism.
    pub fn lift(&self, f: &CatMor) -> ModuleMap {
        let old = self.factor.lift(f);
        let alg = &self.modcat.alg;
        let sources: Vec<&Module> = old.source.iter().map(|&x| &self.modcat.objects[x]).collect();
        let targets: Vec<&Module> = old.target.iter().map(|&y| &self.modcat.objects[y]).collect();
        let blocks: Vec<Vec<ModuleMap>> = old
            .target
            .iter()
            .zip(&old.blocks)
            .map(|(&y, row)| {
                row.iter()
                    .zip(&old.source)
                    .map(|(c, &x)| self.modcat.hom(x, y).from_coords(c))
                    .collect()
            })
            .collect();
        ModuleMap::matrix(alg, &sources, &targets, &blocks)
    }

    /// Coordinates of a module map between sums of skeleton objects (given
    /// by module-category indices), in the module skeleton.
    fn old_catmor(&self, src: &[usize], tgt: &[usize], map: &ModuleMap) -> CatMor {
        let alg = &self.modcat.alg;
        let sp: Vec<&Module> = src.iter().map(|&x| &self.modcat.objects[x]).collect();
        let tp: Vec<&Module> = tgt.iter().map(|&y| &self.modcat.objects[y]).collect();
        let blocks = (0..tgt.len())
            .map(|i| {
                (0..src.len())
                    .map(|j| {
                        let comp = ModuleMap::injection(alg, &sp, j)
                            .then(map)
                            .then(&ModuleMap::projection(alg, &tp, i));
                        self.modcat.coords(src[j], tgt[i], &comp)
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

    /// The pushout of `f` along the fixed injective envelope of its source.
    pub(super) fn cone(&self, model: &TriangModel, f: &CatMor) -> Result<Triangle, StableError> {
        let alg = &self.modcat.alg;
        let fm = self.lift(f);
        let iotas: Vec<&ModuleMap> = f.source.iter().map(|&x| &self.envelopes[x].left).collect();
        let pis: Vec<&ModuleMap> = f.source.iter().map(|&x| &self.envelopes[x].right).collect();
        let thetas_inv: Vec<&ModuleMap> = f.source.iter().map(|&x| &self.envelopes[x].theta_inv).collect();
        let iota = diag(alg, &iotas);
        let pi = diag(alg, &pis);
        let theta_inv = diag(alg, &thetas_inv);
        let minus = -&alg.field.one();
        let u = ModuleMap::column(alg, &fm.source, &[&fm, &iota.scale(&minus)]);
        let (c, q) = u.cokernel();
        let (idx, iso) = self.modcat.decompose_into(&c)?;
        let iso_inv = iso.inverse().expect("decomposition isomorphism");
        let y_sum = &fm.target;
        let parts = [y_sum, &iota.target];
        let y_in = ModuleMap::injection(alg, &parts, 0);
        let g_full = y_in.then(&q).then(&iso_inv);
        let hq = ModuleMap::row(alg, &pi.target, &[&ModuleMap::zero(y_sum, &pi.target), &pi]);
        let h_c = hom_basis(&c, &pi.target)?
            .solve(|h| q.then(h), &hq)
            .ok_or_else(|| StableError::Inconsistent("connecting map does not factor".into()))?;
        let h_full = iso.then(&h_c).then(&theta_inv);
        let y_old: Vec<usize> = f.target.iter().map(|&y| self.factor.keep[y]).collect();
        let shifted: Vec<usize> = f.source.iter().map(|&x| model.shift_obj(x)).collect();
        let x1_old: Vec<usize> = shifted.iter().map(|&x| self.factor.keep[x]).collect();
        let g = self.factor.project(&self.old_catmor(&y_old, &idx, &g_full));
        let h = self.factor.project(&self.old_catmor(&idx, &x1_old, &h_full));
        Ok(Triangle { f: f.clone(), g, h })
    }

    /// Matrix of `[1]` (or `[-1]` when `inverse`) on `Hom(x, y)`.
    fn shift_matrix(&self, stable: &LinCategory, x: usize, y: usize, inverse: bool) -> Result<Mat, ModError> {
        let f = self.modcat.alg.field;
        let (ox, oy) = (self.factor.keep[x], self.factor.keep[y]);
        let table = if inverse { &self.covers } else { &self.envelopes };
        let (sx, sy) = (table[x].object, table[y].object);
        let mut cols = Vec::new();
        for i in 0..stable.dim(x, y) {
            let rep = self.factor.spaces[&(ox, oy)].reps.row(i).to_vec();
            let phi = self.modcat.hom(ox, oy).from_coords(&rep);
            let (ex, ey) = (&table[x], &table[y]);
            let induced = if inverse {
                // lift to covers, restrict to kernels
                let psi = hom_basis(&ex.right.source, &ey.right.source)?
                    .solve(|h| h.then(&ey.right), &ex.right.then(&phi))
                    .expect("projective lifting");
                hom_basis(&ex.left.source, &ey.left.source)?
                    .solve(|h| h.then(&ey.left), &ex.left.then(&psi))
                    .expect("restriction to kernels")
            } else {
                let psi = hom_basis(&ex.left.target, &ey.left.target)?
                    .solve(|h| ex.left.then(h), &phi.then(&ey.left))
                    .expect("injective extension");
                hom_basis(&ex.right.target, &ey.right.target)?
                    .solve(|h| ex.right.then(h), &psi.then(&ey.right))
                    .expect("induced map on cokernels")
            };
            let mapped = ex.theta.then(&induced).then(&ey.theta_inv);
            let (osx, osy) = (self.factor.keep[sx], self.factor.keep[sy]);
            let old = self.modcat.coords(osx, osy, &mapped);
            cols.push(self.factor.project_coords(osx, osy, &old));
        }
        let rows = stable.dim(sx, sy);
        Ok(if cols.is_empty() { Mat::zeros(f, rows, 0) } else { Mat::from_cols(f, rows, &cols) })
    }
}

fn find_stable(modcat: &ModCat, factor: &FactorData, m: &Module) -> Result<(usize, ModuleMap), StableError> {
    let (i, iso) = modcat
        .find(m)
        .ok_or_else(|| StableError::Inconsistent(format!("{} is not a listed object", m.label())))?;
    let s = factor.old_to_new[i]
        .ok_or_else(|| StableError::Inconsistent(format!("{} is projective", m.label())))?;
    Ok((s, iso))
}

/// The stable category of a self-injective algebra, with `[1]` the
/// cosyzygy and `[-1]` the syzygy.
pub fn build_stable(alg: &Alg) -> Result<TriangModel, StableError> {
    if !is_selfinjective(alg) {
        return Err(StableError::NotSelfInjective);
    }
    let modcat = ModCat::build(alg, Strategy::auto(alg))?;
    let skeleton = modcat.skeleton();
    let (stable, factor) = skeleton.factor_ideal(&modcat.projectives())?;
    let mut envelopes = Vec::new();
    let mut covers = Vec::new();
    for &old in &factor.keep {
        let m = &modcat.objects[old];
        let (_, iota) = injective_envelope(m);
        let (q, pi) = iota.cokernel();
        let (s, theta) = find_stable(&modcat, &factor, &q)?;
        envelopes.push(Ses {
            left: iota,
            right: pi,
            object: s,
            theta_inv: theta.inverse().expect("isomorphism"),
            theta,
        });
        let (_, rho) = projective_cover(m);
        let (k, kappa) = rho.kernel();
        let (s, theta) = find_stable(&modcat, &factor, &k)?;
        covers.push(Ses {
            left: kappa,
            right: rho,
            object: s,
            theta_inv: theta.inverse().expect("isomorphism"),
            theta,
        });
    }
    let tau_old = modcat.tau_map();
    let tau = factor
        .keep
        .iter()
        .map(|&o| {
            tau_old[o]
                .and_then(|t| factor.old_to_new[t])
                .ok_or_else(|| StableError::Inconsistent("translate of a stable object".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let data = StableData {
        modcat,
        skeleton,
        factor,
        envelopes,
        covers,
    };
    let n = stable.len();
    let mut shift_hom = HashMap::new();
    let mut shift_inv_hom = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            shift_hom.insert((x, y), data.shift_matrix(&stable, x, y, false)?);
            shift_inv_hom.insert((x, y), data.shift_matrix(&stable, x, y, true)?);
        }
    }
    let shift = Functor {
        obj: data.envelopes.iter().map(|e| e.object).collect(),
        hom: shift_hom,
    };
    let shift_inverse = Functor {
        obj: data.covers.iter().map(|e| e.object).collect(),
        hom: shift_inv_hom,
    };
    data.skeleton.check_local()?;
    TriangModel::new(
        format!("stable {}", alg.name),
        stable,
        shift,
        shift_inverse,
        tau,
        ConeOracle::Stable(Arc::new(data)),
    )
}
