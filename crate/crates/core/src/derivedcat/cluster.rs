//! The cluster category `D^b(H) / F` for `F = tau^-1 [1]`, built from a
//! fundamental domain with `Hom_C(X, Y) = (+)_n Hom_D(X, F^n Y)`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{DObject, DerivedError, DerivedModel, Window};
use crate::exactla::{self, Mat, Scalar};
use crate::lincat::{CatMor, Functor, LinCategory};
use crate::modcat::Alg;
use crate::stablecat::{ConeOracle, DimMismatch, TriangModel};

/// How far to look along an `F`-orbit for a fundamental-domain object.
const ORBIT_SEARCH: i64 = 64;
const WIDEN_STEPS: usize = 4;

/// `(n, offset, len)`.
type FBlock = (i64, usize, usize);

#[derive(Debug, Clone)]
pub struct ClusterModel {
    pub model: TriangModel,
    pub derived: Arc<DerivedModel>,
    /// The fundamental-domain object behind each cluster object.
    pub reps: Vec<DObject>,
    /// For `(x, y)`, the `F`-powers `n` with `Hom_D(x, F^n y)` in the window,
    /// each with its offset into the coordinates of `Hom_C(x, y)`.
    blocks: HashMap<(usize, usize), Vec<FBlock>>,
}

impl ClusterModel {
    /// `(rep, c)` with `d = F^c rep`.
    pub fn orbit_rep(&self, d: DObject) -> Option<(usize, i64)> {
        orbit_rep(&self.derived, &self.reps, d)
    }

    /// Image of a derived morphism `x -> y` (window indices) in the cluster
    /// category.
    pub fn project(&self, x: usize, y: usize, c: &[Scalar]) -> Result<(usize, usize, Vec<Scalar>), DerivedError> {
        let d = &self.derived;
        let (dx, dy) = (d.objects[x], d.objects[y]);
        let (rx, cx) = self.orbit_rep(dx).ok_or_else(|| DerivedError::WindowExceeded(d.label(dx)))?;
        let (ry, cy) = self.orbit_rep(dy).ok_or_else(|| DerivedError::WindowExceeded(d.label(dy)))?;
        let mut out = self.model.base.zero_vec(rx, ry);
        if exactla::vec_is_zero(c) {
            return Ok((rx, ry, out));
        }
        let n = cy - cx;
        let mapped = d
            .map_hom(|o| d.f_pow(o, -cx), dx, dy, c)
            .ok_or_else(|| DerivedError::WindowExceeded(format!("F^{} of {}", -cx, d.label(dx))))?;
        let Some(&(_, off, len)) = self.blocks[&(rx, ry)].iter().find(|b| b.0 == n) else {
            return if exactla::vec_is_zero(&mapped) {
                Ok((rx, ry, out))
            } else {
                Err(DerivedError::Inconsistent("morphism lands outside the recorded blocks".into()))
            };
        };
        out[off..off + len].clone_from_slice(&mapped);
        Ok((rx, ry, out))
    }

    /// Cluster objects of the `F`-orbits meeting the given window objects.
    pub fn image(&self, objs: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = objs
            .iter()
            .filter_map(|&i| self.orbit_rep(self.derived.objects[i]).map(|r| r.0))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Window objects lying over the given cluster objects.
    pub fn preimage(&self, objs: &[usize]) -> Vec<usize> {
        let seeds: Vec<DObject> = objs.iter().map(|&i| self.reps[i]).collect();
        self.derived.f_orbits(&seeds)
    }
}

fn orbit_rep(d: &DerivedModel, reps: &[DObject], x: DObject) -> Option<(usize, i64)> {
    for k in 0..=ORBIT_SEARCH {
        for c in [k, -k] {
            let r = d.f_pow(x, -c);
            if let Some(i) = reps.iter().position(|&o| o == r) {
                return Some((i, c));
            }
        }
    }
    None
}

/// Degree-zero modules and the shifted projectives.
fn fundamental_domain(d: &DerivedModel) -> Vec<DObject> {
    let mut reps: Vec<DObject> = (0..d.modcat.len()).map(|m| d.module_object(m, 0)).collect();
    reps.extend(d.projectives().into_iter().map(|p| d.shift(p, 1)));
    reps
}

fn too_narrow(w: Window, reason: String) -> DerivedError {
    DerivedError::WindowTooNarrow {
        min: w.min_degree,
        max: w.max_degree,
        reason,
    }
}

fn assemble(d: Arc<DerivedModel>, mult_bound: usize) -> Result<ClusterModel, DerivedError> {
    let reps = fundamental_domain(&d);
    let f = d.alg.field;
    let w = d.window;
    for (i, &x) in reps.iter().enumerate() {
        if d.index(x).is_none() {
            return Err(too_narrow(w, format!("{} is outside", d.label(x))));
        }
        for (j, &y) in reps.iter().enumerate() {
            if i != j && orbit_rep(&d, &reps[i..=i], y).is_some() {
                return Err(DerivedError::Inconsistent(format!(
                    "{} and {} lie in one orbit",
                    d.label(x),
                    d.label(y)
                )));
            }
        }
    }
    let n = reps.len();
    let mut blocks = HashMap::new();
    let mut hom_dims = vec![vec![0; n]; n];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            let powers: Vec<i64> = (-ORBIT_SEARCH..=ORBIT_SEARCH)
                .filter(|&k| d.index(d.f_pow(y, k)).is_some())
                .collect();
            let (&lo, &hi) = (powers.first().unwrap(), powers.last().unwrap());
            for end in [lo, hi] {
                if d.hom_dim(x, d.f_pow(y, end)) != Some(0) {
                    return Err(too_narrow(
                        w,
                        format!("Hom({}, {}) is nonzero at the edge", d.label(x), d.label(d.f_pow(y, end))),
                    ));
                }
            }
            let mut list = Vec::new();
            let mut off = 0;
            for k in powers {
                let dim = d.hom_dim(x, d.f_pow(y, k)).unwrap();
                if dim > 0 {
                    list.push((k, off, dim));
                    off += dim;
                }
            }
            hom_dims[i][j] = off;
            blocks.insert((i, j), list);
        }
    }
    let identity: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = vec![f.zero(); hom_dims[i][i]];
            let &(_, off, _) = blocks[&(i, i)].iter().find(|b| b.0 == 0).expect("identity block");
            v[off] = f.one();
            v
        })
        .collect();
    let mut comp = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (dxy, dyz, dxz) = (hom_dims[x][y], hom_dims[y][z], hom_dims[x][z]);
                if dxy == 0 || dyz == 0 || dxz == 0 {
                    continue;
                }
                let mut t = Mat::zeros(f, dxy * dyz, dxz);
                for &(a, oa, la) in &blocks[&(x, y)] {
                    let fy = d.f_pow(reps[y], a);
                    for &(b, ob, lb) in &blocks[&(y, z)] {
                        let fz = d.f_pow(reps[z], a + b);
                        let target = blocks[&(x, z)].iter().find(|t| t.0 == a + b);
                        for jb in 0..lb {
                            let g = unit(f, lb, jb);
                            let Some(fg) = d.map_hom(|o| d.f_pow(o, a), reps[y], d.f_pow(reps[z], b), &g) else {
                                continue;
                            };
                            for ia in 0..la {
                                let (vx, vy, vz) = (d.vertex(reps[x]), d.vertex(fy), d.vertex(fz));
                                let (Some(vx), Some(vy), Some(vz)) = (vx, vy, vz) else { continue };
                                let c = d.mesh.compose(vx, vy, vz, &unit(f, la, ia), &fg);
                                if exactla::vec_is_zero(&c) {
                                    continue;
                                }
                                let &(_, oc, _) = target.ok_or_else(|| {
                                    DerivedError::Inconsistent("composite outside recorded blocks".into())
                                })?;
                                for (k, v) in c.into_iter().enumerate() {
                                    t.set((oa + ia) * dyz + ob + jb, oc + k, v);
                                }
                            }
                        }
                    }
                }
                comp.insert((x, y, z), t);
            }
        }
    }
    let labels = reps.iter().map(|&r| d.label(r)).collect();
    let base = LinCategory::new(f, labels, hom_dims, identity, comp);
    base.verify().map_err(DerivedError::Inconsistent)?;
    let transported = |k: i64| -> Result<Functor, DerivedError> {
        let mut obj = Vec::new();
        let mut pw = Vec::new();
        for &r in &reps {
            let (t, c) = orbit_rep(&d, &reps, d.shift(r, k))
                .ok_or_else(|| DerivedError::Inconsistent("shift leaves every orbit".into()))?;
            obj.push(t);
            pw.push(c);
        }
        let mut hom = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                let rows = base.dim(obj[x], obj[y]);
                let mut cols = Vec::new();
                for &(a, _, la) in &blocks[&(x, y)] {
                    let nb = a + pw[y] - pw[x];
                    for ia in 0..la {
                        let sigma = |o: DObject| d.f_pow(d.shift(o, k), -pw[x]);
                        let img = d
                            .map_hom(sigma, reps[x], d.f_pow(reps[y], a), &unit(f, la, ia))
                            .ok_or_else(|| too_narrow(w, "shifted morphism leaves the mesh".into()))?;
                        let mut col = vec![f.zero(); rows];
                        if !exactla::vec_is_zero(&img) {
                            let &(_, ob, _) = blocks[&(obj[x], obj[y])]
                                .iter()
                                .find(|b| b.0 == nb)
                                .ok_or_else(|| DerivedError::Inconsistent("shifted block missing".into()))?;
                            col[ob..ob + img.len()].clone_from_slice(&img);
                        }
                        cols.push(col);
                    }
                }
                let m = if cols.is_empty() {
                    Mat::zeros(f, rows, 0)
                } else {
                    Mat::from_cols(f, rows, &cols)
                };
                hom.insert((x, y), m);
            }
        }
        Ok(Functor { obj, hom })
    };
    let shift = transported(1)?;
    let shift_inverse = transported(-1)?;
    let tau = reps
        .iter()
        .map(|&r| orbit_rep(&d, &reps, d.tau(r)).map(|t| t.0))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| DerivedError::Inconsistent("translate leaves every orbit".into()))?;
    let model = TriangModel::new(
        format!("cluster {}", d.alg.name),
        base,
        shift,
        shift_inverse,
        tau,
        ConeOracle::HomExact { mult_bound },
    )?;
    Ok(ClusterModel {
        model,
        derived: d,
        reps,
        blocks,
    })
}

fn unit(f: crate::exactla::Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// The cluster category of a hereditary algebra. The window is widened
/// until every hom space of the fundamental domain is seen in full.
pub fn build_cluster(alg: &Alg, window: Window, mult_bound: usize) -> Result<ClusterModel, DerivedError> {
    let mut w = window;
    let mut last = None;
    for _ in 0..=WIDEN_STEPS {
        let d = Arc::new(DerivedModel::build(alg, w)?);
        match assemble(d, mult_bound) {
            Err(e @ DerivedError::WindowTooNarrow { .. }) => {
                last = Some(e);
                w = w.widened(2);
            }
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CoveringReport {
    pub objects: usize,
    /// Pairs `(X, Y)` in `T[-1]` compared for `dim Hom_C(X, Y) =
    /// sum_n dim Hom_D(X, F^n Y)`.
    pub pairs_checked: usize,
    pub hom_mismatches: Vec<DimMismatch>,
    /// Basis morphisms of the ideal `[T]` checked to map into `[pi T]`.
    pub ideal_morphisms_checked: usize,
    pub ideal_violations: Vec<(String, String)>,
    /// `|objects of D/T| = |objects of D| - |T|` and likewise in `C`.
    pub object_counts_match: bool,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.hom_mismatches.is_empty() && self.ideal_violations.is_empty() && self.object_counts_match
    }
}

/// Compare the windowed derived category and the cluster category around an
/// `F`-stable subcategory `t` of window objects.
pub fn covering_check(c: &ClusterModel, t: &[usize]) -> Result<CoveringReport, DerivedError> {
    let d = &c.derived;
    d.is_f_stable(t)?;
    let ct = c.image(t);
    let cbase = &c.model.base;
    let mut t_minus: Vec<usize> = d
        .interior()
        .into_iter()
        .filter(|&i| d.index(d.shift(d.objects[i], 1)).is_some_and(|j| t.contains(&j)))
        .collect();
    t_minus.sort_unstable();
    let mut pairs = 0;
    let mut hom_mismatches = Vec::new();
    for &x in &t_minus {
        for &y in &t_minus {
            let (dx, dy) = (d.objects[x], d.objects[y]);
            let (rx, ry) = (c.orbit_rep(dx).unwrap().0, c.orbit_rep(dy).unwrap().0);
            let sum: usize = (-ORBIT_SEARCH..=ORBIT_SEARCH)
                .filter_map(|k| d.hom_dim(dx, d.f_pow(dy, k)))
                .sum();
            let lhs = cbase.dim(rx, ry);
            pairs += 1;
            if lhs != sum {
                hom_mismatches.push((d.label(dx), d.label(dy), lhs, sum));
            }
        }
    }
    let (dq, dfac) = d.cat.factor_ideal(t)?;
    let (cq, cfac) = cbase.factor_ideal(&ct)?;
    let object_counts_match = dq.len() == d.len() - t.len() && cq.len() == cbase.len() - ct.len();
    let mut checked = 0;
    let mut ideal_violations = Vec::new();
    for x in 0..d.len() {
        for y in 0..d.len() {
            if t.contains(&x) || t.contains(&y) {
                continue;
            }
            let Some(q) = dfac.spaces.get(&(x, y)) else { continue };
            let ideal = exactla::kernel_basis(&q.proj);
            for v in ideal.vectors() {
                checked += 1;
                let (rx, ry, img) = c.project(x, y, &v)?;
                let projected = cfac.project(&CatMor {
                    source: vec![rx],
                    target: vec![ry],
                    blocks: vec![vec![img]],
                });
                if !projected.is_zero() {
                    ideal_violations.push((d.label(d.objects[x]), d.label(d.objects[y])));
                }
            }
        }
    }
    Ok(CoveringReport {
        objects: t.len(),
        pairs_checked: pairs,
        hom_mismatches,
        ideal_morphisms_checked: checked,
        ideal_violations,
        object_counts_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cluster_category_of_a3() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        assert_eq!(c.model.len(), 9);
        assert!(c.model.serre_verify().passed());
        // 2-Calabi-Yau: tau = [1]
        for x in 0..9 {
            assert_eq!(c.model.tau[x], c.model.shift_obj(x));
        }
        let pa = c.model.base.index("a/b/c[0]").unwrap();
        assert_eq!(c.model.ext1(pa, pa), 0);
    }

    #[test]
    fn basis_morphisms_have_cones() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let base = &c.model.base;
        for (x, y, v) in base.basis_morphisms() {
            let f = base.single(x, y, v);
            let t = c.model.cone(&f).unwrap();
            assert!(t.composites_vanish(&c.model));
            let k = c.model.cocone(&f).unwrap();
            assert!(base.compose_mor(&k, &f).is_zero());
        }
    }

    #[test]
    fn wider_window_gives_the_same_category() {
        let a = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let b = build_cluster(&corpus::a3(), Window::new(-6, 6), 2).unwrap();
        assert!(a.model.base.same_structure(&b.model.base));
    }

    #[test]
    fn narrow_window_is_widened() {
        let c = build_cluster(&corpus::a3(), Window::new(0, 1), 2).unwrap();
        assert_eq!(c.model.len(), 9);
        assert!(c.derived.window.max_degree > 1);
    }

    #[test]
    fn covering_by_projective_orbits() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let t = c.derived.f_orbits(&c.derived.projectives());
        let r = covering_check(&c, &t).unwrap();
        assert!(r.pairs_checked > 0);
        assert!(r.passed(), "{r:?}");
        let not_stable = vec![c.derived.index(c.derived.projective(0)).unwrap()];
        assert!(matches!(covering_check(&c, &not_stable), Err(DerivedError::NotFStable(_))));
    }
}
