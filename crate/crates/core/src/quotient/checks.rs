//! Structural checks on quotients: extensions in the quotient, the
//! converse statements for rigid subcategories, Auslander-Reiten structure,
//! object counts, and the derived/cluster tilting correspondence.

use std::sync::Arc;

use serde::Serialize;

use super::{build_quotient, verify_abelian, QuotientError, QuotientModel};
use crate::derivedcat::{ClusterModel, DerivedError};
use crate::exactla::{image_basis, Subspace};
use crate::lincat::{CatMor, LinCatError, LinCategory};
use crate::stablecat::TriangModel;
use crate::tilting::{is_rigid, is_tilting, is_tilting_derived};

fn inconclusive(e: LinCatError, what: &str) -> QuotientError {
    match e {
        LinCatError::NotFoundWithinBound(b) => {
            QuotientError::Inconclusive(format!("{what} not found within multiplicity {b}"))
        }
        e => e.into(),
    }
}

/// `dim Ext^1(x, y)` in the quotient, from `0 -> K -> P -> x -> 0` with
/// `P -> x` a projective cover: the cokernel of `Hom(P, y) -> Hom(K, y)`.
pub fn quotient_ext1(q: &QuotientModel, x: usize, y: usize, mult_bound: usize) -> Result<usize, QuotientError> {
    let cat = &q.cat;
    let proj = cat.projectives();
    let cover = cat.minimize_right(&cat.right_approximation(&proj, &[x]));
    if !cat.is_epi(&cover) {
        return Err(QuotientError::Inconclusive(format!("{} has no projective cover", cat.objects[x])));
    }
    let (k, _) = cat.kernel_search(&cover, mult_bound).map_err(|e| inconclusive(e, "syzygy"))?;
    let rows = cat.mor_dim(&k.source, &[y]);
    let op = cat.mor_operator(&cover.source, &[y], rows, |f| LinCategory::mor_coords(&cat.compose_mor(&k, f)));
    Ok(rows - op.rank())
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityReport {
    pub source_rigid: bool,
    /// Quotient objects the subcategory maps to.
    pub images: Vec<String>,
    /// Ordered pairs of images with nonzero extensions in the quotient.
    pub nonzero: Vec<(String, String, usize)>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.source_rigid && self.nonzero.is_empty()
    }
}

/// Whether the image of a rigid subcategory `c` of the source stays rigid
/// in the quotient.
pub fn image_1_orthogonal(q: &QuotientModel, c: &[usize], mult_bound: usize) -> Result<OrthogonalityReport, QuotientError> {
    let m = q.triang()?;
    let images = q.images(c);
    let mut report = OrthogonalityReport {
        source_rigid: is_rigid(m, c),
        images: q.labels(&images),
        nonzero: Vec::new(),
    };
    if !report.source_rigid {
        return Ok(report);
    }
    for &x in &images {
        for &y in &images {
            let e = quotient_ext1(q, x, y, mult_bound)?;
            if e > 0 {
                report.nonzero.push((q.cat.objects[x].clone(), q.cat.objects[y].clone(), e));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConverseReport {
    pub subcategory: Vec<String>,
    pub rigid: bool,
    pub abelian: Option<bool>,
    /// Basis morphisms between objects outside `S` compared.
    pub morphisms_checked: usize,
    /// Morphisms where mono (epi) and the vanishing of the third (second)
    /// map of the triangle disagree.
    pub mono_epi_violations: Vec<String>,
    /// Objects of `S` whose translate is also in `S`.
    pub meets_tau: Vec<String>,
    /// Objects outside `S` with no extensions to or from `S`.
    pub orthogonal_outside: Vec<String>,
}

impl ConverseReport {
    pub fn passed(&self) -> bool {
        self.rigid
            && self.abelian == Some(true)
            && self.mono_epi_violations.is_empty()
            && self.meets_tau.is_empty()
            && self.orthogonal_outside.is_empty()
    }
}

/// For a rigid `S` whose quotient is abelian: mono and epi are read off
/// triangles, `S` misses its translate, and only objects of `S` are
/// orthogonal to `S` on both sides. Non-rigid input is reported, not
/// rejected.
pub fn converse_checks(model: Arc<TriangModel>, s: &[usize], mult_bound: usize) -> Result<ConverseReport, QuotientError> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut report = ConverseReport {
        subcategory: s.iter().map(|&x| model.base.objects[x].clone()).collect(),
        rigid: is_rigid(&model, &s),
        abelian: None,
        morphisms_checked: 0,
        mono_epi_violations: Vec::new(),
        meets_tau: Vec::new(),
        orthogonal_outside: Vec::new(),
    };
    if !report.rigid {
        return Ok(report);
    }
    let q = build_quotient(model.clone(), &s, true)?;
    report.abelian = Some(verify_abelian(&q, mult_bound)?.passed());
    for (x, y, v) in q.cat.basis_morphisms() {
        let fbar = q.cat.single(x, y, v);
        let (mono_t, epi_t) = super::mono_epi_via_triangle(&q, &q.lift(&fbar))?;
        report.morphisms_checked += 1;
        if mono_t != q.cat.is_mono(&fbar) || epi_t != q.cat.is_epi(&fbar) {
            report
                .mono_epi_violations
                .push(format!("{} -> {}", q.cat.objects[x], q.cat.objects[y]));
        }
    }
    let label = |x: usize| model.base.objects[x].clone();
    report.meets_tau = s.iter().copied().filter(|&x| s.contains(&model.tau[x])).map(label).collect();
    report.orthogonal_outside = (0..model.len())
        .filter(|x| !s.contains(x))
        .filter(|&x| s.iter().all(|&t| model.ext1(x, t) == 0 && model.ext1(t, x) == 0))
        .map(label)
        .collect();
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct ArReport {
    pub sink_checked: usize,
    pub sink_violations: Vec<String>,
    pub source_checked: usize,
    pub source_violations: Vec<String>,
    /// `(left, middle, right)` of the almost split sequences found.
    pub ar_sequences: Vec<(String, Vec<String>, String)>,
    pub missing_ar_sequences: Vec<String>,
    pub triangles_checked: usize,
    /// Triangles with both projected maps zero but middle object outside
    /// `S`.
    pub middle_violations: Vec<String>,
}

impl ArReport {
    pub fn passed(&self) -> bool {
        self.sink_violations.is_empty()
            && self.source_violations.is_empty()
            && self.missing_ar_sequences.is_empty()
            && self.middle_violations.is_empty()
    }
}

fn post_image(c: &LinCategory, w: usize, f: &CatMor) -> Subspace {
    image_basis(&c.post_map(w, f))
}

fn pre_image(c: &LinCategory, w: usize, f: &CatMor) -> Subspace {
    image_basis(&c.pre_map(w, f))
}

/// Maps from `w` through `f` are exactly the radical maps into the target.
fn is_sink(c: &LinCategory, f: &CatMor) -> bool {
    let y = f.target[0];
    (0..c.len()).all(|w| post_image(c, w, f) == c.radical(w, y))
}

fn is_source(c: &LinCategory, f: &CatMor) -> bool {
    let x = f.source[0];
    (0..c.len()).all(|w| pre_image(c, w, f) == c.radical(x, w))
}

/// Sink and source maps of the source project to sink and source maps,
/// the quotient has almost split sequences ending at its non-projective
/// objects, and a triangle whose first two maps die has its middle object
/// in `S`.
pub fn ar_structure_checks(q: &QuotientModel, mult_bound: usize) -> Result<ArReport, QuotientError> {
    let m = q.triang()?;
    let base = &m.base;
    let cat = &q.cat;
    let mut report = ArReport {
        sink_checked: 0,
        sink_violations: Vec::new(),
        source_checked: 0,
        source_violations: Vec::new(),
        ar_sequences: Vec::new(),
        missing_ar_sequences: Vec::new(),
        triangles_checked: 0,
        middle_violations: Vec::new(),
    };
    for x in (0..base.len()).filter(|&x| q.new_index(x).is_some()) {
        report.sink_checked += 1;
        if !is_sink(cat, &q.project(&base.sink_map(x))) {
            report.sink_violations.push(base.objects[x].clone());
        }
        report.source_checked += 1;
        if !is_source(cat, &q.project(&base.source_map(x))) {
            report.source_violations.push(base.objects[x].clone());
        }
    }
    let proj = cat.projectives();
    for z in (0..cat.len()).filter(|z| !proj.contains(z)) {
        let sink = cat.minimize_right(&cat.sink_map(z));
        let found = cat.is_epi(&sink) && {
            match cat.kernel_search(&sink, mult_bound) {
                Ok((k, _)) if k.source.len() == 1 && is_source(cat, &cat.minimize_left(&k)) => {
                    report.ar_sequences.push((
                        cat.objects[k.source[0]].clone(),
                        q.labels(&sink.source),
                        cat.objects[z].clone(),
                    ));
                    true
                }
                Ok(_) | Err(LinCatError::NotFoundWithinBound(_)) => false,
                Err(e) => return Err(e.into()),
            }
        };
        if !found {
            report.missing_ar_sequences.push(cat.objects[z].clone());
        }
    }
    let mut maps: Vec<CatMor> = base.basis_morphisms().into_iter().map(|(x, y, v)| base.single(x, y, v)).collect();
    for x in 0..base.len() {
        for y in 0..base.len() {
            maps.push(base.zero_mor(&[x], &[y]));
        }
    }
    for f in maps {
        if !q.project(&f).is_zero() {
            continue;
        }
        let t = m.cone(&f)?;
        report.triangles_checked += 1;
        let y = f.target[0];
        if q.project(&t.g).is_zero() && !q.tilting.contains(&y) {
            report.middle_violations.push(format!(
                "{} -> {} -> {}",
                base.objects[f.source[0]],
                base.objects[y],
                t.third().iter().map(|&z| base.objects[z].as_str()).collect::<Vec<_>>().join(" + ")
            ));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub source_objects: usize,
    pub sizes: [usize; 2],
    pub quotient_objects: [usize; 2],
}

impl CountReport {
    pub fn passed(&self) -> bool {
        (0..2).all(|i| self.quotient_objects[i] + self.sizes[i] == self.source_objects)
    }
}

/// Both quotients have as many objects as the source minus the
/// subcategory, so they are finite together.
pub fn representation_count_check(model: Arc<TriangModel>, s1: &[usize], s2: &[usize]) -> Result<CountReport, QuotientError> {
    let q1 = build_quotient(model.clone(), s1, false)?;
    let q2 = build_quotient(model.clone(), s2, false)?;
    Ok(CountReport {
        source_objects: model.len(),
        sizes: [q1.tilting.len(), q2.tilting.len()],
        quotient_objects: [q1.cat.len(), q2.cat.len()],
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub cluster_objects: Vec<String>,
    pub derived_objects: usize,
    pub f_stable: bool,
    /// The subcategory is the full preimage of its image.
    pub pullback_matches: bool,
    pub derived_tilting: bool,
    pub cluster_tilting: bool,
}

impl CorrespondenceReport {
    /// Tilting in the derived category exactly when the subcategory is a
    /// full preimage of a tilting subcategory of the cluster category.
    pub fn holds(&self) -> bool {
        (self.f_stable && self.derived_tilting) == (self.pullback_matches && self.cluster_tilting)
    }
}

fn derived_tilting(c: &ClusterModel, s: &[usize]) -> Result<(bool, bool), QuotientError> {
    match is_tilting_derived(&c.derived, s) {
        Ok(r) => Ok((true, r.is_tilting())),
        Err(DerivedError::NotFStable(_)) => Ok((false, false)),
        Err(e) => Err(e.into()),
    }
}

/// Starting from cluster objects `t`: the preimage is `F`-stable and
/// tilting in the window exactly when `t` is tilting.
pub fn tilting_correspondence(c: &ClusterModel, t: &[usize]) -> Result<CorrespondenceReport, QuotientError> {
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    let pre = c.preimage(&t);
    let (f_stable, derived) = derived_tilting(c, &pre)?;
    Ok(CorrespondenceReport {
        cluster_objects: t.iter().map(|&x| c.model.base.objects[x].clone()).collect(),
        derived_objects: pre.len(),
        f_stable,
        pullback_matches: c.image(&pre) == t,
        derived_tilting: derived,
        cluster_tilting: is_tilting(&c.model, &t).is_tilting(),
    })
}

/// Starting from window objects `s`.
pub fn tilting_correspondence_from_derived(c: &ClusterModel, s: &[usize]) -> Result<CorrespondenceReport, QuotientError> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let (f_stable, derived) = derived_tilting(c, &s)?;
    let image = c.image(&s);
    Ok(CorrespondenceReport {
        cluster_objects: image.iter().map(|&x| c.model.base.objects[x].clone()).collect(),
        derived_objects: s.len(),
        f_stable,
        pullback_matches: c.preimage(&image) == s,
        derived_tilting: derived,
        cluster_tilting: is_tilting(&c.model, &image).is_tilting(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::a1_quotient;
    use super::*;
    use crate::corpus;
    use crate::derivedcat::{build_cluster, Window};
    use crate::stablecat::build_stable;
    use crate::tilting::enumerate_tilting;

    #[test]
    fn extensions_in_the_a1_quotient() {
        let q = a1_quotient();
        let m = q.triang().unwrap();
        for t in enumerate_tilting(m) {
            let r = image_1_orthogonal(&q, &t, 2).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let r = image_1_orthogonal(&q, &q.tilting.clone(), 2).unwrap();
        assert!(r.passed() && r.images.is_empty());
        let proj = q.cat.projectives();
        for x in 0..q.cat.len() {
            for y in 0..q.cat.len() {
                let e = quotient_ext1(&q, x, y, 2).unwrap();
                let simples = !proj.contains(&x) && !proj.contains(&y);
                assert_eq!(e, usize::from(simples && x != y), "{} {}", q.cat.objects[x], q.cat.objects[y]);
            }
        }
    }

    #[test]
    fn converse_on_a2_and_a1() {
        let a2 = Arc::new(build_stable(&corpus::a2()).unwrap());
        let r = converse_checks(a2.clone(), &a2.base.indices(&["a"]).unwrap(), 2).unwrap();
        assert!(r.passed(), "{r:?}");
        let bad = converse_checks(a2.clone(), &a2.base.indices(&["a", "a/b"]).unwrap(), 2).unwrap();
        assert!(!bad.rigid && !bad.passed());
        let a1 = Arc::new(build_stable(&corpus::a1()).unwrap());
        for t in enumerate_tilting(&a1) {
            assert!(converse_checks(a1.clone(), &t, 2).unwrap().passed());
        }
    }

    #[test]
    fn ar_structure_of_a1_quotient() {
        let q = a1_quotient();
        let r = ar_structure_checks(&q, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.ar_sequences.len(), 2);
        assert!(r.triangles_checked > 0);
    }

    #[test]
    fn counts_and_correspondence_for_a3() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let m = Arc::new(c.model.clone());
        let tilts = enumerate_tilting(&m);
        let r = representation_count_check(m.clone(), &tilts[0], &tilts[1]).unwrap();
        assert!(r.passed());
        assert_eq!(r.quotient_objects, [6, 6]);
        for t in &tilts {
            let fwd = tilting_correspondence(&c, t).unwrap();
            assert!(fwd.holds() && fwd.f_stable && fwd.derived_tilting, "{fwd:?}");
            let pre = c.preimage(t);
            let back = tilting_correspondence_from_derived(&c, &pre).unwrap();
            assert!(back.holds() && back.cluster_tilting && back.pullback_matches);
        }
        let pre = c.preimage(&tilts[0]);
        let partial = tilting_correspondence_from_derived(&c, &pre[..1]).unwrap();
        assert!(!partial.f_stable && !partial.pullback_matches && partial.holds());
    }
}
