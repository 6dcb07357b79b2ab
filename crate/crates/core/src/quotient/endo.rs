//! The endomorphism algebra of the projectives of a quotient, presented by
//! a quiver with monomial relations, and its module category.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use super::{QuotientError, QuotientModel, Source};
use crate::exactla::{vec_is_zero, Scalar, Subspace};
use crate::lincat::{digraph_isomorphism, LinCategory};
use crate::modcat::{Alg, ModCat, Strategy};
use crate::quiver::BoundQuiverAlgebra;

#[derive(Debug, Clone, Serialize)]
pub struct EndoReport {
    /// Vertex names of the presented algebra, one per projective.
    pub vertices: Vec<String>,
    pub projectives: Vec<String>,
    /// `(label, source, target)`.
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<String>>,
    /// Nonzero paths form a basis, so the minimal zero paths present it.
    pub monomial: bool,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub indecomposables: Option<usize>,
    pub quotient_objects: usize,
    /// Quotient object to module label, matching the Auslander-Reiten
    /// quivers.
    pub ar_isomorphism: Option<Vec<(String, String)>>,
    #[serde(skip)]
    pub algebra: Option<Alg>,
}

impl EndoReport {
    pub fn passed(&self) -> bool {
        self.monomial
            && self.dimension == self.expected_dimension
            && self.indecomposables == Some(self.quotient_objects)
            && self.ar_isomorphism.is_some()
    }
}

struct Arrow {
    source: usize,
    target: usize,
    map: Vec<Scalar>,
}

/// Irreducible maps between objects of `sub`: a map `P_x -> P_y` becomes
/// an arrow `y -> x`.
fn irreducible_arrows(sub: &LinCategory) -> Vec<Arrow> {
    let mut arrows = Vec::new();
    for x in 0..sub.len() {
        for y in 0..sub.len() {
            let n = sub.dim(x, y);
            let mut span = sub.radical_sq(x, y).vectors();
            for v in sub.radical(x, y).vectors() {
                if !Subspace::span(sub.field, n, &span).contains(&v) {
                    span.push(v.clone());
                    arrows.push(Arrow {
                        source: y,
                        target: x,
                        map: v,
                    });
                }
            }
        }
    }
    arrows
}

struct Paths {
    nonzero: Vec<(usize, Vec<usize>, usize, Vec<Scalar>)>,
    relations: Vec<(usize, Vec<usize>)>,
}

/// Nonzero paths with their values in `Hom(P_end, P_start)` and the
/// minimal zero paths.
fn paths(sub: &LinCategory, arrows: &[Arrow]) -> Result<Paths, QuotientError> {
    let mut level: Vec<(usize, Vec<usize>, usize, Vec<Scalar>)> =
        (0..sub.len()).map(|v| (v, Vec::new(), v, sub.identity[v].clone())).collect();
    let mut nonzero = level.clone();
    let mut seen: HashSet<(usize, Vec<usize>)> = level.iter().map(|(s, p, _, _)| (*s, p.clone())).collect();
    let mut relations = Vec::new();
    let cap: usize = sub.hom_dims.iter().flatten().sum::<usize>() + 1;
    for _ in 0..=cap {
        if level.is_empty() {
            return Ok(Paths { nonzero, relations });
        }
        let mut next = Vec::new();
        for (s, p, e, u) in &level {
            for (a, arr) in arrows.iter().enumerate().filter(|(_, arr)| arr.source == *e) {
                let mut q = p.clone();
                q.push(a);
                let value = sub.compose(arr.target, *e, *s, &arr.map, u);
                if vec_is_zero(&value) {
                    let suffix_start = arrows[q[0]].target;
                    if q.len() == 1 || seen.contains(&(suffix_start, q[1..].to_vec())) {
                        relations.push((*s, q));
                    }
                } else {
                    seen.insert((*s, q.clone()));
                    next.push((*s, q, arr.target, value));
                }
            }
        }
        nonzero.extend(next.iter().cloned());
        level = next;
    }
    Err(QuotientError::MismatchWithTheory("radical of the projectives is not nilpotent".into()))
}

fn is_basis(sub: &LinCategory, nonzero: &[(usize, Vec<usize>, usize, Vec<Scalar>)]) -> bool {
    for s in 0..sub.len() {
        for e in 0..sub.len() {
            let vs: Vec<Vec<Scalar>> =
                nonzero.iter().filter(|p| p.0 == s && p.2 == e).map(|p| p.3.clone()).collect();
            let n = sub.dim(e, s);
            if vs.len() != n || Subspace::span(sub.field, n, &vs).dim() != n {
                return false;
            }
        }
    }
    true
}

/// Presents `End(P)` for the projectives `P` of the quotient and compares
/// its module category with the quotient.
pub fn endo_algebra(q: &QuotientModel) -> Result<EndoReport, QuotientError> {
    let proj = q.cat.projectives();
    let sub = q.cat.full_subcategory(&proj);
    let arrows = irreducible_arrows(&sub);
    let found = paths(&sub, &arrows)?;
    let vertices: Vec<String> = (0..proj.len()).map(|i| format!("e{i}")).collect();
    let labels: Vec<String> = (0..arrows.len()).map(|i| format!("x{i}")).collect();
    let arrow_rows: Vec<(String, String, String)> = arrows
        .iter()
        .zip(&labels)
        .map(|(a, l)| (l.clone(), vertices[a.source].clone(), vertices[a.target].clone()))
        .collect();
    let relations: Vec<Vec<String>> =
        found.relations.iter().map(|(_, p)| p.iter().map(|&a| labels[a].clone()).collect()).collect();
    let mut report = EndoReport {
        vertices: vertices.clone(),
        projectives: q.labels(&proj),
        arrows: arrow_rows,
        relations,
        monomial: is_basis(&sub, &found.nonzero),
        dimension: 0,
        expected_dimension: sub.hom_dims.iter().flatten().sum(),
        indecomposables: None,
        quotient_objects: q.cat.len(),
        ar_isomorphism: None,
        algebra: None,
    };
    if !report.monomial {
        return Ok(report);
    }
    let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let arr: Vec<(&str, &str, &str)> =
        report.arrows.iter().map(|(l, s, t)| (l.as_str(), s.as_str(), t.as_str())).collect();
    let rels: Vec<Vec<&str>> = report.relations.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    let rel_refs: Vec<&[&str]> = rels.iter().map(Vec::as_slice).collect();
    let name = format!("End({})", report.projectives.join(" + "));
    let b: Alg = Arc::new(BoundQuiverAlgebra::from_labels(&name, q.cat.field, &vs, &arr, &rel_refs)?);
    report.dimension = b.dim();
    let mc = ModCat::build(&b, Strategy::auto(&b))?;
    report.indecomposables = Some(mc.len());
    let skel = mc.skeleton();
    report.ar_isomorphism = digraph_isomorphism(q.cat.len(), &q.cat.ar_quiver(), skel.len(), &skel.ar_quiver())
        .map(|p| p.iter().enumerate().map(|(x, &y)| (q.cat.objects[x].clone(), mc.labels[y].clone())).collect());
    report.algebra = Some(b);
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct LineReport {
    /// Interior projectives of the windowed quotient.
    pub projectives: Vec<String>,
    /// Irreducible maps between them, as label pairs.
    pub arrows: Vec<(String, String)>,
    /// Every projective has at most one irreducible map in and one out,
    /// and the maps form no cycle.
    pub is_line: bool,
    /// Homs between interior projectives: the endomorphisms and one
    /// irreducible map per arrow, nothing else.
    pub radical_square_zero: bool,
}

impl LineReport {
    pub fn passed(&self) -> bool {
        !self.projectives.is_empty() && self.is_line && self.radical_square_zero
    }
}

/// For a windowed quotient: the projectives away from the window ends,
/// with their irreducible maps, form a linearly oriented line with radical
/// square zero.
pub fn line_with_radical_square_zero(q: &QuotientModel) -> Result<LineReport, QuotientError> {
    let Source::Windowed(d) = &q.source else {
        return Err(QuotientError::MismatchWithTheory("expected a windowed quotient".into()));
    };
    let interior = q.images(&d.interior());
    let proj = q.cat.projectives();
    let sub = q.cat.full_subcategory(&proj);
    let inner: Vec<usize> = (0..proj.len()).filter(|&i| interior.contains(&proj[i])).collect();
    let edges: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&x| inner.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| sub.irreducible_count(x, y) > 0)
        .collect();
    let degree_ok = inner.iter().all(|&v| {
        edges.iter().filter(|e| e.0 == v).count() <= 1 && edges.iter().filter(|e| e.1 == v).count() <= 1
    });
    let acyclic = inner.iter().all(|&v| {
        let mut cur = v;
        for _ in 0..inner.len() {
            match edges.iter().find(|e| e.0 == cur) {
                Some(&(_, w)) if w == v => return false,
                Some(&(_, w)) => cur = w,
                None => return true,
            }
        }
        true
    });
    let multiplicity_one = edges.iter().all(|&(x, y)| sub.irreducible_count(x, y) == 1);
    let radical_square_zero = inner.iter().all(|&x| {
        inner.iter().all(|&y| {
            let expected = usize::from(x == y || edges.contains(&(x, y)));
            sub.dim(x, y) == expected
        })
    });
    let name = |i: usize| q.cat.objects[proj[i]].clone();
    Ok(LineReport {
        projectives: inner.iter().map(|&i| name(i)).collect(),
        arrows: edges.iter().map(|&(x, y)| (name(x), name(y))).collect(),
        is_line: degree_ok && acyclic && multiplicity_one,
        radical_square_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::a1_quotient;
    use super::super::{build_quotient, build_quotient_windowed};
    use super::*;
    use crate::corpus;
    use crate::derivedcat::{build_cluster, DerivedModel, Window};
    use crate::tilting::enumerate_tilting;

    #[test]
    fn a1_endo_is_the_two_cycle() {
        let q = a1_quotient();
        let r = endo_algebra(&q).unwrap();
        assert_eq!(r.vertices.len(), 2);
        assert_eq!(r.arrows.len(), 2);
        assert_eq!(r.relations.len(), 2);
        assert!(r.relations.iter().all(|p| p.len() == 2));
        assert_eq!(r.dimension, 4);
        assert_eq!(r.indecomposables, Some(4));
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn cluster_tilted_algebras_of_a3() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let m = Arc::new(c.model);
        let mut cycles = 0;
        for t in enumerate_tilting(&m) {
            let q = build_quotient(m.clone(), &t, false).unwrap();
            let r = endo_algebra(&q).unwrap();
            assert!(r.passed(), "{r:?}");
            if r.arrows.len() == 3 {
                assert_eq!(r.relations.len(), 3);
                cycles += 1;
            }
        }
        assert!(cycles > 0);
    }

    #[test]
    fn windowed_line() {
        let d = Arc::new(DerivedModel::build(&corpus::a3(), Window::default()).unwrap());
        let mc = &d.modcat;
        let seeds = [
            d.projective(mc.alg.quiver.vertex_index("c").unwrap()),
            d.module_object(mc.label_index("a").unwrap(), 0),
            d.projective(mc.alg.quiver.vertex_index("a").unwrap()),
        ];
        let s = d.f_orbits(&seeds);
        let q = build_quotient_windowed(d.clone(), &s).unwrap();
        let r = line_with_radical_square_zero(&q).unwrap();
        assert!(r.passed(), "{r:?}");
        let h = build_quotient_windowed(d.clone(), &d.f_orbits(&d.projectives())).unwrap();
        assert!(!line_with_radical_square_zero(&h).unwrap().radical_square_zero);
    }
}
