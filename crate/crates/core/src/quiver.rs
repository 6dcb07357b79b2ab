//! Quivers, paths and bound path algebras with monomial relations.
//!
//! Paths are read left to right: the path `alpha beta` first follows
//! `alpha`, then `beta`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{0}` has length below 2")]
    RelationTooShort(String),
    #[error("arrows `{0}` do not compose into a path")]
    NotAPath(String),
    #[error("algebra is infinite dimensional (relation-free path `{0}` can be pumped)")]
    InfiniteDimensional(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self, QuiverError> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(QuiverError::DuplicateLabel(v.clone()));
            }
        }
        let index = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
        };
        let mut out = Vec::with_capacity(arrows.len());
        for (label, s, t) in arrows {
            if !seen.insert(label.clone()) {
                return Err(QuiverError::DuplicateLabel(label));
            }
            out.push(Arrow {
                source: index(&s)?,
                target: index(&t)?,
                label,
            });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path in a quiver. A path with no arrows is the idempotent at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self, QuiverError> {
        let first = *arrows
            .first()
            .ok_or_else(|| QuiverError::NotAPath(String::new()))?;
        for w in arrows.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                let names: Vec<&str> = arrows.iter().map(|&a| q.arrows[a].label.as_str()).collect();
                return Err(QuiverError::NotAPath(names.join(" ")));
            }
        }
        Ok(Path {
            source: q.arrows[first].source,
            target: q.arrows[*arrows.last().unwrap()].target,
            arrows,
        })
    }

    /// The same arrows traversed backwards, a path of the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path {
            source: self.target,
            target: self.source,
            arrows,
        }
    }

    pub fn contains(&self, sub: &Path) -> bool {
        !sub.arrows.is_empty() && self.arrows.windows(sub.len()).any(|w| w == sub.arrows.as_slice())
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            let names: Vec<&str> = self.arrows.iter().map(|&a| q.arrows[a].label.as_str()).collect();
            names.join(" ")
        }
    }
}

/// `kQ/I` with `I` generated by monomial relations.
#[derive(Debug, Clone)]
pub struct BoundQuiverAlgebra {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Path>,
    pub field: Field,
    basis: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations && self.field == other.field
    }
}

impl Eq for BoundQuiverAlgebra {}

impl BoundQuiverAlgebra {
    pub fn new(name: &str, quiver: Quiver, relations: Vec<Path>, field: Field) -> Result<Self, QuiverError> {
        for r in &relations {
            if r.len() < 2 {
                return Err(QuiverError::RelationTooShort(r.display(&quiver)));
            }
        }
        let basis = enumerate_basis(&quiver, &relations)?;
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();
        Ok(BoundQuiverAlgebra {
            name: name.to_string(),
            quiver,
            relations,
            field,
            basis,
            index,
        })
    }

    /// Build from vertex names, `(label, source, target)` arrows and relations
    /// given as arrow-label sequences.
    pub fn from_labels(
        name: &str,
        field: Field,
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[&[&str]],
    ) -> Result<Self, QuiverError> {
        let q = Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(l, s, t)| (l.to_string(), s.to_string(), t.to_string()))
                .collect(),
        )?;
        let mut rels = Vec::new();
        for r in relations {
            let ids = r
                .iter()
                .map(|l| q.arrow_index(l).ok_or_else(|| QuiverError::UnknownArrow(l.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if ids.len() < 2 {
                return Err(QuiverError::RelationTooShort(r.join(" ")));
            }
            rels.push(Path::from_arrows(&q, ids)?);
        }
        BoundQuiverAlgebra::new(name, q, rels, field)
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    /// Relation-free paths: by length, then lexicographically by arrow label.
    pub fn path_basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(&(p.source, p.arrows.clone())).copied()
    }

    pub fn is_zero_path(&self, p: &Path) -> bool {
        self.relations.iter().any(|r| p.contains(r))
    }

    /// `p` followed by `q`, or `None` when they do not meet or the result
    /// contains a relation.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        let r = Path {
            source: p.source,
            target: q.target,
            arrows,
        };
        if self.is_zero_path(&r) {
            None
        } else {
            Some(r)
        }
    }

    /// Basis paths from `v` to `w`, in basis order.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<&Path> {
        self.basis.iter().filter(|p| p.source == v && p.target == w).collect()
    }

    pub fn paths_from(&self, v: usize) -> Vec<&Path> {
        self.basis.iter().filter(|p| p.source == v).collect()
    }

    pub fn is_nakayama(&self) -> bool {
        (0..self.n_vertices()).all(|v| {
            let out = self.quiver.arrows.iter().filter(|a| a.source == v).count();
            let inc = self.quiver.arrows.iter().filter(|a| a.target == v).count();
            out <= 1 && inc <= 1
        })
    }

    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    /// Every indecomposable projective is injective.
    pub fn is_selfinjective(&self) -> bool {
        crate::modcat::is_selfinjective(self)
    }

    /// The opposite algebra: arrows and relations reversed.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let q = self.quiver.opposite();
        let rels = self.relations.iter().map(Path::reversed).collect();
        BoundQuiverAlgebra::new(&format!("{}^op", self.name), q, rels, self.field)
            .expect("opposite of a finite-dimensional algebra is finite dimensional")
    }
}

fn enumerate_basis(q: &Quiver, relations: &[Path]) -> Result<Vec<Path>, QuiverError> {
    let contains_relation = |p: &Path| relations.iter().any(|r| p.contains(r));
    let max_rel = relations.iter().map(Path::len).max().unwrap_or(1);
    let mut basis: Vec<Path> = (0..q.n_vertices()).map(Path::trivial).collect();
    let mut layer: Vec<Path> = basis.clone();
    // A relation-free path is determined, for the purpose of extending it,
    // by its last `max_rel - 1` arrows. Once paths outgrow the number of such
    // windows some window repeats and the segment between can be pumped.
    let mut windows = 0usize;
    let mut len = 0usize;
    loop {
        let mut next = Vec::new();
        for p in &layer {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                let np = Path {
                    source: p.source,
                    target: a.target,
                    arrows,
                };
                if !contains_relation(&np) {
                    next.push(np);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        len += 1;
        if len < max_rel {
            windows += next.len();
        }
        if len >= max_rel && len > windows + q.n_vertices() + max_rel {
            return Err(QuiverError::InfiniteDimensional(next[0].display(q)));
        }
        next.sort_by(|x, y| {
            let lx: Vec<&str> = x.arrows.iter().map(|&a| q.arrows[a].label.as_str()).collect();
            let ly: Vec<&str> = y.arrows.iter().map(|&a| q.arrows[a].label.as_str()).collect();
            lx.cmp(&ly)
        });
        basis.extend(next.iter().cloned());
        layer = next;
    }
    Ok(basis)
}

impl fmt::Display for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .quiver
            .arrows
            .iter()
            .map(|a| format!("{}:{}->{}", a.label, self.vertex_name(a.source), self.vertex_name(a.target)))
            .collect();
        let rels: Vec<String> = self.relations.iter().map(|r| r.display(&self.quiver)).collect();
        write!(
            f,
            "{} over {} [{}] mod ({})",
            self.name,
            self.field.tag(),
            arrows.join(", "),
            rels.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle(rels: &[&[&str]]) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra::from_labels(
            "t",
            Field::Rationals,
            &["a", "b"],
            &[("alpha", "a", "b"), ("beta", "b", "a")],
            rels,
        )
        .unwrap()
    }

    #[test]
    fn basis_counts() {
        let a1 = two_cycle(&[&["alpha", "beta", "alpha", "beta"], &["beta", "alpha", "beta", "alpha"]]);
        assert_eq!(a1.dim(), 8);
        assert_eq!(a1.paths_from(0).len(), 4);
        let a2 = two_cycle(&[&["alpha", "beta", "alpha"], &["beta", "alpha", "beta"]]);
        assert_eq!(a2.dim(), 6);
        let a3 = BoundQuiverAlgebra::from_labels(
            "line",
            Field::Rationals,
            &["a", "b", "c"],
            &[("alpha", "a", "b"), ("beta", "b", "c")],
            &[],
        )
        .unwrap();
        assert_eq!(a3.dim(), 6);
        assert!(a3.is_hereditary());
    }

    #[test]
    fn basis_order_is_by_length_then_label() {
        let a2 = two_cycle(&[&["alpha", "beta", "alpha"], &["beta", "alpha", "beta"]]);
        let shown: Vec<String> = a2.path_basis().iter().map(|p| p.display(&a2.quiver)).collect();
        assert_eq!(shown, ["e_a", "e_b", "alpha", "beta", "alpha beta", "beta alpha"]);
    }

    #[test]
    fn composition() {
        let a2 = two_cycle(&[&["alpha", "beta", "alpha"], &["beta", "alpha", "beta"]]);
        let alpha = Path::from_arrows(&a2.quiver, vec![0]).unwrap();
        let beta = Path::from_arrows(&a2.quiver, vec![1]).unwrap();
        assert_eq!(a2.compose(&Path::trivial(0), &alpha), Some(alpha.clone()));
        let ab = a2.compose(&alpha, &beta).unwrap();
        assert_eq!((ab.source, ab.target), (0, 0));
        assert_eq!(a2.compose(&ab, &alpha), None);
        assert_eq!(a2.compose(&alpha, &alpha), None);
    }

    #[test]
    fn infinite_dimension_is_detected() {
        let err = BoundQuiverAlgebra::from_labels(
            "free",
            Field::Rationals,
            &["a", "b"],
            &[("alpha", "a", "b"), ("beta", "b", "a")],
            &[],
        )
        .unwrap_err();
        assert!(matches!(err, QuiverError::InfiniteDimensional(_)));
        assert_eq!(two_cycle(&[&["alpha", "beta", "alpha", "beta"]]).dim(), 9);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(
            Quiver::new(vec!["a".into(), "a".into()], vec![]),
            Err(QuiverError::DuplicateLabel(_))
        ));
        let r = BoundQuiverAlgebra::from_labels("x", Field::Rationals, &["a"], &[("l", "a", "z")], &[]);
        assert!(matches!(r, Err(QuiverError::UnknownVertex(_))));
        let r = BoundQuiverAlgebra::from_labels(
            "x",
            Field::Rationals,
            &["a", "b"],
            &[("l", "a", "b")],
            &[&["l", "l"]],
        );
        assert!(matches!(r, Err(QuiverError::NotAPath(_))));
    }

    #[test]
    fn opposite_reverses_relations() {
        let a1 = two_cycle(&[&["alpha", "beta", "alpha", "beta"], &["beta", "alpha", "beta", "alpha"]]);
        let op = a1.opposite();
        assert_eq!(op.dim(), 8);
        assert_eq!(op.quiver.arrows[0].source, 1);
    }

    #[test]
    fn nakayama_flag() {
        let a1 = two_cycle(&[&["alpha", "beta", "alpha", "beta"], &["beta", "alpha", "beta", "alpha"]]);
        assert!(a1.is_nakayama());
    }
}
