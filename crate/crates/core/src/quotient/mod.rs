//! Quotients of triangulated models by tilting subcategories, and the
//! abelian structure on them.
//!
//! Kernels and cokernels are built from triangles and approximations in the
//! source model and replayed against the universal property in the
//! quotient. Projectives, injectives, Gorenstein dimension, the
//! endomorphism algebra of the projectives and several structural checks
//! follow.

mod abelian;
mod checks;
mod endo;
mod gorenstein;

use std::sync::Arc;

use thiserror::Error;

use crate::derivedcat::{DerivedError, DerivedModel};
use crate::lincat::{CatMor, FactorData, LinCatError, LinCategory};
use crate::modcat::ModError;
use crate::quiver::QuiverError;
use crate::stablecat::{StableError, TriangModel};
use crate::tilting::{is_tilting, is_tilting_derived, TiltingReport};

pub use abelian::{
    cokernel_construct, kernel_construct, verify_abelian, AbelianCertificate, Construction, MorphismCertificate,
};
pub use checks::{
    ar_structure_checks, converse_checks, image_1_orthogonal, quotient_ext1, representation_count_check,
    tilting_correspondence, tilting_correspondence_from_derived, ArReport, ConverseReport, CorrespondenceReport,
    CountReport, OrthogonalityReport,
};
pub use endo::{endo_algebra, line_with_radical_square_zero, EndoReport, LineReport};
pub use gorenstein::{
    frobenius_check, frobenius_from_maps, gorenstein, gorenstein_of, gorenstein_windowed, projectives_injectives,
    FrobeniusReport, GorensteinReport, ProjInj, Resolution,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("subcategory is not tilting ({0})")]
    NotTilting(String),
    #[error(transparent)]
    Triangulated(#[from] StableError),
    #[error(transparent)]
    Category(#[from] LinCatError),
    #[error(transparent)]
    Derived(#[from] DerivedError),
    #[error(transparent)]
    Module(#[from] ModError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("approximation failed: {0}")]
    ApproximationFailure(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("categorical computation disagrees with the expected objects: {0}")]
    MismatchWithTheory(String),
    #[error("Frobenius criteria disagree: {0}")]
    CriterionDisagreement(String),
    #[error("construction needs a tilting subcategory of a triangulated model")]
    NeedsTriangulated,
}

/// The category a quotient is taken of.
#[derive(Debug, Clone)]
pub enum Source {
    Triang(Arc<TriangModel>),
    /// A derived category on a degree window, by an `F`-stable subcategory.
    Windowed(Arc<DerivedModel>),
}

impl Source {
    pub fn base(&self) -> &LinCategory {
        match self {
            Source::Triang(m) => &m.base,
            Source::Windowed(d) => &d.cat,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Source::Triang(m) => m.name.clone(),
            Source::Windowed(d) => format!("derived {} on [{}, {}]", d.alg.name, d.window.min_degree, d.window.max_degree),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QuotientModel {
    pub source: Source,
    /// Objects of the source spanning the ideal, sorted.
    pub tilting: Vec<usize>,
    pub cat: LinCategory,
    pub factor: FactorData,
    /// Built without a passing tilting check; tilting-based constructions
    /// are disabled.
    pub overridden: bool,
    pub tilting_report: TiltingReport,
}

fn sorted(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn factor(base: &LinCategory, s: &[usize]) -> Result<(LinCategory, FactorData), QuotientError> {
    let (cat, data) = base.factor_ideal(s)?;
    if cat.len() != base.len() - s.len() {
        return Err(QuotientError::MismatchWithTheory(format!(
            "{} objects remain from {} after removing {}",
            cat.len(),
            base.len(),
            s.len()
        )));
    }
    Ok((cat, data))
}

/// `model / [S]`. Unless `allow_override` is set, `S` must be tilting.
pub fn build_quotient(model: Arc<TriangModel>, s: &[usize], allow_override: bool) -> Result<QuotientModel, QuotientError> {
    let s = sorted(s);
    let report = is_tilting(&model, &s);
    if !report.is_tilting() && !allow_override {
        return Err(QuotientError::NotTilting(format!("{:?}", report.verdict)));
    }
    let (cat, data) = factor(&model.base, &s)?;
    Ok(QuotientModel {
        overridden: !report.is_tilting(),
        source: Source::Triang(model),
        tilting: s,
        cat,
        factor: data,
        tilting_report: report,
    })
}

/// The windowed derived category modulo an `F`-stable tilting subcategory.
pub fn build_quotient_windowed(d: Arc<DerivedModel>, s: &[usize]) -> Result<QuotientModel, QuotientError> {
    let s = sorted(s);
    let report = is_tilting_derived(&d, &s)?;
    if !report.is_tilting() {
        return Err(QuotientError::NotTilting(format!("{:?}", report.verdict)));
    }
    let (cat, data) = factor(&d.cat, &s)?;
    Ok(QuotientModel {
        overridden: false,
        source: Source::Windowed(d),
        tilting: s,
        cat,
        factor: data,
        tilting_report: report,
    })
}

impl QuotientModel {
    pub fn triang(&self) -> Result<&TriangModel, QuotientError> {
        match &self.source {
            Source::Triang(m) => Ok(m),
            Source::Windowed(_) => Err(QuotientError::NeedsTriangulated),
        }
    }

    pub fn project(&self, f: &CatMor) -> CatMor {
        self.factor.project(f)
    }

    pub fn lift(&self, f: &CatMor) -> CatMor {
        self.factor.lift(f)
    }

    /// Quotient index of a source object, if it survives.
    pub fn new_index(&self, x: usize) -> Option<usize> {
        self.factor.old_to_new[x]
    }

    pub fn labels(&self, objs: &[usize]) -> Vec<String> {
        objs.iter().map(|&x| self.cat.objects[x].clone()).collect()
    }

    /// Surviving source objects of a list, as sorted quotient indices.
    pub fn images(&self, objs: &[usize]) -> Vec<usize> {
        sorted(&objs.iter().filter_map(|&x| self.new_index(x)).collect::<Vec<_>>())
    }
}

/// Mono and epi verdicts for the image of `f` read off a triangle
/// `Z[-1] -> X -> Y -> Z`: mono iff the first map dies, epi iff the map
/// `Y -> Z` dies.
pub fn mono_epi_via_triangle(q: &QuotientModel, f: &CatMor) -> Result<(bool, bool), QuotientError> {
    let m = q.triang()?;
    let t = m.cone(f)?;
    let back = m.base.compose_mor(&m.shift_inverse.apply_mor(&t.h), &m.eta_mor(&f.source));
    Ok((q.project(&back).is_zero(), q.project(&t.g).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::stablecat::build_stable;

    pub(crate) fn a1_quotient() -> QuotientModel {
        let m = Arc::new(build_stable(&corpus::a1()).unwrap());
        let s = m.base.indices(&["a", "a/b/a"]).unwrap();
        build_quotient(m, &s, false).unwrap()
    }

    pub(crate) fn a2_quotient() -> QuotientModel {
        let m = Arc::new(build_stable(&corpus::a2()).unwrap());
        let s = m.base.indices(&["a"]).unwrap();
        build_quotient(m, &s, true).unwrap()
    }

    #[test]
    fn object_counts() {
        let q = a1_quotient();
        assert_eq!(q.cat.len(), 4);
        let mut l = q.cat.objects.clone();
        l.sort();
        assert_eq!(l, ["a/b", "b", "b/a", "b/a/b"]);
        let q2 = a2_quotient();
        assert!(q2.overridden);
        assert_eq!(q2.cat.len(), 3);
        let m = Arc::new(build_stable(&corpus::a1()).unwrap());
        assert!(matches!(build_quotient(m, &[], false), Err(QuotientError::NotTilting(_))));
    }

    #[test]
    fn mono_epi_examples() {
        let q = a1_quotient();
        let m = q.triang().unwrap();
        for x in 0..m.len() {
            assert_eq!(mono_epi_via_triangle(&q, &m.base.identity_mor(&[x])).unwrap(), (true, true));
        }
        let q2 = a2_quotient();
        let m2 = q2.triang().unwrap();
        let c = &m2.base;
        let (ba, b, ab) = (c.index("b/a").unwrap(), c.index("b").unwrap(), c.index("a/b").unwrap());
        let f = c.single(ba, b, c.unit(ba, b, 0));
        assert_eq!(mono_epi_via_triangle(&q2, &f).unwrap(), (true, false));
        let g = c.single(b, ab, c.unit(b, ab, 0));
        assert_eq!(mono_epi_via_triangle(&q2, &g).unwrap(), (false, true));
    }
}
