//! Projectives, injectives, resolutions and Gorenstein dimension of a
//! quotient, and the Frobenius criteria.

use serde::Serialize;

use super::{QuotientError, QuotientModel, Source};
use crate::lincat::{LinCatError, LinCategory};

#[derive(Debug, Clone, Serialize)]
pub struct ProjInj {
    pub projectives: Vec<String>,
    pub injectives: Vec<String>,
    /// Images of `S[-1]` and `S[1]` when `S` is tilting.
    pub expected_projectives: Option<Vec<String>>,
    pub expected_injectives: Option<Vec<String>>,
}

fn sorted_labels(cat: &LinCategory, objs: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = objs.iter().map(|&x| cat.objects[x].clone()).collect();
    v.sort();
    v
}

/// Projective and injective objects of the quotient, found with the
/// radical sink and source maps. For a tilting `S` they must be the images
/// of `S[-1]` and `S[1]`.
/// Expected projectives and injectives, as source objects.
type ExpectedPI = (Vec<usize>, Vec<usize>);

pub fn projectives_injectives(q: &QuotientModel) -> Result<ProjInj, QuotientError> {
    let proj = q.cat.projectives();
    let inj = q.cat.injectives();
    let (expected, scope): (Option<ExpectedPI>, Vec<usize>) = match &q.source {
        Source::Triang(m) if !q.overridden => {
            let p: Vec<usize> = q.tilting.iter().map(|&s| m.shift_inv_obj(s)).collect();
            let i: Vec<usize> = q.tilting.iter().map(|&s| m.shift_obj(s)).collect();
            (Some((q.images(&p), q.images(&i))), (0..q.cat.len()).collect())
        }
        Source::Triang(_) => (None, Vec::new()),
        Source::Windowed(d) => {
            let shifted = |k: i64| -> Vec<usize> {
                q.tilting.iter().filter_map(|&s| d.index(d.shift(d.objects[s], k))).collect()
            };
            let scope = q.images(&d.interior());
            (Some((q.images(&shifted(-1)), q.images(&shifted(1)))), scope)
        }
    };
    let Some((ep, ei)) = expected else {
        return Ok(ProjInj {
            projectives: sorted_labels(&q.cat, &proj),
            injectives: sorted_labels(&q.cat, &inj),
            expected_projectives: None,
            expected_injectives: None,
        });
    };
    let within = |v: &[usize]| -> Vec<usize> { v.iter().copied().filter(|x| scope.contains(x)).collect() };
    for (what, found, exp) in [("projectives", &proj, &ep), ("injectives", &inj, &ei)] {
        if within(found) != within(exp) {
            return Err(QuotientError::MismatchWithTheory(format!(
                "{what} {:?}, expected {:?}",
                sorted_labels(&q.cat, &within(found)),
                sorted_labels(&q.cat, &within(exp))
            )));
        }
    }
    Ok(ProjInj {
        projectives: sorted_labels(&q.cat, &proj),
        injectives: sorted_labels(&q.cat, &inj),
        expected_projectives: Some(sorted_labels(&q.cat, &ep)),
        expected_injectives: Some(sorted_labels(&q.cat, &ei)),
    })
}

/// A projective resolution (or injective coresolution) of one object.
#[derive(Debug, Clone, Serialize)]
pub struct Resolution {
    pub object: String,
    pub injective: bool,
    /// Summands of each term, starting next to the object.
    pub terms: Vec<Vec<String>>,
    /// Projective (injective) dimension, if the resolution stopped.
    pub length: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GorensteinReport {
    pub objects: Vec<String>,
    pub projectives: Vec<String>,
    pub injectives: Vec<String>,
    pub enough_projectives: bool,
    pub enough_injectives: bool,
    /// Projective resolutions of the injectives.
    pub pd_injectives: Vec<Resolution>,
    /// Injective coresolutions of the projectives.
    pub id_projectives: Vec<Resolution>,
    pub dimension: Option<usize>,
}

fn search_err(e: LinCatError, what: &str) -> QuotientError {
    match e {
        LinCatError::NotFoundWithinBound(b) => {
            QuotientError::Inconclusive(format!("{what} not found within multiplicity {b}"))
        }
        e => e.into(),
    }
}

fn resolve(cat: &LinCategory, x: usize, injective: bool, mult_bound: usize) -> Result<Resolution, QuotientError> {
    let ends: Vec<usize> = if injective { cat.injectives() } else { cat.projectives() };
    let mut terms = Vec::new();
    let mut cur = vec![x];
    let mut length = None;
    for step in 0..=cat.len() + 1 {
        if cur.iter().all(|c| ends.contains(c)) {
            length = Some(step);
            break;
        }
        if injective {
            let hull = cat.minimize_left(&cat.left_approximation(&ends, &cur));
            if !cat.is_mono(&hull) {
                break;
            }
            terms.push(sorted_labels(cat, &hull.target));
            let (c, _) = cat.cokernel_search(&hull, mult_bound).map_err(|e| search_err(e, "cosyzygy"))?;
            cur = c.target;
        } else {
            let cover = cat.minimize_right(&cat.right_approximation(&ends, &cur));
            if !cat.is_epi(&cover) {
                break;
            }
            terms.push(sorted_labels(cat, &cover.source));
            let (k, _) = cat.kernel_search(&cover, mult_bound).map_err(|e| search_err(e, "syzygy"))?;
            cur = k.source;
        }
    }
    Ok(Resolution {
        object: cat.objects[x].clone(),
        injective,
        terms,
        length,
    })
}

/// Gorenstein data of a finite linear category: every object needs a
/// projective cover and an injective hull, and the dimension is the
/// largest projective dimension of an injective or injective dimension of
/// a projective.
pub fn gorenstein_of(cat: &LinCategory, mult_bound: usize) -> Result<GorensteinReport, QuotientError> {
    let proj = cat.projectives();
    let inj = cat.injectives();
    let mut enough_projectives = true;
    let mut enough_injectives = true;
    for x in 0..cat.len() {
        enough_projectives &= cat.is_epi(&cat.right_approximation(&proj, &[x]));
        enough_injectives &= cat.is_mono(&cat.left_approximation(&inj, &[x]));
    }
    let mut pd_injectives = Vec::new();
    let mut id_projectives = Vec::new();
    if enough_projectives && enough_injectives {
        for &i in &inj {
            pd_injectives.push(resolve(cat, i, false, mult_bound)?);
        }
        for &p in &proj {
            id_projectives.push(resolve(cat, p, true, mult_bound)?);
        }
    }
    let dimension = if enough_projectives && enough_injectives {
        pd_injectives
            .iter()
            .chain(&id_projectives)
            .map(|r| r.length)
            .try_fold(0, |m, l| l.map(|l| m.max(l)))
    } else {
        None
    };
    Ok(GorensteinReport {
        objects: cat.objects.clone(),
        projectives: sorted_labels(cat, &proj),
        injectives: sorted_labels(cat, &inj),
        enough_projectives,
        enough_injectives,
        pd_injectives,
        id_projectives,
        dimension,
    })
}

pub fn gorenstein(q: &QuotientModel, mult_bound: usize) -> Result<GorensteinReport, QuotientError> {
    gorenstein_of(&q.cat, mult_bound)
}

/// Gorenstein data of each connected component of a windowed quotient
/// that lies away from the window ends.
pub fn gorenstein_windowed(q: &QuotientModel, mult_bound: usize) -> Result<Vec<GorensteinReport>, QuotientError> {
    let Source::Windowed(d) = &q.source else {
        return Ok(vec![gorenstein(q, mult_bound)?]);
    };
    let interior = q.images(&d.interior());
    let mut out = Vec::new();
    for comp in components(&q.cat) {
        if comp.iter().all(|x| interior.contains(x)) {
            out.push(gorenstein_of(&q.cat.full_subcategory(&comp), mult_bound)?);
        }
    }
    Ok(out)
}

/// Connected components of the graph joining objects with a nonzero hom in
/// either direction.
pub(crate) fn components(cat: &LinCategory) -> Vec<Vec<usize>> {
    let n = cat.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for (y, s) in seen.iter_mut().enumerate() {
                if !*s && (cat.dim(x, y) > 0 || cat.dim(y, x) > 0) {
                    *s = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct FrobeniusReport {
    pub projectives_are_injectives: bool,
    pub s_equals_s2: bool,
    pub tau_shift_fixes_s: bool,
    pub frobenius: bool,
}

/// The three Frobenius criteria from already computed data. They must
/// agree.
pub fn frobenius_from_maps(
    proj: &[usize],
    inj: &[usize],
    s: &[usize],
    s2: &[usize],
    tau_s1: &[usize],
) -> Result<FrobeniusReport, QuotientError> {
    let set = |v: &[usize]| -> Vec<usize> {
        let mut v = v.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let a = set(proj) == set(inj);
    let b = set(s) == set(s2);
    let c = set(s) == set(tau_s1);
    if a != b || b != c {
        return Err(QuotientError::CriterionDisagreement(format!(
            "projectives = injectives: {a}, S = S[2]: {b}, tau S[1] = S: {c}"
        )));
    }
    Ok(FrobeniusReport {
        projectives_are_injectives: a,
        s_equals_s2: b,
        tau_shift_fixes_s: c,
        frobenius: a,
    })
}

pub fn frobenius_check(q: &QuotientModel) -> Result<FrobeniusReport, QuotientError> {
    let m = q.triang()?;
    if q.overridden {
        return Err(QuotientError::NotTilting("Frobenius criteria need a tilting subcategory".into()));
    }
    let s2: Vec<usize> = q.tilting.iter().map(|&s| m.shift_obj(m.shift_obj(s))).collect();
    let ts: Vec<usize> = q.tilting.iter().map(|&s| m.tau[m.shift_obj(s)]).collect();
    frobenius_from_maps(&q.cat.projectives(), &q.cat.injectives(), &q.tilting, &s2, &ts)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::tests::{a1_quotient, a2_quotient};
    use super::super::{build_quotient, build_quotient_windowed};
    use super::*;
    use crate::corpus;
    use crate::derivedcat::{build_cluster, DerivedModel, Window};
    use crate::tilting::enumerate_tilting;

    #[test]
    fn a1_is_selfinjective() {
        let q = a1_quotient();
        let pi = projectives_injectives(&q).unwrap();
        assert_eq!(pi.projectives, ["b", "b/a/b"]);
        assert_eq!(pi.injectives, pi.projectives);
        let g = gorenstein(&q, 2).unwrap();
        assert_eq!(g.dimension, Some(0));
        let f = frobenius_check(&q).unwrap();
        assert!(f.frobenius && f.s_equals_s2 && f.tau_shift_fixes_s);
    }

    #[test]
    fn a2_override_has_other_projectives() {
        let q = a2_quotient();
        let pi = projectives_injectives(&q).unwrap();
        assert!(pi.expected_projectives.is_none());
        assert!(pi.projectives.iter().any(|p| p != "b/a"));
        assert!(frobenius_check(&q).is_err());
    }

    #[test]
    fn disagreeing_criteria_are_reported() {
        let r = frobenius_from_maps(&[0], &[0], &[1], &[2], &[1]);
        assert!(matches!(r, Err(QuotientError::CriterionDisagreement(_))));
        assert!(frobenius_from_maps(&[0], &[1], &[1], &[2], &[3]).is_ok());
    }

    #[test]
    fn cluster_quotients_of_a3_are_one_gorenstein() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let m = Arc::new(c.model);
        let tilts = enumerate_tilting(&m);
        assert_eq!(tilts.len(), 14);
        for t in &tilts {
            let q = build_quotient(m.clone(), t, false).unwrap();
            projectives_injectives(&q).unwrap();
            let g = gorenstein(&q, 2).unwrap();
            assert!(g.dimension.is_some_and(|d| d <= 1), "{:?}", q.labels(&(0..q.cat.len()).collect::<Vec<_>>()));
            frobenius_check(&q).unwrap();
        }
    }

    #[test]
    fn windowed_quotient_of_a3() {
        let d = Arc::new(DerivedModel::build(&corpus::a3(), Window::default()).unwrap());
        let s = d.f_orbits(&d.projectives());
        let q = build_quotient_windowed(d, &s).unwrap();
        projectives_injectives(&q).unwrap();
        let reports = gorenstein_windowed(&q, 2).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|g| g.dimension.is_some_and(|d| d <= 1)));
    }
}
