//! Tilting (maximal 1-orthogonal) subcategories: rigidity, two-sided
//! maximality, enumeration and approximations.

use serde::Serialize;

use crate::derivedcat::{DObject, DerivedError, DerivedModel};
use crate::lincat::{CatMor, LinCategory};
use crate::modcat::{ext1_dim, is_selfinjective, Alg, ModCat, Strategy};
use crate::stablecat::{build_stable, StableError, TriangModel};

/// `dim Ext^1(x, y)` for all ordered pairs of objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub labels: Vec<String>,
    pub dims: Vec<Vec<usize>>,
}

impl ExtTable {
    pub fn from_model(m: &TriangModel) -> Self {
        ExtTable {
            labels: m.base.objects.clone(),
            dims: m.ext_table(),
        }
    }

    /// Extensions between indecomposable modules.
    pub fn from_modules(mc: &ModCat) -> Self {
        ExtTable {
            labels: mc.labels.clone(),
            dims: mc
                .objects
                .iter()
                .map(|x| mc.objects.iter().map(|y| ext1_dim(x, y)).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ext(&self, x: usize, y: usize) -> usize {
        self.dims[x][y]
    }

    /// The table with objects reordered: object `i` of the result is object
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ExtTable {
            labels: perm.iter().map(|&p| self.labels[p].clone()).collect(),
            dims: perm.iter().map(|&p| perm.iter().map(|&q| self.dims[p][q]).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Tilting,
    RigidNotMaximal,
    NotRigid,
}

/// An object outside `S` whose extensions against `S` vanish on one side,
/// with the table for that side and for the opposite side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub object: String,
    pub table: Vec<(String, usize)>,
    pub opposite: Vec<(String, usize)>,
}

impl Witness {
    /// Extensions exist in the opposite direction only.
    pub fn is_one_directional(&self) -> bool {
        self.opposite.iter().any(|e| e.1 > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltingReport {
    pub subcat: Vec<String>,
    pub rigid: bool,
    pub rigid_violation: Option<(String, String, usize)>,
    /// Every `X` outside `S` has `Ext^1(X, S) != 0`.
    pub maximal_left: bool,
    pub left_witness: Option<Witness>,
    /// Every `X` outside `S` has `Ext^1(S, X) != 0`.
    pub maximal_right: bool,
    pub right_witness: Option<Witness>,
    /// How functorial finiteness is settled.
    pub finiteness: String,
    pub verdict: Verdict,
}

impl TiltingReport {
    pub fn is_tilting(&self) -> bool {
        self.verdict == Verdict::Tilting
    }
}

fn sorted(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Report for `s` against an extension oracle over the objects `universe`.
fn report<E>(labels: &dyn Fn(usize) -> String, universe: &[usize], s: &[usize], ext: E, finiteness: &str) -> TiltingReport
where
    E: Fn(usize, usize) -> usize,
{
    let s = sorted(s);
    let mut rigid_violation = None;
    'outer: for &x in &s {
        for &y in &s {
            let e = ext(x, y);
            if e > 0 {
                rigid_violation = Some((labels(x), labels(y), e));
                break 'outer;
            }
        }
    }
    let witness = |left: bool| -> Option<Witness> {
        universe.iter().filter(|x| !s.contains(x)).find_map(|&x| {
            let side = |l: bool| -> Vec<(String, usize)> {
                s.iter().map(|&t| (labels(t), if l { ext(x, t) } else { ext(t, x) })).collect()
            };
            let table = side(left);
            table.iter().all(|e| e.1 == 0).then(|| Witness {
                object: labels(x),
                table,
                opposite: side(!left),
            })
        })
    };
    let left_witness = witness(true);
    let right_witness = witness(false);
    let rigid = rigid_violation.is_none();
    let (maximal_left, maximal_right) = (left_witness.is_none(), right_witness.is_none());
    let verdict = if !rigid {
        Verdict::NotRigid
    } else if maximal_left && maximal_right {
        Verdict::Tilting
    } else {
        Verdict::RigidNotMaximal
    };
    TiltingReport {
        subcat: s.iter().map(|&x| labels(x)).collect(),
        rigid,
        rigid_violation,
        maximal_left,
        left_witness,
        maximal_right,
        right_witness,
        finiteness: finiteness.to_string(),
        verdict,
    }
}

/// Orbit members `F^n Y` with `|n|` beyond this leave any usable mesh.
const ORBIT_SPAN: i64 = 16;

const FINITE: &str = "automatic: finitely many indecomposable objects";

pub fn is_rigid_table(t: &ExtTable, s: &[usize]) -> bool {
    s.iter().all(|&x| s.iter().all(|&y| t.ext(x, y) == 0))
}

pub fn is_rigid(model: &TriangModel, s: &[usize]) -> bool {
    s.iter().all(|&x| s.iter().all(|&y| model.ext1(x, y) == 0))
}

pub fn is_tilting_table(t: &ExtTable, s: &[usize]) -> TiltingReport {
    let universe: Vec<usize> = (0..t.len()).collect();
    report(&|x| t.labels[x].clone(), &universe, s, |x, y| t.ext(x, y), FINITE)
}

pub fn is_tilting(model: &TriangModel, s: &[usize]) -> TiltingReport {
    is_tilting_table(&ExtTable::from_model(model), s)
}

/// Maximal cliques of an undirected graph given by adjacency rows, by
/// Bron-Kerbosch with pivoting. Cliques and the list are sorted.
pub fn maximal_cliques(vertices: &[usize], adj: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn bk(r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, adj: &dyn Fn(usize, usize) -> bool, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(sorted(r));
            return;
        }
        let pivot = *p
            .iter()
            .chain(&x)
            .max_by_key(|&&u| (p.iter().filter(|&&v| adj(u, v)).count(), std::cmp::Reverse(u)))
            .expect("nonempty");
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj(pivot, v)).collect();
        for v in branch {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| adj(v, w)).collect();
            bk(r, np, nx, adj, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(&mut Vec::new(), vertices.to_vec(), Vec::new(), adj, &mut out);
    out.sort();
    out
}

/// Maximal rigid candidates and the tilting ones among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub tilting: Vec<Vec<usize>>,
    /// Reports for every maximal clique of the compatibility graph.
    pub candidates: Vec<TiltingReport>,
}

pub fn enumerate_table(t: &ExtTable) -> Enumeration {
    let vertices: Vec<usize> = (0..t.len()).filter(|&x| t.ext(x, x) == 0).collect();
    let adj = |x: usize, y: usize| x != y && t.ext(x, y) == 0 && t.ext(y, x) == 0;
    let cliques = maximal_cliques(&vertices, &adj);
    let candidates: Vec<TiltingReport> = cliques.iter().map(|c| is_tilting_table(t, c)).collect();
    let tilting = cliques
        .into_iter()
        .zip(&candidates)
        .filter(|(_, r)| r.is_tilting())
        .map(|(c, _)| c)
        .collect();
    Enumeration { tilting, candidates }
}

/// All tilting subcategories, as sorted object lists in sorted order.
pub fn enumerate_tilting(model: &TriangModel) -> Vec<Vec<usize>> {
    enumerate_table(&ExtTable::from_model(model)).tilting
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub map: CatMor,
    /// `Hom(s, f)` is onto (right) or `Hom(f, s)` is onto (left) for every
    /// `s` in the subcategory.
    pub verified: bool,
}

/// The universal right or left `S`-approximation of `m`.
pub fn approximation(c: &LinCategory, s: &[usize], m: usize, side: Side) -> Approximation {
    let map = match side {
        Side::Right => c.right_approximation(s, &[m]),
        Side::Left => c.left_approximation(s, &[m]),
    };
    let verified = match side {
        Side::Right => c.is_right_approximation(s, &map),
        Side::Left => c.is_left_approximation(s, &map),
    };
    Approximation { map, verified }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Max1OrthCheck {
    /// Maximal 1-orthogonality of `add M` inside the module category.
    pub module_report: TiltingReport,
    /// The stable image of `add M` with projective summands removed.
    pub stable_report: TiltingReport,
    pub agree: bool,
}

/// Compare maximal 1-orthogonality of `add M` in `mod A` with the tilting
/// property of its image in the stable category. `m` lists module indices
/// in [`ModCat::build`] order.
pub fn max1orth_module_check(alg: &Alg, m: &[usize]) -> Result<Max1OrthCheck, StableError> {
    if !is_selfinjective(alg) {
        return Err(StableError::NotSelfInjective);
    }
    let mc = ModCat::build(alg, Strategy::auto(alg))?;
    let table = ExtTable::from_modules(&mc);
    let module_report = is_tilting_table(&table, m);
    let stable = build_stable(alg)?;
    let crate::stablecat::ConeOracle::Stable(data) = &stable.oracle else {
        unreachable!("stable models carry module data")
    };
    let image: Vec<usize> = m.iter().filter_map(|&i| data.factor.old_to_new[i]).collect();
    let stable_report = is_tilting(&stable, &image);
    let agree = module_report.is_tilting() == stable_report.is_tilting();
    Ok(Max1OrthCheck {
        module_report,
        stable_report,
        agree,
    })
}

/// For every rigid `S` in `candidates`, right maximality implies left
/// maximality. Returns the candidates where it fails.
pub fn one_sided_violations(t: &ExtTable, candidates: &[Vec<usize>]) -> Vec<Vec<usize>> {
    candidates
        .iter()
        .filter(|s| {
            let r = is_tilting_table(t, s);
            r.rigid && r.maximal_right && !r.maximal_left
        })
        .cloned()
        .collect()
}

/// Object-set relations of a tilting `S` in a model with a Serre functor:
/// `S` and `S[1]` are disjoint, `S` and `tau S` are disjoint and
/// `tau^-1 S = S[-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftRelations {
    pub disjoint_from_shift: bool,
    pub disjoint_from_tau: bool,
    pub tau_inverse_is_shift_inverse: bool,
}

impl ShiftRelations {
    pub fn holds(&self) -> bool {
        self.disjoint_from_shift && self.disjoint_from_tau && self.tau_inverse_is_shift_inverse
    }
}

pub fn shift_relations(model: &TriangModel, s: &[usize]) -> ShiftRelations {
    let s = sorted(s);
    let image = |f: &dyn Fn(usize) -> usize| sorted(&s.iter().map(|&x| f(x)).collect::<Vec<_>>());
    let shifted = image(&|x| model.shift_obj(x));
    let tau_s = image(&|x| model.tau[x]);
    let tau_inv = |x: usize| model.tau.iter().position(|&t| t == x).expect("tau is a bijection");
    ShiftRelations {
        disjoint_from_shift: s.iter().all(|x| !shifted.contains(x)),
        disjoint_from_tau: s.iter().all(|x| !tau_s.contains(x)),
        tau_inverse_is_shift_inverse: image(&tau_inv) == image(&|x| model.shift_inv_obj(x)),
    }
}

/// The tilting conditions for an `F`-stable set of window objects of a
/// derived model, checked on the fundamental domain with extensions taken
/// against every orbit member in the window.
pub fn is_tilting_derived(d: &DerivedModel, s: &[usize]) -> Result<TiltingReport, DerivedError> {
    d.is_f_stable(s)?;
    let mut domain: Vec<DObject> = (0..d.modcat.len()).map(|m| d.module_object(m, 0)).collect();
    domain.extend(d.projectives().into_iter().map(|p| d.shift(p, 1)));
    let need = (-1, 3);
    if d.window.min_degree > need.0 || d.window.max_degree < need.1 {
        return Err(DerivedError::WindowTooNarrow {
            min: d.window.min_degree,
            max: d.window.max_degree,
            reason: "extensions of the fundamental domain need degrees -1 to 3".into(),
        });
    }
    let universe: Vec<usize> = domain.iter().map(|&x| d.index_checked(x)).collect::<Result<_, _>>()?;
    let ext = |x: usize, y: usize| -> usize {
        let (dx, dy) = (d.objects[x], d.objects[y]);
        (-ORBIT_SPAN..=ORBIT_SPAN)
            .filter_map(|n| d.hom_dim(dx, d.shift(d.f_pow(dy, n), 1)))
            .sum()
    };
    let s_domain: Vec<usize> = universe.iter().copied().filter(|i| s.contains(i)).collect();
    let labels = |x: usize| d.label(d.objects[x]);
    Ok(report(
        &labels,
        &universe,
        &s_domain,
        ext,
        "F-stable within the window; checked on the fundamental domain",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::derivedcat::{build_cluster, Window};

    fn idx(m: &TriangModel, labels: &[&str]) -> Vec<usize> {
        m.base.indices(labels).unwrap()
    }

    #[test]
    fn rigidity_examples() {
        let a1 = build_stable(&corpus::a1()).unwrap();
        assert!(is_rigid(&a1, &idx(&a1, &["a", "a/b/a"])));
        assert!(is_rigid(&a1, &[]));
        let a2 = build_stable(&corpus::a2()).unwrap();
        assert!(!is_rigid(&a2, &idx(&a2, &["a", "b/a"])));
    }

    #[test]
    fn tilting_in_stable_a1() {
        let a1 = build_stable(&corpus::a1()).unwrap();
        let s = idx(&a1, &["a", "a/b/a"]);
        let r = is_tilting(&a1, &s);
        assert_eq!(r.verdict, Verdict::Tilting);
        assert!(enumerate_tilting(&a1).contains(&s));
        for t in enumerate_tilting(&a1) {
            assert!(shift_relations(&a1, &t).holds());
        }
    }

    #[test]
    fn no_tilting_in_stable_a2() {
        let a2 = build_stable(&corpus::a2()).unwrap();
        let e = enumerate_table(&ExtTable::from_model(&a2));
        assert!(e.tilting.is_empty());
        assert!(!e.candidates.is_empty());
        for c in &e.candidates {
            assert!(c.rigid);
            for w in c.left_witness.iter().chain(&c.right_witness) {
                assert!(w.is_one_directional(), "{c:?}");
            }
        }
        for mask in 0u32..16 {
            let s: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
            assert!(!is_tilting(&a2, &s).is_tilting());
        }
    }

    #[test]
    fn cluster_category_of_a3_has_fourteen() {
        let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
        let t = ExtTable::from_model(&c.model);
        let e = enumerate_table(&t);
        assert_eq!(e.tilting.len(), 14);
        let all: Vec<Vec<usize>> = e.candidates.iter().map(|r| c.model.base.indices(&r.subcat.iter().map(String::as_str).collect::<Vec<_>>()).unwrap()).collect();
        assert!(one_sided_violations(&t, &all).is_empty());
        for s in &e.tilting {
            assert_eq!(s.len(), 3);
            assert!(shift_relations(&c.model, s).holds());
        }
    }

    #[test]
    fn enumeration_is_invariant_under_relabeling() {
        let a1 = build_stable(&corpus::a1()).unwrap();
        let t = ExtTable::from_model(&a1);
        let perm = [3, 0, 5, 1, 4, 2];
        let p = t.permuted(&perm);
        let mut mapped: Vec<Vec<usize>> = enumerate_table(&p)
            .tilting
            .iter()
            .map(|s| sorted(&s.iter().map(|&i| perm[i]).collect::<Vec<_>>()))
            .collect();
        mapped.sort();
        assert_eq!(mapped, enumerate_table(&t).tilting);
    }

    #[test]
    fn approximations() {
        let a1 = build_stable(&corpus::a1()).unwrap();
        let c = &a1.base;
        let s = idx(&a1, &["a", "a/b/a"]);
        let m = c.index("b/a").unwrap();
        let r = approximation(c, &s, m, Side::Right);
        assert!(r.verified);
        let l = approximation(c, &s, m, Side::Left);
        assert!(l.verified);
        let inside = approximation(c, &s, s[0], Side::Right);
        assert!(inside.verified && inside.map.source.contains(&s[0]));
        let empty = approximation(c, &[], m, Side::Right);
        assert!(empty.map.source.is_empty() && empty.verified);
    }

    #[test]
    fn module_and_stable_verdicts_agree() {
        let a1 = corpus::a1();
        let mc = ModCat::build(&a1, Strategy::auto(&a1)).unwrap();
        let i = |l: &str| mc.label_index(l).unwrap();
        let m = [i("a"), i("a/b/a"), i("a/b/a/b"), i("b/a/b/a")];
        let r = max1orth_module_check(&a1, &m).unwrap();
        assert!(r.module_report.is_tilting() && r.agree);
        let no_proj = max1orth_module_check(&a1, &[i("a"), i("a/b/a")]).unwrap();
        assert!(!no_proj.module_report.is_tilting());
        let a2 = corpus::a2();
        let mc2 = ModCat::build(&a2, Strategy::auto(&a2)).unwrap();
        let j = |l: &str| mc2.label_index(l).unwrap();
        let r2 = max1orth_module_check(&a2, &[j("a"), j("a/b/a"), j("b/a/b")]).unwrap();
        assert!(!r2.module_report.is_tilting() && !r2.stable_report.is_tilting() && r2.agree);
        assert_eq!(max1orth_module_check(&corpus::a3(), &[]).unwrap_err(), StableError::NotSelfInjective);
    }

    #[test]
    fn projective_orbits_tilt_the_derived_category() {
        let d = DerivedModel::build(&corpus::a3(), Window::default()).unwrap();
        let t = d.f_orbits(&d.projectives());
        let r = is_tilting_derived(&d, &t).unwrap();
        assert!(r.is_tilting(), "{r:?}");
        let partial = d.f_orbits(&d.projectives()[..2]);
        assert!(!is_tilting_derived(&d, &partial).unwrap().is_tilting());
    }
}
