//! The ten acceptance criteria. Each test prints one `PASS`/`FAIL` line.

use std::collections::BTreeSet;
use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::derivedcat::{build_cluster, covering_check, ClusterModel, DerivedModel, Window};
use tiltcat::lincat::digraph_isomorphism;
use tiltcat::modcat::{ModCat, Strategy};
use tiltcat::quotient::{
    build_quotient, converse_checks, endo_algebra, frobenius_check, gorenstein, mono_epi_via_triangle,
    projectives_injectives, representation_count_check, tilting_correspondence, verify_abelian, QuotientModel,
};
use tiltcat::stablecat::{build_stable, TriangModel};
use tiltcat::tilting::{enumerate_table, enumerate_tilting, is_tilting, ExtTable, Verdict};

const A1_AR_GOLDEN: &str = include_str!("golden/a1_ar.dot");

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn report(n: usize, what: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => println!("PASS criterion {n}: {what}: {detail}"),
        Err(why) => {
            println!("FAIL criterion {n}: {what}: {why}");
            panic!("criterion {n} failed: {why}");
        }
    }
}

fn stable_a1() -> Arc<TriangModel> {
    Arc::new(build_stable(&corpus::a1()).unwrap())
}

fn stable_a2() -> Arc<TriangModel> {
    Arc::new(build_stable(&corpus::a2()).unwrap())
}

fn cluster_a3() -> ClusterModel {
    build_cluster(&corpus::a3(), Window::default(), 2).unwrap()
}

fn a1_quotient() -> QuotientModel {
    let m = stable_a1();
    let s = m.base.indices(&["a", "a/b/a"]).unwrap();
    build_quotient(m, &s, false).unwrap()
}

fn labelled_edges(q: &QuotientModel) -> BTreeSet<(String, String)> {
    q.cat
        .ar_quiver()
        .into_iter()
        .map(|(x, y, _)| (q.cat.objects[x].clone(), q.cat.objects[y].clone()))
        .collect()
}

fn criterion_1() -> Outcome {
    let alg = corpus::a1();
    ensure!(alg.path_basis().len() == 8 && alg.dim() == 8, "path basis has {} elements", alg.path_basis().len());
    let mc = ModCat::build(&alg, Strategy::auto(&alg)).map_err(|e| e.to_string())?;
    ensure!(mc.len() == 8, "{} indecomposables", mc.len());
    let dot = mc.skeleton().ar_quiver_dot("A1");
    ensure!(dot == A1_AR_GOLDEN, "AR quiver differs from the golden file:\n{dot}");
    let m = stable_a1();
    ensure!(m.len() == 6, "stable model has {} objects", m.len());
    let s = m.base.indices(&["a", "a/b/a"]).unwrap();
    let r = is_tilting(&m, &s);
    ensure!(r.is_tilting(), "add{{a, a/b/a}} verdict {:?}", r.verdict);
    Ok("dim 8, 8 indecomposables, golden AR quiver, 6 stable objects, add{a, a/b/a} tilting".into())
}

fn criterion_2() -> Outcome {
    let q = a1_quotient();
    ensure!(q.cat.len() == 4, "{} quotient objects", q.cat.len());
    // The quotient figure: an oriented 4-cycle.
    let figure: BTreeSet<(String, String)> = [("b", "a/b"), ("a/b", "b/a/b"), ("b/a/b", "b/a"), ("b/a", "b")]
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    ensure!(labelled_edges(&q) == figure, "AR quiver {:?}", labelled_edges(&q));
    let cycle = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)];
    ensure!(digraph_isomorphism(q.cat.len(), &q.cat.ar_quiver(), 4, &cycle).is_some(), "not a 4-cycle");

    let e = endo_algebra(&q).map_err(|e| e.to_string())?;
    ensure!(e.vertices.len() == 2 && e.arrows.len() == 2, "quiver {:?}", e.arrows);
    let (alpha, beta) = (&e.arrows[0], &e.arrows[1]);
    ensure!(alpha.1 == beta.2 && alpha.2 == beta.1 && alpha.1 != alpha.2, "arrows {:?} do not form a 2-cycle", e.arrows);
    let rels: BTreeSet<Vec<String>> = e.relations.iter().cloned().collect();
    let expected: BTreeSet<Vec<String>> =
        [vec![alpha.0.clone(), beta.0.clone()], vec![beta.0.clone(), alpha.0.clone()]].into_iter().collect();
    ensure!(rels == expected, "relations {:?}", e.relations);
    ensure!(e.indecomposables == Some(4), "mod B has {:?} indecomposables", e.indecomposables);
    ensure!(e.ar_isomorphism.is_some(), "AR quivers of the quotient and mod B differ");
    Ok(format!("4 objects, 4-cycle AR quiver, End = 2-cycle with relations {:?}, mod B matches", e.relations))
}

fn criterion_3() -> Outcome {
    let q = a1_quotient();
    let cert = verify_abelian(&q, 2).map_err(|e| e.to_string())?;
    let basis = q.cat.basis_morphisms().len();
    ensure!(cert.morphisms.len() == basis, "{} certificates for {basis} basis morphisms", cert.morphisms.len());
    for c in &cert.morphisms {
        ensure!(
            c.kernel.method == "triangle" && c.cokernel.method == "triangle",
            "{} -> {} built by {}/{}",
            c.source,
            c.target,
            c.kernel.method,
            c.cokernel.method
        );
        ensure!(c.passed(), "{} -> {}: certificate failed", c.source, c.target);
    }
    ensure!(cert.disagreements == 0, "{} disagreements", cert.disagreements);
    Ok(format!("{basis} basis morphisms, kernels and cokernels by triangles, 0 disagreements"))
}

fn criterion_4() -> Outcome {
    let q = a1_quotient();
    let g = gorenstein(&q, 2).map_err(|e| e.to_string())?;
    ensure!(g.dimension == Some(0), "dimension {:?}", g.dimension);
    let pi = projectives_injectives(&q).map_err(|e| e.to_string())?;
    let expected = vec!["b".to_string(), "b/a/b".to_string()];
    ensure!(pi.projectives == expected, "projectives {:?}", pi.projectives);
    ensure!(pi.injectives == expected, "injectives {:?}", pi.injectives);
    let f = frobenius_check(&q).map_err(|e| e.to_string())?;
    ensure!(f.projectives_are_injectives && f.s_equals_s2 && f.tau_shift_fixes_s && f.frobenius, "{f:?}");
    Ok("dimension 0, projectives = injectives = {b, b/a/b}, Frobenius criteria agree".into())
}

fn criterion_5() -> Outcome {
    let m = stable_a2();
    ensure!(enumerate_tilting(&m).is_empty(), "stable A2 has a tilting subcategory");
    let e = enumerate_table(&ExtTable::from_model(&m));
    ensure!(e.tilting.is_empty(), "table enumeration found {:?}", e.tilting);
    ensure!(!e.candidates.is_empty(), "no maximal rigid candidates");
    for c in &e.candidates {
        ensure!(c.rigid && c.verdict == Verdict::RigidNotMaximal, "{:?}: {:?}", c.subcat, c.verdict);
        let witnesses: Vec<_> = c.left_witness.iter().chain(&c.right_witness).collect();
        ensure!(!witnesses.is_empty(), "{:?} has no witness", c.subcat);
        for w in witnesses {
            ensure!(w.is_one_directional(), "{:?}: witness {} is not one-directional", c.subcat, w.object);
        }
    }
    Ok(format!("no tilting subcategory, {} candidates each with one-directional witnesses", e.candidates.len()))
}

fn criterion_6() -> Outcome {
    let m = stable_a2();
    let s = m.base.indices(&["a"]).unwrap();
    let q = build_quotient(m.clone(), &s, true).map_err(|e| e.to_string())?;
    ensure!(q.cat.len() == 3, "{} quotient objects", q.cat.len());
    let cert = verify_abelian(&q, 2).map_err(|e| e.to_string())?;
    ensure!(cert.mult_bound == 2 && cert.passed(), "not certified with bound 2");
    let pi = projectives_injectives(&q).map_err(|e| e.to_string())?;
    ensure!(pi.projectives.iter().any(|p| p != "b/a"), "projectives {:?} lie in T[-1]", pi.projectives);
    let c = &m.base;
    let arrow = |x: &str, y: &str| {
        let (x, y) = (c.index(x).unwrap(), c.index(y).unwrap());
        mono_epi_via_triangle(&q, &c.single(x, y, c.unit(x, y, 0))).map_err(|e| e.to_string())
    };
    let down = arrow("b/a", "b")?;
    let up = arrow("b", "a/b")?;
    ensure!(down == (true, false), "b/a -> b tests as {down:?}");
    ensure!(up == (false, true), "b -> a/b tests as {up:?}");
    Ok(format!("3 objects, abelian with bound 2, projectives {:?}, b/a -> b mono, b -> a/b epi", pi.projectives))
}

fn criterion_7() -> Outcome {
    for (name, m, pairs) in [("A1", stable_a1(), 36), ("A2", stable_a2(), 16)] {
        let (n, bad) = m.ext_iso_mismatches().ok_or("not a stable module category")?;
        ensure!(n == pairs, "{name}: {n} pairs");
        ensure!(bad.is_empty(), "{name}: mismatches {bad:?}");
    }
    Ok("module Ext^1 = stable Hom(X, Y[1]) on 36 + 16 pairs".into())
}

fn criterion_8() -> Outcome {
    let c = cluster_a3();
    ensure!(c.model.len() == 9, "{} cluster objects", c.model.len());
    let m = Arc::new(c.model.clone());
    let tilts = enumerate_tilting(&m);
    ensure!(tilts.len() == 14, "{} tilting subcategories", tilts.len());
    for t in &tilts {
        let q = build_quotient(m.clone(), t, false).map_err(|e| e.to_string())?;
        let g = gorenstein(&q, 2).map_err(|e| e.to_string())?;
        ensure!(g.dimension.is_some_and(|d| d <= 1), "{:?}: dimension {:?}", q.tilting_report.subcat, g.dimension);
        let r = tilting_correspondence(&c, t).map_err(|e| e.to_string())?;
        ensure!(r.holds(), "{:?}: {r:?}", r.cluster_objects);
    }
    let d = &c.derived;
    let t = d.f_orbits(&d.projectives());
    let cov = covering_check(&c, &t).map_err(|e| e.to_string())?;
    ensure!(cov.passed() && cov.pairs_checked > 0, "{cov:?}");
    Ok(format!(
        "9 objects, 14 tilts with Gorenstein dimension <= 1 and the correspondence, covering on {} pairs",
        cov.pairs_checked
    ))
}

fn criterion_9() -> Outcome {
    let a2 = stable_a2();
    let r = converse_checks(a2.clone(), &a2.base.indices(&["a"]).unwrap(), 2).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "A2 add(a): {r:?}");
    let mut checked = 1;
    let a1 = stable_a1();
    let cluster = Arc::new(cluster_a3().model);
    for m in [a1, cluster] {
        for t in enumerate_tilting(&m) {
            let r = converse_checks(m.clone(), &t, 2).map_err(|e| e.to_string())?;
            ensure!(r.passed(), "{r:?}");
            checked += 1;
        }
    }
    Ok(format!("{checked} subcategories pass the converse checks"))
}

fn criterion_10() -> Outcome {
    let cluster = cluster_a3();
    let models = [("A1", stable_a1()), ("A2", stable_a2()), ("C(A3)", Arc::new(cluster.model.clone()))];
    for (name, m) in &models {
        let s = m.serre_verify();
        ensure!(s.passed(), "{name}: Serre violations {:?}", s.violations);
        let bad = m.monos_split();
        ensure!(bad.is_empty(), "{name}: non-split monos {bad:?}");
    }
    for w in [Window::default(), Window::new(-6, 6)] {
        let d = DerivedModel::build(&corpus::a3(), w).map_err(|e| e.to_string())?;
        let s = d.serre_verify();
        ensure!(s.passed(), "D(A3) on {w:?}: Serre violations {:?}", s.violations);
    }

    let mut counted = 0;
    for (name, m) in &models {
        let tilts = enumerate_tilting(m);
        for t in &tilts {
            let q = build_quotient(m.clone(), t, false).map_err(|e| e.to_string())?;
            ensure!(q.cat.len() + t.len() == m.len(), "{name}: object count off for {:?}", q.tilting_report.subcat);
            counted += 1;
        }
        if let [t1, t2, ..] = tilts.as_slice() {
            let r = representation_count_check(m.clone(), t1, t2).map_err(|e| e.to_string())?;
            ensure!(r.passed(), "{name}: {r:?}");
        }
    }

    let wide = build_cluster(&corpus::a3(), Window::new(-6, 6), 2).map_err(|e| e.to_string())?;
    let (a, b) = (&cluster.model, &wide.model);
    ensure!(a.base.objects == b.base.objects, "objects change with the window");
    ensure!(a.base.hom_dims == b.base.hom_dims, "hom dimensions change with the window");
    ensure!(a.ext_table() == b.ext_table(), "Ext table changes with the window");
    ensure!(enumerate_tilting(a) == enumerate_tilting(b), "tilting subcategories change with the window");
    Ok(format!("Serre, split monos, object counts on {counted} quotients, C(A3) stable from [-4,4] to [-6,6]"))
}

#[test]
fn criterion_01_a1_pipeline() {
    report(1, "A1 pipeline", criterion_1());
}

#[test]
fn criterion_02_a1_quotient() {
    report(2, "A1 quotient", criterion_2());
}

#[test]
fn criterion_03_kernels_and_cokernels() {
    report(3, "kernels and cokernels", criterion_3());
}

#[test]
fn criterion_04_gorenstein_frobenius() {
    report(4, "Gorenstein and Frobenius", criterion_4());
}

#[test]
fn criterion_05_a2_has_no_tilting() {
    report(5, "A2 negative result", criterion_5());
}

#[test]
fn criterion_06_a2_override_quotient() {
    report(6, "A2 positive result", criterion_6());
}

#[test]
fn criterion_07_ext_isomorphism() {
    report(7, "Ext isomorphism", criterion_7());
}

#[test]
fn criterion_08_derived_and_cluster() {
    report(8, "derived and cluster", criterion_8());
}

#[test]
fn criterion_09_converse_suite() {
    report(9, "converse suite", criterion_9());
}

#[test]
fn criterion_10_property_regressions() {
    report(10, "property regressions", criterion_10());
}
