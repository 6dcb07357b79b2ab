use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::derivedcat::{build_cluster, Window};
use tiltcat::quotient::{
    build_quotient, build_quotient_windowed, gorenstein_windowed, line_with_radical_square_zero,
    tilting_correspondence_from_derived, verify_abelian, QuotientError,
};
use tiltcat::stablecat::build_stable;

#[test]
fn a2_modulo_b_over_a() {
    let m = Arc::new(build_stable(&corpus::a2()).unwrap());
    let s = m.base.indices(&["b/a"]).unwrap();
    assert!(build_quotient(m.clone(), &s, false).is_err());
    let q = build_quotient(m, &s, true).unwrap();
    match verify_abelian(&q, 2) {
        Ok(cert) => assert!(cert.passed()),
        Err(e) => assert!(matches!(e, QuotientError::Inconclusive(_)), "{e}"),
    }
}

#[test]
fn windowed_quotients_of_a3() {
    let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
    let d = c.derived.clone();
    let t = d.f_orbits(&d.projectives());
    assert!(tilting_correspondence_from_derived(&c, &t).unwrap().holds());
    let q = build_quotient_windowed(d.clone(), &t).unwrap();
    let comps = gorenstein_windowed(&q, 2).unwrap();
    assert!(!comps.is_empty());
    for g in &comps {
        assert_eq!(g.objects.len(), 6);
        assert!(g.dimension.is_some_and(|n| n <= 1));
    }

    let mc = &d.modcat;
    let seeds = [
        d.projective(mc.alg.quiver.vertex_index("c").unwrap()),
        d.module_object(mc.label_index("a").unwrap(), 0),
        d.projective(mc.alg.quiver.vertex_index("a").unwrap()),
    ];
    let t2 = d.f_orbits(&seeds);
    assert!(tilting_correspondence_from_derived(&c, &t2).unwrap().holds());
    let q2 = build_quotient_windowed(d.clone(), &t2).unwrap();
    assert!(line_with_radical_square_zero(&q2).unwrap().passed());
}

#[test]
fn partial_orbits_are_rejected() {
    let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
    let d = c.derived.clone();
    let one = vec![d.index(d.projectives()[0]).unwrap()];
    assert!(build_quotient_windowed(d, &one).is_err());
}
