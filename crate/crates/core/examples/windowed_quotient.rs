//! Quotients of the derived category of A3 by F-stable tilting subcategories.

use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::derivedcat::{build_cluster, covering_check, Window};
use tiltcat::quotient::{build_quotient_windowed, gorenstein_windowed, line_with_radical_square_zero, tilting_correspondence_from_derived};

fn main() {
    let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
    let d = c.derived.clone();
    let t = d.f_orbits(&d.projectives());
    println!("covering: {:?}", covering_check(&c, &t).unwrap().passed());
    println!("correspondence: {}", tilting_correspondence_from_derived(&c, &t).unwrap().holds());
    let q = build_quotient_windowed(d.clone(), &t).unwrap();
    for g in gorenstein_windowed(&q, 2).unwrap() {
        println!("component {:?}: dimension {:?}", g.objects, g.dimension);
    }

    let mc = &d.modcat;
    let seeds = [
        d.projective(mc.alg.quiver.vertex_index("c").unwrap()),
        d.module_object(mc.label_index("a").unwrap(), 0),
        d.projective(mc.alg.quiver.vertex_index("a").unwrap()),
    ];
    let q2 = build_quotient_windowed(Arc::clone(&d), &d.f_orbits(&seeds)).unwrap();
    let line = line_with_radical_square_zero(&q2).unwrap();
    println!("projectives {:?}", line.projectives);
    println!("line {}, radical square zero {}", line.is_line, line.radical_square_zero);
}
