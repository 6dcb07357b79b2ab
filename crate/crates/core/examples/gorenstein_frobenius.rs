//! Projectives, injectives, Gorenstein dimension and the Frobenius criteria.

use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::derivedcat::{build_cluster, Window};
use tiltcat::quotient::{build_quotient, frobenius_check, gorenstein, projectives_injectives};
use tiltcat::stablecat::build_stable;
use tiltcat::tilting::enumerate_tilting;

fn main() {
    let m = Arc::new(build_stable(&corpus::a1()).unwrap());
    let q = build_quotient(m.clone(), &m.base.indices(&["a", "a/b/a"]).unwrap(), false).unwrap();
    let pi = projectives_injectives(&q).unwrap();
    println!("A1 quotient: projectives {:?}, injectives {:?}", pi.projectives, pi.injectives);
    println!("Gorenstein dimension {:?}", gorenstein(&q, 2).unwrap().dimension);
    println!("{:?}", frobenius_check(&q).unwrap());

    let c = Arc::new(build_cluster(&corpus::a3(), Window::default(), 2).unwrap().model);
    for t in enumerate_tilting(&c) {
        let q = build_quotient(c.clone(), &t, false).unwrap();
        let g = gorenstein(&q, 2).unwrap();
        let f = frobenius_check(&q).unwrap();
        println!("C(A3) / {:?}: dimension {:?}, Frobenius {}", q.tilting_report.subcat, g.dimension, f.frobenius);
    }
}
