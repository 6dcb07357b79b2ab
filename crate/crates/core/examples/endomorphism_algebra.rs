//! The endomorphism algebra of the projectives of a quotient.

use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::quotient::{build_quotient, endo_algebra};
use tiltcat::stablecat::build_stable;

fn main() {
    let m = Arc::new(build_stable(&corpus::a1()).unwrap());
    let q = build_quotient(m.clone(), &m.base.indices(&["a", "a/b/a"]).unwrap(), false).unwrap();
    let e = endo_algebra(&q).unwrap();
    println!("vertices {:?} for projectives {:?}", e.vertices, e.projectives);
    println!("arrows {:?}", e.arrows);
    println!("relations {:?}", e.relations);
    println!("mod B: {:?} indecomposables, AR quiver match {:?}", e.indecomposables, e.ar_isomorphism);
}
