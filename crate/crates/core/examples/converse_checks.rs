//! A rigid but not tilting subcategory with an abelian quotient.

use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::quotient::{build_quotient, converse_checks, mono_epi_via_triangle, projectives_injectives};
use tiltcat::stablecat::build_stable;

fn main() {
    let m = Arc::new(build_stable(&corpus::a2()).unwrap());
    let s = m.base.indices(&["a"]).unwrap();
    let r = converse_checks(m.clone(), &s, 2).unwrap();
    println!("{r:#?}");

    let q = build_quotient(m.clone(), &s, true).unwrap();
    println!("projectives {:?}", projectives_injectives(&q).unwrap().projectives);
    let c = &m.base;
    let (ba, b) = (c.index("b/a").unwrap(), c.index("b").unwrap());
    let f = c.single(ba, b, c.unit(ba, b, 0));
    println!("b/a -> b (mono, epi) = {:?}", mono_epi_via_triangle(&q, &f).unwrap());
}
