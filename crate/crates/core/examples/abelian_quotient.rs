//! Kernels and cokernels in the quotient of stable A1 by add{a, a/b/a}.

use std::sync::Arc;

use tiltcat::corpus;
use tiltcat::quotient::{build_quotient, verify_abelian};
use tiltcat::stablecat::build_stable;

fn main() {
    let m = Arc::new(build_stable(&corpus::a1()).unwrap());
    let s = m.base.indices(&["a", "a/b/a"]).unwrap();
    let q = build_quotient(m, &s, false).unwrap();
    println!("quotient objects: {}", q.cat.objects.join(" "));
    let cert = verify_abelian(&q, 2).unwrap();
    for c in &cert.morphisms {
        println!(
            "{} -> {}: ker {:?}, coker {:?}, mono {}, epi {}",
            c.source, c.target, c.kernel.object, c.cokernel.object, c.mono, c.epi
        );
    }
    println!("certified: {}, disagreements: {}", cert.passed(), cert.disagreements);
}
