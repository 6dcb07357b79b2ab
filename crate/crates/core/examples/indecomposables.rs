//! Indecomposable modules and the Auslander-Reiten quiver in DOT.

use tiltcat::corpus;
use tiltcat::modcat::{ModCat, Strategy};

fn main() {
    let alg = corpus::a1();
    let mc = ModCat::build(&alg, Strategy::auto(&alg)).unwrap();
    println!("{} indecomposables: {}", mc.len(), mc.labels.join(" "));
    let tau = mc.tau_map();
    for (i, t) in tau.iter().enumerate() {
        if let Some(t) = t {
            println!("tau {} = {}", mc.labels[i], mc.labels[*t]);
        }
    }
    print!("{}", mc.skeleton().ar_quiver_dot("A1"));
}
