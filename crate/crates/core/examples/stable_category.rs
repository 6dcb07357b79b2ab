//! The stable category of a self-injective algebra as a triangulated model.

use tiltcat::corpus;
use tiltcat::stablecat::build_stable;

fn main() {
    let m = build_stable(&corpus::a1()).unwrap();
    println!("objects: {}", m.base.objects.join(" "));
    for x in 0..m.len() {
        println!("{} [1] = {}", m.base.objects[x], m.base.objects[m.shift_obj(x)]);
    }
    println!("Ext^1 table:");
    for row in m.ext_table() {
        println!("  {:?}", row);
    }
    let serre = m.serre_verify();
    println!("Serre duality on {} pairs: {}", serre.pairs, serre.passed());
    let (pairs, bad) = m.ext_iso_mismatches().unwrap();
    println!("module Ext^1 = Hom(X, Y[1]) on {pairs} pairs: {}", bad.is_empty());

    for (x, y, v) in m.base.basis_morphisms().into_iter().filter(|(x, y, _)| x != y) {
        let t = m.cone(&m.base.single(x, y, v)).unwrap();
        let third: Vec<&str> = t.third().iter().map(|&z| m.base.objects[z].as_str()).collect();
        println!("cone of {} -> {}: {}", m.base.objects[x], m.base.objects[y], third.join(" + "));
    }
}
