//! The cluster category of A3 and its 14 tilting subcategories.

use tiltcat::corpus;
use tiltcat::derivedcat::{build_cluster, Window};
use tiltcat::tilting::enumerate_tilting;

fn main() {
    let c = build_cluster(&corpus::a3(), Window::default(), 2).unwrap();
    let m = &c.model;
    println!("{} objects: {}", m.len(), m.base.objects.join(" "));
    println!("window used: {:?}", c.derived.window);
    let tilts = enumerate_tilting(m);
    println!("{} tilting subcategories", tilts.len());
    for t in tilts {
        let labels: Vec<&str> = t.iter().map(|&x| m.base.objects[x].as_str()).collect();
        println!("  {{{}}}", labels.join(", "));
    }
}
