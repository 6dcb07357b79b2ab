//! The derived category of a path algebra of type A on a degree window.

use tiltcat::corpus;
use tiltcat::derivedcat::{DerivedModel, Window};

fn main() {
    let d = DerivedModel::build(&corpus::a3(), Window::new(-2, 2)).unwrap();
    println!("{} objects in degrees -2..2", d.len());
    for p in d.projectives() {
        println!(
            "{}: tau = {}, [1] = {}, F = {}",
            d.label(p),
            d.label(d.tau(p)),
            d.label(d.shift(p, 1)),
            d.label(d.f_pow(p, 1))
        );
    }
    let x = d.projectives()[0];
    let y = d.projectives()[2];
    println!("dim Hom({}, {}) = {:?}", d.label(x), d.label(y), d.hom_dim(x, y));
    println!("hom mismatches against modules: {}", d.hom_dim_mismatches().len());
}
