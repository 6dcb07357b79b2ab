//! Tilting verdicts with witnesses: stable A1 has tilting subcategories,
//! stable A2 has none.

use tiltcat::corpus;
use tiltcat::stablecat::build_stable;
use tiltcat::tilting::{enumerate_table, is_tilting, ExtTable};

fn main() {
    let a1 = build_stable(&corpus::a1()).unwrap();
    let s = a1.base.indices(&["a", "a/b/a"]).unwrap();
    let r = is_tilting(&a1, &s);
    println!("A1 add{{a, a/b/a}}: {:?}", r.verdict);

    let a2 = build_stable(&corpus::a2()).unwrap();
    let e = enumerate_table(&ExtTable::from_model(&a2));
    println!("A2: {} tilting subcategories", e.tilting.len());
    for c in &e.candidates {
        println!("  candidate {:?}: {:?}", c.subcat, c.verdict);
        for w in c.left_witness.iter().chain(&c.right_witness) {
            println!("    witness {} one-directional: {}", w.object, w.is_one_directional());
        }
    }
}
