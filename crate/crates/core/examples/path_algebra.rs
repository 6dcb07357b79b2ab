//! Bound quiver algebras: path bases and basic properties.

use tiltcat::corpus;

fn main() {
    for alg in [corpus::a1(), corpus::a2(), corpus::a3()] {
        let paths: Vec<String> = alg.path_basis().iter().map(|p| p.display(&alg.quiver)).collect();
        println!(
            "{}: dim {}, hereditary {}, self-injective {}",
            alg.name,
            alg.dim(),
            alg.is_hereditary(),
            alg.is_selfinjective()
        );
        println!("  basis {}", paths.join(", "));
    }
}
