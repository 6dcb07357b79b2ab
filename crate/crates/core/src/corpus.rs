//! The built-in example algebras.
//!
//! * `A1`: the two-cycle `alpha: a -> b`, `beta: b -> a` modulo all paths of
//!   length four.
//! * `A2`: the same quiver modulo all paths of length three.
//! * `A3`: the path algebra of `a -> b -> c`.

use std::sync::Arc;

use crate::exactla::Field;
use crate::modcat::Alg;
use crate::quiver::BoundQuiverAlgebra;

pub const A1_TOML: &str = r#"name = "A1"
field = "Q"
vertices = ["a", "b"]
relations = [["alpha", "beta", "alpha", "beta"], ["beta", "alpha", "beta", "alpha"]]

[[arrows]]
label = "alpha"
source = "a"
target = "b"

[[arrows]]
label = "beta"
source = "b"
target = "a"

[expect]
dim = 8
indecomposables = 8
selfinjective = true
"#;

pub const A2_TOML: &str = r#"name = "A2"
field = "Q"
vertices = ["a", "b"]
relations = [["alpha", "beta", "alpha"], ["beta", "alpha", "beta"]]

[[arrows]]
label = "alpha"
source = "a"
target = "b"

[[arrows]]
label = "beta"
source = "b"
target = "a"

[expect]
dim = 6
indecomposables = 6
selfinjective = true
"#;

pub const A3_TOML: &str = r#"name = "A3"
field = "Q"
vertices = ["a", "b", "c"]
relations = []

[[arrows]]
label = "alpha"
source = "a"
target = "b"

[[arrows]]
label = "beta"
source = "b"
target = "c"

[expect]
dim = 6
indecomposables = 6
selfinjective = false
"#;

/// `(name, definition)` for every corpus entry.
pub const ALL: [(&str, &str); 3] = [("A1", A1_TOML), ("A2", A2_TOML), ("A3", A3_TOML)];

fn two_cycle(name: &str, len: usize, field: Field) -> Alg {
    let word = |start: usize| -> Vec<&str> {
        (0..len)
            .map(|i| if (start + i).is_multiple_of(2) { "alpha" } else { "beta" })
            .collect()
    };
    let (r1, r2) = (word(0), word(1));
    Arc::new(
        BoundQuiverAlgebra::from_labels(
            name,
            field,
            &["a", "b"],
            &[("alpha", "a", "b"), ("beta", "b", "a")],
            &[&r1, &r2],
        )
        .expect("corpus algebra"),
    )
}

pub fn a1() -> Alg {
    a1_over(Field::Rationals)
}

pub fn a1_over(field: Field) -> Alg {
    two_cycle("A1", 4, field)
}

pub fn a2() -> Alg {
    a2_over(Field::Rationals)
}

pub fn a2_over(field: Field) -> Alg {
    two_cycle("A2", 3, field)
}

pub fn a3() -> Alg {
    a3_over(Field::Rationals)
}

pub fn a3_over(field: Field) -> Alg {
    Arc::new(
        BoundQuiverAlgebra::from_labels(
            "A3",
            field,
            &["a", "b", "c"],
            &[("alpha", "a", "b"), ("beta", "b", "c")],
            &[],
        )
        .expect("corpus algebra"),
    )
}
