use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use tiltcat::corpus;
use tiltcat::derivedcat::{build_cluster, Window};
use tiltcat::exactla::{kernel_basis, solve, vec_is_zero, Field, Mat, Scalar};
use tiltcat::tilting::{enumerate_table, ExtTable};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(5)), Just(Field::Prime(101))]
}

fn matrix(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Mat {
    let rows: Vec<Vec<Scalar>> =
        (0..rows).map(|r| (0..cols).map(|c| field.int(entries[r * cols + c])).collect()).collect();
    Mat::from_rows(field, rows, cols)
}

fn cluster_table() -> &'static ExtTable {
    static TABLE: OnceLock<ExtTable> = OnceLock::new();
    TABLE.get_or_init(|| ExtTable::from_model(&build_cluster(&corpus::a3(), Window::default(), 2).unwrap().model))
}

proptest! {
    #[test]
    fn rank_plus_nullity(field in fields(), rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-4i64..5, 36)) {
        let m = matrix(field, rows, cols, &entries);
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.vectors() {
            prop_assert!(vec_is_zero(&m.mul_vec(&v)));
        }
    }

    #[test]
    fn consistent_systems_are_solved(field in fields(), rows in 1usize..6, cols in 1usize..6,
                                     entries in prop::collection::vec(-4i64..5, 36), xs in prop::collection::vec(-3i64..4, 6)) {
        let m = matrix(field, rows, cols, &entries);
        let x: Vec<Scalar> = xs[..cols].iter().map(|&v| field.int(v)).collect();
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverses_are_two_sided(field in fields(), n in 1usize..5, entries in prop::collection::vec(-4i64..5, 25)) {
        let m = matrix(field, n, n, &entries);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Mat::identity(field, n));
                prop_assert_eq!(inv.mul(&m), Mat::identity(field, n));
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn scalars_round_trip(field in fields(), num in -1000i64..1000, den in 1i64..50) {
        prop_assume!(field.characteristic() == 0 || den % field.characteristic() as i64 != 0);
        let s = field.ratio(num, den);
        prop_assert_eq!(Scalar::decode(field, &s.encode()), Some(s));
    }

    #[test]
    fn tilting_enumeration_ignores_labelling(perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let t = cluster_table();
        let base: BTreeSet<BTreeSet<String>> = enumerate_table(t)
            .tilting
            .iter()
            .map(|s| s.iter().map(|&x| t.labels[x].clone()).collect())
            .collect();
        let p = t.permuted(&perm);
        let moved: BTreeSet<BTreeSet<String>> = enumerate_table(&p)
            .tilting
            .iter()
            .map(|s| s.iter().map(|&x| p.labels[x].clone()).collect())
            .collect();
        prop_assert_eq!(base.len(), 14);
        prop_assert_eq!(base, moved);
    }
}
