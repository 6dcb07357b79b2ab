//! Kernels, images and linear systems over Q and a prime field.

use tiltcat::exactla::{kernel_basis, solve, Field, Mat};

fn main() {
    let q = Field::Rationals;
    let m = Mat::from_ints(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank = {}", m.rank());
    for v in kernel_basis(&m).vectors() {
        println!("kernel vector {:?}", v);
    }
    let b = vec![q.int(6), q.int(12), q.int(2)];
    let x = solve(&m, &b).unwrap().expect("consistent");
    println!("solution {:?}", x);

    let f5 = Field::prime(5).unwrap();
    let n = Mat::from_ints(f5, &[&[1, 2], &[3, 1]]);
    println!("over F5: rank {}, inverse {:?}", n.rank(), n.inverse().map(|i| i.entries().to_vec()));
}
