//! Smith normal form, integer solutions and lattice membership.

use linkhom::intlin::{lattice_reduce, smith_normal_form, solve_diophantine, IntMatrix};
use linkhom::Int;

fn main() {
    let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("elementary divisors {:?}, rank {}", snf.elementary_divisors(), snf.rank());
    assert_eq!(snf.p.mul(&a).unwrap().mul(&snf.q).unwrap(), snf.d);

    for rhs in [[2, -6, 10], [6, 6, 6], [1, 0, 0]] {
        let b: Vec<Int> = rhs.iter().map(|&x| Int::from(x)).collect();
        match solve_diophantine(&a, &b).unwrap() {
            Some(sol) => println!("A x = {rhs:?}: x = {:?} + span{:?}", sol.particular, sol.kernel_basis),
            None => println!("A x = {rhs:?}: no integer solution"),
        }
    }

    let v: Vec<Int> = [7, 1, 3].map(Int::from).to_vec();
    let reduced = lattice_reduce(&v, &a.columns()).unwrap();
    println!("{v:?} reduces to {:?}, in lattice: {}", reduced.representative, reduced.in_lattice);
}
