//! When the order of θ does not divide n: code counts and the
//! quasi-cyclic index.

use skewcyc::code::{count_codes, count_codes_by_enumeration, quasi_cyclic_index};
use skewcyc::Automorphism;

fn main() {
    for (p, a, n) in [(3, 2, 3), (3, 2, 5), (5, 2, 3), (5, 2, 6), (7, 3, 4)] {
        let t = Automorphism::skew(p, a).unwrap();
        let formula = count_codes(t, n).unwrap();
        let oracle = count_codes_by_enumeration(t, n).unwrap();
        let d = quasi_cyclic_index(t, n, 10, 1).unwrap();
        println!("p={p} alpha={a} (e={}) n={n}: formula {formula}, brute force {oracle}, index {d}", t.order());
    }
}
