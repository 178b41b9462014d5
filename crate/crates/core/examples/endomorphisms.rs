//! Ring endomorphisms of F_p + vF_p by brute force.

use skewcyc::field::enumerate_endomorphisms;
use skewcyc::PrimeModulus;

fn main() {
    for p in [2, 3, 5, 7, 11] {
        let e = enumerate_endomorphisms(PrimeModulus::new(p).unwrap());
        let autos: Vec<u32> = e.iter().filter(|x| x.is_automorphism).map(|x| x.image_v).collect();
        println!("p={p}: {} endomorphisms, automorphisms v -> yv for y in {autos:?}", e.len());
    }
}
