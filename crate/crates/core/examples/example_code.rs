//! The length-4 code <(x+2)(x^2+1)> + v<x+2> over F_3 + vF_3: matrices,
//! distance, encoding and decoding.

use skewcyc::catalogue::{example_code, CLAIMED_EXAMPLE_DISTANCE, CLAIMED_EXAMPLE_H2};
use skewcyc::code::Codeword;
use skewcyc::linalg::mul_transpose;

fn main() {
    let code = example_code();
    let mats = code.matrices();
    println!("G1 = {:?}", mats.g1);
    println!("G2 = {:?}", mats.g2);
    println!("H1 = {:?}", mats.h1);
    println!("H2 = {:?}", mats.h2);
    let residue = mul_transpose(&mats.g2, &[CLAIMED_EXAMPLE_H2.to_vec()], code.modulus());
    println!("claimed H2 {CLAIMED_EXAMPLE_H2:?} gives G2·H2^T = {residue:?}");

    let d = code.min_distance().unwrap();
    println!("minimum distance {d} (claimed {CLAIMED_EXAMPLE_DISTANCE}), F_p weight distance {}", code.min_distance_fp().unwrap());

    let c = code.encode(&[1], &[2, 0, 1]).unwrap();
    println!("encode m1 = [1], m2 = [2, 0, 1]: {c}");
    // d = 2, so one error is detectable but not always correctable
    let mut symbols = c.symbols().to_vec();
    symbols[2] = symbols[2] + skewcyc::DualScalar::v(code.modulus());
    let received = Codeword::new(symbols);
    let out = code.decode(&received).unwrap();
    println!("received {received} -> {} with {} error(s), m1 = {:?}, m2 = {:?}", out.codeword, out.errors, out.m1, out.m2);
}
