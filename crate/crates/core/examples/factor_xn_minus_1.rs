//! Factor x^n - 1 over F_p and list its monic divisors.
//!
//!     cargo run --example factor_xn_minus_1 -- 5 6

use skewcyc::poly::factor_xn_minus_1;
use skewcyc::PrimeModulus;

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, n) = match args.as_slice() {
        [p, n] => (*p, *n as usize),
        _ => (3, 4),
    };
    let m = PrimeModulus::new(p).expect("p must be prime");
    let fac = factor_xn_minus_1(m, n);
    println!("x^{n} - 1 = {fac} over F_{p}");
    let divisors = fac.divisors();
    println!("{} monic divisors:", divisors.len());
    for d in divisors {
        println!("  {d}");
    }
}
