//! Random and burst symbol errors against a few length-4 codes.

use skewcyc::code::{enumerate_first_type, simulate};
use skewcyc::Automorphism;

fn main() {
    let t = Automorphism::skew(3, 2).unwrap();
    for code in enumerate_first_type(t, 4).unwrap() {
        let Ok(d) = code.min_distance() else { continue };
        if code.dim() < 2 || d < 2 {
            continue;
        }
        for burst in [false, true] {
            for k in 0..=2 {
                let r = simulate(&code, k, 500, burst, 7).unwrap();
                println!(
                    "<{}> + v<{}> d={d} k={k} {}: {:.3}",
                    code.fg(),
                    code.f(),
                    if burst { "burst " } else { "random" },
                    r.rate()
                );
            }
        }
    }
}
