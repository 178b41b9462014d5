//! Arithmetic in (F_3 + vF_3)[x; θ] with θ(v) = 2v.

use skewcyc::{Automorphism, DualScalar, SkewPoly};

fn main() {
    let theta = Automorphism::skew(3, 2).unwrap();
    let m = theta.modulus();
    let x = SkewPoly::x(theta);
    let v = SkewPoly::v(theta);

    // x and v do not commute: x·v = θ(v)·x = 2v·x
    println!("x*v = {}", &x * &v);
    println!("v*x = {}", &v * &x);

    let f = SkewPoly::parse("(x^3 + 2*x + 1) + v*(x + 1)", theta).unwrap();
    let g = SkewPoly::parse("(x + 2) + v*(1)", theta).unwrap();
    let (q, r) = f.right_divmod(&g).unwrap();
    println!("{f} = ({q})·({g}) + {r}");
    assert_eq!(&(&q * &g) + &r, f);

    let g1 = SkewPoly::from_unit_part(skewcyc::FpPoly::parse("x^2 + x + 2", m).unwrap(), theta);
    println!("v·g = g'·v with g' = {}", g1.partaker());

    let u = SkewPoly::term(DualScalar::parse("2+v", m).unwrap(), 0, theta)
        + SkewPoly::parse("(0) + v*(x^2)", theta).unwrap();
    let inv = u.inverse().unwrap();
    println!("({u})^-1 = {inv}");

    let xe = SkewPoly::parse("x^2", theta).unwrap();
    println!("x^2 central: {}, x central: {}", xe.in_center(), x.in_center());
}
