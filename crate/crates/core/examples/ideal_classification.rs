//! Classify a few left ideals and decompose a first type ideal.

use skewcyc::ideal::ComponentStatus;
use skewcyc::{Automorphism, FpPoly, IdealDescriptor, SkewPoly};

fn verdict(d: &IdealDescriptor) {
    let (primary, form) = d.is_primary();
    println!(
        "{d}: {} type, maximal {}, prime {}, primary {}{}",
        d.classify_type().label(),
        d.is_maximal(),
        d.is_prime(),
        primary,
        form.map(|f| format!(" (form {})", f.label())).unwrap_or_default()
    );
}

fn main() {
    let t = Automorphism::skew(3, 2).unwrap();
    let m = t.modulus();
    let p = |s: &str| FpPoly::parse(s, m).unwrap();

    verdict(&IdealDescriptor::first_type(p("x+1"), p("1"), t).unwrap());
    verdict(&IdealDescriptor::first_type(p("x^2"), p("x"), t).unwrap());
    verdict(&IdealDescriptor::first_type(p("(x+1)^2"), p("x+1"), t).unwrap());
    verdict(&IdealDescriptor::v_ideal(t));

    let second = IdealDescriptor::principal(SkewPoly::parse("(x) + v*(1)", t).unwrap()).unwrap();
    verdict(&second);
    println!("  contains v: {}", second.contains(&SkewPoly::v(t)));
    println!("  first type ideal inside: {}", second.minimal_first_type_inside().unwrap());

    let a = IdealDescriptor::first_type(p("(x+1)^2(x+2)(x^2+1)"), p("(x+1)(x^2+1)"), t).unwrap();
    println!("decomposition of {a}:");
    for c in a.primary_decomposition_first_type().unwrap() {
        let tag = match c.status {
            ComponentStatus::Primary(f) => format!("primary, form {}", f.label()),
            ComponentStatus::NonClassified => "not classified".into(),
        };
        println!("  {}  [{tag}]", c.ideal);
    }
}
