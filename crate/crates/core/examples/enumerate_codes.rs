//! Every first type code of length 4 over F_3 + vF_3, matched against the
//! published list.

use skewcyc::catalogue::match_length4;

fn main() {
    let matched = match_length4().unwrap();
    for m in &matched {
        let d = m.code.min_distance().map(|d| d.to_string()).unwrap_or_else(|_| "-".into());
        println!(
            "{:<6} <{}> + v<{}>  dim {}  d {d}",
            m.label.unwrap_or("EXTRA"),
            m.code.fg(),
            m.code.f(),
            m.code.dim()
        );
    }
    let extra = matched.iter().filter(|m| m.label.is_none()).count();
    println!("{} codes, {extra} missing from the list", matched.len());
}
