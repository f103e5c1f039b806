//! The degree-3 map (w, z) from E to itself and the translation it kills.

use superk3::ecurve::{self, quotient_map, BasicMap, CurvePoint};
use superk3::Degree;

fn main() {
    let p1 = CurvePoint::p1(Degree::F64);
    let mut fibers = std::collections::BTreeMap::new();
    for p in ecurve::enumerate(Degree::F64) {
        match quotient_map(p) {
            Ok((w, z)) => {
                assert_eq!(z.square() + z, w.square() * w);
                fibers.entry((w, z)).or_insert_with(Vec::new).push(p);
            }
            Err(e) => println!("{p}: {e}"),
        }
        assert_eq!(BasicMap::Tau.apply(p).embed(Degree::F64).ok(), Some(p + p1));
    }
    println!("{} image points, each with 3 preimages", fibers.len());
    if let Some(((w, z), pre)) = fibers.iter().next() {
        let pre: Vec<String> = pre.iter().map(ToString::to_string).collect();
        println!("({w},{z}) <- {}", pre.join(", "));
    }
}
