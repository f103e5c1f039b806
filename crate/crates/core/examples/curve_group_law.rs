//! The group law on `y^2 + y = x^3` and its rational points.

use superk3::ecurve::{self, CurvePoint};
use superk3::Degree;

fn main() -> superk3::Result<()> {
    for d in Degree::ALL {
        println!("#E({d}) = {}", ecurve::enumerate(d).len());
    }

    let p = CurvePoint::parse("(1,w)", Degree::F4)?;
    let q = CurvePoint::parse("(0,1)", Degree::F4)?;
    println!("{p} + {q} = {}", p + q);
    println!("2 * {p} = {}", p.double());
    println!("3 * {p} = {}", p.scalar_mul(3));
    println!("order of {p}: {:?}", p.order(100));

    let orders: Vec<u64> = ecurve::enumerate(Degree::F64)
        .into_iter()
        .filter_map(|r| r.order(100))
        .collect();
    let max = orders.iter().max().copied().unwrap_or(1);
    println!("largest point order in E(F_64): {max}");
    Ok(())
}
