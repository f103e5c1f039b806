//! Identities among sigma, theta, F and V, checked pointwise on E(F_64).

use superk3::ecurve::{apply_expr, verify_relations, CurvePoint, EndoExpr};
use superk3::Degree;

fn main() -> superk3::Result<()> {
    for check in verify_relations() {
        let mark = if check.holds() { "holds" } else { "FAILS" };
        println!("{mark:>6}  {} ({} of {} points fail)", check.name, check.failures, check.points);
    }

    let p = CurvePoint::parse("(w,w)", Degree::F4)?;
    let pi = EndoExpr::pi();
    let two_sigma_plus_one = EndoExpr::Sigma.scale(2) + EndoExpr::Id;
    println!("{pi} at {p}: {}", apply_expr(&pi, p));
    println!("{two_sigma_plus_one} at {p}: {}", apply_expr(&two_sigma_plus_one, p));
    Ok(())
}
