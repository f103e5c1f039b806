//! End(E) as the Hurwitz order: solving for sigma, theta and F.

use superk3::ecurve::EndoExpr;
use superk3::quatorder::{solve_generators, units};

fn main() -> superk3::Result<()> {
    println!("{} Hurwitz units", units().len());
    let sols = solve_generators()?;
    println!("{} generator solutions", sols.len());
    let sol = sols[0];
    println!("designated: {sol}");
    for (name, ok) in sol.relations() {
        println!("  {ok:>5}  {name}");
    }
    println!("pi = {} with Nrd {}", sol.pi(), sol.pi().nrd());
    println!("2sigma + 1 = {}", sol.two_sigma_plus_one());

    let e = EndoExpr::Frob * EndoExpr::Sigma - EndoExpr::Theta;
    println!("{e} -> {}", sol.endo_to_quat(&e));
    Ok(())
}
