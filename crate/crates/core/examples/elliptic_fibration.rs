//! Four I_6 fibers among the image curves and the 18 exceptional sections.

use superk3::abelian::Atlas;
use superk3::gkm::{derive_incidence, fibration_analysis, shioda_tate_report};
use superk3::nslattice::gram_and_discriminant;

fn main() -> superk3::Result<()> {
    let g = derive_incidence(&Atlas::new())?;
    let fib = fibration_analysis(&g);
    for h in &fib.hexagons {
        println!("I_6: {}", h.cycle.join(" - "));
    }
    println!("sections: {}, Euler number: {}", fib.sections, fib.euler_number);

    let st = shioda_tate_report(&fib, &gram_and_discriminant(&g.incidence));
    println!("rho = {}, disc = {}, |MW| = {}", st.picard_number, st.discriminant, st.mordell_weil_order);
    Ok(())
}
