//! The 42 rational curves and their incidence graph.

use superk3::abelian::Atlas;
use superk3::gkm::{closed_form_incidence, derive_incidence, verify_config, ConfigCurve};

fn main() -> superk3::Result<()> {
    let g = derive_incidence(&Atlas::new())?;
    let report = verify_config(&g);
    println!(
        "{} + {} curves, degrees {:?}, {} incidences",
        report.first_family, report.second_family, report.row_sums, report.total_incidences
    );

    let e0: ConfigCurve = "E0".parse()?;
    let names: Vec<String> = g.neighbors(e0).iter().map(ToString::to_string).collect();
    println!("E0 meets {}", names.join(", "));

    for (a, b, derived, rules) in g.differences(&closed_form_incidence()) {
        println!("{a} . {b}: derived {derived}, closed form {rules}");
    }
    Ok(())
}
