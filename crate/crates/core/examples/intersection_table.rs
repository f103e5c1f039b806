//! Pairings of the eight base curves and the published table beside them.

use superk3::nslattice::{curve_class, intersection_table};
use superk3::quatorder::designated;
use superk3::reference::{differing_cells, INTERSECTION_TABLE};
use superk3::render::IntersectionDocument;
use superk3::CurveName;

fn main() {
    let sol = designated();
    for name in CurveName::base_curves() {
        let c = curve_class(name, &sol);
        println!("{name:>5}: ({}, {}, {})", c.alpha, c.beta, c.delta);
    }
    print!("{}", IntersectionDocument::new(&sol).to_markdown());

    let labels = CurveName::base_curves();
    let derived = intersection_table(&sol);
    for (i, j) in differing_cells(&derived, &INTERSECTION_TABLE) {
        if i < j {
            println!(
                "{} . {}: derived {}, published {}",
                labels[i], labels[j], derived[i][j], INTERSECTION_TABLE[i][j]
            );
        }
    }
}
