//! Which of the 24 image curves pass through each 3-torsion point of A.

use superk3::abelian::Atlas;
use superk3::reference::{self, differing_cells};
use superk3::render::TorsionDocument;

fn main() {
    let atlas = Atlas::new();
    println!("A(F_2):");
    print!("{}", TorsionDocument::f2(&atlas).to_markdown());
    println!("\nA(F_4) - A(F_2):");
    print!("{}", TorsionDocument::f4(&atlas).to_markdown());

    let f2 = differing_cells(&atlas.incidence_table_f2(), &reference::f2_table());
    let f4 = differing_cells(&atlas.incidence_table_f4(), &reference::f4_table());
    println!("\ncells differing from the published tables: F_2 {f2:?}, F_4 {} cells", f4.len());
}
