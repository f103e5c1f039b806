//! Gram matrix of the 42 curves: rank, Smith invariants, discriminant.

use superk3::abelian::Atlas;
use superk3::quatorder::designated;
use superk3::render::LatticeDocument;

fn main() -> superk3::Result<()> {
    let doc = LatticeDocument::new(&designated(), &Atlas::new())?;
    print!("{}", doc.to_text());
    if doc.discriminant.abs() == 4 {
        println!("Artin invariant 1");
    }
    Ok(())
}
