//! The configuration, PG(2,4) and the line model in P2 x P2 are one graph.

use superk3::abelian::Atlas;
use superk3::gkm::derive_incidence;
use superk3::models::{graph_iso, involution_swap, p2p2_lines, pg24, BipartiteGraph};

fn main() -> superk3::Result<()> {
    let gkm = BipartiteGraph::from_config(&derive_incidence(&Atlas::new())?);
    let pg = pg24();
    let pp = p2p2_lines();
    for (a, x, b, y) in [("gkm", &gkm, "pg24", &pg), ("gkm", &gkm, "p2p2", &pp), ("pg24", &pg, "p2p2", &pp)] {
        match graph_iso(x, y) {
            Some(iso) => {
                let pairs = iso.pairs(x, y);
                println!("{a} ~ {b}: {} -> {}, {} -> {}, ...", pairs[0].0, pairs[0].1, pairs[1].0, pairs[1].1);
            }
            None => println!("{a} and {b} differ"),
        }
    }
    let swap = involution_swap(&pp);
    println!("swap exchanges families: {}, fixed lines: {}", swap.exchanges_families, swap.fixed_lines);
    Ok(())
}
