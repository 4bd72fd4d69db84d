//! Automorphism group orders of small pentavalent graphs.
//!
//! cargo run --release --example graph_automorphisms

use pentaveri::cosetgraph::builders;
use pentaveri::graphauto::{automorphism_group, AutOptions};

fn main() -> pentaveri::Result<()> {
    let graphs = [
        ("K6", builders::complete(6)),
        ("K5,5", builders::complete_bipartite(5, 5)),
        ("icosahedron", builders::icosahedron()),
        ("K6,6 - 6K2", builders::complete_bipartite_minus_matching(6)),
        ("Q5", builders::hypercube(5)),
    ];
    for (name, g) in graphs {
        let aut = automorphism_group(&g, None, &AutOptions::default())?;
        println!("{name:<12} {}  level orbits {:?}", aut.summary(), aut.level_orbits);
    }
    Ok(())
}
