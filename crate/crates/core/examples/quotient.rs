//! Quotients of the 5-cube by its antipodal map and of K5,5 by a 5-cycle on each side.
//!
//! cargo run --example quotient

use pentaveri::cosetgraph::{builders, quotient_graph};
use pentaveri::{GroupHandle, Permutation};

fn main() -> pentaveri::Result<()> {
    let q5 = builders::hypercube(5);
    let antipodal = Permutation::from_images((0..32).map(|v| v ^ 31).collect())?;
    let q = quotient_graph(&q5, &GroupHandle::new(vec![antipodal])?)?;
    println!("Q5 / antipodal: {} vertices, valency {:?}", q.graph.n(), q.graph.regular_valency());
    println!("  {:?}", q.diagnostics);

    let k55 = builders::complete_bipartite(5, 5);
    let rot = Permutation::parse_cycles("(1 2 3 4 5)(6 7 8 9 10)", 10)?;
    let q = quotient_graph(&k55, &GroupHandle::new(vec![rot])?)?;
    println!("K5,5 / Z5: {} vertices, valency {:?}", q.graph.n(), q.graph.regular_valency());
    println!("  {:?}", q.diagnostics);
    Ok(())
}
