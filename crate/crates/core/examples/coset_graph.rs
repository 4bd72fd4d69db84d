//! Builds `Cos(A5, D5, D5 g D5)` for a feasible `g` and recognises it as K6.
//!
//! cargo run --example coset_graph

use pentaveri::cosetgraph::{builders, coset_graph};
use pentaveri::feasibility::{search_feasible, SearchConfig};
use pentaveri::graphauto;
use pentaveri::{GroupHandle, Permutation};

fn main() -> pentaveri::Result<()> {
    let a5 = GroupHandle::alternating(5)?;
    let d5 = GroupHandle::new(vec![
        Permutation::parse_cycles("(1 2 3 4 5)", 5)?,
        Permutation::parse_cycles("(2 5)(3 4)", 5)?,
    ])?;
    let found = search_feasible(&a5, &d5, &SearchConfig::default())?;
    println!("{} feasible elements", found.len());
    let g = &found[0].g;
    let (table, graph) = coset_graph(&a5, &d5, g, 1000)?;
    println!("g = {g}: {} cosets, valency {:?}", table.index(), graph.regular_valency());
    println!("isomorphic to K6: {}", graphauto::isomorphic(&graph, &builders::complete(6))?);
    print!("{graph}");
    Ok(())
}
