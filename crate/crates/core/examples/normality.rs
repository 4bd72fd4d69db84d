//! Automorphism group of an 18144-vertex pentavalent coset graph of A9 and
//! its relation to A9.
//!
//! cargo run --release --example normality

use std::time::Instant;

use pentaveri::cli::scenarios::{sample_coset_graph, shipped_group};
use pentaveri::graphauto::{automorphism_group, is_arc_transitive, normality_report, AutOptions};
use pentaveri::{GroupHandle, Permutation};

fn main() -> pentaveri::Result<()> {
    let a9 = shipped_group("a9").expect("shipped");
    let (table, graph) = sample_coset_graph(&a9, "D5", None)?;
    println!("{} vertices, valency {:?}, connected {}", graph.n(), graph.regular_valency(), graph.is_connected());

    let action: Vec<Permutation> = a9.generators().iter().map(|s| table.coset_action(s)).collect::<Result<_, _>>()?;
    println!("A9 arc-transitive: {}", is_arc_transitive(&graph, Some(&action))?);

    let start = Instant::now();
    let aut = automorphism_group(&graph, None, &AutOptions::default())?;
    println!("{} in {:.2?}", aut.summary(), start.elapsed());

    let report = normality_report(&graph, &GroupHandle::new(action)?, Some(&a9.order()))?;
    println!("|A| = {}, |A : A9| = {:?}, A9 normal: {}", report.aut_order, report.index, report.normal);
    Ok(())
}
