//! Stabilizer orders and the candidate lists derived from them.
//!
//! cargo run --example catalog

use pentaveri::catalog;

fn main() -> pentaveri::Result<()> {
    for e in catalog::stabilizer_orders() {
        println!("{:<16} {:>6} = {}", e.name, e.order, e.factored);
    }
    let arc = catalog::derive_arc_candidates();
    println!("raw ratios ({}): {:?}", arc.raw.len(), arc.raw);
    for e in &arc.eliminated {
        println!("  drop {}: {}", e.n, e.reason);
        println!("    witnesses {:?}", catalog::ratio_witnesses(e.n));
    }
    println!("refined ({}) matches stored: {}", arc.refined.len(), arc.refined_matches_stored);

    let reg = catalog::derive_regular_candidates();
    println!("regular: only derived {:?}, only stored {:?}", reg.only_derived, reg.only_stored);

    let (a, b) = catalog::verify_eliminations(pentaveri::group::default_cap())?;
    println!("F20xZ2 < A4xA5: {a}; F20xZ4 < A4xA5:Z2: {b}");
    Ok(())
}
