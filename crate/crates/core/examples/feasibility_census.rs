//! Feasible elements for every stabilizer class of A9, with a sample coset
//! graph per class that has any.
//!
//! cargo run --release --example feasibility_census

use pentaveri::cli::scenarios::shipped_group;
use pentaveri::feasibility::{census, SearchConfig};

fn main() -> pentaveri::Result<()> {
    let a9 = shipped_group("a9").expect("shipped");
    let labels = ["Z5", "D5", "D10", "F20", "F20xZ2", "A5", "S5", "A4xA5", "A4xA5:Z2"];
    let report = census(&a9, &labels, &SearchConfig::default())?;
    for row in &report.rows {
        print!("{:<10} class {} (size {:>5}): {:>4} feasible", row.type_label, row.class_index, row.class_size, row.count);
        if let Some(s) = &row.sample {
            print!("  sample graph: {} vertices, valency {:?}, connected {}", s.vertices, s.valency, s.connected);
        }
        println!();
    }
    Ok(())
}
