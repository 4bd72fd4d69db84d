//! Conjugacy classes of vertex-stabilizer types in A9.
//!
//! cargo run --release --example subgroup_classes

use pentaveri::cli::scenarios::shipped_group;
use pentaveri::group::default_cap;
use pentaveri::subgroups;

fn main() -> pentaveri::Result<()> {
    let a9 = shipped_group("a9").expect("shipped");
    println!("|A9| = {}", a9.order());
    for label in ["Z5", "D5", "D10", "F20", "F20xZ2", "A5", "S5", "A4xA5", "A4xA5:Z2"] {
        let reps = subgroups::find_class_reps(&a9, label, default_cap())?;
        let sizes: Vec<u64> = reps.iter().map(|r| r.class_size).collect();
        println!("{label:<10} classes {}  sizes {sizes:?}", reps.len());
    }
    Ok(())
}
