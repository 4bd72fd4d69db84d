//! Orders, membership and orbits for the regular group of order 40 on 40
//! points and the group obtained by adjoining one involution.
//!
//! cargo run --release --example group_orders

use pentaveri::cli::scenarios::shipped_group_file;
use pentaveri::{GroupHandle, Permutation};

fn main() -> pentaveri::Result<()> {
    let file = shipped_group_file("a40-example").expect("shipped");
    let h = GroupHandle::new(file.gens[..3].to_vec())?;
    let g = &file.gens[3];
    println!("|H| = {}", h.order());
    println!("H regular: {}", h.is_regular());
    println!("g = {g}, order {}", g.order());
    println!("g in H: {}", h.contains(g));

    let whole = GroupHandle::new(file.gens.clone())?;
    println!("|<H, g>| = {}", whole.order());
    println!("orbits of <H, g>: {}", whole.orbits().len());

    let t = Permutation::parse_cycles("(1 2)", 40)?;
    println!("(1 2) in <H, g>: {}", whole.contains(&t));
    Ok(())
}
