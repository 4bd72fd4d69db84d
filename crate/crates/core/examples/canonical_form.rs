//! Canonical labeling: random relabelings of the Petersen graph all reach the
//! same canonical graph, and an explicit isomorphism is recovered.
//!
//! cargo run --example canonical_form

use pentaveri::cosetgraph::builders;
use pentaveri::graphauto::{canonical_form, isomorphism};
use pentaveri::Permutation;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> pentaveri::Result<()> {
    let petersen = builders::petersen();
    let (canon, _) = canonical_form(&petersen)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let mut images: Vec<u32> = (0..10).collect();
        images.shuffle(&mut rng);
        let sigma = Permutation::from_images(images)?;
        let other = petersen.relabel(&sigma);
        let (c, _) = canonical_form(&other)?;
        let phi = isomorphism(&petersen, &other)?.expect("relabelings are isomorphic");
        println!("relabel {sigma}: same canonical form {}, map {phi}", c == canon);
    }
    Ok(())
}
