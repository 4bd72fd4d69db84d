//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use pentaveri::cosetgraph::Graph;
use pentaveri::{GroupHandle, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn perm(s: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(s, n).unwrap()
}

pub fn group(gens: &[&str], n: usize) -> GroupHandle {
    GroupHandle::new(gens.iter().map(|s| perm(s, n)).collect()).unwrap()
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// Breadth-first closure under right multiplication by the generators, stopping
/// once more than `limit` elements are found.
pub fn brute_force_closure(degree: usize, gens: &[Permutation], limit: usize) -> Option<usize> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// Every graph on 1 to 7 vertices, one per isomorphism class.
pub fn atlas() -> Vec<Graph> {
    let text = include_str!("../fixtures/atlas7.graphs");
    let mut graphs = Vec::new();
    let mut block = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if block.lines().any(|l| l.starts_with("graph ")) {
                graphs.push(Graph::parse(&block).unwrap());
            }
            block.clear();
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    graphs
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
