mod common;

use std::collections::HashSet;

use common::group;
use pentaveri::feasibility::{failure_profile, is_feasible, search_feasible, Predicate, SearchConfig};
use pentaveri::subgroups::{find_class_reps, normalizer_small};
use pentaveri::{GroupHandle, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cases() -> Vec<(GroupHandle, GroupHandle)> {
    let mut out = Vec::new();
    for n in [5, 6] {
        let g = GroupHandle::alternating(n).unwrap();
        for label in ["Z5", "D5", "A5"] {
            for rep in find_class_reps(&g, label, 10_000).unwrap() {
                out.push((g.clone(), rep.group));
            }
        }
    }
    out
}

fn feasible_set(g: &GroupHandle, h: &GroupHandle, config: &SearchConfig) -> HashSet<Permutation> {
    search_feasible(g, h, config).unwrap().into_iter().map(|f| f.g).collect()
}

#[test]
fn feasible_sets_are_inverse_closed() {
    let config = SearchConfig::default();
    let mut nonempty = 0;
    for (g, h) in cases() {
        let set = feasible_set(&g, &h, &config);
        nonempty += usize::from(!set.is_empty());
        for x in &set {
            assert!(set.contains(&x.inverse()), "{x} feasible but its inverse is not");
        }
    }
    assert!(nonempty > 0);
}

#[test]
fn prune_order_does_not_change_results() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (g, h) in cases() {
        let base = feasible_set(&g, &h, &SearchConfig::default());
        for _ in 0..3 {
            let mut order = Predicate::DEFAULT_ORDER.to_vec();
            order.shuffle(&mut rng);
            let config = SearchConfig { prune_order: order, ..SearchConfig::default() };
            assert_eq!(feasible_set(&g, &h, &config), base);
        }
    }
}

#[test]
fn feasible_sets_are_closed_under_the_normalizer() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let config = SearchConfig::default();
    let mut checked = 0;
    for (g, h) in cases() {
        let set: Vec<Permutation> = feasible_set(&g, &h, &config).into_iter().collect();
        if set.is_empty() {
            continue;
        }
        let norm = normalizer_small(&g, &h, 10_000).unwrap().element_list(10_000).unwrap();
        for _ in 0..20 {
            let x = set.choose(&mut rng).unwrap();
            let n = norm.choose(&mut rng).unwrap();
            let y = x.conjugate(n).unwrap();
            assert!(is_feasible(&g, &h, &y, &config).unwrap().is_feasible());
            checked += 1;
        }
    }
    assert!(checked >= 20);
}

#[test]
fn failures_are_attributed_to_one_predicate() {
    let g = GroupHandle::alternating(6).unwrap();
    let h = group(&["(1 2 3 4 5)", "(2 5)(3 4)"], 6);
    let profile = failure_profile(&g, &h, &SearchConfig::default()).unwrap();
    let total: usize = profile.values().sum();
    assert_eq!(total, 360);
    assert!(profile.get(&Some(Predicate::Generation)).copied().unwrap_or(0) > 0);
}

#[test]
fn edge_stabilizer_check_only_removes_elements() {
    for (g, h) in cases() {
        let plain = feasible_set(&g, &h, &SearchConfig::default());
        let strict =
            feasible_set(&g, &h, &SearchConfig { edge_stabilizer_check: true, ..SearchConfig::default() });
        assert!(strict.is_subset(&plain));
    }
}
