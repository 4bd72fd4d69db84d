mod common;

use std::collections::{BTreeMap, HashSet};

use pentaveri::feasibility::{census, SearchConfig};
use pentaveri::group::grpfile::read_group;
use pentaveri::subgroups::{find_class_reps, identify_type};
use pentaveri::{GroupHandle, Permutation};

const TYPES: [&str; 9] = ["Z5", "D5", "D10", "F20", "F20xZ2", "A5", "S5", "A4xA5", "A4xA5:Z2"];

fn a9() -> GroupHandle {
    read_group(common::data("groups/a9.grp")).unwrap()
}

fn orbit_signature(h: &GroupHandle) -> Vec<usize> {
    let mut s: Vec<usize> = h.orbits().iter().map(Vec::len).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

#[test]
fn class_counts() {
    let g = a9();
    let expected = [1, 2, 2, 2, 2, 2, 2, 1, 1];
    for (label, want) in TYPES.iter().zip(expected) {
        let reps = find_class_reps(&g, label, 2_000_000).unwrap();
        assert_eq!(reps.len(), want, "{label}");
        for r in &reps {
            assert_eq!(identify_type(&r.group, 100_000).unwrap(), *label);
        }
    }
}

#[test]
fn feasible_counts() {
    let report = census(&a9(), &TYPES, &SearchConfig::default()).unwrap();
    let expected: [(&str, &[usize]); 9] = [
        ("Z5", &[120]),
        ("D5", &[0, 80]),
        ("D10", &[0, 80]),
        ("F20", &[0, 80]),
        ("F20xZ2", &[0, 80]),
        ("A5", &[0, 0]),
        ("S5", &[0, 0]),
        ("A4xA5", &[480]),
        ("A4xA5:Z2", &[480]),
    ];
    for (label, want) in expected {
        let mut got = report.counts(label);
        got.sort_unstable();
        assert_eq!(got, want, "{label}");
    }
    for row in &report.rows {
        if let Some(s) = &row.sample {
            assert_eq!(s.valency, Some(5));
            assert!(s.connected);
            assert_eq!(s.vertices * 5 % 2, 0);
        }
    }
}

/// All A5 subgroups of A9 found from (2, 3, 5) generating pairs, without the
/// subgroup recipes.
fn all_a5_subgroups(g: &GroupHandle) -> Vec<GroupHandle> {
    let elems = g.element_list(200_000).unwrap();
    let invs: Vec<&Permutation> = elems.iter().filter(|x| x.order_u64() == Some(2)).collect();
    let threes: Vec<&Permutation> = elems.iter().filter(|x| x.order_u64() == Some(3)).collect();
    let mut keys: HashSet<Vec<Permutation>> = HashSet::new();
    let mut out = Vec::new();
    for a in &invs {
        for b in &threes {
            if a.then(b).order_u64() != Some(5) {
                continue;
            }
            let h = GroupHandle::new(vec![(*a).clone(), (*b).clone()]).unwrap();
            if h.order_u64() != Some(60) {
                continue;
            }
            let key = h.element_set_key(60).unwrap();
            if keys.insert(key) {
                out.push(h);
            }
        }
    }
    out
}

#[test]
fn alternating_and_symmetric_classes_cross_checked() {
    let g = a9();
    let all = all_a5_subgroups(&g);
    let mut by_signature: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for h in &all {
        *by_signature.entry(orbit_signature(h)).or_default() += 1;
    }
    let reps = find_class_reps(&g, "A5", 2_000_000).unwrap();
    let mut from_recipes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for r in &reps {
        from_recipes.insert(orbit_signature(&r.group), r.class_size as usize);
    }
    assert_eq!(all.len(), 630);
    assert_eq!(by_signature, from_recipes);

    // each S5 is <A, t> for its derived A5 and any of its 10 transpositions
    let involutions: Vec<Permutation> =
        g.element_list(200_000).unwrap().into_iter().filter(|x| x.order_u64() == Some(2)).collect();
    let mut s5_keys: HashSet<Vec<Permutation>> = HashSet::new();
    let mut s5_by_signature: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for a in &all {
        for t in &involutions {
            if a.contains(t) || !a.generators().iter().all(|x| a.contains(&x.conjugate(t).unwrap())) {
                continue;
            }
            let mut gens = a.generators().to_vec();
            gens.push(t.clone());
            let s = GroupHandle::new(gens).unwrap();
            if identify_type(&s, 200).unwrap_or("") == "S5" && s5_keys.insert(s.element_set_key(120).unwrap()) {
                *s5_by_signature.entry(orbit_signature(&s)).or_default() += 1;
            }
        }
    }
    let reps = find_class_reps(&g, "S5", 2_000_000).unwrap();
    let from_recipes: BTreeMap<Vec<usize>, usize> =
        reps.iter().map(|r| (orbit_signature(&r.group), r.class_size as usize)).collect();
    assert_eq!(s5_keys.len(), 2268);
    assert_eq!(s5_by_signature, from_recipes);
}
