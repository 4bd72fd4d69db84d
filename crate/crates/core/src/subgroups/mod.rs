//! Small subgroups: fingerprints, type identification, and conjugacy-class
//! representatives of the stabilizer types found by construction recipes.

mod fingerprint;
mod recipes;

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;

pub use fingerprint::IsoFingerprint;

/// A subgroup found inside a parent group.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupRecord {
    #[serde(skip)]
    pub group: GroupHandle,
    pub gens: Vec<String>,
    pub order: u64,
    pub parent_order: String,
    pub type_label: Option<String>,
    pub fingerprint: IsoFingerprint,
    /// Number of conjugates in the parent.
    pub class_size: u64,
}

/// The catalog type whose stored fingerprint equals that of `h`.
pub fn identify_type(h: &GroupHandle, cap: u64) -> Result<&'static str> {
    let fp = IsoFingerprint::of(h, cap)?;
    identify_fingerprint(&fp)
}

pub fn identify_fingerprint(fp: &IsoFingerprint) -> Result<&'static str> {
    let hits: Vec<&'static str> = catalog::stabilizer_orders()
        .iter()
        .filter(|e| e.fingerprint().as_ref() == Some(fp))
        .map(|e| e.name.as_str())
        .collect();
    match hits.len() {
        0 => Err(Error::Unidentified),
        1 => Ok(hits[0]),
        _ => Err(Error::Ambiguous(hits.iter().map(|s| s.to_string()).collect())),
    }
}

/// Elements of `g` normalizing `h`, by scanning all of `g`.
pub fn normalizer_small(g: &GroupHandle, h: &GroupHandle, cap: u64) -> Result<GroupHandle> {
    let hg = h.generators();
    let elems = g.elements(cap)?.filter(|x| hg.iter().all(|s| h.contains(&s.conjugate_by(x))));
    Ok(GroupHandle::generated_by_closed_set(g.degree(), elems))
}

/// Elements of `g` commuting with every generator of `h`.
pub fn centralizer_small(g: &GroupHandle, h: &GroupHandle, cap: u64) -> Result<GroupHandle> {
    let hg = h.generators();
    let elems = g.elements(cap)?.filter(|x| hg.iter().all(|s| &s.conjugate_by(x) == s));
    Ok(GroupHandle::generated_by_closed_set(g.degree(), elems))
}

/// Sorted element list; equal keys mean equal subgroups.
pub(crate) type SubgroupKey = Vec<Permutation>;

pub(crate) fn conjugate_key(key: &[Permutation], t: &Permutation) -> SubgroupKey {
    let mut out: Vec<Permutation> = key.iter().map(|e| e.conjugate_by(t)).collect();
    out.sort_unstable();
    out
}

/// An element `t` of `g` with `h1^t = h2`, if one exists.
pub fn are_conjugate(g: &GroupHandle, h1: &GroupHandle, h2: &GroupHandle, cap: u64) -> Result<Option<Permutation>> {
    if h1.order() != h2.order() {
        return Ok(None);
    }
    let start = h1.element_set_key(cap)?;
    let goal = h2.element_set_key(cap)?;
    let mut found = None;
    conjugacy_orbit(g, start, |key, t| {
        if key == goal.as_slice() {
            found = Some(t.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Breadth-first orbit of a subgroup key under conjugation by the generators of
/// `g`. `visit` sees each key with a transporter from the start and may stop
/// the walk by returning false. Returns the number of keys visited.
pub(crate) fn conjugacy_orbit(
    g: &GroupHandle,
    start: SubgroupKey,
    mut visit: impl FnMut(&[Permutation], &Permutation) -> bool,
) -> usize {
    let id = Permutation::identity(g.degree());
    if !visit(&start, &id) {
        return 1;
    }
    let mut seen: HashMap<SubgroupKey, Permutation> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), id);
    queue.push_back(start);
    while let Some(key) = queue.pop_front() {
        let t = seen[&key].clone();
        for s in g.generators() {
            let next = conjugate_key(&key, s);
            if seen.contains_key(&next) {
                continue;
            }
            let tn = t.then(s);
            if !visit(&next, &tn) {
                return seen.len() + 1;
            }
            seen.insert(next.clone(), tn);
            queue.push_back(next);
        }
    }
    seen.len()
}

/// Groups candidate subgroups into conjugacy classes of `g`. Each class is
/// represented by the least key in its orbit; classes come back sorted by that key.
pub(crate) fn classify(g: &GroupHandle, candidates: Vec<SubgroupKey>) -> Vec<(SubgroupKey, u64)> {
    let mut assigned: HashMap<SubgroupKey, usize> = HashMap::new();
    let mut classes: Vec<(SubgroupKey, u64)> = Vec::new();
    for cand in candidates {
        if assigned.contains_key(&cand) {
            continue;
        }
        let idx = classes.len();
        let mut least = cand.clone();
        let mut members = Vec::new();
        conjugacy_orbit(g, cand, |key, _| {
            if key < least.as_slice() {
                least = key.to_vec();
            }
            members.push(key.to_vec());
            true
        });
        let size = members.len() as u64;
        for m in members {
            assigned.insert(m, idx);
        }
        classes.push((least, size));
    }
    classes.sort();
    classes
}

/// One subgroup per conjugacy class of `g` isomorphic (by fingerprint) to the
/// catalog type `label`.
pub fn find_class_reps(g: &GroupHandle, label: &str, cap: u64) -> Result<Vec<SubgroupRecord>> {
    let entry = catalog::lookup_type(label)?;
    let target = entry.fingerprint().ok_or_else(|| Error::NoRecipe(entry.name.clone()))?;
    if g.order() > BigUint::from(cap) {
        return Err(Error::OrderExceedsCap { order: g.order(), cap });
    }
    if g.order() % BigUint::from(target.order) != BigUint::from(0u32) {
        return Ok(Vec::new());
    }
    let candidates = recipes::candidates(g, &entry.name, &target, cap)?;
    let classes = classify(g, candidates);
    Ok(classes
        .into_iter()
        .map(|(key, class_size)| {
            let sub = GroupHandle::generated_by_closed_set(g.degree(), key);
            SubgroupRecord {
                gens: sub.generators().iter().map(|p| p.to_string()).collect(),
                order: target.order,
                parent_order: g.order().to_string(),
                type_label: Some(entry.name.clone()),
                fingerprint: target.clone(),
                class_size,
                group: sub,
            }
        })
        .collect())
}

/// Whether `h` has a subgroup of type `label`, searched with the same recipes.
pub fn has_subgroup_of_type(h: &GroupHandle, label: &str, cap: u64) -> Result<bool> {
    Ok(!find_class_reps(h, label, cap)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &[&str], n: usize) -> GroupHandle {
        GroupHandle::new(gens.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn models_identify_as_themselves() {
        for e in catalog::stabilizer_orders() {
            if let Some(m) = e.model_group() {
                assert_eq!(m.order_u64(), Some(e.order), "{}", e.name);
                assert_eq!(identify_type(&m, 100_000).unwrap(), e.name);
            }
        }
    }

    #[test]
    fn stored_profiles_are_distinct() {
        let fps: Vec<_> = catalog::stabilizer_orders().iter().filter_map(|e| e.fingerprint()).collect();
        for (i, a) in fps.iter().enumerate() {
            for b in &fps[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn unknown_profile() {
        let z7 = group(&["(1 2 3 4 5 6 7)"], 7);
        assert!(matches!(identify_type(&z7, 100), Err(Error::Unidentified)));
    }

    #[test]
    fn sylow_five_in_a5() {
        let a5 = GroupHandle::alternating(5).unwrap();
        let reps = find_class_reps(&a5, "Z5", 1000).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].class_size, 6);
    }

    #[test]
    fn normalizer_and_centralizer() {
        let s5 = GroupHandle::symmetric(5).unwrap();
        let p = group(&["(1 2 3 4 5)"], 5);
        assert_eq!(normalizer_small(&s5, &p, 1000).unwrap().order_u64(), Some(20));
        assert_eq!(centralizer_small(&s5, &p, 1000).unwrap().order_u64(), Some(5));
    }

    #[test]
    fn conjugacy_transporter() {
        let s5 = GroupHandle::symmetric(5).unwrap();
        let a = group(&["(1 2)(3 4)"], 5);
        let b = group(&["(2 5)(1 3)"], 5);
        let c = group(&["(1 2)"], 5);
        let t = are_conjugate(&s5, &a, &b, 1000).unwrap().unwrap();
        assert_eq!(a.conjugate_group(&t).unwrap().element_set_key(10).unwrap(), b.element_set_key(10).unwrap());
        assert!(are_conjugate(&s5, &a, &c, 1000).unwrap().is_none());
    }

    #[test]
    fn f20_inside_s5() {
        let s5 = catalog::lookup_type("S5").unwrap().model_group().unwrap();
        assert!(has_subgroup_of_type(&s5, "F20", 1000).unwrap());
        assert!(!has_subgroup_of_type(&s5, "D10", 1000).unwrap());
    }

    #[test]
    fn missing_recipe() {
        let s5 = GroupHandle::symmetric(5).unwrap();
        assert!(matches!(find_class_reps(&s5, "Z2^6:GammaL(2,4)", 1000), Err(Error::NoRecipe(_))));
    }
}
