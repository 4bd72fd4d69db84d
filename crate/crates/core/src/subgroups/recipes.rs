//! Construction recipes producing, for each supported stabilizer type, a set of
//! subgroups of `G` that meets every conjugacy class of that type.
//!
//! * `Z5`: every cyclic subgroup generated by an element of order 5.
//! * Types with a normal Sylow 5-subgroup (`D5`, `D10`, `F20`, `F20xZ2`,
//!   `F20xZ4`): such a group is `P` extended by a 2-generated 2-group inside
//!   `N_G(P)`, so it is `<P, x, y>` with `P` a `Z5` class representative and
//!   `x, y` 2-elements of `N_G(P)`.
//! * `A5`: contains `D5` as a maximal subgroup, so it is `<D, x>` for a `D5`
//!   class representative `D` and any element `x` of order 3.
//! * `S5`: contains `A5` with index 2, so it is `<A, t>` for an `A5` class
//!   representative `A` and an involution `t`.
//! * `A4xA5`, `A4xA5:Z2`, `S4xS5`: the factors act naturally on disjoint
//!   supports of sizes 4 and 5; the extension adds `(x1 x2)(y1 y2)`. Other
//!   embeddings of these products are not searched.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{classify, IsoFingerprint, SubgroupKey};
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;

/// Upper limit on support choices tried by the product recipes.
const MAX_SUPPORT_CHOICES: u64 = 2_000_000;

pub(super) fn candidates(g: &GroupHandle, name: &str, target: &IsoFingerprint, cap: u64) -> Result<Vec<SubgroupKey>> {
    let keys = match name {
        "Z5" => cyclic_fives(g, cap)?,
        "D5" | "D10" | "F20" | "F20xZ2" | "F20xZ4" => normal_sylow(g, target, cap)?,
        "A5" => extend_reps(g, "D5", target, cap, |x| x.order_u64() == Some(3))?,
        "S5" => extend_reps(g, "A5", target, cap, |x| x.order_u64() == Some(2))?,
        "A4xA5" | "A4xA5:Z2" | "S4xS5" => support_split(g, name, cap)?,
        _ => return Err(Error::NoRecipe(name.to_string())),
    };
    let matching: Vec<SubgroupKey> = keys
        .into_par_iter()
        .filter(|k| {
            let h = GroupHandle::generated_by_closed_set(g.degree(), k.iter().cloned());
            IsoFingerprint::of(&h, cap).is_ok_and(|fp| &fp == target)
        })
        .collect();
    Ok(matching)
}

fn key_of(h: &GroupHandle, cap: u64) -> SubgroupKey {
    h.element_set_key(cap).expect("bounded by the target order")
}

fn dedup(mut keys: Vec<SubgroupKey>) -> Vec<SubgroupKey> {
    keys.sort_unstable();
    keys.dedup();
    keys
}

fn cyclic_fives(g: &GroupHandle, cap: u64) -> Result<Vec<SubgroupKey>> {
    let mut keys = HashSet::new();
    for a in g.elements(cap)? {
        if a.order_u64() == Some(5) {
            let mut key: Vec<Permutation> = (0..5).map(|k| a.power(k)).collect();
            key.sort_unstable();
            keys.insert(key);
        }
    }
    Ok(dedup(keys.into_iter().collect()))
}

fn class_reps_of(g: &GroupHandle, label: &str, cap: u64) -> Result<Vec<GroupHandle>> {
    let entry = catalog::lookup_type(label)?;
    let fp = entry.fingerprint().expect("recipe types have models");
    let keys = candidates(g, &entry.name, &fp, cap)?;
    Ok(classify(g, keys).into_iter().map(|(k, _)| GroupHandle::generated_by_closed_set(g.degree(), k)).collect())
}

/// Distinct subgroups `<base, x>` for `x` in `pool` whose order divides the
/// target order and whose element orders all occur in `target`.
fn extensions(
    base: &GroupHandle,
    pool: &[Permutation],
    target: &IsoFingerprint,
    cap: u64,
) -> BTreeMap<SubgroupKey, GroupHandle> {
    let limit = BigUint::from(target.order);
    let found: Vec<(SubgroupKey, GroupHandle)> = pool
        .par_iter()
        .filter(|x| !base.contains(x))
        .filter_map(|x| {
            let mut gens = base.generators().to_vec();
            gens.push(x.clone());
            let h = GroupHandle::closure_bounded(base.degree(), gens, &limit)?;
            let order = h.order_u64()?;
            if target.order % order != 0 {
                return None;
            }
            let key = key_of(&h, cap);
            key.iter().all(|e| e.order_u64().is_some_and(|k| target.allows_element_order(k))).then_some((key, h))
        })
        .collect();
    found.into_iter().collect()
}

fn normal_sylow(g: &GroupHandle, target: &IsoFingerprint, cap: u64) -> Result<Vec<SubgroupKey>> {
    let mut out = Vec::new();
    for p in class_reps_of(g, "Z5", cap)? {
        let n = super::normalizer_small(g, &p, cap)?;
        let pool: Vec<Permutation> = n
            .elements(cap)?
            .filter(|x| {
                !x.is_identity() && x.is_two_element() && x.order_u64().is_some_and(|k| target.allows_element_order(k))
            })
            .collect();
        let first = extensions(&p, &pool, target, cap);
        for (key, h) in &first {
            if h.order_u64() != Some(target.order) {
                for (k2, _) in extensions(h, &pool, target, cap) {
                    out.push(k2);
                }
            }
            out.push(key.clone());
        }
    }
    Ok(dedup(out))
}

fn extend_reps(
    g: &GroupHandle,
    base_label: &str,
    target: &IsoFingerprint,
    cap: u64,
    pick: impl Fn(&Permutation) -> bool + Sync,
) -> Result<Vec<SubgroupKey>> {
    let pool: Vec<Permutation> = g.elements(cap)?.filter(|x| pick(x)).collect();
    let mut out = Vec::new();
    for base in class_reps_of(g, base_label, cap)? {
        for (key, h) in extensions(&base, &pool, target, cap) {
            if h.order_u64() == Some(target.order) {
                out.push(key);
            }
        }
    }
    Ok(dedup(out))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

fn cycle(n: usize, pts: &[usize]) -> Permutation {
    let mut img: Vec<u32> = (0..n as u32).collect();
    for (i, &p) in pts.iter().enumerate() {
        img[p] = pts[(i + 1) % pts.len()] as u32;
    }
    Permutation::from_images(img).expect("cycle on distinct points")
}

fn product(n: usize, a: &[usize], b: &[usize]) -> Permutation {
    cycle(n, a).then(&cycle(n, b))
}

fn support_split(g: &GroupHandle, name: &str, cap: u64) -> Result<Vec<SubgroupKey>> {
    let n = g.degree();
    // only points moved by G can carry a factor
    let moved: Vec<usize> = (0..n).filter(|&p| g.generators().iter().any(|s| s.apply(p) != p)).collect();
    let m = moved.len() as u64;
    let choices = binomial(m, 4).saturating_mul(binomial(m.saturating_sub(4), 5));
    if choices > MAX_SUPPORT_CHOICES {
        return Err(Error::Precondition(format!("{choices} support choices for {name} exceed {MAX_SUPPORT_CHOICES}")));
    }
    let mut pairs = Vec::new();
    for xs in k_subsets(&moved, 4) {
        let rest: Vec<usize> = moved.iter().copied().filter(|p| !xs.contains(p)).collect();
        for ys in k_subsets(&rest, 5) {
            pairs.push((xs.clone(), ys));
        }
    }
    let keys: Vec<SubgroupKey> = pairs
        .par_iter()
        .filter_map(|(x, y)| {
            let five = cycle(n, y);
            let gens = match name {
                "S4xS5" => vec![cycle(n, x), cycle(n, &x[..2]), five, cycle(n, &y[..2])],
                _ => {
                    let mut gens = vec![cycle(n, &x[..3]), product(n, &x[..2], &x[2..]), five, cycle(n, &y[..3])];
                    if name == "A4xA5:Z2" {
                        gens.push(product(n, &x[..2], &y[..2]));
                    }
                    gens
                }
            };
            if !g.contains_all(&gens) {
                return None;
            }
            let h = GroupHandle::new(gens).expect("same degree");
            Some(key_of(&h, cap))
        })
        .collect();
    Ok(dedup(keys))
}
