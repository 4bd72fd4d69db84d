//! Right cosets of a subgroup and the coset graphs they carry.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;

/// Default bound on the number of cosets.
pub const DEFAULT_VERTEX_CAP: u64 = 100_000;

/// The right cosets `Hx` of `H` in `G`, numbered in breadth-first order from
/// `H` itself under right multiplication by the generators of `G`.
///
/// A coset is identified by its key: the least tuple of images of `G`'s base
/// under the elements `hx`, `h` in `H`. The base tuple determines an element of
/// `G`, so distinct cosets have disjoint tuple sets and distinct keys.
#[derive(Clone, Debug)]
pub struct CosetTable {
    group: GroupHandle,
    subgroup: GroupHandle,
    h_elements: Vec<Permutation>,
    h_set: HashSet<Permutation>,
    /// `h(b)` for each `h` in `H`, over the base `b` of `G`.
    h_base_images: Vec<Vec<u32>>,
    reps: Vec<Permutation>,
    key_index: HashMap<Vec<u32>, u32>,
}

impl CosetTable {
    pub fn enumerate(g: &GroupHandle, h: &GroupHandle, enum_cap: u64, vertex_cap: u64) -> Result<Self> {
        if !h.is_subgroup_of(g) {
            return Err(Error::Precondition("H is not a subgroup of G".into()));
        }
        let index = g.subgroup_index(h)?;
        if index > BigUint::from(vertex_cap) {
            return Err(Error::IndexExceedsCap { index, cap: vertex_cap });
        }
        let index = index.to_usize().expect("below the vertex cap");
        let h_elements = h.element_list(enum_cap)?;
        let base = g.chain().base();
        let h_base_images =
            h_elements.iter().map(|e| base.iter().map(|&b| e.apply(b) as u32).collect()).collect();
        let mut table = CosetTable {
            group: g.clone(),
            subgroup: h.clone(),
            h_set: h_elements.iter().cloned().collect(),
            h_elements,
            h_base_images,
            reps: Vec::with_capacity(index),
            key_index: HashMap::with_capacity(index),
        };
        let id = Permutation::identity(g.degree());
        table.key_index.insert(table.key(&id), 0);
        table.reps.push(id);
        let mut head = 0;
        while head < table.reps.len() {
            let x = table.reps[head].clone();
            head += 1;
            for s in g.generators() {
                let y = x.then(s);
                let k = table.key(&y);
                if !table.key_index.contains_key(&k) {
                    table.key_index.insert(k, table.reps.len() as u32);
                    table.reps.push(y);
                }
            }
        }
        debug_assert_eq!(table.reps.len(), index);
        Ok(table)
    }

    /// The key of the coset `Hx`.
    pub fn key(&self, x: &Permutation) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        let mut cur = Vec::with_capacity(self.h_base_images.first().map_or(0, Vec::len));
        for hb in &self.h_base_images {
            cur.clear();
            cur.extend(hb.iter().map(|&p| x.apply(p as usize) as u32));
            if best.as_ref().map_or(true, |b| cur < *b) {
                best = Some(cur.clone());
            }
        }
        best.unwrap_or_default()
    }

    /// Index of the coset containing `x`.
    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.key_index.get(&self.key(x)).map(|&i| i as usize)
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn subgroup(&self) -> &GroupHandle {
        &self.subgroup
    }

    /// The permutation `Hx -> Hxp` of the coset indices.
    pub fn coset_action(&self, p: &Permutation) -> Result<Permutation> {
        let images: Vec<u32> = self
            .reps
            .par_iter()
            .map(|x| self.index_of(&x.then(p)).map(|i| i as u32))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Precondition("permutation does not lie in G".into()))?;
        Permutation::from_images(images)
    }

    /// `Cos(G, H, HgH)`: `Hx` is adjacent to `Hghx` for every `h` in `H`.
    pub fn coset_graph(&self, g: &Permutation) -> Result<Graph> {
        if !self.group.contains(g) {
            return Err(Error::Precondition("g is not in G".into()));
        }
        if self.h_set.contains(g) {
            return Err(Error::Precondition("g lies in H".into()));
        }
        if !self.h_set.contains(&g.then(g)) {
            return Err(Error::Precondition("g^2 is not in H, so HgH is not inverse-closed".into()));
        }
        // Hgh depends only on the coset of H ∩ H^g containing h
        let ginv = g.inverse();
        let mut lifts: Vec<Permutation> = Vec::new();
        for h in &self.h_elements {
            let fresh = lifts.iter().all(|r| !self.h_set.contains(&g.then(h).then(&r.inverse()).then(&ginv)));
            if fresh {
                lifts.push(h.clone());
            }
        }
        let starts: Vec<Permutation> = lifts.iter().map(|h| g.then(h)).collect();
        let adj: Vec<Vec<u32>> = self
            .reps
            .par_iter()
            .enumerate()
            .map(|(i, x)| {
                let mut list = Vec::with_capacity(starts.len());
                for s in &starts {
                    let j = self.index_of(&s.then(x)).expect("G is closed");
                    if j == i {
                        return Err(Error::Precondition(format!("self-loop at coset {i}")));
                    }
                    list.push(j as u32);
                }
                Ok(list)
            })
            .collect::<Result<_>>()?;
        Graph::from_adjacency(adj)
    }
}

/// Convenience: enumerate the cosets with default caps, then build the graph.
pub fn coset_graph(g: &GroupHandle, h: &GroupHandle, elt: &Permutation, enum_cap: u64) -> Result<(CosetTable, Graph)> {
    let table = CosetTable::enumerate(g, h, enum_cap, DEFAULT_VERTEX_CAP)?;
    let graph = table.coset_graph(elt)?;
    Ok((table, graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn cosets_of_d5_in_a5() {
        let a5 = GroupHandle::alternating(5).unwrap();
        let d5 = GroupHandle::new(vec![perm("(1 2 3 4 5)", 5), perm("(2 5)(3 4)", 5)]).unwrap();
        let t = CosetTable::enumerate(&a5, &d5, 1000, 1000).unwrap();
        assert_eq!(t.index(), 6);
        for (i, x) in t.reps().iter().enumerate() {
            for (j, y) in t.reps().iter().enumerate() {
                assert_eq!(d5.contains(&x.then(&y.inverse())), i == j);
            }
        }
        for s in a5.generators() {
            let act = t.coset_action(s).unwrap();
            assert_eq!(act.degree(), 6);
        }
    }

    #[test]
    fn vertex_cap() {
        let a8 = GroupHandle::alternating(8).unwrap();
        let c = GroupHandle::new(vec![perm("(1 2 3)", 8)]).unwrap();
        assert!(matches!(CosetTable::enumerate(&a8, &c, 1000, 1000), Err(Error::IndexExceedsCap { .. })));
    }

    #[test]
    fn rejects_elements_of_h() {
        let a5 = GroupHandle::alternating(5).unwrap();
        let d5 = GroupHandle::new(vec![perm("(1 2 3 4 5)", 5), perm("(2 5)(3 4)", 5)]).unwrap();
        let t = CosetTable::enumerate(&a5, &d5, 1000, 1000).unwrap();
        assert!(t.coset_graph(&perm("(2 5)(3 4)", 5)).is_err());
        assert!(t.coset_graph(&perm("(1 2 3)", 5)).is_err());
    }
}
