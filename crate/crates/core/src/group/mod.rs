//! Permutation groups given by generators.
//!
//! A [`GroupHandle`] stores its generators and builds a [`StabilizerChain`] on
//! first use. Everything that needs the order, membership or element
//! enumeration goes through that chain.

mod chain;
pub mod grpfile;

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub(crate) use chain::BuildOutcome;
pub use chain::StabilizerChain;
pub use grpfile::GrpFile;

/// Default bound on the number of elements any operation will enumerate.
pub const DEFAULT_CAP: u64 = 2_000_000;

/// The enumeration cap, taken from `PENTAVERI_CAP` when set.
pub fn default_cap() -> u64 {
    std::env::var("PENTAVERI_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

#[derive(Clone, Debug)]
pub struct GroupHandle {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl GroupHandle {
    /// The group generated by `gens`, which must be nonempty and of equal degree.
    pub fn new(gens: Vec<Permutation>) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Precondition("a group needs at least one generator".into()))?;
        Self::with_degree(first.degree(), gens)
    }

    /// Like [`GroupHandle::new`] but also accepts an empty generator list.
    pub fn with_degree(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(GroupHandle { degree, gens, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        GroupHandle { degree, gens: Vec::new(), chain: OnceLock::new() }
    }

    pub(crate) fn from_chain(degree: usize, gens: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        GroupHandle { degree, gens, chain: cell }
    }

    /// `S_n` generated by `(1 2)` and `(1 2 ... n)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Ok(Self::trivial(n.max(1)));
        }
        let mut t: Vec<u32> = (0..n as u32).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        Self::new(vec![Permutation::from_images(t)?, Permutation::from_images(c)?])
    }

    /// `A_n` generated by `(1 2 3)` and an even long cycle: `(1 ... n)` for odd
    /// `n`, `(2 ... n)` for even `n`.
    pub fn alternating(n: usize) -> Result<Self> {
        if n < 3 {
            return Ok(Self::trivial(n.max(1)));
        }
        let mut t: Vec<u32> = (0..n as u32).collect();
        t[0] = 1;
        t[1] = 2;
        t[2] = 0;
        let mut c: Vec<u32> = (0..n as u32).collect();
        let start = if n % 2 == 1 { 0 } else { 1 };
        for i in start..n {
            c[i] = if i + 1 == n { start as u32 } else { i as u32 + 1 };
        }
        Self::new(vec![Permutation::from_images(t)?, Permutation::from_images(c)?])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| StabilizerChain::build(self.degree, &self.gens, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Permutation::is_identity)
    }

    /// Membership by sifting. Permutations of another degree are never members.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn contains_all(&self, ps: &[Permutation]) -> bool {
        ps.iter().all(|p| self.contains(p))
    }

    /// Streams every element exactly once, in a fixed order determined by the chain.
    pub fn elements(&self, cap: u64) -> Result<Elements> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::OrderExceedsCap { order, cap });
        }
        Ok(Elements::new(self.degree, self.chain().sorted_transversals()))
    }

    /// All elements collected into a vector.
    pub fn element_list(&self, cap: u64) -> Result<Vec<Permutation>> {
        Ok(self.elements(cap)?.collect())
    }

    /// The orbit of a 0-based point, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbits on the domain, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !assigned[p] {
                let orb = self.orbit(p);
                for &q in &orb {
                    assigned[q] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Every orbit has size `|G|`, i.e. all point stabilizers are trivial.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| BigUint::from(o.len()) == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.is_semiregular()
    }

    /// The stabilizer of a 0-based point, from a chain whose base starts there.
    pub fn point_stabilizer(&self, v: usize) -> GroupHandle {
        self.base_stabilizer(&[v])
    }

    /// The pointwise stabilizer of `points`.
    pub fn base_stabilizer(&self, points: &[usize]) -> GroupHandle {
        let full = StabilizerChain::build(self.degree, self.chain().strong_generators(), points);
        let k = points.len();
        let sub = full.suffix(k);
        let gens = full.level_generators(k);
        GroupHandle::from_chain(self.degree, gens, sub)
    }

    /// `t⁻¹ G t`.
    pub fn conjugate_group(&self, t: &Permutation) -> Result<GroupHandle> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, t.degree()));
        }
        GroupHandle::with_degree(self.degree, self.gens.iter().map(|g| g.conjugate_by(t)).collect())
    }

    /// Intersection by enumerating the smaller group and sifting into the larger.
    pub fn intersect_small(&self, other: &GroupHandle, cap: u64) -> Result<GroupHandle> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let (small, large) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        let elems = small.elements(cap)?.filter(|e| large.contains(e));
        Ok(GroupHandle::generated_by_closed_set(self.degree, elems))
    }

    /// The group generated by `elems`, which the caller knows to be closed under
    /// multiplication. Only elements outside the running subgroup become generators.
    pub fn generated_by_closed_set(degree: usize, elems: impl IntoIterator<Item = Permutation>) -> GroupHandle {
        let mut current = GroupHandle::trivial(degree);
        for e in elems {
            if !current.contains(&e) {
                let mut gens = current.gens.clone();
                gens.push(e);
                current = GroupHandle { degree, gens, chain: OnceLock::new() };
            }
        }
        current
    }

    /// `|self : sub|`, failing when `|sub|` does not divide `|self|`.
    pub fn subgroup_index(&self, sub: &GroupHandle) -> Result<BigUint> {
        let (q, r) = self.order().div_rem(&sub.order());
        if !r.is_zero() {
            return Err(Error::NotDivisible(sub.order(), self.order()));
        }
        Ok(q)
    }

    pub fn is_subgroup_of(&self, sup: &GroupHandle) -> bool {
        self.degree == sup.degree && sup.contains_all(&self.gens)
    }

    /// `self` is a subgroup of `sup` and every conjugate of a generator of `self`
    /// by a generator of `sup` lies in `self`.
    pub fn is_normal_in(&self, sup: &GroupHandle) -> bool {
        if !self.is_subgroup_of(sup) {
            return false;
        }
        sup.gens.iter().all(|t| self.gens.iter().all(|h| self.contains(&h.conjugate_by(t))))
    }

    /// The smallest normal subgroup of `self` containing `seeds`, which must lie in `self`.
    pub fn normal_closure(&self, seeds: Vec<Permutation>) -> GroupHandle {
        let gens: Vec<Permutation> = seeds.into_iter().filter(|s| !s.is_identity()).collect();
        let mut current = GroupHandle { degree: self.degree, gens, chain: OnceLock::new() };
        let mut next = 0;
        while next < current.gens.len() {
            let d = current.gens[next].clone();
            next += 1;
            for t in &self.gens {
                let c = d.conjugate_by(t);
                if !current.contains(&c) {
                    let mut gens = std::mem::take(&mut current.gens);
                    gens.push(c);
                    current = GroupHandle { degree: self.degree, gens, chain: OnceLock::new() };
                }
            }
        }
        current
    }

    /// `<gens>` unless its order exceeds `abort_above`, in which case `None`.
    pub fn closure_bounded(degree: usize, gens: Vec<Permutation>, abort_above: &BigUint) -> Option<GroupHandle> {
        match StabilizerChain::build_bounded(degree, &gens, &[], None, Some(abort_above)) {
            BuildOutcome::Complete(c) => Some(GroupHandle::from_chain(degree, gens, c)),
            BuildOutcome::Exceeded => None,
        }
    }

    /// Whether `<gens>` has order exactly `target`, given that it cannot be larger
    /// (the generators lie in a group of that order).
    pub fn generates_order(degree: usize, gens: &[Permutation], target: &BigUint) -> bool {
        match StabilizerChain::build_bounded(degree, gens, &[], Some(target), Some(target)) {
            BuildOutcome::Complete(c) => &c.order() == target,
            BuildOutcome::Exceeded => false,
        }
    }

    /// Sorted image-array key of the element set: equal keys mean equal subgroups.
    pub fn element_set_key(&self, cap: u64) -> Result<Vec<Permutation>> {
        let mut elems = self.element_list(cap)?;
        elems.sort_unstable();
        Ok(elems)
    }

    /// Element set as a hash set, for repeated membership lookups by image slice.
    pub fn element_set(&self, cap: u64) -> Result<HashSet<Permutation>> {
        Ok(self.elements(cap)?.collect())
    }
}

/// Iterator over all group elements as products of transversal elements.
///
/// The element with indices `(i_0, ..., i_{k-1})` is `u_{k-1} ... u_1 u_0`
/// (left to right); `suffix[j]` caches `u_j ... u_0`, so advancing the last
/// index costs a single composition.
pub struct Elements {
    degree: usize,
    transversals: Vec<Vec<Permutation>>,
    idx: Vec<usize>,
    suffix: Vec<Permutation>,
    done: bool,
}

impl Elements {
    fn new(degree: usize, transversals: Vec<Vec<Permutation>>) -> Self {
        let k = transversals.len();
        let mut e = Elements { degree, transversals, idx: vec![0; k], suffix: Vec::with_capacity(k), done: false };
        e.rebuild_from(0);
        e
    }

    fn rebuild_from(&mut self, j: usize) {
        self.suffix.truncate(j);
        for l in j..self.transversals.len() {
            let u = &self.transversals[l][self.idx[l]];
            let next = match self.suffix.last() {
                Some(prev) => u.then(prev),
                None => u.clone(),
            };
            self.suffix.push(next);
        }
    }
}

impl Iterator for Elements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self.suffix.last().cloned().unwrap_or_else(|| Permutation::identity(self.degree));
        let mut j = self.transversals.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            self.idx[j] += 1;
            if self.idx[j] < self.transversals[j].len() {
                self.rebuild_from(j);
                break;
            }
            self.idx[j] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn brute_closure(gens: &[Permutation], degree: usize) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn standard_group_orders() {
        assert_eq!(GroupHandle::symmetric(6).unwrap().order(), BigUint::from(720u32));
        assert_eq!(GroupHandle::alternating(9).unwrap().order(), BigUint::from(181440u32));
        assert_eq!(GroupHandle::alternating(8).unwrap().order(), BigUint::from(20160u32));
        assert_eq!(GroupHandle::alternating(5).unwrap().order(), BigUint::from(60u32));
        assert!(GroupHandle::alternating(10).unwrap().generators().iter().all(Permutation::is_even));
    }

    #[test]
    fn chain_verifies() {
        for g in [GroupHandle::alternating(9).unwrap(), GroupHandle::symmetric(7).unwrap()] {
            assert!(g.chain().verify());
        }
    }

    #[test]
    fn elements_are_distinct_members() {
        let g = GroupHandle::symmetric(5).unwrap();
        let elems = g.element_list(1000).unwrap();
        assert_eq!(elems.len(), 120);
        let set: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn elements_respect_cap() {
        let g = GroupHandle::symmetric(8).unwrap();
        assert!(matches!(g.elements(1000), Err(Error::OrderExceedsCap { .. })));
    }

    #[test]
    fn semiregularity() {
        let g = GroupHandle::new(vec![perm("(1 2)(3 4)", 5)]).unwrap();
        assert!(!g.is_semiregular());
        let a9 = GroupHandle::alternating(9).unwrap();
        assert!(a9.is_transitive());
        assert!(!a9.is_semiregular());
        let c5 = GroupHandle::new(vec![perm("(1 2 3 4 5)", 5)]).unwrap();
        assert!(c5.is_regular());
    }

    #[test]
    fn stabilizer_order() {
        let g = GroupHandle::alternating(7).unwrap();
        let s = g.point_stabilizer(3);
        assert_eq!(s.order(), BigUint::from(360u32));
        assert!(s.generators().iter().all(|x| x.apply(3) == 3));
        assert!(s.is_subgroup_of(&g));
    }

    #[test]
    fn sylow_fives_of_a5_meet_trivially() {
        let a = GroupHandle::new(vec![perm("(1 2 3 4 5)", 5)]).unwrap();
        let b = GroupHandle::new(vec![perm("(1 2 3 5 4)", 5)]).unwrap();
        assert!(a.intersect_small(&b, 100).unwrap().is_trivial());
        assert_eq!(a.intersect_small(&a, 100).unwrap().order(), BigUint::from(5u32));
    }

    #[test]
    fn normality() {
        let s6 = GroupHandle::symmetric(6).unwrap();
        let a6 = GroupHandle::alternating(6).unwrap();
        assert!(a6.is_normal_in(&s6));
        let psl25 = GroupHandle::new(vec![perm("(1 2 3 4 5)", 6), perm("(1 6)(2 5)", 6)]).unwrap();
        assert_eq!(psl25.order(), BigUint::from(60u32));
        assert!(psl25.is_transitive());
        assert!(!psl25.is_normal_in(&s6));
    }

    #[test]
    fn index_requires_divisibility() {
        let s5 = GroupHandle::symmetric(5).unwrap();
        let a5 = GroupHandle::alternating(5).unwrap();
        assert_eq!(s5.subgroup_index(&a5).unwrap(), BigUint::from(2u32));
        let c7 = GroupHandle::new(vec![perm("(1 2 3 4 5 6 7)", 7)]).unwrap();
        let s4 = GroupHandle::symmetric(4).unwrap();
        assert!(c7.subgroup_index(&s4).is_err());
    }

    #[test]
    fn bounded_closure() {
        let gens = vec![perm("(1 2 3 4 5)", 9), perm("(1 2 3)", 9)];
        assert!(GroupHandle::closure_bounded(9, gens.clone(), &BigUint::from(60u32)).is_some());
        let more = vec![perm("(1 2 3 4 5)", 9), perm("(1 6 7)", 9)];
        assert!(GroupHandle::closure_bounded(9, more, &BigUint::from(60u32)).is_none());
        assert!(GroupHandle::generates_order(9, &gens, &BigUint::from(60u32)));
    }

    fn arb_gens() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
        (2usize..=8).prop_flat_map(|n| {
            let one = Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle();
            (Just(n), proptest::collection::vec(one, 1..=3))
        })
        .prop_map(|(n, imgs)| (n, imgs.into_iter().map(|v| Permutation::from_images(v).unwrap()).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn chain_matches_brute_force((n, gens) in arb_gens(), probes in proptest::collection::vec(any::<u64>(), 20)) {
            let g = GroupHandle::new(gens.clone()).unwrap();
            prop_assume!(g.order() <= BigUint::from(5000u32));
            let brute = brute_closure(&gens, n);
            prop_assert_eq!(g.order(), BigUint::from(brute.len()));
            prop_assert!(g.chain().verify());
            let listed: BTreeSet<_> = g.elements(5000).unwrap().collect();
            prop_assert_eq!(&listed, &brute);
            let all = GroupHandle::symmetric(n).unwrap();
            let total = all.order_u64().unwrap();
            let sym: Vec<_> = all.element_list(50_000).unwrap();
            for seed in probes {
                let p = &sym[(seed % total) as usize];
                prop_assert_eq!(g.contains(p), brute.contains(p));
            }
        }

        #[test]
        fn orbits_partition_and_divide((n, gens) in arb_gens()) {
            let g = GroupHandle::new(gens).unwrap();
            let orbits = g.orbits();
            prop_assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), n);
            for o in &orbits {
                prop_assert!((g.order() % BigUint::from(o.len())).is_zero());
                let stab = g.point_stabilizer(o[0]);
                prop_assert_eq!(stab.order() * BigUint::from(o.len()), g.order());
            }
        }
    }
}
