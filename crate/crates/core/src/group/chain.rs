//! Base and strong generating set, built by randomized Schreier–Sims and then
//! completed deterministically so that every Schreier generator sifts.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// Consecutive random elements that must sift before the random phase stops.
const RANDOM_SIFT_STREAK: usize = 40;
const RANDOM_SEED: u64 = 0x5eed_5c4e_1e52;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// Indices into the chain's strong generators that fix all earlier base points.
    gens: Vec<usize>,
    /// Basic orbit in breadth-first order, starting with `point`.
    orbit: Vec<u32>,
    /// Schreier vector: for each orbit point the index of the strong generator
    /// that reaches it from its parent.
    label: Vec<u32>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut label = vec![NOT_IN_ORBIT; degree];
        label[point] = ROOT;
        Level { point, gens: Vec::new(), orbit: vec![point as u32], label }
    }

    #[inline]
    fn contains(&self, point: usize) -> bool {
        self.label[point] != NOT_IN_ORBIT
    }

    fn rebuild_orbit(&mut self, strong: &[Permutation]) {
        for &p in &self.orbit {
            self.label[p as usize] = NOT_IN_ORBIT;
        }
        self.orbit.clear();
        self.orbit.push(self.point as u32);
        self.label[self.point] = ROOT;
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head] as usize;
            head += 1;
            for &s in &self.gens {
                let gamma = strong[s].apply(beta);
                if self.label[gamma] == NOT_IN_ORBIT {
                    self.label[gamma] = s as u32;
                    self.orbit.push(gamma as u32);
                }
            }
        }
    }
}

/// Outcome of building a chain under an order bound.
#[derive(Debug)]
pub(crate) enum BuildOutcome {
    Complete(StabilizerChain),
    /// The running order exceeded the bound; the group is strictly larger.
    Exceeded,
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    strong: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a verified chain for `<gens>`. The base starts with `base_prefix`
    /// and continues with first moved points of sifted residues.
    pub fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Self {
        match Self::build_bounded(degree, gens, base_prefix, None, None) {
            BuildOutcome::Complete(c) => c,
            BuildOutcome::Exceeded => unreachable!("no bound given"),
        }
    }

    /// `upper_bound`: the caller knows `|<gens>|` cannot exceed this value; reaching
    /// it during the random phase certifies the chain without further checks.
    /// `abort_above`: stop as soon as the certified lower bound on the order
    /// exceeds this value.
    pub(crate) fn build_bounded(
        degree: usize,
        gens: &[Permutation],
        base_prefix: &[usize],
        upper_bound: Option<&BigUint>,
        abort_above: Option<&BigUint>,
    ) -> BuildOutcome {
        let mut chain = StabilizerChain { degree, strong: Vec::new(), strong_inv: Vec::new(), levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return BuildOutcome::Complete(chain);
        }
        let exceeded = |c: &StabilizerChain| abort_above.is_some_and(|b| &c.order() > b);
        let reached = |c: &StabilizerChain| upper_bound.is_some_and(|b| &c.order() >= b);

        for g in &gens {
            let (res, level) = chain.sift_from(g, 0);
            if !res.is_identity() {
                chain.insert(res, 0, level);
            }
        }
        if exceeded(&chain) {
            return BuildOutcome::Exceeded;
        }
        if reached(&chain) {
            return BuildOutcome::Complete(chain);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
        let mut pool = ProductReplacement::new(&gens, &mut rng);
        let mut streak = 0;
        while streak < RANDOM_SIFT_STREAK {
            let r = pool.next(&mut rng);
            let (res, level) = chain.sift_from(&r, 0);
            if res.is_identity() {
                streak += 1;
                continue;
            }
            streak = 0;
            chain.insert(res, 0, level);
            if exceeded(&chain) {
                return BuildOutcome::Exceeded;
            }
            if reached(&chain) {
                return BuildOutcome::Complete(chain);
            }
        }

        if !chain.complete_deterministically(abort_above) {
            return BuildOutcome::Exceeded;
        }
        BuildOutcome::Complete(chain)
    }

    /// Adds `res` (which fixes base points `..=level` except possibly at `level`)
    /// as a strong generator to levels `from..=level`, extending the base if needed.
    fn insert(&mut self, res: Permutation, from: usize, level: usize) {
        let idx = self.strong.len();
        if level == self.levels.len() {
            let p = res.first_moved_point().expect("nonidentity residue");
            self.levels.push(Level::new(p, self.degree));
        }
        self.strong_inv.push(res.inverse());
        self.strong.push(res);
        for l in from..=level {
            self.levels[l].gens.push(idx);
            self.levels[l].rebuild_orbit(&self.strong);
        }
    }

    /// Schreier–Sims completion: every Schreier generator at every level must sift
    /// through the levels below it. Returns false if `abort_above` is exceeded.
    fn complete_deterministically(&mut self, abort_above: Option<&BigUint>) -> bool {
        if self.levels.is_empty() {
            return true;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.find_failing_schreier_generator(i) {
                Some((res, level)) => {
                    self.insert(res, i + 1, level);
                    if abort_above.is_some_and(|b| &self.order() > b) {
                        return false;
                    }
                    i = level;
                }
                None => {
                    if i == 0 {
                        return true;
                    }
                    i -= 1;
                }
            }
        }
    }

    fn find_failing_schreier_generator(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u = self.transversal(i, beta as usize);
            for &s in &level.gens {
                let image = self.strong[s].apply(beta as usize);
                // tree edges give trivial Schreier generators
                if level.label[image] == s as u32 && self.strong_inv[s].apply(image) == beta as usize {
                    continue;
                }
                let h = u.then(&self.strong[s]);
                let (res, _) = self.strip_level(h, i);
                let (res, failed) = self.sift_from(&res, i + 1);
                if !res.is_identity() {
                    return Some((res, failed));
                }
            }
        }
        None
    }

    /// `h · u_β⁻¹` where β is the image of level `i`'s base point under `h`.
    fn strip_level(&self, mut h: Permutation, i: usize) -> (Permutation, bool) {
        let level = &self.levels[i];
        let mut beta = h.apply(level.point);
        if !level.contains(beta) {
            return (h, false);
        }
        let mut buf = Vec::with_capacity(self.degree);
        while beta != level.point {
            let s = level.label[beta] as usize;
            h.then_into(&self.strong_inv[s], &mut buf);
            std::mem::swap(&mut buf, h.images_mut());
            beta = self.strong_inv[s].apply(beta);
        }
        (h, true)
    }

    /// Sifts `g` starting at level `start`. Returns the residue and the index of the
    /// level where sifting stopped (`depth()` when it ran through every level).
    pub(crate) fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            let (next, ok) = self.strip_level(h, i);
            h = next;
            if !ok {
                return (h, i);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, _) = self.sift_from(g, 0);
        res.is_identity()
    }

    /// The transversal element `u` with `base[i]^u = point`.
    pub fn transversal(&self, i: usize, point: usize) -> Permutation {
        let level = &self.levels[i];
        let mut path = Vec::new();
        let mut beta = point;
        while beta != level.point {
            let s = level.label[beta] as usize;
            path.push(s);
            beta = self.strong_inv[s].apply(beta);
        }
        let mut u = Permutation::identity(self.degree);
        for &s in path.iter().rev() {
            u = u.then(&self.strong[s]);
        }
        u
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn basic_orbit(&self, i: usize) -> &[u32] {
        &self.levels[i].orbit
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Strong generators that fix the first `i` base points.
    pub fn level_generators(&self, i: usize) -> Vec<Permutation> {
        if i >= self.levels.len() {
            return Vec::new();
        }
        self.levels[i].gens.iter().map(|&s| self.strong[s].clone()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// The chain for the stabilizer of the first `k` base points.
    pub fn suffix(&self, k: usize) -> StabilizerChain {
        let keep: Vec<usize> = if k < self.levels.len() { self.levels[k].gens.clone() } else { Vec::new() };
        let mut remap = vec![usize::MAX; self.strong.len()];
        let mut strong = Vec::new();
        let mut strong_inv = Vec::new();
        for &s in &keep {
            remap[s] = strong.len();
            strong.push(self.strong[s].clone());
            strong_inv.push(self.strong_inv[s].clone());
        }
        let levels = self.levels[k.min(self.levels.len())..]
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.gens = l.gens.iter().map(|&s| remap[s]).collect();
                for &p in &l.orbit {
                    if l.label[p as usize] != ROOT {
                        l.label[p as usize] = remap[l.label[p as usize] as usize] as u32;
                    }
                }
                l
            })
            .collect();
        StabilizerChain { degree: self.degree, strong, strong_inv, levels }
    }

    /// Transversals per level, each sorted by orbit point.
    pub(crate) fn sorted_transversals(&self) -> Vec<Vec<Permutation>> {
        (0..self.levels.len())
            .map(|i| {
                let mut pts: Vec<u32> = self.levels[i].orbit.clone();
                pts.sort_unstable();
                pts.into_iter().map(|p| self.transversal(i, p as usize)).collect()
            })
            .collect()
    }

    /// Checks the defining invariants; used by tests.
    pub fn verify(&self) -> bool {
        for (i, level) in self.levels.iter().enumerate() {
            for b in &self.levels[..i] {
                if level.gens.iter().any(|&s| self.strong[s].apply(b.point) != b.point) {
                    return false;
                }
            }
            for &p in &level.orbit {
                if self.transversal(i, p as usize).apply(level.point) != p as usize {
                    return false;
                }
            }
        }
        if self.strong.iter().any(|s| !self.contains(s)) {
            return false;
        }
        (0..self.levels.len()).all(|i| self.find_failing_schreier_generator(i).is_none())
    }
}

/// Product replacement random elements.
struct ProductReplacement {
    slots: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    fn new(gens: &[Permutation], rng: &mut ChaCha8Rng) -> Self {
        let n = gens.len().max(1);
        let size = (2 * n).max(10);
        let slots = (0..size).map(|i| gens[i % n].clone()).collect();
        let mut pr = ProductReplacement { slots, acc: Permutation::identity(gens[0].degree()) };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    fn next(&mut self, rng: &mut ChaCha8Rng) -> Permutation {
        let k = self.slots.len();
        let i = rng.gen_range(0..k);
        let mut j = rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        let invert = rng.gen_bool(0.5);
        let left = rng.gen_bool(0.5);
        let sj = if invert { self.slots[j].inverse() } else { self.slots[j].clone() };
        self.slots[i] = if left { sj.then(&self.slots[i]) } else { self.slots[i].then(&sj) };
        self.acc = self.acc.then(&self.slots[i]);
        self.acc.clone()
    }
}
