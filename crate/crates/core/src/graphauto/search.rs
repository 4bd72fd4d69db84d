//! Individualization-refinement search trees.
//!
//! The automorphism search follows the first path of the tree (always
//! individualizing the least vertex of the target cell) and then, level by
//! level from the bottom, looks in each sibling subtree for a leaf equivalent
//! to the first leaf. Vertices already known to be in the orbit of the
//! first-path vertex, or in the orbit of a sibling whose subtree failed, are
//! skipped; so are children related by known automorphisms fixing the current
//! path. The orbit of the path vertex at level `i` under the stabilizer of the
//! earlier path vertices is then complete, and the product of these orbit
//! lengths is the group order.

use rayon::prelude::*;

use super::partition::{OrderedPartition, Refiner};
use crate::cosetgraph::Graph;
use crate::perm::Permutation;

/// Label-free summary of a node: refinement trace and number of cells.
pub(crate) type Invariant = (u64, usize);

#[derive(Clone, Debug)]
pub(crate) struct Level {
    /// Partition at this node, before individualizing.
    pub(crate) part: OrderedPartition,
    pub(crate) target: usize,
    pub(crate) vertex: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct FirstPath {
    pub(crate) levels: Vec<Level>,
    /// `invariants[i]` describes the node at depth `i`; index 0 is the root.
    pub(crate) invariants: Vec<Invariant>,
    pub(crate) leaf: OrderedPartition,
}

pub(crate) fn child(refiner: &mut Refiner, part: &OrderedPartition, v: usize) -> (OrderedPartition, Invariant) {
    let mut q = part.clone();
    let s = q.individualize(v);
    let trace = refiner.refine(&mut q, &[s]);
    let cells = q.cell_count();
    (q, (trace, cells))
}

fn sorted_cell(part: &OrderedPartition, start: usize) -> Vec<usize> {
    let mut c: Vec<usize> = part.cell_members(start).iter().map(|&v| v as usize).collect();
    c.sort_unstable();
    c
}

pub(crate) fn first_path(graph: &Graph, initial: &OrderedPartition) -> FirstPath {
    let mut refiner = Refiner::new(graph);
    let mut part = initial.clone();
    let trace = refiner.refine_all(&mut part);
    let mut invariants = vec![(trace, part.cell_count())];
    let mut levels = Vec::new();
    while let Some(target) = part.target_cell() {
        let vertex = sorted_cell(&part, target)[0];
        let (next, inv) = child(&mut refiner, &part, vertex);
        levels.push(Level { part, target, vertex });
        invariants.push(inv);
        part = next;
    }
    FirstPath { levels, invariants, leaf: part }
}

/// The permutation taking the vertex at each position of `a` to the vertex at
/// the same position of `b`.
pub(crate) fn leaf_map(a: &OrderedPartition, b: &OrderedPartition) -> Permutation {
    let mut images = vec![0u32; a.n()];
    for (&x, &y) in a.order().iter().zip(b.order()) {
        images[x as usize] = y;
    }
    Permutation::from_images(images).expect("leaves are orderings of the vertex set")
}

/// Union-find over vertices with a flag per class.
#[derive(Clone, Debug)]
pub(crate) struct Orbits {
    parent: Vec<u32>,
    size: Vec<u32>,
    flag: Vec<bool>,
}

impl Orbits {
    pub(crate) fn new(n: usize) -> Self {
        Orbits { parent: (0..n as u32).collect(), size: vec![1; n], flag: vec![false; n] }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let p = self.parent[v] as usize;
            self.parent[v] = self.parent[p];
            v = p;
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        self.flag[a] |= self.flag[b];
    }

    pub(crate) fn add(&mut self, g: &Permutation) {
        for v in 0..g.degree() {
            self.union(v, g.apply(v));
        }
    }

    pub(crate) fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub(crate) fn class_size(&mut self, v: usize) -> usize {
        let r = self.find(v);
        self.size[r] as usize
    }

    pub(crate) fn flag(&mut self, v: usize) {
        let r = self.find(v);
        self.flag[r] = true;
    }

    pub(crate) fn flagged(&mut self, v: usize) -> bool {
        let r = self.find(v);
        self.flag[r]
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if index[r] == usize::MAX {
                index[r] = out.len();
                out.push(Vec::new());
            }
            out[index[r]].push(v);
        }
        out
    }
}

/// Orbits of the generators that fix every point of `prefix`, or `None` when
/// there are none.
pub(crate) fn stabilizer_orbits(n: usize, gens: &[Permutation], prefix: &[usize]) -> Option<Orbits> {
    let mut orbits: Option<Orbits> = None;
    for g in gens.iter().filter(|g| prefix.iter().all(|&p| g.apply(p) == p)) {
        orbits.get_or_insert_with(|| Orbits::new(n)).add(g);
    }
    orbits
}

pub(crate) struct AutSearch {
    pub(crate) generators: Vec<Permutation>,
    /// Orbit length of the first-path vertex at each level.
    pub(crate) level_orbits: Vec<usize>,
    pub(crate) path: FirstPath,
    pub(crate) orbits: Vec<Vec<usize>>,
}

struct Subtree<'a> {
    graph: &'a Graph,
    path: &'a FirstPath,
    gens: &'a [Permutation],
}

impl Subtree<'_> {
    /// Looks below `part` (at `depth`, reached along `prefix`) for a leaf
    /// equivalent to the first leaf.
    fn find(&self, refiner: &mut Refiner, part: &OrderedPartition, depth: usize, prefix: &mut Vec<usize>) -> Option<Permutation> {
        if part.is_discrete() {
            let gamma = leaf_map(&self.path.leaf, part);
            return self.graph.is_automorphism(&gamma).then_some(gamma);
        }
        let target = part.target_cell()?;
        let level = self.path.levels.get(depth)?;
        if target != level.target || part.cell_members(target).len() != level.part.cell_members(level.target).len() {
            return None;
        }
        let mut orbits = stabilizer_orbits(part.n(), self.gens, prefix);
        let mut explored: Vec<usize> = Vec::new();
        for y in sorted_cell(part, target) {
            if let Some(o) = orbits.as_mut() {
                if explored.iter().any(|&e| o.same(e, y)) {
                    continue;
                }
            }
            explored.push(y);
            let (next, inv) = child(refiner, part, y);
            if inv != self.path.invariants[depth + 1] {
                continue;
            }
            prefix.push(y);
            let found = self.find(refiner, &next, depth + 1, prefix);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Searches the subtree obtained by individualizing `w` at first-path level `level`.
    fn from_sibling(&self, level: usize, w: usize) -> Option<Permutation> {
        let mut refiner = Refiner::new(self.graph);
        let node = &self.path.levels[level];
        let (next, inv) = child(&mut refiner, &node.part, w);
        if inv != self.path.invariants[level + 1] {
            return None;
        }
        let mut prefix: Vec<usize> = self.path.levels[..level].iter().map(|l| l.vertex).collect();
        prefix.push(w);
        self.find(&mut refiner, &next, level + 1, &mut prefix)
    }
}

pub(crate) fn automorphisms(graph: &Graph, initial: &OrderedPartition, parallel: bool) -> AutSearch {
    let n = graph.n();
    let path = first_path(graph, initial);
    let depth = path.levels.len();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut level_orbits = vec![1; depth];
    let mut orbits = Orbits::new(n);
    let batch = if parallel { 2 * rayon::current_num_threads().max(1) } else { 1 };

    for level in (0..depth).rev() {
        let p = path.levels[level].vertex;
        let cell = sorted_cell(&path.levels[level].part, path.levels[level].target);
        // the generators found so far all fix the first `level` path vertices
        let mut stab = Orbits::new(n);
        for g in &gens {
            stab.add(g);
        }
        let mut rest = cell.into_iter().filter(|&w| w != p).peekable();
        while rest.peek().is_some() {
            let mut todo = Vec::with_capacity(batch);
            while todo.len() < batch {
                let Some(w) = rest.next() else { break };
                if !stab.same(w, p) && !stab.flagged(w) {
                    todo.push(w);
                }
            }
            let results: Vec<(usize, Option<Permutation>)> = {
                let tree = Subtree { graph, path: &path, gens: &gens };
                if parallel && todo.len() > 1 {
                    todo.par_iter().map(|&w| (w, tree.from_sibling(level, w))).collect()
                } else {
                    todo.iter().map(|&w| (w, tree.from_sibling(level, w))).collect()
                }
            };
            for (w, found) in results {
                if stab.same(w, p) || stab.flagged(w) {
                    continue;
                }
                match found {
                    Some(g) => {
                        stab.add(&g);
                        orbits.add(&g);
                        gens.push(g);
                    }
                    None => stab.flag(w),
                }
            }
        }
        level_orbits[level] = stab.class_size(p);
    }
    AutSearch { generators: gens, level_orbits, orbits: orbits.classes(), path }
}

/// Edge list of the graph relabeled by a leaf, sorted.
fn certificate(graph: &Graph, leaf: &OrderedPartition) -> Vec<(u32, u32)> {
    let pos = leaf.positions();
    let mut edges: Vec<(u32, u32)> = graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();
    edges
}

struct Best {
    invariants: Vec<Invariant>,
    certificate: Vec<(u32, u32)>,
    leaf: OrderedPartition,
}

/// The leaf maximizing (invariant sequence, certificate) over the whole tree,
/// pruned by invariants and by the orbits of `gens` fixing the current path.
pub(crate) fn canonical_leaf(graph: &Graph, initial: &OrderedPartition, gens: &[Permutation]) -> OrderedPartition {
    let mut refiner = Refiner::new(graph);
    let mut root = initial.clone();
    let trace = refiner.refine_all(&mut root);
    let mut best: Option<Best> = None;
    let mut invs = vec![(trace, root.cell_count())];
    let mut prefix = Vec::new();
    canon_dfs(graph, gens, &mut refiner, &root, &mut invs, &mut prefix, &mut best);
    best.expect("the tree has a leaf").leaf
}

fn canon_dfs(
    graph: &Graph,
    gens: &[Permutation],
    refiner: &mut Refiner,
    part: &OrderedPartition,
    invs: &mut Vec<Invariant>,
    prefix: &mut Vec<usize>,
    best: &mut Option<Best>,
) {
    if let Some(b) = best.as_ref() {
        let k = invs.len().min(b.invariants.len());
        if invs[..k] < b.invariants[..k] {
            return;
        }
    }
    let Some(target) = part.target_cell() else {
        let cert = certificate(graph, part);
        let better = match best.as_ref() {
            None => true,
            Some(b) => (invs.as_slice(), cert.as_slice()) > (b.invariants.as_slice(), b.certificate.as_slice()),
        };
        if better {
            *best = Some(Best { invariants: invs.clone(), certificate: cert, leaf: part.clone() });
        }
        return;
    };
    let mut orbits = stabilizer_orbits(part.n(), gens, prefix);
    let mut explored: Vec<usize> = Vec::new();
    for y in sorted_cell(part, target) {
        if let Some(o) = orbits.as_mut() {
            if explored.iter().any(|&e| o.same(e, y)) {
                continue;
            }
        }
        explored.push(y);
        let (next, inv) = child(refiner, part, y);
        invs.push(inv);
        prefix.push(y);
        canon_dfs(graph, gens, refiner, &next, invs, prefix, best);
        prefix.pop();
        invs.pop();
    }
}
