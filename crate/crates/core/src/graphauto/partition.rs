//! Ordered partitions of the vertex set and equitable refinement.
//!
//! Cells occupy contiguous ranges of `elems` and are named by their start
//! index. Refinement splits a cell by the number of neighbours each vertex has
//! in a splitter cell; the split depends only on those counts and on cell
//! positions, never on vertex names, so it commutes with relabeling.

use std::collections::VecDeque;

use crate::cosetgraph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell containing each vertex.
    cell_of: Vec<u32>,
    /// Cell length, valid at cell starts.
    len: Vec<u32>,
    cells: usize,
}

impl OrderedPartition {
    /// The partition with a single cell.
    pub fn unit(n: usize) -> Self {
        let mut len = vec![0; n];
        if n > 0 {
            len[0] = n as u32;
        }
        OrderedPartition {
            elems: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell_of: vec![0; n],
            len,
            cells: usize::from(n > 0),
        }
    }

    /// Cells of equal colour, ordered by colour value.
    pub fn from_colors(colors: &[u32]) -> Self {
        let n = colors.len();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (colors[v as usize], v));
        let mut p = OrderedPartition { elems, pos: vec![0; n], cell_of: vec![0; n], len: vec![0; n], cells: 0 };
        let mut start = 0;
        for i in 0..n {
            let v = p.elems[i] as usize;
            p.pos[v] = i as u32;
            if i > 0 && colors[v] != colors[p.elems[i - 1] as usize] {
                p.len[start] = (i - start) as u32;
                p.cells += 1;
                start = i;
            }
            p.cell_of[v] = start as u32;
        }
        if n > 0 {
            p.len[start] = (n - start) as u32;
            p.cells += 1;
        }
        p
    }

    /// Builds a partition from explicit cells, which must cover `0..n` exactly once.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut colors = vec![u32::MAX; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                assert_eq!(colors[v], u32::MAX, "vertex {v} in two cells");
                colors[v] = c as u32;
            }
        }
        assert!(colors.iter().all(|&c| c != u32::MAX), "cells must cover every vertex");
        Self::from_colors(&colors)
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    /// Cells in order, each listed in ascending vertex order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.n() {
            let l = self.len[s] as usize;
            let mut cell: Vec<usize> = self.elems[s..s + l].iter().map(|&v| v as usize).collect();
            cell.sort_unstable();
            out.push(cell);
            s += l;
        }
        out
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells().iter().map(Vec::len).collect()
    }

    /// Vertices in cell order; for a discrete partition this is the labeling
    /// `position -> vertex`.
    pub fn order(&self) -> &[u32] {
        &self.elems
    }

    /// Position of each vertex in the ordering.
    pub(crate) fn positions(&self) -> &[u32] {
        &self.pos
    }

    pub(crate) fn cell_members(&self, start: usize) -> &[u32] {
        &self.elems[start..start + self.len[start] as usize]
    }

    /// Start of the first smallest cell with more than one vertex.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let l = self.len[s];
            if l > 1 && best.is_none_or(|(bl, _)| l < bl) {
                best = Some((l, s));
            }
            s += l as usize;
        }
        best.map(|(_, s)| s)
    }

    fn swap_to(&mut self, v: usize, i: usize) {
        let j = self.pos[v] as usize;
        let w = self.elems[i] as usize;
        self.elems.swap(i, j);
        self.pos[v] = i as u32;
        self.pos[w] = j as u32;
    }

    /// Splits `{v}` off the front of its cell and returns the start of `{v}`.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v] as usize;
        let l = self.len[s] as usize;
        debug_assert!(l > 1);
        self.swap_to(v, s);
        self.len[s] = 1;
        self.len[s + 1] = (l - 1) as u32;
        for i in s + 1..s + l {
            self.cell_of[self.elems[i] as usize] = (s + 1) as u32;
        }
        self.cells += 1;
        s
    }
}

/// FNV-style mixing that is stable across runs and platforms.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Trace(u64);

impl Trace {
    pub(crate) fn new() -> Self {
        Trace(0xcbf2_9ce4_8422_2325)
    }

    pub(crate) fn mix(&mut self, x: u64) {
        self.0 ^= x;
        self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        self.0 ^= self.0 >> 29;
    }

    pub(crate) fn value(self) -> u64 {
        self.0
    }
}

/// Reusable buffers for refinement.
pub(crate) struct Refiner<'g> {
    graph: &'g Graph,
    count: Vec<u32>,
    touched: Vec<u32>,
    queued: Vec<bool>,
}

impl<'g> Refiner<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        let n = graph.n();
        Refiner { graph, count: vec![0; n], touched: Vec::new(), queued: vec![false; n] }
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using every
    /// cell as an initial splitter.
    pub(crate) fn refine_all(&mut self, p: &mut OrderedPartition) -> u64 {
        let mut starts = Vec::new();
        let mut s = 0;
        while s < p.n() {
            starts.push(s);
            s += p.len[s] as usize;
        }
        self.refine(p, &starts)
    }

    /// Refines with the given splitter cells queued; `p` must already be
    /// equitable with respect to every other cell. Returns a trace hash that
    /// depends only on the label-free course of the refinement.
    pub(crate) fn refine(&mut self, p: &mut OrderedPartition, splitters: &[usize]) -> u64 {
        let mut trace = Trace::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            if !self.queued[s] {
                self.queued[s] = true;
                queue.push_back(s);
            }
        }
        let mut splitter = Vec::new();
        let mut groups: Vec<(u32, u32)> = Vec::new();
        while let Some(s) = queue.pop_front() {
            self.queued[s] = false;
            if p.is_discrete() {
                continue;
            }
            splitter.clear();
            splitter.extend_from_slice(p.cell_members(s));
            for &u in &splitter {
                for &w in self.graph.neighbors(u as usize) {
                    if self.count[w as usize] == 0 {
                        self.touched.push(w);
                    }
                    self.count[w as usize] += 1;
                }
            }
            trace.mix(s as u64);
            trace.mix(self.touched.len() as u64);
            // group touched vertices by cell, then by count
            let count = &self.count;
            let cell_of = &p.cell_of;
            self.touched.sort_unstable_by_key(|&w| (cell_of[w as usize], count[w as usize], w));
            let mut i = 0;
            while i < self.touched.len() {
                let c = p.cell_of[self.touched[i] as usize] as usize;
                let mut j = i;
                while j < self.touched.len() && p.cell_of[self.touched[j] as usize] as usize == c {
                    j += 1;
                }
                self.split_cell(p, c, i, j, &mut trace, &mut queue, &mut groups);
                i = j;
            }
            for &w in &self.touched {
                self.count[w as usize] = 0;
            }
            self.touched.clear();
        }
        trace.mix(p.cells as u64);
        trace.value()
    }

    /// Splits cell `c` according to the counts of `touched[i..j]`, the touched
    /// vertices of that cell sorted by count.
    #[allow(clippy::too_many_arguments)]
    fn split_cell(
        &mut self,
        p: &mut OrderedPartition,
        c: usize,
        i: usize,
        j: usize,
        trace: &mut Trace,
        queue: &mut VecDeque<usize>,
        groups: &mut Vec<(u32, u32)>,
    ) {
        let l = p.len[c] as usize;
        let t = j - i;
        let first = self.count[self.touched[i] as usize];
        if t == l && self.count[self.touched[j - 1] as usize] == first {
            trace.mix(((c as u64) << 32) | first as u64);
            return;
        }
        // fragment sizes by count: untouched (count 0) first, then ascending counts
        groups.clear();
        if t < l {
            groups.push((0, (l - t) as u32));
        }
        let mut k = i;
        while k < j {
            let cnt = self.count[self.touched[k] as usize];
            let mut m = k;
            while m < j && self.count[self.touched[m] as usize] == cnt {
                m += 1;
            }
            groups.push((cnt, (m - k) as u32));
            k = m;
        }
        // touched vertices go to the tail, in count order
        let tail = c + l - t;
        for (off, idx) in (i..j).enumerate() {
            p.swap_to(self.touched[idx] as usize, tail + off);
        }
        trace.mix(c as u64);
        let was_queued = self.queued[c];
        let mut largest = 0;
        for (gi, &(_, size)) in groups.iter().enumerate() {
            if size > groups[largest].1 {
                largest = gi;
            }
        }
        let mut start = c;
        for (gi, &(cnt, size)) in groups.iter().enumerate() {
            trace.mix(((cnt as u64) << 32) | size as u64);
            p.len[start] = size;
            if gi > 0 {
                for q in start..start + size as usize {
                    p.cell_of[p.elems[q] as usize] = start as u32;
                }
                p.cells += 1;
            }
            let enqueue = if was_queued { gi > 0 } else { gi != largest };
            if enqueue && !self.queued[start] {
                self.queued[start] = true;
                queue.push_back(start);
            }
            start += size as usize;
        }
    }
}

/// The coarsest equitable partition finer than `p`.
pub fn refine(graph: &Graph, p: &OrderedPartition) -> OrderedPartition {
    let mut q = p.clone();
    Refiner::new(graph).refine_all(&mut q);
    q
}

/// Whether every vertex of each cell has the same number of neighbours in every cell.
pub fn is_equitable(graph: &Graph, p: &OrderedPartition) -> bool {
    let cells = p.cells();
    let mut cell_index = vec![0usize; p.n()];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            cell_index[v] = i;
        }
    }
    let profile = |v: usize| {
        let mut counts = vec![0usize; cells.len()];
        for &w in graph.neighbors(v) {
            counts[cell_index[w as usize]] += 1;
        }
        counts
    };
    cells.iter().all(|c| {
        let first = profile(c[0]);
        c[1..].iter().all(|&v| profile(v) == first)
    })
}
