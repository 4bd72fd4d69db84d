//! Finite simple undirected graphs with sorted adjacency lists, and the
//! `.graph` text format (`graph N M` then `e u v` lines, 1-based, `u < v`).

use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from 0-based edges. Loops and out-of-range endpoints are
    /// errors; repeated edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {{{}, {}}} outside 1..={n}", u + 1, v + 1)));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Takes per-vertex neighbour lists, sorting them and checking symmetry.
    pub fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Result<Self> {
        let n = adj.len();
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.binary_search(&(v as u32)).is_ok() {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", v + 1)));
            }
            if list.last().is_some_and(|&w| w as usize >= n) {
                return Err(Error::InvalidGraph(format!("neighbour out of range at vertex {}", v + 1)));
            }
        }
        let g = Graph { adj };
        for u in 0..n {
            for &v in g.neighbors(u) {
                if !g.has_edge(v as usize, u) {
                    return Err(Error::InvalidGraph(format!("arc {} -> {} has no reverse", u + 1, v + 1)));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, l)| l.iter().filter(move |&&v| v as usize > u).map(move |&v| (u, v as usize)))
    }

    /// The common degree when every vertex has the same degree.
    pub fn regular_valency(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v as usize);
                }
            }
        }
        count == n
    }

    /// The graph with vertex `v` renamed `sigma(v)`.
    pub fn relabel(&self, sigma: &Permutation) -> Graph {
        assert_eq!(sigma.degree(), self.n(), "relabeling must act on the vertex set");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[sigma.apply(u)] = list.iter().map(|&v| sigma.apply(v as usize) as u32).collect();
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    /// Whether `p` maps edges onto edges. Since `p` is a bijection on a finite
    /// vertex set, non-edges then go to non-edges as well.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n()
            && self.adj.iter().enumerate().all(|(u, list)| {
                let pu = p.apply(u);
                self.adj[pu].len() == list.len() && list.iter().all(|&v| self.has_edge(pu, p.apply(v as usize)))
            })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header = None;
        let mut edges = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| Error::Parse(format!("line {}: {m}", lineno + 1));
            let toks: Vec<&str> = line.split_whitespace().collect();
            let nums = |toks: &[&str]| -> Result<Vec<usize>> {
                toks.iter().map(|t| t.parse::<usize>().map_err(|_| err(format!("bad number {t:?}")))).collect()
            };
            match toks[0] {
                "graph" if toks.len() == 3 && header.is_none() => {
                    let v = nums(&toks[1..])?;
                    header = Some((v[0], v[1]));
                }
                "e" if toks.len() == 3 => {
                    let (n, _) = header.ok_or_else(|| err("edge before header".into()))?;
                    let v = nums(&toks[1..])?;
                    let (u, w) = (v[0], v[1]);
                    if u == 0 || u >= w || w > n {
                        return Err(err(format!("edge {u} {w} must satisfy 1 <= u < v <= {n}")));
                    }
                    if !seen.insert((u, w)) {
                        return Err(err(format!("duplicate edge {u} {w}")));
                    }
                    edges.push((u - 1, w - 1));
                }
                _ => return Err(err(format!("unrecognised line {line:?}"))),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing graph header".into()))?;
        if edges.len() != m {
            return Err(Error::Parse(format!("header promises {m} edges, found {}", edges.len())));
        }
        Graph::from_edges(n, edges)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_string())?;
        Ok(())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} {}", self.n(), self.edge_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "e {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}
