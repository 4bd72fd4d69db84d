//! Feasible elements: 2-elements `g` of `G` with `g ∉ H`, `g² ∈ H`,
//! `|H : H ∩ H^g|` equal to the target valency and `<H, g> = G`. Each such `g`
//! gives a connected `G`-arc-transitive coset graph `Cos(G, H, HgH)` of that valency.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cosetgraph::{CosetTable, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::group::{default_cap, GroupHandle};
use crate::perm::Permutation;
use crate::subgroups;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// The order of `g` is a power of 2.
    TwoElement,
    NotInH,
    SquareInH,
    /// `|H : H ∩ H^g|` equals the target.
    Valency,
    /// `<H, g> = G`.
    Generation,
    /// `g` normalizes `H ∩ H^g`, the stabilizer of the edge `{H, Hg}`. Off by default.
    EdgeStabilizer,
}

impl Predicate {
    pub const DEFAULT_ORDER: [Predicate; 5] =
        [Predicate::TwoElement, Predicate::NotInH, Predicate::SquareInH, Predicate::Valency, Predicate::Generation];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::TwoElement => "two-element",
            Predicate::NotInH => "not-in-h",
            Predicate::SquareInH => "square-in-h",
            Predicate::Valency => "valency",
            Predicate::Generation => "generation",
            Predicate::EdgeStabilizer => "edge-stabilizer",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub valency: usize,
    pub enum_cap: u64,
    pub vertex_cap: u64,
    /// Order in which predicates are tested; every predicate of
    /// [`Predicate::DEFAULT_ORDER`] must appear.
    pub prune_order: Vec<Predicate>,
    pub edge_stabilizer_check: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// In a census, build the coset graph of one sample element per class.
    pub sample_graphs: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            valency: 5,
            enum_cap: default_cap(),
            vertex_cap: DEFAULT_VERTEX_CAP,
            prune_order: Predicate::DEFAULT_ORDER.to_vec(),
            edge_stabilizer_check: false,
            threads: None,
            sample_graphs: true,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.valency == 0 {
            return Err(Error::Precondition("valency must be at least 1".into()));
        }
        for p in Predicate::DEFAULT_ORDER {
            if !self.prune_order.contains(&p) {
                return Err(Error::Precondition(format!("prune order omits {p}")));
            }
        }
        Ok(())
    }

    fn predicates(&self) -> Vec<Predicate> {
        let mut order: Vec<Predicate> = Vec::new();
        for &p in &self.prune_order {
            if !order.contains(&p) && (p != Predicate::EdgeStabilizer || self.edge_stabilizer_check) {
                order.push(p);
            }
        }
        if self.edge_stabilizer_check && !order.contains(&Predicate::EdgeStabilizer) {
            order.push(Predicate::EdgeStabilizer);
        }
        order
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibleElement {
    #[serde(serialize_with = "display")]
    pub g: Permutation,
    pub valency: usize,
    #[serde(serialize_with = "display")]
    pub generated_order: BigUint,
}

fn display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible(FeasibleElement),
    /// The first predicate that failed, in the configured order.
    Fails(Predicate),
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }
}

/// Precomputed data for testing many candidates against one `(G, H)`.
pub struct Feasibility<'a> {
    group: &'a GroupHandle,
    sub: &'a GroupHandle,
    h_elements: Vec<Permutation>,
    h_set: HashSet<Permutation>,
    order: BigUint,
    predicates: Vec<Predicate>,
    valency: usize,
}

impl<'a> Feasibility<'a> {
    pub fn new(group: &'a GroupHandle, sub: &'a GroupHandle, config: &SearchConfig) -> Result<Self> {
        config.validate()?;
        if group.degree() != sub.degree() {
            return Err(Error::DegreeMismatch(group.degree(), sub.degree()));
        }
        let h_elements = sub.element_list(config.enum_cap)?;
        Ok(Feasibility {
            group,
            sub,
            h_set: h_elements.iter().cloned().collect(),
            h_elements,
            order: group.order(),
            predicates: config.predicates(),
            valency: config.valency,
        })
    }

    fn in_h(&self, p: &[u32]) -> bool {
        self.h_set.contains(p)
    }

    /// `h ↦ g h g⁻¹` applied to `h` as image arrays.
    fn conj_into(g: &Permutation, ginv: &Permutation, h: &Permutation, buf: &mut Vec<u32>) {
        buf.clear();
        buf.extend(g.images().iter().map(|&i| ginv.apply(h.apply(i as usize)) as u32));
    }

    /// `|H ∩ H^g|`: the `h` in `H` with `g h g⁻¹ ∈ H`.
    pub fn intersection_order(&self, g: &Permutation) -> usize {
        let ginv = g.inverse();
        let mut buf = Vec::with_capacity(g.degree());
        self.h_elements
            .iter()
            .filter(|h| {
                Self::conj_into(g, &ginv, h, &mut buf);
                self.in_h(&buf)
            })
            .count()
    }

    fn holds(&self, p: Predicate, g: &Permutation) -> bool {
        match p {
            Predicate::TwoElement => g.is_two_element(),
            Predicate::NotInH => !self.in_h(g.images()),
            Predicate::SquareInH => self.in_h(g.then(g).images()),
            Predicate::Valency => {
                let k = self.intersection_order(g);
                k * self.valency == self.h_elements.len()
            }
            Predicate::Generation => {
                let mut gens = self.sub.generators().to_vec();
                gens.push(g.clone());
                GroupHandle::generates_order(self.group.degree(), &gens, &self.order)
            }
            Predicate::EdgeStabilizer => {
                let ginv = g.inverse();
                let mut buf = Vec::with_capacity(g.degree());
                let edge: HashSet<&Permutation> = self
                    .h_elements
                    .iter()
                    .filter(|h| {
                        Self::conj_into(g, &ginv, h, &mut buf);
                        self.in_h(&buf)
                    })
                    .collect();
                edge.iter().all(|h| edge.contains(&h.conjugate_by(g)))
            }
        }
    }

    pub fn check(&self, g: &Permutation) -> Result<Verdict> {
        if g.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch(self.group.degree(), g.degree()));
        }
        for &p in &self.predicates {
            if !self.holds(p, g) {
                return Ok(Verdict::Fails(p));
            }
        }
        Ok(Verdict::Feasible(FeasibleElement {
            g: g.clone(),
            valency: self.h_elements.len() / self.intersection_order(g),
            generated_order: self.order.clone(),
        }))
    }

    fn scan<T: Send>(&self, cap: u64, f: impl Fn(&Permutation, Verdict) -> Option<T> + Sync) -> Result<Vec<T>> {
        const CHUNK: usize = 8192;
        let mut elems = self.group.elements(cap)?;
        let mut out = Vec::new();
        loop {
            let chunk: Vec<Permutation> = elems.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let part: Vec<T> = chunk
                .par_iter()
                .filter_map(|g| f(g, self.check(g).expect("degree matches G")))
                .collect();
            out.extend(part);
        }
        Ok(out)
    }
}

/// Tests one candidate.
pub fn is_feasible(group: &GroupHandle, sub: &GroupHandle, g: &Permutation, config: &SearchConfig) -> Result<Verdict> {
    if !group.contains(g) {
        return Err(Error::Precondition("g is not an element of G".into()));
    }
    Feasibility::new(group, sub, config)?.check(g)
}

/// Every feasible element of `G`, in the group's enumeration order.
pub fn search_feasible(group: &GroupHandle, sub: &GroupHandle, config: &SearchConfig) -> Result<Vec<FeasibleElement>> {
    let ctx = Feasibility::new(group, sub, config)?;
    config.run(|| {
        ctx.scan(config.enum_cap, |_, v| match v {
            Verdict::Feasible(fe) => Some(fe),
            Verdict::Fails(_) => None,
        })
    })?
}

/// For every element of `G`, the first failing predicate (or feasibility), tallied.
pub fn failure_profile(
    group: &GroupHandle,
    sub: &GroupHandle,
    config: &SearchConfig,
) -> Result<BTreeMap<Option<Predicate>, usize>> {
    let ctx = Feasibility::new(group, sub, config)?;
    let verdicts = config.run(|| {
        ctx.scan(config.enum_cap, |_, v| {
            Some(match v {
                Verdict::Feasible(_) => None,
                Verdict::Fails(p) => Some(p),
            })
        })
    })??;
    let mut out = BTreeMap::new();
    for v in verdicts {
        *out.entry(v).or_insert(0) += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleGraph {
    #[serde(serialize_with = "display")]
    pub g: Permutation,
    pub vertices: usize,
    pub valency: Option<usize>,
    pub connected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub type_label: String,
    /// 1-based, in the order classes are returned by the subgroup search.
    pub class_index: usize,
    pub class_size: u64,
    pub order: u64,
    pub count: usize,
    pub sample: Option<SampleGraph>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    #[serde(serialize_with = "display")]
    pub group_order: BigUint,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn counts(&self, label: &str) -> Vec<usize> {
        self.rows.iter().filter(|r| r.type_label == label).map(|r| r.count).collect()
    }
}

/// Class representatives of each type, with the number of feasible elements for each.
pub fn census(group: &GroupHandle, labels: &[&str], config: &SearchConfig) -> Result<CensusReport> {
    let mut rows = Vec::new();
    for label in labels {
        let reps = subgroups::find_class_reps(group, label, config.enum_cap)?;
        for (i, rep) in reps.iter().enumerate() {
            let found = search_feasible(group, &rep.group, config)?;
            let sample = match found.first() {
                Some(fe) if config.sample_graphs => {
                    let table = CosetTable::enumerate(group, &rep.group, config.enum_cap, config.vertex_cap)?;
                    let graph = table.coset_graph(&fe.g)?;
                    Some(SampleGraph {
                        g: fe.g.clone(),
                        vertices: graph.n(),
                        valency: graph.regular_valency(),
                        connected: graph.is_connected(),
                    })
                }
                _ => None,
            };
            rows.push(CensusRow {
                type_label: rep.type_label.clone().unwrap_or_else(|| label.to_string()),
                class_index: i + 1,
                class_size: rep.class_size,
                order: rep.order,
                count: found.len(),
                sample,
            });
        }
    }
    Ok(CensusReport { group_order: group.order(), rows })
}
