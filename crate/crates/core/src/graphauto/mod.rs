//! Automorphism groups, canonical forms and transitivity of graphs.
//!
//! The search is the usual individualization-refinement scheme: equitable
//! refinement, a target cell chosen as the first smallest non-singleton cell,
//! and branching in ascending vertex order. Node invariants are the refinement
//! trace together with the cell count.

mod partition;
mod search;

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::cosetgraph::Graph;
use crate::error::{Error, Result};
use crate::group::{BuildOutcome, GroupHandle, StabilizerChain};
use crate::perm::Permutation;

pub use partition::{is_equitable, refine, OrderedPartition};

/// Graphs above this many vertices are refused.
pub const MAX_VERTICES: usize = 50_000;

#[derive(Clone, Debug, Default)]
pub struct AutOptions {
    /// Explore sibling subtrees concurrently.
    pub parallel: bool,
    /// Vertex limit; defaults to [`MAX_VERTICES`].
    pub max_vertices: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    /// Vertex orbits, each sorted, ordered by least element.
    pub orbits: Vec<Vec<usize>>,
    /// The vertices fixed in turn along the first search path.
    pub base: Vec<usize>,
    /// Orbit length of each base vertex under the stabilizer of the earlier ones.
    pub level_orbits: Vec<usize>,
    degree: usize,
}

impl AutResult {
    pub fn group(&self) -> GroupHandle {
        GroupHandle::with_degree(self.degree.max(1), self.generators.clone()).expect("generators act on the vertices")
    }

    /// The summary line `order=<N> orbits=<k> generators=<m>`.
    pub fn summary(&self) -> String {
        format!("order={} orbits={} generators={}", self.order, self.orbits.len(), self.generators.len())
    }
}

fn check_size(graph: &Graph, limit: Option<usize>) -> Result<()> {
    let cap = limit.unwrap_or(MAX_VERTICES);
    if graph.n() > cap {
        return Err(Error::GraphTooLarge { n: graph.n(), cap });
    }
    Ok(())
}

fn initial_partition(graph: &Graph, colors: Option<&[u32]>) -> Result<OrderedPartition> {
    match colors {
        None => Ok(OrderedPartition::unit(graph.n())),
        Some(c) if c.len() == graph.n() => Ok(OrderedPartition::from_colors(c)),
        Some(c) => Err(Error::Precondition(format!("{} colours for {} vertices", c.len(), graph.n()))),
    }
}

/// The automorphism group of `graph`, restricted to colour-preserving maps when
/// `colors` is given.
pub fn automorphism_group(graph: &Graph, colors: Option<&[u32]>, options: &AutOptions) -> Result<AutResult> {
    check_size(graph, options.max_vertices)?;
    let n = graph.n();
    if n == 0 {
        return Ok(AutResult {
            generators: Vec::new(),
            order: BigUint::from(1u32),
            orbits: Vec::new(),
            base: Vec::new(),
            level_orbits: Vec::new(),
            degree: 0,
        });
    }
    let initial = initial_partition(graph, colors)?;
    let found = search::automorphisms(graph, &initial, options.parallel);
    let product: BigUint = found.level_orbits.iter().map(|&k| BigUint::from(k)).product();
    let base: Vec<usize> = found.path.levels.iter().map(|l| l.vertex).collect();
    if !found.generators.is_empty() {
        // the generators must generate a group of exactly the predicted order
        match StabilizerChain::build_bounded(n, &found.generators, &base, Some(&product), Some(&product)) {
            BuildOutcome::Complete(chain) => {
                assert_eq!(chain.order(), product, "automorphism generators do not match the search tree")
            }
            BuildOutcome::Exceeded => panic!("automorphism generators exceed the search-tree order"),
        }
    }
    let mut orbits = found.orbits;
    orbits.sort();
    Ok(AutResult {
        generators: found.generators,
        order: product,
        orbits,
        base,
        level_orbits: found.level_orbits,
        degree: n,
    })
}

/// A canonical relabeling of `graph`: isomorphic graphs give equal canonical
/// graphs. The permutation maps each vertex to its canonical label.
pub fn canonical_form(graph: &Graph) -> Result<(Graph, Permutation)> {
    check_size(graph, None)?;
    let n = graph.n();
    if n == 0 {
        return Ok((Graph::empty(0), Permutation::identity(0)));
    }
    let initial = OrderedPartition::unit(n);
    let aut = search::automorphisms(graph, &initial, false);
    let leaf = search::canonical_leaf(graph, &initial, &aut.generators);
    let images: Vec<u32> = leaf.positions().to_vec();
    let sigma = Permutation::from_images(images).expect("positions form a permutation");
    Ok((graph.relabel(&sigma), sigma))
}

/// An isomorphism from `a` to `b`, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Result<Option<Permutation>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (ca, sa) = canonical_form(a)?;
    let (cb, sb) = canonical_form(b)?;
    Ok((ca == cb).then(|| sa.then(&sb.inverse())))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

fn gens_or_aut(graph: &Graph, gens: Option<&[Permutation]>) -> Result<Vec<Permutation>> {
    match gens {
        Some(g) => {
            if let Some(bad) = g.iter().find(|p| p.degree() != graph.n() || !graph.is_automorphism(p)) {
                return Err(Error::NotAutomorphism(bad.to_string()));
            }
            Ok(g.to_vec())
        }
        None => Ok(automorphism_group(graph, None, &AutOptions::default())?.generators),
    }
}

fn orbit_count(n: usize, gens: &[Permutation], act: impl Fn(&Permutation, usize) -> usize) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = act(g, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Whether the group generated by `gens` (by default the full automorphism
/// group) is transitive on vertices.
pub fn is_vertex_transitive(graph: &Graph, gens: Option<&[Permutation]>) -> Result<bool> {
    let gens = gens_or_aut(graph, gens)?;
    Ok(graph.n() <= 1 || orbit_count(graph.n(), &gens, |g, v| g.apply(v)) == 1)
}

/// Whether the group generated by `gens` (by default the full automorphism
/// group) is transitive on the `2|E|` arcs.
pub fn is_arc_transitive(graph: &Graph, gens: Option<&[Permutation]>) -> Result<bool> {
    let gens = gens_or_aut(graph, gens)?;
    let n = graph.n();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + graph.degree(v);
    }
    let arcs = offset[n];
    if arcs == 0 {
        return Ok(false);
    }
    let arc_of = |u: usize, w: usize| {
        let i = graph.neighbors(u).binary_search(&(w as u32)).expect("automorphisms map arcs to arcs");
        offset[u] + i
    };
    let mut source = vec![0usize; arcs];
    for v in 0..n {
        source[offset[v]..offset[v + 1]].fill(v);
    }
    let count = orbit_count(arcs, &gens, |g, a| {
        let u = source[a];
        let w = graph.neighbors(u)[a - offset[u]] as usize;
        arc_of(g.apply(u), g.apply(w))
    });
    Ok(count == 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityReport {
    pub aut_order: String,
    pub group_order: String,
    /// `|A| / |G|`, or `None` when `|G|` does not divide `|A|`.
    pub index: Option<String>,
    pub normal: bool,
}

/// Compares `G`, acting on the vertices, with `A = Aut(graph)`. `group_order`
/// may be supplied when it is already known.
pub fn normality_report(graph: &Graph, g: &GroupHandle, group_order: Option<&BigUint>) -> Result<NormalityReport> {
    if g.degree() != graph.n() {
        return Err(Error::DegreeMismatch(graph.n(), g.degree()));
    }
    let gens = gens_or_aut(graph, Some(g.generators()))?;
    let aut = automorphism_group(graph, None, &AutOptions::default())?;
    let go = match group_order {
        Some(o) => o.clone(),
        None => g.order(),
    };
    let index = (&aut.order % &go == BigUint::from(0u32)).then(|| (&aut.order / &go).to_string());
    // G is normal in A iff every conjugate of a generator of G by a generator of A lies in G
    let normal = aut.generators.iter().all(|t| gens.iter().all(|x| g.contains(&x.conjugate_by(t))));
    Ok(NormalityReport { aut_order: aut.order.to_string(), group_order: go.to_string(), index, normal })
}

/// Brute-force automorphism count over all `n!` permutations, for small `n`.
pub fn brute_force_aut_order(graph: &Graph) -> u64 {
    let n = graph.n();
    let mut images: Vec<u32> = vec![u32::MAX; n];
    let mut used = vec![false; n];
    fn go(graph: &Graph, v: usize, images: &mut Vec<u32>, used: &mut Vec<bool>) -> u64 {
        let n = graph.n();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] {
                continue;
            }
            // adjacency to already mapped vertices must be preserved
            let ok = (0..v).all(|u| graph.has_edge(u, v) == graph.has_edge(images[u] as usize, w));
            if ok {
                used[w] = true;
                images[v] = w as u32;
                total += go(graph, v + 1, images, used);
                used[w] = false;
            }
        }
        images[v] = u32::MAX;
        total
    }
    go(graph, 0, &mut images, &mut used)
}

/// Counts how often each canonical graph occurs; used to group graphs into
/// isomorphism classes.
pub fn isomorphism_classes(graphs: &[Graph]) -> Result<Vec<Vec<usize>>> {
    let mut index: HashMap<Graph, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let (c, _) = canonical_form(g)?;
        let k = *index.entry(c).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(i);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosetgraph::builders;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn order(g: &Graph) -> BigUint {
        automorphism_group(g, None, &AutOptions::default()).unwrap().order
    }

    fn random_relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut img: Vec<u32> = (0..g.n() as u32).collect();
        img.shuffle(rng);
        g.relabel(&Permutation::from_images(img).unwrap())
    }

    #[test]
    fn known_orders() {
        let cases: Vec<(Graph, u64)> = vec![
            (builders::complete(6), 720),
            (builders::complete_bipartite(5, 5), 28800),
            (builders::icosahedron(), 120),
            (builders::complete_bipartite_minus_matching(6), 1440),
            (builders::petersen(), 120),
            (builders::hypercube(4), 384),
            (builders::cycle(7), 14),
            (builders::path(5), 2),
        ];
        for (g, expected) in cases {
            assert_eq!(order(&g), BigUint::from(expected), "graph on {} vertices", g.n());
        }
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = builders::icosahedron();
        let aut = automorphism_group(&g, None, &AutOptions::default()).unwrap();
        assert!(aut.generators.iter().all(|p| g.is_automorphism(p)));
        assert_eq!(aut.orbits.len(), 1);
        assert_eq!(aut.group().order(), aut.order);
    }

    #[test]
    fn colours_restrict_the_group() {
        let g = builders::complete(4);
        let aut = automorphism_group(&g, Some(&[0, 0, 1, 1]), &AutOptions::default()).unwrap();
        assert_eq!(aut.order, BigUint::from(4u32));
        assert_eq!(aut.orbits, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn parallel_matches_sequential() {
        for g in [builders::icosahedron(), builders::hypercube(5), builders::complete_bipartite(4, 4)] {
            let a = automorphism_group(&g, None, &AutOptions::default()).unwrap();
            let b = automorphism_group(&g, None, &AutOptions { parallel: true, ..Default::default() }).unwrap();
            assert_eq!(a.order, b.order);
            assert_eq!(a.orbits, b.orbits);
        }
    }

    #[test]
    fn canonical_forms_separate_and_identify() {
        let (k6, _) = canonical_form(&builders::complete(6)).unwrap();
        let (k33, _) = canonical_form(&builders::complete_bipartite(3, 3)).unwrap();
        assert_ne!(k6, k33);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for base in [builders::icosahedron(), builders::petersen()] {
            let (c, sigma) = canonical_form(&base).unwrap();
            assert_eq!(base.relabel(&sigma), c);
            for _ in 0..10 {
                let (d, _) = canonical_form(&random_relabel(&base, &mut rng)).unwrap();
                assert_eq!(c, d);
            }
        }
    }

    #[test]
    fn isomorphism_is_an_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = builders::petersen();
        let b = random_relabel(&a, &mut rng);
        let phi = isomorphism(&a, &b).unwrap().unwrap();
        assert_eq!(a.relabel(&phi), b);
        assert!(!isomorphic(&a, &builders::cycle(10)).unwrap());
    }

    #[test]
    fn transitivity() {
        let p3 = builders::path(3);
        assert!(!is_vertex_transitive(&p3, None).unwrap());
        let pet = builders::petersen();
        assert!(is_vertex_transitive(&pet, None).unwrap());
        assert!(is_arc_transitive(&pet, None).unwrap());
        // the pentagonal prism is vertex-transitive but not arc-transitive
        let prism = Graph::from_edges(10, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i + 5, (i + 1) % 5 + 5), (i, i + 5)])).unwrap();
        assert!(is_vertex_transitive(&prism, None).unwrap());
        assert!(!is_arc_transitive(&prism, None).unwrap());
        // a cyclic rotation of C5 is vertex- but not arc-transitive
        let c5 = builders::cycle(5);
        let rot = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(is_vertex_transitive(&c5, Some(std::slice::from_ref(&rot))).unwrap());
        assert!(!is_arc_transitive(&c5, Some(&[rot])).unwrap());
    }

    #[test]
    fn normality_of_a_rotation_group() {
        let c5 = builders::cycle(5);
        let rot = GroupHandle::new(vec![Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap()]).unwrap();
        let r = normality_report(&c5, &rot, None).unwrap();
        assert_eq!(r.aut_order, "10");
        assert_eq!(r.index.as_deref(), Some("2"));
        assert!(r.normal);
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn order_matches_brute_force(g in small_graph()) {
            prop_assert_eq!(order(&g), BigUint::from(brute_force_aut_order(&g)));
        }

        #[test]
        fn canonical_form_ignores_labels(g in small_graph(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, _) = canonical_form(&g).unwrap();
            let (b, _) = canonical_form(&random_relabel(&g, &mut rng)).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
