//! Quotients of a graph by a group of automorphisms.

use num_bigint::BigUint;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::group::GroupHandle;

/// What the quotient preserved, and whether the usual hypotheses for a normal
/// quotient (semiregular action with at least three orbits on a graph of prime
/// valency) were met.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDiagnostics {
    pub orbits: usize,
    pub semiregular: bool,
    pub at_least_three_orbits: bool,
    pub prime_valency: bool,
    /// `n / |N|` equals the number of orbits.
    pub vertex_count_matches: bool,
    /// Regular of the same valency as the original.
    pub valency_preserved: bool,
    pub hypotheses_hold: bool,
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: Graph,
    /// `orbit_of[v]` is the quotient vertex containing `v`.
    pub orbit_of: Vec<usize>,
    pub diagnostics: QuotientDiagnostics,
}

impl Quotient {
    /// The orbit map as `v orbit_index` lines, 1-based.
    pub fn orbit_map_text(&self) -> String {
        self.orbit_of.iter().enumerate().map(|(v, o)| format!("{} {}\n", v + 1, o + 1)).collect()
    }
}

fn is_prime(k: usize) -> bool {
    k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| k % d != 0)
}

/// Orbits of `n` become vertices, adjacent when some edge joins them. Edges
/// inside an orbit are dropped and parallel edges merged.
pub fn quotient_graph(gamma: &Graph, n: &GroupHandle) -> Result<Quotient> {
    if n.degree() != gamma.n() {
        return Err(Error::DegreeMismatch(gamma.n(), n.degree()));
    }
    if let Some(bad) = n.generators().iter().find(|p| !gamma.is_automorphism(p)) {
        return Err(Error::NotAutomorphism(bad.to_string()));
    }
    let orbits = n.orbits();
    let mut orbit_of = vec![0; gamma.n()];
    for (i, o) in orbits.iter().enumerate() {
        for &v in o {
            orbit_of[v] = i;
        }
    }
    let edges: Vec<(usize, usize)> =
        gamma.edges().map(|(u, v)| (orbit_of[u], orbit_of[v])).filter(|(a, b)| a != b).collect();
    let graph = Graph::from_edges(orbits.len(), edges)?;

    let valency = gamma.regular_valency();
    let order = n.order();
    let diagnostics = QuotientDiagnostics {
        orbits: orbits.len(),
        semiregular: n.is_semiregular(),
        at_least_three_orbits: orbits.len() >= 3,
        prime_valency: valency.is_some_and(is_prime),
        vertex_count_matches: BigUint::from(gamma.n()) == order * BigUint::from(orbits.len()),
        valency_preserved: valency.is_some() && graph.regular_valency() == valency,
        hypotheses_hold: false,
    };
    let hypotheses_hold = diagnostics.semiregular && diagnostics.at_least_three_orbits && diagnostics.prime_valency;
    let diagnostics = QuotientDiagnostics { hypotheses_hold, ..diagnostics };
    if diagnostics.hypotheses_hold && !(diagnostics.valency_preserved && diagnostics.vertex_count_matches) {
        log::warn!("quotient by a semiregular group lost valency or vertices: {diagnostics:?}");
    }
    Ok(Quotient { graph, orbit_of, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosetgraph::builders;
    use crate::perm::Permutation;

    #[test]
    fn trivial_group_gives_same_graph() {
        let g = builders::petersen();
        let q = quotient_graph(&g, &GroupHandle::trivial(10)).unwrap();
        assert_eq!(q.graph, g);
    }

    #[test]
    fn rejects_non_automorphisms() {
        let g = builders::path(3);
        let n = GroupHandle::new(vec![Permutation::parse_cycles("(1 2)", 3).unwrap()]).unwrap();
        assert!(matches!(quotient_graph(&g, &n), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn primes() {
        let p: Vec<usize> = (0..20).filter(|&k| is_prime(k)).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
