//! One PASS/FAIL line per acceptance criterion. Criterion 9 is reported but
//! does not fail the run.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use common::{atlas, brute_force_closure, random_perm};
use num_bigint::BigUint;
use pentaveri::catalog;
use pentaveri::cli::scenarios::{sample_coset_graph, shipped_group, shipped_group_file};
use pentaveri::cosetgraph::{builders, Graph};
use pentaveri::feasibility::{census, search_feasible, Feasibility, SearchConfig};
use pentaveri::graphauto::{
    automorphism_group, brute_force_aut_order, canonical_form, is_arc_transitive, refine, AutOptions,
    OrderedPartition,
};
use pentaveri::group::default_cap;
use pentaveri::subgroups::{find_class_reps, identify_type};
use pentaveri::{GroupHandle, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const A9_TYPES: [&str; 9] = ["Z5", "D5", "D10", "F20", "F20xZ2", "A5", "S5", "A4xA5", "A4xA5:Z2"];

/// Collects failed sub-checks; an empty list means the criterion passed.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.0.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn ok(&mut self, what: &str, cond: bool) {
        if !cond {
            self.0.push(what.to_string());
        }
    }
}

fn aut(g: &Graph) -> BigUint {
    automorphism_group(g, None, &AutOptions::default()).unwrap().order
}

fn criterion_1(c: &mut Checks) {
    let file = shipped_group_file("a40-example").unwrap();
    let h = GroupHandle::new(file.gens[..3].to_vec()).unwrap();
    let g = file.gens[3].clone();
    c.eq("|<x,y,z>|", h.order(), BigUint::from(40u32));
    c.ok("H regular", h.is_regular());
    c.eq("type", identify_type(&h, 1000).unwrap(), "F20xZ2");
    c.eq("order(g)", g.order(), BigUint::from(2u32));
    let whole = GroupHandle::new(file.gens.clone()).unwrap();
    let ctx = Feasibility::new(&whole, &h, &SearchConfig::default()).unwrap();
    c.eq("|H : H ∩ H^g|", 40 / ctx.intersection_order(&g), 5);
    let half: BigUint = (1..=40u32).map(BigUint::from).product::<BigUint>() / 2u32;
    c.eq("|<x,y,z,g>|", whole.order(), half);
}

fn criterion_2(c: &mut Checks) {
    let a9 = shipped_group("a9").unwrap();
    for (label, want) in A9_TYPES.iter().zip([1, 2, 2, 2, 2, 2, 2, 1, 1]) {
        c.eq(label, find_class_reps(&a9, label, default_cap()).unwrap().len(), want);
    }
}

fn criterion_3(c: &mut Checks, graphs: &mut Vec<Graph>) {
    let a9 = shipped_group("a9").unwrap();
    let report = census(&a9, &A9_TYPES, &SearchConfig::default()).unwrap();
    let expected: [&[usize]; 9] = [&[120], &[0, 80], &[0, 80], &[0, 80], &[0, 80], &[0, 0], &[0, 0], &[480], &[480]];
    for (label, want) in A9_TYPES.iter().zip(expected) {
        let mut got = report.counts(label);
        got.sort_unstable();
        c.eq(label, got.as_slice(), want);
    }
    for label in ["A4xA5", "A4xA5:Z2"] {
        graphs.push(sample_coset_graph(&a9, label, None).unwrap().1);
    }
}

fn criterion_4(c: &mut Checks) {
    c.eq("K6", aut(&builders::complete(6)), BigUint::from(720u32));
    c.eq("K5,5", aut(&builders::complete_bipartite(5, 5)), BigUint::from(28800u32));
    c.eq("I12", aut(&builders::icosahedron()), BigUint::from(120u32));
    c.eq("K6,6-6K2", aut(&builders::complete_bipartite_minus_matching(6)), BigUint::from(1440u32));
}

fn criterion_5(c: &mut Checks, graphs: &mut Vec<Graph>) {
    let a5 = GroupHandle::alternating(5).unwrap();
    let (_, cos) = sample_coset_graph(&a5, "D5", None).unwrap();
    c.ok(
        "Cos(A5, D5, g) = K6",
        canonical_form(&cos).unwrap().0 == canonical_form(&builders::complete(6)).unwrap().0,
    );
    graphs.push(cos);
    let a9 = shipped_group("a9").unwrap();
    let (table, g) = sample_coset_graph(&a9, "D5", None).unwrap();
    c.eq("vertices", g.n(), 18144);
    c.eq("valency", g.regular_valency(), Some(5));
    c.ok("connected", g.is_connected());
    let action: Vec<Permutation> = a9.generators().iter().map(|s| table.coset_action(s).unwrap()).collect();
    c.ok("A9 arc-transitive", is_arc_transitive(&g, Some(&action)).unwrap());
    graphs.push(g);
}

fn criterion_6(c: &mut Checks) {
    let arc = catalog::derive_arc_candidates();
    let raw = [6, 8, 9, 12, 16, 18, 24, 32, 36, 48, 72, 96, 144, 192, 288, 384, 576, 1152, 2304, 4608];
    c.eq("raw ratios", arc.raw.as_slice(), raw.as_slice());
    c.eq("refined", &arc.refined, &arc.stored);
    c.eq("stored count", arc.stored.len(), 17);
    let reg = catalog::derive_regular_candidates();
    c.eq("only derived", reg.only_derived.as_slice(), [60].as_slice());
    c.eq("only stored", reg.only_stored.as_slice(), [30].as_slice());
    c.ok("flagged", reg.flagged);
    c.eq("divisors", catalog::theorem_divisors().len(), 55);
}

fn criterion_7(c: &mut Checks) {
    let (a, b) = catalog::verify_eliminations(default_cap()).unwrap();
    c.ok("A4xA5 has no F20xZ2", !a);
    c.ok("A4xA5:Z2 has no F20xZ4", !b);
}

fn criterion_8(c: &mut Checks, graphs: &[Graph]) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut accepted = 0;
    while accepted < 50 {
        let degree = rng.gen_range(2..=8);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3)).map(|_| random_perm(degree, &mut rng)).collect();
        let Some(size) = brute_force_closure(degree, &gens, 5000) else { continue };
        let g = GroupHandle::with_degree(degree, gens).unwrap();
        c.eq("chain order", g.order(), BigUint::from(size));
        accepted += 1;
    }
    for g in atlas() {
        c.eq("atlas aut", aut(&g), BigUint::from(brute_force_aut_order(&g)));
        let r = refine(&g, &OrderedPartition::unit(g.n()));
        c.ok("refine idempotent", refine(&g, &r) == r);
    }
    for g in [builders::icosahedron(), builders::petersen()] {
        let base = canonical_form(&g).unwrap().0;
        for _ in 0..50 {
            let h = g.relabel(&random_perm(g.n(), &mut rng));
            c.ok("canonical relabel", canonical_form(&h).unwrap().0 == base);
        }
    }
    for g in graphs {
        c.ok("handshake", g.regular_valency() == Some(5) && (g.n() * 5) % 2 == 0);
    }
    for n in [5, 6] {
        let g = GroupHandle::alternating(n).unwrap();
        for label in ["Z5", "D5"] {
            for rep in find_class_reps(&g, label, 10_000).unwrap() {
                let set: HashSet<Permutation> =
                    search_feasible(&g, &rep.group, &SearchConfig::default()).unwrap().into_iter().map(|f| f.g).collect();
                c.ok("inverse closure", set.iter().all(|x| set.contains(&x.inverse())));
            }
        }
    }
}

fn criterion_9(c: &mut Checks) -> String {
    let m11 = shipped_group("m11").unwrap();
    let reps = find_class_reps(&m11, "Z5", default_cap()).unwrap();
    let counts: Vec<usize> =
        reps.iter().map(|r| search_feasible(&m11, &r.group, &SearchConfig::default()).unwrap().len()).collect();
    c.eq("M11 Z5", counts.as_slice(), [40].as_slice());
    let a9 = shipped_group("a9").unwrap();
    let (_, g) = sample_coset_graph(&a9, "D5", None).unwrap();
    let start = Instant::now();
    let order = aut(&g);
    let took = start.elapsed();
    c.eq("|Aut| of the A9/D5 coset graph", order, BigUint::from(725760u32));
    format!("Aut search {:.2?}", took)
}

fn main() {
    let mut graphs = Vec::new();
    let mut failed = Vec::new();
    let mut report = |n: u32, name: &str, required: bool, f: &mut dyn FnMut(&mut Checks) -> Option<String>| {
        let start = Instant::now();
        let mut checks = Checks::default();
        let note = f(&mut checks);
        let secs = start.elapsed().as_secs_f64();
        let status = if checks.0.is_empty() { "PASS" } else { "FAIL" };
        let extra = note.map(|s| format!(", {s}")).unwrap_or_default();
        println!("criterion {n}: {status}  {name} ({secs:.2} s{extra})");
        for f in &checks.0 {
            println!("    {f}");
        }
        if required && !checks.0.is_empty() {
            failed.push(n);
        }
    };
    report(1, "regular F20xZ2 in A40 example", true, &mut |c| {
        criterion_1(c);
        None
    });
    report(2, "A9 subgroup-class census", true, &mut |c| {
        criterion_2(c);
        None
    });
    report(3, "A9 feasibility census", true, &mut |c| {
        criterion_3(c, &mut graphs);
        None
    });
    report(4, "small-graph automorphism orders", true, &mut |c| {
        criterion_4(c);
        None
    });
    report(5, "coset-graph reconstruction", true, &mut |c| {
        criterion_5(c, &mut graphs);
        None
    });
    report(6, "catalog derivations", true, &mut |c| {
        criterion_6(c);
        None
    });
    report(7, "subgroup non-existence", true, &mut |c| {
        criterion_7(c);
        None
    });
    report(8, "property suites", true, &mut |c| {
        criterion_8(c, &graphs);
        None
    });
    report(9, "stretch: M11 census and A9/D5 Aut order", false, &mut |c| Some(criterion_9(c)));
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
