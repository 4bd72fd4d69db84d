//! Built-in verification runs with their expected values.

use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::catalog;
use crate::cosetgraph::{builders, CosetTable, Graph};
use crate::error::{Error, Result};
use crate::feasibility::{self, Feasibility, SearchConfig};
use crate::graphauto::{self, AutOptions};
use crate::group::{default_cap, GroupHandle, GrpFile};
use crate::perm::Permutation;
use crate::subgroups;

const A9: &str = include_str!("../../data/groups/a9.grp");
const A40_EXAMPLE: &str = include_str!("../../data/groups/a40-example.grp");
const M11: &str = include_str!("../../data/groups/m11.grp");
const PSL2_25: &str = include_str!("../../data/groups/psl2_25.grp");

/// A group file shipped with the crate, by stem (`a9`, `a40-example`, `m11`, `psl2_25`).
pub fn shipped_group_file(name: &str) -> Option<GrpFile> {
    let text = match name {
        "a9" => A9,
        "a40-example" => A40_EXAMPLE,
        "m11" => M11,
        "psl2_25" => PSL2_25,
        _ => return None,
    };
    Some(GrpFile::parse(text).expect("shipped group files parse"))
}

pub fn shipped_group(name: &str) -> Option<GroupHandle> {
    shipped_group_file(name).map(|f| f.group())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    Fast,
    Slow,
    Stretch,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check { label: label.into(), pass: expected == actual, expected, actual }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub budget: Budget,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub seconds: f64,
}

impl ScenarioReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

type Runner = fn(&mut Vec<Check>) -> Result<()>;

pub const SCENARIOS: &[(&str, Budget)] = &[
    ("example-3-1", Budget::Fast),
    ("a9-census", Budget::Slow),
    ("small-graphs", Budget::Fast),
    ("corollary-arc", Budget::Fast),
    ("corollary-regular", Budget::Fast),
    ("a4xa5-subgroup-checks", Budget::Fast),
    ("m11-census", Budget::Slow),
    ("psl2-25-census", Budget::Slow),
    ("a9-coset-aut", Budget::Stretch),
];

fn runner(name: &str) -> Option<Runner> {
    Some(match name {
        "example-3-1" => example_3_1,
        "a9-census" => a9_census,
        "small-graphs" => small_graphs,
        "corollary-arc" => corollary_arc,
        "corollary-regular" => corollary_regular,
        "a4xa5-subgroup-checks" => a4xa5_subgroup_checks,
        "m11-census" => m11_census,
        "psl2-25-census" => psl2_25_census,
        "a9-coset-aut" => a9_coset_aut,
        _ => return None,
    })
}

pub fn run_scenario(name: &str) -> Result<ScenarioReport> {
    let (name, budget) = *SCENARIOS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Precondition(format!("unknown scenario {name}")))?;
    let run = runner(name).expect("every listed scenario has a runner");
    let start = Instant::now();
    let mut checks = Vec::new();
    run(&mut checks)?;
    Ok(ScenarioReport { name: name.to_string(), budget, checks, seconds: start.elapsed().as_secs_f64() })
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn example_3_1(out: &mut Vec<Check>) -> Result<()> {
    let file = shipped_group_file("a40-example").expect("shipped");
    let [x, y, z, g] = <[Permutation; 4]>::try_from(file.gens.clone())
        .map_err(|_| Error::Parse("expected generators x, y, z, g".into()))?;
    let h = GroupHandle::new(vec![x, y, z])?;
    out.push(Check::new("|<x,y,z>|", 40, h.order()));
    out.push(Check::new("H regular on 40 points", true, h.is_regular()));
    let label = subgroups::identify_type(&h, default_cap())?;
    out.push(Check::new("type of H", "F20xZ2", label));
    out.push(Check::new("order(g)", 2, g.order()));
    let mut gens = h.generators().to_vec();
    gens.push(g.clone());
    let whole = GroupHandle::new(gens)?;
    let ctx = Feasibility::new(&whole, &h, &SearchConfig::default())?;
    out.push(Check::new("|H : H ∩ H^g|", 5, 40 / ctx.intersection_order(&g)));
    out.push(Check::new("|<x,y,z,g>| = 40!/2", factorial(40) / 2u32, whole.order()));
    Ok(())
}

/// Feasible counts per class, sorted, as `(a, b, ...)`.
fn tuple(counts: &[usize]) -> String {
    let mut c = counts.to_vec();
    c.sort_unstable();
    let parts: Vec<String> = c.iter().map(usize::to_string).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

fn census_checks(out: &mut Vec<Check>, group: &GroupHandle, name: &str, expected: &[(&str, usize, &str)]) -> Result<()> {
    let labels: Vec<&str> = expected.iter().map(|e| e.0).collect();
    let report = feasibility::census(group, &labels, &SearchConfig::default())?;
    for &(label, classes, counts) in expected {
        let got = report.counts(label);
        out.push(Check::new(format!("{name} {label} classes"), classes, got.len()));
        out.push(Check::new(format!("{name} {label} feasible"), counts, tuple(&got)));
    }
    for row in &report.rows {
        if let Some(s) = &row.sample {
            let ok = s.valency == Some(5) && s.connected && (s.vertices * 5) % 2 == 0;
            out.push(Check::new(
                format!("{name} {} class {} sample graph connected pentavalent", row.type_label, row.class_index),
                true,
                ok,
            ));
        }
    }
    Ok(())
}

fn a9_census(out: &mut Vec<Check>) -> Result<()> {
    let a9 = shipped_group("a9").expect("shipped");
    census_checks(
        out,
        &a9,
        "A9",
        &[
            ("Z5", 1, "120"),
            ("D5", 2, "(0, 80)"),
            ("D10", 2, "(0, 80)"),
            ("F20", 2, "(0, 80)"),
            ("F20xZ2", 2, "(0, 80)"),
            ("A5", 2, "(0, 0)"),
            ("S5", 2, "(0, 0)"),
            ("A4xA5", 1, "480"),
            ("A4xA5:Z2", 1, "480"),
        ],
    )
}

fn m11_census(out: &mut Vec<Check>) -> Result<()> {
    let m11 = shipped_group("m11").expect("shipped");
    census_checks(out, &m11, "M11", &[("Z5", 1, "40"), ("D5", 1, "0")])?;
    let (_, graph) = sample_coset_graph(&m11, "Z5", None)?;
    let aut = graphauto::automorphism_group(&graph, None, &AutOptions::default())?;
    out.push(Check::new("M11 Z5 coset graph |Aut|", 7920, aut.order));
    Ok(())
}

fn psl2_25_census(out: &mut Vec<Check>) -> Result<()> {
    let g = shipped_group("psl2_25").expect("shipped");
    census_checks(out, &g, "PSL(2,25)", &[("D5", 2, "(40, 40)")])?;
    for class in 0..2 {
        let (_, graph) = sample_coset_graph(&g, "D5", Some(class))?;
        let aut = graphauto::automorphism_group(&graph, None, &AutOptions::default())?;
        out.push(Check::new(format!("PSL(2,25) D5 class {} coset graph |Aut|", class + 1), 15600, aut.order));
    }
    Ok(())
}

/// The coset graph of the first feasible element for a class of `label`
/// subgroups: class `class` when given, else the first class with any
/// feasible element.
pub fn sample_coset_graph(g: &GroupHandle, label: &str, class: Option<usize>) -> Result<(CosetTable, Graph)> {
    let config = SearchConfig::default();
    let reps = subgroups::find_class_reps(g, label, config.enum_cap)?;
    let chosen: Vec<&subgroups::SubgroupRecord> = match class {
        Some(i) => reps.get(i).into_iter().collect(),
        None => reps.iter().collect(),
    };
    for rep in chosen {
        if let Some(fe) = feasibility::search_feasible(g, &rep.group, &config)?.first() {
            let table = CosetTable::enumerate(g, &rep.group, config.enum_cap, config.vertex_cap)?;
            let graph = table.coset_graph(&fe.g)?;
            return Ok((table, graph));
        }
    }
    Err(Error::Precondition(format!("no feasible element for {label}")))
}

fn small_graphs(out: &mut Vec<Check>) -> Result<()> {
    let cases: [(&str, Graph, u64); 5] = [
        ("K6", builders::complete(6), 720),
        ("K5,5", builders::complete_bipartite(5, 5), 28800),
        ("icosahedron", builders::icosahedron(), 120),
        ("K6,6 - 6K2", builders::complete_bipartite_minus_matching(6), 1440),
        ("Petersen", builders::petersen(), 120),
    ];
    for (name, graph, order) in cases {
        let aut = graphauto::automorphism_group(&graph, None, &AutOptions::default())?;
        out.push(Check::new(format!("|Aut({name})|"), order, aut.order));
    }
    let a5 = GroupHandle::alternating(5)?;
    let (_, cos) = sample_coset_graph(&a5, "D5", None)?;
    let (c1, _) = graphauto::canonical_form(&cos)?;
    let (c2, _) = graphauto::canonical_form(&builders::complete(6))?;
    out.push(Check::new("Cos(A5, D5, g) canonically equal to K6", true, c1 == c2));
    Ok(())
}

fn corollary_arc(out: &mut Vec<Check>) -> Result<()> {
    let arc = catalog::derive_arc_candidates();
    out.push(Check::new("raw ratio count", 20, arc.raw.len()));
    out.push(Check::new("refined equals stored", true, arc.refined_matches_stored));
    out.push(Check::new("stored count", 17, arc.stored.len()));
    out.push(Check::new("largest stored value", 4608, arc.stored.last().copied().unwrap_or(0)));
    out.push(Check::new("divisor count", 55, catalog::theorem_divisors().len()));
    Ok(())
}

fn corollary_regular(out: &mut Vec<Check>) -> Result<()> {
    let reg = catalog::derive_regular_candidates();
    out.push(Check::new("derived only", "[60]", format!("{:?}", reg.only_derived)));
    out.push(Check::new("stored only", "[30]", format!("{:?}", reg.only_stored)));
    out.push(Check::new("difference flagged", true, reg.flagged));
    Ok(())
}

fn a4xa5_subgroup_checks(out: &mut Vec<Check>) -> Result<()> {
    let (first, second) = catalog::verify_eliminations(default_cap())?;
    out.push(Check::new("A4xA5 has a F20xZ2 subgroup", false, first));
    out.push(Check::new("A4xA5:Z2 has a F20xZ4 subgroup", false, second));
    Ok(())
}

fn a9_coset_aut(out: &mut Vec<Check>) -> Result<()> {
    let a9 = shipped_group("a9").expect("shipped");
    let (table, graph) = sample_coset_graph(&a9, "D5", None)?;
    out.push(Check::new("vertices", 18144, graph.n()));
    out.push(Check::new("valency", 5, graph.regular_valency().unwrap_or(0)));
    out.push(Check::new("connected", true, graph.is_connected()));
    let action: Vec<Permutation> = a9.generators().iter().map(|s| table.coset_action(s)).collect::<Result<_>>()?;
    out.push(Check::new("A9 arc-transitive", true, graphauto::is_arc_transitive(&graph, Some(&action))?));
    let aut = graphauto::automorphism_group(&graph, None, &AutOptions::default())?;
    out.push(Check::new("|Aut|", 725760, &aut.order));
    let report = graphauto::normality_report(&graph, &GroupHandle::new(action)?, Some(&a9.order()))?;
    out.push(Check::new("|Aut| / |A9|", "4", report.index.unwrap_or_default()));
    Ok(())
}
