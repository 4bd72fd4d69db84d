//! The `pentaveri` command line.
//!
//! Exit codes: 0 on success, 1 when a check or verification fails, 2 on usage
//! or input errors.

pub mod scenarios;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::cosetgraph::{quotient_graph, CosetTable, Graph};
use crate::error::{Error, Result};
use crate::feasibility::{self, SearchConfig};
use crate::graphauto::{self, AutOptions};
use crate::group::{default_cap, grpfile::read_group};
use crate::perm::Permutation;
use crate::subgroups;

pub use scenarios::{run_scenario, ScenarioReport, SCENARIOS};

#[derive(Parser, Debug)]
#[command(name = "pentaveri", version, about = "Permutation groups, coset graphs and graph symmetry")]
pub struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order of the group.
    Order { group: PathBuf },
    /// Whether a permutation lies in the group.
    Member { group: PathBuf, perm: String },
    /// Orbits on points.
    Orbits { group: PathBuf },
    /// Checks a property of the natural action.
    Action {
        group: PathBuf,
        #[arg(long, value_enum)]
        check: ActionCheck,
    },
    /// Conjugacy classes of subgroups of a catalog type.
    Subgroups {
        group: PathBuf,
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Feasible elements for a point stabilizer.
    Feasible {
        group: PathBuf,
        #[arg(long)]
        stab: PathBuf,
        #[arg(long, default_value_t = 5)]
        valency: usize,
        #[arg(long)]
        count_only: bool,
        /// Write the feasible elements, one per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Builds the coset graph `Cos(G, H, HgH)`.
    CosetGraph {
        group: PathBuf,
        #[arg(long)]
        stab: PathBuf,
        #[arg(long = "g")]
        element: String,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// Automorphism group of a graph.
    Aut {
        graph: PathBuf,
        #[arg(long)]
        order_only: bool,
        /// Also compare with this group of automorphisms.
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Canonical relabeling of a graph.
    Canon {
        graph: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// Whether two graphs are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Quotient of a graph by the orbits of a group.
    Quotient {
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// Whether the first group is a normal subgroup of the second.
    Normal { sub: PathBuf, sup: PathBuf },
    /// Shipped catalog data and derived lists.
    Catalog {
        #[arg(value_enum)]
        what: CatalogItem,
    },
    /// Runs a built-in scenario.
    Verify { scenario: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ActionCheck {
    Transitive,
    Semiregular,
    Regular,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CatalogItem {
    Stabilizers,
    Pairs,
    ArcCandidates,
    RegularCandidates,
    Divisors,
}

/// Result of a subcommand.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// False when a check did not hold.
    pub ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }

    fn check(text: String, json: Value, ok: bool) -> Self {
        Output { text, json, ok }
    }
}

/// Parses arguments, runs the command, prints its output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // fails only when a global pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match execute(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn graph(path: &PathBuf) -> Result<Graph> {
    Graph::read(path).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Runs one subcommand without printing.
pub fn execute(command: &Command) -> Result<Output> {
    let cap = default_cap();
    match command {
        Command::Order { group } => {
            let g = read_group(group)?;
            let order = g.order();
            Ok(Output::new(format!("order {order}\n"), json!({"degree": g.degree(), "order": order.to_string()})))
        }
        Command::Member { group, perm } => {
            let g = read_group(group)?;
            let p = Permutation::parse(perm, g.degree())?;
            let m = g.contains(&p);
            Ok(Output::check(format!("member {}\n", yes_no(m)), json!({"member": m}), m))
        }
        Command::Orbits { group } => {
            let g = read_group(group)?;
            let orbits: Vec<Vec<usize>> =
                g.orbits().into_iter().map(|o| o.into_iter().map(|p| p + 1).collect()).collect();
            let mut text = format!("orbits {}\n", orbits.len());
            for o in &orbits {
                let pts: Vec<String> = o.iter().map(usize::to_string).collect();
                writeln!(text, "{}", pts.join(" ")).unwrap();
            }
            Ok(Output::new(text, json!({"orbits": orbits})))
        }
        Command::Action { group, check } => {
            let g = read_group(group)?;
            let (name, holds) = match check {
                ActionCheck::Transitive => ("transitive", g.is_transitive()),
                ActionCheck::Semiregular => ("semiregular", g.is_semiregular()),
                ActionCheck::Regular => ("regular", g.is_regular()),
            };
            Ok(Output::check(format!("{name} {}\n", yes_no(holds)), json!({name: holds}), holds))
        }
        Command::Subgroups { group, type_label, count_only } => {
            let g = read_group(group)?;
            let reps = subgroups::find_class_reps(&g, type_label, cap)?;
            let mut text = format!("{type_label}: {} classes\n", reps.len());
            if !count_only {
                for (i, r) in reps.iter().enumerate() {
                    writeln!(text, "class {:<3} size {:<8} gens {}", i + 1, r.class_size, r.gens.join(" ")).unwrap();
                }
            }
            let json = if *count_only {
                json!({"type": type_label, "classes": reps.len()})
            } else {
                json!({"type": type_label, "classes": reps.len(), "reps": reps})
            };
            Ok(Output::new(text, json))
        }
        Command::Feasible { group, stab, valency, count_only, out } => {
            let g = read_group(group)?;
            let h = read_group(stab)?;
            let config = SearchConfig { valency: *valency, ..SearchConfig::default() };
            let found = feasibility::search_feasible(&g, &h, &config)?;
            if let Some(path) = out {
                let lines: String = found.iter().map(|f| format!("{}\n", f.g)).collect();
                std::fs::write(path, lines)?;
            }
            let mut text = format!("feasible {}\n", found.len());
            if !count_only {
                for f in &found {
                    writeln!(text, "{}", f.g).unwrap();
                }
            }
            let json = if *count_only {
                json!({"count": found.len()})
            } else {
                json!({"count": found.len(), "elements": found})
            };
            Ok(Output::new(text, json))
        }
        Command::CosetGraph { group, stab, element, out } => {
            let g = read_group(group)?;
            let h = read_group(stab)?;
            let x = Permutation::parse(element, g.degree())?;
            let table = CosetTable::enumerate(&g, &h, cap, crate::cosetgraph::DEFAULT_VERTEX_CAP)?;
            let gr = table.coset_graph(&x)?;
            gr.write(out)?;
            let valency = gr.regular_valency();
            let connected = gr.is_connected();
            let text = format!(
                "vertices {}\nedges {}\nvalency {}\nconnected {}\n",
                gr.n(),
                gr.edge_count(),
                valency.map_or("irregular".to_string(), |k| k.to_string()),
                yes_no(connected)
            );
            Ok(Output::new(
                text,
                json!({"vertices": gr.n(), "edges": gr.edge_count(), "valency": valency, "connected": connected}),
            ))
        }
        Command::Aut { graph: path, order_only, group } => {
            let gr = graph(path)?;
            let aut = graphauto::automorphism_group(&gr, None, &AutOptions::default())?;
            let mut text = if *order_only { format!("order={}\n", aut.order) } else { format!("{}\n", aut.summary()) };
            if !order_only {
                for g in &aut.generators {
                    writeln!(text, "{g}").unwrap();
                }
            }
            let mut json = json!({
                "order": aut.order.to_string(),
                "orbits": aut.orbits.len(),
                "generators": aut.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            });
            if let Some(gpath) = group {
                let g = read_group(gpath)?;
                let report = graphauto::normality_report(&gr, &g, None)?;
                writeln!(
                    text,
                    "group order {}\nindex {}\nnormal {}",
                    report.group_order,
                    report.index.as_deref().unwrap_or("not an integer"),
                    yes_no(report.normal)
                )
                .unwrap();
                json["normality"] = serde_json::to_value(&report).expect("report serializes");
            }
            Ok(Output::new(text, json))
        }
        Command::Canon { graph: path, out } => {
            let gr = graph(path)?;
            let (c, sigma) = graphauto::canonical_form(&gr)?;
            c.write(out)?;
            Ok(Output::new(format!("relabeling {sigma}\n"), json!({"relabeling": sigma.to_string()})))
        }
        Command::Iso { a, b } => {
            let (ga, gb) = (graph(a)?, graph(b)?);
            let phi = graphauto::isomorphism(&ga, &gb)?;
            let text = match &phi {
                Some(p) => format!("isomorphic\nmap {p}\n"),
                None => "not isomorphic\n".to_string(),
            };
            let json = json!({"isomorphic": phi.is_some(), "map": phi.as_ref().map(|p| p.to_string())});
            Ok(Output::check(text, json, phi.is_some()))
        }
        Command::Quotient { graph: path, group, out } => {
            let gr = graph(path)?;
            let n = read_group(group)?;
            let q = quotient_graph(&gr, &n)?;
            q.graph.write(out)?;
            let d = &q.diagnostics;
            let text = format!(
                "vertices {}\nvalency {}\nsemiregular {}\nat least three orbits {}\nprime valency {}\nvalency preserved {}\nhypotheses hold {}\n",
                q.graph.n(),
                q.graph.regular_valency().map_or("irregular".to_string(), |k| k.to_string()),
                yes_no(d.semiregular),
                yes_no(d.at_least_three_orbits),
                yes_no(d.prime_valency),
                yes_no(d.valency_preserved),
                yes_no(d.hypotheses_hold),
            );
            Ok(Output::new(text, json!({"vertices": q.graph.n(), "diagnostics": d})))
        }
        Command::Normal { sub, sup } => {
            let (a, b) = (read_group(sub)?, read_group(sup)?);
            if a.degree() != b.degree() {
                return Err(Error::DegreeMismatch(a.degree(), b.degree()));
            }
            let contained = a.is_subgroup_of(&b);
            let normal = contained && a.is_normal_in(&b);
            let text = format!("subgroup {}\nnormal {}\n", yes_no(contained), yes_no(normal));
            Ok(Output::check(text, json!({"subgroup": contained, "normal": normal}), normal))
        }
        Command::Catalog { what } => Ok(catalog_output(*what)),
        Command::Verify { scenario } => {
            let report = run_scenario(scenario)?;
            eprintln!("{}: {:.2} s", report.name, report.seconds);
            let mut text = String::new();
            for c in &report.checks {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                writeln!(text, "{mark}  {:<58} expected {:<14} got {}", c.label, c.expected, c.actual).unwrap();
            }
            let mark = if report.pass() { "PASS" } else { "FAIL" };
            writeln!(text, "{mark} {} ({} checks)", report.name, report.checks.len()).unwrap();
            let json = serde_json::to_value(&report).expect("report serializes");
            Ok(Output::check(text, json, report.pass()))
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn catalog_output(what: CatalogItem) -> Output {
    match what {
        CatalogItem::Stabilizers => {
            let entries = catalog::stabilizer_orders();
            let mut text = String::new();
            for e in entries {
                writeln!(text, "{:<16} {:>6}  {}", e.name, e.order, e.factored).unwrap();
            }
            Output::new(text, serde_json::to_value(entries).expect("entries serialize"))
        }
        CatalogItem::Pairs => {
            let t = catalog::table1();
            let mut text = String::new();
            for p in &t.rows {
                writeln!(text, "{:<12} {:<14} {}", p.t, p.g, p.index).unwrap();
            }
            writeln!(text, "{:<12} {:<14} n", t.parametric.0, t.parametric.1).unwrap();
            Output::new(text, serde_json::to_value(t).expect("table serializes"))
        }
        CatalogItem::ArcCandidates => {
            let a = catalog::derive_arc_candidates();
            let mut text = format!("raw ({}): {}\n", a.raw.len(), join(&a.raw));
            for e in &a.eliminated {
                writeln!(text, "eliminated {}: {}", e.n, e.reason).unwrap();
            }
            writeln!(text, "refined ({}): {}", a.refined.len(), join(&a.refined)).unwrap();
            writeln!(text, "matches stored list {}", yes_no(a.refined_matches_stored)).unwrap();
            let ok = a.refined_matches_stored;
            Output::check(text, serde_json::to_value(&a).expect("serializes"), ok)
        }
        CatalogItem::RegularCandidates => {
            let r = catalog::derive_regular_candidates();
            let text = format!(
                "derived ({}): {}\nstored ({}): {}\nonly derived: {}\nonly stored: {}\nflagged {}\n",
                r.derived.len(),
                join(&r.derived),
                r.stored.len(),
                join(&r.stored),
                join(&r.only_derived),
                join(&r.only_stored),
                yes_no(r.flagged)
            );
            Output::new(text, serde_json::to_value(&r).expect("serializes"))
        }
        CatalogItem::Divisors => {
            let d = catalog::theorem_divisors();
            Output::new(format!("{} divisors: {}\n", d.len(), join(&d)), json!({"count": d.len(), "divisors": d}))
        }
    }
}

