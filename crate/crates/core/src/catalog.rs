//! Classification data: the sixteen vertex-stabilizer types of connected
//! pentavalent symmetric graphs, the simple pairs of `{2,3,5}`-index, and the
//! published lists of possible non-normal pairs, together with derivations that
//! recompute those lists from the stabilizer orders.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupHandle, GrpFile};
use crate::subgroups::IsoFingerprint;

const STABILIZERS: &str = include_str!("../data/catalog/stabilizers.txt");
const TABLE1: &str = include_str!("../data/catalog/table1.txt");
const THEOREM: &str = include_str!("../data/catalog/theorem.txt");

macro_rules! models {
    ($($stem:literal),* $(,)?) => {
        const MODELS: &[(&str, &str, &str)] = &[
            $(($stem,
               include_str!(concat!("../data/models/", $stem, ".grp")),
               include_str!(concat!("../data/models/", $stem, ".fp")))),*
        ];
    };
}

models!(
    "z5", "d5", "d10", "f20", "f20xz2", "f20xz4", "a5", "s5", "a4xa5", "a4xa5_2", "s4xs5", "asl24", "agl24",
    "asigmal24", "agammal24"
);

/// `2^a 3^b 5^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factored {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Factored {
    pub fn value(&self) -> u64 {
        2u64.pow(self.a) * 3u64.pow(self.b) * 5u64.pow(self.c)
    }

    /// Parses products like `2^4*3^2*5`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut f = Factored { a: 0, b: 0, c: 0 };
        for tok in text.split('*').map(str::trim) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?),
                None => (tok, 1),
            };
            match base {
                "2" => f.a += exp,
                "3" => f.b += exp,
                "5" => f.c += exp,
                _ => return Err(Error::Parse(format!("unexpected factor {tok:?}"))),
            }
        }
        Ok(f)
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (p, e) in [(2, self.a), (3, self.b), (5, self.c)] {
            match e {
                0 => {}
                1 => parts.push(p.to_string()),
                _ => parts.push(format!("{p}^{e}")),
            }
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizerEntry {
    pub name: String,
    pub order: u64,
    pub factored: Factored,
    /// Stem of the shipped model in `data/models`, if any.
    pub model: Option<String>,
    pub aliases: Vec<String>,
}

impl StabilizerEntry {
    pub fn matches_label(&self, label: &str) -> bool {
        let want = normalize(label);
        normalize(&self.name) == want
            || self.model.as_deref().is_some_and(|m| normalize(m) == want)
            || self.aliases.iter().any(|a| normalize(a) == want)
    }

    /// The shipped concrete model of this type.
    pub fn model_group(&self) -> Option<GroupHandle> {
        let (_, grp, _) = MODELS.iter().find(|(stem, _, _)| Some(*stem) == self.model.as_deref())?;
        Some(GrpFile::parse(grp).expect("shipped model parses").group())
    }

    /// The stored fingerprint of the shipped model.
    pub fn fingerprint(&self) -> Option<IsoFingerprint> {
        let (_, _, fp) = MODELS.iter().find(|(stem, _, _)| Some(*stem) == self.model.as_deref())?;
        Some(IsoFingerprint::parse(fp).expect("shipped fingerprint parses"))
    }
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !matches!(c, '(' | ')' | ' ' | '_' | ',')).flat_map(char::to_lowercase).collect()
}

/// The sixteen stabilizer types, in the order they are usually listed.
pub fn stabilizer_orders() -> &'static [StabilizerEntry] {
    static CELL: OnceLock<Vec<StabilizerEntry>> = OnceLock::new();
    CELL.get_or_init(|| parse_stabilizers(STABILIZERS).expect("shipped stabilizer table parses"))
}

fn parse_stabilizers(text: &str) -> Result<Vec<StabilizerEntry>> {
    let mut out = Vec::new();
    for line in data_lines(text) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        let [name, order, factored, model, aliases] = cols[..] else {
            return Err(Error::Parse(format!("stabilizer row needs 5 columns: {line:?}")));
        };
        out.push(StabilizerEntry {
            name: name.to_string(),
            order: order.parse().map_err(|_| Error::Parse(format!("bad order {order:?}")))?,
            factored: Factored::parse(factored)?,
            model: (model != "none").then(|| model.to_string()),
            aliases: if aliases == "-" { Vec::new() } else { aliases.split(',').map(str::to_string).collect() },
        });
    }
    Ok(out)
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty())
}

pub fn lookup_type(label: &str) -> Result<&'static StabilizerEntry> {
    stabilizer_orders().iter().find(|e| e.matches_label(label)).ok_or_else(|| Error::UnknownType(label.to_string()))
}

pub fn validate_stabilizer_order(m: u64) -> bool {
    stabilizer_orders().iter().any(|e| e.order == m)
}

pub fn distinct_stabilizer_orders() -> BTreeSet<u64> {
    stabilizer_orders().iter().map(|e| e.order).collect()
}

/// `2^9 3^2 5`, the largest stabilizer order.
pub const MAX_STABILIZER_ORDER: u64 = 23040;

/// All `n >= 6` dividing `2^9 3^2 5`.
pub fn theorem_divisors() -> Vec<u64> {
    (6..=MAX_STABILIZER_ORDER).filter(|n| MAX_STABILIZER_ORDER % n == 0).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplePair {
    pub t: String,
    pub g: String,
    pub index: Factored,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1 {
    pub rows: Vec<SimplePair>,
    /// The closing row `(A_n, A_{n-1})` with `n = 2^a 3^b 5^c`.
    pub parametric: (String, String),
}

pub fn table1() -> &'static Table1 {
    static CELL: OnceLock<Table1> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut rows = Vec::new();
        let mut parametric = None;
        for line in data_lines(TABLE1) {
            let cols: Vec<&str> = line.split('|').map(str::trim).collect();
            assert_eq!(cols.len(), 3, "table row {line:?}");
            if cols[2] == "n" {
                parametric = Some((cols[0].to_string(), cols[1].to_string()));
            } else {
                let index = Factored::parse(cols[2]).expect("table index parses");
                rows.push(SimplePair { t: cols[0].to_string(), g: cols[1].to_string(), index });
            }
        }
        Table1 { rows, parametric: parametric.expect("parametric row present") }
    })
}

pub fn table1_pairs() -> &'static [SimplePair] {
    &table1().rows
}

/// Rows whose subgroup `G` has the given name.
pub fn lookup_pair(g: &str) -> Vec<&'static SimplePair> {
    let want = normalize(g);
    table1_pairs().iter().filter(|p| normalize(&p.g) == want).collect()
}

/// The published conclusions, exactly as printed.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremPairList {
    /// `(G, T)` pairs named individually.
    pub named: Vec<(String, String)>,
    /// The `(A_{n-1}, A_n)` family condition as printed.
    pub family: String,
    pub arc: Vec<Factored>,
    pub regular: Vec<Factored>,
}

pub fn theorem_pairs() -> &'static TheoremPairList {
    static CELL: OnceLock<TheoremPairList> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut section = "";
        let mut list =
            TheoremPairList { named: Vec::new(), family: String::new(), arc: Vec::new(), regular: Vec::new() };
        for line in data_lines(THEOREM) {
            if line.starts_with('[') {
                section = line;
                continue;
            }
            match section {
                "[theorem]" => {
                    let cols: Vec<&str> = line.split('|').map(str::trim).collect();
                    if cols.len() == 3 {
                        list.family = format!("({}, {}) with {}", cols[0], cols[1], cols[2]);
                    } else {
                        list.named.push((cols[0].to_string(), cols[1].to_string()));
                    }
                }
                "[arc]" | "[regular]" => {
                    let vals = line.split(',').map(|t| Factored::parse(t.trim()).expect("stored list parses"));
                    if section == "[arc]" {
                        list.arc.extend(vals);
                    } else {
                        list.regular.extend(vals);
                    }
                }
                other => panic!("unknown section {other}"),
            }
        }
        list
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    pub n: u64,
    pub reason: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArcCandidates {
    /// Integer ratios `|T_v| / |G_v| >= 6` over stabilizer orders.
    pub raw: Vec<u64>,
    pub eliminated: Vec<Elimination>,
    pub refined: Vec<u64>,
    /// The stored arc-transitive list, evaluated.
    pub stored: Vec<u64>,
    pub refined_matches_stored: bool,
}

/// Values of `n` ruled out by direct computation; see [`verify_eliminations`].
pub const ARC_ELIMINATIONS: [(u64, &str); 3] = [
    (8, "G = A7: every connected pentavalent A7-symmetric graph has A7 normal in Aut"),
    (9, "G = A8: every connected pentavalent A8-symmetric graph has A8 normal in Aut"),
    (18, "needs F20xZ2 < A4xA5 or F20xZ4 < (A4xA5):Z2, and neither subgroup exists"),
];

pub fn derive_arc_candidates() -> ArcCandidates {
    let orders = distinct_stabilizer_orders();
    let mut raw = BTreeSet::new();
    for &t in &orders {
        for &g in &orders {
            if t % g == 0 && t / g >= 6 {
                raw.insert(t / g);
            }
        }
    }
    let raw: Vec<u64> = raw.into_iter().collect();
    let refined: Vec<u64> = raw.iter().copied().filter(|n| ARC_ELIMINATIONS.iter().all(|(m, _)| m != n)).collect();
    let mut stored: Vec<u64> = theorem_pairs().arc.iter().map(Factored::value).collect();
    stored.sort_unstable();
    ArcCandidates {
        eliminated: ARC_ELIMINATIONS.iter().map(|&(n, reason)| Elimination { n, reason }).collect(),
        refined_matches_stored: refined == stored,
        raw,
        refined,
        stored,
    }
}

/// Stabilizer pairs `(T_v, G_v)` realising a ratio `n`.
pub fn ratio_witnesses(n: u64) -> Vec<(&'static str, &'static str)> {
    let entries = stabilizer_orders();
    let mut out = Vec::new();
    for t in entries {
        for g in entries {
            if t.order == n * g.order {
                out.push((t.name.as_str(), g.name.as_str()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularCandidates {
    /// Distinct stabilizer orders other than 5.
    pub derived: Vec<u64>,
    pub stored: Vec<u64>,
    pub only_derived: Vec<u64>,
    pub only_stored: Vec<u64>,
    /// True when the two lists disagree.
    pub flagged: bool,
}

pub fn derive_regular_candidates() -> RegularCandidates {
    let derived: BTreeSet<u64> = distinct_stabilizer_orders().into_iter().filter(|&m| m != 5).collect();
    let stored: BTreeSet<u64> = theorem_pairs().regular.iter().map(Factored::value).collect();
    let only_derived: Vec<u64> = derived.difference(&stored).copied().collect();
    let only_stored: Vec<u64> = stored.difference(&derived).copied().collect();
    RegularCandidates {
        flagged: !only_derived.is_empty() || !only_stored.is_empty(),
        derived: derived.into_iter().collect(),
        stored: stored.into_iter().collect(),
        only_derived,
        only_stored,
    }
}

/// Re-runs the subgroup checks behind the elimination of 18: returns
/// `(F20xZ2 < A4xA5, F20xZ4 < (A4xA5):Z2)`, both expected false.
pub fn verify_eliminations(cap: u64) -> Result<(bool, bool)> {
    let a4xa5 = lookup_type("A4xA5")?.model_group().expect("model shipped");
    let ext = lookup_type("A4xA5:Z2")?.model_group().expect("model shipped");
    Ok((
        crate::subgroups::has_subgroup_of_type(&a4xa5, "F20xZ2", cap)?,
        crate::subgroups::has_subgroup_of_type(&ext, "F20xZ4", cap)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_entries_fourteen_orders() {
        let e = stabilizer_orders();
        assert_eq!(e.len(), 16);
        assert_eq!(distinct_stabilizer_orders().len(), 14);
        for entry in e {
            assert_eq!(entry.factored.value(), entry.order, "{}", entry.name);
            assert_eq!(entry.factored.c, 1);
        }
    }

    #[test]
    fn order_validation() {
        assert!(validate_stabilizer_order(720));
        assert!(validate_stabilizer_order(5));
        assert!(!validate_stabilizer_order(30));
    }

    #[test]
    fn labels_resolve() {
        assert_eq!(lookup_type("f20xz2").unwrap().order, 40);
        assert_eq!(lookup_type("(A4xA5):Z2").unwrap().order, 1440);
        assert_eq!(lookup_type("AGammaL(2,4)").unwrap().order, 5760);
        assert!(lookup_type("Z7").is_err());
    }

    #[test]
    fn divisors() {
        let d = theorem_divisors();
        assert_eq!(d.len(), 55);
        assert_eq!(d.first(), Some(&6));
        assert_eq!(d.last(), Some(&23040));
    }

    #[test]
    fn factored_round_trip() {
        for s in ["5", "2*5", "2^9*3^2*5", "3*5"] {
            assert_eq!(Factored::parse(s).unwrap().to_string(), s);
        }
        assert!(Factored::parse("7").is_err());
    }

    #[test]
    fn table_shape() {
        let t = table1();
        assert_eq!(t.rows.len(), 22);
        assert_eq!(t.parametric.0, "A_n");
        assert_eq!(lookup_pair("PSL(2,8)").len(), 2);
        assert!(t.rows.iter().all(|r| r.index.a <= 9 && r.index.b <= 2 && r.index.c <= 1));
    }

    #[test]
    fn stored_lists_as_printed() {
        let p = theorem_pairs();
        assert_eq!(p.named.len(), 3);
        assert_eq!(p.arc.len(), 17);
        assert_eq!(p.regular.len(), 13);
    }

    #[test]
    fn ratio_witnesses_for_eighteen() {
        let mut w = ratio_witnesses(18);
        w.sort();
        assert_eq!(w, vec![("A4xA5", "F20xZ2"), ("A4xA5:Z2", "F20xZ4")]);
    }
}
