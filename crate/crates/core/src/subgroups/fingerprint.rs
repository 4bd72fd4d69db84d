//! Isomorphism-invariant profiles of small groups.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;

/// Order, commutativity, element-order counts, and the orders of the center
/// and derived subgroup. Isomorphic groups have equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IsoFingerprint {
    pub order: u64,
    pub abelian: bool,
    pub element_orders: BTreeMap<u64, u64>,
    pub center_order: u64,
    pub derived_order: u64,
}

impl IsoFingerprint {
    /// Computes the profile by enumerating `h`.
    pub fn of(h: &GroupHandle, cap: u64) -> Result<Self> {
        let gens = h.generators();
        let mut element_orders = BTreeMap::new();
        let mut order = 0u64;
        let mut center_order = 0u64;
        for e in h.elements(cap)? {
            order += 1;
            *element_orders.entry(e.order_u64().unwrap_or(u64::MAX)).or_insert(0) += 1;
            if gens.iter().all(|g| commute(&e, g)) {
                center_order += 1;
            }
        }
        let abelian = center_order == order;
        let derived_order = if abelian {
            1
        } else {
            let mut comms = Vec::new();
            for (i, a) in gens.iter().enumerate() {
                for b in &gens[i + 1..] {
                    comms.push(a.inverse().then(&b.inverse()).then(a).then(b));
                }
            }
            h.normal_closure(comms).order_u64().expect("subgroup of an enumerable group")
        };
        Ok(IsoFingerprint { order, abelian, element_orders, center_order, derived_order })
    }

    /// Parses the sidecar format written by [`fmt::Display`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut order = None;
        let mut abelian = None;
        let mut center = None;
        let mut derived = None;
        let mut orders = None;
        let num = |s: &str| s.parse::<u64>().map_err(|_| Error::Parse(format!("bad number {s:?}")));
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            let Some((key, rest)) = line.split_once(char::is_whitespace) else { continue };
            let rest = rest.trim();
            match key {
                "order" => order = Some(num(rest)?),
                "center" => center = Some(num(rest)?),
                "derived" => derived = Some(num(rest)?),
                "abelian" => {
                    abelian = Some(rest.parse::<bool>().map_err(|_| Error::Parse(format!("bad boolean {rest:?}")))?)
                }
                "orders" => {
                    let mut m = BTreeMap::new();
                    for tok in rest.split_whitespace() {
                        let (k, v) =
                            tok.split_once(':').ok_or_else(|| Error::Parse(format!("bad order entry {tok:?}")))?;
                        m.insert(num(k)?, num(v)?);
                    }
                    orders = Some(m);
                }
                other => return Err(Error::Parse(format!("unknown fingerprint key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("fingerprint lacks {k}"));
        Ok(IsoFingerprint {
            order: order.ok_or_else(|| missing("order"))?,
            abelian: abelian.ok_or_else(|| missing("abelian"))?,
            element_orders: orders.ok_or_else(|| missing("orders"))?,
            center_order: center.ok_or_else(|| missing("center"))?,
            derived_order: derived.ok_or_else(|| missing("derived"))?,
        })
    }

    /// Whether an element of this order can occur.
    pub fn allows_element_order(&self, k: u64) -> bool {
        self.element_orders.contains_key(&k)
    }
}

fn commute(a: &Permutation, b: &Permutation) -> bool {
    a.images().iter().zip(b.images()).all(|(&ai, &bi)| b.apply(ai as usize) == a.apply(bi as usize))
}

impl fmt::Display for IsoFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.order)?;
        writeln!(f, "abelian {}", self.abelian)?;
        writeln!(f, "center {}", self.center_order)?;
        writeln!(f, "derived {}", self.derived_order)?;
        let orders: Vec<String> = self.element_orders.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        writeln!(f, "orders {}", orders.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &[&str], n: usize) -> GroupHandle {
        GroupHandle::new(gens.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn cyclic_five() {
        let fp = IsoFingerprint::of(&group(&["(1 2 3 4 5)"], 5), 100).unwrap();
        assert_eq!(fp.order, 5);
        assert!(fp.abelian);
        assert_eq!(fp.element_orders, BTreeMap::from([(1, 1), (5, 4)]));
        assert_eq!((fp.center_order, fp.derived_order), (5, 1));
    }

    #[test]
    fn dihedral_ten() {
        let fp = IsoFingerprint::of(&group(&["(1 2 3 4 5)", "(2 5)(3 4)"], 5), 100).unwrap();
        assert_eq!(fp.order, 10);
        assert!(!fp.abelian);
        assert_eq!(fp.element_orders, BTreeMap::from([(1, 1), (2, 5), (5, 4)]));
        assert_eq!((fp.center_order, fp.derived_order), (1, 5));
    }

    #[test]
    fn symmetric_group_profile() {
        let fp = IsoFingerprint::of(&GroupHandle::symmetric(4).unwrap(), 100).unwrap();
        assert_eq!(fp.element_orders, BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]));
        assert_eq!((fp.center_order, fp.derived_order), (1, 12));
    }

    #[test]
    fn sidecar_round_trip() {
        let fp = IsoFingerprint::of(&GroupHandle::alternating(5).unwrap(), 100).unwrap();
        assert_eq!(IsoFingerprint::parse(&fp.to_string()).unwrap(), fp);
        assert!(IsoFingerprint::parse("order 5\n").is_err());
    }
}
