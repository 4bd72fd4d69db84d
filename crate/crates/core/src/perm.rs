//! Permutations of a finite point domain.
//!
//! A [`Permutation`] carries its degree; points are `0..degree` internally and
//! every textual form (cycle notation, image arrays) is 1-based. Composition is
//! left to right: `p.then(&q)` applies `p` first, then `q`.

use std::borrow::Borrow;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Borrow<[u32]> for Permutation {
    fn borrow(&self) -> &[u32] {
        &self.images
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n {
                return Err(Error::Parse(format!("image {} out of range for degree {n}", i + 1)));
            }
            if seen[i] {
                return Err(Error::Parse(format!("image {} repeated", i + 1)));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(1 2 7)(3 4)`; points omitted are fixed.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut chars = text.chars().peekable();
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace() || *c == ',') {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(Error::Parse(format!("unexpected character {c:?} outside a cycle"))),
            }
            let mut body = String::new();
            let mut closed = false;
            for c in chars.by_ref() {
                match c {
                    ')' => {
                        closed = true;
                        break;
                    }
                    '(' => return Err(Error::Parse("nested parenthesis".into())),
                    _ => body.push(c),
                }
            }
            if !closed {
                return Err(Error::Parse("unclosed parenthesis".into()));
            }
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                let p: usize = tok.parse().map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!("point {p} out of range 1..={degree}")));
                }
                if used[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated")));
                }
                used[p - 1] = true;
                cycle.push(p as u32 - 1);
            }
            for (k, &a) in cycle.iter().enumerate() {
                images[a as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses a 1-based image list such as `[3,1,2]`.
    pub fn parse_array(text: &str, degree: usize) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("image array must be enclosed in [ ]".into()))?;
        let mut images = Vec::with_capacity(degree);
        for tok in inner.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let p: u32 = tok.parse().map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
            if p == 0 {
                return Err(Error::Parse("points are 1-based".into()));
            }
            images.push(p - 1);
        }
        if images.len() != degree {
            return Err(Error::Parse(format!("image array has {} entries, expected {degree}", images.len())));
        }
        Self::from_images(images)
    }

    /// Accepts either cycle notation or a bracketed image array.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            Self::parse_array(text, degree)
        } else {
            Self::parse_cycles(text, degree)
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Callers must leave the images bijective.
    pub(crate) fn images_mut(&mut self) -> &mut Vec<u32> {
        &mut self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &j)| *i as u32 != j).map(|(i, _)| i)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// `self` then `other`. Panics on degree mismatch; see [`Permutation::compose`].
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub(crate) fn then_into(&self, other: &Permutation, out: &mut Vec<u32>) {
        out.clear();
        out.extend(self.images.iter().map(|&i| other.images[i as usize]));
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn power(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `t⁻¹ · self · t`.
    pub fn conjugate(&self, t: &Permutation) -> Result<Permutation> {
        self.check_degree(t)?;
        Ok(self.conjugate_by(t))
    }

    pub(crate) fn conjugate_by(&self, t: &Permutation) -> Permutation {
        // (t⁻¹ p t)(t(i)) = t(p(i))
        let mut out = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            out[t.images[i] as usize] = t.images[j as usize];
        }
        Permutation { images: out }
    }

    /// Nontrivial cycles, each starting from its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut j = self.images[start] as usize;
            while j != start {
                seen[j] = true;
                cycle.push(j as u32);
                j = self.images[j] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All cycle lengths including fixed points, in descending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.images[j] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> BigUint {
        let mut lens = self.cycle_type();
        lens.dedup();
        lens.into_iter().fold(BigUint::one(), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    /// Order when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        let mut lens = self.cycle_type();
        lens.dedup();
        let mut acc: u64 = 1;
        for l in lens {
            let l = l as u64;
            acc = acc.checked_mul(l / acc.gcd(&l))?;
        }
        Some(acc)
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycle_type().len()) % 2 == 0
    }

    /// Order is a power of two (the identity counts).
    pub fn is_two_element(&self) -> bool {
        self.cycle_type().iter().all(|l| l.is_power_of_two())
    }

    /// 1-based image array, e.g. `[3,1,2]`.
    pub fn to_array_string(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation<{}>{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const X: &str = "(1 2 7 18 5)(3 11 8 17 14)(4 9 22 33 15)(6 20 19 10 21)(12 28 26 31 23)\
                     (13 27 24 32 30)(16 35 34 25 36)(29 39 38 40 37)";
    const Y: &str = "(1 3 12 6)(2 8 23 10)(4 13 29 16)(5 17 28 19)(7 14 31 20)(9 24 37 25)\
                     (11 26 21 18)(15 32 39 34)(22 30 40 35)(27 38 36 33)";
    const G: &str = "(1 7)(2 24)(3 14)(4 40)(5 11)(6 20)(8 37)(9 10)(12 31)(13 35)(15 36)(16 30)\
                     (17 26)(18 19)(21 28)(22 29)(23 25)(27 39)(32 33)(34 38)";

    #[test]
    fn parses_example_elements() {
        let x = Permutation::parse_cycles(X, 40).unwrap();
        assert_eq!(x.order(), BigUint::from(5u32));
        assert_eq!(x.apply(0), 1);
        assert_eq!(x.apply(4), 0);

        let y = Permutation::parse_cycles(Y, 40).unwrap();
        assert_eq!(y.cycle_type(), vec![4; 10]);
        assert_eq!(y.order_u64(), Some(4));

        let g = Permutation::parse_cycles(G, 40).unwrap();
        assert_eq!(g.order_u64(), Some(2));
        assert!(g.is_two_element());
        assert!(g.is_even());
        assert_eq!(g.cycles().len(), 20);
    }

    #[test]
    fn empty_text_is_identity() {
        let e = Permutation::parse_cycles("", 6).unwrap();
        assert!(e.is_identity());
        assert_eq!(e.degree(), 6);
        assert_eq!(e.to_string(), "()");
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        let p = Permutation::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(p.order_u64(), Some(6));
        assert!(!p.is_two_element());
        assert!(!p.is_even());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse_cycles("(1 2)(2 3)", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_cycles("(1 6)", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_cycles("(1 2", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_cycles("1 2)", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_cycles("((1 2))", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_cycles("(0 1)", 5), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_array("[1,1,2]", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse_array("[1,2]", 3), Err(Error::Parse(_))));
        assert!(matches!(Permutation::parse("img 1→3 2→1", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn array_form() {
        let p = Permutation::parse("[3,1,2]", 3).unwrap();
        assert_eq!(p, Permutation::parse("(1 3 2)", 3).unwrap());
        assert_eq!(p.to_array_string(), "[3,1,2]");
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch(3, 4))));
        assert!(matches!(a.conjugate(&b), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn conjugation_matches_definition() {
        let p = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
        let t = Permutation::parse_cycles("(1 4)", 4).unwrap();
        let direct = t.inverse().then(&p).then(&t);
        assert_eq!(p.conjugate(&t).unwrap(), direct);
        assert_eq!(direct, Permutation::parse_cycles("(4 2 3)", 4).unwrap());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(p in arb_perm(9), q in arb_perm(9), r in arb_perm(9)) {
            prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
        }

        #[test]
        fn order_is_least_identity_power(p in arb_perm(12)) {
            let ord = p.order_u64().unwrap();
            let mut q = p.clone();
            let mut k = 1u64;
            while !q.is_identity() {
                q = q.then(&p);
                k += 1;
                prop_assert!(k <= 10_000);
            }
            prop_assert_eq!(k, ord);
            prop_assert!(p.power(ord as i64).is_identity());
            prop_assert_eq!(p.power(-1), p.inverse());
        }

        #[test]
        fn print_parse_round_trip(p in arb_perm(15)) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse_cycles(&text, 15).unwrap(), p.clone());
            prop_assert_eq!(Permutation::parse(&p.to_array_string(), 15).unwrap(), p);
        }
    }
}
