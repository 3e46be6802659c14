//! Patterns of required and forbidden arcs, their embeddings, and the
//! classification of digraphs with exactly one trivial distance ideal.

mod classify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub use classify::{classify, gamma1_witness, is_f6_free_graph, is_gamma1_pattern_free, Classification, ClassificationResult, Witness};

/// Vertices `0..k`, arcs that must be present and arcs that must be absent.
/// Pairs in neither list are unconstrained.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pattern {
    k: usize,
    required: Vec<(usize, usize)>,
    forbidden: Vec<(usize, usize)>,
}

/// The named patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BuiltinPattern {
    P4,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

// vertex names used by the tables below
const U: usize = 0;
const V: usize = 1;
const W: usize = 2;
const Z: usize = 3;

impl BuiltinPattern {
    pub const ALL: [BuiltinPattern; 7] = [Self::P4, Self::F1, Self::F2, Self::F3, Self::F4, Self::F5, Self::F6];

    /// The five patterns forbidden in digraphs with one trivial distance ideal.
    pub const GAMMA1: [BuiltinPattern; 5] = [Self::F1, Self::F2, Self::F3, Self::F4, Self::F5];

    pub fn name(self) -> &'static str {
        match self {
            Self::P4 => "P4",
            Self::F1 => "F1",
            Self::F2 => "F2",
            Self::F3 => "F3",
            Self::F4 => "F4",
            Self::F5 => "F5",
            Self::F6 => "F6",
        }
    }

    pub fn pattern(self) -> Pattern {
        let (k, b, c): (usize, &[(usize, usize)], &[(usize, usize)]) = match self {
            Self::P4 => (4, &[(U, W), (W, Z), (Z, V)], &[(U, Z), (U, V), (W, V)]),
            Self::F1 => (4, &[(U, V), (V, W)], &[(U, W), (U, Z), (V, Z)]),
            Self::F2 => (3, &[(U, V), (U, W), (V, W), (W, U), (W, V)], &[(V, U)]),
            Self::F3 => (4, &[(U, Z), (U, V), (W, V)], &[(W, Z)]),
            Self::F4 => (3, &[(U, V), (V, U), (V, W)], &[(W, V), (U, W), (W, U)]),
            Self::F5 => (3, &[(U, V), (V, U), (W, V)], &[(V, W), (U, W), (W, U)]),
            Self::F6 => (4, &[(U, W), (W, U), (W, Z), (Z, W), (Z, V), (V, Z)], &[(U, V), (V, U)]),
        };
        Pattern::new(k, b.to_vec(), c.to_vec()).expect("builtin tables are valid")
    }
}

impl FromStr for BuiltinPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|p| p.name().eq_ignore_ascii_case(s.trim())).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for BuiltinPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pattern by name: `P4`, `F1` ... `F6`.
pub fn builtin(name: &str) -> Result<Pattern> {
    Ok(name.parse::<BuiltinPattern>()?.pattern())
}

impl Pattern {
    pub fn new(k: usize, mut required: Vec<(usize, usize)>, mut forbidden: Vec<(usize, usize)>) -> Result<Self> {
        if k == 0 || k > 64 {
            return Err(Error::InvalidPattern(format!("vertex count {k}")));
        }
        for &(u, v) in required.iter().chain(&forbidden) {
            if u >= k || v >= k {
                return Err(Error::InvalidPattern(format!("pair {u}->{v} outside 0..{k}")));
            }
            if u == v {
                return Err(Error::InvalidPattern(format!("loop at {u}")));
            }
        }
        required.sort_unstable();
        required.dedup();
        forbidden.sort_unstable();
        forbidden.dedup();
        if let Some(p) = required.iter().find(|p| forbidden.binary_search(p).is_ok()) {
            return Err(Error::InvalidPattern(format!("pair {}->{} both required and forbidden", p.0, p.1)));
        }
        Ok(Self { k, required, forbidden })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn required(&self) -> &[(usize, usize)] {
        &self.required
    }

    pub fn forbidden(&self) -> &[(usize, usize)] {
        &self.forbidden
    }

    /// Parses `k=<count>; B: u->v,...; C: u->v,...`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("pattern: {m}"));
        let mut k = None;
        let mut b = Vec::new();
        let mut c = Vec::new();
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(rest) = part.strip_prefix("k=") {
                k = Some(rest.trim().parse::<usize>().map_err(|_| bad("bad vertex count"))?);
            } else if let Some((tag, arcs)) = part.split_once(':') {
                let list = match tag.trim() {
                    "B" => &mut b,
                    "C" => &mut c,
                    other => return Err(bad(&format!("unknown section {other:?}"))),
                };
                for item in arcs.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (u, v) = item.split_once("->").ok_or_else(|| bad(&format!("bad arc {item:?}")))?;
                    let u = u.trim().parse().map_err(|_| bad(&format!("bad vertex in {item:?}")))?;
                    let v = v.trim().parse().map_err(|_| bad(&format!("bad vertex in {item:?}")))?;
                    list.push((u, v));
                }
            } else {
                return Err(bad(&format!("unexpected {part:?}")));
            }
        }
        Self::new(k.ok_or_else(|| bad("missing k="))?, b, c)
    }

    fn fits(&self, g: &Digraph, map: &[usize], upto: usize) -> bool {
        let placed = |x: usize| x <= upto;
        let last = upto;
        self.required.iter().filter(|&&(u, v)| (u == last || v == last) && placed(u) && placed(v)).all(|&(u, v)| g.has_arc(map[u], map[v]))
            && self.forbidden.iter().filter(|&&(u, v)| (u == last || v == last) && placed(u) && placed(v)).all(|&(u, v)| !g.has_arc(map[u], map[v]))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |arcs: &[(usize, usize)]| arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect::<Vec<_>>().join(",");
        write!(f, "k={}; B: {}; C: {}", self.k, list(&self.required), list(&self.forbidden))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// First injective map (pattern vertex -> digraph vertex), in lexicographic
/// order of image tuples, with every required arc present and every
/// forbidden arc absent.
pub fn contains_pattern(g: &Digraph, p: &Pattern) -> Option<Vec<usize>> {
    if p.k > g.n() {
        return None;
    }
    let mut map = vec![0; p.k];
    fn go(g: &Digraph, p: &Pattern, i: usize, used: u64, map: &mut [usize]) -> bool {
        if i == p.k {
            return true;
        }
        for x in 0..g.n() {
            if used >> x & 1 == 1 {
                continue;
            }
            map[i] = x;
            if p.fits(g, map, i) && go(g, p, i + 1, used | 1 << x, map) {
                return true;
            }
        }
        false
    }
    go(g, p, 0, 0, &mut map).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{circuit, complete};

    #[test]
    fn builtin_tables() {
        let sizes: Vec<(usize, usize, usize)> = BuiltinPattern::ALL
            .iter()
            .map(|b| {
                let p = b.pattern();
                (p.k(), p.required().len(), p.forbidden().len())
            })
            .collect();
        assert_eq!(sizes, [(4, 3, 3), (4, 2, 3), (3, 5, 1), (4, 3, 1), (3, 3, 3), (3, 3, 3), (4, 6, 2)]);
        assert_eq!(builtin("F2").unwrap().forbidden(), &[(1, 0)]);
        let f6 = builtin("f6").unwrap();
        assert!(f6.required().iter().all(|&(u, v)| f6.required().contains(&(v, u))));
        assert!(builtin("F7").is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = builtin("P4").unwrap();
        assert_eq!(p.to_string(), "k=4; B: 0->2,2->3,3->1; C: 0->1,0->3,2->1");
        assert_eq!(Pattern::parse(&p.to_string()).unwrap(), p);
        assert!(Pattern::parse("k=2; B: 0->1; C: 0->1").is_err());
        assert!(Pattern::parse("k=2; B: 0->2").is_err());
        assert!(Pattern::parse("k=2; B: 1->1").is_err());
        assert!(Pattern::parse("B: 0->1").is_err());
        assert!(Pattern::parse("k=3; X: 0->1").is_err());
    }

    #[test]
    fn containment_examples() {
        let c4 = circuit(4).unwrap();
        let p4 = builtin("P4").unwrap();
        let m = contains_pattern(&c4, &p4).unwrap();
        for &(u, v) in p4.required() {
            assert!(c4.has_arc(m[u], m[v]));
        }
        for &(u, v) in p4.forbidden() {
            assert!(!c4.has_arc(m[u], m[v]));
        }
        let f2 = builtin("F2").unwrap();
        assert!(contains_pattern(&circuit(3).unwrap(), &f2).is_none());
        assert!(contains_pattern(&complete(4).unwrap(), &f2).is_none());
        assert!(contains_pattern(&complete(2).unwrap(), &p4).is_none());
    }

    #[test]
    fn first_hit_is_lexicographically_least() {
        let g = circuit(5).unwrap();
        let p = Pattern::new(2, vec![(0, 1)], vec![]).unwrap();
        assert_eq!(contains_pattern(&g, &p), Some(vec![0, 1]));
        let q = Pattern::new(2, vec![], vec![(0, 1)]).unwrap();
        assert_eq!(contains_pattern(&g, &q), Some(vec![0, 2]));
    }
}
