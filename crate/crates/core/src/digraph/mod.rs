//! Simple digraphs on vertices `0..n`, shortest-path distances and the
//! distance-derived integer matrices.

mod enumerate;
mod generators;
mod iso;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::BigMatrix;

pub use enumerate::{canonical_mask, enumerate_strong, labeled_mask_count, strong_class_representatives, MAX_ENUMERATION_VERTICES};
pub use generators::{circuit, complete, complete_bipartite, lambda, path_graph, LambdaBlock, LambdaParams};
pub use iso::{are_isomorphic, find_isomorphism};

/// Largest supported vertex count; adjacency rows are stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A simple digraph: no loops, no multiple arcs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

/// Selects one of the five distance-derived matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DistanceMatrixKind {
    /// `D(G)`.
    D,
    /// `trs(G) - D(G)`.
    DL,
    /// `trs(G) + D(G)`.
    DQ,
    /// `deg(G) - D(G)` with out-degrees on the diagonal.
    Ddeg,
    /// `deg(G) + D(G)`.
    DdegPlus,
}

impl DistanceMatrixKind {
    pub const ALL: [DistanceMatrixKind; 5] = [Self::D, Self::DL, Self::DQ, Self::Ddeg, Self::DdegPlus];

    pub fn name(self) -> &'static str {
        match self {
            Self::D => "D",
            Self::DL => "DL",
            Self::DQ => "DQ",
            Self::Ddeg => "Ddeg",
            Self::DdegPlus => "DdegPlus",
        }
    }
}

impl FromStr for DistanceMatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidSize(format!("vertex count {n} not in 1..={MAX_VERTICES}")));
        }
        Ok(Self { n, out: vec![0; n] })
    }

    /// Builds a digraph from an arc list; duplicate arcs collapse.
    pub fn from_arc_list<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopArc(u));
        }
        self.out[u] |= 1 << v;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    /// Out-neighbourhood of `u` as a bit mask.
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    /// In-neighbourhood of `v` as a bit mask.
    pub fn in_mask(&self, v: usize) -> u64 {
        (0..self.n).filter(|&u| self.has_arc(u, v)).fold(0, |m, u| m | 1 << u)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_mask(v).count_ones() as usize
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs sorted by `(u, v)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.has_arc(u, v)).map(move |v| (u, v)))
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> Self {
        let mut out = vec![0u64; self.n];
        for (u, v) in self.arcs() {
            out[v] |= 1 << u;
        }
        Self { n: self.n, out }
    }

    /// True when `(u, v)` is an arc exactly when `(v, u)` is.
    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, got: perm.len() });
        }
        Self::from_arc_list(self.n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subdigraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = Self::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    g.add_arc(i, j)?;
                }
            }
        }
        Ok(g)
    }

    fn reach_mask(&self, start: usize, forward: bool) -> u64 {
        let rev;
        let g = if forward {
            self
        } else {
            rev = self.reversed();
            &rev
        };
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.out[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Every ordered pair of distinct vertices is joined by a walk.
    pub fn is_strong(&self) -> bool {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        self.reach_mask(0, true) == all && self.reach_mask(0, false) == all
    }

    /// All-pairs shortest path lengths by one BFS per source.
    pub fn distances(&self) -> Result<Vec<Vec<u32>>> {
        if !self.is_strong() {
            return Err(Error::NotStrong);
        }
        let mut dist = vec![vec![u32::MAX; self.n]; self.n];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let mut m = self.out[u];
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if row[v] == u32::MAX {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(dist)
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self.distances()?.iter().flatten().copied().max().unwrap_or(0))
    }

    /// Transmission of each vertex: the sum of its distances to all vertices.
    pub fn transmissions(&self) -> Result<Vec<u64>> {
        Ok(self.distances()?.iter().map(|row| row.iter().map(|&d| d as u64).sum()).collect())
    }

    pub fn distance_matrix(&self, kind: DistanceMatrixKind) -> Result<BigMatrix> {
        let dist = self.distances()?;
        let n = self.n;
        let diag: Vec<i64> = match kind {
            DistanceMatrixKind::D => vec![0; n],
            DistanceMatrixKind::DL | DistanceMatrixKind::DQ => {
                dist.iter().map(|row| row.iter().map(|&d| d as i64).sum()).collect()
            }
            DistanceMatrixKind::Ddeg | DistanceMatrixKind::DdegPlus => {
                (0..n).map(|u| self.out_degree(u) as i64).collect()
            }
        };
        let sign: i64 = match kind {
            DistanceMatrixKind::DL | DistanceMatrixKind::Ddeg => -1,
            _ => 1,
        };
        Ok(BigMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::from(diag[i])
            } else {
                BigInt::from(sign * dist[i][j] as i64)
            }
        }))
    }

    /// Parses the `n=<count>` / arc-list format, or an adjacency block of 0/1 rows.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let first = lines.first().ok_or_else(|| Error::Parse("empty digraph text".into()))?;
        if let Some(count) = first.strip_prefix("n=") {
            let n: usize = count.trim().parse().map_err(|_| Error::Parse(format!("bad vertex count {count:?}")))?;
            let mut g = Self::empty(n)?;
            for line in &lines[1..] {
                for item in line.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (u, v) = item.split_once("->").ok_or_else(|| Error::Parse(format!("bad arc {item:?}")))?;
                    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex {s:?}")));
                    g.add_arc(parse(u)?, parse(v)?)?;
                }
            }
            Ok(g)
        } else {
            let rows: Vec<Vec<u8>> = lines
                .iter()
                .map(|l| {
                    l.chars()
                        .filter(|c| !c.is_whitespace() && *c != ',')
                        .map(|c| match c {
                            '0' => Ok(0),
                            '1' => Ok(1),
                            _ => Err(Error::Parse(format!("bad adjacency entry {c:?}"))),
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            let n = rows.len();
            let mut g = Self::empty(n)?;
            for (u, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Parse(format!("adjacency row {u} has {} entries, expected {n}", row.len())));
                }
                for (v, &bit) in row.iter().enumerate() {
                    if bit == 1 {
                        g.add_arc(u, v)?;
                    }
                }
            }
            Ok(g)
        }
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        let arcs: Vec<String> = self.arcs().map(|(u, v)| format!("{u}->{v}")).collect();
        writeln!(f, "{}", arcs.join(","))
    }
}

impl FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle_with_chord() -> Digraph {
        Digraph::from_arc_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn arc_list_construction() {
        let c3 = Digraph::from_arc_list(3, [(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(c3, circuit(3).unwrap());
        assert_eq!(c3.arc_count(), 3);
        let c1 = Digraph::from_arc_list(1, []).unwrap();
        assert_eq!(c1.arc_count(), 0);
        assert!(c1.is_strong());
        let c2 = Digraph::from_arc_list(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(c2, circuit(2).unwrap());
    }

    #[test]
    fn arc_list_errors() {
        assert_eq!(Digraph::from_arc_list(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Digraph::from_arc_list(3, [(1, 1)]), Err(Error::LoopArc(1)));
        assert!(Digraph::empty(0).is_err());
    }

    #[test]
    fn strongness() {
        assert!(circuit(4).unwrap().is_strong());
        assert!(!Digraph::from_arc_list(2, [(0, 1)]).unwrap().is_strong());
        assert!(four_cycle_with_chord().is_strong());
    }

    #[test]
    fn distance_matrices_of_small_circuits() {
        let c3 = circuit(3).unwrap();
        let d = c3.distance_matrix(DistanceMatrixKind::D).unwrap();
        assert_eq!(d, BigMatrix::from_i64(3, 3, &[0, 1, 2, 2, 0, 1, 1, 2, 0]));
        let dl = c3.distance_matrix(DistanceMatrixKind::DL).unwrap();
        assert_eq!(dl, BigMatrix::from_i64(3, 3, &[3, -1, -2, -2, 3, -1, -1, -2, 3]));
        let k3 = complete(3).unwrap().distance_matrix(DistanceMatrixKind::D).unwrap();
        assert_eq!(k3, BigMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]));
    }

    #[test]
    fn degree_matrices() {
        let g = four_cycle_with_chord();
        let dd = g.distance_matrix(DistanceMatrixKind::Ddeg).unwrap();
        let dp = g.distance_matrix(DistanceMatrixKind::DdegPlus).unwrap();
        let outdeg = [1, 2, 1, 2];
        for (i, &d) in outdeg.iter().enumerate() {
            assert_eq!(dd.get(i, i), &BigInt::from(d));
            assert_eq!(dp.get(i, i), &BigInt::from(d));
        }
        assert_eq!(dd.get(0, 2), &BigInt::from(-2));
        assert_eq!(dp.get(0, 2), &BigInt::from(2));
    }

    #[test]
    fn not_strong_rejected() {
        let g = Digraph::from_arc_list(2, [(0, 1)]).unwrap();
        assert_eq!(g.distances(), Err(Error::NotStrong));
        assert_eq!(g.diameter(), Err(Error::NotStrong));
        assert!(g.distance_matrix(DistanceMatrixKind::D).is_err());
    }

    #[test]
    fn diameters() {
        assert_eq!(circuit(4).unwrap().diameter().unwrap(), 3);
        assert_eq!(complete(5).unwrap().diameter().unwrap(), 1);
        assert_eq!(lambda(LambdaParams::new(1, 1, 0, 1)).unwrap().diameter().unwrap(), 2);
    }

    #[test]
    fn text_format_round_trip() {
        let g = four_cycle_with_chord();
        let text = g.to_string();
        assert_eq!(text, "n=4\n0->1,1->2,1->3,2->3,3->0,3->1\n");
        assert_eq!(Digraph::parse(&text).unwrap(), g);
        let adj = "0100\n0011\n0001\n1100\n";
        assert_eq!(Digraph::parse(adj).unwrap(), g);
        let spaced = "0 1 0 0\n0 0 1 1\n0 0 0 1\n1 1 0 0";
        assert_eq!(Digraph::parse(spaced).unwrap(), g);
        assert_eq!(Digraph::parse("n=1\n").unwrap().n(), 1);
        assert!(Digraph::parse("n=2\n0-1").is_err());
        assert!(Digraph::parse("010\n10").is_err());
    }

    #[test]
    fn kind_names_parse() {
        for k in DistanceMatrixKind::ALL {
            assert_eq!(k.name().parse::<DistanceMatrixKind>().unwrap(), k);
        }
        assert!("Dx".parse::<DistanceMatrixKind>().is_err());
    }
}
