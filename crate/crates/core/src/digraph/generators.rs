use serde::{Deserialize, Serialize};

use super::Digraph;
use crate::error::{Error, Result};

/// Block sizes of the four-block family `Λ(a, b, c, d)`: cliques `K_a`,
/// `K_c` and independent sets `T_b`, `T_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LambdaParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Which block of `Λ(a, b, c, d)` a vertex sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LambdaBlock {
    Ka,
    Tb,
    Kc,
    Td,
}

impl LambdaParams {
    pub const fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        Self { a, b, c, d }
    }

    pub fn order(&self) -> usize {
        self.a + self.b + self.c + self.d
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.a, self.b, self.c, self.d)
    }

    /// `(a, b, c, d) -> (c, d, a, b)`; both tuples describe the same digraph.
    pub fn mirrored(&self) -> Self {
        Self::new(self.c, self.d, self.a, self.b)
    }

    /// Block of each vertex, with blocks laid out as `K_a, T_b, K_c, T_d`.
    pub fn blocks(&self) -> Vec<LambdaBlock> {
        let mut out = Vec::with_capacity(self.order());
        out.extend(std::iter::repeat(LambdaBlock::Ka).take(self.a));
        out.extend(std::iter::repeat(LambdaBlock::Tb).take(self.b));
        out.extend(std::iter::repeat(LambdaBlock::Kc).take(self.c));
        out.extend(std::iter::repeat(LambdaBlock::Td).take(self.d));
        out
    }

    /// Every parameter tuple with `a + b + c + d = n`, in lexicographic order.
    pub fn all_of_order(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for a in 0..=n {
            for b in 0..=n - a {
                for c in 0..=n - a - b {
                    out.push(Self::new(a, b, c, n - a - b - c));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for LambdaParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Λ({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

/// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`; `circuit(2)` is the digon.
pub fn circuit(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidSize("circuit needs at least one vertex".into()));
    }
    if n == 1 {
        return Digraph::empty(1);
    }
    Digraph::from_arc_list(n, (0..n).map(|u| (u, (u + 1) % n)))
}

pub fn complete(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidSize("complete digraph needs at least one vertex".into()));
    }
    Digraph::from_arc_list(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
}

/// `K_{m,n}` with arcs both ways between the blocks `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Digraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSize("complete bipartite blocks must be non-empty".into()));
    }
    let arcs = (0..m).flat_map(|u| (m..m + n).flat_map(move |v| [(u, v), (v, u)]));
    Digraph::from_arc_list(m + n, arcs)
}

/// Undirected path on `n` vertices as a symmetric digraph.
pub fn path_graph(n: usize) -> Result<Digraph> {
    Digraph::from_arc_list(n, (1..n).flat_map(|v| [(v - 1, v), (v, v - 1)]))
}

/// `Λ(a, b, c, d)`: `K_a` and `K_c` complete, all arcs
/// `K_a -> T_b -> K_c -> T_d -> K_a` and `T_b <-> T_d`.
/// The result is not necessarily strong.
pub fn lambda(p: LambdaParams) -> Result<Digraph> {
    let n = p.order();
    if n == 0 {
        return Err(Error::InvalidSize("Λ needs at least one vertex".into()));
    }
    let ka = 0..p.a;
    let tb = p.a..p.a + p.b;
    let kc = p.a + p.b..p.a + p.b + p.c;
    let td = p.a + p.b + p.c..n;
    let mut g = Digraph::empty(n)?;
    let mut all = |from: std::ops::Range<usize>, to: std::ops::Range<usize>| -> Result<()> {
        for u in from {
            for v in to.clone() {
                if u != v {
                    g.add_arc(u, v)?;
                }
            }
        }
        Ok(())
    };
    all(ka.clone(), ka.clone())?;
    all(kc.clone(), kc.clone())?;
    all(ka.clone(), tb.clone())?;
    all(tb.clone(), kc.clone())?;
    all(kc, td.clone())?;
    all(td.clone(), ka)?;
    all(tb.clone(), td.clone())?;
    all(td, tb)?;
    Ok(g)
}
