use std::collections::BTreeSet;

use rayon::prelude::*;

use super::Digraph;
use crate::error::{Error, Result};

/// Exhaustive enumeration scans `2^{n(n-1)}` arc sets; beyond five vertices
/// that is no longer a desk-scale computation.
pub const MAX_ENUMERATION_VERTICES: usize = 5;

const MAX_CANONICAL_VERTICES: usize = 8;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect()
}

/// Number of labelled digraphs on `n` vertices, `2^{n(n-1)}`.
pub fn labeled_mask_count(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::CapExceeded(format!("enumeration supports 1..={MAX_ENUMERATION_VERTICES} vertices, got {n}")));
    }
    Ok(1u64 << (n * (n - 1)))
}

impl Digraph {
    /// Digraph whose arc set is the bit mask over ordered pairs `(u, v)`,
    /// `u != v`, listed by `u` then `v`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Digraph::from_arc_list(n, pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p))
    }

    /// Inverse of [`Digraph::from_mask`].
    pub fn arc_mask(&self) -> u64 {
        pairs(self.n()).into_iter().enumerate().filter(|(_, (u, v))| self.has_arc(*u, *v)).fold(0, |m, (i, _)| m | 1 << i)
    }
}

/// Strong labelled digraphs on `n` vertices in increasing arc-mask order.
pub fn enumerate_strong(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    let total = labeled_mask_count(n)?;
    Ok((0..total).filter_map(move |m| Digraph::from_mask(n, m).ok().filter(Digraph::is_strong)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest arc mask over all relabellings; equal iff isomorphic.
pub fn canonical_mask(g: &Digraph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::CapExceeded(format!("canonical form supports at most {MAX_CANONICAL_VERTICES} vertices")));
    }
    let ps = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in ps.iter().enumerate() {
        index[u][v] = i;
    }
    let arcs: Vec<(usize, usize)> = g.arcs().collect();
    Ok(permutations(n)
        .iter()
        .map(|perm| arcs.iter().fold(0u64, |m, &(u, v)| m | 1 << index[perm[u]][perm[v]]))
        .min()
        .unwrap_or(0))
}

/// One digraph per isomorphism class of strong digraphs on `n` vertices;
/// each representative is the class member with the smallest arc mask.
pub fn strong_class_representatives(n: usize) -> Result<Vec<Digraph>> {
    let total = labeled_mask_count(n)?;
    let classes: BTreeSet<u64> = (0..total)
        .into_par_iter()
        .filter_map(|m| {
            let g = Digraph::from_mask(n, m).ok()?;
            if g.is_strong() {
                canonical_mask(&g).ok()
            } else {
                None
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    classes.into_iter().map(|m| Digraph::from_mask(n, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip() {
        for m in 0..64 {
            assert_eq!(Digraph::from_mask(3, m).unwrap().arc_mask(), m);
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_strong(1).unwrap().count(), 1);
        assert_eq!(enumerate_strong(2).unwrap().count(), 1);
        assert_eq!(enumerate_strong(3).unwrap().count(), 18);
        assert_eq!(strong_class_representatives(3).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_cap() {
        assert!(enumerate_strong(6).is_err());
        assert!(enumerate_strong(0).is_err());
    }

    #[test]
    fn enumeration_order_is_increasing_mask() {
        let masks: Vec<u64> = enumerate_strong(3).unwrap().map(|g| g.arc_mask()).collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
    }
}
