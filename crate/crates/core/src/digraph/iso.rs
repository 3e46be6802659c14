use super::Digraph;

/// Finds a bijection `map` with `(u, v)` an arc of `g` iff
/// `(map[u], map[v])` is an arc of `h`.
///
/// Backtracking over vertices of `g` in index order; candidates are
/// restricted to vertices of `h` with the same in/out degree.
pub fn find_isomorphism(g: &Digraph, h: &Digraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.arc_count() != h.arc_count() {
        return None;
    }
    let sig = |d: &Digraph| -> Vec<(usize, usize)> { (0..n).map(|u| (d.out_degree(u), d.in_degree(u))).collect() };
    let gs = sig(g);
    let hs = sig(h);
    let mut a = gs.clone();
    let mut b = hs.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(g, h, &gs, &hs, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Digraph,
    h: &Digraph,
    gs: &[(usize, usize)],
    hs: &[(usize, usize)],
    u: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if u == g.n() {
        return true;
    }
    for cand in 0..h.n() {
        if *used >> cand & 1 == 1 || gs[u] != hs[cand] {
            continue;
        }
        let consistent = (0..u).all(|w| {
            g.has_arc(u, w) == h.has_arc(cand, map[w]) && g.has_arc(w, u) == h.has_arc(map[w], cand)
        });
        if !consistent {
            continue;
        }
        map[u] = cand;
        *used |= 1 << cand;
        if extend(g, h, gs, hs, u + 1, map, used) {
            return true;
        }
        *used &= !(1 << cand);
        map[u] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{circuit, complete, lambda, LambdaParams};

    #[test]
    fn isomorphism_examples() {
        let c3 = circuit(3).unwrap();
        assert!(!are_isomorphic(&c3, &lambda(LambdaParams::new(3, 0, 0, 0)).unwrap()));
        assert!(are_isomorphic(&lambda(LambdaParams::new(0, 1, 0, 1)).unwrap(), &complete(2).unwrap()));
        let c4 = circuit(4).unwrap();
        let relabeled = c4.relabeled(&[2, 3, 0, 1]).unwrap();
        assert!(are_isomorphic(&c4, &relabeled));
    }

    #[test]
    fn mapping_is_witness() {
        let g = lambda(LambdaParams::new(1, 1, 0, 1)).unwrap();
        let h = lambda(LambdaParams::new(0, 1, 1, 1)).unwrap();
        let map = find_isomorphism(&g, &h).expect("mirror parameters give isomorphic digraphs");
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(g.has_arc(u, v), h.has_arc(map[u], map[v]));
            }
        }
    }

    #[test]
    fn circuit_is_not_its_reverse_plus_chord() {
        let c4 = circuit(4).unwrap();
        let mut other = c4.clone();
        other.add_arc(0, 2).unwrap();
        assert!(!are_isomorphic(&c4, &other));
    }
}
