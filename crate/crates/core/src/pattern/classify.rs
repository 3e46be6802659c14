use serde::Serialize;

use super::{contains_pattern, BuiltinPattern};
use crate::digraph::{circuit, find_isomorphism, lambda, Digraph, LambdaBlock, LambdaParams};
use crate::error::{Error, Result};

/// Which side of the one-trivial-ideal classification a digraph lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Circuit3,
    Lambda(LambdaParams),
    NotInGamma1,
}

/// Evidence for a [`Classification`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    /// `map[v]` is the image of vertex `v` in the model digraph.
    Isomorphism(Vec<usize>),
    /// Block of each vertex.
    Blocks(Vec<LambdaBlock>),
    /// A forbidden pattern and its embedding.
    Pattern { pattern: BuiltinPattern, embedding: Vec<usize> },
    /// Not isomorphic to any model, yet free of the forbidden patterns.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub class: Classification,
    pub witness: Witness,
}

fn require_strong(g: &Digraph) -> Result<()> {
    if g.is_strong() {
        Ok(())
    } else {
        Err(Error::NotStrong)
    }
}

/// First of `F1..F5` that embeds, with its embedding.
pub fn gamma1_witness(g: &Digraph) -> Result<Option<(BuiltinPattern, Vec<usize>)>> {
    require_strong(g)?;
    Ok(BuiltinPattern::GAMMA1.into_iter().find_map(|b| contains_pattern(g, &b.pattern()).map(|m| (b, m))))
}

/// No pattern among `F1..F5` embeds.
pub fn is_gamma1_pattern_free(g: &Digraph) -> Result<bool> {
    Ok(gamma1_witness(g)?.is_none())
}

fn degree_profile(g: &Digraph) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (0..g.n()).map(|u| (g.out_degree(u), g.in_degree(u))).collect();
    v.sort_unstable();
    v
}

/// `C3`, a member of the `Λ` family with its blocks, or neither with a
/// forbidden pattern as evidence. Among equivalent `Λ` parameter tuples
/// the lexicographically largest is reported.
pub fn classify(g: &Digraph) -> Result<ClassificationResult> {
    require_strong(g)?;
    let n = g.n();
    if n == 3 {
        if let Some(map) = find_isomorphism(g, &circuit(3)?) {
            return Ok(ClassificationResult { class: Classification::Circuit3, witness: Witness::Isomorphism(map) });
        }
    }
    let profile = degree_profile(g);
    for p in LambdaParams::all_of_order(n).into_iter().rev() {
        let h = lambda(p)?;
        if h.arc_count() != g.arc_count() || degree_profile(&h) != profile {
            continue;
        }
        if let Some(map) = find_isomorphism(g, &h) {
            let blocks = p.blocks();
            let witness = Witness::Blocks(map.iter().map(|&x| blocks[x]).collect());
            return Ok(ClassificationResult { class: Classification::Lambda(p), witness });
        }
    }
    let witness = match gamma1_witness(g)? {
        Some((pattern, embedding)) => Witness::Pattern { pattern, embedding },
        None => Witness::None,
    };
    Ok(ClassificationResult { class: Classification::NotInGamma1, witness })
}

/// For a graph given as a symmetric digraph: pattern `F6` does not embed.
pub fn is_f6_free_graph(g: &Digraph) -> Result<bool> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(contains_pattern(g, &BuiltinPattern::F6.pattern()).is_none())
}
