//! Ideals of integer polynomial rings, distance ideals of digraphs and
//! their triviality profile.

mod groebner;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::digraph::{Digraph, DistanceMatrixKind};
use crate::error::{Error, Result};
use crate::linalg::{determinant, for_each_subset};
use crate::poly::{dt_matrix, dx_matrix, minors, MonomialOrder, MultiPoly, VarContext};

pub use groebner::{is_closed, normal_form, strong_groebner, MAX_PAIR_REDUCTIONS};

/// A finitely generated ideal with a lazily computed strong Gröbner basis.
#[derive(Debug)]
pub struct Ideal {
    ctx: VarContext,
    order: MonomialOrder,
    generators: Vec<MultiPoly>,
    basis: OnceLock<Vec<MultiPoly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Self { ctx: self.ctx.clone(), order: self.order, generators: self.generators.clone(), basis }
    }
}

impl Ideal {
    /// Zero generators are dropped and duplicates (up to sign) merged.
    pub fn new(ctx: &VarContext, generators: impl IntoIterator<Item = MultiPoly>) -> Result<Self> {
        Self::with_order(ctx, generators, MonomialOrder::default())
    }

    pub fn with_order(ctx: &VarContext, generators: impl IntoIterator<Item = MultiPoly>, order: MonomialOrder) -> Result<Self> {
        let mut gens: Vec<MultiPoly> = Vec::new();
        for g in generators {
            if g.context() != ctx {
                return Err(Error::ContextMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let g = g.with_order(order).normalize_sign();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Self { ctx: ctx.clone(), order, generators: gens, basis: OnceLock::new() })
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// Strong Gröbner basis, computed on first use.
    pub fn basis(&self) -> Result<&[MultiPoly]> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = strong_groebner(&self.generators, self.order)?;
        Ok(self.basis.get_or_init(|| b))
    }

    pub fn contains(&self, p: &MultiPoly) -> Result<bool> {
        if p.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        if p.is_zero() {
            return Ok(true);
        }
        Ok(normal_form(p, self.basis()?, self.order).is_zero())
    }

    /// Whether the ideal is the whole ring. Cheap sufficient tests run
    /// first; the Gröbner basis decides the rest.
    pub fn is_trivial(&self) -> Result<bool> {
        if let Some(b) = self.basis.get() {
            return Ok(basis_is_unit(b));
        }
        let mut g = BigInt::zero();
        for p in &self.generators {
            if let Some(c) = p.constant_value() {
                if c.abs().is_one() {
                    return Ok(true);
                }
                g = g.gcd(&c);
            }
        }
        if g.is_one() {
            return Ok(true);
        }
        if self.screen_subsets()? {
            return Ok(true);
        }
        Ok(basis_is_unit(self.basis()?))
    }

    /// Triviality of sub-ideals generated by the linear generators, or by
    /// those involving a single variable, implies triviality of the whole.
    fn screen_subsets(&self) -> Result<bool> {
        let constants: Vec<MultiPoly> = self.generators.iter().filter(|p| p.is_constant()).cloned().collect();
        let mut subsets: Vec<Vec<MultiPoly>> = Vec::new();
        let linear: Vec<MultiPoly> = self.generators.iter().filter(|p| p.total_degree() <= 1).cloned().collect();
        subsets.push(linear);
        for v in 0..self.ctx.len() {
            let mut s = constants.clone();
            s.extend(self.generators.iter().filter(|p| p.variables() == [v]).cloned());
            subsets.push(s);
        }
        for s in subsets {
            if s.len() <= constants.len() || s.len() == self.generators.len() {
                continue;
            }
            if basis_is_unit(&strong_groebner(&s, self.order)?) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `a ⊆ self`, by reducing the generators of `a`.
    pub fn contains_ideal(&self, a: &Ideal) -> Result<bool> {
        if a.ctx != self.ctx {
            return Err(Error::ContextMismatch);
        }
        for g in &a.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Non-negative generator of the integer ideal obtained by substituting
    /// `point`: the gcd of the generator values.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        let mut g = BigInt::zero();
        for p in &self.generators {
            g = g.gcd(&p.evaluate(point)?);
        }
        Ok(g)
    }

    /// The image under `x_i -> t` for every variable.
    pub fn collapse_to_t(&self) -> Ideal {
        let t = VarContext::univariate();
        Ideal::with_order(&t, self.generators.iter().map(MultiPoly::collapse_to_t), self.order).expect("collapsed generators share context")
    }
}

fn basis_is_unit(basis: &[MultiPoly]) -> bool {
    basis.iter().any(|g| g.constant_value().is_some_and(|c| c.abs().is_one()))
}

/// Mutual containment.
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch);
    }
    Ok(b.contains_ideal(a)? && a.contains_ideal(b)?)
}

/// `I_i(g)`: generated by the `i x i` minors of `diag(x) + D(g)`.
pub fn distance_ideal(g: &Digraph, i: usize) -> Result<Ideal> {
    let m = dx_matrix(g)?;
    Ideal::new(m.context(), minors(&m, i)?)
}

/// `U_i(g)`: generated by the `i x i` minors of `t I + D(g)`.
pub fn univariate_distance_ideal(g: &Digraph, i: usize) -> Result<Ideal> {
    let m = dt_matrix(g)?;
    Ideal::new(m.context(), minors(&m, i)?)
}

/// Whether `I_i(g)` is the unit ideal. Minors whose row and column sets
/// are disjoint avoid the diagonal, so they are integers; a unit gcd among
/// them settles the question without symbolic work.
pub fn is_distance_ideal_trivial(g: &Digraph, i: usize) -> Result<bool> {
    let n = g.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let d = g.distance_matrix(DistanceMatrixKind::D)?;
    let mut acc = BigInt::zero();
    let mut found = false;
    for_each_subset(n, i, |rows| {
        let rest: Vec<usize> = (0..n).filter(|v| !rows.contains(v)).collect();
        for_each_subset(rest.len(), i, |pick| {
            let cols: Vec<usize> = pick.iter().map(|&k| rest[k]).collect();
            acc = acc.gcd(&determinant(&d.submatrix(rows, &cols)).expect("square"));
            found = acc.is_one();
            !found
        });
        !found
    });
    if found {
        return Ok(true);
    }
    distance_ideal(g, i)?.is_trivial()
}

/// `evaluate_ideal(i, point)` as a free function.
pub fn evaluate_ideal(i: &Ideal, point: &[BigInt]) -> Result<BigInt> {
    i.evaluate(point)
}

/// Which distance ideals are trivial, and how many.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityProfile {
    /// Entry `i - 1` tells whether `I_i` is the unit ideal.
    pub trivial: Vec<bool>,
    pub phi: usize,
}

/// Triviality of `I_1(g), ..., I_n(g)`. The ideals form a descending
/// chain, so the scan stops at the first non-trivial one.
pub fn phi(g: &Digraph) -> Result<TrivialityProfile> {
    let n = g.n();
    let mut trivial = vec![false; n];
    let mut count = 0;
    for i in 1..=n {
        if !is_distance_ideal_trivial(g, i)? {
            break;
        }
        trivial[i - 1] = true;
        count = i;
    }
    Ok(TrivialityProfile { trivial, phi: count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{circuit, complete, lambda, LambdaParams};
    use crate::linalg::gcd_of_minors;

    fn ideal_of(texts: &[&str], ctx: &VarContext) -> Ideal {
        Ideal::new(ctx, texts.iter().map(|t| MultiPoly::parse(t, ctx).unwrap())).unwrap()
    }

    fn four_cycle_with_chord() -> Digraph {
        Digraph::from_arc_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn second_ideals() {
        let c3 = distance_ideal(&circuit(3).unwrap(), 2).unwrap();
        let ctx = c3.context().clone();
        assert!(ideals_equal(&c3, &ideal_of(&["x0 + 3", "x1 + 3", "x2 + 3", "7"], &ctx)).unwrap());
        let k3 = distance_ideal(&complete(3).unwrap(), 2).unwrap();
        assert!(ideals_equal(&k3, &ideal_of(&["x0 - 1", "x1 - 1", "x2 - 1"], &ctx)).unwrap());
        let f = distance_ideal(&four_cycle_with_chord(), 2).unwrap();
        let ctx4 = f.context().clone();
        assert!(ideals_equal(&f, &ideal_of(&["x0 + 2", "x1 + 1", "x2 + 2", "x3 + 1", "3"], &ctx4)).unwrap());
        assert!(!f.is_trivial().unwrap());
    }

    #[test]
    fn univariate_ideals() {
        let t = VarContext::univariate();
        let c3 = univariate_distance_ideal(&circuit(3).unwrap(), 2).unwrap();
        assert!(ideals_equal(&c3, &ideal_of(&["t + 3", "7"], &t)).unwrap());
        let k3 = univariate_distance_ideal(&complete(3).unwrap(), 2).unwrap();
        assert!(ideals_equal(&k3, &ideal_of(&["t - 1"], &t)).unwrap());
        let k3d = univariate_distance_ideal(&complete(3).unwrap(), 3).unwrap();
        assert!(ideals_equal(&k3d, &ideal_of(&["t^3 - 3*t + 2"], &t)).unwrap());
    }

    #[test]
    fn membership_examples() {
        let c3 = distance_ideal(&circuit(3).unwrap(), 2).unwrap();
        let ctx = c3.context().clone();
        assert!(c3.contains(&MultiPoly::constant(&ctx, 7)).unwrap());
        assert!(!c3.contains(&MultiPoly::one(&ctx)).unwrap());
        assert!(c3.contains(&MultiPoly::zero(&ctx)).unwrap());
    }

    #[test]
    fn ideal_equality_examples() {
        let ctx = VarContext::new(["x"]).unwrap();
        assert!(!ideals_equal(&ideal_of(&["2"], &ctx), &ideal_of(&["4"], &ctx)).unwrap());
        let c5 = distance_ideal(&circuit(5).unwrap(), 3).unwrap();
        let ctx5 = c5.context().clone();
        assert!(ideals_equal(&c5, &ideal_of(&["x0", "x1", "x2", "x3", "x4", "5"], &ctx5)).unwrap());
        let other = VarContext::indexed("y", 1);
        assert!(ideals_equal(&ideal_of(&["2"], &ctx), &ideal_of(&["2"], &other)).is_err());
    }

    #[test]
    fn triviality_examples() {
        assert!(distance_ideal(&circuit(4).unwrap(), 2).unwrap().is_trivial().unwrap());
        for n in 2..=5 {
            assert!(distance_ideal(&circuit(n).unwrap(), 1).unwrap().is_trivial().unwrap());
        }
        assert!(!distance_ideal(&circuit(1).unwrap(), 1).unwrap().is_trivial().unwrap());
        for g in [circuit(3).unwrap(), circuit(4).unwrap(), complete(4).unwrap(), four_cycle_with_chord()] {
            for i in 1..=g.n() {
                assert_eq!(is_distance_ideal_trivial(&g, i).unwrap(), distance_ideal(&g, i).unwrap().is_trivial().unwrap());
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&circuit(3).unwrap()).unwrap().phi, 1);
        let p5 = phi(&circuit(5).unwrap()).unwrap();
        assert_eq!(p5.phi, 2);
        assert_eq!(p5.trivial, vec![true, true, false, false, false]);
        assert_eq!(phi(&complete(4).unwrap()).unwrap().phi, 1);
        assert_eq!(phi(&circuit(1).unwrap()).unwrap().phi, 0);
    }

    #[test]
    fn evaluation_examples() {
        let zero3 = vec![BigInt::zero(); 3];
        let c3 = circuit(3).unwrap();
        assert_eq!(distance_ideal(&c3, 2).unwrap().evaluate(&zero3).unwrap(), BigInt::one());
        assert_eq!(distance_ideal(&c3, 3).unwrap().evaluate(&zero3).unwrap(), BigInt::from(9));
        let ones = vec![BigInt::one(); 3];
        assert!(evaluate_ideal(&distance_ideal(&complete(3).unwrap(), 2).unwrap(), &ones).unwrap().is_zero());
        assert!(distance_ideal(&c3, 2).unwrap().evaluate(&ones[..2]).is_err());
    }

    #[test]
    fn chain_and_collapse_on_small_families() {
        let graphs = [circuit(4).unwrap(), four_cycle_with_chord(), lambda(LambdaParams::new(1, 1, 0, 1)).unwrap(), complete(3).unwrap()];
        for g in &graphs {
            let n = g.n();
            let d = g.distance_matrix(DistanceMatrixKind::D).unwrap();
            for i in 1..=n {
                let ideal = distance_ideal(g, i).unwrap();
                assert!(is_closed(ideal.basis().unwrap()));
                assert_eq!(ideal.evaluate(&vec![BigInt::zero(); n]).unwrap(), gcd_of_minors(&d, i).unwrap());
                if i < n {
                    let next = distance_ideal(g, i + 1).unwrap();
                    assert!(ideal.contains_ideal(&next).unwrap());
                }
                let u = univariate_distance_ideal(g, i).unwrap();
                assert!(ideals_equal(&u, &ideal.collapse_to_t()).unwrap());
            }
        }
    }
}
