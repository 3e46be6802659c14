//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, and matrices of them.

mod format;
mod matrix;
mod monomial;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use matrix::{dt_matrix, dx_matrix, minors, sym_det, SymMatrix, MAX_DET_SIZE, MAX_MINORS};
pub(crate) use matrix::sym_det_uncapped;
pub use monomial::Monomial;

/// Ordered, distinct variable names shared by a family of polynomials.
#[derive(Clone, Debug)]
pub struct VarContext {
    names: Arc<[String]>,
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarContext {}

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || !a.chars().next().is_some_and(char::is_alphabetic) || !a.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("invalid variable name {a:?}")));
            }
            if names[..i].contains(a) {
                return Err(Error::Parse(format!("duplicate variable name {a:?}")));
            }
        }
        Ok(Self { names: names.into() })
    }

    /// `prefix0, prefix1, ..., prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Self::new((0..n).map(|i| format!("{prefix}{i}"))).expect("indexed names are valid and distinct")
    }

    /// The single variable `t`.
    pub fn univariate() -> Self {
        Self::new(["t"]).expect("valid name")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Total orders on monomials used for leading terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// A polynomial over the integers: terms sorted by decreasing monomial
/// under `order`, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: VarContext,
    order: MonomialOrder,
    terms: Vec<(Monomial, BigInt)>,
}

impl MultiPoly {
    pub fn zero(ctx: &VarContext) -> Self {
        Self { ctx: ctx.clone(), order: MonomialOrder::default(), terms: Vec::new() }
    }

    pub fn constant(ctx: &VarContext, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ctx.len()), c));
        }
        p
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, 1)
    }

    /// The variable with index `i`. Panics if out of range.
    pub fn var(ctx: &VarContext, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index out of range");
        let mut p = Self::zero(ctx);
        p.terms.push((Monomial::var(ctx.len(), i), BigInt::one()));
        p
    }

    /// Normalizes arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(ctx: &VarContext, order: MonomialOrder, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ctx.len(), "monomial arity does not match context");
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { ctx: ctx.clone(), order, terms }
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same polynomial with its terms re-sorted under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { ctx: self.ctx.clone(), order, terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0)).collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert!(self.ctx == other.ctx, "polynomials from different variable contexts");
    }

    fn align(&self, other: &Self) -> Self {
        self.check_compatible(other);
        other.with_order(self.order)
    }

    /// `self + sign * coef * mono * other`, by a single merge.
    pub(crate) fn add_scaled(&self, coef: &BigInt, mono: &Monomial, other: &Self) -> Self {
        debug_assert!(self.order == other.order);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, c)| (m.mul(mono), coef * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match self.order.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Self { ctx: self.ctx.clone(), order: self.order, terms: out }
    }

    /// `coef * mono * self`.
    pub fn mul_term(&self, coef: &BigInt, mono: &Monomial) -> Self {
        if coef.is_zero() {
            return Self { ctx: self.ctx.clone(), order: self.order, terms: Vec::new() };
        }
        let terms = self.terms.iter().map(|(m, c)| (m.mul(mono), c * coef)).collect();
        Self { ctx: self.ctx.clone(), order: self.order, terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(c, &Monomial::one(self.ctx.len()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ctx).with_order(self.order), |acc, _| &acc * self)
    }

    /// Exact value at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.ctx.len() {
            return Err(Error::ArityMismatch { expected: self.ctx.len(), got: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.exponents().iter().enumerate().fold(c.clone(), |acc, (i, &e)| acc * num_traits::pow(point[i].clone(), e as usize))
            })
            .sum())
    }

    /// Substitutes variable `i` by variable `mapping[i]` of `target`.
    pub fn rename(&self, target: &VarContext, mapping: &[usize]) -> Result<Self> {
        if mapping.len() != self.ctx.len() {
            return Err(Error::ArityMismatch { expected: self.ctx.len(), got: mapping.len() });
        }
        if let Some(&bad) = mapping.iter().find(|&&j| j >= target.len()) {
            return Err(Error::IndexOutOfRange { index: bad, max: target.len() });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[mapping[i]] += x;
            }
            (Monomial::from_exponents(&e), c.clone())
        });
        Ok(Self::from_terms(target, self.order, terms))
    }

    /// Maps every variable to `t`.
    pub fn collapse_to_t(&self) -> Self {
        let t = VarContext::univariate();
        self.rename(&t, &vec![0; self.ctx.len()]).expect("all indices map to t")
    }

    /// Makes the leading coefficient positive.
    pub fn normalize_sign(self) -> Self {
        if self.leading_coefficient().is_some_and(Signed::is_negative) {
            -self
        } else {
            self
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let rhs = self.align(rhs);
        self.add_scaled(&BigInt::one(), &Monomial::one(self.ctx.len()), &rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let rhs = self.align(rhs);
        self.add_scaled(&-BigInt::one(), &Monomial::one(self.ctx.len()), &rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(&self.ctx).with_order(self.order);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        MultiPoly { ctx: self.ctx.clone(), order: self.order, terms }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx3() -> VarContext {
        VarContext::indexed("x", 3)
    }

    #[test]
    fn context_validation() {
        assert!(VarContext::new(["x", "x"]).is_err());
        assert!(VarContext::new(["1x"]).is_err());
        assert_eq!(VarContext::indexed("y", 2).names(), &["y0".to_string(), "y1".to_string()]);
    }

    #[test]
    fn degrevlex_ordering() {
        let ctx = ctx3();
        let m = |e: &[u16]| Monomial::from_exponents(e);
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        let l = MonomialOrder::Lex;
        assert_eq!(l.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let _ = ctx;
    }

    #[test]
    fn arithmetic_basics() {
        let ctx = ctx3();
        let x0 = MultiPoly::var(&ctx, 0);
        let x1 = MultiPoly::var(&ctx, 1);
        let three = MultiPoly::constant(&ctx, 3);
        let p = &(&x0 + &three) * &(&x1 - &three);
        assert_eq!(p.to_string(), "x0*x1 - 3*x0 + 3*x1 - 9");
        assert!((&p - &p).is_zero());
        assert_eq!(p.evaluate(&[BigInt::from(1), BigInt::from(2), BigInt::from(0)]).unwrap(), BigInt::from(-4));
        assert!(p.evaluate(&[BigInt::from(1)]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let ctx = VarContext::indexed("x", 1);
        let p = &MultiPoly::var(&ctx, 0) + &MultiPoly::constant(&ctx, 3);
        assert!(p.evaluate(&[BigInt::from(-3)]).unwrap().is_zero());
    }

    #[test]
    fn collapse_examples() {
        let ctx = ctx3();
        let p = MultiPoly::parse("x0*x1*x2 - 2*x0 - 2*x1 - 2*x2 + 9", &ctx).unwrap();
        assert_eq!(p.collapse_to_t().to_string(), "t^3 - 6*t + 9");
        let q = MultiPoly::parse("x0 - 1", &ctx).unwrap();
        assert_eq!(q.collapse_to_t().to_string(), "t - 1");
    }

    fn arb_poly(ctx: VarContext) -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 3), -5i64..=5), 0..6).prop_map(move |ts| {
            MultiPoly::from_terms(&ctx, MonomialOrder::DegRevLex, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(ctx3()), q in arb_poly(ctx3()), r in arb_poly(ctx3())) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn evaluation_is_homomorphism(p in arb_poly(ctx3()), q in arb_poly(ctx3()), r in arb_poly(ctx3()), pt in proptest::collection::vec(-4i64..=4, 3)) {
            let pt: Vec<BigInt> = pt.into_iter().map(BigInt::from).collect();
            let lhs = (&(&p * &q) + &r).evaluate(&pt).unwrap();
            let rhs = p.evaluate(&pt).unwrap() * q.evaluate(&pt).unwrap() + r.evaluate(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn print_parse_round_trip(p in arb_poly(ctx3())) {
            prop_assert_eq!(MultiPoly::parse(&p.to_string(), &ctx3()).unwrap(), p);
        }

        #[test]
        fn lex_and_degrevlex_agree_as_values(p in arb_poly(ctx3())) {
            let q = p.with_order(MonomialOrder::Lex);
            prop_assert!((&q - &p).is_zero());
        }
    }
}
