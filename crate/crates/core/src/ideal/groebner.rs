//! Strong Gröbner bases over the integers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};

/// Pair reductions allowed before [`strong_groebner`] gives up.
pub const MAX_PAIR_REDUCTIONS: usize = 1_000_000;

/// Index of a basis element whose leading monomial divides `m` and whose
/// leading coefficient can shrink `c`; exact divisors are preferred.
fn find_reducer(basis: &[&MultiPoly], m: &Monomial, c: &BigInt) -> Option<usize> {
    let mut fallback: Option<(usize, &BigInt)> = None;
    for (k, g) in basis.iter().enumerate() {
        let (lm, lc) = g.leading_term().expect("basis elements are nonzero");
        if !lm.divides(m) {
            continue;
        }
        if (c % lc).is_zero() {
            return Some(k);
        }
        // Euclidean step moves c into [0, lc); only useful when c lies outside
        if c.is_negative() || c >= lc {
            if fallback.is_none_or(|(_, b)| lc < b) {
                fallback = Some((k, lc));
            }
        }
    }
    fallback.map(|(k, _)| k)
}

fn reduce_with(p: &MultiPoly, basis: &[&MultiPoly]) -> MultiPoly {
    let ctx = p.context();
    let order = p.order();
    let mut rest = p.clone();
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        match find_reducer(basis, &m, &c) {
            Some(k) => {
                let g = basis[k];
                let (lm, lc) = g.leading_term().expect("nonzero");
                let q = c.div_floor(lc);
                rest = rest.add_scaled(&-q, &m.div(lm), g);
            }
            None => {
                let lead = MultiPoly::from_terms(ctx, order, [(m.clone(), c.clone())]);
                rest = &rest - &lead;
                done.push((m, c));
            }
        }
    }
    MultiPoly::from_terms(ctx, order, done)
}

/// Full reduction of `p` by `basis`: every term is divided by any leading
/// term whose monomial divides it, keeping the coefficient remainder in
/// `[0, lc)`. For a strong Gröbner basis the result is zero exactly when
/// `p` lies in the ideal.
pub fn normal_form(p: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let p = p.with_order(order);
    let basis: Vec<MultiPoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect();
    let refs: Vec<&MultiPoly> = basis.iter().collect();
    reduce_with(&p, &refs)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let m = mf.lcm(mg);
    let c = cf.lcm(cg);
    let a = f.mul_term(&(&c / cf), &m.div(mf));
    a.add_scaled(&-(&c / cg), &m.div(mg), g)
}

/// The Bézout combination of `f` and `g` whose leading coefficient is the
/// gcd of theirs; `None` when one leading coefficient divides the other.
fn g_polynomial(f: &MultiPoly, g: &MultiPoly) -> Option<MultiPoly> {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let e = cf.extended_gcd(cg);
    if e.gcd == cf.abs() || e.gcd == cg.abs() {
        return None;
    }
    let m = mf.lcm(mg);
    let a = f.mul_term(&e.x, &m.div(mf));
    Some(a.add_scaled(&e.y, &m.div(mg), g))
}

fn leading_strongly_divides(d: &MultiPoly, p: &MultiPoly) -> bool {
    let (md, cd) = d.leading_term().expect("nonzero");
    let (mp, cp) = p.leading_term().expect("nonzero");
    md.divides(mp) && (cp % cd).is_zero()
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Work {
    Input(usize),
    Pair(usize, usize),
}

struct Engine {
    order: MonomialOrder,
    slots: Vec<Option<MultiPoly>>,
    pending: Vec<Option<MultiPoly>>,
    queue: BinaryHeap<Reverse<(u32, u64, Work)>>,
    seq: u64,
    reductions: usize,
}

impl Engine {
    fn live(&self) -> Vec<&MultiPoly> {
        self.slots.iter().flatten().collect()
    }

    fn push(&mut self, degree: u32, work: Work) {
        self.seq += 1;
        self.queue.push(Reverse((degree, self.seq, work)));
    }

    fn enqueue_input(&mut self, p: MultiPoly) {
        let d = p.total_degree();
        self.pending.push(Some(p));
        self.push(d, Work::Input(self.pending.len() - 1));
    }

    fn insert(&mut self, h: MultiPoly) {
        let h = h.normalize_sign();
        // elements whose leading term h now strongly divides go back to the input queue
        for k in 0..self.slots.len() {
            if self.slots[k].as_ref().is_some_and(|g| leading_strongly_divides(&h, g)) {
                let g = self.slots[k].take().expect("checked");
                self.enqueue_input(g);
            }
        }
        let idx = self.slots.len();
        let hm = h.leading_monomial().expect("nonzero").clone();
        self.slots.push(Some(h));
        for k in 0..idx {
            if let Some(g) = &self.slots[k] {
                let d = g.leading_monomial().expect("nonzero").lcm(&hm).degree();
                self.push(d, Work::Pair(k, idx));
            }
        }
    }

    fn reduce_and_insert(&mut self, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        let r = reduce_with(&p, &self.live());
        if !r.is_zero() {
            self.insert(r);
        }
    }

    fn count(&mut self, gens: &[MultiPoly]) -> Result<()> {
        self.reductions += 1;
        if self.reductions > MAX_PAIR_REDUCTIONS {
            let shown: Vec<String> = gens.iter().take(4).map(ToString::to_string).collect();
            let more = if gens.len() > 4 { format!(", ... ({} generators)", gens.len()) } else { String::new() };
            return Err(Error::IterationCap { limit: MAX_PAIR_REDUCTIONS, input: format!("{}{more}", shown.join(", ")) });
        }
        Ok(())
    }

    fn run(&mut self, gens: &[MultiPoly]) -> Result<()> {
        while let Some(Reverse((_, _, work))) = self.queue.pop() {
            match work {
                Work::Input(k) => {
                    if let Some(p) = self.pending[k].take() {
                        self.reduce_and_insert(p);
                    }
                }
                Work::Pair(i, j) => {
                    let (Some(f), Some(g)) = (&self.slots[i], &self.slots[j]) else { continue };
                    let (mf, cf) = f.leading_term().expect("nonzero");
                    let (mg, cg) = g.leading_term().expect("nonzero");
                    let product_criterion = mf.is_coprime(mg) && cf.gcd(cg).is_one();
                    let gp = g_polynomial(f, g);
                    let sp = (!product_criterion).then(|| s_polynomial(f, g));
                    if let Some(gp) = gp {
                        self.count(gens)?;
                        self.reduce_and_insert(gp);
                    }
                    if let Some(sp) = sp {
                        self.count(gens)?;
                        self.reduce_and_insert(sp);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Drops elements whose leading term another element strongly divides,
/// then reduces every tail against the rest.
fn interreduce(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    basis.sort_by(|a, b| {
        let (ma, ca) = a.leading_term().expect("nonzero");
        let (mb, cb) = b.leading_term().expect("nonzero");
        a.order().cmp(ma, mb).then_with(|| ca.cmp(cb))
    });
    let mut kept: Vec<MultiPoly> = Vec::new();
    for g in basis {
        if !kept.iter().any(|k| leading_strongly_divides(k, &g)) {
            kept.retain(|k| !leading_strongly_divides(&g, k));
            kept.push(g);
        }
    }
    for i in 0..kept.len() {
        let (lm, lc) = kept[i].leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let ctx = kept[i].context().clone();
        let order = kept[i].order();
        let tail = MultiPoly::from_terms(&ctx, order, kept[i].terms()[1..].iter().cloned());
        let others: Vec<&MultiPoly> = kept.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g).collect();
        let tail = reduce_with(&tail, &others);
        kept[i] = &MultiPoly::from_terms(&ctx, order, [(lm, lc)]) + &tail;
    }
    kept.sort_by(|a, b| a.order().cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    kept
}

/// Strong Gröbner basis of the ideal generated by `gens` under `order`,
/// with positive leading coefficients, sorted by decreasing leading monomial.
pub fn strong_groebner(gens: &[MultiPoly], order: MonomialOrder) -> Result<Vec<MultiPoly>> {
    if let Some(first) = gens.first() {
        if gens.iter().any(|g| g.context() != first.context()) {
            return Err(Error::ContextMismatch);
        }
    }
    let mut engine = Engine { order, slots: Vec::new(), pending: Vec::new(), queue: BinaryHeap::new(), seq: 0, reductions: 0 };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        engine.enqueue_input(g.with_order(order));
    }
    engine.run(gens)?;
    let basis: Vec<MultiPoly> = engine.slots.into_iter().flatten().collect();
    debug_assert!(basis.iter().all(|g| g.order() == engine.order));
    if let Some(unit) = basis.iter().find(|g| g.constant_value().is_some_and(|c| c.is_one())) {
        return Ok(vec![unit.clone()]);
    }
    Ok(interreduce(basis))
}

/// Checks that every S-polynomial and G-polynomial of basis pairs reduces
/// to zero, with no criteria skipped.
pub fn is_closed(basis: &[MultiPoly]) -> bool {
    let refs: Vec<&MultiPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..refs.len() {
        for j in i + 1..refs.len() {
            if !reduce_with(&s_polynomial(refs[i], refs[j]), &refs).is_zero() {
                return false;
            }
            if let Some(gp) = g_polynomial(refs[i], refs[j]) {
                if !reduce_with(&gp, &refs).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
