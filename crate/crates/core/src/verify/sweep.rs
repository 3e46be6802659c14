use rayon::prelude::*;
use serde::Serialize;

use crate::digraph::{labeled_mask_count, Digraph};
use crate::error::Result;

/// Result of one property on one digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypothesis not met.
    Skip,
    Holds,
    Violated(String),
}

/// Aggregate of one property over an enumeration. First failures are the
/// ones with the smallest arc mask, so the tally does not depend on the
/// evaluation order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub digraphs: u64,
    pub applicable: u64,
    pub violations: u64,
    pub errors: u64,
    pub first_violation: Option<(u64, String)>,
    pub first_error: Option<(u64, String)>,
}

fn keep_min(a: &mut Option<(u64, String)>, b: Option<(u64, String)>) {
    if let Some(b) = b {
        if a.as_ref().is_none_or(|x| b.0 < x.0) {
            *a = Some(b);
        }
    }
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.digraphs += other.digraphs;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.errors += other.errors;
        keep_min(&mut self.first_violation, other.first_violation);
        keep_min(&mut self.first_error, other.first_error);
        self
    }

    fn add(&mut self, mask: u64, outcome: std::result::Result<&Outcome, &str>) {
        self.digraphs += 1;
        match outcome {
            Ok(Outcome::Skip) => {}
            Ok(Outcome::Holds) => self.applicable += 1,
            Ok(Outcome::Violated(why)) => {
                self.applicable += 1;
                self.violations += 1;
                keep_min(&mut self.first_violation, Some((mask, why.clone())));
            }
            Err(e) => {
                self.errors += 1;
                keep_min(&mut self.first_error, Some((mask, e.to_string())));
            }
        }
    }

    /// `Ok(Ok(..))` when nothing failed, `Ok(Err(..))` on a violation, `Err`
    /// text when an engine error occurred.
    pub fn verdict(&self) -> std::result::Result<std::result::Result<String, String>, String> {
        if let Some((mask, e)) = &self.first_error {
            return Err(format!("{} errors, first at arc mask {mask}: {e}", self.errors));
        }
        let head = format!("{} digraphs, {} applicable", self.digraphs, self.applicable);
        match &self.first_violation {
            Some((mask, why)) => Ok(Err(format!("{head}, {} violations, first at arc mask {mask}: {why}", self.violations))),
            None => Ok(Ok(format!("{head}, 0 violations"))),
        }
    }
}

/// Evaluates `props` properties on every strong labelled digraph of order
/// `n`. `check` returns one outcome per property.
pub fn sweep_labeled<F>(n: usize, props: usize, parallel: bool, check: F) -> Result<Vec<Tally>>
where
    F: Fn(&Digraph) -> Result<Vec<Outcome>> + Sync,
{
    let masks: Vec<u64> = (0..labeled_mask_count(n)?).collect();
    Ok(sweep_masks(n, &masks, props, parallel, check))
}

/// As [`sweep_labeled`], over the given arc masks; non-strong ones are skipped.
pub fn sweep_masks<F>(n: usize, masks: &[u64], props: usize, parallel: bool, check: F) -> Vec<Tally>
where
    F: Fn(&Digraph) -> Result<Vec<Outcome>> + Sync,
{
    let visit = |mut acc: Vec<Tally>, &mask: &u64| {
        let Ok(g) = Digraph::from_mask(n, mask) else { return acc };
        if !g.is_strong() {
            return acc;
        }
        match check(&g) {
            Ok(outs) => {
                for (t, o) in acc.iter_mut().zip(&outs) {
                    t.add(mask, Ok(o));
                }
            }
            Err(e) => {
                let e = e.to_string();
                for t in acc.iter_mut() {
                    t.add(mask, Err(&e));
                }
            }
        }
        acc
    };
    let empty = || vec![Tally::default(); props];
    let merge = |a: Vec<Tally>, b: Vec<Tally>| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect::<Vec<_>>();
    if parallel {
        masks.par_iter().fold(empty, visit).reduce(empty, merge)
    } else {
        masks.iter().fold(empty(), visit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_strong_digraphs() {
        // labelled strong digraphs: 1, 1, 18, 1606
        for (n, count) in [(1, 1), (2, 1), (3, 18), (4, 1606)] {
            let t = sweep_labeled(n, 1, false, |_| Ok(vec![Outcome::Holds])).unwrap();
            assert_eq!(t[0].digraphs, count);
        }
    }

    #[test]
    fn first_violation_is_order_independent() {
        let check = |g: &Digraph| Ok(vec![if g.arc_count() == 7 { Outcome::Violated(g.arc_count().to_string()) } else { Outcome::Skip }]);
        let a = sweep_labeled(4, 1, false, check).unwrap();
        let b = sweep_labeled(4, 1, true, check).unwrap();
        assert_eq!(a, b);
        assert!(a[0].violations > 0);
        assert!(a[0].verdict().unwrap().is_err());
    }
}
