use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::BigMatrix;

/// Diagonal of the Smith normal form: `f_1 | f_2 | ... | f_r` followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    pub fn from_diagonal(diagonal: Vec<BigInt>) -> Self {
        let rank = diagonal.iter().take_while(|d| !d.is_zero()).count();
        Self { diagonal, rank }
    }

    /// The nonzero invariant factors.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diagonal[..self.rank]
    }

    /// Number of invariant factors equal to one.
    pub fn unit_count(&self) -> usize {
        self.diagonal.iter().filter(|d| **d == BigInt::from(1)).count()
    }

    /// `f_1 * ... * f_i`, which equals `Δ_i` of the input.
    pub fn prefix_product(&self, i: usize) -> BigInt {
        self.diagonal[..i].iter().product()
    }

    /// Nonnegative, nonzero prefix, each entry dividing the next, zero tail.
    pub fn is_well_formed(&self) -> bool {
        let f = self.invariant_factors();
        f.iter().all(|x| x.is_positive())
            && f.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
            && self.diagonal[self.rank..].iter().all(Zero::is_zero)
    }
}

impl std::fmt::Display for SnfResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.diagonal.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn min_nonzero(a: &BigMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if !v.is_zero() && best.as_ref().is_none_or(|(_, b)| v.abs() < *b) {
                best = Some(((i, j), v.abs()));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Adds `factor * row src` to `row dst`, from column `from` on.
fn row_axpy(a: &mut BigMatrix, dst: usize, src: usize, factor: &BigInt, from: usize) {
    for j in from..a.cols() {
        let delta = factor * a.get(src, j);
        *a.get_mut(dst, j) += delta;
    }
}

fn col_axpy(a: &mut BigMatrix, dst: usize, src: usize, factor: &BigInt, from: usize) {
    for i in from..a.rows() {
        let delta = factor * a.get(i, src);
        *a.get_mut(i, dst) += delta;
    }
}

/// Smith normal form by pivot-to-gcd elimination: bring a smallest nonzero
/// entry to the pivot, clear its row and column with Euclidean steps, and
/// fold in any row whose entries the pivot does not divide.
pub fn smith_normal_form(m: &BigMatrix) -> SnfResult {
    let mut a = m.clone();
    let size = a.rows().min(a.cols());
    let mut t = 0;
    while t < size {
        let Some((pi, pj)) = min_nonzero(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            if a.get(t, t).is_negative() {
                a.negate_row(t);
            }
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..a.rows() {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(&p);
                    row_axpy(&mut a, i, t, &-q, t);
                    clean &= a.get(i, t).is_zero();
                }
            }
            for j in t + 1..a.cols() {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(&p);
                    col_axpy(&mut a, j, t, &-q, t);
                    clean &= a.get(t, j).is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot survived; make it the pivot
                let mut best = (t, t);
                let mut best_val = p.clone();
                for i in t + 1..a.rows() {
                    let v = a.get(i, t).abs();
                    if !v.is_zero() && v < best_val {
                        best = (i, t);
                        best_val = v;
                    }
                }
                for j in t + 1..a.cols() {
                    let v = a.get(t, j).abs();
                    if !v.is_zero() && v < best_val {
                        best = (t, j);
                        best_val = v;
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                continue;
            }
            let offender = (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !(a.get(i, j) % &p).is_zero()));
            match offender {
                Some(i) => row_axpy(&mut a, t, i, &BigInt::from(1), t),
                None => break,
            }
        }
        t += 1;
    }
    let diagonal = (0..size).map(|i| a.get(i, i).abs()).collect();
    SnfResult::from_diagonal(diagonal)
}
