use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigMatrix;
use crate::error::{Error, Result};

/// Upper bound on `C(rows, i) * C(cols, i)` for exhaustive minor enumeration.
pub const MAX_MINOR_SUBSETS: u128 = 10_000_000;

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &BigMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1))
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order; stops
/// early when `f` returns `false`.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `Δ_i(m)`: the non-negative gcd of all `i x i` minors, found by
/// enumerating every minor.
pub fn gcd_of_minors(m: &BigMatrix, i: usize) -> Result<BigInt> {
    let max = m.rows().min(m.cols());
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    let count = binomial(m.rows(), i) * binomial(m.cols(), i);
    if count > MAX_MINOR_SUBSETS {
        return Err(Error::CapExceeded(format!("{count} minors of order {i}")));
    }
    let mut row_sets = Vec::new();
    for_each_subset(m.rows(), i, |r| {
        row_sets.push(r.to_vec());
        true
    });
    let mut g = BigInt::zero();
    'outer: for rows in &row_sets {
        let mut done = false;
        for_each_subset(m.cols(), i, |cols| {
            let minor = determinant(&m.submatrix(rows, cols)).expect("square submatrix");
            g = g.gcd(&minor);
            done = g.is_one();
            !done
        });
        if done {
            break 'outer;
        }
    }
    Ok(g.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{circuit, DistanceMatrixKind};

    fn cofactor(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&BigMatrix::identity(5)).unwrap(), BigInt::one());
        let c3 = circuit(3).unwrap().distance_matrix(DistanceMatrixKind::D).unwrap();
        // cofactor expansion of [[0,1,2],[2,0,1],[1,2,0]]
        assert_eq!(cofactor(&[vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]), 9);
        assert_eq!(determinant(&c3).unwrap(), BigInt::from(9));
        let c4 = circuit(4).unwrap().distance_matrix(DistanceMatrixKind::D).unwrap();
        let rows: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| ((j + 4 - i) % 4) as i64).collect()).collect();
        let expected = cofactor(&rows);
        assert_eq!(expected.abs(), 96);
        assert_eq!(determinant(&c4).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn determinant_matches_cofactor_on_fixed_inputs() {
        let rows = vec![vec![2, -3, 0, 5], vec![0, 0, 1, -1], vec![4, 4, -2, 7], vec![1, 0, 0, 3]];
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        assert_eq!(determinant(&BigMatrix::from_i64(4, 4, &flat)).unwrap(), BigInt::from(cofactor(&rows)));
    }

    #[test]
    fn determinant_rejects_rectangular() {
        assert!(determinant(&BigMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn subset_enumeration() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(5, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_subset(3, 3, |s| {
            assert_eq!(s, &[0, 1, 2]);
            true
        });
    }

    #[test]
    fn gcd_of_minors_examples() {
        let c3 = circuit(3).unwrap().distance_matrix(DistanceMatrixKind::D).unwrap();
        assert_eq!(gcd_of_minors(&c3, 2).unwrap(), BigInt::one());
        assert_eq!(gcd_of_minors(&BigMatrix::identity(4), 3).unwrap(), BigInt::one());
        let c5 = circuit(5).unwrap().distance_matrix(DistanceMatrixKind::D).unwrap();
        assert_eq!(gcd_of_minors(&c5, 4).unwrap(), BigInt::from(25));
        assert_eq!(gcd_of_minors(&BigMatrix::zeros(3, 3), 2).unwrap(), BigInt::zero());
        assert!(gcd_of_minors(&c3, 4).is_err());
        assert!(gcd_of_minors(&c3, 0).is_err());
    }
}
