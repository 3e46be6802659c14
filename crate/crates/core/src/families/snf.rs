use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::SnfResult;

fn diagonal(parts: &[(usize, u64)]) -> SnfResult {
    let diag = parts.iter().flat_map(|&(count, v)| std::iter::repeat_n(BigInt::from(v), count)).collect();
    SnfResult::from_diagonal(diag)
}

/// `diag(1, 1, n, ..., n, n^2 (n - 1) / 2)` with `n - 3` middle entries.
pub fn snf_circuit(n: usize) -> Result<SnfResult> {
    if n < 3 {
        return Err(Error::Range(format!("circuit SNF formula needs n >= 3, got {n}")));
    }
    let m = n as u64;
    Ok(diagonal(&[(2, 1), (n - 3, m), (1, m * m * (m - 1) / 2)]))
}

/// Invariant factors of `D(Λ(a, b, 0, 1))`: `I_{a+2} + 2 I_{b-2} + [8a + 2b]`
/// for `b >= 2`, and `I_{a+1} + [4a + 1]` for `b = 1`.
pub fn snf_lambda_ab01(a: usize, b: usize) -> Result<SnfResult> {
    let (a64, b64) = (a as u64, b as u64);
    match b {
        0 => Err(Error::Range(format!("Λ({a},0,0,1) is not strong"))),
        1 => Ok(diagonal(&[(a + 1, 1), (1, 4 * a64 + 1)])),
        _ => Ok(diagonal(&[(a + 2, 1), (b - 2, 2), (1, 8 * a64 + 2 * b64)])),
    }
}

/// Invariant factors of `D(Λ(a, 1, 0, d))`: `I_{a+2} + 2 I_{d-2} + [8a + 2d]`
/// for `d >= 2`; `d = 1` is the `b = 1` case above.
pub fn snf_lambda_a10d(a: usize, d: usize) -> Result<SnfResult> {
    snf_lambda_ab01(a, d).map_err(|_| Error::Range(format!("Λ({a},1,0,{d}) is not strong")))
}
