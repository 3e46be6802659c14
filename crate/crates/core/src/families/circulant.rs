use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::digraph::circuit;
use crate::error::{Error, Result};
use crate::poly::{dt_matrix, sym_det_uncapped, MultiPoly};

pub const MAX_CIRCULANT_ORDER: usize = 16;

/// `det(tI + D(C_n))` computed symbolically, against the eigenvalue product
/// `prod_j (t + sum_m m w^{mj})` with `w = exp(2 pi i / n)`.
#[derive(Clone, Debug, Serialize)]
pub struct CirculantReport {
    pub n: usize,
    /// Coefficients of `t^0, t^1, ..., t^n` from the exact determinant.
    pub exact: Vec<BigInt>,
    /// Real parts of the same coefficients from the eigenvalue product.
    pub numeric: Vec<f64>,
    /// Largest `|numeric - exact| / max(1, |exact|)`, imaginary parts included.
    pub max_relative_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn coefficients(p: &MultiPoly, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); n + 1];
    for (m, c) in p.terms() {
        out[m.degree() as usize] = c.clone();
    }
    out
}

fn eigen_product(n: usize) -> Vec<Complex64> {
    let w = |e: usize| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (e % n) as f64 / n as f64);
    // coefficients, lowest degree first
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for j in 0..n {
        let lambda: Complex64 = (1..n).map(|m| w(m * j) * m as f64).sum();
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c * lambda;
            next[i + 1] += c;
        }
        poly = next;
    }
    poly
}

pub fn circulant_det_check(n: usize, tolerance: f64) -> Result<CirculantReport> {
    if n == 0 || n > MAX_CIRCULANT_ORDER {
        return Err(Error::Range(format!("circulant check needs 1 <= n <= {MAX_CIRCULANT_ORDER}, got {n}")));
    }
    let det = sym_det_uncapped(&dt_matrix(&circuit(n)?)?)?;
    let exact = coefficients(&det, n);
    let product = eigen_product(n);
    let mut max_relative_error: f64 = 0.0;
    for (e, z) in exact.iter().zip(&product) {
        let e = e.to_f64().unwrap_or(f64::INFINITY);
        max_relative_error = max_relative_error.max((z - Complex64::new(e, 0.0)).norm() / e.abs().max(1.0));
    }
    Ok(CirculantReport {
        n,
        exact,
        numeric: product.iter().map(|z| z.re).collect(),
        max_relative_error,
        tolerance,
        pass: max_relative_error <= tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_circuits() {
        // det(tI + D(C3)) = t^3 - 6t + 9
        let r = circulant_det_check(3, 1e-9).unwrap();
        assert_eq!(r.exact, [9, -6, 0, 1].map(BigInt::from));
        assert!(r.pass);
        for n in 1..=12 {
            let r = circulant_det_check(n, 1e-6).unwrap();
            assert!(r.pass, "n = {n}: {}", r.max_relative_error);
            assert_eq!(r.exact[n], BigInt::from(1));
        }
        assert!(circulant_det_check(0, 1e-6).is_err());
        assert!(circulant_det_check(17, 1e-6).is_err());
    }
}
