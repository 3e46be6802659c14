use std::collections::HashMap;

use num_bigint::BigInt;

use super::{MultiPoly, VarContext};
use crate::digraph::{Digraph, DistanceMatrixKind};
use crate::error::{Error, Result};
use crate::linalg::{for_each_subset, BigMatrix};

/// Largest matrix accepted by [`sym_det`].
pub const MAX_DET_SIZE: usize = 12;

/// Upper bound on `C(rows, k) * C(cols, k)` for [`minors`].
pub const MAX_MINORS: u128 = 1_000_000;

/// Matrix of polynomials over one shared context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    rows: usize,
    cols: usize,
    ctx: VarContext,
    entries: Vec<MultiPoly>,
}

impl SymMatrix {
    pub fn from_fn(ctx: &VarContext, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        let entries: Vec<MultiPoly> = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        assert!(entries.iter().all(|e| e.context() == ctx), "entries must share the matrix context");
        Self { rows, cols, ctx: ctx.clone(), entries }
    }

    /// Integer matrix with constant entries.
    pub fn from_int_matrix(ctx: &VarContext, m: &BigMatrix) -> Self {
        Self::from_fn(ctx, m.rows(), m.cols(), |i, j| MultiPoly::constant(ctx, m.get(i, j).clone()))
    }

    /// `diag(vars) + m` where `vars[i]` is the index of the variable on row `i`.
    pub fn with_diagonal(ctx: &VarContext, m: &BigMatrix, vars: &[usize]) -> Self {
        assert!(m.is_square() && vars.len() == m.rows());
        Self::from_fn(ctx, m.rows(), m.cols(), |i, j| {
            let c = MultiPoly::constant(ctx, m.get(i, j).clone());
            if i == j {
                &c + &MultiPoly::var(ctx, vars[i])
            } else {
                c
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ctx, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Integer matrix at a point.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigMatrix> {
        if point.len() != self.ctx.len() {
            return Err(Error::ArityMismatch { expected: self.ctx.len(), got: point.len() });
        }
        Ok(BigMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).evaluate(point).expect("arity checked")))
    }
}

impl std::fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `diag(x0, ..., x{n-1}) + D(g)`.
pub fn dx_matrix(g: &Digraph) -> Result<SymMatrix> {
    let d = g.distance_matrix(DistanceMatrixKind::D)?;
    let ctx = VarContext::indexed("x", g.n());
    let vars: Vec<usize> = (0..g.n()).collect();
    Ok(SymMatrix::with_diagonal(&ctx, &d, &vars))
}

/// `t I + D(g)` over the single variable `t`.
pub fn dt_matrix(g: &Digraph) -> Result<SymMatrix> {
    let d = g.distance_matrix(DistanceMatrixKind::D)?;
    Ok(SymMatrix::with_diagonal(&VarContext::univariate(), &d, &vec![0; g.n()]))
}

/// Walks row subsets of size `k` in lexicographic order, keeping for each
/// prefix of chosen rows the minors on every column subset of matching size.
/// Calls `emit(rows, table)` where `table` maps column masks of size `k`.
fn minor_tables(m: &SymMatrix, k: usize, emit: &mut dyn FnMut(&[usize], &HashMap<u64, MultiPoly>)) {
    fn extend(m: &SymMatrix, row: usize, prev: &HashMap<u64, MultiPoly>) -> HashMap<u64, MultiPoly> {
        let mut next: HashMap<u64, MultiPoly> = HashMap::new();
        for (&mask, det) in prev {
            if det.is_zero() {
                continue;
            }
            // the new row goes last; column c sits at position pos(c) in mask | c
            for c in 0..m.cols {
                let bit = 1u64 << c;
                if mask & bit != 0 {
                    continue;
                }
                let entry = m.get(row, c);
                if entry.is_zero() {
                    continue;
                }
                let row_pos = mask.count_ones() as usize;
                let col_pos = (mask & (bit - 1)).count_ones() as usize;
                let term = det * entry;
                let slot = next.entry(mask | bit).or_insert_with(|| MultiPoly::zero(&m.ctx));
                *slot = if (row_pos + col_pos) % 2 == 0 { &*slot + &term } else { &*slot - &term };
            }
        }
        next
    }

    fn walk(m: &SymMatrix, k: usize, start: usize, rows: &mut Vec<usize>, table: &HashMap<u64, MultiPoly>, emit: &mut dyn FnMut(&[usize], &HashMap<u64, MultiPoly>)) {
        if rows.len() == k {
            emit(rows, table);
            return;
        }
        let remaining = k - rows.len();
        for r in start..=m.rows - remaining {
            let next = extend(m, r, table);
            rows.push(r);
            walk(m, k, r + 1, rows, &next, emit);
            rows.pop();
        }
    }

    let mut base = HashMap::new();
    base.insert(0u64, MultiPoly::one(&m.ctx));
    walk(m, k, 0, &mut Vec::with_capacity(k), &base, emit);
}

fn mask_of(cols: &[usize]) -> u64 {
    cols.iter().fold(0, |acc, &c| acc | 1 << c)
}

/// Determinant without the size cap; callers bound the work themselves.
pub(crate) fn sym_det_uncapped(m: &SymMatrix) -> Result<MultiPoly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    if m.rows > 64 {
        return Err(Error::CapExceeded(format!("determinant of size {}", m.rows)));
    }
    if m.rows == 0 {
        return Ok(MultiPoly::one(&m.ctx));
    }
    let full = mask_of(&(0..m.cols).collect::<Vec<_>>());
    let mut out = MultiPoly::zero(&m.ctx);
    minor_tables(m, m.rows, &mut |_, table| {
        if let Some(d) = table.get(&full) {
            out = d.clone();
        }
    });
    Ok(out)
}

/// Exact symbolic determinant by Laplace expansion memoized over column subsets.
pub fn sym_det(m: &SymMatrix) -> Result<MultiPoly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    if m.rows > MAX_DET_SIZE {
        return Err(Error::CapExceeded(format!("determinant of size {} exceeds {MAX_DET_SIZE}", m.rows)));
    }
    sym_det_uncapped(m)
}

/// All `k x k` minors, ordered by row subset then column subset.
pub fn minors(m: &SymMatrix, k: usize) -> Result<Vec<MultiPoly>> {
    let max = m.rows.min(m.cols);
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange { index: k, max });
    }
    if m.cols > 64 {
        return Err(Error::CapExceeded(format!("{} columns", m.cols)));
    }
    let count = crate::linalg::binomial(m.rows, k) * crate::linalg::binomial(m.cols, k);
    if count > MAX_MINORS {
        return Err(Error::CapExceeded(format!("{count} minors of order {k}")));
    }
    let mut col_masks = Vec::new();
    for_each_subset(m.cols, k, |c| {
        col_masks.push(mask_of(c));
        true
    });
    let mut out = Vec::with_capacity(count as usize);
    minor_tables(m, k, &mut |_, table| {
        for mask in &col_masks {
            out.push(table.get(mask).cloned().unwrap_or_else(|| MultiPoly::zero(&m.ctx)));
        }
    });
    Ok(out)
}
