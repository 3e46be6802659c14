//! Closed forms for the solved families: distance ideals of complete
//! digraphs, stars and two `Λ` subfamilies, second ideals of every `Λ`,
//! the third ideal of circuits, invariant factors, and the conjectured
//! univariate ideals of circuits.

mod circulant;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::digraph::{circuit, complete, complete_bipartite, lambda, Digraph, LambdaParams};
use crate::error::{Error, Result};
use crate::ideal::{distance_ideal, ideals_equal, univariate_distance_ideal, Ideal};
use crate::linalg::for_each_subset;
use crate::poly::{MultiPoly, VarContext};

pub use circulant::{circulant_det_check, CirculantReport, MAX_CIRCULANT_ORDER};
pub use snf::{snf_circuit, snf_lambda_a10d, snf_lambda_ab01};

/// Which closed form a [`ClosedFormIdeal`] comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    Complete { n: usize },
    Star { m: usize },
    LambdaAb01 { a: usize, b: usize },
    LambdaA10d { a: usize, d: usize },
    LambdaSecond(LambdaParams),
    CircuitThird { n: usize },
    CircuitUnivariate { n: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { n } => write!(f, "K_{n}"),
            Family::Star { m } => write!(f, "K_{{{m},1}}"),
            Family::LambdaAb01 { a, b } => write!(f, "{}", LambdaParams::new(*a, *b, 0, 1)),
            Family::LambdaA10d { a, d } => write!(f, "{}", LambdaParams::new(*a, 1, 0, *d)),
            Family::LambdaSecond(p) => write!(f, "{p}"),
            Family::CircuitThird { n } | Family::CircuitUnivariate { n } => write!(f, "C_{n}"),
        }
    }
}

/// Generators of a family ideal in the family's own variables, with the
/// digraph vertex each variable sits on.
#[derive(Clone, Debug)]
pub struct ClosedFormIdeal {
    pub family: Family,
    pub k: usize,
    pub ideal: Ideal,
    /// `vertex_of_var[i]` is the vertex carrying variable `i`; empty for
    /// univariate ideals.
    pub vertex_of_var: Vec<usize>,
}

impl ClosedFormIdeal {
    fn new(family: Family, k: usize, ctx: &VarContext, generators: Vec<MultiPoly>, vertex_of_var: Vec<usize>) -> Self {
        let ideal = Ideal::new(ctx, generators).expect("generators built in ctx");
        Self { family, k, ideal, vertex_of_var }
    }

    pub fn generators(&self) -> &[MultiPoly] {
        self.ideal.generators()
    }

    /// The digraph the closed form describes.
    pub fn digraph(&self) -> Result<Digraph> {
        match self.family {
            Family::Complete { n } => complete(n),
            Family::Star { m } => complete_bipartite(m, 1),
            Family::LambdaAb01 { a, b } => lambda(LambdaParams::new(a, b, 0, 1)),
            Family::LambdaA10d { a, d } => lambda(LambdaParams::new(a, 1, 0, d)),
            Family::LambdaSecond(p) => lambda(p),
            Family::CircuitThird { n } | Family::CircuitUnivariate { n } => circuit(n),
        }
    }

    /// The closed form moved to the vertex variables `x0..x{n-1}`.
    pub fn in_vertex_variables(&self) -> Result<Ideal> {
        if self.vertex_of_var.is_empty() {
            return Ok(self.ideal.clone());
        }
        let n = self.digraph()?.n();
        let target = VarContext::indexed("x", n);
        let gens = self.ideal.generators().iter().map(|g| g.rename(&target, &self.vertex_of_var)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, gens)
    }

    /// The same ideal computed from minors of the digraph's matrix.
    pub fn from_minors(&self) -> Result<Ideal> {
        let g = self.digraph()?;
        if self.vertex_of_var.is_empty() {
            univariate_distance_ideal(&g, self.k)
        } else {
            distance_ideal(&g, self.k)
        }
    }

    /// Ideal equality of the closed form with the minor-generated ideal.
    pub fn matches_minors(&self) -> Result<bool> {
        ideals_equal(&self.in_vertex_variables()?, &self.from_minors()?)
    }
}

fn range(msg: String) -> Error {
    Error::Range(msg)
}

fn names(prefix: &str, from: usize, count: usize) -> Vec<String> {
    (from..from + count).map(|i| format!("{prefix}{i}")).collect()
}

fn var(ctx: &VarContext, i: usize) -> MultiPoly {
    MultiPoly::var(ctx, i)
}

fn cst(ctx: &VarContext, c: i64) -> MultiPoly {
    MultiPoly::constant(ctx, c)
}

fn product<'a>(ctx: &VarContext, factors: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
    factors.into_iter().fold(MultiPoly::one(ctx), |acc, f| &acc * f)
}

/// Products of `f` over every `size`-subset.
fn subset_products(ctx: &VarContext, f: &[MultiPoly], size: usize) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for_each_subset(f.len(), size, |s| {
        out.push(product(ctx, s.iter().map(|&i| &f[i])));
        true
    });
    out
}

/// Minor ideal generators of the arrow matrix with head `h`, first row of
/// ones (or first column, by transposition), spoke column `g` and diagonal
/// `f`, for `k` below the full size: every `(k-1)`-subset product of `f`,
/// and `g_i` times every `(k-2)`-subset product of `f` avoiding `i`.
fn arrow_generators(ctx: &VarContext, f: &[MultiPoly], g: &[MultiPoly], k: usize) -> Vec<MultiPoly> {
    let mut out = subset_products(ctx, f, k - 1);
    if k >= 2 {
        for (i, gi) in g.iter().enumerate() {
            let rest: Vec<MultiPoly> = f.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            for p in subset_products(ctx, &rest, k - 2) {
                out.push(gi * &p);
            }
        }
    }
    out
}

/// `h * prod f - sum_i g_i * prod_{j != i} f_j`.
fn arrow_determinant(ctx: &VarContext, h: &MultiPoly, f: &[MultiPoly], g: &[MultiPoly]) -> MultiPoly {
    let mut det = h * &product(ctx, f);
    for i in 0..f.len() {
        det = &det - &(&g[i] * &product(ctx, f.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p)));
    }
    det
}

/// `I_k(K_n)` over `x0..x{n-1}`: products of `x_i - 1` over `(k-1)`-subsets
/// for `k < n`, and `det = prod (x_i - 1) + sum_j prod_{i != j} (x_i - 1)`.
pub fn ideal_complete(n: usize, k: usize) -> Result<ClosedFormIdeal> {
    if n == 0 || k == 0 || k > n {
        return Err(range(format!("K_{n} has no ideal of index {k}")));
    }
    let ctx = VarContext::indexed("x", n);
    let f: Vec<MultiPoly> = (0..n).map(|i| &var(&ctx, i) - &cst(&ctx, 1)).collect();
    let gens = if k < n {
        subset_products(&ctx, &f, k - 1)
    } else {
        let mut det = product(&ctx, &f);
        for p in subset_products(&ctx, &f, n - 1) {
            det = &det + &p;
        }
        vec![det]
    };
    Ok(ClosedFormIdeal::new(Family::Complete { n }, k, &ctx, gens, (0..n).collect()))
}

/// `I_k(K_{m,1})` over `x1..xm` (leaves) and `y` (center).
pub fn ideal_star(m: usize, k: usize) -> Result<ClosedFormIdeal> {
    if m == 0 || k == 0 || k > m + 1 {
        return Err(range(format!("K_{{{m},1}} has no ideal of index {k}")));
    }
    let mut vars = names("x", 1, m);
    vars.push("y".into());
    let ctx = VarContext::new(vars)?;
    let y = var(&ctx, m);
    let two_y_minus_one = &y.scale(&BigInt::from(2)) - &cst(&ctx, 1);
    let f: Vec<MultiPoly> = (0..m).map(|i| &var(&ctx, i) - &cst(&ctx, 2)).collect();
    let gens = if k <= m {
        let mut gens = subset_products(&ctx, &f, k - 1);
        if k >= 2 {
            gens.extend(subset_products(&ctx, &f, k - 2).iter().map(|p| &two_y_minus_one * p));
        }
        gens
    } else {
        let mut det = &y * &product(&ctx, &f);
        for p in subset_products(&ctx, &f, m - 1) {
            det = &det + &(&two_y_minus_one * &p);
        }
        vec![det]
    };
    Ok(ClosedFormIdeal::new(Family::Star { m }, k, &ctx, gens, (0..=m).collect()))
}

/// `I_k(Λ(a, b, 0, 1))` over `x` (the vertex of `T_d`), `y1..yb` (`T_b`)
/// and `z1..za` (`K_a`).
pub fn ideal_lambda_ab01(a: usize, b: usize, k: usize) -> Result<ClosedFormIdeal> {
    let n = a + b + 1;
    if b == 0 || k == 0 || k > n {
        return Err(range(format!("Λ({a},{b},0,1) has no ideal of index {k}")));
    }
    let mut vars = vec!["x".to_string()];
    vars.extend(names("y", 1, b));
    vars.extend(names("z", 1, a));
    let ctx = VarContext::new(vars)?;
    let x = var(&ctx, 0);
    let mut f = Vec::with_capacity(a + b);
    let mut g = Vec::with_capacity(a + b);
    for r in 0..b {
        f.push(&var(&ctx, 1 + r) - &cst(&ctx, 2));
        g.push(&cst(&ctx, 1) - &x.scale(&BigInt::from(2)));
    }
    for s in 0..a {
        f.push(&var(&ctx, 1 + b + s) - &cst(&ctx, 1));
        g.push(&cst(&ctx, 2) - &x);
    }
    let gens = if k < n { arrow_generators(&ctx, &f, &g, k) } else { vec![arrow_determinant(&ctx, &x, &f, &g)] };
    // digraph layout: K_a at 0..a, T_b at a..a+b, T_d at a+b
    let mut vertex_of_var = vec![a + b];
    vertex_of_var.extend(a..a + b);
    vertex_of_var.extend(0..a);
    Ok(ClosedFormIdeal::new(Family::LambdaAb01 { a, b }, k, &ctx, gens, vertex_of_var))
}

/// `I_k(Λ(a, 1, 0, d))` over `y` (the vertex of `T_b`), `z1..za` (`K_a`)
/// and `x1..xd` (`T_d`).
pub fn ideal_lambda_a10d(a: usize, d: usize, k: usize) -> Result<ClosedFormIdeal> {
    let n = a + d + 1;
    if d == 0 || k == 0 || k > n {
        return Err(range(format!("Λ({a},1,0,{d}) has no ideal of index {k}")));
    }
    let mut vars = vec!["y".to_string()];
    vars.extend(names("z", 1, a));
    vars.extend(names("x", 1, d));
    let ctx = VarContext::new(vars)?;
    let y = var(&ctx, 0);
    let mut f = Vec::with_capacity(a + d);
    let mut g = Vec::with_capacity(a + d);
    for s in 0..a {
        f.push(&var(&ctx, 1 + s) - &cst(&ctx, 1));
        g.push(&cst(&ctx, 2) - &y);
    }
    for r in 0..d {
        f.push(&var(&ctx, 1 + a + r) - &cst(&ctx, 2));
        g.push(&cst(&ctx, 1) - &y.scale(&BigInt::from(2)));
    }
    let gens = if k < n { arrow_generators(&ctx, &f, &g, k) } else { vec![arrow_determinant(&ctx, &y, &f, &g)] };
    // digraph layout: K_a at 0..a, T_b at a, T_d at a+1..a+1+d
    let mut vertex_of_var = vec![a];
    vertex_of_var.extend(0..a);
    vertex_of_var.extend(a + 1..a + 1 + d);
    Ok(ClosedFormIdeal::new(Family::LambdaA10d { a, d }, k, &ctx, gens, vertex_of_var))
}

/// `I_2(Λ(a, b, c, d))` by cases, over `x1..x{a+c}` (clique blocks `K_a`
/// then `K_c`) and `y1..y{b+d}` (independent blocks `T_b` then `T_d`).
pub fn second_ideal_lambda(p: LambdaParams) -> Result<ClosedFormIdeal> {
    let LambdaParams { a, b, c, d } = p;
    let n = p.order();
    if n < 2 || !lambda(p)?.is_strong() {
        return Err(range(format!("{p} is not a strong digraph on at least two vertices")));
    }
    let cliques = a + c;
    let indep = b + d;
    let mut vars = names("x", 1, cliques);
    vars.extend(names("y", 1, indep));
    let ctx = VarContext::new(vars)?;
    let x = |i: usize| var(&ctx, i - 1);
    let y = |j: usize| var(&ctx, cliques + j - 1);
    let one = cst(&ctx, 1);
    let two = cst(&ctx, 2);
    let x_minus_one = |i: usize| &x(i) - &one;
    let y_minus_two = |j: usize| &y(j) - &two;
    let two_y_minus_one = |j: usize| &y(j).scale(&BigInt::from(2)) - &one;
    let gens: Vec<MultiPoly> = match (a, b, c, d) {
        (2, 0, 0, 0) | (0, 0, 2, 0) => vec![&(&x(1) * &x(2)) - &one],
        (a, 0, 0, 0) if a >= 3 => (1..=a).map(x_minus_one).collect(),
        (0, 0, c, 0) if c >= 3 => (1..=c).map(x_minus_one).collect(),
        (0, 1, 0, 1) => vec![&(&y(1) * &y(2)) - &one],
        (0, b, 0, 1) if b >= 2 => (1..=b).map(y_minus_two).chain([two_y_minus_one(b + 1)]).collect(),
        (0, 1, 0, d) if d >= 2 => std::iter::once(two_y_minus_one(1)).chain((2..=d + 1).map(y_minus_two)).collect(),
        _ => std::iter::once(cst(&ctx, 3)).chain((1..=cliques).map(x_minus_one)).chain((1..=indep).map(y_minus_two)).collect(),
    };
    // digraph layout: K_a, T_b, K_c, T_d
    let mut vertex_of_var: Vec<usize> = (0..a).collect();
    vertex_of_var.extend(a + b..a + b + c);
    vertex_of_var.extend(a..a + b);
    vertex_of_var.extend(a + b + c..n);
    Ok(ClosedFormIdeal::new(Family::LambdaSecond(p), 2, &ctx, gens, vertex_of_var))
}

/// `I_3(C_n) = <x0, ..., x{n-1}, n>` for `n >= 5`.
pub fn third_ideal_circuit(n: usize) -> Result<ClosedFormIdeal> {
    if n < 5 {
        return Err(range(format!("the closed form for the third ideal of C_n needs n >= 5, got {n}")));
    }
    let ctx = VarContext::indexed("x", n);
    let gens = (0..n).map(|i| var(&ctx, i)).chain([cst(&ctx, n as i64)]).collect();
    Ok(ClosedFormIdeal::new(Family::CircuitThird { n }, 3, &ctx, gens, (0..n).collect()))
}

/// Conjectured `U_k(C_n) = <t^{k-2}, n t^{k-3}, ..., n^{k-2}>` for `4 <= k <= n - 2`.
pub fn conjectured_univariate_circuit(n: usize, k: usize) -> Result<ClosedFormIdeal> {
    if k < 4 || k + 2 > n {
        return Err(range(format!("conjectured U_{k}(C_{n}) needs 4 <= k <= n - 2")));
    }
    let ctx = VarContext::univariate();
    let t = var(&ctx, 0);
    let nn = BigInt::from(n);
    let gens = (0..=k - 2).map(|i| t.pow((k - 2 - i) as u32).scale(&num_traits::pow(nn.clone(), i))).collect();
    Ok(ClosedFormIdeal::new(Family::CircuitUnivariate { n }, k, &ctx, gens, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{dx_matrix, sym_det};

    fn printed(c: &ClosedFormIdeal) -> Vec<String> {
        c.generators().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn complete_examples() {
        assert_eq!(printed(&ideal_complete(3, 2).unwrap()), ["x0 - 1", "x1 - 1", "x2 - 1"]);
        assert_eq!(printed(&ideal_complete(3, 1).unwrap()), ["1"]);
        assert_eq!(printed(&ideal_complete(3, 3).unwrap()), ["x0*x1*x2 - x0 - x1 - x2 + 2"]);
        assert!(ideal_complete(3, 4).is_err());
        assert!(ideal_complete(3, 0).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(printed(&ideal_star(2, 2).unwrap()), ["x1 - 2", "x2 - 2", "2*y - 1"]);
        assert_eq!(printed(&ideal_star(2, 1).unwrap()), ["1"]);
        let det = ideal_star(2, 3).unwrap();
        let ctx = det.ideal.context().clone();
        let expected = MultiPoly::parse("y*(x1 - 2)*(x2 - 2) + (2*y - 1)*((x1 - 2) + (x2 - 2))", &ctx).unwrap();
        assert_eq!(det.generators(), &[expected]);
        assert!(ideal_star(2, 4).is_err());
    }

    #[test]
    fn lambda_ab01_examples() {
        let c = ideal_lambda_ab01(1, 1, 2).unwrap();
        assert!(c.matches_minors().unwrap());
        assert_eq!(c.ideal.context().names(), ["x", "y1", "z1"]);
        // the degenerate a = 0 member is the star
        for k in 1..=2 {
            let l = ideal_lambda_ab01(0, 1, k).unwrap().in_vertex_variables().unwrap();
            let s = ideal_star(1, k).unwrap().in_vertex_variables().unwrap();
            assert!(ideals_equal(&l, &s).unwrap());
        }
        let det = ideal_lambda_ab01(1, 2, 4).unwrap();
        let renamed = det.in_vertex_variables().unwrap();
        let direct = sym_det(&dx_matrix(&lambda(LambdaParams::new(1, 2, 0, 1)).unwrap()).unwrap()).unwrap();
        let g = &renamed.generators()[0];
        assert!(*g == direct || *g == -&direct);
        assert!(ideal_lambda_ab01(1, 0, 1).is_err());
    }

    #[test]
    fn lambda_a10d_examples() {
        assert!(ideal_lambda_a10d(1, 1, 2).unwrap().matches_minors().unwrap());
        let det = ideal_lambda_a10d(1, 1, 3).unwrap();
        let direct = sym_det(&dx_matrix(&lambda(LambdaParams::new(1, 1, 0, 1)).unwrap()).unwrap()).unwrap();
        let g = det.in_vertex_variables().unwrap().generators()[0].clone();
        assert!(g == direct || g == -&direct);
        assert_eq!(printed(&ideal_lambda_a10d(2, 2, 1).unwrap()), ["1"]);
    }

    #[test]
    fn second_ideal_examples() {
        assert_eq!(printed(&second_ideal_lambda(LambdaParams::new(0, 1, 0, 1)).unwrap()), ["y1*y2 - 1"]);
        assert_eq!(printed(&second_ideal_lambda(LambdaParams::new(3, 0, 0, 0)).unwrap()), ["x1 - 1", "x2 - 1", "x3 - 1"]);
        assert_eq!(
            printed(&second_ideal_lambda(LambdaParams::new(1, 1, 1, 1)).unwrap()),
            ["3", "x1 - 1", "x2 - 1", "y1 - 2", "y2 - 2"]
        );
        assert!(second_ideal_lambda(LambdaParams::new(1, 1, 0, 0)).is_err());
    }

    #[test]
    fn circuit_examples() {
        for n in 5..=7 {
            let c = third_ideal_circuit(n).unwrap();
            assert_eq!(c.generators().len(), n + 1);
            assert_eq!(c.generators()[n].to_string(), n.to_string());
        }
        assert!(third_ideal_circuit(4).is_err());
        assert_eq!(printed(&conjectured_univariate_circuit(6, 4).unwrap()), ["t^2", "6*t", "36"]);
        assert_eq!(printed(&conjectured_univariate_circuit(7, 4).unwrap()), ["t^2", "7*t", "49"]);
        assert_eq!(printed(&conjectured_univariate_circuit(8, 5).unwrap()), ["t^3", "8*t^2", "64*t", "512"]);
        assert!(conjectured_univariate_circuit(6, 5).is_err());
    }

    #[test]
    fn complete_and_star_match_minors() {
        for n in 1..=5 {
            for k in 1..=n {
                assert!(ideal_complete(n, k).unwrap().matches_minors().unwrap(), "K_{n}, k = {k}");
            }
        }
        for m in 1..=4 {
            for k in 1..=m + 1 {
                assert!(ideal_star(m, k).unwrap().matches_minors().unwrap(), "K_{{{m},1}}, k = {k}");
            }
        }
    }

    #[test]
    fn lambda_families_match_minors() {
        for a in 0..=3 {
            for b in 1..=4 - a {
                for k in 1..=a + b + 1 {
                    assert!(ideal_lambda_ab01(a, b, k).unwrap().matches_minors().unwrap(), "Λ({a},{b},0,1), k = {k}");
                    assert!(ideal_lambda_a10d(a, b, k).unwrap().matches_minors().unwrap(), "Λ({a},1,0,{b}), k = {k}");
                }
            }
        }
    }

    #[test]
    fn second_ideals_match_minors() {
        for n in 2..=5 {
            for p in LambdaParams::all_of_order(n) {
                if lambda(p).unwrap().is_strong() {
                    assert!(second_ideal_lambda(p).unwrap().matches_minors().unwrap(), "{p}");
                }
            }
        }
    }

    #[test]
    fn circuit_third_ideal_matches_minors() {
        for n in 5..=7 {
            assert!(third_ideal_circuit(n).unwrap().matches_minors().unwrap(), "C_{n}");
        }
    }
}
