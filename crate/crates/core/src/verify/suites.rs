use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::sweep::{sweep_labeled, sweep_masks, Outcome, Tally};
use super::{Record, Status, VerifyOptions};
use crate::digraph::{are_isomorphic, circuit, lambda, strong_class_representatives, Digraph, DistanceMatrixKind, LambdaParams};
use crate::error::Result;
use crate::families::{
    circulant_det_check, conjectured_univariate_circuit, ideal_complete, ideal_lambda_a10d, ideal_lambda_ab01, ideal_star,
    second_ideal_lambda, snf_circuit, snf_lambda_a10d, snf_lambda_ab01, third_ideal_circuit, ClosedFormIdeal, MAX_CIRCULANT_ORDER,
};
use crate::ideal::{distance_ideal, is_distance_ideal_trivial, univariate_distance_ideal};
use crate::linalg::{gcd_of_minors, smith_normal_form, SnfResult};
use crate::pattern::{classify, contains_pattern, is_gamma1_pattern_free, BuiltinPattern, Classification};

pub(super) struct Ctx {
    pub n_max: usize,
    pub opts: VerifyOptions,
}

impl Ctx {
    fn progress(&self, msg: &str) {
        if self.opts.progress {
            eprintln!("[verify] {msg}");
        }
    }
}

/// Strong isomorphism classes on `n` vertices for `n = 0..=5`.
const STRONG_CLASS_COUNTS: [usize; 6] = [0, 1, 1, 5, 83, 5048];

const RANDOM_SAMPLES: usize = 100;

fn tally_record(name: &str, params: String, t: &Tally) -> Record {
    match t.verdict() {
        Ok(v) => Record::from_check(name, params, Ok(v)),
        Err(e) => Record::new(name, params, Status::Error, e),
    }
}

fn run_tasks<T: Sync>(items: &[T], parallel: bool, f: impl Fn(&T) -> Record + Sync + Send) -> Vec<Record> {
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

fn holds(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Violated(why())
    }
}

/// Digraph with `n` vertices, each arc present with probability 1/2,
/// redrawn until strong.
pub fn random_strong_digraph(rng: &mut impl Rng, n: usize) -> Result<Digraph> {
    loop {
        let mut g = Digraph::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.5) {
                    g.add_arc(u, v)?;
                }
            }
        }
        if g.is_strong() {
            return Ok(g);
        }
    }
}

fn in_u2_regime(g: &Digraph) -> bool {
    let n = g.n();
    if n == 3 && are_isomorphic(g, &circuit(3).expect("C3")) {
        return true;
    }
    LambdaParams::all_of_order(n).into_iter().any(|p| {
        let LambdaParams { a, b, c, d } = p;
        let regime = (a != 0 && b == 0 && c == 0 && d == 0) || (c != 0 && a == 0 && b == 0 && d == 0) || (b >= 1 && d >= 1 && a == 0 && c == 0);
        regime && lambda(p).is_ok_and(|h| are_isomorphic(g, &h))
    })
}

/// Exactly one trivial distance ideal, without scanning past `I_2`.
fn phi_is_one(g: &Digraph) -> Result<bool> {
    Ok(is_distance_ideal_trivial(g, 1)? && !is_distance_ideal_trivial(g, 2)?)
}

fn equi_check(g: &Digraph) -> Result<Vec<Outcome>> {
    let phi1 = phi_is_one(g)?;
    let free = is_gamma1_pattern_free(g)?;
    let member = classify(g)?.class != Classification::NotInGamma1;
    let equi = holds(phi1 == free && free == member, || format!("Φ=1: {phi1}, pattern-free: {free}, C3 or Λ: {member}"));
    let u2_nontrivial = !univariate_distance_ideal(g, 2)?.is_trivial()?;
    let regime = in_u2_regime(g);
    let u2 = holds(u2_nontrivial == regime, || format!("U_2 non-trivial: {u2_nontrivial}, listed family: {regime}"));
    Ok(vec![equi, u2])
}

/// Three-way equivalence for `2 <= n <= n_max`, over all labelled digraphs
/// up to four vertices and over class representatives at five, plus the
/// `U_2` corollary and the class counts.
pub(super) fn theorem_equi(ctx: &Ctx) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    for n in 2..=ctx.n_max {
        ctx.progress(&format!("theorem-equi n={n}"));
        let reps = strong_class_representatives(n)?;
        let expected = STRONG_CLASS_COUNTS[n];
        records.push(Record::from_check(
            "class-count",
            format!("n={n}"),
            Ok(if reps.len() == expected { Ok(format!("{expected} classes")) } else { Err(format!("{} classes, expected {expected}", reps.len())) }),
        ));
        let (tallies, scope) = if n <= 4 {
            (sweep_labeled(n, 2, ctx.opts.parallel, equi_check)?, "labelled")
        } else {
            let masks: Vec<u64> = reps.iter().map(Digraph::arc_mask).collect();
            (sweep_masks(n, &masks, 2, ctx.opts.parallel, equi_check), "classes")
        };
        records.push(tally_record("theorem-equi", format!("n={n} {scope}"), &tallies[0]));
        records.push(tally_record("u2-corollary", format!("n={n} {scope}"), &tallies[1]));
    }
    Ok(records)
}

pub(super) fn theorem_equi_notes() -> Vec<String> {
    vec!["the single-vertex digraph is excluded: its only distance ideal <x0> is not trivial, so Φ = 0".into()]
}

fn evaluation_mismatch(g: &Digraph) -> Result<Option<String>> {
    let n = g.n();
    let d = g.distance_matrix(DistanceMatrixKind::D)?;
    let snf = smith_normal_form(&d);
    let zeros = vec![BigInt::zero(); n];
    for i in 1..=n {
        let from_ideal = distance_ideal(g, i)?.evaluate(&zeros)?;
        let oracle = gcd_of_minors(&d, i)?;
        let prefix = snf.prefix_product(i);
        if from_ideal != oracle || oracle != prefix {
            return Ok(Some(format!("i={i}: ideal at 0 gives {from_ideal}, minors give {oracle}, SNF gives {prefix}")));
        }
    }
    Ok(None)
}

fn second_factor(snf: &SnfResult) -> Option<&BigInt> {
    snf.diagonal.get(1)
}

/// Evaluation at the origin against the minor oracle and the SNF for
/// `n <= n_max` exhaustively and on seeded random digraphs of order 5 and 6;
/// the second-invariant-factor corollary for `2 <= n <= n_max + 1`.
pub(super) fn eval_consistency(ctx: &Ctx) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    for n in 1..=ctx.n_max {
        ctx.progress(&format!("eval-consistency n={n}"));
        let t = sweep_labeled(n, 1, ctx.opts.parallel, |g| {
            Ok(vec![match evaluation_mismatch(g)? {
                None => Outcome::Holds,
                Some(why) => Outcome::Violated(why),
            }])
        })?;
        records.push(tally_record("evaluation", format!("n={n} labelled"), &t[0]));
    }
    ctx.progress("eval-consistency random samples");
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed);
    let samples: Vec<Digraph> = (0..RANDOM_SAMPLES).map(|_| {
        let n = if rng.gen_bool(0.5) { 5 } else { 6 };
        random_strong_digraph(&mut rng, n)
    }).collect::<Result<_>>()?;
    records.extend(run_tasks(&samples, ctx.opts.parallel, |g| {
        let outcome = evaluation_mismatch(g).map(|m| match m {
            None => Ok(format!("{} arcs", g.arc_count())),
            Some(why) => Err(why),
        });
        Record::from_check("evaluation-random", format!("seed={} n={} mask={}", ctx.opts.seed, g.n(), g.arc_mask()), outcome)
    }));
    for n in 2..=(ctx.n_max + 1).min(5) {
        ctx.progress(&format!("second invariant factor n={n}"));
        let t = sweep_labeled(n, 1, ctx.opts.parallel, |g| {
            let snf = smith_normal_form(&g.distance_matrix(DistanceMatrixKind::D)?);
            let f2 = second_factor(&snf);
            Ok(vec![holds(f2.is_some_and(One::is_one), || format!("f_2 = {f2:?}"))])
        })?;
        records.push(tally_record("second-invariant-factor", format!("n={n} labelled"), &t[0]));
    }
    Ok(records)
}

fn snf_record(name: &str, params: String, g: Result<Digraph>, formula: Result<SnfResult>) -> Record {
    let outcome = (|| {
        let actual = smith_normal_form(&g?.distance_matrix(DistanceMatrixKind::D)?);
        let expected = formula?;
        let show = |s: &SnfResult| s.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        Ok(if actual == expected { Ok(show(&actual)) } else { Err(format!("elimination gives {}, formula gives {}", show(&actual), show(&expected))) })
    })();
    Record::from_check(name, params, outcome)
}

/// `SNF(D(C_n))` against the closed form for `3 <= n <= n_max`.
pub(super) fn circuit_snf(ctx: &Ctx) -> Vec<Record> {
    let ns: Vec<usize> = (3..=ctx.n_max).collect();
    run_tasks(&ns, ctx.opts.parallel, |&n| snf_record("circuit-snf", format!("n={n}"), circuit(n), snf_circuit(n)))
}

fn closed_form_record(c: Result<ClosedFormIdeal>, params: String) -> Record {
    let outcome = c.and_then(|c| {
        Ok(if c.matches_minors()? {
            Ok(format!("{} generators", c.generators().len()))
        } else {
            Err(format!("closed form {:?} differs from the minor ideal", c.generators().iter().map(ToString::to_string).collect::<Vec<_>>()))
        })
    });
    Record::from_check("closed-form-ideal", params, outcome)
}

#[derive(Clone, Copy)]
enum FamilyTask {
    Complete(usize, usize),
    Star(usize, usize),
    Ab01(usize, usize, usize),
    A10d(usize, usize, usize),
    Second(LambdaParams),
    Third(usize),
    SnfAb01(usize, usize),
    SnfA10d(usize, usize),
}

/// Invariant factors of `Λ(a,b,0,1)` and `Λ(a,1,0,d)` for `a <= 3`,
/// `1 <= b, d <= 4`, and every closed-form ideal on at most `n_max` vertices
/// (`I_3(C_n)` for `5 <= n <= n_max + 2`).
pub(super) fn lambda_ideals(ctx: &Ctx) -> Vec<Record> {
    let n_max = ctx.n_max;
    let mut tasks = Vec::new();
    for a in 0..=3 {
        for b in 1..=4 {
            tasks.push(FamilyTask::SnfAb01(a, b));
            tasks.push(FamilyTask::SnfA10d(a, b));
        }
    }
    for n in 1..=n_max {
        tasks.extend((1..=n).map(|k| FamilyTask::Complete(n, k)));
    }
    for m in 1..n_max {
        tasks.extend((1..=m + 1).map(|k| FamilyTask::Star(m, k)));
    }
    for a in 0..n_max {
        for b in 1..n_max - a {
            tasks.extend((1..=a + b + 1).map(|k| FamilyTask::Ab01(a, b, k)));
            tasks.extend((1..=a + b + 1).map(|k| FamilyTask::A10d(a, b, k)));
        }
    }
    for n in 2..=n_max {
        tasks.extend(LambdaParams::all_of_order(n).into_iter().filter(|&p| lambda(p).is_ok_and(|g| g.is_strong())).map(FamilyTask::Second));
    }
    tasks.extend((5..=n_max + 2).map(FamilyTask::Third));
    ctx.progress(&format!("lambda-ideals: {} checks", tasks.len()));
    run_tasks(&tasks, ctx.opts.parallel, |&t| match t {
        FamilyTask::Complete(n, k) => closed_form_record(ideal_complete(n, k), format!("K_{n} k={k}")),
        FamilyTask::Star(m, k) => closed_form_record(ideal_star(m, k), format!("K_{{{m},1}} k={k}")),
        FamilyTask::Ab01(a, b, k) => closed_form_record(ideal_lambda_ab01(a, b, k), format!("{} k={k}", LambdaParams::new(a, b, 0, 1))),
        FamilyTask::A10d(a, d, k) => closed_form_record(ideal_lambda_a10d(a, d, k), format!("{} k={k}", LambdaParams::new(a, 1, 0, d))),
        FamilyTask::Second(p) => closed_form_record(second_ideal_lambda(p), format!("{p} k=2")),
        FamilyTask::Third(n) => closed_form_record(third_ideal_circuit(n), format!("C_{n} k=3")),
        FamilyTask::SnfAb01(a, b) => {
            let p = LambdaParams::new(a, b, 0, 1);
            snf_record("lambda-snf", p.to_string(), lambda(p), snf_lambda_ab01(a, b))
        }
        FamilyTask::SnfA10d(a, d) => {
            let p = LambdaParams::new(a, 1, 0, d);
            snf_record("lambda-snf", p.to_string(), lambda(p), snf_lambda_a10d(a, d))
        }
    })
}

/// Conjectured `U_k(C_n)` for `6 <= n <= n_max`, `4 <= k <= n - 2`, and the
/// circulant determinant product for `3 <= n <= max(12, n_max)`.
pub(super) fn conjecture(ctx: &Ctx) -> Vec<Record> {
    let pairs: Vec<(usize, usize)> = (6..=ctx.n_max).flat_map(|n| (4..=n - 2).map(move |k| (n, k))).collect();
    ctx.progress(&format!("conjecture: {} ideals", pairs.len()));
    let mut records = run_tasks(&pairs, ctx.opts.parallel, |&(n, k)| {
        closed_form_record(conjectured_univariate_circuit(n, k), format!("C_{n} k={k}"))
    });
    for r in &mut records {
        r.name = "univariate-circuit".into();
    }
    let ns: Vec<usize> = (3..=ctx.n_max.max(12).min(MAX_CIRCULANT_ORDER)).collect();
    records.extend(run_tasks(&ns, ctx.opts.parallel, |&n| {
        let outcome = circulant_det_check(n, 1e-6).map(|r| {
            let d = format!("max relative deviation {:.3e}", r.max_relative_error);
            if r.pass {
                Ok(d)
            } else {
                Err(d)
            }
        });
        Record::from_check("circulant-det", format!("n={n}"), outcome)
    }));
    records
}

pub(super) fn conjecture_notes() -> Vec<String> {
    vec![
        "passing univariate-circuit checks are evidence for the conjecture, not a proof".into(),
        "U_{n-1}(C_n): no closed form is known".into(),
    ]
}

/// Diameter at least 3 forces a trivial `I_2` and an embedding of `F1`.
pub(super) fn diameter_lemma(ctx: &Ctx) -> Result<Vec<Record>> {
    let f1 = BuiltinPattern::F1.pattern();
    let mut records = Vec::new();
    for n in 2..=ctx.n_max {
        ctx.progress(&format!("diameter-lemma n={n}"));
        let t = sweep_labeled(n, 2, ctx.opts.parallel, |g| {
            if g.diameter()? < 3 {
                return Ok(vec![Outcome::Skip, Outcome::Skip]);
            }
            let trivial = is_distance_ideal_trivial(g, 2)?;
            let embeds = contains_pattern(g, &f1).is_some();
            Ok(vec![holds(trivial, || "I_2 not trivial".into()), holds(embeds, || "F1 does not embed".into())])
        })?;
        records.push(tally_record("diameter-trivial-i2", format!("n={n} labelled"), &t[0]));
        records.push(tally_record("diameter-embeds-f1", format!("n={n} labelled"), &t[1]));
    }
    Ok(records)
}

/// For `F2..F5`: diameter at most 2 and an embedding force a trivial `I_2`.
pub(super) fn pattern_lemmas(ctx: &Ctx) -> Result<Vec<Record>> {
    let patterns = [BuiltinPattern::F2, BuiltinPattern::F3, BuiltinPattern::F4, BuiltinPattern::F5];
    let tables: Vec<_> = patterns.iter().map(|p| p.pattern()).collect();
    let mut records = Vec::new();
    for n in 3..=ctx.n_max {
        ctx.progress(&format!("pattern-lemmas n={n}"));
        let t = sweep_labeled(n, patterns.len(), ctx.opts.parallel, |g| {
            if g.diameter()? > 2 {
                return Ok(vec![Outcome::Skip; tables.len()]);
            }
            let mut trivial = None;
            tables
                .iter()
                .map(|p| {
                    if contains_pattern(g, p).is_none() {
                        return Ok(Outcome::Skip);
                    }
                    let t = match trivial {
                        Some(t) => t,
                        None => *trivial.insert(is_distance_ideal_trivial(g, 2)?),
                    };
                    Ok(holds(t, || "I_2 not trivial".into()))
                })
                .collect()
        })?;
        for (p, tally) in patterns.iter().zip(&t) {
            records.push(tally_record("pattern-trivial-i2", format!("{p} n={n} labelled"), tally));
        }
    }
    Ok(records)
}
