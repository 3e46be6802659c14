mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use distideal::families::{
    conjectured_univariate_circuit, ideal_complete, ideal_lambda_a10d, ideal_lambda_ab01, ideal_star, second_ideal_lambda, snf_circuit,
    snf_lambda_a10d, snf_lambda_ab01, third_ideal_circuit, ClosedFormIdeal,
};
use distideal::ideal::{distance_ideal, phi, univariate_distance_ideal};
use distideal::linalg::smith_normal_form;
use distideal::pattern::{classify, Classification, Witness};
use distideal::verify::{run_suite, Suite, VerifyOptions, REPORT_SCHEMA_VERSION};
use distideal::{DistanceMatrixKind, LambdaParams, SnfResult};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "distideal", version, about = "Distance ideals and Smith normal forms of strong digraphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Digraph file (`n=<count>` plus `u->v` arcs, or 0/1 adjacency rows); `-` reads stdin.
    input: Option<PathBuf>,
    /// Built-in digraph: circuit:N, complete:N, bipartite:M,N, path:N, lambda:A,B,C,D.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Generators of the k-th distance ideal.
    Ideal {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
        /// Use tI + D instead of diag(x) + D.
        #[arg(long)]
        univariate: bool,
        /// Also print a strong Gröbner basis.
        #[arg(long)]
        groebner: bool,
        /// Comma-separated integer point; prints the gcd of the generator values.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        evaluate_at: Option<Vec<i64>>,
    },
    /// Smith normal form of a distance matrix.
    Snf {
        #[command(flatten)]
        graph: GraphArgs,
        /// D, DL, DQ, Ddeg or DdegPlus.
        #[arg(long, default_value = "D")]
        matrix: String,
    },
    /// C3, a member of the Λ family, or neither, with a witness and Φ.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Closed-form generators or invariant factors of a solved family.
    Formula {
        /// complete:N, star:M, lambda-ab01:A,B, lambda-a10d:A,D, lambda-second:A,B,C,D,
        /// circuit-third:N, circuit-univariate:N, snf-circuit:N, snf-lambda-ab01:A,B, snf-lambda-a10d:A,D.
        spec: String,
        #[arg(long)]
        k: Option<usize>,
        /// Compare with the ideal of minors or the elimination SNF.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite.
    Verify {
        /// theorem-equi, eval-consistency, circuit-snf, lambda-ideals, conjecture, diameter-lemma or pattern-lemmas.
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        parallel: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Suppress progress lines on stderr.
        #[arg(long)]
        quiet: bool,
    },
}

/// Text and JSON renderings of a command result, and whether it succeeded.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn envelope(command: &str, result: Value) -> Value {
    json!({ "schema_version": REPORT_SCHEMA_VERSION, "command": command, "result": result })
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn indented(lines: &[String]) -> String {
    lines.iter().map(|l| format!("  {l}\n")).collect()
}

fn cmd_ideal(graph: &GraphArgs, k: usize, univariate: bool, groebner: bool, point: Option<&[i64]>) -> Result<Output> {
    let g = input::digraph(graph.input.as_deref(), graph.family.as_deref())?;
    let ideal = if univariate { univariate_distance_ideal(&g, k)? } else { distance_ideal(&g, k)? };
    let letter = if univariate { "U" } else { "I" };
    let vars = ideal.context().names().join(", ");
    let gens = strings(ideal.generators());
    let mut text = format!("{letter}_{k} over {vars}\ngenerators:\n{}", indented(&gens));
    let mut result = json!({ "k": k, "univariate": univariate, "variables": ideal.context().names(), "generators": gens });
    if groebner {
        let basis = strings(ideal.basis()?);
        text.push_str(&format!("basis:\n{}", indented(&basis)));
        result["basis"] = json!(basis);
        result["trivial"] = json!(ideal.is_trivial()?);
    }
    if let Some(point) = point {
        let point: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
        let value = ideal.evaluate(&point)?;
        text.push_str(&format!("value at ({}): {value}\n", strings(&point).join(",")));
        result["evaluation"] = json!(value.to_string());
    }
    Ok(Output { text, json: envelope("ideal", result), ok: true })
}

fn diagonal(s: &SnfResult) -> Vec<String> {
    strings(&s.diagonal)
}

fn cmd_snf(graph: &GraphArgs, matrix: &str) -> Result<Output> {
    let g = input::digraph(graph.input.as_deref(), graph.family.as_deref())?;
    let kind: DistanceMatrixKind = matrix.parse()?;
    let snf = smith_normal_form(&g.distance_matrix(kind)?);
    let diag = diagonal(&snf);
    Ok(Output {
        text: format!("{}\n", diag.join(", ")),
        json: envelope("snf", json!({ "matrix": kind.name(), "diagonal": diag, "rank": snf.rank })),
        ok: true,
    })
}

fn cmd_classify(graph: &GraphArgs) -> Result<Output> {
    let g = input::digraph(graph.input.as_deref(), graph.family.as_deref())?;
    let r = classify(&g)?;
    let profile = phi(&g)?;
    let class = match r.class {
        Classification::Circuit3 => "C3".to_string(),
        Classification::Lambda(p) => p.to_string(),
        Classification::NotInGamma1 => "not in Γ1".to_string(),
    };
    let witness = match &r.witness {
        Witness::Isomorphism(map) => format!("isomorphism {map:?}"),
        Witness::Blocks(blocks) => format!("blocks [{}]", blocks.iter().map(|b| format!("{b:?}")).collect::<Vec<_>>().join(", ")),
        Witness::Pattern { pattern, embedding } => format!("pattern {pattern} at {embedding:?}"),
        Witness::None => "none".to_string(),
    };
    Ok(Output {
        text: format!("class: {class}\nwitness: {witness}\nΦ = {}\n", profile.phi),
        json: envelope("classify", json!({ "class": r.class, "witness": r.witness, "phi": profile.phi, "trivial": profile.trivial })),
        ok: true,
    })
}

fn formula_args(spec: &str) -> Result<(&str, Vec<usize>)> {
    let (name, args) = spec.split_once(':').with_context(|| format!("formula spec {spec:?} needs the form name:params"))?;
    let nums = args.split(',').map(|s| s.trim().parse::<usize>().with_context(|| format!("bad number {s:?}"))).collect::<Result<_>>()?;
    Ok((name.trim(), nums))
}

fn closed_form(name: &str, p: &[usize], k: Option<usize>) -> Result<Option<ClosedFormIdeal>> {
    let need_k = || k.context("this formula needs --k");
    Ok(Some(match (name, p) {
        ("complete", &[n]) => ideal_complete(n, need_k()?)?,
        ("star", &[m]) => ideal_star(m, need_k()?)?,
        ("lambda-ab01", &[a, b]) => ideal_lambda_ab01(a, b, need_k()?)?,
        ("lambda-a10d", &[a, d]) => ideal_lambda_a10d(a, d, need_k()?)?,
        ("lambda-second", &[a, b, c, d]) => second_ideal_lambda(LambdaParams::new(a, b, c, d))?,
        ("circuit-third", &[n]) => third_ideal_circuit(n)?,
        ("circuit-univariate", &[n]) => conjectured_univariate_circuit(n, need_k()?)?,
        _ => return Ok(None),
    }))
}

fn cmd_formula(spec: &str, k: Option<usize>, check: bool) -> Result<Output> {
    let (name, p) = formula_args(spec)?;
    if let Some(c) = closed_form(name, &p, k)? {
        let gens = strings(c.generators());
        let mut text = format!("{} k={} over {}\n{}", c.family, c.k, c.ideal.context().names().join(", "), indented(&gens));
        let mut result = json!({ "family": c.family.to_string(), "k": c.k, "variables": c.ideal.context().names(), "generators": gens, "vertex_of_var": c.vertex_of_var });
        let mut ok = true;
        if check {
            ok = c.matches_minors()?;
            text.push_str(&format!("matches minors: {ok}\n"));
            result["matches_minors"] = json!(ok);
        }
        return Ok(Output { text, json: envelope("formula", result), ok });
    }
    let (formula, g) = match (name, p.as_slice()) {
        ("snf-circuit", &[n]) => (snf_circuit(n)?, input::family(&format!("circuit:{n}"))),
        ("snf-lambda-ab01", &[a, b]) => (snf_lambda_ab01(a, b)?, input::family(&format!("lambda:{a},{b},0,1"))),
        ("snf-lambda-a10d", &[a, d]) => (snf_lambda_a10d(a, d)?, input::family(&format!("lambda:{a},1,0,{d}"))),
        _ => bail!("unknown formula spec {spec:?}"),
    };
    let diag = diagonal(&formula);
    let mut text = format!("{}\n", diag.join(", "));
    let mut result = json!({ "diagonal": diag });
    let mut ok = true;
    if check {
        let actual = smith_normal_form(&g?.distance_matrix(DistanceMatrixKind::D)?);
        ok = actual == formula;
        text.push_str(&format!("matches elimination: {ok}\n"));
        result["matches_elimination"] = json!(ok);
    }
    Ok(Output { text, json: envelope("formula", result), ok })
}

fn cmd_verify(suite: &str, n_max: Option<usize>, parallel: bool, seed: u64, quiet: bool) -> Result<Output> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, &VerifyOptions { n_max, parallel, seed, progress: !quiet })?;
    Ok(Output { text: report.to_string(), json: serde_json::to_value(&report)?, ok: report.is_success() })
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Ideal { graph, k, univariate, groebner, evaluate_at } => cmd_ideal(graph, *k, *univariate, *groebner, evaluate_at.as_deref()),
        Command::Snf { graph, matrix } => cmd_snf(graph, matrix),
        Command::Classify { graph } => cmd_classify(graph),
        Command::Formula { spec, k, check } => cmd_formula(spec, *k, *check),
        Command::Verify { suite, n_max, parallel, seed, quiet } => cmd_verify(suite, *n_max, *parallel, *seed, *quiet),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
