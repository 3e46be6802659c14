use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use distideal::digraph::{circuit, complete, complete_bipartite, lambda, path_graph};
use distideal::{Digraph, LambdaParams};

fn numbers(args: &str) -> Result<Vec<usize>> {
    args.split(',').map(|s| s.trim().parse::<usize>().with_context(|| format!("bad number {s:?}"))).collect()
}

/// `circuit:N`, `complete:N`, `bipartite:M,N`, `path:N` or `lambda:A,B,C,D`.
pub fn family(spec: &str) -> Result<Digraph> {
    let (name, args) = spec.split_once(':').with_context(|| format!("family spec {spec:?} needs the form name:params"))?;
    let p = numbers(args)?;
    let g = match (name.trim(), p.as_slice()) {
        ("circuit", &[n]) => circuit(n),
        ("complete", &[n]) => complete(n),
        ("bipartite", &[m, n]) => complete_bipartite(m, n),
        ("path", &[n]) => path_graph(n),
        ("lambda", &[a, b, c, d]) => lambda(LambdaParams::new(a, b, c, d)),
        _ => bail!("unknown family spec {spec:?}"),
    };
    Ok(g?)
}

/// Digraph from `--family`, a file, or stdin when the path is `-`.
pub fn digraph(path: Option<&Path>, family_spec: Option<&str>) -> Result<Digraph> {
    match (path, family_spec) {
        (Some(_), Some(_)) => bail!("give either a digraph file or --family, not both"),
        (None, Some(spec)) => family(spec),
        (Some(p), None) => {
            let text = if p == Path::new("-") {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
            };
            Ok(Digraph::parse(&text)?)
        }
        (None, None) => bail!("no digraph given: pass a file path, - for stdin, or --family"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        assert_eq!(family("circuit:5").unwrap().n(), 5);
        assert_eq!(family("lambda:1,1,1,1").unwrap().arc_count(), 6);
        assert_eq!(family("bipartite:2, 3").unwrap().n(), 5);
        assert!(family("circuit").is_err());
        assert!(family("lambda:1,2").is_err());
        assert!(family("wheel:5").is_err());
    }
}
