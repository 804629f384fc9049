//! Graph and distribution ingestion: `builtin:` names, the edge-list
//! text format, and distribution strings (uniform, decimals, exact
//! fractions).

use std::fs;

use graph_entropy::rational::rat;
use graph_entropy::{builtins, Distribution, Graph};

/// Loads `builtin:<name>` or an edge-list file. Returns the graph and an
/// echo label for the report.
pub fn load_graph(arg: &str) -> Result<(Graph, String), String> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let g = parse_builtin(name)
            .ok_or_else(|| format!("unknown builtin graph '{name}'"))?;
        return Ok((g, format!("builtin:{name}")));
    }
    let text = fs::read_to_string(arg).map_err(|e| format!("cannot read '{arg}': {e}"))?;
    let g = parse_edge_list(&text)?;
    Ok((g, arg.to_string()))
}

fn parse_builtin(name: &str) -> Option<Graph> {
    let name = name.to_ascii_lowercase();
    match name.as_str() {
        "petersen" => return Some(builtins::petersen()),
        "fig2" => return Some(builtins::fig2_bridgeless_cubic()),
        "fig3" => return Some(builtins::fig3_bridged_cubic()),
        "c4c6" => return Some(builtins::c4c6()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("star") {
        return Some(builtins::star(parse_num(rest)?));
    }
    if let Some(rest) = name.strip_prefix('k') {
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        if let Some((a, b)) = rest.split_once('_') {
            let (a, b) = (a.parse().ok()?, b.parse().ok()?);
            if a == 0 || b == 0 {
                return None;
            }
            return Some(builtins::complete_bipartite(a, b));
        }
        let n: usize = rest.parse().ok()?;
        return (n >= 1).then(|| builtins::complete(n));
    }
    if let Some(rest) = name.strip_prefix('c') {
        let n = parse_num(rest)?;
        return (n >= 3).then(|| builtins::cycle(n));
    }
    None
}

fn parse_num(rest: &str) -> Option<usize> {
    rest.strip_prefix('_').unwrap_or(rest).parse().ok().filter(|&n| n >= 1)
}

/// Edge-list format: first data line "n m", then m lines "u v" with
/// 0-based labels; blank lines and "#" comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, String> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = fields.next();
        let b = fields.next();
        if fields.next().is_some() {
            return Err(format!("line {lineno}: expected two fields, got more"));
        }
        let (Some(a), Some(b)) = (a, b) else {
            return Err(format!("line {lineno}: expected two fields"));
        };
        let a: usize = a
            .parse()
            .map_err(|_| format!("line {lineno}: '{a}' is not a nonnegative integer"))?;
        let b: usize = b
            .parse()
            .map_err(|_| format!("line {lineno}: '{b}' is not a nonnegative integer"))?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(format!(
                        "line {lineno}: vertex {} out of range 0..{n}",
                        a.max(b)
                    ));
                }
                edges.push((a, b));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err("empty input: missing 'n m' header line".to_string());
    };
    if edges.len() != m {
        return Err(format!("header declares {m} edges, found {}", edges.len()));
    }
    Graph::new(n, &edges).map_err(|e| format!("invalid edge list: {e}"))
}

/// Parses a distribution argument: "uniform", an inline comma list of
/// decimals or exact fractions "a/b", or a path to a file holding such a
/// list. No automatic normalization.
pub fn parse_distribution(text: &str, n: usize) -> Result<Distribution, String> {
    if text == "uniform" {
        if n == 0 {
            return Err("uniform distribution needs at least one vertex".to_string());
        }
        return Ok(Distribution::uniform(n));
    }
    let body = if std::path::Path::new(text).is_file() {
        fs::read_to_string(text).map_err(|e| format!("cannot read '{text}': {e}"))?
    } else {
        text.to_string()
    };
    let tokens: Vec<&str> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err("empty distribution".to_string());
    }
    if tokens.len() != n {
        return Err(format!("distribution has {} entries, graph has {n} vertices", tokens.len()));
    }
    if tokens.iter().all(|t| t.contains('/')) {
        let mut weights = Vec::with_capacity(tokens.len());
        for t in &tokens {
            let (p, q) = t.split_once('/').expect("checked");
            let p: i64 = p.trim().parse().map_err(|_| format!("bad fraction '{t}'"))?;
            let q: i64 = q.trim().parse().map_err(|_| format!("bad fraction '{t}'"))?;
            if q <= 0 {
                return Err(format!("bad fraction '{t}': denominator must be positive"));
            }
            weights.push(rat(p, q));
        }
        return Distribution::new_rational(weights).map_err(|e| format!("{e}"));
    }
    let mut weights = Vec::with_capacity(tokens.len());
    for t in &tokens {
        let w: f64 = if let Some((p, q)) = t.split_once('/') {
            let p: f64 = p.trim().parse().map_err(|_| format!("bad fraction '{t}'"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("bad fraction '{t}'"))?;
            p / q
        } else {
            t.trim().parse().map_err(|_| format!("bad number '{t}'"))?
        };
        if w < 0.0 || !w.is_finite() {
            return Err(format!("negative or non-finite weight '{t}'"));
        }
        weights.push(w);
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(format!("weights sum to {sum}, not 1 (no automatic normalization)"));
    }
    // Absorb benign parse rounding so the exact-sum validation passes.
    for w in weights.iter_mut() {
        *w /= sum;
    }
    Distribution::new_float(weights).map_err(|e| format!("{e}"))
}
