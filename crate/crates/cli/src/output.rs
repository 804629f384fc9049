//! Report serialization: stable JSON field names, floats as fixed-width
//! decimal strings, rationals as exact "p/q" plus a decimal approximation,
//! and a flat CSV projection for plotting.

use serde_json::{json, Value};

use graph_entropy::certify::{Certificate, SymmetryVerdict, Verdict};
use graph_entropy::rational::{format_rational, to_f64};
use graph_entropy::{Graph, PolytopePoint, Rational, VertexSet};

/// Floats carry nine decimals; values are bits unless a field says
/// otherwise.
pub fn bits(x: f64) -> String {
    format!("{x:.9}")
}

pub fn rational(r: &Rational) -> Value {
    json!({ "exact": format_rational(r), "approx": bits(to_f64(r)) })
}

pub fn vertex_set(s: VertexSet) -> Value {
    Value::from(s.to_vec())
}

pub fn point(a: &PolytopePoint) -> Value {
    let support: Vec<Value> = a
        .support()
        .iter()
        .map(|&(set, coef)| json!({ "set": vertex_set(set), "coefficient": bits(coef) }))
        .collect();
    let dense: Vec<String> = a.dense().iter().map(|&x| bits(x)).collect();
    json!({ "support": support, "dense": dense })
}

/// 64-bit FNV-1a over the canonical edge-list rendering.
pub fn digest(g: &Graph) -> String {
    let mut text = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        text.push_str(&format!("{u} {v}\n"));
    }
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a64:{h:016x}")
}

pub fn envelope(command: &str, source: &str, g: &Graph, tol_bits: f64, result: Value) -> Value {
    json!({
        "command": command,
        "input": { "source": source, "n": g.n(), "m": g.m(), "digest": digest(g) },
        "unit": "bits",
        "tol_bits": format!("{tol_bits:e}"),
        "result": result,
    })
}

pub fn symmetry(v: &SymmetryVerdict) -> Value {
    let verdict = match v.verdict {
        Verdict::Symmetric => "symmetric",
        Verdict::NotSymmetric => "not-symmetric",
        Verdict::Undecided => "undecided-by-theorems",
    };
    let route = match v.route {
        graph_entropy::certify::Route::PerfectCover => "perfect-cover",
        graph_entropy::certify::Route::BipartiteMatching => "bipartite-matching",
        graph_entropy::certify::Route::VertexTransitive => "vertex-transitive",
        graph_entropy::certify::Route::KGraphLine => "kgraph-line",
        graph_entropy::certify::Route::Numeric => "numeric",
    };
    let certificate = match &v.certificate {
        None => Value::Null,
        Some(Certificate::CliqueCover(cover)) => json!({
            "type": "clique_cover",
            "parts": cover.parts.iter().map(|&s| vertex_set(s)).collect::<Vec<_>>(),
        }),
        Some(Certificate::Matching(edges)) => json!({
            "type": "perfect_matching",
            "edges": edges.iter().map(|&(u, w)| json!([u, w])).collect::<Vec<_>>(),
        }),
        Some(Certificate::Kkt(kkt)) => json!({
            "type": "kkt",
            "x": kkt.x.iter().map(|&x| bits(x)).collect::<Vec<_>>(),
            "lambda": kkt.lambda.iter().map(|&x| bits(x)).collect::<Vec<_>>(),
            "gamma": kkt
                .gamma
                .iter()
                .map(|&(s, x)| json!({ "set": vertex_set(s), "value": bits(x) }))
                .collect::<Vec<_>>(),
        }),
        Some(Certificate::VertexTransitivity) => json!({ "type": "vertex_transitive" }),
        Some(Certificate::Numeric { entropy_bits, log2_chi_f }) => json!({
            "type": "numeric",
            "entropy_bits": bits(*entropy_bits),
            "log2_chi_f_bits": bits(*log2_chi_f),
        }),
    };
    let counterexample = match &v.counterexample {
        None => Value::Null,
        Some(c) => json!({
            "witness_set": vertex_set(c.witness_set),
            "bound_bits": c.bound_bits.map(bits),
        }),
    };
    json!({
        "verdict": verdict,
        "route": route,
        "certificate": certificate,
        "counterexample": counterexample,
    })
}

/// Flattens the result payload to `key,value` rows, nesting with dots.
pub fn to_csv(result: &Value) -> String {
    let mut rows = vec![("key".to_string(), "value".to_string())];
    flatten("", result, &mut rows);
    rows.into_iter().map(|(k, v)| format!("{k},{v}\n")).collect()
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, rows);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, rows);
            }
        }
        Value::Null => rows.push((prefix.to_string(), String::new())),
        Value::String(s) => rows.push((prefix.to_string(), csv_field(s))),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_entropy::builtins;

    #[test]
    fn digest_is_stable() {
        let a = digest(&builtins::cycle(5));
        let b = digest(&builtins::cycle(5));
        assert_eq!(a, b);
        assert_ne!(a, digest(&builtins::cycle(6)));
    }

    #[test]
    fn csv_flattens_nesting() {
        let v = json!({ "a": { "b": "1.5", "c": [2, 3] }, "d": null });
        let csv = to_csv(&v);
        assert!(csv.contains("a.b,1.5\n"));
        assert!(csv.contains("a.c.1,3\n"));
        assert!(csv.contains("d,\n"));
    }
}
