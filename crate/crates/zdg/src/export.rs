//! DOT and JSON renderings of loop graphs. Output is byte-stable: vertices in
//! index order, edges sorted, loops listed as `v -- v` among the edges.

use serde::Serialize;
use zdg_core::LoopGraph;

fn vertex_names(g: &LoopGraph) -> Vec<String> {
    (0..g.vertex_count()).map(|v| g.label(v)).collect()
}

fn is_bare_id(s: &str) -> bool {
    let numeral = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let ident = s
        .bytes()
        .next()
        .is_some_and(|b| b.is_ascii_alphabetic() || b == b'_')
        && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_');
    numeral || ident
}

fn dot_id(s: &str) -> String {
    if is_bare_id(s) {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Every edge and loop as `(u, v)` with `u <= v`, lexicographically sorted.
fn edges_with_loops(g: &LoopGraph) -> Vec<(usize, usize)> {
    let mut all = g.edges();
    all.extend(g.loops().iter().map(|v| (v, v)));
    all.sort_unstable();
    all
}

pub fn to_dot(g: &LoopGraph, name: &str) -> String {
    let ids: Vec<String> = vertex_names(g).iter().map(|s| dot_id(s)).collect();
    let mut out = format!("graph {} {{\n", dot_id(name));
    for id in &ids {
        out.push_str(&format!("  {id};\n"));
    }
    for (u, v) in edges_with_loops(g) {
        out.push_str(&format!("  {} -- {};\n", ids[u], ids[v]));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    loops: Vec<usize>,
    labels: Vec<String>,
}

/// `{"n":..,"edges":[[u,v],..],"loops":[..],"labels":[..]}` on one line.
/// Unlabelled graphs use vertex indices as labels.
pub fn to_json(g: &LoopGraph) -> String {
    let doc = JsonGraph {
        n: g.vertex_count(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        loops: g.loops().iter().collect(),
        labels: vertex_names(g),
    };
    let mut s = serde_json::to_string(&doc).expect("graph serializes");
    s.push('\n');
    s
}
