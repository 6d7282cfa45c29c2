//! Plain edge-list graphs: `n <count>`, then `u v` per edge, `u u` for a loop.

use thiserror::Error;
use zdg_core::LoopGraph;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct GraphFileError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError {
        line,
        message: message.into(),
    }
}

fn number(tok: &str, line: usize) -> Result<usize, GraphFileError> {
    tok.parse()
        .map_err(|_| err(line, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse(text: &str) -> Result<LoopGraph, GraphFileError> {
    let mut graph: Option<LoopGraph> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match &mut graph {
            None => {
                if toks.len() != 2 || toks[0] != "n" {
                    return Err(err(line, "expected header `n <count>`"));
                }
                graph = Some(LoopGraph::new(number(toks[1], line)?));
            }
            Some(g) => {
                if toks.len() != 2 {
                    return Err(err(line, "expected an edge `u v`"));
                }
                let (u, v) = (number(toks[0], line)?, number(toks[1], line)?);
                g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
            }
        }
    }
    graph.ok_or_else(|| err(last.max(1), "missing header `n <count>`"))
}

pub fn to_string(g: &LoopGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    for v in g.loops() {
        out.push_str(&format!("{v} {v}\n"));
    }
    out
}
