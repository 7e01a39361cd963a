//! Graph serialization: edge-list text, DOT, and JSON. Each emitted format
//! can be read back; re-import preserves the adjacency structure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge list with an `n m` header, one `u v` line per edge, u < v.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::TableFormat("empty edge list".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::TableFormat("bad edge-list header".into()))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::TableFormat("bad edge-list header".into()))?;
    let mut g = Graph::unlabeled(n);
    let mut count = 0;
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::TableFormat(format!("bad edge line: {line}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::TableFormat(format!("bad edge line: {line}")))?;
        if u >= n || v >= n || u == v {
            return Err(Error::TableFormat(format!("invalid edge {u} {v}")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::TableFormat(format!(
            "header said {m} edges, found {count}"
        )));
    }
    Ok(g)
}

/// DOT output with element names as labels.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph epg {\n");
    for v in 0..g.n() {
        out.push_str(&format!(
            "  {v} [label=\"{}\"];\n",
            g.label(v).replace('"', "\\\"")
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Read back the DOT subset produced by [`to_dot`].
pub fn from_dot(text: &str) -> Result<Graph> {
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for line in text.lines() {
        let line = line.trim().trim_end_matches(';');
        if line.is_empty() || line.starts_with("graph") || line == "}" {
            continue;
        }
        if let Some((u, v)) = line.split_once("--") {
            let u: usize = u
                .trim()
                .parse()
                .map_err(|_| Error::TableFormat(format!("bad dot edge: {line}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::TableFormat(format!("bad dot edge: {line}")))?;
            edges.push((u, v));
        } else if let Some((id, rest)) = line.split_once('[') {
            let id: usize = id
                .trim()
                .parse()
                .map_err(|_| Error::TableFormat(format!("bad dot node: {line}")))?;
            let label = rest
                .trim_end_matches(']')
                .trim()
                .strip_prefix("label=\"")
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| Error::TableFormat(format!("bad dot label: {line}")))?;
            labels.push((id, label.replace("\\\"", "\"")));
        } else {
            return Err(Error::TableFormat(format!("unrecognized dot line: {line}")));
        }
    }
    let n = labels.len();
    labels.sort_by_key(|(id, _)| *id);
    if labels.iter().enumerate().any(|(i, (id, _))| i != *id) {
        return Err(Error::TableFormat("non-contiguous dot node ids".into()));
    }
    let mut g = Graph::new(n, labels.into_iter().map(|(_, l)| l).collect());
    for (u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(Error::TableFormat(format!("invalid dot edge {u} -- {v}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        labels: g.labels().to_vec(),
        edges: g.edges(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::TableFormat(e.to_string()))?;
    if doc.labels.len() != doc.n {
        return Err(Error::TableFormat("label count != n".into()));
    }
    let mut g = Graph::new(doc.n, doc.labels);
    for (u, v) in doc.edges {
        if u >= doc.n || v >= doc.n || u == v {
            return Err(Error::TableFormat(format!("invalid edge ({u},{v})")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}
