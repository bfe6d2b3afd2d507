//! JSON and edge-list formats. Everything external is keyed by vertex label.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexId, VertexSet};
use crate::matching::Matching;

/// A label that may be written as a JSON string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Text(String),
    Number(i64),
}

impl Label {
    pub fn into_string(self) -> String {
        match self {
            Label::Text(s) => s,
            Label::Number(n) => n.to_string(),
        }
    }
}

/// `{"left": [...], "right": [...], "edges": [[a, b], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraphDocument {
    left: Vec<Label>,
    right: Vec<Label>,
    edges: Vec<[Label; 2]>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGraphDocument = serde_json::from_str(text)?;
        Ok(GraphDocument {
            left: raw.left.into_iter().map(Label::into_string).collect(),
            right: raw.right.into_iter().map(Label::into_string).collect(),
            edges: raw
                .edges
                .into_iter()
                .map(|[a, b]| [a.into_string(), b.into_string()])
                .collect(),
        })
    }

    pub fn to_graph(&self) -> Result<BipartiteGraph> {
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let left: Vec<&str> = self.left.iter().map(String::as_str).collect();
        let right: Vec<&str> = self.right.iter().map(String::as_str).collect();
        BipartiteGraph::from_labels(&left, &right, &edges)
    }

    /// Exchanges the declared sides.
    pub fn swap_sides(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }

    /// Labels in natural order; edges listed LEFT endpoint first.
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        let left = sorted_labels(g, g.left_vertices());
        let right = sorted_labels(g, g.right_vertices());
        let mut edges: Vec<[String; 2]> = g
            .edges()
            .iter()
            .map(|e| [g.label(e.left).to_string(), g.label(e.right).to_string()])
            .collect();
        edges.sort_by(|a, b| natural_cmp(&a[0], &b[0]).then_with(|| natural_cmp(&a[1], &b[1])));
        GraphDocument { left, right, edges }
    }
}

/// Parses `u v` lines; `#` starts a comment and a line holding a single
/// label declares an isolated vertex. Sides come from a breadth-first
/// two-colouring that puts the first vertex of each component on the LEFT.
pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut intern = |s: &str, labels: &mut Vec<String>| -> usize {
        *index.entry(s.to_string()).or_insert_with(|| {
            labels.push(s.to_string());
            labels.len() - 1
        })
    };
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => {
                intern(v, &mut labels);
            }
            [a, b] => {
                let a = intern(a, &mut labels);
                let b = intern(b, &mut labels);
                pairs.push((a, b));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `u v`, found {} fields",
                    lineno + 1,
                    tokens.len()
                )))
            }
        }
    }

    let n = labels.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &pairs {
        if a == b {
            return Err(Error::SelfLoop(labels[a].clone()));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour: Vec<Option<Side>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(Side::Left);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let next = colour[v].expect("coloured before queued").opposite();
            for &w in &adj[v] {
                match colour[w] {
                    None => {
                        colour[w] = Some(next);
                        queue.push_back(w);
                    }
                    Some(c) if c != next => return Err(Error::NotBipartite(labels[w].clone())),
                    Some(_) => {}
                }
            }
        }
    }
    let sides = colour
        .into_iter()
        .map(|c| c.expect("all coloured"))
        .collect();
    let edges: Vec<(VertexId, VertexId)> = pairs
        .into_iter()
        .map(|(a, b)| (VertexId(a), VertexId(b)))
        .collect();
    BipartiteGraph::from_parts(sides, labels, &edges)
}

/// JSON if the text starts with `{`, otherwise an edge list.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    if text.trim_start().starts_with('{') {
        GraphDocument::from_json(text)?.to_graph()
    } else {
        parse_edge_list(text)
    }
}

fn lookup(g: &BipartiteGraph, label: &str) -> Result<VertexId> {
    g.vertex_by_label(label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

/// A matching as a JSON array of label pairs.
pub fn parse_matching(g: &BipartiteGraph, text: &str) -> Result<Matching> {
    let raw: Vec<[Label; 2]> = serde_json::from_str(text)?;
    let mut pairs = Vec::with_capacity(raw.len());
    for [a, b] in raw {
        pairs.push((lookup(g, &a.into_string())?, lookup(g, &b.into_string())?));
    }
    Matching::from_pairs(g, &pairs)
}

/// A vertex set as a JSON array of labels.
pub fn parse_vertex_set(g: &BipartiteGraph, text: &str) -> Result<VertexSet> {
    Ok(parse_vertex_sequence(g, text)?.into_iter().collect())
}

/// A JSON array of labels, in the given order.
pub fn parse_vertex_sequence(g: &BipartiteGraph, text: &str) -> Result<Vec<VertexId>> {
    let raw: Vec<Label> = serde_json::from_str(text)?;
    raw.into_iter()
        .map(|l| lookup(g, &l.into_string()))
        .collect()
}

/// Matching edges as `[left, right]` label pairs in natural order.
pub fn matching_labels(g: &BipartiteGraph, m: &Matching) -> Vec<[String; 2]> {
    let mut out: Vec<[String; 2]> = m
        .edges(g)
        .into_iter()
        .map(|e| [g.label(e.left).to_string(), g.label(e.right).to_string()])
        .collect();
    out.sort_by(|a, b| natural_cmp(&a[0], &b[0]).then_with(|| natural_cmp(&a[1], &b[1])));
    out
}

pub fn sorted_labels(g: &BipartiteGraph, vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
    let mut out: Vec<String> = vs.into_iter().map(|v| g.label(v).to_string()).collect();
    out.sort_by(|a, b| natural_cmp(a, b));
    out
}

/// Orders strings so embedded decimal runs compare numerically: `v2 < v10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(c), Some(d)) if c.is_ascii_digit() && d.is_ascii_digit() => {
                let i = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let j = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let p = trim_zeros(&x[..i]);
                let q = trim_zeros(&y[..j]);
                let ord = p.len().cmp(&q.len()).then_with(|| p.cmp(q));
                if ord != Ordering::Equal {
                    return ord;
                }
                x = &x[i..];
                y = &y[j..];
            }
            (Some(c), Some(d)) => {
                if c != d {
                    return c.cmp(d);
                }
                x = &x[1..];
                y = &y[1..];
            }
        }
    }
}

fn trim_zeros(digits: &[u8]) -> &[u8] {
    let k = digits.iter().take_while(|&&c| c == b'0').count();
    &digits[k..]
}
