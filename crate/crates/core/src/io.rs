//! Text and JSON encodings of graphs, diagrams, worlds and matrices.
//!
//! Graphs and diagrams share one file shape, `{"n_pegs": n, "edges": [...]}`:
//! three-element edges `[i, j, mult]` describe a web graph and four-element
//! edges `[a, b, c, d]` a diagram. Polynomials are coefficient lists with the
//! constant term first, rationals are `"num/den"` strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagram::{validate_diagram, WebDiagram};
use crate::matrices::{ColouringMatrix, MixingMatrix};
use crate::polyalg::{Poly, Rat};
use crate::world::{web_graph_of, WebGraph, WebWorld};
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct RawFile {
    n_pegs: u32,
    edges: Vec<Vec<u32>>,
}

/// Contents of a graph or diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Graph(WebGraph),
    Diagram(WebDiagram),
}

impl Input {
    /// The web graph itself, or the web graph of the diagram.
    pub fn graph(&self) -> WebGraph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::Diagram(d) => web_graph_of(d),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub fn parse_input(json: &str) -> Result<Input> {
    let raw: RawFile = serde_json::from_str(json).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    let arity = raw.edges.first().map_or(3, Vec::len);
    if raw.edges.iter().any(|e| e.len() != arity) {
        return Err(bad("edges must all have the same length"));
    }
    match arity {
        3 => Ok(Input::Graph(WebGraph::new(
            raw.n_pegs,
            raw.edges.iter().map(|e| (e[0], e[1], e[2])),
        )?)),
        4 => Ok(Input::Diagram(validate_diagram(
            raw.edges.iter().map(|e| (e[0], e[1], e[2], e[3])),
            raw.n_pegs,
        )?)),
        n => Err(bad(format!("edges must have 3 or 4 entries, found {n}"))),
    }
}

pub fn parse_graph(json: &str) -> Result<WebGraph> {
    parse_input(json).map(|i| i.graph())
}

pub fn parse_diagram(json: &str) -> Result<WebDiagram> {
    match parse_input(json)? {
        Input::Diagram(d) => Ok(d),
        Input::Graph(_) => Err(bad("expected diagram edges [a, b, c, d]")),
    }
}

pub fn graph_to_json(g: &WebGraph) -> Value {
    let edges: Vec<Vec<u32>> = g.labeled_edges().iter().map(|&(i, j, m)| vec![i, j, m]).collect();
    serde_json::json!({ "n_pegs": g.n_pegs(), "edges": edges })
}

pub fn diagram_to_json(d: &WebDiagram) -> Value {
    let edges: Vec<Vec<u32>> = d.edges().iter().map(|e| vec![e.a, e.b, e.c, e.d]).collect();
    serde_json::json!({ "n_pegs": d.n_pegs(), "edges": edges })
}

fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

/// Coefficients as JSON numbers, or decimal strings when they exceed `i64`.
pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

/// Always `"num/den"`, with the denominator positive.
pub fn rat_to_string(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn world_to_json(w: &WebWorld) -> Value {
    serde_json::json!({
        "graph": graph_to_json(w.graph()),
        "order": w.diagrams().iter().map(diagram_to_json).collect::<Vec<_>>(),
    })
}

pub fn colouring_matrix_to_json(m: &ColouringMatrix) -> Value {
    let entries: Vec<Vec<Value>> = m
        .entries()
        .iter()
        .map(|row| row.iter().map(poly_to_json).collect())
        .collect();
    serde_json::json!({
        "order": m.world().diagrams().iter().map(diagram_to_json).collect::<Vec<_>>(),
        "entries": entries,
    })
}

pub fn mixing_matrix_to_json(r: &MixingMatrix) -> Value {
    let entries: Vec<Vec<String>> = r
        .entries()
        .iter()
        .map(|row| row.iter().map(rat_to_string).collect())
        .collect();
    serde_json::json!({
        "order": r.world().diagrams().iter().map(diagram_to_json).collect::<Vec<_>>(),
        "entries": entries,
    })
}

/// `index  diagram` lines in canonical order.
pub fn render_order(w: &WebWorld) -> String {
    let width = w.len().saturating_sub(1).to_string().len();
    w.diagrams()
        .iter()
        .enumerate()
        .map(|(i, d)| format!("{i:>width$}  {d}\n"))
        .collect()
}

/// Right-aligned columns, one matrix row per line.
pub fn render_grid(cells: &[Vec<String>]) -> String {
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_colouring_matrix(m: &ColouringMatrix) -> String {
    let cells: Vec<Vec<String>> = m
        .entries()
        .iter()
        .map(|row| row.iter().map(Poly::to_string).collect())
        .collect();
    render_grid(&cells)
}

pub fn render_mixing_matrix(r: &MixingMatrix) -> String {
    let cells: Vec<Vec<String>> = r
        .entries()
        .iter()
        .map(|row| row.iter().map(Rat::to_string).collect())
        .collect();
    render_grid(&cells)
}
