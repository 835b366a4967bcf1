//! Web graphs and web worlds.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::combinat::{factorial_u128, next_permutation};
use crate::diagram::{Edge, WebDiagram};
use crate::{Error, Limits, Result};

/// Loop-free graph on pegs `[1, n_pegs]` whose edges carry multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WebGraph {
    n_pegs: u32,
    // (i, j, mult) with i < j, sorted, no repeated pair, mult >= 1
    edges: Vec<(u32, u32, u32)>,
}

impl WebGraph {
    pub fn new<I>(n_pegs: u32, labeled_edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, u32)>,
    {
        let mut edges: Vec<(u32, u32, u32)> = labeled_edges.into_iter().collect();
        edges.sort_unstable();
        for &(i, j, mult) in &edges {
            if i == 0 || i >= j {
                return Err(Error::EdgeOrder { a: i, b: j });
            }
            if j > n_pegs {
                return Err(Error::PegOutOfRange { peg: j, n_pegs });
            }
            if mult == 0 {
                return Err(Error::InvalidInput(format!("edge {{{i},{j}}} has multiplicity 0")));
            }
        }
        if let Some(w) = edges.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidInput(format!(
                "peg pair {{{},{}}} listed twice",
                w[0].0, w[0].1
            )));
        }
        Ok(WebGraph { n_pegs, edges })
    }

    /// Two pegs joined by `n` parallel edges.
    pub fn k2(n: u32) -> Self {
        WebGraph { n_pegs: 2, edges: vec![(1, 2, n)] }
    }

    pub fn n_pegs(&self) -> u32 {
        self.n_pegs
    }

    pub fn labeled_edges(&self) -> &[(u32, u32, u32)] {
        &self.edges
    }

    /// Total number of diagram edges, the sum of the labels.
    pub fn edge_count(&self) -> u32 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Endpoint count on each peg.
    pub fn degrees(&self) -> Vec<u32> {
        let mut p = vec![0; self.n_pegs as usize];
        for &(i, j, m) in &self.edges {
            p[i as usize - 1] += m;
            p[j as usize - 1] += m;
        }
        p
    }

    /// Graph on `self.n_pegs + other.n_pegs` pegs with `other` renumbered
    /// to sit after `self`.
    pub fn disjoint_union(&self, other: &WebGraph) -> WebGraph {
        let off = self.n_pegs;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j, m)| (i + off, j + off, m)));
        WebGraph { n_pegs: self.n_pegs + other.n_pegs, edges }
    }

    /// `Π p_i!`, the number of height assignments examined by [`enumerate_world`].
    pub fn assignment_count(&self) -> u128 {
        self.degrees()
            .iter()
            .fold(1u128, |acc, &p| acc.saturating_mul(factorial_u128(p)))
    }
}

impl fmt::Display for WebGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} pegs:", self.n_pegs)?;
        for (i, j, m) in &self.edges {
            write!(f, " {i}-{j}[{m}]")?;
        }
        Ok(())
    }
}

/// The web graph of a diagram: peg pairs labelled by edge multiplicity.
pub fn web_graph_of(d: &WebDiagram) -> WebGraph {
    let mut counts: HashMap<(u32, u32), u32> = HashMap::new();
    for e in d.edges() {
        *counts.entry((e.a, e.b)).or_default() += 1;
    }
    let mut edges: Vec<(u32, u32, u32)> = counts.into_iter().map(|((i, j), m)| (i, j, m)).collect();
    edges.sort_unstable();
    WebGraph { n_pegs: d.n_pegs(), edges }
}

/// All diagrams sharing one web graph, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebWorld {
    graph: WebGraph,
    diagrams: Vec<WebDiagram>,
    index: HashMap<WebDiagram, usize>,
}

impl WebWorld {
    pub fn graph(&self) -> &WebGraph {
        &self.graph
    }

    pub fn diagrams(&self) -> &[WebDiagram] {
        &self.diagrams
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    /// Position of `d` in the canonical order.
    pub fn index_of(&self, d: &WebDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Number of edges in each diagram.
    pub fn edge_count(&self) -> u32 {
        self.graph.edge_count()
    }
}

/// Enumerates the world of `graph`: every way of ordering the endpoints on
/// each peg, canonicalised and deduplicated.
pub fn enumerate_world(graph: &WebGraph, limits: &Limits) -> Result<WebWorld> {
    Limits::check("world", graph.assignment_count(), limits.world)?;

    // One slot per diagram edge; endpoint side 0 sits on the lower peg.
    let slots: Vec<(u32, u32)> = graph
        .edges
        .iter()
        .flat_map(|&(i, j, m)| std::iter::repeat_n((i, j), m as usize))
        .collect();
    let mut endpoints: Vec<Vec<(usize, usize)>> = vec![Vec::new(); graph.n_pegs as usize];
    for (s, &(i, j)) in slots.iter().enumerate() {
        endpoints[i as usize - 1].push((s, 0));
        endpoints[j as usize - 1].push((s, 1));
    }
    let pegs: Vec<&Vec<(usize, usize)>> = endpoints.iter().filter(|e| !e.is_empty()).collect();

    let mut heights = vec![[0u32; 2]; slots.len()];
    let mut found = BTreeSet::new();
    assign_peg(0, &pegs, &slots, &mut heights, graph.n_pegs, &mut found);

    let diagrams: Vec<WebDiagram> = found.into_iter().collect();
    let index = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    Ok(WebWorld { graph: graph.clone(), diagrams, index })
}

fn assign_peg(
    peg: usize,
    pegs: &[&Vec<(usize, usize)>],
    slots: &[(u32, u32)],
    heights: &mut [[u32; 2]],
    n_pegs: u32,
    found: &mut BTreeSet<WebDiagram>,
) {
    if peg == pegs.len() {
        let edges = slots
            .iter()
            .zip(heights.iter())
            .map(|(&(a, b), h)| Edge::new(a, b, h[0], h[1]))
            .collect();
        found.insert(WebDiagram::from_edges_unchecked(edges, n_pegs));
        return;
    }
    let ends = pegs[peg];
    let mut perm: Vec<u32> = (1..=ends.len() as u32).collect();
    loop {
        for (&(s, side), &h) in ends.iter().zip(&perm) {
            heights[s][side] = h;
        }
        assign_peg(peg + 1, pegs, slots, heights, n_pegs, found);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}
