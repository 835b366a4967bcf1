//! Web diagrams, the stacking sum and the flip.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// An edge from height `c` on peg `a` to height `d` on peg `b`.
///
/// Pegs and heights are 1-based. Field order gives the canonical
/// lexicographic order on edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Edge {
    pub const fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Edge { a, b, c, d }
    }

    /// Height of this edge's endpoint on `peg`, if it touches it.
    pub fn height_on(&self, peg: u32) -> Option<u32> {
        if peg == self.a {
            Some(self.c)
        } else if peg == self.b {
            Some(self.d)
        } else {
            None
        }
    }

    pub fn as_tuple(&self) -> (u32, u32, u32, u32) {
        (self.a, self.b, self.c, self.d)
    }
}

impl From<(u32, u32, u32, u32)> for Edge {
    fn from((a, b, c, d): (u32, u32, u32, u32)) -> Self {
        Edge { a, b, c, d }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

/// A web diagram in canonical form: edges sorted, on an explicit peg set
/// `[1, n_pegs]` which may contain pegs without edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WebDiagram {
    // Field order matters for the derived Ord: edges first.
    edges: Vec<Edge>,
    n_pegs: u32,
}

/// Checks both conditions of a web diagram and returns the canonical form.
pub fn validate_diagram<I, E>(raw_edges: I, n_pegs: u32) -> Result<WebDiagram>
where
    I: IntoIterator<Item = E>,
    E: Into<Edge>,
{
    let edges: Vec<Edge> = raw_edges.into_iter().map(Into::into).collect();
    let mut heights: Vec<Vec<u32>> = vec![Vec::new(); n_pegs as usize + 1];
    for e in &edges {
        if e.a == 0 || e.a >= e.b {
            return Err(Error::EdgeOrder { a: e.a, b: e.b });
        }
        if e.b > n_pegs {
            return Err(Error::PegOutOfRange { peg: e.b, n_pegs });
        }
        for (peg, h) in [(e.a, e.c), (e.b, e.d)] {
            if h == 0 {
                return Err(Error::ZeroHeight { peg });
            }
            heights[peg as usize].push(h);
        }
    }
    for (peg, hs) in heights.iter_mut().enumerate() {
        hs.sort_unstable();
        let count = hs.len() as u32;
        for w in hs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateHeight { peg: peg as u32, height: w[0] });
            }
        }
        if let Some(&top) = hs.last() {
            if top != count {
                return Err(Error::HeightGap { peg: peg as u32, count, height: top });
            }
        }
    }
    Ok(WebDiagram::from_edges_unchecked(edges, n_pegs))
}

impl WebDiagram {
    /// The diagram with no edges on `n_pegs` pegs.
    pub fn empty(n_pegs: u32) -> Self {
        WebDiagram { edges: Vec::new(), n_pegs }
    }

    /// Sorts into canonical form without checking validity. Callers must
    /// only pass edge sets that are already valid diagrams.
    pub(crate) fn from_edges_unchecked(mut edges: Vec<Edge>, n_pegs: u32) -> Self {
        edges.sort_unstable();
        WebDiagram { edges, n_pegs }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn n_pegs(&self) -> u32 {
        self.n_pegs
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `(p_1(D), ..., p_n(D))`: the number of edge endpoints on each peg.
    pub fn pegs_vector(&self) -> Vec<u32> {
        let mut p = vec![0; self.n_pegs as usize];
        for e in &self.edges {
            p[e.a as usize - 1] += 1;
            p[e.b as usize - 1] += 1;
        }
        p
    }

    /// Pegs incident with at least one edge. Isolated pegs are excluded.
    pub fn peg_set(&self) -> BTreeSet<u32> {
        self.edges.iter().flat_map(|e| [e.a, e.b]).collect()
    }

    /// Same diagram on a larger peg set.
    pub fn with_n_pegs(&self, n_pegs: u32) -> Result<Self> {
        if let Some(e) = self.edges.iter().find(|e| e.b > n_pegs) {
            return Err(Error::PegOutOfRange { peg: e.b, n_pegs });
        }
        Ok(WebDiagram { edges: self.edges.clone(), n_pegs })
    }

    /// Renumbers every peg `i` to `i + offset` on a peg set of `n_pegs`.
    pub fn shift_pegs(&self, offset: u32, n_pegs: u32) -> Result<Self> {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(e.a + offset, e.b + offset, e.c, e.d))
            .collect();
        if let Some(e) = edges.iter().find(|e| e.b > n_pegs) {
            return Err(Error::PegOutOfRange { peg: e.b, n_pegs });
        }
        Ok(WebDiagram { edges, n_pegs })
    }

    /// Image of one of this diagram's edges under [`flip`].
    pub fn flip_edge(&self, e: &Edge) -> Edge {
        let p = self.pegs_vector();
        Edge::new(
            e.a,
            e.b,
            p[e.a as usize - 1] + 1 - e.c,
            p[e.b as usize - 1] + 1 - e.d,
        )
    }

    pub fn flip(&self) -> Self {
        flip(self)
    }
}

impl fmt::Display for WebDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `D ⊕ D'`: places `top` above `bottom`, shifting each of its heights by
/// the number of `bottom` endpoints on the same peg.
///
/// The result lives on the larger of the two peg sets.
pub fn diagram_sum(bottom: &WebDiagram, top: &WebDiagram) -> WebDiagram {
    let n_pegs = bottom.n_pegs.max(top.n_pegs);
    let mut p = bottom.pegs_vector();
    p.resize(n_pegs as usize, 0);
    let mut edges = bottom.edges.clone();
    edges.extend(top.edges.iter().map(|e| {
        Edge::new(e.a, e.b, e.c + p[e.a as usize - 1], e.d + p[e.b as usize - 1])
    }));
    WebDiagram::from_edges_unchecked(edges, n_pegs)
}

/// Folds [`diagram_sum`] left to right; the empty list gives the empty
/// diagram on `n_pegs` pegs.
pub fn diagram_sum_all<'a, I>(parts: I, n_pegs: u32) -> WebDiagram
where
    I: IntoIterator<Item = &'a WebDiagram>,
{
    parts
        .into_iter()
        .fold(WebDiagram::empty(n_pegs), |acc, d| diagram_sum(&acc, d))
}

/// Turns the diagram upside down: height `c` on a peg carrying `p`
/// endpoints becomes `p + 1 - c`.
pub fn flip(d: &WebDiagram) -> WebDiagram {
    let p = d.pegs_vector();
    let edges = d
        .edges
        .iter()
        .map(|e| {
            Edge::new(
                e.a,
                e.b,
                p[e.a as usize - 1] + 1 - e.c,
                p[e.b as usize - 1] + 1 - e.d,
            )
        })
        .collect();
    WebDiagram::from_edges_unchecked(edges, d.n_pegs)
}
