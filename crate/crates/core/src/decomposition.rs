//! Indecomposable components, decomposition posets and order-map counts.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::colouring::relabel;
use crate::combinat::{for_each_map, is_onto, next_permutation, pow_u128};
use crate::diagram::{diagram_sum_all, Edge, WebDiagram};
use crate::polyalg::Poly;
use crate::{Error, Limits, Result};

/// Smallest subset of `d` containing `e` that occupies an initial segment
/// of heights on every peg.
pub fn down_closure(d: &WebDiagram, e: &Edge) -> Vec<Edge> {
    let n = d.n_pegs() as usize;
    let mut inside = vec![false; d.len()];
    let mut top = vec![0u32; n + 1];
    if let Some(pos) = d.edges().iter().position(|x| x == e) {
        inside[pos] = true;
        top[e.a as usize] = e.c;
        top[e.b as usize] = e.d;
    } else {
        return Vec::new();
    }
    let mut changed = true;
    while changed {
        changed = false;
        for (i, x) in d.edges().iter().enumerate() {
            if inside[i] || (x.c > top[x.a as usize] && x.d > top[x.b as usize]) {
                continue;
            }
            inside[i] = true;
            changed = true;
            top[x.a as usize] = top[x.a as usize].max(x.c);
            top[x.b as usize] = top[x.b as usize].max(x.d);
        }
    }
    d.edges()
        .iter()
        .zip(inside)
        .filter_map(|(x, keep)| keep.then_some(*x))
        .collect()
}

/// `D = E_1 ⊕ ... ⊕ E_k` with every `E_i` indecomposable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    components: Vec<WebDiagram>,
    n_pegs: u32,
}

impl Decomposition {
    pub fn components(&self) -> &[WebDiagram] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn peg_sets(&self) -> Vec<BTreeSet<u32>> {
        self.components.iter().map(WebDiagram::peg_set).collect()
    }

    /// Folds the components back together with ⊕.
    pub fn recompose(&self) -> WebDiagram {
        diagram_sum_all(&self.components, self.n_pegs)
    }

    /// True when no two components are equal diagrams.
    pub fn components_distinct(&self) -> bool {
        let set: BTreeSet<&WebDiagram> = self.components.iter().collect();
        set.len() == self.components.len()
    }
}

/// Peels minimal down-closed pieces off the bottom of `d` until nothing is
/// left, then lists them level by level: a component's level is the length
/// of the longest chain of peg-sharing components below it. Within a level
/// the component with the smallest leading edge goes first.
pub fn decompose(d: &WebDiagram) -> Decomposition {
    let peeled = peel(d);
    let pegs: Vec<BTreeSet<u32>> = peeled.iter().map(WebDiagram::peg_set).collect();
    let mut level = vec![0usize; peeled.len()];
    for j in 0..peeled.len() {
        level[j] = (0..j)
            .filter(|&i| !pegs[i].is_disjoint(&pegs[j]))
            .map(|i| level[i] + 1)
            .max()
            .unwrap_or(0);
    }
    let mut order: Vec<usize> = (0..peeled.len()).collect();
    order.sort_by_key(|&i| (level[i], peeled[i].edges()[0]));
    Decomposition {
        components: order.into_iter().map(|i| peeled[i].clone()).collect(),
        n_pegs: d.n_pegs(),
    }
}

fn peel(d: &WebDiagram) -> Vec<WebDiagram> {
    let n_pegs = d.n_pegs();
    let mut rest = d.clone();
    let mut components = Vec::new();
    while !rest.is_empty() {
        let mut closures: Vec<Vec<Edge>> = rest
            .edges()
            .iter()
            .map(|e| down_closure(&rest, e))
            .collect();
        closures.sort();
        closures.dedup();
        let is_subset = |small: &[Edge], big: &[Edge]| small.iter().all(|x| big.binary_search(x).is_ok());
        let minimal = closures
            .iter()
            .filter(|c| {
                !closures
                    .iter()
                    .any(|o| o.len() < c.len() && is_subset(o, c))
            })
            .min_by_key(|c| c[0])
            .expect("nonempty diagram has a closure")
            .clone();
        let remaining: Vec<Edge> = rest
            .edges()
            .iter()
            .filter(|x| minimal.binary_search(x).is_err())
            .copied()
            .collect();
        components.push(WebDiagram::from_edges_unchecked(minimal, n_pegs));
        rest = relabel(&remaining, n_pegs);
    }
    components
}

pub fn is_indecomposable(d: &WebDiagram) -> Result<bool> {
    if d.is_empty() {
        return Err(Error::Precondition("the empty diagram has no components".into()));
    }
    Ok(decompose(d).len() == 1)
}

/// A finite partial order on `0..size`, stored as its full `≤` relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Reflexive-transitive closure of the given strict relations.
    pub fn from_relations(size: usize, less: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(x, y) in less {
            if x >= size || y >= size {
                return Err(Error::InvalidInput(format!("relation ({x},{y}) out of range")));
            }
            leq[x * size + y] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..size {
            for j in 0..size {
                if i != j && leq[i * size + j] && leq[j * size + i] {
                    return Err(Error::InvalidInput(format!("cycle through {i} and {j}")));
                }
            }
        }
        Ok(Poset { size, leq })
    }

    pub fn chain(size: usize) -> Self {
        let rel: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        Poset::from_relations(size, &rel).unwrap()
    }

    pub fn antichain(size: usize) -> Self {
        Poset::from_relations(size, &[]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.less(x, y) && !(0..self.size).any(|z| self.less(x, z) && self.less(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// The decomposition poset: `E_i < E_j` when `i < j` and their peg sets
/// meet, closed reflexively and transitively.
pub fn decomposition_poset(d: &WebDiagram) -> Result<Poset> {
    if d.is_empty() {
        return Err(Error::Precondition("the empty diagram has no components".into()));
    }
    Ok(poset_of(&decompose(d)))
}

pub fn poset_of(dec: &Decomposition) -> Poset {
    let pegs = dec.peg_sets();
    let mut rel = Vec::new();
    for i in 0..pegs.len() {
        for j in i + 1..pegs.len() {
            if !pegs[i].is_disjoint(&pegs[j]) {
                rel.push((i, j));
            }
        }
    }
    Poset::from_relations(pegs.len(), &rel).expect("index order is acyclic")
}

/// Undirected graph joining comparable elements of a poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompGraph {
    size: usize,
    adj: Vec<bool>,
}

impl CompGraph {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x * self.size + y]
    }

    /// Edges `(x, y)` with `x < y`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in x + 1..self.size {
                if self.adjacent(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Isomorphism by trying every vertex bijection; fine for the handful of
    /// components a desk-sized diagram has.
    pub fn is_isomorphic(&self, other: &CompGraph) -> bool {
        if self.size != other.size || self.edges().len() != other.edges().len() {
            return false;
        }
        let mut perm: Vec<usize> = (0..self.size).collect();
        loop {
            let fits = (0..self.size).all(|x| {
                (0..self.size).all(|y| self.adjacent(x, y) == other.adjacent(perm[x], perm[y]))
            });
            if fits {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

impl fmt::Display for CompGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices:", self.size)?;
        for (x, y) in self.edges() {
            write!(f, " {}-{}", x + 1, y + 1)?;
        }
        Ok(())
    }
}

pub fn comparability_graph(p: &Poset) -> CompGraph {
    let n = p.size;
    let mut adj = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            adj[x * n + y] = p.less(x, y) || p.less(y, x);
        }
    }
    CompGraph { size: n, adj }
}

fn count_maps(p: &Poset, l: u32, onto: bool, limits: &Limits) -> Result<u64> {
    Limits::check("poset maps", pow_u128(l as u128, p.size as u32), limits.poset_maps)?;
    let mut count = 0;
    for_each_map(p.size, l, |f| {
        if onto && !is_onto(f, l) {
            return;
        }
        let monotone = (0..p.size).all(|x| (0..p.size).all(|y| !p.leq(x, y) || f[x] <= f[y]));
        if monotone {
            count += 1;
        }
    });
    Ok(count)
}

/// `Ω(P, ℓ)`: maps `f: P → [1, ℓ]` with `x ⪯ y ⇒ f(x) ≤ f(y)`.
pub fn omega(p: &Poset, l: u32, limits: &Limits) -> Result<u64> {
    count_maps(p, l, false, limits)
}

/// `Θ(P, ℓ)`: the surjective maps counted by [`omega`].
pub fn theta(p: &Poset, l: u32, limits: &Limits) -> Result<u64> {
    count_maps(p, l, true, limits)
}

/// `Σ_ℓ Θ(P(D), ℓ) x^ℓ`, which is `M(D, D)` when the indecomposable
/// components of `d` are pairwise distinct.
pub fn diagonal_poly_via_poset(d: &WebDiagram, limits: &Limits) -> Result<Poly> {
    let dec = decompose(d);
    if dec.is_empty() {
        return Err(Error::Precondition("the empty diagram has no components".into()));
    }
    if !dec.components_distinct() {
        return Err(Error::Precondition(format!(
            "components of {d} repeat; the order-map count would undercount M(D,D)"
        )));
    }
    let p = poset_of(&dec);
    let mut coeffs = vec![BigInt::from(0)];
    for l in 1..=p.size() as u32 {
        coeffs.push(BigInt::from(theta(&p, l, limits)?));
    }
    Ok(Poly::new(coeffs))
}
