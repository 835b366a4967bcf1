//! Colourings, relabelling and reconstruction.
//!
//! A colouring is stored positionally: entry `j` is the colour of the `j`-th
//! edge of the diagram in canonical order.

use std::collections::HashMap;

use crate::combinat::{for_each_map, is_onto, pow_u128};
use crate::diagram::{diagram_sum, Edge, WebDiagram};
use crate::{Error, Limits, Result};

/// A surjective assignment of colours `1..=k` to a diagram's edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<u32>,
    k: u32,
}

impl Colouring {
    pub fn new(colours: Vec<u32>) -> Result<Self> {
        let k = colours.iter().copied().max().unwrap_or(0);
        if !is_onto(&colours, k) {
            return Err(Error::InvalidColouring(format!(
                "{colours:?} is not onto [1,{k}]"
            )));
        }
        Ok(Colouring { colours, k })
    }

    /// Every edge gets colour 1.
    pub fn constant(len: usize) -> Self {
        Colouring { colours: vec![1; len], k: u32::from(len > 0) }
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn num_colours(&self) -> u32 {
        self.k
    }

    /// `k + 1 - α`, the colouring that pairs with a flipped diagram.
    pub fn reversed(&self) -> Self {
        Colouring {
            colours: self.colours.iter().map(|&c| self.k + 1 - c).collect(),
            k: self.k,
        }
    }
}

fn check_length(d: &WebDiagram, alpha: &Colouring) -> Result<()> {
    if alpha.colours.len() != d.len() {
        return Err(Error::InvalidColouring(format!(
            "{} colours for a diagram with {} edges",
            alpha.colours.len(),
            d.len()
        )));
    }
    Ok(())
}

/// `D_α(1), ..., D_α(k)`: the edges of each colour, heights untouched.
pub fn colour_classes(d: &WebDiagram, alpha: &Colouring) -> Result<Vec<Vec<Edge>>> {
    check_length(d, alpha)?;
    let mut classes = vec![Vec::new(); alpha.k as usize];
    for (e, &c) in d.edges().iter().zip(&alpha.colours) {
        classes[c as usize - 1].push(*e);
    }
    Ok(classes)
}

/// Replaces the heights used on each peg by their ranks, keeping their
/// relative order. Heights must be distinct per peg.
pub fn relabel(edges: &[Edge], n_pegs: u32) -> WebDiagram {
    let mut used: Vec<Vec<u32>> = vec![Vec::new(); n_pegs as usize + 1];
    for e in edges {
        used[e.a as usize].push(e.c);
        used[e.b as usize].push(e.d);
    }
    for hs in &mut used {
        hs.sort_unstable();
    }
    let rank = |peg: u32, h: u32| -> u32 {
        used[peg as usize].binary_search(&h).expect("height present") as u32 + 1
    };
    let out = edges
        .iter()
        .map(|e| Edge::new(e.a, e.b, rank(e.a, e.c), rank(e.b, e.d)))
        .collect();
    WebDiagram::from_edges_unchecked(out, n_pegs)
}

/// `R(D, α) = rel(D_α(1)) ⊕ ... ⊕ rel(D_α(k))`.
pub fn reconstruct(d: &WebDiagram, alpha: &Colouring) -> Result<WebDiagram> {
    check_length(d, alpha)?;
    Ok(reconstruct_unchecked(d, &alpha.colours, alpha.k))
}

pub(crate) fn reconstruct_unchecked(d: &WebDiagram, colours: &[u32], k: u32) -> WebDiagram {
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); k as usize];
    for (e, &c) in d.edges().iter().zip(colours) {
        classes[c as usize - 1].push(*e);
    }
    classes.iter().fold(WebDiagram::empty(d.n_pegs()), |acc, class| {
        diagram_sum(&acc, &relabel(class, d.n_pegs()))
    })
}

/// `f(D_1, D_2, ℓ)`: the number of `ℓ`-colourings of `d1` that reconstruct
/// `d2`, by running through all `ℓ^m` colour maps and keeping the onto ones.
pub fn count_colourings(d1: &WebDiagram, d2: &WebDiagram, l: u32, limits: &Limits) -> Result<u64> {
    let m = d1.len();
    Limits::check("colouring enumeration", pow_u128(l as u128, m as u32), limits.colourings)?;
    if l as usize > m {
        return Ok(0);
    }
    let mut count = 0;
    for_each_map(m, l, |colours| {
        if is_onto(colours, l) && reconstruct_unchecked(d1, colours, l) == *d2 {
            count += 1;
        }
    });
    Ok(count)
}

/// Candidate maps examined by [`colouring_profile`]: `Σ_{ℓ=1}^{m} ℓ^m`.
pub fn profile_cost(m: usize) -> u128 {
    (1..=m as u128).fold(0u128, |acc, l| acc.saturating_add(pow_u128(l, m as u32)))
}

/// Every diagram reachable from `d` by reconstruction, with the number of
/// `ℓ`-colourings reaching it at index `ℓ` (index 0 is always zero).
///
/// This is one row of the colouring matrix: the same enumeration as
/// [`count_colourings`], tallied for all targets at once.
pub fn colouring_profile(d: &WebDiagram, limits: &Limits) -> Result<HashMap<WebDiagram, Vec<u64>>> {
    let m = d.len();
    Limits::check("colouring enumeration", profile_cost(m), limits.colourings)?;
    let mut profile: HashMap<WebDiagram, Vec<u64>> = HashMap::new();
    if m == 0 {
        // the empty colouring has no colours and no 1..=k target
        return Ok(profile);
    }
    for l in 1..=m as u32 {
        for_each_map(m, l, |colours| {
            if is_onto(colours, l) {
                let target = reconstruct_unchecked(d, colours, l);
                profile.entry(target).or_insert_with(|| vec![0; m + 1])[l as usize] += 1;
            }
        });
    }
    Ok(profile)
}
