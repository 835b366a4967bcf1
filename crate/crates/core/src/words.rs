//! Word reconstruction polynomials and the two-peg world of permutations.
//!
//! For a word `w`, `f_w(k)` counts the ways to read `w` off itself in `k`
//! left-to-right passes, each pass picking up at least one letter, so that
//! the letters collected (pass 1 first) spell `w` again.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinat::{for_each_map, is_onto, next_permutation, pow_u128};
use crate::diagram::{Edge, WebDiagram};
use crate::matrices::colouring_matrix;
use crate::polyalg::counts::factorial;
use crate::polyalg::Poly;
use crate::world::{enumerate_world, WebGraph};
use crate::{Error, Limits, Result};

fn check_word_len(len: usize, limits: &Limits) -> Result<()> {
    Limits::check("word length", len as u128, limits.word_len as u128)
}

/// `F_w(x) = Σ_k f_w(k) x^k`.
///
/// Reading vectors are built one output letter at a time: the next letter of
/// `w` either continues the current pass at a later position or opens a new
/// pass. Counts are memoised on the set of positions read and the last one.
pub fn f_word<T: Eq>(w: &[T], limits: &Limits) -> Result<Poly> {
    check_word_len(w.len(), limits)?;
    if w.is_empty() {
        return Err(Error::InvalidInput("empty word".into()));
    }
    let mut memo = HashMap::new();
    let by_passes = passes_from(w, 0, usize::MAX, &mut memo);
    Ok(Poly::new(by_passes.into_iter().map(BigInt::from).collect()))
}

// Index j of the result counts completions that open j more passes.
fn passes_from<T: Eq>(
    w: &[T],
    read: u32,
    last: usize,
    memo: &mut HashMap<(u32, usize), Vec<u64>>,
) -> Vec<u64> {
    let t = read.count_ones() as usize;
    if t == w.len() {
        return vec![1];
    }
    if let Some(hit) = memo.get(&(read, last)) {
        return hit.clone();
    }
    let mut out = vec![0u64; w.len() - t + 1];
    for i in 0..w.len() {
        if read & (1 << i) != 0 || w[i] != w[t] {
            continue;
        }
        let rest = passes_from(w, read | (1 << i), i, memo);
        // a new pass may always start at i; the current one continues only rightwards
        let continues = last != usize::MAX && i > last;
        for (j, c) in rest.into_iter().enumerate() {
            out[j + 1] += c;
            if continues {
                out[j] += c;
            }
        }
    }
    memo.insert((read, last), out.clone());
    out
}

/// `F_w` straight from the definition: every onto map `[1,n] → [1,k]` is a
/// candidate reading vector.
pub fn f_word_brute<T: Eq>(w: &[T], limits: &Limits) -> Result<Poly> {
    check_word_len(w.len(), limits)?;
    let n = w.len();
    let cost: u128 = (1..=n as u128).map(|k| pow_u128(k, n as u32)).sum();
    Limits::check("reading vector enumeration", cost, limits.colourings)?;
    let mut counts = vec![0u64; n + 1];
    for k in 1..=n as u32 {
        for_each_map(n, k, |r| {
            if !is_onto(r, k) {
                return;
            }
            let read = (1..=k).flat_map(|p| (0..n).filter(move |&i| r[i] == p));
            if read.zip(w).all(|(i, c)| w[i] == *c) {
                counts[k as usize] += 1;
            }
        });
    }
    Ok(Poly::new(counts.into_iter().map(BigInt::from).collect()))
}

/// A permutation of `[1, n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidInput(format!(
                    "{one_line:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: u32) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut p: Vec<u32> = (1..=n).collect();
        let mut out = vec![Permutation(p.clone())];
        while next_permutation(&mut p) {
            out.push(Permutation(p.clone()));
        }
        out
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings such as `"2134"`, so at most nine letters.
    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::InvalidInput(format!("bad permutation digit {c:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::new(digits)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// Splits `p = σ_1 + ... + σ_k` into indecomposable blocks, each returned
/// standardised to `[1, len]`.
pub fn perm_decompose(p: &Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    let (mut start, mut max) = (0usize, 0u32);
    for (i, &v) in p.0.iter().enumerate() {
        max = max.max(v);
        if max as usize == i + 1 {
            out.push(Permutation(p.0[start..=i].iter().map(|&v| v - start as u32).collect()));
            start = i + 1;
        }
    }
    out
}

pub fn is_indecomposable_perm(p: &Permutation) -> bool {
    perm_decompose(p).len() == 1
}

/// `D_π = {(1, 2, i, π_i)}`.
pub fn two_peg_diagram(p: &Permutation) -> WebDiagram {
    let edges = p
        .0
        .iter()
        .enumerate()
        .map(|(i, &v)| Edge::new(1, 2, i as u32 + 1, v))
        .collect();
    WebDiagram::from_edges_unchecked(edges, 2)
}

/// The word of `p`'s blocks: equal blocks get equal letters, numbered by
/// first appearance.
pub fn component_word(p: &Permutation) -> Vec<u32> {
    let mut letters: Vec<Permutation> = Vec::new();
    perm_decompose(p)
        .into_iter()
        .map(|c| match letters.iter().position(|l| *l == c) {
            Some(i) => i as u32,
            None => {
                letters.push(c);
                letters.len() as u32 - 1
            }
        })
        .collect()
}

/// `M(D_π, D_π)`, as `F_w` of the block word of `π`.
pub fn two_peg_diagonal(p: &Permutation, limits: &Limits) -> Result<Poly> {
    f_word(&component_word(p), limits)
}

fn check_two_peg(n: u32, limits: &Limits) -> Result<()> {
    Limits::check("two-peg size", n as u128, limits.two_peg_n as u128)
}

/// `tr M` for the world of `n` parallel edges between two pegs.
///
/// Permutations are grouped by block word first, so `F_w` runs once per
/// distinct word.
pub fn two_peg_trace(n: u32, limits: &Limits) -> Result<Poly> {
    check_two_peg(n, limits)?;
    let mut words: HashMap<Vec<u32>, u64> = HashMap::new();
    for p in Permutation::all(n) {
        *words.entry(component_word(&p)).or_default() += 1;
    }
    let mut total = Poly::new(Vec::new());
    for (w, count) in words {
        total += &f_word(&w, limits)?.scale(&BigInt::from(count));
    }
    Ok(total)
}

/// Diagonal of the two-peg world's colouring matrix by direct enumeration,
/// keyed by the permutation of each diagram.
pub fn two_peg_diagonal_direct(n: u32, limits: &Limits) -> Result<Vec<(Permutation, Poly)>> {
    check_two_peg(n, limits)?;
    let m = colouring_matrix(&enumerate_world(&WebGraph::k2(n), limits)?, limits)?;
    Ok(Permutation::all(n)
        .into_iter()
        .map(|p| {
            let d = two_peg_diagram(&p);
            let entry = m.entry_of(&d, &d).expect("D_π lies in the world").clone();
            (p, entry)
        })
        .collect())
}

/// `(n-2)! (n^2 - 3n + 4) / 2`.
pub fn conjecture_formula(n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Precondition(format!("formula needs n >= 2, got {n}")));
    }
    let n2 = BigInt::from(n * n + 4 - 3 * n);
    Ok(factorial(n - 2) * n2 / 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: u32,
    /// `[x^{n-1}] tr M` for the two-peg world with `n` edges.
    pub a_n: BigInt,
    /// The formula at `n`.
    pub formula_value: BigInt,
    pub matches: bool,
    /// The formula at `n + 1`.
    pub formula_shifted: BigInt,
    pub matches_shifted: bool,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "a_n = [x^{}] trace = {}", self.n - 1, self.a_n)?;
        writeln!(
            f,
            "formula(n) = {} ({})",
            self.formula_value,
            if self.matches { "match" } else { "no match" }
        )?;
        write!(
            f,
            "formula(n+1) = {} ({})",
            self.formula_shifted,
            if self.matches_shifted { "match" } else { "no match" }
        )
    }
}

pub fn conjecture_report(n: u32, limits: &Limits) -> Result<ConjectureReport> {
    if n < 2 {
        return Err(Error::Precondition(format!("conjecture report needs n >= 2, got {n}")));
    }
    let a_n = two_peg_trace(n, limits)?.coeff(n as usize - 1);
    let formula_value = conjecture_formula(n as u64)?;
    let formula_shifted = conjecture_formula(n as u64 + 1)?;
    Ok(ConjectureReport {
        n,
        matches: a_n == formula_value,
        matches_shifted: a_n == formula_shifted,
        a_n,
        formula_value,
        formula_shifted,
    })
}
