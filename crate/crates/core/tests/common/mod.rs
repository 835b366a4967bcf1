#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use webworld::decomposition::Poset;
use webworld::diagram::Edge;
use webworld::{Poly, WebDiagram, WebGraph};

pub fn poly(c: &[i64]) -> Poly {
    Poly::from_i64s(c)
}

pub fn diag(edges: &[(u32, u32, u32, u32)], n_pegs: u32) -> WebDiagram {
    webworld::validate_diagram(edges.iter().copied(), n_pegs).unwrap()
}

/// Rows `0..=6` of the L-series table.
pub fn l_table() -> Vec<Poly> {
    vec![
        poly(&[1]),
        poly(&[0, 0, 1]),
        poly(&[0, 0, 0, 2, 2]),
        poly(&[0, 0, 0, 0, 6, 12, 6]),
        poly(&[0, 0, 0, 0, 1, 26, 73, 72, 24]),
        poly(&[0, 0, 0, 0, 0, 12, 156, 516, 732, 480, 120]),
        poly(&[0, 0, 0, 0, 0, 2, 126, 1206, 4322, 7680, 7320, 3600, 720]),
    ]
}

/// Traces of the two-peg worlds, `n = 1..=7`.
pub fn trace_table() -> Vec<Poly> {
    vec![
        poly(&[0, 1]),
        poly(&[0, 2, 2]),
        poly(&[0, 6, 8, 6]),
        poly(&[0, 24, 30, 42, 24]),
        poly(&[0, 120, 116, 216, 264, 120]),
        poly(&[0, 720, 532, 1002, 1920, 1920, 720]),
        poly(&[0, 5040, 2848, 4626, 11688, 19200, 15840, 5040]),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

type LabeledEdge = (usize, usize, u32);

fn canonical(v: usize, edges: &[(usize, usize, u32)], perms: &[Vec<usize>]) -> Vec<(usize, usize, u32)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize, u32)> = edges
                .iter()
                .map(|&(i, j, m)| {
                    let (a, b) = (p[i], p[j]);
                    (a.min(b), a.max(b), m)
                })
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_else(|| {
            assert_eq!(v, 0);
            Vec::new()
        })
}

fn label_assignments(slots: usize, budget: u32) -> Vec<Vec<u32>> {
    if slots == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in 0..=budget {
        for mut rest in label_assignments(slots - 1, budget - m) {
            rest.insert(0, m);
            out.push(rest);
        }
    }
    out
}

/// Every web graph with no isolated peg, at most `max_pegs` pegs and total
/// label at most `max_label`, one per isomorphism class.
pub fn graph_corpus(max_pegs: usize, max_label: u32) -> Vec<WebGraph> {
    let mut seen: BTreeSet<(usize, Vec<LabeledEdge>)> = BTreeSet::new();
    for v in 2..=max_pegs {
        let perms = permutations(v);
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
        for labels in label_assignments(pairs.len(), max_label) {
            let edges: Vec<(usize, usize, u32)> = pairs
                .iter()
                .zip(&labels)
                .filter(|(_, &m)| m > 0)
                .map(|(&(i, j), &m)| (i, j, m))
                .collect();
            let mut covered = vec![false; v];
            for &(i, j, _) in &edges {
                covered[i] = true;
                covered[j] = true;
            }
            if edges.is_empty() || covered.contains(&false) {
                continue;
            }
            seen.insert((v, canonical(v, &edges, &perms)));
        }
    }
    seen.into_iter()
        .map(|(v, edges)| {
            WebGraph::new(
                v as u32,
                edges.into_iter().map(|(i, j, m)| (i as u32 + 1, j as u32 + 1, m)),
            )
            .unwrap()
        })
        .collect()
}

/// Direct count of `rows.len() × k` 0-1 arrays with the given row sums and
/// no zero column.
pub fn brute_fillings(k: u32, rows: &[u32]) -> u64 {
    let cells = rows.len() * k as usize;
    let mut count = 0;
    for mask in 0u64..(1u64 << cells) {
        let bit = |r: usize, c: usize| mask >> (r * k as usize + c) & 1 == 1;
        let rows_ok = rows
            .iter()
            .enumerate()
            .all(|(r, &want)| (0..k as usize).filter(|&c| bit(r, c)).count() == want as usize);
        let cols_ok = (0..k as usize).all(|c| (0..rows.len()).any(|r| bit(r, c)));
        if rows_ok && cols_ok {
            count += 1;
        }
    }
    count
}

/// Direct counts of `m × n` 0-1 matrices with no zero row or column,
/// indexed by the number of ones.
pub fn brute_matrices(m: usize, n: usize) -> Vec<u64> {
    let cells = m * n;
    let mut counts = vec![0u64; cells + 1];
    for mask in 0u64..(1u64 << cells) {
        let bit = |i: usize, j: usize| mask >> (i * n + j) & 1 == 1;
        let rows_ok = (0..m).all(|i| (0..n).any(|j| bit(i, j)));
        let cols_ok = (0..n).all(|j| (0..m).any(|i| bit(i, j)));
        if rows_ok && cols_ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Every poset on `size ≤ 4` labelled elements whose order extends the
/// index order, plus a few five-element ones.
pub fn small_posets() -> Vec<Poset> {
    let mut out = Vec::new();
    for size in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let rel: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(Poset::from_relations(size, &rel).unwrap());
        }
    }
    let five: [&[(usize, usize)]; 6] = [
        &[],
        &[(0, 1), (1, 2), (2, 3), (3, 4)],
        &[(0, 2), (1, 2), (2, 3), (2, 4)],
        &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
        &[(0, 3), (1, 3), (1, 4), (2, 4)],
        &[(0, 4), (1, 4), (2, 4), (3, 4)],
    ];
    for rel in five {
        out.push(Poset::from_relations(5, rel).unwrap());
    }
    out
}

pub fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Heights on each peg ordered by `keys`, so any key vector gives a valid
/// diagram over the given peg pairs.
pub fn diagram_from_keys(pairs: &[(u32, u32)], keys: &[u32], n_pegs: u32) -> WebDiagram {
    let mut ends: Vec<Vec<(u32, usize, usize)>> = vec![Vec::new(); n_pegs as usize + 1];
    for (s, &(a, b)) in pairs.iter().enumerate() {
        ends[a as usize].push((keys[2 * s], s, 0));
        ends[b as usize].push((keys[2 * s + 1], s, 1));
    }
    let mut h = vec![[0u32; 2]; pairs.len()];
    for peg in &mut ends {
        peg.sort_unstable();
        for (rank, &(_, s, side)) in peg.iter().enumerate() {
            h[s][side] = rank as u32 + 1;
        }
    }
    let edges: Vec<Edge> = pairs
        .iter()
        .zip(&h)
        .map(|(&(a, b), h)| Edge::new(a, b, h[0], h[1]))
        .collect();
    webworld::validate_diagram(edges, n_pegs).unwrap()
}
