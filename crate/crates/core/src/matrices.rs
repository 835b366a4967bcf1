//! Web-colouring and web-mixing matrices, and exact checks of the identities
//! they satisfy.
//!
//! Rows and columns follow the canonical diagram order of the world.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::colouring::colouring_profile;
use crate::diagram::{diagram_sum, WebDiagram};
use crate::polyalg::series::apply_l_operator;
use crate::polyalg::{black_diamond, fubini, mixing_transform, Poly, Rat};
use crate::world::{enumerate_world, WebGraph, WebWorld};
use crate::{Limits, Result};

/// `M(x)`: entry `(D1, D2)` is `Σ_ℓ f(D1, D2, ℓ) x^ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringMatrix {
    world: WebWorld,
    entries: Vec<Vec<Poly>>,
}

/// `R`: the entrywise mixing transform of the colouring matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixingMatrix {
    world: WebWorld,
    entries: Vec<Vec<Rat>>,
}

pub fn colouring_matrix(world: &WebWorld, limits: &Limits) -> Result<ColouringMatrix> {
    let entries = world
        .diagrams()
        .par_iter()
        .map(|d| {
            let profile = colouring_profile(d, limits)?;
            let mut row = vec![Poly::zero(); world.len()];
            for (target, counts) in profile {
                let j = world
                    .index_of(&target)
                    .expect("reconstruction stays in the world");
                row[j] = Poly::new(counts.into_iter().map(BigInt::from).collect());
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ColouringMatrix { world: world.clone(), entries })
}

/// Enumerates the world of `graph` and builds its colouring matrix.
pub fn colouring_matrix_of_graph(graph: &WebGraph, limits: &Limits) -> Result<ColouringMatrix> {
    colouring_matrix(&enumerate_world(graph, limits)?, limits)
}

pub fn mixing_matrix(world: &WebWorld, limits: &Limits) -> Result<MixingMatrix> {
    Ok(colouring_matrix(world, limits)?.to_mixing())
}

impl ColouringMatrix {
    pub fn world(&self) -> &WebWorld {
        &self.world
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    /// Entry looked up by diagrams; `None` if either is not in the world.
    pub fn entry_of(&self, row: &WebDiagram, col: &WebDiagram) -> Option<&Poly> {
        Some(self.entry(self.world.index_of(row)?, self.world.index_of(col)?))
    }

    pub fn diagonal(&self) -> Vec<Poly> {
        (0..self.size()).map(|i| self.entries[i][i].clone()).collect()
    }

    pub fn trace(&self) -> Poly {
        self.diagonal().into_iter().sum()
    }

    pub fn to_mixing(&self) -> MixingMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| mixing_transform(p).expect("colouring entries have no constant term"))
                    .collect()
            })
            .collect();
        MixingMatrix { world: self.world.clone(), entries }
    }

    /// `M · M` by ordinary polynomial matrix multiplication.
    pub fn square_direct(&self) -> Vec<Vec<Poly>> {
        let n = self.size();
        (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&k| !self.entries[i][k].is_zero() && !self.entries[k][j].is_zero())
                            .map(|k| &self.entries[i][k] * &self.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Squares a colouring matrix without multiplying: each entry
/// `z_1 x + ... + z_n x^n` maps to `Σ z_i L_i(x)`.
pub fn matrix_square_via_l(m: &ColouringMatrix) -> Vec<Vec<Poly>> {
    m.entries
        .iter()
        .map(|row| row.iter().map(apply_l_operator).collect())
        .collect()
}

pub fn trace(m: &ColouringMatrix) -> Poly {
    m.trace()
}

/// The `(D, D')` entry of a disjoint-union world, from the entries of its
/// parts: their black diamond product.
pub fn combine_disjoint_entries(entries: &[Poly]) -> Result<Poly> {
    black_diamond(entries)
}

impl MixingMatrix {
    pub fn world(&self) -> &WebWorld {
        &self.world
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    pub fn entry_of(&self, row: &WebDiagram, col: &WebDiagram) -> Option<&Rat> {
        Some(self.entry(self.world.index_of(row)?, self.world.index_of(col)?))
    }

    pub fn trace(&self) -> Rat {
        (0..self.size()).map(|i| self.entries[i][i].clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }
}

/// A failed entry in one of the matrix checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub row: WebDiagram,
    pub col: WebDiagram,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at row {} col {}: expected {}, found {}",
            self.check, self.row, self.col, self.expected, self.found
        )
    }
}

/// Outcome of a matrix check: how many entries were compared and the first
/// one that disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub failure: Option<Mismatch>,
}

impl Report {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exact test of `R² = R`.
///
/// Entries are scaled by the lcm `L` of all denominators, so the test becomes
/// the integer identity `S² = L·S` for `S = L·R`.
pub fn verify_idempotent(r: &MixingMatrix) -> Report {
    let n = r.size();
    let lcm = r
        .entries
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<Vec<BigInt>> = r
        .entries
        .iter()
        .map(|row| row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect())
        .collect();
    let nonzero: Vec<Vec<usize>> = scaled
        .iter()
        .map(|row| (0..n).filter(|&k| !row[k].is_zero()).collect())
        .collect();
    let bad = (0..n).into_par_iter().find_map_first(|i| {
        (0..n).find_map(|j| {
            let sq: BigInt = nonzero[i].iter().map(|&k| &scaled[i][k] * &scaled[k][j]).sum();
            (sq != &lcm * &scaled[i][j]).then(|| (i, j, Rat::new(sq, &lcm * &lcm)))
        })
    });
    let diagrams = r.world.diagrams();
    Report {
        checked: n * n,
        failure: bad.map(|(i, j, found)| Mismatch {
            check: "idempotency R^2 = R",
            row: diagrams[i].clone(),
            col: diagrams[j].clone(),
            expected: r.entries[i][j].to_string(),
            found: found.to_string(),
        }),
    }
}

/// Every row of `M` sums to `F_m(x)` and every row of `R` to `0` (`m ≥ 2`)
/// or `1` (`m = 1`).
pub fn check_row_sums(m: &ColouringMatrix) -> Report {
    let edges = m.world.edge_count() as u64;
    let target = fubini(edges);
    let r = m.to_mixing();
    let target_r = mixing_transform(&target).unwrap_or_else(|_| Rat::one());
    let diagrams = m.world.diagrams();
    for (i, d) in diagrams.iter().enumerate() {
        let sum: Poly = m.entries[i].iter().cloned().sum();
        if sum != target {
            return Report {
                checked: i + 1,
                failure: Some(Mismatch {
                    check: "colouring row sum = F_m",
                    row: d.clone(),
                    col: d.clone(),
                    expected: target.to_string(),
                    found: sum.to_string(),
                }),
            };
        }
        let rsum: Rat = r.entries[i].iter().cloned().sum();
        if rsum != target_r {
            return Report {
                checked: i + 1,
                failure: Some(Mismatch {
                    check: "mixing row sum",
                    row: d.clone(),
                    col: d.clone(),
                    expected: target_r.to_string(),
                    found: rsum.to_string(),
                }),
            };
        }
    }
    Report { checked: m.size(), failure: None }
}

/// `M(D, D') = M(flip D, flip D')` for every pair.
pub fn check_flip_symmetry(m: &ColouringMatrix) -> Report {
    let diagrams = m.world.diagrams();
    let flipped: Vec<usize> = diagrams
        .iter()
        .map(|d| m.world.index_of(&d.flip()).expect("flip stays in the world"))
        .collect();
    let n = m.size();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&m.entries[i][j], &m.entries[flipped[i]][flipped[j]]);
            if a != b {
                return Report {
                    checked: i * n + j + 1,
                    failure: Some(Mismatch {
                        check: "flip symmetry M(D,D') = M(flip D, flip D')",
                        row: diagrams[i].clone(),
                        col: diagrams[j].clone(),
                        expected: a.to_string(),
                        found: b.to_string(),
                    }),
                };
            }
        }
    }
    Report { checked: n * n, failure: None }
}

/// The `L`-operator image of `M` equals `M · M`.
pub fn check_square(m: &ColouringMatrix) -> Report {
    compare_poly_matrices(
        "square M^2 = T(M)",
        m.world.diagrams(),
        &m.square_direct(),
        &matrix_square_via_l(m),
    )
}

fn compare_poly_matrices(
    check: &'static str,
    diagrams: &[WebDiagram],
    expected: &[Vec<Poly>],
    found: &[Vec<Poly>],
) -> Report {
    let n = expected.len();
    for i in 0..n {
        for j in 0..n {
            if expected[i][j] != found[i][j] {
                return Report {
                    checked: i * n + j + 1,
                    failure: Some(Mismatch {
                        check,
                        row: diagrams[i].clone(),
                        col: diagrams[j].clone(),
                        expected: expected[i][j].to_string(),
                        found: found[i][j].to_string(),
                    }),
                };
            }
        }
    }
    Report { checked: n * n, failure: None }
}

/// Matrices of two worlds and of their disjoint union (second world's pegs
/// shifted past the first's).
#[derive(Debug, Clone)]
pub struct DisjointPair {
    pub first: ColouringMatrix,
    pub second: ColouringMatrix,
    pub union: ColouringMatrix,
}

impl DisjointPair {
    pub fn build(g1: &WebGraph, g2: &WebGraph, limits: &Limits) -> Result<Self> {
        Ok(DisjointPair {
            first: colouring_matrix_of_graph(g1, limits)?,
            second: colouring_matrix_of_graph(g2, limits)?,
            union: colouring_matrix_of_graph(&g1.disjoint_union(g2), limits)?,
        })
    }

    /// `D_1 ⊕ D_2` in the union world.
    pub fn join(&self, d1: &WebDiagram, d2: &WebDiagram) -> WebDiagram {
        let n1 = self.first.world.graph().n_pegs();
        let n = self.union.world.graph().n_pegs();
        let lifted = d1.with_n_pegs(n).expect("first world fits");
        let shifted = d2.shift_pegs(n1, n).expect("second world fits");
        diagram_sum(&lifted, &shifted)
    }

    /// Every union entry equals the black diamond of the component entries,
    /// the union has `|W1|·|W2|` diagrams, and its mixing matrix vanishes.
    pub fn check(&self) -> Report {
        let (w1, w2) = (self.first.world.diagrams(), self.second.world.diagrams());
        let joined: Vec<(usize, usize, usize)> = (0..w1.len())
            .flat_map(|a| (0..w2.len()).map(move |b| (a, b)))
            .map(|(a, b)| {
                let idx = self
                    .union
                    .world
                    .index_of(&self.join(&w1[a], &w2[b]))
                    .expect("joined diagram lies in the union world");
                (a, b, idx)
            })
            .collect();
        let mut checked = 0;
        if joined.len() != self.union.size() {
            return Report {
                checked,
                failure: Some(Mismatch {
                    check: "union world size",
                    row: self.union.world.diagrams()[0].clone(),
                    col: self.union.world.diagrams()[0].clone(),
                    expected: joined.len().to_string(),
                    found: self.union.size().to_string(),
                }),
            };
        }
        for &(a, b, i) in &joined {
            for &(a2, b2, j) in &joined {
                checked += 1;
                let expected = combine_disjoint_entries(&[
                    self.first.entry(a, a2).clone(),
                    self.second.entry(b, b2).clone(),
                ])
                .expect("colouring entries are valid operands");
                let found = self.union.entry(i, j);
                if &expected != found {
                    return Report {
                        checked,
                        failure: Some(Mismatch {
                            check: "disjoint union M(D,D') = M1 ◆ M2",
                            row: self.union.world.diagrams()[i].clone(),
                            col: self.union.world.diagrams()[j].clone(),
                            expected: expected.to_string(),
                            found: found.to_string(),
                        }),
                    };
                }
            }
        }
        let r = self.union.to_mixing();
        let n = r.size();
        for i in 0..n {
            for j in 0..n {
                if !r.entries[i][j].is_zero() {
                    return Report {
                        checked,
                        failure: Some(Mismatch {
                            check: "disjoint union mixing matrix vanishes",
                            row: r.world.diagrams()[i].clone(),
                            col: r.world.diagrams()[j].clone(),
                            expected: "0".into(),
                            found: r.entries[i][j].to_string(),
                        }),
                    };
                }
            }
        }
        Report { checked, failure: None }
    }

    /// Trace of the union against the sum of diamond products of the
    /// component diagonals.
    pub fn trace_from_parts(&self) -> Result<Poly> {
        let mut total = Poly::zero();
        for p in self.first.diagonal() {
            for q in self.second.diagonal() {
                total += &black_diamond(&[p.clone(), q])?;
            }
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::validate_diagram;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn two_peg() -> ColouringMatrix {
        colouring_matrix_of_graph(&WebGraph::k2(2), &Limits::default()).unwrap()
    }

    #[test]
    fn two_peg_matrices() {
        let m = two_peg();
        let d1 = validate_diagram([(1, 2, 1, 2), (1, 2, 2, 1)], 2).unwrap();
        let d2 = validate_diagram([(1, 2, 1, 1), (1, 2, 2, 2)], 2).unwrap();
        assert_eq!(m.entry_of(&d1, &d1), Some(&p(&[0, 1])));
        assert_eq!(m.entry_of(&d1, &d2), Some(&p(&[0, 0, 2])));
        assert_eq!(m.entry_of(&d2, &d1), Some(&Poly::zero()));
        assert_eq!(m.entry_of(&d2, &d2), Some(&p(&[0, 1, 2])));
        let r = m.to_mixing();
        assert_eq!(r.entry_of(&d1, &d1), Some(&rat(1)));
        assert_eq!(r.entry_of(&d1, &d2), Some(&rat(-1)));
        assert_eq!(r.entry_of(&d2, &d1), Some(&rat(0)));
        assert_eq!(r.entry_of(&d2, &d2), Some(&rat(0)));
        assert_eq!(m.trace(), p(&[0, 2, 2]));
    }

    #[test]
    fn single_edge_and_disjoint_edges() {
        let lim = Limits::default();
        let m = colouring_matrix_of_graph(&WebGraph::new(2, [(1, 2, 1)]).unwrap(), &lim).unwrap();
        assert_eq!(m.entries(), &[vec![Poly::x()]]);
        assert_eq!(m.to_mixing().entries(), &[vec![rat(1)]]);
        for k in 2..=4u32 {
            let g = WebGraph::new(2 * k, (0..k).map(|i| (2 * i + 1, 2 * i + 2, 1))).unwrap();
            let m = colouring_matrix_of_graph(&g, &lim).unwrap();
            assert_eq!(m.entries(), &[vec![fubini(k as u64)]]);
            assert!(m.to_mixing().is_zero());
        }
    }

    #[test]
    fn square_and_l_operator_on_two_peg_world() {
        let m = two_peg();
        assert_eq!(m.square_direct(), matrix_square_via_l(&m));
        assert!(check_square(&m).holds());
    }

    #[test]
    fn checks_pass_on_small_worlds() {
        let lim = Limits::default();
        for g in [WebGraph::k2(2), WebGraph::k2(3), WebGraph::new(3, [(1, 2, 1), (2, 3, 2)]).unwrap()] {
            let m = colouring_matrix_of_graph(&g, &lim).unwrap();
            assert!(check_row_sums(&m).holds(), "{g}");
            assert!(check_flip_symmetry(&m).holds(), "{g}");
            assert!(verify_idempotent(&m.to_mixing()).holds(), "{g}");
        }
        let k3 = colouring_matrix_of_graph(&WebGraph::k2(3), &lim).unwrap();
        assert_eq!(k3.trace(), p(&[0, 6, 8, 6]));
    }

    #[test]
    fn idempotency_detects_failure() {
        let mut r = two_peg().to_mixing();
        r.entries[0][0] = rat(2);
        let report = verify_idempotent(&r);
        assert!(!report.holds());
        let zero = MixingMatrix { world: r.world.clone(), entries: vec![vec![rat(0); 2]; 2] };
        assert!(verify_idempotent(&zero).holds());
        let ident = MixingMatrix {
            world: r.world.clone(),
            entries: vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
        };
        assert!(verify_idempotent(&ident).holds());
    }

    #[test]
    fn combine_entries() {
        assert_eq!(combine_disjoint_entries(&[Poly::x(), Poly::x()]).unwrap(), p(&[0, 1, 2]));
        assert_eq!(combine_disjoint_entries(&[Poly::x(), p(&[0, 0, 2])]).unwrap(), p(&[0, 0, 4, 6]));
        let a = p(&[0, 3, 1]);
        assert_eq!(combine_disjoint_entries(std::slice::from_ref(&a)).unwrap(), a);
    }

    #[test]
    fn disjoint_pair_checks() {
        let lim = Limits::default();
        let pair = DisjointPair::build(&WebGraph::k2(2), &WebGraph::new(2, [(1, 2, 1)]).unwrap(), &lim)
            .unwrap();
        assert!(pair.check().holds());
        assert_eq!(pair.union.trace(), pair.trace_from_parts().unwrap());
    }
}
