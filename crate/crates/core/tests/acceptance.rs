//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p webworld --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use webworld::colouring::colouring_profile;
use webworld::decomposition::{comparability_graph, decompose, omega, theta};
use webworld::identities::{fubini_log_identity, identity_sum, two_peg_triple_sum, DiagonalSpec};
use webworld::matrices::{
    check_flip_symmetry, check_square, colouring_matrix_of_graph, verify_idempotent, DisjointPair,
};
use webworld::polyalg::counts::{s_count, s_count_closed_form};
use webworld::polyalg::diamond::diamond_power;
use webworld::polyalg::series::inner_sum_identity;
use webworld::polyalg::{binomial, fubini, l_series, n_count};
use webworld::words::{conjecture_report, f_word, two_peg_diagonal, two_peg_diagonal_direct, two_peg_trace};
use webworld::{
    black_diamond, decomposition_poset, ColouringMatrix, Limits, Poly, Rat, WebDiagram, WebGraph,
};

fn limits() -> Limits {
    Limits::default()
}

fn corpus() -> &'static [ColouringMatrix] {
    static CORPUS: OnceLock<Vec<ColouringMatrix>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        graph_corpus(6, 5)
            .iter()
            .map(|g| colouring_matrix_of_graph(g, &limits()).unwrap())
            .collect()
    })
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn ac1() -> String {
    let m = colouring_matrix_of_graph(&WebGraph::k2(2), &limits()).unwrap();
    let d1 = diag(&[(1, 2, 1, 2), (1, 2, 2, 1)], 2);
    let d2 = diag(&[(1, 2, 1, 1), (1, 2, 2, 2)], 2);
    let order = [&d1, &d2];
    let expected_m = [[poly(&[0, 1]), poly(&[0, 0, 2])], [Poly::zero(), poly(&[0, 1, 2])]];
    let expected_r = [[rat(1), rat(-1)], [rat(0), rat(0)]];
    let r = m.to_mixing();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(m.entry_of(order[i], order[j]).unwrap(), &expected_m[i][j]);
            assert_eq!(r.entry_of(order[i], order[j]).unwrap(), &expected_r[i][j]);
        }
    }
    "M = [[x, 2x^2], [0, x + 2x^2]], R = [[1, -1], [0, 0]]".into()
}

fn ac2() -> String {
    let xx2 = poly(&[0, 1, 1]);
    assert_eq!(black_diamond(&[xx2.clone(), xx2]).unwrap(), poly(&[0, 1, 7, 12, 6]));
    for n in 1..=6usize {
        let expected = Poly::monomial(n as i64, n) + Poly::monomial(n as i64 + 1, n + 1);
        assert_eq!(black_diamond(&[Poly::x(), Poly::monomial(1, n)]).unwrap(), expected, "x◆x^{n}");
    }
    for n in 1..=5u64 {
        let mut expected = Poly::zero();
        for k in 0..=n {
            let c: BigInt = binomial(n + k, k) * binomial(n, k);
            expected = expected + Poly::monomial(c, (n + k) as usize);
        }
        let xn = Poly::monomial(1, n as usize);
        assert_eq!(black_diamond(&[xn.clone(), xn]).unwrap(), expected, "x^{n}◆x^{n}");
    }
    for m in 1..=8u32 {
        assert_eq!(diamond_power(&Poly::x(), m).unwrap(), fubini(m as u64), "x^◆{m}");
        let ones = vec![Poly::x(); m as usize];
        assert_eq!(black_diamond(&ones).unwrap(), fubini(m as u64));
    }
    "(x+x^2)◆(x+x^2), x◆x^n (n<=6), x^n◆x^n (n<=5), x^◆m = F_m (m<=8)".into()
}

fn ac3() -> String {
    for (i, row) in l_table().iter().enumerate() {
        assert_eq!(&l_series(i as u32), row, "L_{i}");
    }
    "L_0..L_6 equal the table rows".into()
}

fn ac4() -> String {
    let worlds = corpus();
    assert!(worlds.len() >= 30, "corpus has {} graphs", worlds.len());
    let mut entries = 0;
    for m in worlds {
        let report = verify_idempotent(&m.to_mixing());
        assert!(report.holds(), "{}: {}", m.world().graph(), report.failure.unwrap());
        entries += report.checked;
    }
    format!("R^2 = R on {} worlds ({} entries)", worlds.len(), entries)
}

fn ac5() -> String {
    let mut n = 0;
    for m in corpus().iter().filter(|m| m.world().edge_count() <= 4) {
        let report = check_square(m);
        assert!(report.holds(), "{}: {}", m.world().graph(), report.failure.unwrap());
        n += 1;
    }
    format!("T(M) = M^2 on {n} worlds with <= 4 edges")
}

fn ac6() -> String {
    let mut pairs = 0;
    for m in corpus() {
        let report = check_flip_symmetry(m);
        assert!(report.holds(), "{}: {}", m.world().graph(), report.failure.unwrap());
        pairs += report.checked;
    }
    format!("M(D,D') = M(flip D, flip D') for {pairs} entry pairs")
}

fn ac7() -> String {
    let small: Vec<WebGraph> = graph_corpus(4, 3);
    let mut pairs = 0;
    for (i, g1) in small.iter().enumerate() {
        for g2 in small.iter().skip(i).step_by(3) {
            let pair = DisjointPair::build(g1, g2, &limits()).unwrap();
            let report = pair.check();
            assert!(report.holds(), "{g1} + {g2}: {}", report.failure.unwrap());
            assert!(pair.union.to_mixing().is_zero());
            assert_eq!(pair.union.trace(), pair.trace_from_parts().unwrap());
            pairs += 1;
        }
    }
    assert!(pairs >= 10);
    format!("{pairs} disjoint pairs: union entries are ◆ of parts, mixing matrix zero, trace corollary")
}

fn ac8() -> String {
    for m in 2..=10 {
        assert!(fubini_log_identity(m).unwrap().is_zero(), "m={m}");
    }
    let m22 = colouring_matrix_of_graph(&WebGraph::k2(2), &limits()).unwrap();
    let spec = DiagonalSpec::from_matrix(&m22);
    let mut sorted = spec.polys().to_vec();
    sorted.sort_by_key(|p| p.degree());
    assert_eq!(sorted, vec![Poly::x(), poly(&[0, 1, 2])]);
    assert_eq!(spec.mults(), &[1, 1]);
    for m in 2..=4 {
        assert!(identity_sum(&spec, m).unwrap().is_zero(), "m={m}");
        assert!(two_peg_triple_sum(m).unwrap().is_zero(), "m={m}");
    }
    "fubini-log sum = 0 for m in 2..=10; two-peg world identity = 0 for m in 2..=4".into()
}

fn ac9() -> String {
    let d = diag(&[(1, 2, 1, 1), (1, 3, 2, 1), (1, 4, 3, 1), (3, 5, 2, 3), (5, 6, 2, 1), (5, 7, 1, 1)], 7);
    let d2 = diag(&[(1, 2, 1, 1), (1, 3, 2, 1), (1, 4, 3, 1), (2, 7, 2, 3), (6, 7, 1, 2), (5, 7, 1, 1)], 7);
    let diagonal = |x: &WebDiagram| -> Poly {
        let counts = colouring_profile(x, &limits()).unwrap().remove(x).unwrap();
        Poly::new(counts.into_iter().map(BigInt::from).collect())
    };
    assert!(decompose(&d).components_distinct() && decompose(&d2).components_distinct());
    let (p, p2) = (decomposition_poset(&d).unwrap(), decomposition_poset(&d2).unwrap());
    assert_ne!(p.covers(), p2.covers());
    let (g, g2) = (comparability_graph(&p), comparability_graph(&p2));
    let (md, md2) = (diagonal(&d), diagonal(&d2));
    assert!(
        g.is_isomorphic(&g2) && md == md2,
        "comp(P(D)) = [{g}] ({} edges), comp(P(D')) = [{g2}] ({} edges); M(D,D) = {md}, M(D',D') = {md2}",
        g.edges().len(),
        g2.edges().len()
    );
    format!("M(D,D) = M(D',D') = {md}; comp(P(D)) ≅ comp(P(D'))")
}

fn ac10() -> String {
    let lim = limits();
    for (i, row) in trace_table().iter().enumerate() {
        assert_eq!(&two_peg_trace(i as u32 + 1, &lim).unwrap(), row, "n={}", i + 1);
    }
    for n in 1..=4 {
        for (p, direct) in two_peg_diagonal_direct(n, &lim).unwrap() {
            assert_eq!(two_peg_diagonal(&p, &lim).unwrap(), direct, "{p}");
        }
    }
    let w: Vec<char> = "cbabac".chars().collect();
    assert_eq!(f_word(&w, &lim).unwrap(), poly(&[0, 1, 6, 17, 26, 22, 8]));
    "traces n = 1..7 match the table; diagonals match W_n for n <= 4; F_cbabac".into()
}

fn ac11() -> String {
    let expected = [2u64, 8, 42, 264, 1920, 15840];
    let mut shifted = true;
    let mut plain = false;
    for (n, &a) in (2..=7).zip(&expected) {
        let r = conjecture_report(n, &limits()).unwrap();
        assert_eq!(r.a_n, BigInt::from(a), "n={n}");
        shifted &= r.matches_shifted;
        plain |= r.matches;
    }
    format!(
        "a_2..a_7 = 2,8,42,264,1920,15840; a_n = formula(n+1): {shifted}; a_n = formula(n) anywhere: {plain}"
    )
}

fn ac12() -> String {
    for k in 0..=4u32 {
        for m in 1..=3usize {
            let mut rows = vec![0u32; m];
            loop {
                let want = big(brute_fillings(k, &rows));
                assert_eq!(s_count(k, &rows), want, "k={k} rows={rows:?}");
                assert_eq!(s_count_closed_form(k, &rows).unwrap(), want);
                let Some(pos) = rows.iter().position(|&r| r < 3) else { break };
                rows[pos] += 1;
                rows[..pos].iter_mut().for_each(|r| *r = 0);
            }
        }
    }
    for m in 1..=4usize {
        for n in 1..=4usize {
            for (r, &want) in brute_matrices(m, n).iter().enumerate() {
                assert_eq!(n_count(r as u64, m as u64, n as u64), big(want));
            }
        }
    }
    let lim = limits();
    let posets = small_posets();
    for p in &posets {
        for l in 0..=6u32 {
            let mut rhs = BigInt::zero();
            for k in 0..=l {
                let t = binomial(l as u64, k as u64) * omega(p, k, &lim).unwrap();
                if (l - k) % 2 == 0 {
                    rhs += t;
                } else {
                    rhs -= t;
                }
            }
            assert_eq!(BigInt::from(theta(p, l, &lim).unwrap()), rhs);
        }
    }
    for n in 1..=8u32 {
        for k in 1..=n {
            let want = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
            assert_eq!(inner_sum_identity(n, k).unwrap(), want);
        }
    }
    format!("s_count, n_count, Θ/Ω on {} posets, F(n,k) = (-1)^(k-1) for n <= 8", posets.len())
}

type Criterion = (&'static str, fn() -> String, u64);

fn main() {
    let criteria: [Criterion; 12] = [
        ("AC-1 two-peg world matrices", ac1, 1),
        ("AC-2 black diamond table", ac2, 1),
        ("AC-3 L-series table", ac3, 1),
        ("AC-4 idempotency on corpus", ac4, 120),
        ("AC-5 square theorem", ac5, 60),
        ("AC-6 flip theorem", ac6, 120),
        ("AC-7 disjoint-union decomposition", ac7, 60),
        ("AC-8 identity engine", ac8, 30),
        ("AC-9 comparability instance", ac9, 30),
        ("AC-10 two-peg suite", ac10, 120),
        ("AC-11 conjecture report", ac11, 60),
        ("AC-12 oracle suites", ac12, 60),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run, secs) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let took = start.elapsed();
        match outcome {
            Ok(detail) if took <= Duration::from_secs(secs) => {
                println!("[PASS] {name} ({:.2?}): {detail}", took);
            }
            Ok(detail) => {
                failed += 1;
                println!("[FAIL] {name} ({:.2?} > {secs}s): {detail}", took);
            }
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("[FAIL] {name} ({:.2?}): {msg}", took);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
