//! Exact counting numbers: binomials, Stirling numbers, Fubini polynomials,
//! column-surjective 0-1 fillings and 0-1 matrices without empty lines.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Poly;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `m! / (a_1! ... a_s!)` for `a_1 + ... + a_s = m`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    parts.iter().fold(factorial(total), |acc, &a| acc / factorial(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Unsigned: permutations of `n` with `k` cycles.
    First,
    /// Partitions of an `n`-set into `k` blocks.
    Second,
}

/// Stirling numbers from the usual triangle recurrences.
pub fn stirling(n: u64, k: u64, kind: StirlingKind) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // row[j] holds the value for (i, j) while sweeping i = 0..=n
    let mut row = vec![BigInt::zero(); k as usize + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i) as usize).rev() {
            let carried = match kind {
                StirlingKind::First => &row[j] * (i - 1),
                StirlingKind::Second => &row[j] * j as u64,
            };
            row[j] = carried + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k as usize].clone()
}

/// `F_n(x) = Σ_k k! S(n, k) x^k`, with `F_0 = 1`.
pub fn fubini(n: u64) -> Poly {
    Poly::new(
        (0..=n)
            .map(|k| factorial(k) * stirling(n, k, StirlingKind::Second))
            .collect(),
    )
}

type SCountCache = Mutex<HashMap<Vec<u32>, Vec<BigInt>>>;

fn s_count_cache() -> &'static SCountCache {
    static CACHE: OnceLock<SCountCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Number of 0-1 arrays with `rows.len()` rows and `k` columns, `rows[j]`
/// ones in row `j`, and no all-zero column.
///
/// This is the coefficient of `u_1^{i_1} ... u_m^{i_m}` in
/// `((1+u_1)...(1+u_m) - 1)^k`, obtained by expanding the power with
/// degree-truncated convolutions.
pub fn s_count(k: u32, rows: &[u32]) -> BigInt {
    let table = s_count_table(rows);
    table.get(k as usize).cloned().unwrap_or_default()
}

/// `[S_0(rows), S_1(rows), ..., S_{Σ rows}(rows)]`; every later value is zero
/// because each column needs a one.
pub fn s_count_table(rows: &[u32]) -> Vec<BigInt> {
    // Row order and empty rows do not change the count.
    let mut key: Vec<u32> = rows.iter().copied().filter(|&r| r > 0).collect();
    key.sort_unstable();
    if let Some(hit) = s_count_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let table = expand_column_power(&key);
    s_count_cache().lock().unwrap().insert(key, table.clone());
    table
}

fn expand_column_power(degs: &[u32]) -> Vec<BigInt> {
    let strides: Vec<usize> = degs
        .iter()
        .scan(1usize, |acc, &d| {
            let s = *acc;
            *acc *= d as usize + 1;
            Some(s)
        })
        .collect();
    let size: usize = degs.iter().map(|&d| d as usize + 1).product();
    let target = size - 1; // the corner (i_1, ..., i_m)
    let total: u32 = degs.iter().sum();

    let mut poly = vec![BigInt::zero(); size];
    poly[0] = BigInt::one();
    let mut out = vec![poly[target].clone()];
    for _ in 0..total {
        let before = poly.clone();
        // multiply by (1 + u_j) for each variable, truncated at degree i_j
        for (axis, &stride) in strides.iter().enumerate() {
            let span = degs[axis] as usize + 1;
            for idx in (0..size).rev() {
                if (idx / stride) % span > 0 {
                    let lower = poly[idx - stride].clone();
                    poly[idx] += lower;
                }
            }
        }
        // ... then subtract the all-zero column
        for (p, b) in poly.iter_mut().zip(before) {
            *p -= b;
        }
        out.push(poly[target].clone());
    }
    out
}

/// Closed forms for up to three rows: an indicator for one row (every column
/// holds its only one), a trinomial for two, and a single sum for three.
/// `None` for four or more rows.
pub fn s_count_closed_form(k: u32, rows: &[u32]) -> Option<BigInt> {
    let c = |n: i64, r: i64| -> BigInt {
        if n < 0 || r < 0 {
            BigInt::zero()
        } else {
            binomial(n as u64, r as u64)
        }
    };
    match *rows {
        [] => Some(if k == 0 { BigInt::one() } else { BigInt::zero() }),
        [i1] => Some(if i1 == k { BigInt::one() } else { BigInt::zero() }),
        [i1, i2] => {
            let (k, i1, i2) = (k as i64, i1 as i64, i2 as i64);
            let both = i1 + i2 - k;
            if both < 0 || i1 > k || i2 > k {
                return Some(BigInt::zero());
            }
            // k! / ((k-i1)! (k-i2)! (i1+i2-k)!)
            Some(c(k, i1) * c(i1, both))
        }
        [i1, i2, i3] => {
            let (k, i1, i2, i3) = (k as i64, i1 as i64, i2 as i64, i3 as i64);
            let sum = (0..=i2).fold(BigInt::zero(), |acc, a| {
                acc + c(i1, a) * c(k - i1, i2 - a) * c(i1 + i2 - a, k - i3)
            });
            Some(c(k, i1) * sum)
        }
        _ => None,
    }
}

/// Number of `m × n` 0-1 matrices with exactly `r` ones and no zero row or
/// column, by inclusion-exclusion over the rows and columns allowed to be
/// non-empty.
pub fn n_count(r: u64, m: u64, n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for b in 0..=m {
        for a in 0..=n {
            let term = binomial(m, b) * binomial(n, a) * binomial(a * b, r);
            if (n + m - (a + b)).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}
