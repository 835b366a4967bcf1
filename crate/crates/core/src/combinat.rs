//! Small enumeration helpers shared by the brute-force routines.

/// Rearranges `xs` into the next permutation in lexicographic order.
/// Returns false (leaving `xs` sorted ascending) after the last one.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Calls `f` on every map `[0, len) -> [1, range]`, in odometer order.
/// With `len == 0` the single empty map is visited.
pub(crate) fn for_each_map<F: FnMut(&[u32])>(len: usize, range: u32, mut f: F) {
    if range == 0 {
        if len == 0 {
            f(&[]);
        }
        return;
    }
    let mut v = vec![1u32; len];
    loop {
        f(&v);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            if v[i] < range {
                v[i] += 1;
                break;
            }
            v[i] = 1;
            i += 1;
        }
    }
}

/// True when the values in `v` are exactly `{1, ..., k}`.
pub(crate) fn is_onto(v: &[u32], k: u32) -> bool {
    let mut seen = vec![false; k as usize + 1];
    let mut hits = 0;
    for &c in v {
        if c == 0 || c > k {
            return false;
        }
        if !seen[c as usize] {
            seen[c as usize] = true;
            hits += 1;
        }
    }
    hits == k
}

pub(crate) fn factorial_u128(n: u32) -> u128 {
    (1..=n as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

pub(crate) fn pow_u128(base: u128, exp: u32) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}
