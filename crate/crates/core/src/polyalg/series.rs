//! `L_i(x)`, the mixing transform and the inner-sum identity behind
//! idempotency of mixing matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::counts::{binomial, n_count};
use super::{Poly, Rat};
use crate::{Error, Result};

/// `L_i(x) = Σ_{j,k} N(i; j, k) x^{j+k}`.
///
/// Only `j, k <= i` contribute, since a matrix with `i` ones and no empty
/// line has at most `i` rows and columns. `L_0 = 1` (the empty matrix).
pub fn l_series(i: u32) -> Poly {
    let i = i as u64;
    let mut coeffs = vec![BigInt::zero(); 2 * i as usize + 1];
    for j in 0..=i {
        for k in 0..=i {
            coeffs[(j + k) as usize] += n_count(i, j, k);
        }
    }
    Poly::new(coeffs)
}

/// The linear map sending `x^i` to `L_i(x)`.
pub fn apply_l_operator(p: &Poly) -> Poly {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, z)| !z.is_zero())
        .map(|(i, z)| l_series(i as u32).scale(z))
        .sum()
}

/// `a_1 x + a_2 x^2 + ... ↦ a_1 - a_2/2 + a_3/3 - ...`, the definite
/// integral of `A(x)/x` over `[-1, 0]`.
pub fn mixing_transform(a: &Poly) -> Result<Rat> {
    if !a.constant_term().is_zero() {
        return Err(Error::Precondition(format!(
            "mixing transform needs a zero constant term; got {a}"
        )));
    }
    let mut acc = Rat::zero();
    for (k, c) in a.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let term = BigRational::new(c.clone(), BigInt::from(k));
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `F(n, k) = Σ_{a,b=1}^{n} (-1)^{a+b} C(ab-1, k-1) C(n, a) C(n, b)`,
/// which equals `(-1)^{k-1}` for `1 <= k <= n`.
pub fn inner_sum_identity(n: u32, k: u32) -> Result<Rat> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let (n, k) = (n as u64, k as u64);
    let mut total = BigInt::zero();
    for a in 1..=n {
        for b in 1..=n {
            let term = binomial(a * b - 1, k - 1) * binomial(n, a) * binomial(n, b);
            if (a + b) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(Rat::from_integer(total))
}

/// `(-1)^{k-1}` as a rational, the closed form of [`inner_sum_identity`].
pub fn alternating_unit(k: u32) -> Rat {
    if k % 2 == 1 {
        Rat::one()
    } else {
        -Rat::one()
    }
}
