//! Identities generated from the vanishing trace of mixing matrices of
//! disjoint-union worlds.
//!
//! If a world's colouring matrix has distinct diagonal entries `H_1..H_s`
//! with multiplicities `h_1..h_s`, then for `m ≥ 2`
//!
//! ```text
//! Σ_{a_1+..+a_s=m} h^a · multinomial(m; a) · T(H_1^{◆a_1} ◆ .. ◆ H_s^{◆a_s}) = 0
//! ```
//!
//! where `T` is the mixing transform.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrices::ColouringMatrix;
use crate::polyalg::counts::{factorial, multinomial, s_count_closed_form};
use crate::polyalg::diamond::diamond_power;
use crate::polyalg::{binomial, black_diamond, mixing_transform, stirling, Poly, Rat, StirlingKind};
use crate::{Error, Result};

/// Distinct diagonal values with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSpec {
    polys: Vec<Poly>,
    mults: Vec<u64>,
}

impl DiagonalSpec {
    pub fn new(polys: Vec<Poly>, mults: Vec<u64>) -> Result<Self> {
        if polys.len() != mults.len() {
            return Err(Error::InvalidInput(format!(
                "{} diagonal values but {} multiplicities",
                polys.len(),
                mults.len()
            )));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidInput("multiplicities must be positive".into()));
        }
        for (i, p) in polys.iter().enumerate() {
            if !p.constant_term().is_zero() {
                return Err(Error::InvalidInput(format!("diagonal value {p} has a constant term")));
            }
            if polys[..i].contains(p) {
                return Err(Error::InvalidInput(format!("diagonal value {p} listed twice")));
            }
        }
        Ok(DiagonalSpec { polys, mults })
    }

    /// Groups the diagonal of `m`, keeping first-appearance order.
    pub fn from_matrix(m: &ColouringMatrix) -> Self {
        let mut polys: Vec<Poly> = Vec::new();
        let mut mults: Vec<u64> = Vec::new();
        for p in m.diagonal() {
            match polys.iter().position(|q| *q == p) {
                Some(i) => mults[i] += 1,
                None => {
                    polys.push(p);
                    mults.push(1);
                }
            }
        }
        DiagonalSpec { polys, mults }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn mults(&self) -> &[u64] {
        &self.mults
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// One composition's contribution to [`identity_sum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityTerm {
    pub exponents: Vec<u64>,
    /// `h^a · multinomial(m; a)`
    pub weight: BigInt,
    /// `H_1^{◆a_1} ◆ .. ◆ H_s^{◆a_s}`
    pub product: Poly,
    /// `weight · T(product)`
    pub value: Rat,
}

fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn require_m(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::Precondition(format!(
            "identities need m >= 2 disjoint copies, got m = {m}"
        )));
    }
    Ok(())
}

/// All terms of the generated identity, one per composition of `m`.
pub fn identity_terms(spec: &DiagonalSpec, m: u64) -> Result<Vec<IdentityTerm>> {
    require_m(m)?;
    if spec.is_empty() {
        return Err(Error::InvalidInput("empty diagonal".into()));
    }
    let mut terms = Vec::new();
    for a in compositions(m, spec.len()) {
        let powers = spec
            .polys
            .iter()
            .zip(&a)
            .map(|(p, &e)| diamond_power(p, e as u32))
            .collect::<Result<Vec<_>>>()?;
        let product = black_diamond(&powers)?;
        let weight = spec
            .mults
            .iter()
            .zip(&a)
            .fold(multinomial(&a), |acc, (&h, &e)| acc * BigInt::from(h).pow(e as u32));
        let value = Rat::from_integer(weight.clone()) * mixing_transform(&product)?;
        terms.push(IdentityTerm { exponents: a, weight, product, value });
    }
    Ok(terms)
}

/// The full left-hand side; zero whenever `spec` comes from a real world.
pub fn identity_sum(spec: &DiagonalSpec, m: u64) -> Result<Rat> {
    Ok(identity_terms(spec, m)?.into_iter().map(|t| t.value).sum())
}

/// The same sum for `s = 2` written as a binomial sum over `a`.
pub fn identity_sum_two(spec: &DiagonalSpec, m: u64) -> Result<Rat> {
    require_m(m)?;
    let [p1, p2] = spec.polys() else {
        return Err(Error::InvalidInput(format!(
            "two diagonal values required, got {}",
            spec.len()
        )));
    };
    let (h1, h2) = (BigInt::from(spec.mults[0]), BigInt::from(spec.mults[1]));
    let mut total = Rat::zero();
    for a in 0..=m {
        let prod = black_diamond(&[diamond_power(p1, a as u32)?, diamond_power(p2, (m - a) as u32)?])?;
        let w = h1.pow(a as u32) * h2.pow((m - a) as u32) * binomial(m, a);
        total += Rat::from_integer(w) * mixing_transform(&prod)?;
    }
    Ok(total)
}

/// Signed terms `(-1)^{k+1} (k-1)! S(m, k)` for `k = 1..=m`.
pub fn fubini_log_terms(m: u64) -> Result<Vec<BigInt>> {
    require_m(m)?;
    Ok((1..=m)
        .map(|k| {
            let t = factorial(k - 1) * stirling(m, k, StirlingKind::Second);
            if k % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .collect())
}

/// `Σ_{k=1}^{m} (-1)^{k+1} (k-1)! S(m, k)`.
pub fn fubini_log_identity(m: u64) -> Result<Rat> {
    Ok(Rat::from_integer(fubini_log_terms(m)?.into_iter().sum()))
}

/// The explicit triple sum for the two-peg world with diagonal `{x, x+2x²}`,
/// using `x^{◆a} = F_a` and `(x+2x²)^{◆b} = F_{2b}`.
pub fn two_peg_triple_sum(m: u64) -> Result<Rat> {
    require_m(m)?;
    let ordered = |n: u64, i: u64| factorial(i) * stirling(n, i, StirlingKind::Second);
    let mut total = Rat::zero();
    for a in 0..=m {
        let b = 2 * m - 2 * a;
        for k in 1..=(2 * m - a) {
            let mut inner = BigInt::zero();
            for i1 in 0..=a.min(k) {
                for i2 in 0..=b.min(k) {
                    let trinomial = s_count_closed_form(k as u32, &[i1 as u32, i2 as u32])
                        .expect("two rows have a closed form");
                    inner += ordered(a, i1) * ordered(b, i2) * trinomial;
                }
            }
            let sign = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            total += Rat::new(sign * binomial(m, a) * inner, BigInt::from(k));
        }
    }
    Ok(total)
}
