//! The black diamond product of integer polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::counts::s_count_table;
use super::Poly;
use crate::{Error, Result};

fn check_operand(p: &Poly) -> Result<()> {
    if p.constant_term().is_zero() || p.is_one() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "black diamond operands need zero constant term or must be the unit 1; got {p}"
        )))
    }
}

/// `A_1 ◆ ... ◆ A_m` straight from the definition: for every choice of one
/// nonzero coefficient per operand, weight the coefficient product by the
/// number of column-surjective 0-1 fillings with those row sums.
///
/// Operands must have zero constant term, except that the unit `1` is
/// accepted and dropped. The empty product is `1`.
pub fn black_diamond(polys: &[Poly]) -> Result<Poly> {
    for p in polys {
        check_operand(p)?;
    }
    let factors: Vec<Vec<(u32, &BigInt)>> = polys
        .iter()
        .filter(|p| !p.is_one())
        .map(|p| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c))
                .collect()
        })
        .collect();
    if factors.is_empty() {
        return Ok(Poly::one());
    }
    if factors.iter().any(Vec::is_empty) {
        return Ok(Poly::zero());
    }

    let max_deg: usize = factors
        .iter()
        .map(|f| f.last().map_or(0, |&(i, _)| i as usize))
        .sum();
    let mut out = vec![BigInt::zero(); max_deg + 1];
    let mut choice = vec![0usize; factors.len()];
    let mut rows = vec![0u32; factors.len()];
    loop {
        let mut weight = BigInt::one();
        for (j, f) in factors.iter().enumerate() {
            let (deg, c) = f[choice[j]];
            rows[j] = deg;
            weight *= c;
        }
        let lo = *rows.iter().max().unwrap() as usize;
        let table = s_count_table(&rows);
        for (k, s) in table.iter().enumerate().skip(lo) {
            if !s.is_zero() {
                out[k] += &weight * s;
            }
        }
        // advance the mixed-radix counter over coefficient choices
        let mut j = 0;
        loop {
            if j == factors.len() {
                return Ok(Poly::new(out));
            }
            choice[j] += 1;
            if choice[j] < factors[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// `A ◆ A ◆ ... ◆ A` (`m` factors), folded pairwise; `A^{◆0} = 1`.
pub fn diamond_power(a: &Poly, m: u32) -> Result<Poly> {
    check_operand(a)?;
    let mut acc = Poly::one();
    for _ in 0..m {
        acc = black_diamond(&[acc, a.clone()])?;
    }
    Ok(acc)
}

/// Left fold of the binary product; agrees with [`black_diamond`] by
/// associativity.
pub fn black_diamond_folded(polys: &[Poly]) -> Result<Poly> {
    polys
        .iter()
        .try_fold(Poly::one(), |acc, p| black_diamond(&[acc, p.clone()]))
}
