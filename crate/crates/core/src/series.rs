//! Block-word counts through the bivariate generating function
//!
//! ```text
//! e^{-y} / (e^{-x} + e^{-y} - 1) = sum_{r,s} A_{r,s} x^r y^s,
//! ```
//!
//! whose coefficients satisfy `count_block_word(r - 1, s) = r! s! A_{r,s}`
//! for `r >= 1`.  The table is computed by exact rational power-series
//! division, so it shares nothing with the Stirling-number route and serves
//! as an independent oracle for the same counts.

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Taylor coefficients `A_{r,s}` for `r <= max_r`, `s <= max_s`.
pub struct CoeffTable {
    max_r: usize,
    max_s: usize,
    coeffs: Vec<BigRational>,
}

impl CoeffTable {
    pub fn max_r(&self) -> usize {
        self.max_r
    }

    pub fn max_s(&self) -> usize {
        self.max_s
    }

    pub fn get(&self, r: usize, s: usize) -> &BigRational {
        assert!(r <= self.max_r && s <= self.max_s, "coefficient out of range");
        &self.coeffs[r * (self.max_s + 1) + s]
    }
}

/// Signed reciprocal factorials `(-1)^k / k!` for `k <= max`, the
/// coefficients of `e^{-t}`.
fn exp_neg_coeffs(max: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut fact = BigInt::one();
    for k in 0..=max {
        if k > 0 {
            fact *= k;
        }
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.push(BigRational::new(sign, fact.clone()));
    }
    out
}

/// Computes the coefficient table by dividing the numerator series by the
/// denominator series.  With `H = e^{-x} + e^{-y} - 1` and `G = e^{-y}`,
/// matching coefficients in `A * H = G` and noting that `H` has no mixed
/// terms and constant term 1 gives
///
/// ```text
/// A_{r,s} = G_{r,s} - sum_{i>=1} H_{i,0} A_{r-i,s} - sum_{j>=1} H_{0,j} A_{r,s-j}.
/// ```
pub fn egf_coefficients(max_r: usize, max_s: usize) -> CoeffTable {
    let e = exp_neg_coeffs(max_r.max(max_s));
    let stride = max_s + 1;
    let mut coeffs = vec![BigRational::zero(); (max_r + 1) * stride];
    for r in 0..=max_r {
        for s in 0..=max_s {
            // G = e^{-y} contributes only to the r = 0 row
            let mut value = if r == 0 { e[s].clone() } else { BigRational::zero() };
            for i in 1..=r {
                value -= &e[i] * &coeffs[(r - i) * stride + s];
            }
            for j in 1..=s {
                value -= &e[j] * &coeffs[r * stride + s - j];
            }
            coeffs[r * stride + s] = value;
        }
    }
    CoeffTable {
        max_r,
        max_s,
        coeffs,
    }
}

fn factorial_int(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Clears factorials from a table entry: returns `r! s! A_{r,s}` as an exact
/// non-negative integer, or an error if the product is not one.
pub fn coeff_to_count(r: usize, s: usize, table: &CoeffTable) -> Result<BigUint> {
    let value = table.get(r, s) * factorial_int(r) * factorial_int(s);
    if !value.is_integer() {
        return Err(Error::NonIntegralCoefficient { r, s });
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or(Error::NonIntegralCoefficient { r, s })
}

/// Block-word count `b^{b_run} a^{a_run}` via the generating function alone.
pub fn count_block_word_via_series(b_run: usize, a_run: usize) -> Result<BigUint> {
    let table = egf_coefficients(b_run + 1, a_run);
    coeff_to_count(b_run + 1, a_run, &table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn corner_coefficients() {
        let table = egf_coefficients(5, 3);
        assert_eq!(table.get(0, 0), &rational(1, 1));
        assert_eq!(table.get(0, 1), &rational(0, 1));
        assert_eq!(table.get(0, 2), &rational(0, 1));
        assert_eq!(table.get(1, 1), &rational(1, 1));
        assert_eq!(table.get(2, 1), &rational(3, 2));
        // the s = 0 column is the series of e^x
        let mut fact = 1i64;
        for r in 1..=5usize {
            fact *= r as i64;
            assert_eq!(table.get(r, 0), &rational(1, fact), "r = {r}");
        }
    }

    #[test]
    fn factorial_clearing_recovers_counts() {
        let table = egf_coefficients(4, 3);
        assert_eq!(coeff_to_count(1, 0, &table).unwrap(), BigUint::one());
        assert_eq!(coeff_to_count(2, 1, &table).unwrap(), BigUint::from(3u32));
        assert_eq!(coeff_to_count(2, 2, &table).unwrap(), BigUint::from(7u32));
        assert_eq!(coeff_to_count(3, 2, &table).unwrap(), BigUint::from(31u32));
        // the r = 0 row clears to zero, not to a block count
        assert_eq!(coeff_to_count(0, 3, &table).unwrap(), BigUint::zero());
    }

    #[test]
    fn series_route_matches_stirling_route() {
        let table = egf_coefficients(12, 11);
        for r in 1..=12usize {
            for s in 0..=11usize {
                if r + s > 12 {
                    continue;
                }
                assert_eq!(
                    coeff_to_count(r, s, &table).unwrap(),
                    crate::count::count_block_word(r - 1, s),
                    "r = {r}, s = {s}"
                );
            }
        }
        // the one-shot wrapper takes run lengths, not direction indices
        assert_eq!(
            count_block_word_via_series(2, 2).unwrap(),
            BigUint::from(31u32)
        );
        assert_eq!(count_block_word_via_series(0, 0).unwrap(), BigUint::one());
    }

    #[test]
    fn series_route_matches_enumeration_on_mixed_grid() {
        let table = egf_coefficients(7, 6);
        for r in 1..=7usize {
            for s in 0..=6usize {
                if r + s > 7 {
                    continue;
                }
                let series = coeff_to_count(r, s, &table).unwrap();
                let brute = crate::count::count_word_bruteforce(
                    &crate::perm::ExcedanceWord::block(r - 1, s),
                    10,
                )
                .unwrap();
                assert_eq!(series, brute, "r = {r}, s = {s}");
            }
        }
    }
}
