//! Divisor arithmetic: divisor lists, the sum-of-divisors function, the
//! coefficients of the formal logarithm of the sigma product, and the
//! quartic bound on `sum_{a | d} a * sigma(a)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{domain, Result};
use crate::par;

/// Divisors of `n` in strictly ascending order, by trial division.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return domain("divisors of 0 are undefined");
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Sum of the positive divisors of `n`.
pub fn sigma(n: u64) -> Result<u64> {
    if n == 0 {
        return domain("sigma(0) is undefined");
    }
    Ok(divisors(n)?.into_iter().sum())
}

/// `sum_{a | d} a * sigma(a)`.
pub fn weighted_divisor_sum(d: u64) -> Result<u128> {
    let mut total = 0u128;
    for a in divisors(d)? {
        total += a as u128 * sigma(a)? as u128;
    }
    Ok(total)
}

/// Coefficient of `u^d` in the formal logarithm of `prod_j (1 - u^j)^(-sigma(j))`,
/// namely `(sum_{a | d} a * sigma(a)) / d` in lowest terms.
pub fn log_coefficient(d: u64) -> Result<BigRational> {
    if d == 0 {
        return domain("log coefficient index must be at least 1");
    }
    let numer = BigInt::from(weighted_divisor_sum(d)?);
    Ok(BigRational::new(numer, BigInt::from(d)))
}

/// One row of [`bound_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundRow {
    pub d: u64,
    /// `sum_{a | d} a * sigma(a)`
    pub lhs: u128,
    /// `d^4`
    pub rhs: u128,
    /// Whether `lhs < rhs` strictly.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    /// Indices `d >= 2` where the strict inequality fails.
    pub fn failures(&self) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|r| r.d >= 2 && !r.holds)
            .map(|r| r.d)
            .collect()
    }

    /// True iff the strict inequality holds for every `2 <= d <= d_max`.
    /// The `d = 1` row is an equality and is reported separately.
    pub fn holds_from_two(&self) -> bool {
        self.failures().is_empty()
    }

    /// The `d = 1` row, where both sides equal 1.
    pub fn unit_row(&self) -> Option<&BoundRow> {
        self.rows.first().filter(|r| r.d == 1)
    }
}

/// Evaluate `sum_{a | d} a * sigma(a) < d^4` for every `1 <= d <= d_max`.
pub fn bound_check(d_max: u64) -> Result<BoundReport> {
    if d_max == 0 {
        return domain("bound check needs d_max >= 1");
    }
    let rows = par::map_range(1..d_max as usize + 1, |d| {
        let d = d as u64;
        let lhs = weighted_divisor_sum(d).expect("d >= 1");
        let rhs = (d as u128).pow(4);
        BoundRow {
            d,
            lhs,
            rhs,
            holds: lhs < rhs,
        }
    });
    Ok(BoundReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(13).unwrap(), vec![1, 13]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn divisors_match_naive_scan() {
        for n in 1..=500u64 {
            let naive: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
            assert_eq!(divisors(n).unwrap(), naive, "n = {n}");
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1).unwrap(), 1);
        assert_eq!(sigma(6).unwrap(), 12);
        assert_eq!(sigma(13).unwrap(), 14);
        assert!(sigma(0).is_err());
    }

    #[test]
    fn sigma_of_primes() {
        for p in 2..=1000u64 {
            if divisors(p).unwrap().len() == 2 {
                assert_eq!(sigma(p).unwrap(), p + 1);
            }
        }
    }

    #[test]
    fn log_coefficient_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(log_coefficient(1).unwrap(), BigRational::one());
        assert_eq!(log_coefficient(2).unwrap(), r(7, 2));
        assert_eq!(log_coefficient(4).unwrap(), r(35, 4));
        assert!(log_coefficient(0).is_err());
    }

    #[test]
    fn log_coefficient_times_d_is_integer() {
        for d in 1..=1000u64 {
            let c = log_coefficient(d).unwrap() * BigRational::from_integer(d.into());
            assert!(c.is_integer(), "d = {d}");
            assert!(c > BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn bound_small_cases() {
        let report = bound_check(4).unwrap();
        let r1 = report.unit_row().unwrap();
        assert_eq!((r1.lhs, r1.rhs, r1.holds), (1, 1, false));
        assert_eq!((report.rows[1].lhs, report.rows[1].rhs), (7, 16));
        assert!(report.rows[1].holds);
        assert_eq!((report.rows[3].lhs, report.rows[3].rhs), (35, 256));
        assert!(report.holds_from_two());
        assert!(bound_check(0).is_err());
    }

    #[test]
    fn bound_d_max_one_is_only_the_equality() {
        let report = bound_check(1).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert!(report.holds_from_two());
    }
}
