//! The three coefficient pipelines and their cross-checks.
//!
//! * product: `prod_{j=1}^{N} (1 - u^j)^(-sigma(j))`
//! * classes: `sum_{cycle types of n} prod_t k(W(t, m_t))`, no sigma involved
//! * brute: `T(n) / n!` from explicit group tables

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::caps::Caps;
use crate::error::{domain, Error, Result};
use crate::numtheory::{log_coefficient, sigma};
use crate::par;
use crate::partitions::factorial;
use crate::permgroup::triples_centralizer;
use crate::series::{self, mul, neg_binomial_factor, partition_series, substitute_power, IntSeries, RatSeries};
use crate::wreath::k_wreath_table;

/// Product-side coefficients with the true sum-of-divisors exponents.
pub fn coeffs_product(order: usize) -> IntSeries {
    coeffs_product_with(order, |j| sigma(j).expect("j >= 1"))
}

/// `prod_{j=1}^{order} (1 - u^j)^(-exponent(j))`. Factors with `j > order`
/// are `1 mod u^(order+1)`; a zero exponent contributes the factor 1.
pub fn coeffs_product_with<F>(order: usize, exponent: F) -> IntSeries
where
    F: Fn(u64) -> u64,
{
    let mut acc = IntSeries::one(order);
    for j in 1..=order {
        let s = exponent(j as u64);
        if s == 0 {
            continue;
        }
        let factor = neg_binomial_factor(j, s, order).expect("j, s >= 1");
        acc = mul(&acc, &factor, order).expect("both factors have the full order");
    }
    acc
}

/// Class-side coefficients: coefficient `n` is the sum over cycle types
/// `1^{m_1} 2^{m_2} ...` of `n` of `prod_t k(W(t, m_t))`.
pub fn coeffs_classes(order: usize) -> IntSeries {
    let table = k_wreath_table(order);
    let coeffs = par::map_range(0..order + 1, |n| {
        let mut total = BigUint::zero();
        sum_over_cycle_types(n, n, &BigUint::from(1u32), &table, &mut total);
        BigInt::from(total)
    });
    IntSeries::new(coeffs).expect("order + 1 coefficients")
}

// Walks cycle types with distinct lengths chosen in decreasing order,
// each leaf being one partition of the original n.
fn sum_over_cycle_types(
    remaining: usize,
    max_len: usize,
    running: &BigUint,
    table: &[Vec<BigUint>],
    total: &mut BigUint,
) {
    if remaining == 0 {
        *total += running;
        return;
    }
    for t in (1..=remaining.min(max_len)).rev() {
        for m in 1..=remaining / t {
            let next = running * &table[t][m];
            sum_over_cycle_types(remaining - t * m, t - 1, &next, table, total);
        }
    }
}

/// The same class-side series as the truncated product `prod_{t=1}^{order} P(u^t)^t`.
pub fn coeffs_classes_product_form(order: usize) -> IntSeries {
    let p = partition_series(order);
    let mut acc = IntSeries::one(order);
    for t in 1..=order {
        let sub = substitute_power(&p, t, order).expect("P known to order");
        let factor = series::power(&sub, t as u32, order).expect("full order");
        acc = mul(&acc, &factor, order).expect("full order");
    }
    acc
}

/// `T(n) / n!` for `n = 0 ..= n_max` by the centralizer method.
pub fn coeffs_brute(n_max: usize, caps: &Caps) -> Result<Vec<BigUint>> {
    if n_max > caps.centralizer {
        return Err(Error::ResourceCap {
            what: "brute-force degree n",
            requested: n_max as u128,
            cap: caps.centralizer as u128,
            flag: "--cent-cap",
        });
    }
    (0..=n_max)
        .map(|n| {
            let t = triples_centralizer(n, caps)?;
            let (q, r) = t.div_rem(&factorial(n));
            if !r.is_zero() {
                return Err(Error::Internal(format!("T({n}) = {t} is not divisible by {n}!")));
            }
            Ok(q)
        })
        .collect()
}

/// Outcome of comparing the three pipelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub order: usize,
    pub coeffs_product: Vec<BigInt>,
    pub coeffs_classes: Vec<BigInt>,
    /// Brute-force prefix `0 ..= brute_max`, when requested.
    pub coeffs_brute: Option<Vec<BigInt>>,
    /// `agreements[n]`: product = classes at `n`, and = brute where present.
    pub agreements: Vec<bool>,
    pub overall: bool,
}

impl CoefficientReport {
    pub fn first_disagreement(&self) -> Option<usize> {
        self.agreements.iter().position(|ok| !ok)
    }
}

/// Runs all three pipelines and compares them coefficientwise.
pub fn verify_identity(order: usize, brute_max: Option<usize>, caps: &Caps) -> Result<CoefficientReport> {
    verify_identity_with(order, brute_max, caps, |j| sigma(j).expect("j >= 1"))
}

/// [`verify_identity`] with a caller-supplied exponent table on the product
/// side. Used to run negative controls.
pub fn verify_identity_with<F>(
    order: usize,
    brute_max: Option<usize>,
    caps: &Caps,
    exponent: F,
) -> Result<CoefficientReport>
where
    F: Fn(u64) -> u64,
{
    if let Some(k) = brute_max {
        if k > order {
            return domain(format!("brute-force range {k} exceeds the order {order}"));
        }
    }
    let brute = brute_max
        .map(|k| coeffs_brute(k, caps))
        .transpose()?
        .map(|v| v.into_iter().map(BigInt::from).collect::<Vec<_>>());
    let product = coeffs_product_with(order, exponent).into_coeffs();
    let classes = coeffs_classes(order).into_coeffs();
    let agreements: Vec<bool> = (0..=order)
        .map(|n| {
            product[n] == classes[n]
                && brute
                    .as_ref()
                    .and_then(|b| b.get(n))
                    .is_none_or(|c| *c == product[n])
        })
        .collect();
    let overall = agreements.iter().all(|&ok| ok);
    Ok(CoefficientReport {
        order,
        coeffs_product: product,
        coeffs_classes: classes,
        coeffs_brute: brute,
        agreements,
        overall,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogCheck {
    pub order: usize,
    /// Formal logarithm of the product series.
    pub computed: RatSeries,
    /// `(sum_{a | d} a sigma(a)) / d` for `d = 1 ..= order`, index 0 unused.
    pub expected: Vec<BigRational>,
    pub first_mismatch: Option<usize>,
}

impl LogCheck {
    pub fn ok(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `log(coeffs_product(order))` with the divisor-sum formula.
pub fn verify_log(order: usize) -> Result<LogCheck> {
    if order == 0 {
        return domain("log check needs order >= 1");
    }
    let computed = series::log(&coeffs_product(order), order)?;
    let mut expected = vec![BigRational::zero()];
    for d in 1..=order {
        expected.push(log_coefficient(d as u64)?);
    }
    let first_mismatch = (1..=order).find(|&d| *computed.coeff(d) != expected[d]);
    Ok(LogCheck {
        order,
        computed,
        expected,
        first_mismatch,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub n: usize,
    pub coeff: BigInt,
    /// `coeff^(1/n)` in floating point; display only.
    pub nth_root: f64,
}

/// Coefficients of the product series with their `n`-th roots.
pub fn growth_report(order: usize) -> Result<Vec<GrowthRow>> {
    if order == 0 {
        return domain("growth report needs order >= 1");
    }
    let s = coeffs_product(order);
    Ok((1..=order)
        .map(|n| {
            let coeff = s.coeff(n).clone();
            let nth_root = coeff.to_f64().map_or(f64::NAN, |c| c.powf(1.0 / n as f64));
            GrowthRow { n, coeff, nth_root }
        })
        .collect())
}
