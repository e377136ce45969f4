//! Truncated dense power series with exact coefficients.
//!
//! A series of order `N` stores the coefficients of `u^0 ..= u^N`. Every
//! operation takes its output order explicitly and refuses inputs that are
//! not known to that order; nothing is extended silently.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Power series truncated at `u^order` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

/// Power series truncated at `u^order` with rational coefficients, always
/// in lowest terms with positive denominators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl IntSeries {
    /// Wraps a coefficient list; its order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return domain("a truncated series needs at least the constant term");
        }
        Ok(IntSeries { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `1 - u^j` at the given order.
    pub fn one_minus_monomial(j: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if j <= order {
            s.coeffs[j] -= 1;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Drops every coefficient above `u^order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        require_order(self.order(), order)?;
        Ok(IntSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn to_rational(&self) -> RatSeries {
        RatSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl RatSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return domain("a truncated series needs at least the constant term");
        }
        Ok(RatSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        RatSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// The integer series with the same coefficients, if all are integral.
    pub fn to_integer(&self) -> Option<IntSeries> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| IntSeries { coeffs })
    }
}

fn require_order(have: usize, want: usize) -> Result<()> {
    if have < want {
        return domain(format!(
            "series known only to order {have}, but order {want} was requested"
        ));
    }
    Ok(())
}

/// Cauchy product truncated at `u^order`. Zero coefficients are skipped, so
/// sparse factors such as `(1 - u^j)^(-s)` multiply in `O(order^2 / j)`.
pub fn mul(f: &IntSeries, g: &IntSeries, order: usize) -> Result<IntSeries> {
    require_order(f.order(), order)?;
    require_order(g.order(), order)?;
    let mut out = vec![BigInt::zero(); order + 1];
    let g_nonzero: Vec<(usize, &BigInt)> = g.coeffs[..=order]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    for (i, a) in f.coeffs[..=order].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for &(j, b) in &g_nonzero {
            if i + j > order {
                break;
            }
            out[i + j] += a * b;
        }
    }
    Ok(IntSeries { coeffs: out })
}

/// `(1 - u^j)^(-s) = sum_k C(s+k-1, k) u^(jk)`, truncated at `u^order`.
pub fn neg_binomial_factor(j: usize, s: u64, order: usize) -> Result<IntSeries> {
    if j == 0 {
        return domain("neg_binomial_factor needs j >= 1");
    }
    if s == 0 {
        return domain("neg_binomial_factor needs s >= 1");
    }
    let mut out = IntSeries::zero(order);
    let mut binom = BigInt::one();
    let s = BigInt::from(s);
    for k in 0..=order / j {
        if k > 0 {
            // C(s+k-1, k) = C(s+k-2, k-1) * (s+k-1) / k, exact at every step
            binom = binom * (&s + (k - 1)) / k;
        }
        out.coeffs[j * k] = binom.clone();
    }
    Ok(out)
}

/// `f^t` truncated at `u^order`; `t = 0` gives the constant series 1.
pub fn power(f: &IntSeries, t: u32, order: usize) -> Result<IntSeries> {
    if t == 0 {
        return Ok(IntSeries::one(order));
    }
    require_order(f.order(), order)?;
    let mut result = IntSeries::one(order);
    let mut base = f.truncate(order)?;
    let mut e = t;
    loop {
        if e & 1 == 1 {
            result = mul(&result, &base, order)?;
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = mul(&base, &base, order)?;
    }
    Ok(result)
}

/// `f(u^t)` truncated at `u^order`. Only `f[0 ..= order / t]` is read.
pub fn substitute_power(f: &IntSeries, t: usize, order: usize) -> Result<IntSeries> {
    if t == 0 {
        return domain("substitute_power needs t >= 1");
    }
    require_order(f.order(), order / t)?;
    let mut out = IntSeries::zero(order);
    for k in 0..=order / t {
        out.coeffs[k * t] = f.coeffs[k].clone();
    }
    Ok(out)
}

/// Formal logarithm of a series with constant term 1, via
/// `n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}`.
pub fn log(f: &IntSeries, order: usize) -> Result<RatSeries> {
    require_order(f.order(), order)?;
    if !f.coeffs[0].is_one() {
        return domain("formal log needs constant term 1");
    }
    let mut l = vec![BigRational::zero(); order + 1];
    for n in 1..=order {
        let mut acc = BigRational::from_integer(&f.coeffs[n] * n);
        for k in 1..n {
            if f.coeffs[n - k].is_zero() || l[k].is_zero() {
                continue;
            }
            acc -= &l[k] * BigRational::from_integer(&f.coeffs[n - k] * k);
        }
        l[n] = acc / BigRational::from_integer(n.into());
    }
    Ok(RatSeries { coeffs: l })
}

/// Formal exponential of a series with constant term 0, via
/// `n e_n = sum_{k=1}^{n} k l_k e_{n-k}`.
pub fn exp(l: &RatSeries, order: usize) -> Result<RatSeries> {
    require_order(l.order(), order)?;
    if !l.coeffs[0].is_zero() {
        return domain("formal exp needs constant term 0");
    }
    let mut e = vec![BigRational::zero(); order + 1];
    e[0] = BigRational::one();
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            if l.coeffs[k].is_zero() {
                continue;
            }
            acc += &l.coeffs[k] * BigRational::from_integer(k.into()) * &e[n - k];
        }
        e[n] = acc / BigRational::from_integer(n.into());
    }
    Ok(RatSeries { coeffs: e })
}

/// `P(u) = sum p(d) u^d` to `u^order`, built as the Euler product
/// `prod_{s=1}^{order} (1 - u^s)^(-1)`.
pub fn partition_series(order: usize) -> IntSeries {
    let mut acc = IntSeries::one(order);
    for s in 1..=order {
        // multiplying by 1/(1 - u^s) is the running sum c_k += c_{k-s}
        for k in s..=order {
            let prev = acc.coeffs[k - s].clone();
            acc.coeffs[k] += prev;
        }
    }
    acc
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

impl fmt::Debug for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}
