//! Integer partitions, their counts, and the cycle-type view used for
//! conjugacy classes of symmetric groups.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// A partition stored as a non-increasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain("partition parts must be positive");
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return domain("partition parts must be non-increasing");
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut multiplicities = BTreeMap::new();
        for &p in &self.parts {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        CycleType { multiplicities }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Multiplicity view of a partition: `t -> m_t`, the number of cycles of
/// length `t`. Only lengths with `m_t >= 1` are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CycleType {
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn from_multiplicities<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut multiplicities = BTreeMap::new();
        for (t, m) in pairs {
            if t == 0 {
                return domain("cycle length must be positive");
            }
            if m > 0 {
                *multiplicities.entry(t).or_insert(0) += m;
            }
        }
        Ok(CycleType { multiplicities })
    }

    /// `sum_t t * m_t`.
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().map(|(t, m)| t * m).sum()
    }

    /// Number of cycles of length `t`.
    pub fn multiplicity(&self, t: usize) -> usize {
        self.multiplicities.get(&t).copied().unwrap_or(0)
    }

    /// `(t, m_t)` pairs in ascending `t`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&t, &m)| (t, m))
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .multiplicities
            .iter()
            .rev()
            .flat_map(|(&t, &m)| std::iter::repeat_n(t, m))
            .collect();
        Partition { parts }
    }
}

impl From<&Partition> for CycleType {
    fn from(p: &Partition) -> Self {
        p.cycle_type()
    }
}

/// All partitions of `n` in descending lexicographic order of part lists.
/// `n = 0` yields the single empty partition.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` via Euler's pentagonal-number recurrence
/// `p(n) = sum_{k >= 1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("non-empty table")
}

/// `[p(0), ..., p(n)]` by the pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let mut term = p[m - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("partition counts are non-negative"))
        .collect()
}

/// `prod_t t^(m_t) * m_t!`, the order of the centralizer in `S_n` of a
/// permutation with this cycle type.
pub fn centralizer_order(ct: &CycleType) -> BigUint {
    let mut order = BigUint::one();
    for (t, m) in ct.iter() {
        order *= BigUint::from(t).pow(m as u32);
        for k in 2..=m {
            order *= BigUint::from(k);
        }
    }
    order
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
