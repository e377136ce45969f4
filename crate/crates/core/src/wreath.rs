//! The wreath products `W(t, m) = Z_t wr S_m`.
//!
//! An element is a pair `(A, e)` with `A` in `Z_t^m` and `e` in `S_m`,
//! multiplied by `(A, e) * (B, f) = (A + B^e, ef)` where `(B^e)_i = B_{e^-1(i)}`
//! moves coordinate `j` to position `e(j)`. With the composition convention
//! of [`crate::permgroup`] (`ef` applies `f` first) this law is associative;
//! the group-law tests below pin that down.
//!
//! Conjugacy classes are named by their cycle-sum invariants: for every
//! cycle `c` of `e`, the pair `(sum_{i in c} a_i mod t, |c|)`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{domain, Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::permgroup::{conjugacy_classes, enumerate_symmetric, ConjugacyClasses, GroupElement, GroupTable, Permutation};
use crate::series::{partition_series, power, substitute_power};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    modulus: u32,
    coords: Vec<u32>,
    perm: Permutation,
    perm_inv: Permutation,
}

impl WreathElement {
    /// `(A, e)` in `W(t, m)`; coordinates are reduced modulo `t`.
    pub fn new(t: u32, coords: Vec<u32>, perm: Permutation) -> Result<Self> {
        if t == 0 {
            return domain("wreath modulus t must be at least 1");
        }
        if coords.len() != perm.degree() {
            return domain(format!(
                "coordinate vector has length {} but the permutation has degree {}",
                coords.len(),
                perm.degree()
            ));
        }
        let coords = coords.into_iter().map(|a| a % t).collect();
        let perm_inv = perm.inverse();
        Ok(WreathElement {
            modulus: t,
            coords,
            perm,
            perm_inv,
        })
    }

    pub fn identity(t: u32, m: usize) -> Result<Self> {
        Self::new(t, vec![0; m], Permutation::identity(m))
    }

    /// The modulus `t`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The degree `m`.
    pub fn degree(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus || self.degree() != other.degree() {
            return domain(format!(
                "cannot combine elements of W({}, {}) and W({}, {})",
                self.modulus,
                self.degree(),
                other.modulus,
                other.degree()
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}) mod {}", self.coords, self.perm, self.modulus)
    }
}

/// `(A, e) * (B, f) = (A + B^e, ef)`.
pub fn w_mul(x: &WreathElement, y: &WreathElement) -> Result<WreathElement> {
    x.check_compatible(y)?;
    let t = x.modulus;
    let coords = (0..x.degree())
        .map(|i| (x.coords[i] + y.coords[x.perm_inv.image(i)]) % t)
        .collect();
    let perm = x.perm.compose(&y.perm);
    let perm_inv = perm.inverse();
    Ok(WreathElement {
        modulus: t,
        coords,
        perm,
        perm_inv,
    })
}

/// `(A, e)^-1 = (-(A^(e^-1)), e^-1)`.
pub fn w_inv(x: &WreathElement) -> WreathElement {
    let t = x.modulus;
    let coords = (0..x.degree())
        .map(|i| (t - x.coords[x.perm.image(i)]) % t)
        .collect();
    WreathElement {
        modulus: t,
        coords,
        perm: x.perm_inv.clone(),
        perm_inv: x.perm.clone(),
    }
}

impl GroupElement for WreathElement {
    fn op(&self, other: &Self) -> Self {
        w_mul(self, other).expect("elements of the same wreath group")
    }

    fn inverse(&self) -> Self {
        w_inv(self)
    }

    fn is_identity(&self) -> bool {
        self.coords.iter().all(|&a| a == 0) && self.perm.is_identity()
    }

    fn commutes_with(&self, other: &Self) -> bool {
        if self.modulus != other.modulus || self.degree() != other.degree() {
            return false;
        }
        let t = self.modulus;
        (0..self.degree()).all(|i| {
            self.perm.image(other.perm.image(i)) == other.perm.image(self.perm.image(i))
                && (self.coords[i] + other.coords[self.perm_inv.image(i)]) % t
                    == (other.coords[i] + self.coords[other.perm_inv.image(i)]) % t
        })
    }
}

/// `(A[c] mod t, |c|)` for one cycle `c` of the permutation part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSumInvariant {
    pub sum: u32,
    pub length: usize,
}

/// One invariant per cycle of `e` (fixed points included), sorted by
/// residue and then by length.
pub fn cycle_sum_invariants(x: &WreathElement) -> Vec<CycleSumInvariant> {
    let t = x.modulus as u64;
    let mut out: Vec<CycleSumInvariant> = x
        .perm
        .cycles()
        .into_iter()
        .map(|c| CycleSumInvariant {
            sum: (c.iter().map(|&i| x.coords[i] as u64).sum::<u64>() % t) as u32,
            length: c.len(),
        })
        .collect();
    out.sort_unstable();
    out
}

/// Conjugacy in `W(t, m)` decided by comparing cycle-sum invariant multisets.
pub fn conjugate_by_invariants(x: &WreathElement, y: &WreathElement) -> Result<bool> {
    x.check_compatible(y)?;
    Ok(cycle_sum_invariants(x) == cycle_sum_invariants(y))
}

/// `t^m * m!`, or `None` on overflow.
pub fn wreath_order(t: u64, m: u64) -> Option<u64> {
    let mut order = t.checked_pow(m.try_into().ok()?)?;
    for k in 2..=m {
        order = order.checked_mul(k)?;
    }
    Some(order)
}

/// Every element of `W(t, m)`: permutations in lexicographic order, and for
/// each permutation the coordinate vectors in lexicographic order. The
/// identity comes first.
pub fn enumerate_wreath(t: u32, m: usize, cap: u64) -> Result<GroupTable<WreathElement>> {
    if t == 0 {
        return domain("wreath modulus t must be at least 1");
    }
    let order = wreath_order(t as u64, m as u64);
    match order {
        Some(o) if o <= cap => {}
        _ => {
            return Err(Error::ResourceCap {
                what: "wreath product order t^m * m!",
                requested: order.map_or(u128::MAX, u128::from),
                cap: cap as u128,
                flag: "--wreath-cap",
            })
        }
    }
    let perms = enumerate_symmetric(m, usize::MAX)?;
    let mut elements = Vec::with_capacity(order.unwrap_or(0) as usize);
    for e in perms.elements() {
        let mut coords = vec![0u32; m];
        loop {
            elements.push(WreathElement::new(t, coords.clone(), e.clone())?);
            // odometer, last coordinate fastest
            let mut k = m;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                coords[k] += 1;
                if coords[k] < t {
                    break;
                }
                coords[k] = 0;
            }
            if coords.iter().all(|&a| a == 0) {
                break;
            }
        }
    }
    GroupTable::new(elements)
}

/// Conjugacy classes of `W(t, m)` by orbit enumeration under [`w_mul`].
pub fn conjugacy_classes_brute(t: u32, m: usize, cap: u64) -> Result<ConjugacyClasses> {
    Ok(conjugacy_classes(&enumerate_wreath(t, m, cap)?))
}

/// `k(W(t, m))`, the coefficient of `u^m` in `P(u)^t`.
pub fn k_wreath(t: usize, m: usize) -> Result<BigUint> {
    if t == 0 {
        return domain("wreath modulus t must be at least 1");
    }
    let t = u32::try_from(t).map_err(|_| Error::Domain(format!("t = {t} is too large")))?;
    let series = power(&partition_series(m), t, m)?;
    coefficient_as_count(series.coeff(m))
}

/// `k(W(t, m))` read off `P(u^t)^t` at exponent `t * m`.
pub fn k_wreath_substituted(t: usize, m: usize) -> Result<BigUint> {
    if t == 0 {
        return domain("wreath modulus t must be at least 1");
    }
    let order = t * m;
    let p_sub = substitute_power(&partition_series(m), t, order)?;
    let t32 = u32::try_from(t).map_err(|_| Error::Domain(format!("t = {t} is too large")))?;
    let series = power(&p_sub, t32, order)?;
    coefficient_as_count(series.coeff(order))
}

/// `table[t][m] = k(W(t, m))` for `1 <= t <= order` and `t * m <= order`.
/// Row 0 is empty.
pub fn k_wreath_table(order: usize) -> Vec<Vec<BigUint>> {
    let p = partition_series(order);
    let mut table = vec![Vec::new()];
    for t in 1..=order {
        let len = order / t;
        let row = power(&p, t as u32, len)
            .and_then(|s| s.coeffs().iter().map(coefficient_as_count).collect())
            .expect("partition series covers every row");
        table.push(row);
    }
    table
}

fn coefficient_as_count(c: &num_bigint::BigInt) -> Result<BigUint> {
    c.to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative class count {c}")))
}

/// Names a conjugacy class of `W(t, m)`: for each residue `z` the partition
/// whose multiplicity of `l` counts invariants equal to `(z, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathClassLabel {
    lambdas: Vec<Partition>,
}

impl WreathClassLabel {
    pub fn new(lambdas: Vec<Partition>) -> Result<Self> {
        if lambdas.is_empty() {
            return domain("a class label needs one partition per residue (t >= 1)");
        }
        Ok(WreathClassLabel { lambdas })
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    pub fn modulus(&self) -> usize {
        self.lambdas.len()
    }

    /// Total size `m`.
    pub fn size(&self) -> usize {
        self.lambdas.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for WreathClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (z, l) in self.lambdas.iter().enumerate() {
            if z > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// All `t`-tuples of partitions with total size `m`. Earlier residues take
/// larger shares first; within a share, partitions run in descending
/// lexicographic order.
pub fn enumerate_class_labels(t: usize, m: usize) -> Result<Vec<WreathClassLabel>> {
    if t == 0 {
        return domain("wreath modulus t must be at least 1");
    }
    fn rec(
        z: usize,
        t: usize,
        remaining: usize,
        current: &mut Vec<Partition>,
        out: &mut Vec<WreathClassLabel>,
    ) {
        if z + 1 == t {
            for p in enumerate_partitions(remaining) {
                current.push(p);
                out.push(WreathClassLabel {
                    lambdas: current.clone(),
                });
                current.pop();
            }
            return;
        }
        for size in (0..=remaining).rev() {
            for p in enumerate_partitions(size) {
                current.push(p);
                rec(z + 1, t, remaining - size, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, t, m, &mut Vec::with_capacity(t), &mut out);
    Ok(out)
}

/// The class label of `x`, read off its cycle-sum invariants.
pub fn class_label_of(x: &WreathElement) -> WreathClassLabel {
    let mut parts = vec![Vec::new(); x.modulus as usize];
    for inv in cycle_sum_invariants(x) {
        parts[inv.sum as usize].push(inv.length);
    }
    WreathClassLabel {
        lambdas: parts
            .into_iter()
            .map(|p| Partition::from_unsorted(p).expect("cycle lengths are positive"))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partition_count;
    use crate::permgroup::commuting_pairs;
    use proptest::prelude::*;

    fn el(t: u32, a: &[u32], e: &[usize]) -> WreathElement {
        WreathElement::new(t, a.to_vec(), Permutation::new(e.to_vec()).unwrap()).unwrap()
    }

    fn inv(sum: u32, length: usize) -> CycleSumInvariant {
        CycleSumInvariant { sum, length }
    }

    fn lbl(ls: &[&[usize]]) -> WreathClassLabel {
        WreathClassLabel::new(ls.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn mul_examples() {
        let x = el(2, &[1, 0], &[1, 0]);
        let id = WreathElement::identity(2, 2).unwrap();
        assert_eq!(w_mul(&x, &id).unwrap(), x);
        assert!(w_mul(&x, &w_inv(&x)).unwrap().is_identity());
        let sq = w_mul(&x, &x).unwrap();
        assert_eq!(sq, el(2, &[1, 1], &[0, 1]));
        // order 4
        assert!(!sq.is_identity());
        assert!(w_mul(&sq, &sq).unwrap().is_identity());
    }

    #[test]
    fn mul_rejects_mismatch() {
        let a = WreathElement::identity(2, 2).unwrap();
        let b = WreathElement::identity(3, 2).unwrap();
        let c = WreathElement::identity(2, 3).unwrap();
        assert!(w_mul(&a, &b).is_err());
        assert!(w_mul(&a, &c).is_err());
        assert!(conjugate_by_invariants(&a, &b).is_err());
    }

    #[test]
    fn group_laws_exhaustive() {
        for (t, m) in [(2, 2), (3, 2), (2, 3)] {
            let g = enumerate_wreath(t, m, 5000).unwrap();
            let id = WreathElement::identity(t, m).unwrap();
            for x in g.elements() {
                assert_eq!(w_mul(x, &id).unwrap(), *x);
                assert_eq!(w_mul(&id, x).unwrap(), *x);
                assert!(w_mul(&w_inv(x), x).unwrap().is_identity());
                for y in g.elements() {
                    let xy = w_mul(x, y).unwrap();
                    assert_eq!(x.commutes_with(y), xy == w_mul(y, x).unwrap());
                    for z in g.elements() {
                        assert_eq!(
                            w_mul(&xy, z).unwrap(),
                            w_mul(x, &w_mul(y, z).unwrap()).unwrap()
                        );
                    }
                }
            }
            assert!(g.is_closed());
        }
    }

    fn arb_w43() -> impl Strategy<Value = WreathElement> {
        (
            prop::collection::vec(0u32..4, 3),
            Just(vec![0usize, 1, 2]).prop_shuffle(),
        )
            .prop_map(|(a, e)| el(4, &a, &e))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn group_laws_random_w43(x in arb_w43(), y in arb_w43(), z in arb_w43()) {
            let left = w_mul(&w_mul(&x, &y).unwrap(), &z).unwrap();
            let right = w_mul(&x, &w_mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert!(w_mul(&x, &w_inv(&x)).unwrap().is_identity());
        }
    }

    #[test]
    fn invariant_examples() {
        let id = WreathElement::identity(3, 2).unwrap();
        assert_eq!(cycle_sum_invariants(&id), vec![inv(0, 1), inv(0, 1)]);
        let x = el(3, &[1, 2, 0], &[1, 0, 2]);
        assert_eq!(cycle_sum_invariants(&x), vec![inv(0, 1), inv(0, 2)]);
        assert_eq!(cycle_sum_invariants(&el(4, &[1], &[0])), vec![inv(1, 1)]);
    }

    #[test]
    fn conjugacy_examples() {
        let x = el(2, &[1, 0], &[0, 1]);
        let y = el(2, &[0, 1], &[0, 1]);
        assert!(conjugate_by_invariants(&x, &x).unwrap());
        assert!(conjugate_by_invariants(&x, &y).unwrap());
        let id = WreathElement::identity(2, 2).unwrap();
        assert!(!conjugate_by_invariants(&id, &x).unwrap());
        let g = enumerate_wreath(2, 2, 5000).unwrap();
        let cc = conjugacy_classes(&g);
        let (i, j) = (g.position(&x).unwrap(), g.position(&y).unwrap());
        assert!(cc.conjugate(i, j));
    }

    #[test]
    fn enumeration_sizes() {
        let g = enumerate_wreath(2, 2, 5000).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.elements()[0].is_identity());
        let s3 = enumerate_wreath(1, 3, 5000).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(conjugacy_classes(&s3).count(), 3);
        let z3 = enumerate_wreath(3, 1, 5000).unwrap();
        assert_eq!(z3.order(), 3);
        assert_eq!(commuting_pairs(&z3), 9);
        let w0 = enumerate_wreath(5, 0, 5000).unwrap();
        assert_eq!(w0.order(), 1);
    }

    #[test]
    fn enumeration_cap() {
        let err = enumerate_wreath(3, 5, 5000).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { requested: 29160, .. }));
        assert!(enumerate_wreath(3, 5, 30000).is_ok());
        assert!(matches!(
            enumerate_wreath(1000, 100, 5000),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn brute_class_examples() {
        assert_eq!(conjugacy_classes_brute(2, 2, 5000).unwrap().count(), 5);
        assert_eq!(conjugacy_classes_brute(1, 4, 5000).unwrap().count(), 5);
        assert_eq!(conjugacy_classes_brute(4, 1, 5000).unwrap().count(), 4);
    }

    #[test]
    fn k_wreath_examples() {
        for t in 1..=7 {
            assert_eq!(k_wreath(t, 0).unwrap(), BigUint::from(1u32));
        }
        for m in 0..=15 {
            assert_eq!(k_wreath(1, m).unwrap(), partition_count(m));
        }
        assert_eq!(k_wreath(2, 2).unwrap(), BigUint::from(5u32));
        assert!(k_wreath(0, 2).is_err());
    }

    #[test]
    fn k_wreath_routes_agree() {
        for t in 1..=8 {
            for m in 0..=8 {
                assert_eq!(k_wreath(t, m).unwrap(), k_wreath_substituted(t, m).unwrap());
            }
        }
        let table = k_wreath_table(20);
        for t in 1..=20 {
            for m in 0..=20 / t {
                assert_eq!(table[t][m], k_wreath(t, m).unwrap());
            }
        }
    }

    #[test]
    fn label_examples() {
        assert_eq!(enumerate_class_labels(1, 3).unwrap().len(), 3);
        assert_eq!(
            enumerate_class_labels(2, 1).unwrap(),
            vec![lbl(&[&[1], &[]]), lbl(&[&[], &[1]])]
        );
        assert_eq!(enumerate_class_labels(2, 2).unwrap().len(), 5);
        assert_eq!(enumerate_class_labels(3, 0).unwrap(), vec![lbl(&[&[], &[], &[]])]);
    }

    #[test]
    fn label_counts_match_series() {
        for t in 1..=5 {
            for m in 0..=6 {
                let labels = enumerate_class_labels(t, m).unwrap();
                assert_eq!(BigUint::from(labels.len()), k_wreath(t, m).unwrap());
                assert!(labels.iter().all(|l| l.size() == m && l.modulus() == t));
            }
        }
    }

    #[test]
    fn class_label_examples() {
        let id = WreathElement::identity(2, 3).unwrap();
        assert_eq!(class_label_of(&id), lbl(&[&[1, 1, 1], &[]]));
        assert_eq!(class_label_of(&el(2, &[1, 0], &[0, 1])), lbl(&[&[1], &[1]]));
        let cyc = el(5, &[1, 1, 0, 0], &[1, 2, 3, 0]);
        assert_eq!(class_label_of(&cyc), lbl(&[&[], &[], &[4], &[], &[]]));
    }
}
