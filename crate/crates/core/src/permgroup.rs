//! Concrete finite groups as element tables: symmetric groups, conjugacy
//! classes by orbit enumeration, and the commuting pair and triple counters.
//!
//! Composition convention: `(g * h)(i) = g(h(i))`, that is, `h` acts first.

use std::collections::HashMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::caps::Caps;
use crate::error::{domain, Error, Result};
use crate::par;
use crate::partitions::{enumerate_partitions, CycleType, Partition};

/// An element of a finite group given by explicit table.
pub trait GroupElement: Clone + Eq + Hash + Debug + Send + Sync {
    /// Group product `self * other`.
    fn op(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    fn is_identity(&self) -> bool;

    fn commutes_with(&self, other: &Self) -> bool {
        self.op(other) == other.op(self)
    }

    /// `g * self * g^-1`.
    fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g.op(self).op(g_inv)
    }
}

/// A permutation of `{0, .., m-1}` in one-line form. Degrees up to 256.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = 256;

    /// `images[i]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m > Self::MAX_DEGREE {
            return domain(format!("permutation degree {m} exceeds {}", Self::MAX_DEGREE));
        }
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return domain(format!("{images:?} is not a bijection on 0..{m}"));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree <= Self::MAX_DEGREE);
        Permutation {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree || used[x] {
                    return domain(format!("cycles {cycles:?} are not disjoint on 0..{degree}"));
                }
                used[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Cycle decomposition including fixed points, each cycle starting at
    /// its smallest point, cycles ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        cycle_type(self)
    }
}

impl Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl GroupElement for Permutation {
    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    #[inline]
    fn commutes_with(&self, other: &Self) -> bool {
        let (a, b) = (&self.images, &other.images);
        a.len() == b.len() && (0..a.len()).all(|i| a[b[i] as usize] == b[a[i] as usize])
    }
}

/// Multiplicities of cycle lengths of `g`, fixed points counted as 1-cycles.
pub fn cycle_type(g: &Permutation) -> CycleType {
    CycleType::from_multiplicities(g.cycles().into_iter().map(|c| (c.len(), 1)))
        .expect("cycle lengths are positive")
}

/// A finite group listed element by element in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable<E> {
    elements: Vec<E>,
}

impl<E: GroupElement> GroupTable<E> {
    /// Wraps an element list. Closure is not checked here; see
    /// [`GroupTable::is_closed`].
    pub fn new(elements: Vec<E>) -> Result<Self> {
        if !elements.iter().any(E::is_identity) {
            return domain("group table must contain the identity");
        }
        Ok(GroupTable { elements })
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, x: &E) -> Option<usize> {
        self.elements.iter().position(|y| y == x)
    }

    pub fn contains(&self, x: &E) -> bool {
        self.position(x).is_some()
    }

    /// Checks closure under products and inverses. Quadratic in the order.
    pub fn is_closed(&self) -> bool {
        let index: std::collections::HashSet<&E> = self.elements.iter().collect();
        self.elements.iter().all(|x| index.contains(&x.inverse()))
            && self
                .elements
                .iter()
                .all(|x| self.elements.iter().all(|y| index.contains(&x.op(y))))
    }
}

/// `S_n` with elements in lexicographic order of their one-line form, so the
/// identity comes first. `S_0` is the trivial group.
pub fn enumerate_symmetric(n: usize, cap: usize) -> Result<GroupTable<Permutation>> {
    if n > cap {
        return Err(Error::ResourceCap {
            what: "symmetric group degree n",
            requested: n as u128,
            cap: cap as u128,
            flag: "--cent-cap",
        });
    }
    let elements = (0..n)
        .permutations(n)
        .map(|images| Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
        .collect();
    GroupTable::new(elements)
}

/// All `h` in `group` with `g * h = h * g`, in table order.
pub fn centralizer<E: GroupElement>(g: &E, group: &GroupTable<E>) -> Result<GroupTable<E>> {
    if !group.contains(g) {
        return domain(format!("{g:?} is not an element of the group"));
    }
    let elements = group
        .elements
        .iter()
        .filter(|h| g.commutes_with(h))
        .cloned()
        .collect();
    GroupTable::new(elements)
}

/// Partition of a group table into conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    /// Element indices of each class, ascending.
    pub classes: Vec<Vec<usize>>,
    /// The first element (in table order) of each class.
    pub representatives: Vec<usize>,
    /// `class_of[i]` is the class containing element `i`.
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    /// `k(G)`.
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn conjugate(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }
}

/// Conjugacy classes as orbits of the conjugation action.
pub fn conjugacy_classes<E: GroupElement>(group: &GroupTable<E>) -> ConjugacyClasses {
    let elements = group.elements();
    let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let inverses: Vec<E> = par::map_slice(elements, E::inverse);
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    for i in 0..elements.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let x = &elements[i];
        let mut members = Vec::new();
        for (g, g_inv) in elements.iter().zip(&inverses) {
            let y = x.conjugate_by(g, g_inv);
            let j = *index
                .get(&y)
                .expect("group table is not closed under conjugation");
            if class_of[j] == usize::MAX {
                class_of[j] = c;
                members.push(j);
            }
        }
        members.sort_unstable();
        representatives.push(i);
        classes.push(members);
    }
    ConjugacyClasses {
        classes,
        representatives,
        class_of,
    }
}

/// `|{(g, h) : gh = hg}|`, counted directly over unordered pairs.
pub fn commuting_pairs<E: GroupElement>(group: &GroupTable<E>) -> u64 {
    let elements = group.elements();
    let off_diagonal: u64 = par::sum_range(0..elements.len(), |i| {
        let g = &elements[i];
        elements[i + 1..]
            .iter()
            .filter(|h| g.commutes_with(h))
            .count() as u64
    });
    elements.len() as u64 + 2 * off_diagonal
}

/// `T(n)` by direct enumeration of pairwise-commuting triples in `S_n`.
pub fn triples_naive(n: usize, caps: &Caps) -> Result<BigUint> {
    if n > caps.naive {
        return Err(Error::ResourceCap {
            what: "naive triple-loop degree n",
            requested: n as u128,
            cap: caps.naive as u128,
            flag: "--naive-cap",
        });
    }
    let group = enumerate_symmetric(n, caps.naive)?;
    let elements = group.elements();
    let count: u64 = par::sum_range(0..elements.len(), |i| {
        let a = &elements[i];
        let mut local = 0u64;
        for b in elements.iter().filter(|b| a.commutes_with(b)) {
            local += elements
                .iter()
                .filter(|c| a.commutes_with(c) && b.commutes_with(c))
                .count() as u64;
        }
        local
    });
    Ok(BigUint::from(count))
}

/// One conjugacy class of `S_n` as used by the centralizer method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTerm {
    pub cycle_type: Partition,
    /// First element of `S_n` (table order) with this cycle type.
    pub representative: Permutation,
    /// Number of elements with this cycle type, counted in the table.
    pub class_size: u64,
    /// `|Cent(rep)|`.
    pub centralizer_order: u64,
    /// Commuting pairs inside `Cent(rep)`, i.e. triples starting with `rep`.
    pub centralizer_pairs: u64,
}

impl ClassTerm {
    /// `k(Cent(rep))`, by the commuting-pairs count.
    pub fn centralizer_classes(&self) -> u64 {
        self.centralizer_pairs / self.centralizer_order
    }
}

/// Per-class terms of `T(n) = sum_classes |class| * pairs(Cent(rep))`,
/// in descending lexicographic order of cycle type.
pub fn centralizer_terms(n: usize, caps: &Caps) -> Result<Vec<ClassTerm>> {
    let group = enumerate_symmetric(n, caps.centralizer)?;
    let types: Vec<Partition> = par::map_slice(group.elements(), |g| cycle_type(g).to_partition());
    let mut first: HashMap<&Partition, usize> = HashMap::new();
    let mut sizes: HashMap<&Partition, u64> = HashMap::new();
    for (i, ct) in types.iter().enumerate() {
        first.entry(ct).or_insert(i);
        *sizes.entry(ct).or_insert(0) += 1;
    }
    let mut terms = Vec::new();
    for ct in enumerate_partitions(n) {
        let idx = *first
            .get(&ct)
            .ok_or_else(|| Error::Internal(format!("no element of S_{n} has cycle type {ct}")))?;
        let rep = group.elements()[idx].clone();
        let cent = centralizer(&rep, &group)?;
        terms.push(ClassTerm {
            class_size: sizes[&ct],
            centralizer_order: cent.order() as u64,
            centralizer_pairs: commuting_pairs(&cent),
            representative: rep,
            cycle_type: ct,
        });
    }
    Ok(terms)
}

/// `T(n)` via class representatives and commuting pairs in their centralizers.
pub fn triples_centralizer(n: usize, caps: &Caps) -> Result<BigUint> {
    Ok(centralizer_terms(n, caps)?
        .iter()
        .map(|t| BigUint::from(t.class_size) * t.centralizer_pairs)
        .sum())
}
