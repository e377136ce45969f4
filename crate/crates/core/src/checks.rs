//! Small-group suites for the commuting-pairs count `|G| k(G)` and for
//! conjugacy in `W(t, m)` via cycle-sum invariants.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::caps::Caps;
use crate::error::Result;
use crate::par;
use crate::permgroup::{commuting_pairs, conjugacy_classes, enumerate_symmetric};
use crate::wreath::{class_label_of, cycle_sum_invariants, enumerate_class_labels, enumerate_wreath, k_wreath, wreath_order};

/// Largest symmetric group degree in the commuting-pairs suite.
pub const SYMMETRIC_MAX_DEGREE: usize = 6;
/// Largest wreath order in the conjugacy suite.
pub const CONJUGACY_MAX_ORDER: u64 = 2000;
/// Largest modulus `t` considered when listing wreath groups under a cap.
pub const WREATH_MAX_MODULUS: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteEntry {
    pub group: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn first_failure(&self) -> Option<&SuiteEntry> {
        self.entries.iter().find(|e| !e.ok)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => write!(f, "{}: {} groups ok", self.name, self.entries.len()),
            Some(e) => write!(f, "{}: FAILED on {} ({})", self.name, e.group, e.detail),
        }
    }
}

/// `(t, m)` with `1 <= t <= max_t` and `t^m m! <= cap`, ascending.
pub fn wreath_parameters(cap: u64, max_t: u32) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for t in 1..=max_t {
        for m in 0usize.. {
            match wreath_order(t as u64, m as u64) {
                Some(o) if o <= cap => out.push((t, m)),
                _ => break,
            }
        }
    }
    out
}

/// Counts commuting pairs directly and compares with `|G| k(G)` for
/// `S_n` (`n <= 6`) and every `W(t, m)` within the wreath cap.
pub fn commuting_pairs_suite(caps: &Caps) -> Result<SuiteReport> {
    let mut entries = Vec::new();
    for n in 0..=SYMMETRIC_MAX_DEGREE.min(caps.centralizer) {
        let g = enumerate_symmetric(n, caps.centralizer)?;
        let pairs = commuting_pairs(&g);
        let k = conjugacy_classes(&g).count() as u64;
        entries.push(SuiteEntry {
            group: format!("S_{n}"),
            ok: pairs == g.order() as u64 * k,
            detail: format!("pairs {pairs}, |G| {}, k {k}", g.order()),
        });
    }
    for (t, m) in wreath_parameters(caps.wreath, WREATH_MAX_MODULUS) {
        let g = enumerate_wreath(t, m, caps.wreath)?;
        let pairs = commuting_pairs(&g);
        let k_orbits = conjugacy_classes(&g).count() as u64;
        let k_series = k_wreath(t as usize, m)?;
        let ok = pairs == g.order() as u64 * k_orbits
            && BigUint::from(pairs) == BigUint::from(g.order()) * &k_series;
        entries.push(SuiteEntry {
            group: format!("W({t},{m})"),
            ok,
            detail: format!("pairs {pairs}, |G| {}, k {k_orbits}, series k {k_series}", g.order()),
        });
    }
    Ok(SuiteReport {
        name: "commuting pairs = |G| k(G)",
        entries,
    })
}

/// Result of the all-pairs conjugacy comparison in one wreath group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCheck {
    pub t: u32,
    pub m: usize,
    pub order: usize,
    pub orbit_classes: usize,
    pub series_classes: BigUint,
    pub label_count: usize,
    /// First `(i, j)` where orbit conjugacy and invariant equality differ.
    pub invariant_mismatch: Option<(usize, usize)>,
    /// First `(i, j)` where orbit conjugacy and label equality differ.
    pub label_mismatch: Option<(usize, usize)>,
}

impl ConjugacyCheck {
    pub fn ok(&self) -> bool {
        self.invariant_mismatch.is_none()
            && self.label_mismatch.is_none()
            && BigUint::from(self.orbit_classes) == self.series_classes
            && self.label_count == self.orbit_classes
    }
}

/// Compares orbit conjugacy with equality of cycle-sum invariants and of
/// class labels on every ordered pair of elements of `W(t, m)`.
pub fn check_wreath_conjugacy(t: u32, m: usize, cap: u64) -> Result<ConjugacyCheck> {
    let g = enumerate_wreath(t, m, cap)?;
    let cc = conjugacy_classes(&g);
    let elements = g.elements();

    let invariants = par::map_slice(elements, cycle_sum_invariants);
    let labels = par::map_slice(elements, class_label_of);
    let inv_ids = intern(&invariants);
    let label_ids = intern(&labels);

    let first_mismatch = |ids: &[usize]| -> Option<(usize, usize)> {
        let rows = par::map_range(0..elements.len(), |i| {
            (0..elements.len())
                .find(|&j| cc.conjugate(i, j) != (ids[i] == ids[j]))
                .map(|j| (i, j))
        });
        rows.into_iter().flatten().next()
    };

    Ok(ConjugacyCheck {
        t,
        m,
        order: g.order(),
        orbit_classes: cc.count(),
        series_classes: k_wreath(t as usize, m)?,
        label_count: enumerate_class_labels(t as usize, m)?.len(),
        invariant_mismatch: first_mismatch(&inv_ids),
        label_mismatch: first_mismatch(&label_ids),
    })
}

fn intern<T: std::hash::Hash + Eq>(values: &[T]) -> Vec<usize> {
    let mut ids: HashMap<&T, usize> = HashMap::new();
    values
        .iter()
        .map(|v| {
            let next = ids.len();
            *ids.entry(v).or_insert(next)
        })
        .collect()
}

/// [`check_wreath_conjugacy`] for every `W(t, m)` of order at most
/// `min(2000, caps.wreath)`.
pub fn wreath_conjugacy_suite(caps: &Caps) -> Result<SuiteReport> {
    let cap = CONJUGACY_MAX_ORDER.min(caps.wreath);
    let mut entries = Vec::new();
    for (t, m) in wreath_parameters(cap, WREATH_MAX_MODULUS) {
        let c = check_wreath_conjugacy(t, m, cap)?;
        entries.push(SuiteEntry {
            group: format!("W({t},{m})"),
            ok: c.ok(),
            detail: format!(
                "orbits {}, series {}, labels {}, invariant mismatch {:?}, label mismatch {:?}",
                c.orbit_classes, c.series_classes, c.label_count, c.invariant_mismatch, c.label_mismatch
            ),
        });
    }
    Ok(SuiteReport {
        name: "conjugacy = equal cycle-sum invariants",
        entries,
    })
}
