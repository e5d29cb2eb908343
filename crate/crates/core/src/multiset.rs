//! Multisets over Z_p^m and the validity predicate: the identity is excluded
//! and every rank-d subgroup holds fewer than d*p elements counting
//! multiplicity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Decomposition, GroupParams, Rref, Side, Subgroup};

/// A multiset of group elements. Multiplicities are stored sparsely; the
/// total count |A| and distinct count #A are maintained on every update.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiset {
    group: GroupParams,
    mult: BTreeMap<u32, u32>,
    total: u64,
    support: u32,
}

impl Multiset {
    pub fn empty(group: GroupParams) -> Self {
        Multiset {
            group,
            mult: BTreeMap::new(),
            total: 0,
            support: 0,
        }
    }

    pub fn from_pairs(group: GroupParams, pairs: &[(u32, u32)]) -> Self {
        let mut a = Self::empty(group);
        for &(x, k) in pairs {
            a.insert(x, k);
        }
        a
    }

    pub(crate) fn from_mult_vector(group: GroupParams, v: &[u32]) -> Self {
        let mut a = Self::empty(group);
        for (x, &k) in v.iter().enumerate() {
            if k > 0 {
                a.insert(x as u32, k);
            }
        }
        a
    }

    pub fn group(&self) -> &GroupParams {
        &self.group
    }

    /// Adds `count` copies of the element with index `x`.
    pub fn insert(&mut self, x: u32, count: u32) {
        if count == 0 {
            return;
        }
        debug_assert!(x < self.group.order());
        let e = self.mult.entry(x).or_insert(0);
        if *e == 0 {
            self.support += 1;
        }
        *e += count;
        self.total += count as u64;
    }

    /// Removes up to `count` copies; returns how many were removed.
    pub fn remove(&mut self, x: u32, count: u32) -> u32 {
        let Some(e) = self.mult.get_mut(&x) else {
            return 0;
        };
        let removed = count.min(*e);
        *e -= removed;
        if *e == 0 {
            self.mult.remove(&x);
            self.support -= 1;
        }
        self.total -= removed as u64;
        removed
    }

    pub fn multiplicity(&self, x: u32) -> u32 {
        self.mult.get(&x).copied().unwrap_or(0)
    }

    /// |A|: total number of elements counting multiplicity.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// #A: number of distinct elements.
    pub fn support_count(&self) -> u32 {
        self.support
    }

    pub fn contains_zero(&self) -> bool {
        self.multiplicity(0) > 0
    }

    /// Ascending iteration over (element index, multiplicity).
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult.iter().map(|(&x, &k)| (x, k))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.mult.keys().copied()
    }

    /// Dense multiplicity vector indexed by element index.
    pub fn mult_vector(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.group.order() as usize];
        for (x, k) in self.iter() {
            v[x as usize] = k;
        }
        v
    }

    /// Image under an index map; multiplicities of merged preimages add up.
    pub fn map_elements(&self, f: impl Fn(u32) -> u32) -> Multiset {
        let mut out = Self::empty(self.group.clone());
        for (x, k) in self.iter() {
            out.insert(f(x), k);
        }
        out
    }

    /// Projection of the multiset onto one summand of a decomposition.
    pub fn project(&self, d: &Decomposition, side: Side) -> Multiset {
        self.map_elements(|x| d.project_idx(side, x))
    }

    /// Splits into (A ∩ H, A \ H).
    pub fn split_by(&self, h: &Subgroup) -> (Multiset, Multiset) {
        let mut inside = Self::empty(self.group.clone());
        let mut outside = Self::empty(self.group.clone());
        for (x, k) in self.iter() {
            if h.contains(x) {
                inside.insert(x, k);
            } else {
                outside.insert(x, k);
            }
        }
        (inside, outside)
    }

    /// Total multiplicity of elements lying in `h`.
    pub fn subgroup_count(&self, h: &Subgroup) -> u64 {
        self.iter()
            .filter(|&(x, _)| h.contains(x))
            .map(|(_, k)| k as u64)
            .sum()
    }

    /// Canonical one-line text form, e.g. `p=5 m=2 : (1,0)*4 (0,1)*2`.
    pub fn to_literal(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} m={} :", self.group.p(), self.group.m())?;
        for (x, k) in self.iter() {
            write!(f, " {}", self.group.element_from_index(x))?;
            if k > 1 {
                write!(f, "*{k}")?;
            }
        }
        Ok(())
    }
}

/// One offending subgroup in a validity report.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Violation {
    pub rank: u32,
    pub subgroup: String,
    pub count: u64,
    pub limit: u64,
}

/// Outcome of the validity predicate. `valid` holds exactly when the
/// identity is absent and no subgroup count reaches its limit.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub zero_present: bool,
    pub violations: Vec<Violation>,
}

/// Checks Definition-style validity: no identity element, and for every
/// d in 1..=m every rank-d subgroup contains fewer than d*p points of A
/// counting multiplicity.
///
/// Only subspaces spanned by support elements can witness a violation
/// (any violating subgroup H yields the violation on span(H ∩ supp A),
/// whose rank is no larger), so the scan walks the span lattice of the
/// support instead of all subgroups.
pub fn check_validity(a: &Multiset) -> Result<ValidityReport> {
    let g = a.group();
    if g.p() == 2 {
        return Err(Error::EvenPrimeUnsupported);
    }
    let zero_present = a.contains_zero();
    let support: Vec<u32> = a.support().filter(|&x| x != 0).collect();
    let p = g.p() as u64;

    let mut violations = Vec::new();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut frontier: Vec<Rref> = vec![Rref::new(g.p(), g.m())];
    seen.insert(frontier[0].key());
    while let Some(rref) = frontier.pop() {
        for &x in &support {
            let coords = g.coords_of(x);
            if rref.contains(&coords) {
                continue;
            }
            let mut next = rref.clone();
            next.insert(&coords);
            if !seen.insert(next.key()) {
                continue;
            }
            let d = next.rank() as u64;
            let count: u64 = support
                .iter()
                .filter(|&&y| next.contains(&g.coords_of(y)))
                .map(|&y| a.multiplicity(y) as u64)
                .sum();
            if count >= d * p {
                violations.push(Violation {
                    rank: d as u32,
                    subgroup: Subgroup::from_rref(g, &next).display(g),
                    count,
                    limit: d * p,
                });
            }
            frontier.push(next);
        }
    }
    violations.sort_by(|a, b| (a.rank, &a.subgroup).cmp(&(b.rank, &b.subgroup)));

    Ok(ValidityReport {
        valid: !zero_present && violations.is_empty(),
        zero_present,
        violations,
    })
}

/// Convenience wrapper: true iff the multiset is valid.
pub fn is_valid(a: &Multiset) -> Result<bool> {
    Ok(check_validity(a)?.valid)
}
