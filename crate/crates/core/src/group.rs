//! Arithmetic in Z_p^m, subgroup enumeration, direct-sum complements, and
//! projection homomorphisms.
//!
//! Elements are encoded as integer indices: `index = sum coords[i] * p^i`,
//! so coordinate 0 is the least significant digit. All set representations
//! in the crate are keyed by this encoding.

use std::fmt;

use crate::dense::DenseSet;
use crate::error::{Error, Result};

/// Hard cap on the group order so dense bit vectors stay cache-resident.
pub const DENSE_SET_CAP: u64 = 1 << 22;

/// The ambient group Z_p^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupParams {
    p: u32,
    m: u32,
    order: u32,
    pows: Vec<u32>, // pows[i] = p^i, i in 0..=m
}

/// Deterministic primality check by trial division (p is capped well below
/// 2^22, so this is exact and fast).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl GroupParams {
    /// Validates parameters and precomputes the power table.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::RankZero);
        }
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let mut order: u128 = 1;
        for _ in 0..m {
            order *= p as u128;
            if order > DENSE_SET_CAP as u128 {
                return Err(Error::OrderTooLarge {
                    order,
                    cap: DENSE_SET_CAP,
                });
            }
        }
        let mut pows = Vec::with_capacity(m as usize + 1);
        let mut acc = 1u32;
        pows.push(acc);
        for _ in 0..m {
            acc *= p as u32;
            pows.push(acc);
        }
        Ok(GroupParams {
            p: p as u32,
            m,
            order: order as u32,
            pows,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn pows(&self) -> &[u32] {
        &self.pows
    }

    pub fn coords_of(&self, idx: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.m as usize);
        let mut x = idx;
        for _ in 0..self.m {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    /// Index of a coordinate vector; coordinates must already be reduced.
    pub fn index_of(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.m as usize {
            return Err(Error::DimensionMismatch {
                got: coords.len(),
                expected: self.m,
            });
        }
        let mut idx = 0u32;
        for (i, &c) in coords.iter().enumerate() {
            debug_assert!(c < self.p);
            idx += c * self.pows[i];
        }
        Ok(idx)
    }

    /// Builds an element from possibly-unreduced signed coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.m as usize {
            return Err(Error::DimensionMismatch {
                got: coords.len(),
                expected: self.m,
            });
        }
        let reduced: Vec<u32> = coords
            .iter()
            .map(|&c| c.rem_euclid(self.p as i64) as u32)
            .collect();
        let index = self.index_of(&reduced)?;
        Ok(GroupElement {
            coords: reduced,
            index,
        })
    }

    pub fn element_from_index(&self, idx: u32) -> GroupElement {
        debug_assert!(idx < self.order);
        GroupElement {
            coords: self.coords_of(idx),
            index: idx,
        }
    }

    pub fn identity(&self) -> GroupElement {
        self.element_from_index(0)
    }

    pub fn add_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut mul = 1;
        for _ in 0..self.m {
            let mut c = a % p + b % p;
            if c >= p {
                c -= p;
            }
            out += c * mul;
            a /= p;
            b /= p;
            mul *= p;
        }
        out
    }

    pub fn neg_idx(&self, a: u32) -> u32 {
        let p = self.p;
        let mut a = a;
        let mut out = 0;
        let mut mul = 1;
        for _ in 0..self.m {
            let c = a % p;
            if c != 0 {
                out += (p - c) * mul;
            }
            a /= p;
            mul *= p;
        }
        out
    }

    pub fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn scalar_mul_idx(&self, c: u32, a: u32) -> u32 {
        let p = self.p as u64;
        let c = c as u64 % p;
        let mut a = a;
        let mut out = 0u32;
        let mut mul = 1u32;
        for _ in 0..self.m {
            let d = (c * (a % self.p) as u64 % p) as u32;
            out += d * mul;
            a /= self.p;
            mul *= self.p;
        }
        out
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.element_from_index(self.add_idx(a.index, b.index))
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.element_from_index(self.neg_idx(a.index))
    }

    pub fn scalar_mul(&self, c: u32, a: &GroupElement) -> GroupElement {
        self.element_from_index(self.scalar_mul_idx(c, a.index))
    }

    /// Index of the element whose coordinates are the base-p digits of `key`
    /// read with coordinate m-1 least significant. Used for the deterministic
    /// complement scan.
    pub(crate) fn index_from_rev_key(&self, key: u32) -> u32 {
        let mut k = key;
        let mut idx = 0;
        for i in (0..self.m as usize).rev() {
            idx += (k % self.p) * self.pows[i];
            k /= self.p;
        }
        idx
    }

    /// Canonical direction of a nonzero element: the unique scalar multiple
    /// whose first nonzero coordinate equals 1.
    pub fn canonical_direction(&self, idx: u32) -> u32 {
        debug_assert!(idx != 0);
        let coords = self.coords_of(idx);
        let lead = *coords.iter().find(|&&c| c != 0).unwrap();
        if lead == 1 {
            return idx;
        }
        let inv = mod_inverse(lead, self.p);
        self.scalar_mul_idx(inv, idx)
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// An element of Z_p^m: a coordinate vector plus its integer index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    coords: Vec<u32>,
    index: u32,
}

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Row-reduced echelon basis over F_p; the canonical representation of a
/// subspace of Z_p^m. Rows are coordinate vectors sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Rref {
    p: u32,
    m: u32,
    rows: Vec<Vec<u32>>,
}

impl Rref {
    pub fn new(p: u32, m: u32) -> Self {
        Rref {
            p,
            m,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn pivot(row: &[u32]) -> Option<usize> {
        row.iter().position(|&c| c != 0)
    }

    /// Reduces `v` by the current rows, in place.
    fn reduce(&self, v: &mut [u32]) {
        let p = self.p as u64;
        for row in &self.rows {
            let piv = Self::pivot(row).unwrap();
            let f = v[piv];
            if f != 0 {
                let f = f as u64;
                for (vi, &ri) in v.iter_mut().zip(row) {
                    let sub = f * ri as u64 % p;
                    *vi = ((*vi as u64 + p - sub) % p) as u32;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Inserts `v` if independent of the rows; returns true if rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(piv) = Self::pivot(&w) else {
            return false;
        };
        // normalize leading coefficient to 1
        let inv = mod_inverse(w[piv], self.p) as u64;
        for c in w.iter_mut() {
            *c = (*c as u64 * inv % self.p as u64) as u32;
        }
        // clear the pivot column in existing rows
        let p = self.p as u64;
        for row in self.rows.iter_mut() {
            let f = row[piv] as u64;
            if f != 0 {
                for (ri, &wi) in row.iter_mut().zip(&w) {
                    let sub = f * wi as u64 % p;
                    *ri = ((*ri as u64 + p - sub) % p) as u32;
                }
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| Self::pivot(r).unwrap() > piv)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, w);
        true
    }

    /// Flattened canonical key for dedup.
    pub fn key(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// A rank-d subgroup of Z_p^m with an explicit membership set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    rank: u32,
    basis: Vec<u32>, // element indices of the RREF basis rows
    membership: DenseSet,
}

impl Subgroup {
    /// Span of arbitrary generators; the stored basis is the canonical RREF
    /// basis of the span.
    pub fn span(g: &GroupParams, gens: &[u32]) -> Subgroup {
        let mut rref = Rref::new(g.p(), g.m());
        for &x in gens {
            rref.insert(&g.coords_of(x));
        }
        Self::from_rref(g, &rref)
    }

    pub(crate) fn from_rref(g: &GroupParams, rref: &Rref) -> Subgroup {
        let basis: Vec<u32> = rref
            .rows()
            .iter()
            .map(|row| g.index_of(row).unwrap())
            .collect();
        let d = basis.len();
        let span_size = g.pows()[d];
        let mut membership = DenseSet::empty(g.order());
        // odometer over coefficient vectors; amortized one add per element
        let mut coeffs = vec![0u32; d];
        let mut acc = 0u32;
        membership.insert(0);
        for _ in 1..span_size {
            let mut j = 0;
            loop {
                acc = g.add_idx(acc, basis[j]);
                coeffs[j] += 1;
                if coeffs[j] < g.p() {
                    break;
                }
                coeffs[j] = 0;
                j += 1;
            }
            membership.insert(acc);
        }
        debug_assert_eq!(membership.card(), span_size);
        Subgroup {
            rank: d as u32,
            basis,
            membership,
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.membership.contains(idx)
    }

    pub fn membership(&self) -> &DenseSet {
        &self.membership
    }

    pub fn size(&self) -> u32 {
        self.membership.card()
    }

    /// Text form `span{(…),(…)}`.
    pub fn display(&self, g: &GroupParams) -> String {
        let parts: Vec<String> = self
            .basis
            .iter()
            .map(|&b| g.element_from_index(b).to_string())
            .collect();
        format!("span{{{}}}", parts.join(","))
    }
}

/// The line (rank-1 subgroup) through a nonzero element.
pub fn line_through(g: &GroupParams, x: u32) -> Result<Subgroup> {
    if x == 0 {
        return Err(Error::ZeroTarget);
    }
    Ok(Subgroup::span(g, &[x]))
}

/// All rank-1 subgroups, one per canonical direction, in ascending order of
/// the direction's element index.
pub fn enumerate_lines(g: &GroupParams) -> Vec<Subgroup> {
    enumerate_subgroups(g, 1).unwrap()
}

/// All rank-d subgroups, enumerated through their canonical RREF bases.
pub fn enumerate_subgroups(g: &GroupParams, d: u32) -> Result<Vec<Subgroup>> {
    if d < 1 || d > g.m() {
        return Err(Error::RankOutOfRange {
            rank: d,
            max: g.m(),
        });
    }
    let m = g.m() as usize;
    let d = d as usize;
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(d);
    enumerate_pivot_sets(m, d, 0, &mut pivots, &mut |pivots| {
        // free positions: (row i, col j) with j > pivots[i] and j not a pivot
        let mut free = Vec::new();
        for (i, &pi) in pivots.iter().enumerate() {
            for j in pi + 1..m {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let mut values = vec![0u32; free.len()];
        loop {
            let mut rows = vec![vec![0u32; m]; d];
            for (i, &pi) in pivots.iter().enumerate() {
                rows[i][pi] = 1;
            }
            for (&(i, j), &v) in free.iter().zip(&values) {
                rows[i][j] = v;
            }
            let gens: Vec<u32> = rows.iter().map(|r| g.index_of(r).unwrap()).collect();
            out.push(Subgroup::span(g, &gens));
            // odometer
            let mut k = 0;
            loop {
                if k == values.len() {
                    return;
                }
                values[k] += 1;
                if values[k] < g.p() {
                    break;
                }
                values[k] = 0;
                k += 1;
            }
        }
    });
    Ok(out)
}

fn enumerate_pivot_sets(
    m: usize,
    d: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if acc.len() == d {
        f(acc);
        return;
    }
    let remaining = d - acc.len();
    for c in start..=m - remaining {
        acc.push(c);
        enumerate_pivot_sets(m, d, c + 1, acc, f);
        acc.pop();
    }
}

/// Number of rank-d subgroups of Z_p^m (Gaussian binomial coefficient).
pub fn gaussian_binomial(p: u64, m: u32, d: u32) -> u128 {
    if d > m {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    let pw = |e: u32| -> u128 { (0..e).fold(1u128, |a, _| a * p as u128) };
    for i in 0..d {
        num *= pw(m - i) - 1;
        den *= pw(d - i) - 1;
    }
    num / den
}

/// A direct-sum decomposition G = H ⊕ K with projection tables onto both
/// summands.
#[derive(Clone, Debug)]
pub struct Decomposition {
    h: Subgroup,
    k: Subgroup,
    pi_h: Vec<u32>,
    pi_k: Vec<u32>,
}

/// Which summand of a decomposition to project onto.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    H,
    K,
}

impl Decomposition {
    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn k(&self) -> &Subgroup {
        &self.k
    }

    pub fn project_idx(&self, side: Side, idx: u32) -> u32 {
        match side {
            Side::H => self.pi_h[idx as usize],
            Side::K => self.pi_k[idx as usize],
        }
    }

    pub fn table(&self, side: Side) -> &[u32] {
        match side {
            Side::H => &self.pi_h,
            Side::K => &self.pi_k,
        }
    }
}

/// Basis of the deterministic complement of `h`: greedy completion, scanning
/// candidates in ascending order of the reversed-significance key (coordinate
/// m-1 varies fastest).
pub fn complement_basis(g: &GroupParams, h: &Subgroup) -> Result<Vec<u32>> {
    if h.rank() == g.m() {
        return Err(Error::NoComplementNeeded);
    }
    let mut rref = Rref::new(g.p(), g.m());
    for &b in h.basis() {
        rref.insert(&g.coords_of(b));
    }
    let mut k_basis = Vec::new();
    for key in 1..g.order() {
        if rref.rank() == g.m() {
            break;
        }
        let z = g.index_from_rev_key(key);
        let coords = g.coords_of(z);
        if !rref.contains(&coords) {
            rref.insert(&coords);
            k_basis.push(z);
        }
    }
    Ok(k_basis)
}

/// Deterministic complement of `h` together with both projection tables.
pub fn complement(g: &GroupParams, h: &Subgroup) -> Result<Decomposition> {
    let k_basis = complement_basis(g, h)?;
    let k = Subgroup::span(g, &k_basis);
    let d = h.rank() as usize;
    let m = g.m() as usize;

    // full basis matrix: columns are the basis of H then the basis of K
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(m);
    for &b in h.basis() {
        cols.push(g.coords_of(b));
    }
    for &b in k.basis() {
        cols.push(g.coords_of(b));
    }
    let inv = invert_matrix(g.p(), &cols);

    let order = g.order() as usize;
    let mut pi_h = vec![0u32; order];
    let mut pi_k = vec![0u32; order];
    for z in 0..order {
        let zc = g.coords_of(z as u32);
        // alpha = inv * z
        let mut h_part = vec![0u32; m];
        for (i, inv_row) in inv.iter().enumerate().take(d) {
            let mut alpha = 0u64;
            for (j, &zj) in zc.iter().enumerate() {
                alpha += inv_row[j] as u64 * zj as u64;
            }
            let alpha = (alpha % g.p() as u64) as u32;
            if alpha != 0 {
                let bc = &cols[i];
                for (hp, &bc_j) in h_part.iter_mut().zip(bc) {
                    *hp = ((*hp as u64 + alpha as u64 * bc_j as u64) % g.p() as u64) as u32;
                }
            }
        }
        let hp_idx = g.index_of(&h_part).unwrap();
        pi_h[z] = hp_idx;
        pi_k[z] = g.sub_idx(z as u32, hp_idx);
    }
    Ok(Decomposition { h: h.clone(), k, pi_h, pi_k })
}

/// Inverse of the matrix whose columns are given, over F_p.
fn invert_matrix(p: u32, cols: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let m = cols.len();
    let pl = p as u64;
    // augmented [A | I], A[i][j] = cols[j][i]
    let mut a: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            let mut row: Vec<u64> = (0..m).map(|j| cols[j][i] as u64).collect();
            row.extend((0..m).map(|j| u64::from(j == i)));
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| a[r][col] != 0).expect("singular basis");
        a.swap(col, piv);
        let inv = mod_inverse(a[col][col] as u32, p) as u64;
        for x in a[col].iter_mut() {
            *x = *x * inv % pl;
        }
        for r in 0..m {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, &pv) in a[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + pl - f * pv % pl) % pl;
                }
            }
        }
    }
    a.iter()
        .map(|row| row[m..].iter().map(|&x| x as u32).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_group_validates() {
        let g = GroupParams::new(5, 2).unwrap();
        assert_eq!(g.order(), 25);
        assert!(matches!(GroupParams::new(4, 2), Err(Error::NonPrime(4))));
        assert!(matches!(GroupParams::new(5, 0), Err(Error::RankZero)));
        let g27 = GroupParams::new(3, 3).unwrap();
        assert_eq!(g27.order(), 27);
        assert!(matches!(
            GroupParams::new(2, 23),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn coords_index_round_trip() {
        let g = GroupParams::new(7, 3).unwrap();
        for idx in 0..g.order() {
            let c = g.coords_of(idx);
            assert_eq!(g.index_of(&c).unwrap(), idx);
        }
        assert_eq!(g.identity().index(), 0);
    }

    #[test]
    fn arithmetic_examples() {
        let g = GroupParams::new(5, 2).unwrap();
        let a = g.element(&[1, 0]).unwrap();
        let b = g.element(&[4, 0]).unwrap();
        assert_eq!(g.add(&a, &b), g.identity());
        let x = g.element(&[1, 2]).unwrap();
        assert_eq!(g.scalar_mul(3, &x), g.element(&[3, 1]).unwrap());

        let g3 = GroupParams::new(3, 3).unwrap();
        let y = g3.element(&[1, 2, 0]).unwrap();
        assert_eq!(g3.neg(&y), g3.element(&[2, 1, 0]).unwrap());
    }

    #[test]
    fn scalar_mul_consistent_with_neg() {
        let g = GroupParams::new(7, 2).unwrap();
        for idx in 0..g.order() {
            assert_eq!(g.scalar_mul_idx(6, idx), g.neg_idx(idx));
            assert_eq!(g.scalar_mul_idx(7, idx), 0);
        }
    }

    #[test]
    fn line_counts() {
        let g = GroupParams::new(5, 2).unwrap();
        assert_eq!(enumerate_lines(&g).len(), 6);
        let g = GroupParams::new(3, 3).unwrap();
        assert_eq!(enumerate_lines(&g).len(), 13);
        let g = GroupParams::new(2, 2).unwrap();
        assert_eq!(enumerate_lines(&g).len(), 3);
    }

    #[test]
    fn lines_partition_nonzero_elements() {
        for (p, m) in [(3u64, 2u32), (5, 2), (3, 3)] {
            let g = GroupParams::new(p, m).unwrap();
            let lines = enumerate_lines(&g);
            for x in 1..g.order() {
                let n = lines.iter().filter(|l| l.contains(x)).count();
                assert_eq!(n, 1, "element {x} of Z_{p}^{m} lies in {n} lines");
            }
        }
    }

    #[test]
    fn subgroup_counts_match_gaussian_binomials() {
        let g = GroupParams::new(3, 3).unwrap();
        assert_eq!(enumerate_subgroups(&g, 2).unwrap().len(), 13);
        assert_eq!(gaussian_binomial(3, 3, 2), 13);
        let g = GroupParams::new(5, 2).unwrap();
        assert_eq!(enumerate_subgroups(&g, 2).unwrap().len(), 1);
        let g = GroupParams::new(3, 2).unwrap();
        assert_eq!(enumerate_subgroups(&g, 1).unwrap().len(), 4);
        assert!(matches!(
            enumerate_subgroups(&g, 3),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn subgroups_closed_under_addition() {
        let g = GroupParams::new(3, 3).unwrap();
        for sg in enumerate_subgroups(&g, 2).unwrap() {
            assert_eq!(sg.size(), 9);
            let members: Vec<u32> = sg.membership().iter_ones().collect();
            for &a in &members {
                for &b in &members {
                    assert!(sg.contains(g.add_idx(a, b)));
                }
            }
        }
    }

    #[test]
    fn complement_examples() {
        let g = GroupParams::new(5, 2).unwrap();
        // H = <(1,0)> -> K = <(0,1)>
        let h = line_through(&g, g.element(&[1, 0]).unwrap().index()).unwrap();
        let d = complement(&g, &h).unwrap();
        assert_eq!(d.k().basis(), &[g.element(&[0, 1]).unwrap().index()]);

        // H = <(1,1)> -> K = <(0,1)>, pi_H((2,3)) = (2,2)
        let h = line_through(&g, g.element(&[1, 1]).unwrap().index()).unwrap();
        let d = complement(&g, &h).unwrap();
        assert_eq!(d.k().basis(), &[g.element(&[0, 1]).unwrap().index()]);
        let z = g.element(&[2, 3]).unwrap().index();
        assert_eq!(
            d.project_idx(Side::H, z),
            g.element(&[2, 2]).unwrap().index()
        );

        // rank-2 H inside Z_3^3 -> K = <(0,0,1)>
        let g3 = GroupParams::new(3, 3).unwrap();
        let h = Subgroup::span(
            &g3,
            &[
                g3.element(&[1, 0, 0]).unwrap().index(),
                g3.element(&[0, 1, 0]).unwrap().index(),
            ],
        );
        let d = complement(&g3, &h).unwrap();
        assert_eq!(d.k().basis(), &[g3.element(&[0, 0, 1]).unwrap().index()]);

        // whole group has no proper complement
        let whole = Subgroup::span(&g, &[1, g.pows()[1]]);
        assert!(matches!(
            complement(&g, &whole),
            Err(Error::NoComplementNeeded)
        ));
    }

    #[test]
    fn projection_brute_force_check() {
        // pi_H((2,3)) over H=<(1,1)>, K=<(0,1)>: solve (2,3)=a(1,1)+b(0,1)
        let g = GroupParams::new(5, 2).unwrap();
        let mut found = None;
        for a in 0..5u32 {
            for b in 0..5u32 {
                let lhs = g.add_idx(
                    g.scalar_mul_idx(a, g.element(&[1, 1]).unwrap().index()),
                    g.scalar_mul_idx(b, g.element(&[0, 1]).unwrap().index()),
                );
                if lhs == g.element(&[2, 3]).unwrap().index() {
                    found = Some((a, b));
                }
            }
        }
        let (a, _) = found.unwrap();
        let expected = g.scalar_mul_idx(a, g.element(&[1, 1]).unwrap().index());
        assert_eq!(expected, g.element(&[2, 2]).unwrap().index());
    }

    #[test]
    fn projection_laws_exhaustive() {
        // idempotence, pi_H + pi_K = id, homomorphism; exhaustive at small order
        for (p, m, basis) in [
            (5u64, 2u32, vec![vec![1i64, 1]]),
            (3, 3, vec![vec![1, 0, 1], vec![0, 1, 2]]),
        ] {
            let g = GroupParams::new(p, m).unwrap();
            let gens: Vec<u32> = basis
                .iter()
                .map(|b| g.element(b).unwrap().index())
                .collect();
            let h = Subgroup::span(&g, &gens);
            let d = complement(&g, &h).unwrap();
            for z in 0..g.order() {
                let ph = d.project_idx(Side::H, z);
                let pk = d.project_idx(Side::K, z);
                assert_eq!(g.add_idx(ph, pk), z);
                assert_eq!(d.project_idx(Side::H, ph), ph);
                assert!(h.contains(ph));
                assert!(d.k().contains(pk));
                if d.project_idx(Side::H, z) == 0 {
                    assert!(d.k().contains(z));
                }
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let s = g.add_idx(a, b);
                    assert_eq!(
                        d.project_idx(Side::H, s),
                        g.add_idx(d.project_idx(Side::H, a), d.project_idx(Side::H, b))
                    );
                }
            }
        }
    }

    #[test]
    fn complement_is_deterministic() {
        let g = GroupParams::new(7, 2).unwrap();
        for line in enumerate_lines(&g) {
            let d1 = complement(&g, &line).unwrap();
            let d2 = complement(&g, &line).unwrap();
            assert_eq!(d1.k().basis(), d2.k().basis());
        }
    }

    #[test]
    fn canonical_direction_normalizes() {
        let g = GroupParams::new(5, 2).unwrap();
        let x = g.element(&[2, 3]).unwrap().index();
        let d = g.canonical_direction(x);
        let dc = g.coords_of(d);
        assert_eq!(dc[0], 1);
        // same line
        let line = line_through(&g, x).unwrap();
        assert!(line.contains(d));
    }

    #[test]
    fn subgroup_display_form() {
        let g = GroupParams::new(5, 2).unwrap();
        let h = line_through(&g, g.element(&[1, 1]).unwrap().index()).unwrap();
        assert_eq!(h.display(&g), "span{(1,1)}");
    }
}
