//! Canonical forms under the full automorphism group GL_m(F_p).
//!
//! Sumset cardinality is invariant under every invertible linear map, so the
//! search only needs one representative per orbit. The canonical form of a
//! multiset is the lexicographically minimal multiplicity vector over all
//! automorphic images. Each automorphism is stored as a permutation table on
//! element indices.

use crate::error::{Error, Result};
use crate::group::{GroupParams, Rref};
use crate::multiset::Multiset;

/// Entry budget for the permutation tables (|GL| * order).
const TABLE_ENTRY_CAP: u128 = 100_000_000;

/// The automorphism group of Z_p^m as permutation tables, plus a small
/// generator-style subset used for cheap pruning during enumeration.
pub struct Automorphisms {
    group: GroupParams,
    perms: Vec<Vec<u32>>,
    pruning_perms: Vec<Vec<u32>>,
    size: u64,
}

impl Automorphisms {
    pub fn new(g: &GroupParams) -> Result<Self> {
        let mut size: u128 = 1;
        for i in 0..g.m() {
            size *= g.order() as u128 - g.pows()[i as usize] as u128;
        }
        if size * g.order() as u128 > TABLE_ENTRY_CAP {
            return Err(Error::AutomorphismGroupTooLarge {
                size,
                order: g.order(),
            });
        }

        let mut perms = Vec::with_capacity(size as usize);
        let mut cols: Vec<u32> = Vec::with_capacity(g.m() as usize);
        let rref = Rref::new(g.p(), g.m());
        enumerate_bases(g, &rref, &mut cols, &mut perms);
        debug_assert_eq!(perms.len() as u128, size);

        // pruning subset: coordinate swaps, single-coordinate dilations,
        // and unit transvections
        let m = g.m() as usize;
        let mut mats: Vec<Vec<Vec<u32>>> = Vec::new();
        let id = |m: usize| -> Vec<Vec<u32>> {
            (0..m)
                .map(|i| (0..m).map(|j| u32::from(i == j)).collect())
                .collect()
        };
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let mut sw = id(m);
                sw.swap(i, j);
                mats.push(sw);
                let mut tv = id(m);
                tv[j][i] = 1; // col j gains e_i
                mats.push(tv);
            }
        }
        for i in 0..m {
            for c in 2..g.p() {
                let mut dl = id(m);
                dl[i][i] = c;
                mats.push(dl);
            }
        }
        let pruning_perms = mats
            .iter()
            .map(|cols| {
                let col_idx: Vec<u32> = cols.iter().map(|c| g.index_of(c).unwrap()).collect();
                perm_of_columns(g, &col_idx)
            })
            .collect();

        Ok(Automorphisms {
            group: g.clone(),
            perms,
            pruning_perms,
            size: size as u64,
        })
    }

    pub fn group(&self) -> &GroupParams {
        &self.group
    }

    /// |GL_m(F_p)|.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn perms(&self) -> &[Vec<u32>] {
        &self.perms
    }

    pub(crate) fn pruning_perms(&self) -> &[Vec<u32>] {
        &self.pruning_perms
    }
}

fn enumerate_bases(g: &GroupParams, span: &Rref, cols: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cols.len() == g.m() as usize {
        out.push(perm_of_columns(g, cols));
        return;
    }
    for z in 1..g.order() {
        let coords = g.coords_of(z);
        if span.contains(&coords) {
            continue;
        }
        let mut next = span.clone();
        next.insert(&coords);
        cols.push(z);
        enumerate_bases(g, &next, cols, out);
        cols.pop();
    }
}

/// Permutation table of the linear map sending e_i to the element with index
/// cols[i]: perm[x] = index of M*x. Filled by an odometer that applies one
/// column addition per index increment.
fn perm_of_columns(g: &GroupParams, cols: &[u32]) -> Vec<u32> {
    let order = g.order() as usize;
    let m = g.m() as usize;
    let col_coords: Vec<Vec<u32>> = cols.iter().map(|&c| g.coords_of(c)).collect();
    let mut perm = vec![0u32; order];
    let mut digits = vec![0u32; m];
    let mut acc = vec![0u32; m];
    for x in 1..order {
        let mut j = 0;
        loop {
            for (a, &c) in acc.iter_mut().zip(&col_coords[j]) {
                *a += c;
                if *a >= g.p() {
                    *a -= g.p();
                }
            }
            digits[j] += 1;
            if digits[j] < g.p() {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        perm[x] = g.index_of(&acc).unwrap();
    }
    perm
}

/// True if some image v ∘ perm is lexicographically smaller than v, deciding
/// only from the finalized prefix [0, finalized): positions >= finalized may
/// still grow, so the scan stops as soon as it would have to look there.
pub(crate) fn image_smaller_on_prefix(v: &[u32], perm: &[u32], finalized: usize) -> bool {
    for (i, &pi) in perm.iter().enumerate().take(finalized) {
        let pi = pi as usize;
        if pi >= finalized {
            return false; // image value not final; inconclusive
        }
        if v[pi] < v[i] {
            return true;
        }
        if v[pi] > v[i] {
            return false;
        }
    }
    false
}

/// True if the multiplicity vector is the lexicographic minimum of its
/// orbit. The cheap pruning subset runs first.
pub fn is_canonical_vector(v: &[u32], auts: &Automorphisms) -> bool {
    let n = v.len();
    for perm in auts.pruning_perms() {
        if image_smaller_on_prefix(v, perm, n) {
            return false;
        }
    }
    for perm in auts.perms() {
        if image_smaller_on_prefix(v, perm, n) {
            return false;
        }
    }
    true
}

/// A multiset together with its orbit-invariant tag: the minimal
/// multiplicity vector over all automorphic images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub multiset: Multiset,
    pub orbit_tag: Vec<u32>,
}

/// Minimal image of the multiset under the full automorphism group.
pub fn canonical_form(a: &Multiset, auts: &Automorphisms) -> CanonicalForm {
    let v = a.mult_vector();
    let mut best = v.clone();
    for perm in auts.perms() {
        // lazy compare of w = v ∘ perm against best
        let mut smaller = false;
        for (i, &pi) in perm.iter().enumerate() {
            let w = v[pi as usize];
            if w < best[i] {
                smaller = true;
                break;
            }
            if w > best[i] {
                break;
            }
        }
        if smaller {
            for (b, &pi) in best.iter_mut().zip(perm.iter()) {
                *b = v[pi as usize];
            }
        }
    }
    CanonicalForm {
        multiset: Multiset::from_mult_vector(a.group().clone(), &best),
        orbit_tag: best,
    }
}

/// Size of the orbit of `a` under the automorphism group.
pub fn orbit_size(a: &Multiset, auts: &Automorphisms) -> u64 {
    let v = a.mult_vector();
    let stab = auts
        .perms()
        .iter()
        .filter(|perm| perm.iter().enumerate().all(|(i, &pi)| v[pi as usize] == v[i]))
        .count() as u64;
    auts.size() / stab
}

/// Stable 64-bit FNV-1a hash of an orbit tag, used for shard assignment.
pub fn orbit_tag_hash(tag: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &x in tag {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}
