//! Exact sumset computation.
//!
//! The dynamic program starts from {0} and, for each distinct element x
//! with multiplicity clamped to p-1 (p·x = 0, so larger multiplicities
//! saturate the cyclic line), ORs in c shifted copies of the running set.
//! A shift by x decomposes into per-coordinate block rotations of the bit
//! vector: adding a to coordinate j moves each aligned block of p^(j+1)
//! bits in two contiguous chunks, so no per-bit index arithmetic is needed.
//! Elements are processed in ascending index order; the result is
//! order-independent.

use crate::dense::{or_bit_range, DenseSet};
use crate::error::{Error, Result};
use crate::group::{Decomposition, GroupParams, Side};
use crate::multiset::Multiset;

/// Cap on the number of submultisets the brute-force oracle will enumerate.
pub const BRUTE_FORCE_CAP: u64 = 1 << 24;

/// In-place `work = work + x` (as a set translate), using `tmp` as scratch.
fn shift_by_element(g: &GroupParams, work: &mut Vec<u64>, tmp: &mut Vec<u64>, x: u32) {
    let p = g.p() as usize;
    let order = g.order() as usize;
    let mut rem = x;
    for j in 0..g.m() as usize {
        let a = (rem % g.p()) as usize;
        rem /= g.p();
        if a == 0 {
            continue;
        }
        let stride = g.pows()[j] as usize;
        let block = stride * p;
        let keep = (p - a) * stride;
        let rest = a * stride;
        tmp.iter_mut().for_each(|w| *w = 0);
        let mut bs = 0;
        while bs < order {
            or_bit_range(tmp, work, bs, bs + rest, keep);
            or_bit_range(tmp, work, bs + keep, bs, rest);
            bs += block;
        }
        std::mem::swap(work, tmp);
    }
}

/// Exact sumset of a multiset, as a dense characteristic set. The identity
/// (empty subsum) is always present.
pub fn sumset(a: &Multiset) -> DenseSet {
    let g = a.group();
    let order = g.order() as usize;
    let words = order.div_ceil(64);
    let mut acc = vec![0u64; words];
    acc[0] |= 1;
    let mut shifted = vec![0u64; words];
    let mut tmp = vec![0u64; words];
    for (x, mult) in a.iter() {
        if x == 0 {
            continue; // copies of the identity contribute nothing
        }
        let c = mult.min(g.p() - 1);
        for _ in 0..c {
            shifted.clone_from(&acc);
            shift_by_element(g, &mut shifted, &mut tmp, x);
            let mut changed = false;
            for (aw, sw) in acc.iter_mut().zip(&shifted) {
                let next = *aw | sw;
                if next != *aw {
                    *aw = next;
                    changed = true;
                }
            }
            if !changed {
                break; // the line through x is saturated
            }
        }
    }
    DenseSet::from_words(g.order(), acc)
}

/// Number of distinct subsums, without exposing the set.
pub fn sumset_card(a: &Multiset) -> u64 {
    sumset(a).card() as u64
}

/// Definition-level oracle: enumerates every choice vector (delta_x) with
/// 0 <= delta_x <= m_x and inserts its sum. Independent of the dynamic
/// program above; must agree with it bit for bit.
pub fn brute_force_sumset(a: &Multiset) -> Result<DenseSet> {
    let mut count: u128 = 1;
    for (_, mult) in a.iter() {
        count = count.saturating_mul(mult as u128 + 1);
        if count > BRUTE_FORCE_CAP as u128 {
            return Err(Error::TooManySubmultisets {
                count,
                cap: BRUTE_FORCE_CAP,
            });
        }
    }
    let g = a.group();
    let support: Vec<(u32, u32)> = a.iter().collect();
    let mut out = DenseSet::empty(g.order());
    fn rec(g: &GroupParams, sup: &[(u32, u32)], acc: u32, out: &mut DenseSet) {
        match sup.split_first() {
            None => out.insert(acc),
            Some((&(x, mult), rest)) => {
                let mut cur = acc;
                rec(g, rest, cur, out);
                for _ in 0..mult {
                    cur = g.add_idx(cur, x);
                    rec(g, rest, cur, out);
                }
            }
        }
    }
    rec(g, &support, 0, &mut out);
    Ok(out)
}

/// Image of a dense set under one projection of a decomposition.
pub fn project_set(s: &DenseSet, d: &Decomposition, side: Side) -> DenseSet {
    let table = d.table(side);
    let mut out = DenseSet::empty(s.len());
    for i in s.iter_ones() {
        out.insert(table[i as usize]);
    }
    out
}
