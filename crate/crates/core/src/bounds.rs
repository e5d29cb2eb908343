//! Lower-bound certificates for sumset cardinalities, the conjectured floor,
//! and the hypothesis thresholds of the two asymptotic theorems.
//!
//! Every certificate except `ConjectureFloor` is sound: whenever its rule's
//! preconditions hold, `value <= #ΣA`. The floor is the conjectured target,
//! not a theorem.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{complement_basis, enumerate_lines, line_through, GroupParams, Subgroup};
use crate::multiset::{check_validity, Multiset};

/// Euler-Mascheroni constant, used by the harmonic-number comparison.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundRule {
    #[serde(rename = "CD")]
    Cd,
    KneserUnion,
    Sweep,
    LineBound,
    PairReplacement,
    ConjectureFloor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundParams {
    Cd {
        line: Option<String>,
        size: u64,
    },
    KneserUnion {
        parts: u64,
        card_sum: u64,
        largest_proper_subgroup: u64,
    },
    Sweep {
        h: String,
        k: String,
        d_size: u64,
        e_size: u64,
    },
    LineBound {
        x: String,
        line: String,
        line_count: u64,
    },
    PairReplacement {
        z: String,
        j: u64,
        line_count: u64,
    },
    ConjectureFloor {
        q: u64,
        k: u64,
        clause: String,
    },
}

/// A claimed lower bound on #ΣA together with the rule and parameters that
/// produced it. Serializes as `{rule, params, value}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub rule: BoundRule,
    pub params: BoundParams,
    pub value: i64,
}

/// The one-line bound: for a zero-free multiset on a single line,
/// #ΣA >= min(p, |A|+1).
pub fn cd_bound(a: &Multiset) -> Result<BoundCertificate> {
    if a.contains_zero() {
        return Err(Error::ZeroInMultiset);
    }
    let g = a.group();
    let mut line: Option<Subgroup> = None;
    if g.m() > 1 {
        let mut dir = None;
        for x in a.support() {
            let d = g.canonical_direction(x);
            match dir {
                None => dir = Some(d),
                Some(prev) if prev != d => return Err(Error::NotOnOneLine),
                Some(_) => {}
            }
        }
        if let Some(d) = dir {
            line = Some(line_through(g, d)?);
        }
    }
    let value = (g.p() as u64).min(a.total() + 1) as i64;
    Ok(BoundCertificate {
        rule: BoundRule::Cd,
        params: BoundParams::Cd {
            line: line.map(|l| l.display(g)),
            size: a.total(),
        },
        value,
    })
}

/// Union bound from iterated Kneser: given the exact sumset sizes of the
/// parts of a partition of A, #ΣA >= min(|G|, sum - (j-1)*p^(m-1)). The
/// dichotomy "either ΣA = G or ..." is folded into the min, so the value is
/// sound unconditionally.
pub fn kneser_union_bound(cards: &[u64], g: &GroupParams) -> Result<BoundCertificate> {
    if cards.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let largest_proper = g.pows()[g.m() as usize - 1] as i64;
    let sum: i64 = cards.iter().map(|&c| c as i64).sum();
    let raw = sum - (cards.len() as i64 - 1) * largest_proper;
    let value = raw.min(g.order() as i64);
    Ok(BoundCertificate {
        rule: BoundRule::KneserUnion,
        params: BoundParams::KneserUnion {
            parts: cards.len() as u64,
            card_sum: sum as u64,
            largest_proper_subgroup: largest_proper as u64,
        },
        value,
    })
}

/// Sweep bound in rank 2: split A into D = A ∩ H and the projection E of the
/// rest onto the deterministic complement K, then
/// #ΣA >= min(p, 1+|D|) * min(p, 1+|E|).
pub fn sweep_bound(a: &Multiset, h: &Subgroup) -> Result<BoundCertificate> {
    let g = a.group();
    if g.m() != 2 {
        return Err(Error::RankOutOfRange {
            rank: g.m(),
            max: 2,
        });
    }
    if a.contains_zero() {
        return Err(Error::ZeroInMultiset);
    }
    if h.rank() != 1 {
        return Err(Error::RankOutOfRange { rank: h.rank(), max: 1 });
    }
    let k_basis = complement_basis(g, h)?;
    let k = Subgroup::span(g, &k_basis);
    let d_size = a.subgroup_count(h);
    let e_size = a.total() - d_size;
    let p = g.p() as u64;
    let value = (p.min(1 + d_size) * p.min(1 + e_size)) as i64;
    Ok(BoundCertificate {
        rule: BoundRule::Sweep,
        params: BoundParams::Sweep {
            h: h.display(g),
            k: k.display(g),
            d_size,
            e_size,
        },
        value,
    })
}

/// Outcome of the line rule: the hypothesis "enough of A on one line" either
/// holds (certificate) or does not (no bound from this x).
pub fn line_bound(a: &Multiset, x: u32) -> Result<Option<BoundCertificate>> {
    let g = a.group();
    if g.m() != 2 {
        return Err(Error::RankOutOfRange {
            rank: g.m(),
            max: 2,
        });
    }
    if x == 0 {
        return Err(Error::ZeroTarget);
    }
    if !check_validity(a)?.valid {
        return Err(Error::InvalidMultiset);
    }
    let p = g.p() as u64;
    let n = a.total();
    if n + 1 < p || n > 2 * p - 2 {
        return Err(Error::SizeOutOfRange {
            n,
            lo: p - 1,
            hi: 2 * p - 2,
        });
    }
    let line = line_through(g, x)?;
    let count = a.subgroup_count(&line);
    if count + (p - 1) < n {
        return Ok(None);
    }
    let value = ((n + 2 - p) * p) as i64;
    Ok(Some(BoundCertificate {
        rule: BoundRule::LineBound,
        params: BoundParams::LineBound {
            x: g.element_from_index(x).to_string(),
            line: line.display(g),
            line_count: count,
        },
        value,
    }))
}

/// Largest j allowed by the pair-count inequality for target z:
/// 2j <= sum over t outside <z> of min(m_t, m_{z-t}).
pub fn pair_budget(a: &Multiset, z: u32) -> Result<u64> {
    let g = a.group();
    if z == 0 {
        return Err(Error::ZeroTarget);
    }
    let line = line_through(g, z)?;
    let mut sum = 0u64;
    for (t, mt) in a.iter() {
        if line.contains(t) {
            continue;
        }
        let other = g.sub_idx(z, t);
        let mo = a.multiplicity(other);
        sum += mt.min(mo) as u64;
    }
    Ok(sum)
}

/// Pair-replacement bound: replace j disjoint pairs summing to z by copies
/// of z, then sweep along the line through z. With L the multiplicity of A
/// on that line, #ΣA >= min(p, 1+j+L) * min(p, 1+|A|-2j-L).
pub fn pair_replacement_bound(a: &Multiset, z: u32, j: u64) -> Result<BoundCertificate> {
    let g = a.group();
    if g.m() != 2 {
        return Err(Error::RankOutOfRange {
            rank: g.m(),
            max: 2,
        });
    }
    if z == 0 {
        return Err(Error::ZeroTarget);
    }
    if !check_validity(a)?.valid {
        return Err(Error::InvalidMultiset);
    }
    let budget = pair_budget(a, z)?;
    if 2 * j > budget {
        return Err(Error::JOutOfRange {
            j,
            pair_sum: budget,
        });
    }
    let line = line_through(g, z)?;
    let l = a.subgroup_count(&line);
    let p = g.p() as u64;
    let value = (p.min(1 + j + l) * p.min(1 + a.total() - 2 * j - l)) as i64;
    Ok(BoundCertificate {
        rule: BoundRule::PairReplacement,
        params: BoundParams::PairReplacement {
            z: g.element_from_index(z).to_string(),
            j,
            line_count: l,
        },
        value,
    })
}

fn rule_rank(rule: BoundRule) -> u8 {
    match rule {
        BoundRule::Cd => 0,
        BoundRule::Sweep => 1,
        BoundRule::LineBound => 2,
        BoundRule::PairReplacement => 3,
        BoundRule::KneserUnion => 4,
        BoundRule::ConjectureFloor => 5,
    }
}

/// Best certificate over the free choices: the sweep bound for every line,
/// the line rule for every line where its hypothesis holds, and the
/// pair-replacement rule for every nonzero z reachable as a sum of two
/// support elements on distinct lines with every feasible j >= 1 (j = 0
/// duplicates the sweep). Ties break by rule order CD < Sweep < LineBound <
/// PairReplacement, then by smallest parameters.
pub fn best_bound(a: &Multiset) -> Result<BoundCertificate> {
    let g = a.group();
    if g.m() != 2 {
        return Err(Error::RankOutOfRange {
            rank: g.m(),
            max: 2,
        });
    }
    if !check_validity(a)?.valid {
        return Err(Error::InvalidMultiset);
    }

    // (value desc, rule rank asc, params asc) — first wins
    let mut best: Option<(BoundCertificate, (i64, u8, u64, u64))> = None;
    let mut consider = |cert: BoundCertificate, p1: u64, p2: u64| {
        let key = (-cert.value, rule_rank(cert.rule), p1, p2);
        match &best {
            Some((_, bk)) if (bk.0, bk.1, bk.2, bk.3) <= (key.0, key.1, key.2, key.3) => {}
            _ => best = Some((cert, key)),
        }
    };

    // CD applies when the support sits on one line (or is empty)
    if let Ok(cert) = cd_bound(a) {
        consider(cert, 0, 0);
    }

    let lines = enumerate_lines(g);
    let n = a.total();
    let p = g.p() as u64;
    for line in &lines {
        let dir = line.basis()[0] as u64;
        let cert = sweep_bound(a, line)?;
        consider(cert, dir, 0);
        if n + 1 >= p && n <= 2 * p - 2 {
            if let Some(cert) = line_bound(a, line.basis()[0])? {
                consider(cert, dir, 0);
            }
        }
    }

    // z candidates: sums of two support elements on distinct lines
    let support: Vec<u32> = a.support().collect();
    let mut z_candidates: Vec<u32> = Vec::new();
    for (i, &x) in support.iter().enumerate() {
        for &y in &support[i..] {
            if x == y && a.multiplicity(x) < 2 {
                continue;
            }
            if g.canonical_direction(x) == g.canonical_direction(y) {
                continue;
            }
            let z = g.add_idx(x, y);
            if z != 0 {
                z_candidates.push(z);
            }
        }
    }
    z_candidates.sort_unstable();
    z_candidates.dedup();
    for &z in &z_candidates {
        let budget = pair_budget(a, z)?;
        for j in 1..=budget / 2 {
            let cert = pair_replacement_bound(a, z, j)?;
            consider(cert, z as u64, j);
        }
    }

    Ok(best.expect("sweep certificates always exist").0)
}

/// The conjectured minimum of #ΣA over valid multisets of size n in Z_p^m.
/// For n < p this is the tight one-line bound n+1; for n = qp+k it is
/// (k+2)p^q, p^(q+1)-1, or p^(q+1) according to k <= p-3, k = p-2, k = p-1.
pub fn conjecture_floor(p: u64, m: u32, n: u64) -> Result<u64> {
    let g = GroupParams::new(p, m)?;
    if g.p() == 2 {
        return Err(Error::EvenPrimeUnsupported);
    }
    let max_n = m as u64 * p - 1;
    if n > max_n {
        return Err(Error::SizeOutOfRange {
            n,
            lo: 0,
            hi: max_n,
        });
    }
    if n < p {
        return Ok(n + 1);
    }
    let q = (n / p) as u32;
    let k = n % p;
    let pq = (p as u128).pow(q) as u64;
    Ok(if k <= p - 3 {
        (k + 2) * pq
    } else if k == p - 2 {
        pq * p - 1
    } else {
        pq * p
    })
}

/// Certificate wrapper for the floor; not a sound bound, recorded as a target.
pub fn conjecture_floor_certificate(p: u64, m: u32, n: u64) -> Result<BoundCertificate> {
    let value = conjecture_floor(p, m, n)? as i64;
    let (q, k, clause) = if n < p {
        (0, n, "cd".to_string())
    } else {
        let q = n / p;
        let k = n % p;
        let clause = if k <= p - 3 {
            "a"
        } else if k == p - 2 {
            "b"
        } else {
            "c"
        };
        (q, k, clause.to_string())
    };
    Ok(BoundCertificate {
        rule: BoundRule::ConjectureFloor,
        params: BoundParams::ConjectureFloor { q, k, clause },
        value,
    })
}

/// Exact k-th harmonic number as a rational.
pub fn harmonic(k: u64) -> BigRational {
    let mut h = BigRational::zero();
    for i in 1..=k {
        h += BigRational::new(BigInt::one(), BigInt::from(i));
    }
    h
}

/// Smallest prime-independent threshold ceil(4(k+1)^2 H_k - 2k) for the
/// large-p theorem, computed in exact rational arithmetic.
pub fn p_min_large_p_theorem(k: u64) -> u64 {
    let expr = BigRational::from(BigInt::from(4 * (k + 1) * (k + 1))) * harmonic(k)
        - BigRational::from(BigInt::from(2 * k));
    expr.ceil().to_integer().to_u64().unwrap_or(u64::MAX)
}

/// Hypothesis thresholds for the pair of asymptotic theorems at (p, k).
/// Logarithms are natural; the k_max comparison is done by squaring instead
/// of taking the square root.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub p: u64,
    pub k: u64,
    /// Exact H_k as "num/den".
    pub harmonic_exact: String,
    pub harmonic_f64: f64,
    /// ceil(4(k+1)^2 H_k - 2k): the theorem applies when p is at least this.
    pub p_min_large_p: u64,
    pub large_p_hypothesis_holds: bool,
    /// Largest k' with (k'+1)^2 (2 ln p + 1) <= p, or -1 if none.
    pub k_max_small_k: i64,
    pub small_k_hypothesis_holds: bool,
    pub log_base: String,
}

pub fn thresholds(p: u64, k: u64) -> ThresholdReport {
    assert!(k >= 1, "thresholds requires k >= 1");
    let h = harmonic(k);
    let p_min = p_min_large_p_theorem(k);
    let ln_p = (p as f64).ln();
    let bound = 2.0 * ln_p + 1.0;
    let fits = |kk: i64| -> bool {
        if kk < 0 {
            return true;
        }
        let s = (kk + 1) as f64;
        s * s * bound <= p as f64
    };
    let mut k_max = ((p as f64 / bound).sqrt() - 1.0).floor() as i64;
    while !fits(k_max) {
        k_max -= 1;
    }
    while fits(k_max + 1) {
        k_max += 1;
    }
    ThresholdReport {
        p,
        k,
        harmonic_exact: format!("{}/{}", h.numer(), h.denom()),
        harmonic_f64: rational_to_f64(&h),
        p_min_large_p: p_min,
        large_p_hypothesis_holds: k >= 2 && p >= p_min,
        k_max_small_k: k_max,
        small_k_hypothesis_holds: k >= 2 && fits(k as i64),
        log_base: "natural".to_string(),
    }
}

/// f64 value of a non-negative rational, accurate to well below 1e-12 for
/// the harmonic numbers in range.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    // scale to keep 18 significant digits through the integer division
    let scale = BigInt::from(1_000_000_000_000_000_000u64);
    let scaled = (r * BigRational::from(scale.clone())).trunc().to_integer();
    let q = (&scaled / &scale).to_f64().unwrap();
    let rem = (&scaled % &scale).abs().to_f64().unwrap();
    q + rem / 1e18
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::multiset::Multiset;
    use crate::sumset::sumset_card;

    #[test]
    fn cd_examples() {
        let g = GroupParams::new(5, 2).unwrap();
        let a = Multiset::from_pairs(g.clone(), &[(1, 4)]);
        assert_eq!(cd_bound(&a).unwrap().value, 5);
        let g7 = GroupParams::new(7, 1).unwrap();
        let b = Multiset::from_pairs(g7, &[(2, 1), (3, 1)]);
        assert_eq!(cd_bound(&b).unwrap().value, 3);
        let c = Multiset::from_pairs(g.clone(), &[(1, 6), (2, 4)]);
        assert_eq!(cd_bound(&c).unwrap().value, 5);

        let mut z = Multiset::empty(g.clone());
        z.insert(0, 1);
        assert!(matches!(cd_bound(&z), Err(Error::ZeroInMultiset)));
        let two_lines = Multiset::from_pairs(g, &[(1, 1), (5, 1)]);
        assert!(matches!(cd_bound(&two_lines), Err(Error::NotOnOneLine)));
    }

    #[test]
    fn kneser_examples() {
        let g = GroupParams::new(5, 2).unwrap();
        assert_eq!(kneser_union_bound(&[10, 10], &g).unwrap().value, 15);
        assert_eq!(kneser_union_bound(&[25], &g).unwrap().value, 25);
        assert_eq!(kneser_union_bound(&[5, 5, 5], &g).unwrap().value, 5);
        assert!(matches!(
            kneser_union_bound(&[], &g),
            Err(Error::EmptyPartition)
        ));
    }

    #[test]
    fn kneser_checked_against_concrete_partition() {
        // two parts, each an automorphic image of the two-point extremal
        // multiset with sumset size 10
        let g = GroupParams::new(5, 2).unwrap();
        let part1 = constructions::extremal_2d(5, 0).unwrap();
        assert_eq!(sumset_card(&part1), 10);
        // shear (1,0) -> (1,1), (0,1) -> (0,1)
        let part2 = Multiset::from_pairs(
            g.clone(),
            &[
                (g.element(&[1, 1]).unwrap().index(), 4),
                (g.element(&[0, 1]).unwrap().index(), 1),
            ],
        );
        assert_eq!(sumset_card(&part2), 10);
        let mut union = part1.clone();
        for (x, k) in part2.iter() {
            union.insert(x, k);
        }
        let bound = kneser_union_bound(&[10, 10], &g).unwrap();
        assert_eq!(bound.value, 15);
        assert!(bound.value <= sumset_card(&union) as i64);
    }

    #[test]
    fn sweep_examples() {
        let g = GroupParams::new(5, 2).unwrap();
        let a = constructions::extremal_2d(5, 1).unwrap();
        let h = line_through(&g, 1).unwrap();
        let cert = sweep_bound(&a, &h).unwrap();
        assert_eq!(cert.value, 15);
        match &cert.params {
            BoundParams::Sweep { d_size, e_size, .. } => {
                assert_eq!((*d_size, *e_size), (4, 2));
            }
            other => panic!("unexpected params {other:?}"),
        }

        // entirely inside H: E empty, value = min(p, 1+|A|) * 1
        let b = Multiset::from_pairs(g.clone(), &[(1, 3)]);
        assert_eq!(sweep_bound(&b, &h).unwrap().value, 4);
    }

    #[test]
    fn line_bound_examples() {
        // |A| = p: any x in A qualifies, value 2p
        let g = GroupParams::new(5, 2).unwrap();
        let a = constructions::extremal_2d(5, 0).unwrap();
        for x in a.support() {
            let cert = line_bound(&a, x).unwrap().unwrap();
            assert_eq!(cert.value, 10);
        }

        let a = constructions::extremal_2d(5, 1).unwrap();
        assert_eq!(line_bound(&a, 1).unwrap().unwrap().value, 15);

        // spread-out multiset: no line qualifies
        let spread = Multiset::from_pairs(
            g.clone(),
            &[
                (g.element(&[1, 0]).unwrap().index(), 1),
                (g.element(&[0, 1]).unwrap().index(), 1),
                (g.element(&[1, 1]).unwrap().index(), 1),
                (g.element(&[1, 2]).unwrap().index(), 1),
                (g.element(&[1, 3]).unwrap().index(), 1),
                (g.element(&[1, 4]).unwrap().index(), 1),
            ],
        );
        for line in enumerate_lines(&g) {
            assert!(line_bound(&spread, line.basis()[0]).unwrap().is_none());
        }

        // out-of-range sizes are rejected rather than certified vacuously
        let tiny = Multiset::from_pairs(g.clone(), &[(1, 2)]);
        assert!(matches!(
            line_bound(&tiny, 1),
            Err(Error::SizeOutOfRange { .. })
        ));
    }

    #[test]
    fn pair_replacement_matches_sweep_at_j0() {
        let g = GroupParams::new(5, 2).unwrap();
        let a = constructions::extremal_2d(5, 1).unwrap();
        for z in 1..g.order() {
            let line = line_through(&g, z).unwrap();
            let sweep = sweep_bound(&a, &line).unwrap();
            let pair = pair_replacement_bound(&a, z, 0).unwrap();
            assert_eq!(pair.value, sweep.value, "z = {z}");
        }
    }

    #[test]
    fn pair_replacement_budget_and_errors() {
        let g = GroupParams::new(5, 2).unwrap();
        let a = constructions::extremal_2d(5, 1).unwrap();
        // z = (1,1): pairs (1,0)+(0,1); budget = min(4,2)+min(2,4) = 4, so j <= 2
        let z = g.element(&[1, 1]).unwrap().index();
        assert_eq!(pair_budget(&a, z).unwrap(), 4);
        assert!(pair_replacement_bound(&a, z, 2).is_ok());
        assert!(matches!(
            pair_replacement_bound(&a, z, 3),
            Err(Error::JOutOfRange { .. })
        ));
        assert!(matches!(
            pair_replacement_bound(&a, 0, 0),
            Err(Error::ZeroTarget)
        ));
    }

    #[test]
    fn pair_replacement_threshold_shape() {
        // j = (k+2) - L gives value min(p,k+3) * min(p, p-k-3+L)
        let p = 23u64;
        let k = 2u64;
        let g = GroupParams::new(p, 2).unwrap();
        let z = g.element(&[1, 1]).unwrap().index();
        let a = Multiset::from_pairs(
            g.clone(),
            &[
                (z, 2),                                   // L = 2 on <z>
                (g.element(&[1, 0]).unwrap().index(), 2), // pairs summing to z
                (g.element(&[0, 1]).unwrap().index(), 2),
                (g.element(&[1, 2]).unwrap().index(), 19), // filler to |A| = p+k
            ],
        );
        assert_eq!(a.total(), p + k);
        let l = 2u64;
        let j = (k + 2) - l;
        let cert = pair_replacement_bound(&a, z, j).unwrap();
        let expected = (p.min(k + 3) * p.min(p - k - 3 + l)) as i64;
        assert_eq!(cert.value, expected);
        assert!(cert.value >= ((k + 3) * (p - k - 3)) as i64);
        assert!(cert.value <= sumset_card(&a) as i64);
    }

    #[test]
    fn best_bound_on_extremal_matches_exact() {
        for (p, k) in [(5u64, 0u64), (5, 1), (5, 2), (7, 1), (7, 3)] {
            let a = constructions::extremal_2d(p, k).unwrap();
            let cert = best_bound(&a).unwrap();
            assert_eq!(cert.value as u64, (k + 2) * p);
            assert_eq!(cert.value as u64, sumset_card(&a));
        }
    }

    #[test]
    fn best_bound_line_plus_point() {
        // concentrated on one line plus a point: the sweep/line rules decide
        let g = GroupParams::new(7, 2).unwrap();
        let a = Multiset::from_pairs(
            g.clone(),
            &[
                (g.element(&[1, 0]).unwrap().index(), 5),
                (g.element(&[2, 0]).unwrap().index(), 1),
                (g.element(&[0, 1]).unwrap().index(), 1),
            ],
        );
        let cert = best_bound(&a).unwrap();
        assert!(matches!(cert.rule, BoundRule::Sweep | BoundRule::LineBound));
        assert_eq!(cert.value, 14);
        assert!(cert.value <= sumset_card(&a) as i64);
    }

    #[test]
    fn best_bound_deterministic() {
        let a = constructions::extremal_2d(7, 2).unwrap();
        let c1 = best_bound(&a).unwrap();
        let c2 = best_bound(&a).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn floor_examples() {
        assert_eq!(conjecture_floor(5, 2, 6).unwrap(), 15);
        assert_eq!(conjecture_floor(5, 2, 8).unwrap(), 24);
        assert_eq!(conjecture_floor(3, 3, 8).unwrap(), 27);
        assert_eq!(conjecture_floor(5, 2, 3).unwrap(), 4);
        assert!(matches!(
            conjecture_floor(5, 2, 10),
            Err(Error::SizeOutOfRange { .. })
        ));
    }

    #[test]
    fn floor_monotone_and_terminal() {
        for (p, m) in [(3u64, 2u32), (5, 2), (7, 2), (3, 3)] {
            let mut prev = 0;
            for n in 0..=(m as u64 * p - 1) {
                let f = conjecture_floor(p, m, n).unwrap();
                assert!(f >= prev, "floor not monotone at p={p} m={m} n={n}");
                prev = f;
            }
            assert_eq!(
                conjecture_floor(p, m, m as u64 * p - 1).unwrap(),
                (p as u64).pow(m)
            );
        }
    }

    #[test]
    fn harmonic_and_thresholds() {
        assert_eq!(harmonic(1), BigRational::from(BigInt::from(1)));
        assert_eq!(
            harmonic(2),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        assert_eq!(p_min_large_p_theorem(2), 50);

        let t = thresholds(101, 2);
        assert!(t.small_k_hypothesis_holds);
        assert_eq!(t.log_base, "natural");

        let t = thresholds(3, 2);
        assert!(!t.small_k_hypothesis_holds);
        assert!(t.k_max_small_k <= 0);
    }

    #[test]
    fn threshold_k_max_consistent_with_squaring() {
        for p in [11u64, 101, 1009, 10007] {
            let t = thresholds(p, 2);
            let bound = 2.0 * (p as f64).ln() + 1.0;
            let k = t.k_max_small_k;
            assert!(((k + 1) as f64).powi(2) * bound <= p as f64);
            assert!(((k + 2) as f64).powi(2) * bound > p as f64);
        }
    }

    #[test]
    fn certificate_json_round_trip() {
        let a = constructions::extremal_2d(5, 1).unwrap();
        let cert = best_bound(&a).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        let back: BoundCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cert);
        assert!(s.contains("\"rule\""));
        assert!(s.contains("\"value\""));
    }
}
