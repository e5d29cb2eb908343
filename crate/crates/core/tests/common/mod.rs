#![allow(dead_code)]

//! Shared helpers for the integration suites: seeded random multiset
//! corpora and a few reference oracles.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sumsets_core::{GroupParams, Multiset};

pub const CORPUS_SEED: u64 = 42;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random multiset with the product of (m_x + 1) capped, so the brute-force
/// oracle stays enumerable.
pub fn random_multiset(g: &GroupParams, rng: &mut ChaCha8Rng, product_cap: u64) -> Multiset {
    let mut a = Multiset::empty(g.clone());
    let mut product: u64 = 1;
    let support_target = rng.gen_range(0..=10);
    for _ in 0..support_target {
        let x = rng.gen_range(0..g.order());
        if x == 0 {
            continue;
        }
        let mult = rng.gen_range(1..=3u32);
        if product.saturating_mul(mult as u64 + 1) > product_cap {
            break;
        }
        product *= mult as u64 + 1;
        a.insert(x, mult);
    }
    a
}

/// Random valid multiset (rejection sampling).
pub fn random_valid_multiset(g: &GroupParams, rng: &mut ChaCha8Rng) -> Multiset {
    loop {
        let mut a = Multiset::empty(g.clone());
        let support_target = rng.gen_range(1..=8);
        for _ in 0..support_target {
            let x = rng.gen_range(1..g.order());
            let mult = rng.gen_range(1..=(g.p() - 1).min(4));
            a.insert(x, mult);
        }
        if sumsets_core::is_valid(&a).unwrap() {
            return a;
        }
    }
}
