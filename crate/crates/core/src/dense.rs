//! Characteristic bit vectors over the element indices of a group.

use crate::error::{Error, Result};

/// Dense characteristic set over `len` element indices, with a cached
/// population count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSet {
    len: u32,
    bits: Vec<u64>,
    card: u32,
}

impl DenseSet {
    pub fn empty(len: u32) -> Self {
        DenseSet {
            len,
            bits: vec![0; (len as usize).div_ceil(64)],
            card: 0,
        }
    }

    pub fn singleton(len: u32, idx: u32) -> Self {
        let mut s = Self::empty(len);
        s.insert(idx);
        s
    }

    pub(crate) fn from_words(len: u32, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), (len as usize).div_ceil(64));
        let mut s = DenseSet { len, bits, card: 0 };
        s.recount();
        s
    }

    /// Number of element indices the set ranges over (the group order).
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    /// Cached population count.
    pub fn card(&self) -> u32 {
        self.card
    }

    pub fn contains(&self, idx: u32) -> bool {
        debug_assert!(idx < self.len);
        self.bits[idx as usize / 64] >> (idx % 64) & 1 != 0
    }

    pub fn insert(&mut self, idx: u32) {
        debug_assert!(idx < self.len);
        let w = &mut self.bits[idx as usize / 64];
        let mask = 1u64 << (idx % 64);
        if *w & mask == 0 {
            *w |= mask;
            self.card += 1;
        }
    }

    pub fn union_with(&mut self, other: &DenseSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        self.recount();
    }

    pub fn is_subset_of(&self, other: &DenseSet) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    Some(wi as u32 * 64 + b)
                }
            })
        })
    }

    fn recount(&mut self) {
        self.card = self.bits.iter().map(|w| w.count_ones()).sum();
    }

    /// Hex encoding of the underlying bytes (little-endian words, trimmed to
    /// `ceil(len/8)` bytes).
    pub fn to_hex(&self) -> String {
        let nbytes = (self.len as usize).div_ceil(8);
        let mut out = String::with_capacity(nbytes * 2);
        let mut written = 0;
        for w in &self.bits {
            for byte in w.to_le_bytes() {
                if written == nbytes {
                    break;
                }
                out.push_str(&format!("{byte:02x}"));
                written += 1;
            }
        }
        out
    }

    pub fn from_hex(len: u32, hex: &str) -> Result<Self> {
        let nbytes = (len as usize).div_ceil(8);
        if hex.len() != nbytes * 2 {
            return Err(Error::SyntaxError {
                offset: hex.len().min(nbytes * 2),
                message: format!("expected {} hex digits, got {}", nbytes * 2, hex.len()),
            });
        }
        let mut bits = vec![0u64; (len as usize).div_ceil(64)];
        for i in 0..nbytes {
            let byte = u8::from_str_radix(&hex[2 * i..2 * i + 2], 16).map_err(|_| {
                Error::SyntaxError {
                    offset: 2 * i,
                    message: "invalid hex digit".into(),
                }
            })?;
            bits[i / 8] |= (byte as u64) << (8 * (i % 8));
        }
        Ok(Self::from_words(len, bits))
    }
}

/// Reads up to 64 bits starting at bit `start`.
fn read_bits(src: &[u64], start: usize, n: usize) -> u64 {
    debug_assert!(n >= 1 && n <= 64);
    let w = start / 64;
    let b = start % 64;
    let mut v = src[w] >> b;
    if b != 0 && w + 1 < src.len() {
        v |= src[w + 1] << (64 - b);
    }
    if n < 64 {
        v &= (1u64 << n) - 1;
    }
    v
}

/// ORs `len` bits of `src` starting at `src_start` into `dst` at `dst_start`.
/// The ranges may be unaligned; they must lie within the buffers.
pub(crate) fn or_bit_range(
    dst: &mut [u64],
    src: &[u64],
    src_start: usize,
    dst_start: usize,
    len: usize,
) {
    let mut remaining = len;
    let mut s = src_start;
    let mut d = dst_start;
    while remaining > 0 {
        let dw = d / 64;
        let db = d % 64;
        let take = (64 - db).min(remaining);
        let chunk = read_bits(src, s, take);
        dst[dw] |= chunk << db;
        s += take;
        d += take;
        remaining -= take;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn get_bit(words: &[u64], i: usize) -> bool {
        words[i / 64] >> (i % 64) & 1 != 0
    }

    #[test]
    fn insert_and_card() {
        let mut s = DenseSet::empty(130);
        assert_eq!(s.card(), 0);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        s.insert(64);
        assert_eq!(s.card(), 3);
        assert!(s.contains(129));
        assert!(!s.contains(1));
        assert_eq!(s.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
    }

    #[test]
    fn hex_round_trip() {
        let mut s = DenseSet::empty(25);
        for i in [0u32, 3, 7, 24] {
            s.insert(i);
        }
        let h = s.to_hex();
        assert_eq!(h.len(), 8);
        let back = DenseSet::from_hex(25, &h).unwrap();
        assert_eq!(back, s);
    }

    proptest! {
        #[test]
        fn or_bit_range_matches_naive(
            src_bits in proptest::collection::vec(any::<bool>(), 1..200),
            dst_len in 1usize..200,
            seed in any::<u64>(),
        ) {
            let mut rng = seed;
            let mut next = || { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1); (rng >> 33) as usize };

            let src_words = {
                let mut w = vec![0u64; src_bits.len().div_ceil(64)];
                for (i, &b) in src_bits.iter().enumerate() {
                    if b { w[i / 64] |= 1 << (i % 64); }
                }
                w
            };
            let len = 1 + next() % src_bits.len();
            let src_start = next() % (src_bits.len() - len + 1);
            if dst_len < len { return Ok(()); }
            let dst_start = next() % (dst_len - len + 1);

            let mut dst = vec![0u64; dst_len.div_ceil(64)];
            // pre-fill some destination bits so OR semantics are exercised
            for i in 0..dst_len {
                if next() % 7 == 0 { dst[i / 64] |= 1 << (i % 64); }
            }
            let mut expected = dst.clone();
            for k in 0..len {
                if get_bit(&src_words, src_start + k) {
                    expected[(dst_start + k) / 64] |= 1 << ((dst_start + k) % 64);
                }
            }
            or_bit_range(&mut dst, &src_words, src_start, dst_start, len);
            prop_assert_eq!(dst, expected);
        }
    }
}
