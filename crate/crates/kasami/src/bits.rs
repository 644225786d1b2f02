//! Fixed-length bit vectors packed into 64-bit words, plus GF(2) rank
//! elimination over them.
//!
//! Codewords here are a few thousand bits at most and the hot loops are
//! window slides and whole-vector XORs, so a thin hand-rolled container is
//! all that is needed.

use std::fmt;

/// A fixed-length vector over GF(2). Bits beyond `len` in the last word are
/// kept zero so that word-level operations need no masking.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Builds from 0/1 bytes; anything nonzero counts as a set bit.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bit_str(s: &str) -> Option<Self> {
        let mut v = BitVec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when `self & other == 0`.
    pub fn is_disjoint(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in is_disjoint");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Positions of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((wi << 6) | b)
                }
            })
        })
    }

    /// New vector whose bit `i` is `self[positions[i]]`.
    pub fn extract(&self, positions: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(positions.len());
        for (i, &p) in positions.iter().enumerate() {
            if self.get(p) {
                out.set(i, true);
            }
        }
        out
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// GF(2) rank of a set of row masks.
pub fn rank_masks(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for mut row in rows {
        for &p in &pivots {
            let high = 63 - p.leading_zeros();
            if row >> high & 1 != 0 {
                row ^= p;
            }
        }
        if row != 0 {
            pivots.push(row);
        }
    }
    pivots.len()
}

/// GF(2) rank of a set of long rows (consumed and used as workspace).
pub fn rank_rows(rows: Vec<BitVec>) -> usize {
    let mut pivots: Vec<(usize, BitVec)> = Vec::new();
    for mut row in rows {
        for (col, p) in &pivots {
            if row.get(*col) {
                row.xor_assign(p);
            }
        }
        let first_one = row.iter_ones().next();
        if let Some(col) = first_one {
            pivots.push((col, row));
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip_across_word_boundary() {
        let mut v = BitVec::zeros(130);
        for i in [0, 1, 63, 64, 65, 127, 128, 129] {
            v.set(i, true);
            assert!(v.get(i));
        }
        v.set(64, false);
        assert!(!v.get(64));
        assert_eq!(v.count_ones(), 7);
    }

    #[test]
    fn from_bits_matches_get() {
        let v = BitVec::from_bits(&[0, 1, 1, 0, 0, 1]);
        let bits: Vec<bool> = (0..6).map(|i| v.get(i)).collect();
        assert_eq!(bits, [false, true, true, false, false, true]);
        assert_eq!(v, BitVec::from_bit_str("011001").unwrap());
        assert!(BitVec::from_bit_str("01x").is_none());
    }

    #[test]
    fn xor_and_zero_checks() {
        let a = BitVec::from_bits(&[1, 0, 1, 1]);
        let b = BitVec::from_bits(&[1, 1, 0, 1]);
        let mut c = a.clone();
        c.xor_assign(&b);
        assert_eq!(c, BitVec::from_bits(&[0, 1, 1, 0]));
        c.xor_assign(&b);
        assert_eq!(c, a);
        assert!(!c.is_zero());
        c.xor_assign(&a);
        assert!(c.is_zero());
    }

    #[test]
    fn iter_ones_lists_support_in_order() {
        let v = BitVec::from_bits(&[0, 1, 0, 0, 1, 1, 0]);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![1, 4, 5]);
    }

    #[test]
    fn disjointness() {
        let a = BitVec::from_bits(&[1, 0, 1, 0]);
        let b = BitVec::from_bits(&[0, 1, 0, 1]);
        let c = BitVec::from_bits(&[0, 0, 1, 0]);
        assert!(a.is_disjoint(&b));
        assert!(!a.is_disjoint(&c));
    }

    #[test]
    fn extract_picks_positions() {
        let v = BitVec::from_bits(&[1, 0, 1, 1, 0]);
        assert_eq!(v.extract(&[2, 4, 0]), BitVec::from_bits(&[1, 0, 1]));
    }

    #[test]
    fn rank_of_masks() {
        assert_eq!(rank_masks([0b001, 0b010, 0b100]), 3);
        assert_eq!(rank_masks([0b011, 0b101, 0b110]), 2);
        assert_eq!(rank_masks([0, 0]), 0);
        assert_eq!(rank_masks([0b1, 0b1, 0b1]), 1);
    }

    #[test]
    fn rank_of_rows_matches_mask_rank() {
        let rows = vec![
            BitVec::from_bits(&[1, 1, 0]),
            BitVec::from_bits(&[1, 0, 1]),
            BitVec::from_bits(&[0, 1, 1]),
        ];
        assert_eq!(rank_rows(rows), 2);
        let rows = vec![BitVec::zeros(70), {
            let mut r = BitVec::zeros(70);
            r.set(69, true);
            r
        }];
        assert_eq!(rank_rows(rows), 1);
    }
}
