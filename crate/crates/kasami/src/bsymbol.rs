//! b-symbol weights straight from the definition.
//!
//! The b-symbol weight of a length-n word x is the number of cyclic windows
//! (x_i, ..., x_{i+b-1}), i = 1..n, that are not identically zero. It equals
//! the Hamming weight at b = 1 and saturates at n once b reaches the span of
//! the support. Everything here is the brute-force ground truth that the
//! closed forms elsewhere in the crate are validated against.
//!
//! The shift convention: `cyclic_shift(x, 1)` moves the support down by one,
//! so shifting the codeword of (alpha, beta) once gives the codeword of
//! (alpha theta, beta eta).

use std::collections::BTreeSet;

use crate::bits::BitVec;
use crate::code::KasamiCode;
use crate::error::{Error, Result};

/// x shifted by `steps`: bit i of the result is bit (i + steps) mod n of x.
/// Negative steps shift the other way.
pub fn cyclic_shift(x: &BitVec, steps: i64) -> BitVec {
    let n = x.len();
    if n == 0 {
        return x.clone();
    }
    let s = steps.rem_euclid(n as i64) as usize;
    let mut out = BitVec::zeros(n);
    for i in 0..n {
        let j = i + s;
        if x.get(if j >= n { j - n } else { j }) {
            out.set(i, true);
        }
    }
    out
}

fn check_b(b: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&b) {
        Ok(())
    } else {
        Err(Error::BOutOfRange { b, min: 1, max: n })
    }
}

/// Number of nonzero cyclic length-b windows of x, by sliding a popcount.
pub fn bsymbol_weight(x: &BitVec, b: usize) -> Result<u32> {
    let n = x.len();
    check_b(b, n)?;
    let mut in_window: u32 = (0..b).map(|t| u32::from(x.get(t % n))).sum();
    let mut weight = 0u32;
    for i in 0..n {
        if in_window > 0 {
            weight += 1;
        }
        in_window -= u32::from(x.get(i));
        let next = i + b;
        in_window += u32::from(x.get(if next >= n { next - n } else { next }));
    }
    Ok(weight)
}

/// The same weight through the averaging identity: summing Hamming weights
/// over all 2^b combinations of the first b shifts of x gives 2^(b-1) times
/// the b-symbol weight. Exponential in b, useful as an independent
/// cross-check.
pub fn bsymbol_weight_span(x: &BitVec, b: usize) -> Result<u32> {
    let n = x.len();
    check_b(b, n)?;
    let rows: Vec<BitVec> = (0..b).map(|t| cyclic_shift(x, t as i64)).collect();
    let mut cur = BitVec::zeros(n);
    let mut total = 0u64;
    for idx in 1u64..1 << b {
        cur.xor_assign(&rows[idx.trailing_zeros() as usize]);
        total += u64::from(cur.count_ones());
    }
    let half = b - 1;
    if total & ((1 << half) - 1) != 0 {
        return Err(Error::NonIntegerResult {
            numerator: total as i64,
            divisor_log2: half,
        });
    }
    Ok((total >> half) as u32)
}

/// The b-symbol support of a word: which windows are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSupport {
    /// 1-based start positions of the nonzero windows; its size is the
    /// b-symbol weight.
    pub starts: BTreeSet<usize>,
    /// 1-based positions whose window is all-zero.
    pub complement: BTreeSet<usize>,
}

/// Start positions of the nonzero and zero windows of x.
pub fn bsymbol_support(x: &BitVec, b: usize) -> Result<BSupport> {
    let n = x.len();
    check_b(b, n)?;
    let mut starts = BTreeSet::new();
    let mut complement = BTreeSet::new();
    let mut in_window: u32 = (0..b).map(|t| u32::from(x.get(t % n))).sum();
    for i in 0..n {
        if in_window > 0 {
            starts.insert(i + 1);
        } else {
            complement.insert(i + 1);
        }
        in_window -= u32::from(x.get(i));
        let next = i + b;
        in_window += u32::from(x.get(if next >= n { next - n } else { next }));
    }
    Ok(BSupport { starts, complement })
}

impl KasamiCode {
    /// Minimum b-symbol weight over all nonzero codewords, by exhaustive
    /// scan. Errors with `ScanTooLarge` above m = 6.
    pub fn min_bsymbol_distance(&self, b: usize) -> Result<u32> {
        self.check_scan()?;
        self.min_bsymbol_distance_unchecked(b)
    }

    /// The same scan without the size gate.
    pub fn min_bsymbol_distance_unchecked(&self, b: usize) -> Result<u32> {
        check_b(b, self.length())?;
        let min = self.par_scan(
            || u32::MAX,
            |best, alpha, beta, bits| {
                if alpha.is_zero() && beta.is_zero() {
                    return;
                }
                let w = bsymbol_weight(bits, b).expect("b validated before the scan");
                if w < *best {
                    *best = w;
                }
            },
            std::cmp::min,
        );
        Ok(min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldElement, FieldTower};

    #[test]
    fn tiny_example() {
        let x = BitVec::from_bits(&[1, 0, 0]);
        assert_eq!(bsymbol_weight(&x, 1).unwrap(), 1);
        assert_eq!(bsymbol_weight(&x, 2).unwrap(), 2);
        assert_eq!(bsymbol_weight(&x, 3).unwrap(), 3);
    }

    #[test]
    fn weight_one_is_hamming_and_weight_saturates_at_length() {
        let x = BitVec::from_bits(&[0, 1, 1, 0, 1, 0, 0]);
        assert_eq!(bsymbol_weight(&x, 1).unwrap(), x.count_ones());
        assert_eq!(bsymbol_weight(&x, 7).unwrap(), 7);
        let zero = BitVec::zeros(7);
        for b in 1..=7 {
            assert_eq!(bsymbol_weight(&zero, b).unwrap(), 0);
        }
    }

    #[test]
    fn b_out_of_range() {
        let x = BitVec::zeros(5);
        assert!(matches!(
            bsymbol_weight(&x, 0),
            Err(Error::BOutOfRange { .. })
        ));
        assert!(matches!(
            bsymbol_weight(&x, 6),
            Err(Error::BOutOfRange { .. })
        ));
        assert!(matches!(
            bsymbol_weight_span(&x, 0),
            Err(Error::BOutOfRange { .. })
        ));
        assert!(matches!(
            bsymbol_support(&x, 6),
            Err(Error::BOutOfRange { .. })
        ));
    }

    #[test]
    fn monotone_in_b_and_bounded() {
        let x = BitVec::from_bits(&[1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0]);
        let n = x.len();
        let w1 = x.count_ones();
        let mut prev = 0;
        for b in 1..=n {
            let w = bsymbol_weight(&x, b).unwrap();
            assert!(w >= prev);
            assert!(w <= (n as u32).min(b as u32 * w1));
            prev = w;
        }
    }

    #[test]
    fn shift_preserves_every_bsymbol_weight() {
        let x = BitVec::from_bits(&[1, 1, 0, 0, 1, 0, 1, 0, 0]);
        for s in 0..x.len() as i64 {
            let y = cyclic_shift(&x, s);
            for b in 1..=x.len() {
                assert_eq!(
                    bsymbol_weight(&x, b).unwrap(),
                    bsymbol_weight(&y, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn shift_moves_support_down() {
        let x = BitVec::from_bits(&[0, 1, 1, 0, 0]);
        let y = cyclic_shift(&x, 1);
        assert_eq!(y, BitVec::from_bits(&[1, 1, 0, 0, 0]));
        assert_eq!(cyclic_shift(&x, 5), x);
        assert_eq!(cyclic_shift(&x, -1), cyclic_shift(&x, 4));
        assert_eq!(cyclic_shift(&cyclic_shift(&x, 3), -3), x);
    }

    #[test]
    fn span_identity_matches_brute_force_on_all_m2_codewords() {
        let code = KasamiCode::new(FieldTower::new(2).unwrap());
        for a in 0..=15u32 {
            for &beta in code.tower().subfield_elements() {
                let c = code.codeword(FieldElement(a), beta).unwrap();
                for b in 1..=15 {
                    assert_eq!(
                        bsymbol_weight_span(c.bits(), b).unwrap(),
                        bsymbol_weight(c.bits(), b).unwrap(),
                        "alpha=0x{a:x} beta={beta} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn support_of_known_codeword() {
        let code = KasamiCode::new(FieldTower::new(2).unwrap());
        let c = code
            .codeword(FieldElement(0x5), FieldElement(0x1))
            .unwrap();
        let sup = bsymbol_support(c.bits(), 2).unwrap();
        assert_eq!(
            sup.complement.iter().copied().collect::<Vec<_>>(),
            vec![4, 9, 12, 13, 14, 15]
        );
        assert_eq!(
            sup.starts.len(),
            bsymbol_weight(c.bits(), 2).unwrap() as usize
        );
        assert_eq!(sup.starts.len() + sup.complement.len(), 15);
    }

    #[test]
    fn minimum_distances_at_m2() {
        let code = KasamiCode::new(FieldTower::new(2).unwrap());
        assert_eq!(code.min_bsymbol_distance(1).unwrap(), 6);
        assert_eq!(code.min_bsymbol_distance(2).unwrap(), 9);
        assert_eq!(code.min_bsymbol_distance(15).unwrap(), 15);
    }

    #[test]
    fn scan_gate_blocks_large_m() {
        let code = KasamiCode::new(FieldTower::new(7).unwrap());
        assert!(matches!(
            code.min_bsymbol_distance(2),
            Err(Error::ScanTooLarge { .. })
        ));
    }
}
