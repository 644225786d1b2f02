//! Whole-code analyses: b-symbol weight enumerators (by scan and in closed
//! form), the universal pair distribution, saturation, and shortening on the
//! b-symbol support of a minimum-weight codeword with a Griesmer verdict.

use std::collections::BTreeMap;

use crate::bits::{rank_rows, BitVec};
use crate::bsymbol::{bsymbol_support, bsymbol_weight, cyclic_shift};
use crate::code::{Codeword, KasamiCode};
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Weight-to-count map with the usual polynomial notation attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: BTreeMap<u32, u64>,
}

impl WeightEnumerator {
    /// Builds from explicit counts; zero counts are dropped.
    pub fn from_counts(counts: BTreeMap<u32, u64>) -> Self {
        WeightEnumerator {
            counts: counts.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    /// Total number of words counted.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Smallest weight of a nonzero-weight class, i.e. the distance when the
    /// enumerator covers a whole code.
    pub fn min_positive_weight(&self) -> Option<u32> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// sum of count * weight, for mass-balance checks.
    pub fn weighted_sum(&self) -> u128 {
        self.counts
            .iter()
            .map(|(&w, &c)| u128::from(w) * u128::from(c))
            .sum()
    }

    /// Renders as `1 + 15T^9 + ...`: ascending weights, unit coefficients
    /// omitted, the weight-0 term as a bare count.
    pub fn to_text(&self) -> String {
        if self.counts.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .counts
            .iter()
            .map(|(&w, &c)| {
                if w == 0 {
                    format!("{c}")
                } else if c == 1 {
                    format!("T^{w}")
                } else {
                    format!("{c}T^{w}")
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Inverse of [`Self::to_text`]; `None` on malformed input.
    pub fn parse(text: &str) -> Option<WeightEnumerator> {
        let text = text.trim();
        if text == "0" {
            return Some(WeightEnumerator {
                counts: BTreeMap::new(),
            });
        }
        let mut counts = BTreeMap::new();
        for term in text.split('+') {
            let term = term.trim();
            let (count, weight) = match term.find("T^") {
                Some(pos) => {
                    let coeff = &term[..pos];
                    let count = if coeff.is_empty() {
                        1
                    } else {
                        coeff.parse::<u64>().ok()?
                    };
                    (count, term[pos + 2..].parse::<u32>().ok()?)
                }
                None => (term.parse::<u64>().ok()?, 0),
            };
            if count == 0 {
                return None;
            }
            *counts.entry(weight).or_insert(0) += count;
        }
        Some(WeightEnumerator { counts })
    }
}

impl KasamiCode {
    /// The b-symbol weight enumerator by exhaustive scan over all 2^(3m)
    /// codewords; gated to m <= 6.
    pub fn weight_enumerator(&self, b: usize) -> Result<WeightEnumerator> {
        self.check_scan()?;
        self.weight_enumerator_unchecked(b)
    }

    /// The same scan without the size gate.
    pub fn weight_enumerator_unchecked(&self, b: usize) -> Result<WeightEnumerator> {
        self.check_window(b)?;
        let counts = self.par_scan(
            BTreeMap::<u32, u64>::new,
            |map, _, _, bits| {
                let w = bsymbol_weight(bits, b).expect("b validated before the scan");
                *map.entry(w).or_insert(0) += 1;
            },
            merge_counts,
        );
        Ok(WeightEnumerator::from_counts(counts))
    }

    /// The b-symbol weight enumerator assembled from the per-codeword closed
    /// form, never materializing a codeword; gated like the scan because it
    /// still walks all 2^(3m) parameter pairs.
    pub fn closed_form_enumerator(&self, b: usize) -> Result<WeightEnumerator> {
        self.check_scan()?;
        self.closed_form_enumerator_unchecked(b)
    }

    pub fn closed_form_enumerator_unchecked(&self, b: usize) -> Result<WeightEnumerator> {
        self.check_window(b)?;
        let mut counts = BTreeMap::new();
        for a in 0..=self.length() as u32 {
            let alpha = FieldElement(a);
            for &beta in self.tower().subfield_elements() {
                let w = self.bsymbol_weight_closed(alpha, beta, b)?;
                *counts.entry(w).or_insert(0) += 1;
            }
        }
        Ok(WeightEnumerator::from_counts(counts))
    }

    fn check_window(&self, b: usize) -> Result<()> {
        if (1..=self.length()).contains(&b) {
            Ok(())
        } else {
            Err(Error::BOutOfRange {
                b,
                min: 1,
                max: self.length(),
            })
        }
    }

    /// A codeword attaining the minimum b-symbol weight, deterministically
    /// chosen (smallest weight, then smallest beta and alpha masks).
    pub fn min_weight_codeword(&self, b: usize) -> Result<Codeword> {
        self.check_scan()?;
        self.check_window(b)?;
        let best = self.par_scan(
            || (u32::MAX, 0u32, 0u32),
            |best, alpha, beta, bits| {
                if alpha.is_zero() && beta.is_zero() {
                    return;
                }
                let w = bsymbol_weight(bits, b).expect("b validated before the scan");
                let key = (w, beta.0, alpha.0);
                if key < *best {
                    *best = key;
                }
            },
            std::cmp::min,
        );
        self.codeword(FieldElement(best.2), FieldElement(best.1))
    }

    /// Shortens the code on the complement of the b-symbol support of
    /// `word`: keeps the codewords vanishing outside the support, restricted
    /// to it, and reports the parameters together with the Griesmer verdict
    /// and the rank of the b shifts of `word`.
    ///
    /// With `verify_minimum` the word's b-symbol weight is checked against
    /// the scanned minimum first. The selection scan is gated to m <= 6.
    pub fn shorten_on_support_complement(
        &self,
        word: &Codeword,
        b: usize,
        verify_minimum: bool,
    ) -> Result<ShortenedCodeParams> {
        self.check_scan()?;
        let w_b = bsymbol_weight(word.bits(), b)?;
        if verify_minimum {
            let minimum = self.min_bsymbol_distance(b)?;
            if w_b != minimum {
                return Err(Error::NotMinimumWeight {
                    weight: w_b,
                    minimum,
                });
            }
        }

        let shifts: Vec<BitVec> = (0..b).map(|s| cyclic_shift(word.bits(), s as i64)).collect();
        let shift_rank = rank_rows(shifts);
        if shift_rank < b {
            return Err(Error::RankDeficient {
                rank: shift_rank,
                expected: b,
            });
        }

        let support = bsymbol_support(word.bits(), b)?;
        let positions: Vec<usize> = support.starts.iter().map(|&i| i - 1).collect();
        let mut outside = BitVec::zeros(self.length());
        for &i in &support.complement {
            outside.set(i - 1, true);
        }

        let (restricted, min_distance) = self.par_scan(
            || (Vec::<BitVec>::new(), u32::MAX),
            |(rows, min_w), _, _, bits| {
                if bits.is_disjoint(&outside) {
                    let r = bits.extract(&positions);
                    if !r.is_zero() {
                        let w = r.count_ones();
                        if w < *min_w {
                            *min_w = w;
                        }
                        rows.push(r);
                    }
                }
            },
            |(mut ra, wa), (rb, wb)| {
                ra.extend(rb);
                (ra, wa.min(wb))
            },
        );

        let dimension = rank_rows(restricted);
        let length = positions.len();
        let g_sum = griesmer_sum(dimension, u64::from(min_distance));
        Ok(ShortenedCodeParams {
            length,
            dimension,
            min_distance,
            griesmer_sum: g_sum,
            is_griesmer: g_sum == length as u64,
            shift_rank,
        })
    }
}

fn merge_counts(mut a: BTreeMap<u32, u64>, b: BTreeMap<u32, u64>) -> BTreeMap<u32, u64> {
    for (w, c) in b {
        *a.entry(w).or_insert(0) += c;
    }
    a
}

/// Parameters of a shortened code plus the Griesmer verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShortenedCodeParams {
    pub length: usize,
    pub dimension: usize,
    pub min_distance: u32,
    /// sum_{i<k} ceil(d / 2^i) for the parameters found.
    pub griesmer_sum: u64,
    /// Whether that sum meets the length exactly, i.e. the code is
    /// length-optimal for its dimension and distance.
    pub is_griesmer: bool,
    /// GF(2) rank of the b cyclic shifts of the shortening word.
    pub shift_rank: usize,
}

/// The Griesmer bound sum_{i=0}^{k-1} ceil(d / 2^i).
pub fn griesmer_sum(k: usize, d: u64) -> u64 {
    (0..k).map(|i| d.div_ceil(1 << i)).sum()
}

/// The 2-symbol weight enumerator in closed form, identical for every field
/// representation. Needs m >= 2 so that all counts are integral.
pub fn symbol_pair_distribution(m: usize) -> Result<WeightEnumerator> {
    if !(crate::field::MIN_M..=crate::field::MAX_M).contains(&m) {
        return Err(Error::InvalidM {
            m,
            min: crate::field::MIN_M,
            max: crate::field::MAX_M,
        });
    }
    let p = |e: usize| 1u64 << e;
    let base = 3 * p(2 * m - 2);
    let mut counts = BTreeMap::new();
    counts.insert(0u32, 1u64);
    let mut add = |w: u64, c: u64| *counts.entry(w as u32).or_insert(0) += c;
    // Trace-only words (beta = 0) and subfield-only words (alpha = 0).
    add(base, p(2 * m) - 1);
    add(base + 3 * p(m - 2), p(m) - 1);
    // Both nonzero: split by the exponential sum's trace condition and the
    // single lookback-1 trace condition, which are independent.
    add(base + 3 * p(m - 2), (p(2 * m) - 1) * (p(m - 2) - 1));
    add(base + 3 * p(m - 2) - p(m - 1), (p(2 * m) - 1) * p(m - 2));
    add(base - p(m - 2), (p(2 * m) - 1) * p(m - 2));
    add(base - 3 * p(m - 2), (p(2 * m) - 1) * p(m - 2));
    Ok(WeightEnumerator::from_counts(counts))
}

/// The b-symbol weight enumerator for any b >= 3m: every nonzero codeword
/// saturates at the full length, because 3m consecutive zero coordinates
/// would force a dimension-3m cyclic codeword to be zero.
pub fn saturated_distribution(m: usize) -> Result<WeightEnumerator> {
    if !(crate::field::MIN_M..=crate::field::MAX_M).contains(&m) {
        return Err(Error::InvalidM {
            m,
            min: crate::field::MIN_M,
            max: crate::field::MAX_M,
        });
    }
    let n = (1u32 << (2 * m)) - 1;
    let mut counts = BTreeMap::new();
    counts.insert(0, 1);
    counts.insert(n, (1u64 << (3 * m)) - 1);
    Ok(WeightEnumerator::from_counts(counts))
}
