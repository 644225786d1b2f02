//! The binary Kasami code of length 2^(2m) - 1 and dimension 3m.
//!
//! Coordinates follow the primitive element: coordinate i (1-based, i = 1..n)
//! of the codeword attached to (alpha, beta) is
//!
//! ```text
//! Tr_full(alpha theta^i) + Tr_sub(beta eta^i)
//! ```
//!
//! so a one-step cyclic shift toward lower indices maps (alpha, beta) to
//! (alpha theta, beta eta). Hamming weights come from the exponential sum
//! S(alpha, beta) = sum over nonzero x of (-1)^(Tr_full(alpha x) + Tr_sub(beta N(x)))
//! via w = (n - S) / 2, and S itself has a four-case closed form that the
//! direct summation is checked against.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower, TraceLevel};
use crate::hierarchy::WindowClasses;

/// Exhaustive codeword scans are gated to m <= SCAN_CAP_M (2^18 codewords of
/// 4095 bits); the `_unchecked` variants run regardless.
pub const SCAN_CAP_M: usize = 6;

/// A codeword together with the parameters that produced it.
#[derive(Clone, Debug)]
pub struct Codeword {
    pub alpha: FieldElement,
    pub beta: FieldElement,
    bits: BitVec,
}

impl Codeword {
    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn into_bits(self) -> BitVec {
        self.bits
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

/// The Kasami code over a fixed field tower.
pub struct KasamiCode {
    tower: FieldTower,
    pub(crate) window_classes: Vec<OnceLock<WindowClasses>>,
}

impl KasamiCode {
    pub fn new(tower: FieldTower) -> Self {
        let cells = 3 * tower.m() - 1;
        KasamiCode {
            tower,
            window_classes: (0..cells).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// Code length n = 2^(2m) - 1.
    pub fn length(&self) -> usize {
        self.tower.n()
    }

    /// Dimension 3m.
    pub fn dimension(&self) -> usize {
        3 * self.tower.m()
    }

    /// Number of codewords, 2^(3m).
    pub fn size(&self) -> u64 {
        1u64 << self.dimension()
    }

    fn check_beta(&self, beta: FieldElement) -> Result<()> {
        if self.tower.in_subfield(beta) {
            Ok(())
        } else {
            Err(Error::BetaNotInSubfield {
                mask: beta.0,
                q: self.tower.q(),
            })
        }
    }

    /// The codeword attached to (alpha, beta); beta must lie in the subfield.
    pub fn codeword(&self, alpha: FieldElement, beta: FieldElement) -> Result<Codeword> {
        self.check_beta(beta)?;
        let t = &self.tower;
        let n = t.n();
        let theta = t.theta();
        let eta = t.eta();
        let mut bits = BitVec::zeros(n);
        let mut a = alpha;
        let mut b = beta;
        for i in 0..n {
            a = t.mul(a, theta);
            b = t.mul(b, eta);
            if t.full_trace(a) ^ t.sub_trace_raw(b.0) == 1 {
                bits.set(i, true);
            }
        }
        Ok(Codeword { alpha, beta, bits })
    }

    /// S(alpha, beta) summed term by term over all nonzero field elements.
    pub fn exp_sum_direct(&self, alpha: FieldElement, beta: FieldElement) -> Result<i64> {
        self.check_beta(beta)?;
        let t = &self.tower;
        let theta = t.theta();
        let eta = t.eta();
        let mut a = alpha;
        let mut b = beta;
        let mut sum = 0i64;
        for _ in 0..t.n() {
            a = t.mul(a, theta);
            b = t.mul(b, eta);
            sum += 1 - 2 * i64::from(t.full_trace(a) ^ t.sub_trace_raw(b.0));
        }
        Ok(sum)
    }

    /// S(alpha, beta) by its closed form: n when alpha = beta = 0, -1 when
    /// beta = 0, and -(q+1) or q-1 for nonzero beta according to whether
    /// Tr_sub(N(alpha)/beta) is 0 or 1.
    pub fn exp_sum_closed(&self, alpha: FieldElement, beta: FieldElement) -> Result<i64> {
        self.check_beta(beta)?;
        let t = &self.tower;
        let q = i64::from(t.q());
        if beta.is_zero() {
            return Ok(if alpha.is_zero() { t.n() as i64 } else { -1 });
        }
        let g = t.div(t.norm(alpha), beta);
        Ok(match t.trace(g, TraceLevel::Subfield)? {
            0 => -(q + 1),
            _ => q - 1,
        })
    }

    /// Hamming weight (n - S) / 2 of the word behind an exponential sum.
    pub fn hamming_weight_from_sum(&self, sum: i64) -> Result<u32> {
        let n = self.tower.n() as i64;
        let err = Error::ParityViolation {
            sum,
            n: self.tower.n(),
        };
        if (n - sum) % 2 != 0 {
            return Err(err);
        }
        let w = (n - sum) / 2;
        if !(0..=n).contains(&w) {
            return Err(err);
        }
        Ok(w as u32)
    }

    pub(crate) fn check_scan(&self) -> Result<()> {
        if self.tower.m() > SCAN_CAP_M {
            Err(Error::ScanTooLarge {
                m: self.tower.m(),
                cap: SCAN_CAP_M,
            })
        } else {
            Ok(())
        }
    }

    /// Row of the generator whose combinations produce the alpha part: the
    /// codeword of (theta^k, 0).
    fn alpha_basis_row(&self, k: usize) -> BitVec {
        let t = &self.tower;
        let n = t.n();
        let mut bits = BitVec::zeros(n);
        let mut a = t.theta_pow(k as u64);
        for i in 0..n {
            a = t.mul(a, t.theta());
            if t.full_trace(a) == 1 {
                bits.set(i, true);
            }
        }
        bits
    }

    fn beta_row(&self, beta: FieldElement) -> BitVec {
        let t = &self.tower;
        let n = t.n();
        let mut bits = BitVec::zeros(n);
        let mut b = beta;
        for i in 0..n {
            b = t.mul(b, t.eta());
            if t.sub_trace_raw(b.0) == 1 {
                bits.set(i, true);
            }
        }
        bits
    }

    /// Visits every codeword exactly once, parallelized over beta with a
    /// Gray-code walk over alpha inside each chunk. `merge` must be
    /// commutative and associative so the result is independent of how rayon
    /// splits the work.
    pub(crate) fn par_scan<T, I, V, M>(&self, init: I, visit: V, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, FieldElement, FieldElement, &BitVec) + Sync,
        M: Fn(T, T) -> T + Sync + Send,
    {
        let two_m = 2 * self.tower.m();
        // theta^k for k < 2m is the plain monomial mask 1 << k, so the Gray
        // counter itself is the alpha mask.
        let rows: Vec<BitVec> = (0..two_m).map(|k| self.alpha_basis_row(k)).collect();
        self.tower
            .subfield_elements()
            .par_iter()
            .map(|&beta| {
                let mut cur = self.beta_row(beta);
                let mut state = init();
                visit(&mut state, FieldElement::ZERO, beta, &cur);
                let mut alpha_mask = 0u32;
                for idx in 1u64..1 << two_m {
                    let k = idx.trailing_zeros() as usize;
                    cur.xor_assign(&rows[k]);
                    alpha_mask ^= 1 << k;
                    visit(&mut state, FieldElement(alpha_mask), beta, &cur);
                }
                state
            })
            .reduce_with(merge)
            .expect("subfield is never empty")
    }
}
