//! Closed forms for b-symbol weights and the distance hierarchy.
//!
//! For a word x and window length b, counting nonzero windows reduces to
//! counting, for each lookback j = 1..b-1, the GF(2)-combinations of j+1
//! consecutive shifts of x that vanish. For a codeword of (alpha, beta) with
//! both parameters nonzero, such a combination is again a codeword whose
//! parameters are (alpha P(theta), beta P(eta)) for the binary polynomial
//! P(x) = 1 + u_1 x + ... + u_{j-1} x^{j-1} + x^j encoding the combination,
//! so everything funnels through the values of P at theta and eta
//! ([`ShiftCombination`]) and through the subfield trace of
//! g * N(P(theta)) / P(eta) with g = N(alpha)/beta. Per (j, g) those trace
//! conditions are tabulated once ([`KasamiCode::trace_one_count`]) and the
//! b-symbol weight follows from a single integer-exact formula
//! ([`KasamiCode::bsymbol_weight_closed`]).
//!
//! The same machinery yields the representation-independent distance floor
//! ([`distance_floor`]), the window-start distance range ([`distance_range`]),
//! and the refined floor driven by the independence depth
//! ([`KasamiCode::refined_distance_floor`]).

use crate::bits::rank_masks;
use crate::code::KasamiCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldTower, TraceLevel};

/// The polynomial P(x) = 1 + u_1 x + ... + u_{j-1} x^{j-1} + x^j behind a
/// combination of j+1 consecutive shifts, evaluated at theta and eta. Bit
/// i-1 of `u` holds u_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftCombination {
    pub j: usize,
    pub u: u32,
    pub at_theta: FieldElement,
    pub at_eta: FieldElement,
}

/// Evaluates the combination polynomial for window lookback j and interior
/// coefficients u. Panics when u has bits at or above j-1.
pub fn shift_combination(tower: &FieldTower, j: usize, u: u32) -> Result<ShiftCombination> {
    if j < 1 || j > tower.n() {
        return Err(Error::BOutOfRange {
            b: j,
            min: 1,
            max: tower.n(),
        });
    }
    assert!(
        j >= 64 || u >> j.saturating_sub(1) == 0,
        "u must have fewer than j bits"
    );
    let mut at_theta = 1 ^ tower.theta_pow(j as u64).0;
    let mut at_eta = 1 ^ tower.eta_pow(j as u64).0;
    for i in 1..j {
        if u >> (i - 1) & 1 != 0 {
            at_theta ^= tower.theta_pow(i as u64).0;
            at_eta ^= tower.eta_pow(i as u64).0;
        }
    }
    Ok(ShiftCombination {
        j,
        u,
        at_theta: FieldElement(at_theta),
        at_eta: FieldElement(at_eta),
    })
}

/// Everything the closed forms need about lookback j, tabulated once per
/// code: which u make the combination vanish at eta or theta, and, for each
/// nonzero subfield value g, how many non-vanishing u satisfy the trace
/// condition Tr_sub(g N(P(theta)) / P(eta)) = 1.
pub(crate) struct WindowClasses {
    pub(crate) vanish_at_eta: Vec<u32>,
    pub(crate) vanish_at_theta: Vec<u32>,
    /// trace_one_count by the eta-log of g.
    t_by_g: Vec<u32>,
    /// The distinct ratio values, sorted by mask.
    distinct_ratios: Vec<FieldElement>,
}

fn build_window_classes(tower: &FieldTower, j: usize) -> WindowClasses {
    let q1 = tower.q() as usize - 1;
    let theta_pows: Vec<u32> = (0..=j).map(|i| tower.theta_pow(i as u64).0).collect();
    let eta_pows: Vec<u32> = (0..=j).map(|i| tower.eta_pow(i as u64).0).collect();

    let mut vanish_at_eta = Vec::new();
    let mut vanish_at_theta = Vec::new();
    let mut ratio_mult = vec![0u32; q1];

    let mut at_theta = 1 ^ theta_pows[j];
    let mut at_eta = 1 ^ eta_pows[j];
    let mut u = 0u32;
    let mut classify = |u: u32, at_theta: u32, at_eta: u32| {
        if at_eta == 0 {
            debug_assert_ne!(at_theta, 0, "vanishing at both is impossible below j = 3m");
            vanish_at_eta.push(u);
        } else if at_theta == 0 {
            vanish_at_theta.push(u);
        } else {
            let lt = tower.log(FieldElement(at_theta)).expect("nonzero") as usize;
            let ko = tower
                .subfield_log(FieldElement(at_eta))
                .expect("P(eta) lies in the subfield") as usize;
            ratio_mult[(lt % q1 + q1 - ko) % q1] += 1;
        }
    };
    classify(u, at_theta, at_eta);
    for idx in 1u64..1 << (j - 1) {
        let i = idx.trailing_zeros() as usize + 1;
        at_theta ^= theta_pows[i];
        at_eta ^= eta_pows[i];
        u ^= 1 << (i - 1);
        classify(u, at_theta, at_eta);
    }
    vanish_at_eta.sort_unstable();
    vanish_at_theta.sort_unstable();

    let trace_one_eta: Vec<u32> = (0..q1)
        .map(|k| {
            u32::from(
                tower
                    .trace(tower.eta_pow(k as u64), TraceLevel::Subfield)
                    .expect("eta powers lie in the subfield"),
            )
        })
        .collect();
    let t_by_g: Vec<u32> = (0..q1)
        .map(|gi| {
            (0..q1)
                .map(|ri| ratio_mult[ri] * trace_one_eta[(gi + ri) % q1])
                .sum()
        })
        .collect();

    let mut distinct_ratios: Vec<FieldElement> = (0..q1)
        .filter(|&ri| ratio_mult[ri] > 0)
        .map(|ri| tower.eta_pow(ri as u64))
        .collect();
    distinct_ratios.sort_unstable();

    WindowClasses {
        vanish_at_eta,
        vanish_at_theta,
        t_by_g,
        distinct_ratios,
    }
}

/// The u-sets where the combination vanishes at eta and at theta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateSets {
    pub vanish_at_eta: Vec<u32>,
    pub vanish_at_theta: Vec<u32>,
}

/// Closed-form sizes of the two degenerate sets: (0, 1, 2^(j-m-1)) at eta for
/// j (below, at, above) m, and likewise at theta with 2m in place of m.
pub fn predicted_degenerate_sizes(m: usize, j: usize) -> (u64, u64) {
    let eta_side = match j.cmp(&m) {
        std::cmp::Ordering::Less => 0,
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Greater => 1u64 << (j - m - 1),
    };
    let theta_side = match j.cmp(&(2 * m)) {
        std::cmp::Ordering::Less => 0,
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Greater => 1u64 << (j - 2 * m - 1),
    };
    (eta_side, theta_side)
}

/// Upper bound on [`KasamiCode::trace_one_count`]: the number of
/// non-degenerate u, i.e. 2^(j-1) minus both predicted degenerate sizes.
pub fn ratio_trace_cap(m: usize, j: usize) -> u64 {
    let (e, t) = predicted_degenerate_sizes(m, j);
    (1u64 << (j - 1)) - e - t
}

/// Which branch of the closed forms a window length falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowRegime {
    /// b <= m.
    Low,
    /// m < b <= 2m.
    Mid,
    /// 2m < b <= 3m.
    High,
    /// b > 3m: every weight equals the length.
    Saturated,
}

pub fn window_regime(b: usize, m: usize) -> WindowRegime {
    if b <= m {
        WindowRegime::Low
    } else if b <= 2 * m {
        WindowRegime::Mid
    } else if b <= 3 * m {
        WindowRegime::High
    } else {
        WindowRegime::Saturated
    }
}

/// Per-lookback diagnostic bundle for one (alpha, beta).
#[derive(Clone, Debug)]
pub struct IndexSetReport {
    pub j: usize,
    pub regime: WindowRegime,
    pub vanish_at_eta: usize,
    pub vanish_at_theta: usize,
    pub distinct_ratios: usize,
    pub trace_one_count: u32,
    pub cap: u64,
}

impl KasamiCode {
    pub(crate) fn classes(&self, j: usize) -> Result<&WindowClasses> {
        let max = 3 * self.tower().m() - 1;
        if !(1..=max).contains(&j) {
            return Err(Error::BOutOfRange {
                b: j,
                min: 1,
                max,
            });
        }
        Ok(self.window_classes[j - 1].get_or_init(|| build_window_classes(self.tower(), j)))
    }

    /// The u-sets for lookback j where the combination vanishes at eta
    /// respectively theta; valid for j = 1..3m-1, where the two are disjoint.
    pub fn degenerate_sets(&self, j: usize) -> Result<DegenerateSets> {
        let c = self.classes(j)?;
        Ok(DegenerateSets {
            vanish_at_eta: c.vanish_at_eta.clone(),
            vanish_at_theta: c.vanish_at_theta.clone(),
        })
    }

    /// Distinct values of N(P(theta))/P(eta) over the non-degenerate u at
    /// lookback j, sorted by mask.
    pub fn norm_ratio_set(&self, j: usize) -> Result<Vec<FieldElement>> {
        Ok(self.classes(j)?.distinct_ratios.clone())
    }

    fn ratio_log(&self, alpha: FieldElement, beta: FieldElement) -> Result<usize> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::ZeroAlphaBeta);
        }
        if !self.tower().in_subfield(beta) {
            return Err(Error::BetaNotInSubfield {
                mask: beta.0,
                q: self.tower().q(),
            });
        }
        let g = self.tower().div(self.tower().norm(alpha), beta);
        Ok(self
            .tower()
            .subfield_log(g)
            .expect("norm ratio lies in the subfield") as usize)
    }

    /// Number of non-degenerate u at lookback j whose trace condition for
    /// this (alpha, beta) is 1; both parameters must be nonzero.
    pub fn trace_one_count(
        &self,
        j: usize,
        alpha: FieldElement,
        beta: FieldElement,
    ) -> Result<u32> {
        let gi = self.ratio_log(alpha, beta)?;
        Ok(self.classes(j)?.t_by_g[gi])
    }

    /// Diagnostics for one lookback of one nonzero codeword pair.
    pub fn index_set_report(
        &self,
        j: usize,
        alpha: FieldElement,
        beta: FieldElement,
    ) -> Result<IndexSetReport> {
        let t = self.trace_one_count(j, alpha, beta)?;
        let c = self.classes(j)?;
        let m = self.tower().m();
        Ok(IndexSetReport {
            j,
            regime: window_regime(j, m),
            vanish_at_eta: c.vanish_at_eta.len(),
            vanish_at_theta: c.vanish_at_theta.len(),
            distinct_ratios: c.distinct_ratios.len(),
            trace_one_count: t,
            cap: ratio_trace_cap(m, j),
        })
    }

    /// b-symbol weight of the codeword of (alpha, beta) in closed form,
    /// without touching the word itself.
    pub fn bsymbol_weight_closed(
        &self,
        alpha: FieldElement,
        beta: FieldElement,
        b: usize,
    ) -> Result<u32> {
        let t = self.tower();
        let m = t.m();
        let n = t.n() as u64;
        if !(1..=t.n()).contains(&b) {
            return Err(Error::BOutOfRange {
                b,
                min: 1,
                max: t.n(),
            });
        }
        if !t.in_subfield(beta) {
            return Err(Error::BetaNotInSubfield {
                mask: beta.0,
                q: t.q(),
            });
        }

        if alpha.is_zero() && beta.is_zero() {
            return Ok(0);
        }
        if alpha.is_zero() {
            // Subfield-only words repeat with period q-1; windows of length m
            // and beyond always meet the support.
            return Ok(if b < m {
                (((1u64 << b) - 1) * ((1u64 << (2 * m - b)) + (1u64 << (m - b)))) as u32
            } else {
                n as u32
            });
        }
        if beta.is_zero() {
            // A maximal-length sequence: every nonzero window pattern of
            // length b <= 2m appears exactly 2^(2m-b) times.
            return Ok(if b <= 2 * m {
                (((1u64 << b) - 1) << (2 * m - b)) as u32
            } else {
                n as u32
            });
        }
        if b > 3 * m {
            // b has reached the dimension: no nonzero codeword carries that
            // many consecutive zeros.
            return Ok(n as u32);
        }

        let s = self.exp_sum_closed(alpha, beta)?;
        let gi = self.ratio_log(alpha, beta)?;
        let mut weighted: i64 = 0;
        for j in 1..b {
            weighted += (b - j) as i64 * i64::from(self.classes(j)?.t_by_g[gi]);
        }

        let p2m = 1i64 << (2 * m);
        let pm = 1i64 << m;
        let pb = 1i64 << b;
        let numerator = if b <= m {
            pb * (p2m + pm) - p2m - pm - b as i64 * (s + pm + 1) - (pm << 1) * weighted
        } else {
            pb * (p2m + pm - 1) - p2m - b as i64 * (s + pm + 1) - (pm << 1) * weighted
        };
        if numerator & (pb - 1) != 0 {
            return Err(Error::NonIntegerResult {
                numerator,
                divisor_log2: b,
            });
        }
        let w = numerator >> b;
        assert!(
            (0..=n as i64).contains(&w),
            "closed-form weight {w} out of range at b={b}"
        );
        Ok(w as u32)
    }

    /// The largest depth i <= b-1 whose accumulated ratio values, together
    /// with 1, form 2^i distinct GF(2)-independent subfield elements, plus a
    /// witness. `None` when no depth qualifies.
    pub fn independence_depth(&self, b: usize) -> Result<Option<IndependenceDepth>> {
        let m = self.tower().m();
        if !(3..=m).contains(&b) {
            return Err(Error::BOutOfRange { b, min: 3, max: m });
        }
        let mut pool: Vec<u32> = vec![1];
        let mut best: Option<IndependenceDepth> = None;
        for i in 1..b {
            for r in self.norm_ratio_set(i)? {
                if !pool.contains(&r.0) {
                    pool.push(r.0);
                }
            }
            if pool.len() == 1 << i && rank_masks(pool.iter().map(|&x| u64::from(x))) == 1 << i {
                let mut witness: Vec<FieldElement> =
                    pool.iter().map(|&x| FieldElement(x)).collect();
                witness.sort_unstable();
                best = Some(IndependenceDepth { depth: i, witness });
            }
        }
        Ok(best)
    }

    /// Distance floor sharpened by the independence depth; needs depth >= 2,
    /// otherwise `DepthUndefined`.
    pub fn refined_distance_floor(&self, b: usize) -> Result<u64> {
        let m = self.tower().m();
        let depth = match self.independence_depth(b)? {
            Some(d) if d.depth >= 2 => d.depth,
            _ => return Err(Error::DepthUndefined { b }),
        };
        Ok((1u64 << (2 * m)) - (1u64 << (2 * m - b)) + (1u64 << (m - b)) + (1u64 << m)
            - (b - depth + 1) as u64 * (1u64 << (m + 1 + depth - b)))
    }
}

/// The qualifying depth and its witness set of subfield elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceDepth {
    pub depth: usize,
    pub witness: Vec<FieldElement>,
}

/// Representation-independent floor of the b-symbol distance hierarchy,
/// piecewise in the window regime; defined for 1 <= b <= 3m.
pub fn distance_floor(b: usize, m: usize) -> Result<u64> {
    if !(1..=3 * m).contains(&b) {
        return Err(Error::BOutOfRange {
            b,
            min: 1,
            max: 3 * m,
        });
    }
    Ok(match window_regime(b, m) {
        WindowRegime::Low => ((1u64 << b) - 1) * ((1u64 << (2 * m - b)) - (1u64 << (m - b))),
        WindowRegime::Mid => (1u64 << (2 * m)) - (1u64 << m) - (1u64 << (2 * m - b)) + 1,
        WindowRegime::High => (1u64 << (2 * m)) - (1u64 << (3 * m - b)),
        WindowRegime::Saturated => unreachable!("b <= 3m here"),
    })
}

/// Inclusive range the b-symbol distance is guaranteed to lie in, for any
/// 1 <= b <= n. Beyond b = 3m both ends collapse to n.
pub fn distance_range(b: usize, m: usize) -> Result<(u64, u64)> {
    let n = (1u64 << (2 * m)) - 1;
    if !(1..=n as usize).contains(&b) {
        return Err(Error::BOutOfRange {
            b,
            min: 1,
            max: n as usize,
        });
    }
    if b >= 3 * m {
        return Ok((n, n));
    }
    let upper = if b <= 2 * m {
        ((1u64 << b) - 1) << (2 * m - b)
    } else {
        n
    };
    Ok((distance_floor(b, m)?, upper))
}

/// The two exact window-counting identities used by the closed forms, as
/// left/right pairs: the weighted count of all proper lookbacks, and its
/// truncation at `depth`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub full_lhs: u128,
    pub full_rhs: u128,
    pub truncated_lhs: u128,
    pub truncated_rhs: u128,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.full_lhs == self.full_rhs && self.truncated_lhs == self.truncated_rhs
    }
}

/// sum_{j=1}^{b-1} (b-j) 2^(j-1) against 2^b - 1 - b, and the partial sum up
/// to `depth` against (b - depth + 1) 2^depth - b - 1. Valid for b <= 100
/// and depth <= b - 1.
pub fn counting_identities(b: usize, depth: usize) -> Result<IdentityCheck> {
    if !(1..=100).contains(&b) {
        return Err(Error::BOutOfRange { b, min: 1, max: 100 });
    }
    if depth >= b {
        return Err(Error::BOutOfRange {
            b: depth,
            min: 0,
            max: b - 1,
        });
    }
    let partial = |hi: usize| -> u128 {
        (1..=hi)
            .map(|j| (b - j) as u128 * (1u128 << (j - 1)))
            .sum()
    };
    Ok(IdentityCheck {
        full_lhs: partial(b - 1),
        full_rhs: (1u128 << b) - 1 - b as u128,
        truncated_lhs: partial(depth),
        truncated_rhs: (b - depth + 1) as u128 * (1u128 << depth) - b as u128 - 1,
    })
}

/// |{x in the subfield : Tr_sub(v_i x) = 1 for every i with bit i of
/// `subset_mask` set}|. The selected v_i must be GF(2)-independent subfield
/// elements; the count is then exactly 2^(m - |subset|).
pub fn trace_intersection_count(
    tower: &FieldTower,
    elements: &[FieldElement],
    subset_mask: u32,
) -> Result<u64> {
    let selected: Vec<FieldElement> = (0..elements.len())
        .filter(|&i| subset_mask >> i & 1 != 0)
        .map(|i| elements[i])
        .collect();
    for &v in &selected {
        if !tower.in_subfield(v) {
            return Err(Error::NotInSubfield {
                mask: v.0,
                q: tower.q(),
            });
        }
    }
    if rank_masks(selected.iter().map(|v| u64::from(v.0))) < selected.len() {
        return Err(Error::NotABasis);
    }
    let mut count = 0u64;
    for &x in tower.subfield_elements() {
        if selected
            .iter()
            .all(|&v| tower.trace(tower.mul(v, x), TraceLevel::Subfield) == Ok(1))
        {
            count += 1;
        }
    }
    Ok(count)
}
