//! GF(2^(2m)) arithmetic together with its GF(2^m) subfield.
//!
//! Elements are polynomial-basis bitmasks (bit k holds the coefficient of
//! x^k) reduced by a primitive modulus, and multiplication runs through
//! discrete-log tables, which is comfortably fast for the desk-scale fields
//! this crate targets (m <= 12, i.e. extensions up to GF(2^24)).
//!
//! `theta` denotes the fixed generator x of the full multiplicative group and
//! `eta = theta^(q+1)` the induced generator of the subfield one, with
//! q = 2^m. The subfield is exactly the set of x with x^q = x, equivalently
//! the elements whose discrete log is divisible by q + 1, plus zero.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub const MIN_M: usize = 2;
pub const MAX_M: usize = 12;

/// Default reduction modulus for each extension degree 2m, as a bitmask.
///
/// These are pinned rather than derived because b-symbol statistics for
/// b >= 3 are representation-dependent: the coordinate order theta^1,
/// theta^2, ... changes under a decimation, so different primitive
/// polynomials of the same degree yield genuinely different b-symbol
/// enumerators and minimum distances. Every golden table in this crate's
/// regression suite reproduces under this table and not under every
/// alternative. Degrees 4, 8..14, and 18..24 use the lexicographically
/// smallest primitive polynomial; degree 6 needs x^6+x^4+x^3+x+1 (0x5b)
/// rather than x^6+x+1, and degree 16 needs x^16+x^6+x^4+x+1 (0x10053),
/// the smallest choices consistent with those tables. Any primitive
/// polynomial of the right degree may be supplied instead via
/// [`FieldTower::with_modulus`].
pub const DEFAULT_MODULI: [(usize, u64); 11] = [
    (4, 0x13),
    (6, 0x5b),
    (8, 0x11d),
    (10, 0x409),
    (12, 0x1053),
    (14, 0x402b),
    (16, 0x10053),
    (18, 0x40027),
    (20, 0x100009),
    (22, 0x400003),
    (24, 0x100001b),
];

/// Element of GF(2^(2m)) as a polynomial-basis bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

/// Which trace to take in [`FieldTower::trace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceLevel {
    /// Absolute trace of GF(2^(2m)) over GF(2).
    Full,
    /// Absolute trace of the subfield GF(2^m) over GF(2); the argument must
    /// lie in the subfield.
    Subfield,
}

/// GF(2^(2m)) with log/exp tables, both traces, and the subfield laid out.
pub struct FieldTower {
    m: usize,
    q: u32,
    n: usize,
    modulus: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Bit k set iff the full trace of theta^k is 1; the full trace of a mask
    /// is then a masked popcount.
    full_trace_basis: u32,
    /// Subfield trace by mask; 2 marks elements outside the subfield.
    sub_trace: Vec<u8>,
    subfield: Vec<FieldElement>,
    sub_log: HashMap<u32, u32>,
}

const LOG_NONE: u32 = u32::MAX;

impl FieldTower {
    /// Builds GF(2^(2m)) under the pinned default modulus for degree 2m.
    pub fn new(m: usize) -> Result<Self> {
        if !(MIN_M..=MAX_M).contains(&m) {
            return Err(Error::InvalidM {
                m,
                min: MIN_M,
                max: MAX_M,
            });
        }
        let modulus = DEFAULT_MODULI
            .iter()
            .find(|&&(deg, _)| deg == 2 * m)
            .map(|&(_, p)| p)
            .expect("default modulus table covers MIN_M..=MAX_M");
        Self::with_modulus(m, modulus)
    }

    /// Builds GF(2^(2m)) under a caller-supplied modulus, which must be a
    /// primitive polynomial of degree exactly 2m.
    pub fn with_modulus(m: usize, modulus: u64) -> Result<Self> {
        if !(MIN_M..=MAX_M).contains(&m) {
            return Err(Error::InvalidM {
                m,
                min: MIN_M,
                max: MAX_M,
            });
        }
        let deg = 2 * m;
        if poly_degree(modulus) != Some(deg) || !is_primitive(modulus, deg) {
            return Err(Error::BadModulus {
                modulus,
                degree: deg,
            });
        }

        let q = 1u32 << m;
        let n = (1usize << deg) - 1;
        let reducer = (modulus as u32) & !(1 << deg);
        let top = 1u32 << (deg - 1);

        let mut exp = vec![0u32; n];
        let mut log = vec![LOG_NONE; n + 1];
        let mut acc = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = acc;
            log[acc as usize] = i as u32;
            acc = if acc & top != 0 {
                (acc ^ top) << 1 ^ reducer
            } else {
                acc << 1
            };
        }
        debug_assert_eq!(acc, 1, "theta must have order exactly n");

        let mut tower = FieldTower {
            m,
            q,
            n,
            modulus,
            exp,
            log,
            full_trace_basis: 0,
            sub_trace: vec![2u8; n + 1],
            subfield: Vec::with_capacity(q as usize),
            sub_log: HashMap::with_capacity(q as usize),
        };

        for k in 0..deg {
            let mut t = 0u32;
            let mut p = tower.exp[k];
            for _ in 0..deg {
                t ^= p;
                p = tower.mul(FieldElement(p), FieldElement(p)).0;
            }
            debug_assert!(t <= 1);
            tower.full_trace_basis |= t << k;
        }

        tower.subfield.push(FieldElement::ZERO);
        tower.sub_trace[0] = 0;
        let qe = (q as usize) + 1;
        for k in 0..(q as usize - 1) {
            let y = tower.exp[k * qe];
            let mut t = 0u32;
            let mut p = y;
            for _ in 0..m {
                t ^= p;
                p = tower.mul(FieldElement(p), FieldElement(p)).0;
            }
            debug_assert!(t <= 1, "subfield trace must land in GF(2)");
            tower.sub_trace[y as usize] = t as u8;
            tower.subfield.push(FieldElement(y));
            tower.sub_log.insert(y, k as u32);
        }

        Ok(tower)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Subfield size 2^m.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Multiplicative group order 2^(2m) - 1, also the code length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The fixed generator x.
    pub fn theta(&self) -> FieldElement {
        FieldElement(self.exp[1])
    }

    /// theta^(q+1), generating the subfield's multiplicative group.
    pub fn eta(&self) -> FieldElement {
        FieldElement(self.exp[self.q as usize + 1])
    }

    /// theta^i with the exponent reduced mod n.
    pub fn theta_pow(&self, i: u64) -> FieldElement {
        FieldElement(self.exp[(i % self.n as u64) as usize])
    }

    /// eta^k with the exponent reduced mod q-1.
    pub fn eta_pow(&self, k: u64) -> FieldElement {
        let k = k % (self.q as u64 - 1);
        FieldElement(self.exp[(k as usize) * (self.q as usize + 1)])
    }

    /// Discrete log base theta; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        let l = self.log[x.0 as usize];
        (l != LOG_NONE).then_some(l)
    }

    /// Discrete log base eta for nonzero subfield elements.
    pub fn subfield_log(&self, x: FieldElement) -> Option<u32> {
        self.sub_log.get(&x.0).copied()
    }

    /// Zero followed by eta^0, eta^1, ..., eta^(q-2).
    pub fn subfield_elements(&self) -> &[FieldElement] {
        &self.subfield
    }

    pub fn in_subfield(&self, x: FieldElement) -> bool {
        self.sub_trace[x.0 as usize] != 2
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let i = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.exp[if i >= self.n { i - self.n } else { i }])
    }

    /// a^e, with a^0 = 1 for every a.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let l = self.log[a.0 as usize] as u64;
        self.theta_pow(l * (e % self.n as u64))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero");
        let l = self.log[a.0 as usize] as usize;
        FieldElement(self.exp[(self.n - l) % self.n])
    }

    /// a / b. Panics when b is zero.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    /// Relative norm x^(q+1) onto the subfield.
    pub fn norm(&self, x: FieldElement) -> FieldElement {
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        let l = self.log[x.0 as usize] as u64;
        self.theta_pow(l * (self.q as u64 + 1))
    }

    /// Absolute trace at the requested level, as 0 or 1.
    pub fn trace(&self, x: FieldElement, level: TraceLevel) -> Result<u8> {
        match level {
            TraceLevel::Full => Ok(self.full_trace(x)),
            TraceLevel::Subfield => {
                let t = self.sub_trace[x.0 as usize];
                if t == 2 {
                    Err(Error::NotInSubfield {
                        mask: x.0,
                        q: self.q,
                    })
                } else {
                    Ok(t)
                }
            }
        }
    }

    #[inline]
    pub(crate) fn full_trace(&self, x: FieldElement) -> u8 {
        ((x.0 & self.full_trace_basis).count_ones() & 1) as u8
    }

    /// Subfield trace straight off the table: 0, 1, or 2 for "not in the
    /// subfield".
    #[inline]
    pub(crate) fn sub_trace_raw(&self, mask: u32) -> u8 {
        self.sub_trace[mask as usize]
    }

    /// Minimal polynomial of x over GF(2) as a bitmask.
    pub fn minimal_polynomial(&self, x: FieldElement) -> u64 {
        // Row-reduce successive powers 1, x, x^2, ... until one falls in the
        // span of the earlier ones; the combination found is the polynomial.
        let mut pivots: Vec<(u32, u64)> = Vec::new();
        let mut power = FieldElement::ONE;
        for d in 0..=2 * self.m {
            let mut row = power.0;
            let mut combo = 1u64 << d;
            for &(p_row, p_combo) in &pivots {
                let high = 31 - p_row.leading_zeros();
                if row >> high & 1 != 0 {
                    row ^= p_row;
                    combo ^= p_combo;
                }
            }
            if row == 0 {
                return combo;
            }
            pivots.push((row, combo));
            power = self.mul(power, x);
        }
        unreachable!("every element of GF(2^(2m)) has degree at most 2m");
    }
}

fn poly_degree(p: u64) -> Option<usize> {
    (p != 0).then(|| 63 - p.leading_zeros() as usize)
}

fn poly_mulmod(a: u64, b: u64, modulus: u64, deg: usize) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    let top = 1u64 << (deg - 1);
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        b >>= 1;
        a = if a & top != 0 {
            (a ^ top) << 1 ^ (modulus & !(1 << deg))
        } else {
            a << 1
        };
    }
    acc
}

fn poly_powmod(mut base: u64, mut e: u64, modulus: u64, deg: usize) -> u64 {
    let mut acc = 1u64;
    while e != 0 {
        if e & 1 != 0 {
            acc = poly_mulmod(acc, base, modulus, deg);
        }
        base = poly_mulmod(base, base, modulus, deg);
        e >>= 1;
    }
    acc
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff x has multiplicative order 2^deg - 1 in GF(2)[x]/(p), which is
/// exactly primitivity (and in particular implies irreducibility).
fn is_primitive(p: u64, deg: usize) -> bool {
    if p & 1 == 0 {
        return false;
    }
    let order = (1u64 << deg) - 1;
    if poly_powmod(2, order, p, deg) != 1 {
        return false;
    }
    distinct_prime_factors(order)
        .into_iter()
        .all(|f| poly_powmod(2, order / f, p, deg) != 1)
}
