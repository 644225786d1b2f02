//! Binary Kasami codes and their b-symbol weight structure.
//!
//! For q = 2^m the Kasami code studied here is the cyclic code of length
//! n = q^2 - 1 and dimension 3m whose codewords, indexed by a pair
//! (alpha, beta) in GF(q^2) x GF(q), have i-th coordinate
//!
//! ```text
//! c(alpha, beta)_i = Tr_full(alpha theta^i) + Tr_sub(beta eta^i),   i = 1..n
//! ```
//!
//! with theta a primitive element of GF(q^2), eta = theta^(q+1), and the two
//! absolute traces taken on GF(q^2) and GF(q). Its minimum distance is
//! 2^(2m-1) - 2^(m-1).
//!
//! The b-symbol weight of a word counts the cyclic length-b windows that are
//! not all-zero; it interpolates between Hamming weight (b = 1) and, once b
//! reaches the dimension, the saturated value n. This crate provides:
//!
//! - the code itself with exact exponential-sum evaluation ([`code`]),
//! - brute-force b-symbol weights as the ground-truth oracle ([`bsymbol`]),
//! - closed-form per-codeword b-symbol weights, generalized distance bounds,
//!   and the independence-depth refinement ([`hierarchy`]),
//! - full weight enumerators, closed-form distributions, and Griesmer-style
//!   shortening ([`analysis`]).
//!
//! Closed forms are always validated against the brute-force oracle in the
//! test suite, never the other way around.

pub mod analysis;
pub mod bits;
pub mod bsymbol;
pub mod code;
pub mod error;
pub mod field;
pub mod hierarchy;

pub use analysis::{
    griesmer_sum, saturated_distribution, symbol_pair_distribution, ShortenedCodeParams,
    WeightEnumerator,
};
pub use bits::BitVec;
pub use bsymbol::{bsymbol_support, bsymbol_weight, bsymbol_weight_span, cyclic_shift, BSupport};
pub use code::{Codeword, KasamiCode, SCAN_CAP_M};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldTower, TraceLevel, DEFAULT_MODULI, MAX_M, MIN_M};
pub use hierarchy::{
    counting_identities, distance_floor, distance_range, predicted_degenerate_sizes,
    ratio_trace_cap, shift_combination, trace_intersection_count, window_regime, DegenerateSets,
    IdentityCheck, IndependenceDepth, IndexSetReport, ShiftCombination, WindowRegime,
};
