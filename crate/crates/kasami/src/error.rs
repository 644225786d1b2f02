use thiserror::Error;

/// Everything that can go wrong constructing fields and codes or evaluating
/// weights and bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("m must lie in {min}..={max}, got {m}")]
    InvalidM { m: usize, min: usize, max: usize },

    #[error("0x{modulus:x} is not a primitive polynomial of degree {degree} over GF(2)")]
    BadModulus { modulus: u64, degree: usize },

    #[error("element 0x{mask:x} does not lie in the {q}-element subfield")]
    NotInSubfield { mask: u32, q: u32 },

    #[error("beta = 0x{mask:x} must lie in the {q}-element subfield")]
    BetaNotInSubfield { mask: u32, q: u32 },

    #[error("exponential sum {sum} cannot arise from a length-{n} word (parity/range violation)")]
    ParityViolation { sum: i64, n: usize },

    #[error("window length b must lie in {min}..={max}, got {b}")]
    BOutOfRange { b: usize, min: usize, max: usize },

    #[error("closed form produced non-integer {numerator}/2^{divisor_log2}")]
    NonIntegerResult { numerator: i64, divisor_log2: usize },

    #[error("exhaustive scan over 2^{0} codewords exceeds the m <= {1} cap; use the _unchecked variant to force it", 3 * .m, .cap)]
    ScanTooLarge { m: usize, cap: usize },

    #[error("alpha and beta must both be nonzero here")]
    ZeroAlphaBeta,

    #[error("independence depth is undefined for b = {b}")]
    DepthUndefined { b: usize },

    #[error("the supplied elements are not GF(2)-linearly independent")]
    NotABasis,

    #[error("shift matrix has GF(2) rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("codeword has b-symbol weight {weight} but the code minimum is {minimum}")]
    NotMinimumWeight { weight: u32, minimum: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
