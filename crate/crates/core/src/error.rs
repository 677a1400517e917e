use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown ring preset `{0}`")]
    UnknownPreset(String),

    #[error("preset `{preset}`: {reason}")]
    PresetParameter { preset: String, reason: String },

    #[error("invalid ring presentation: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("ring has no fundamental class")]
    MissingFundamental,

    #[error("`{0}` is not a basis monomial of the ring")]
    UnknownMonomial(String),

    #[error("degree mismatch: {0}")]
    Degree(String),

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("negative index {0}")]
    NegativeIndex(i64),

    #[error("projective model needs total rank a1 + a2 >= 1")]
    EmptyProjectiveModel,

    #[error("fixed locus index must be 1 or 2, got {0}")]
    InvalidLocus(usize),

    #[error("Laurent descent to y^{exponent} passes the guard floor y^-{limit}")]
    DescentGuard { exponent: i64, limit: i64 },

    #[error("x-exponent {exponent} lies outside the SW window [0, {window}]")]
    WindowViolation { exponent: u32, window: u32 },

    #[error("degree formula needs d1 <= 0, got d1 = {0}")]
    PositiveIndex(i64),

    #[error("non-polynomial y-residue: {0}")]
    NonPolynomialResidue(String),

    #[error("invalid SW functional: {0}")]
    InvalidFunctional(String),

    #[error("configuration error: {0}")]
    Config(String),
}
