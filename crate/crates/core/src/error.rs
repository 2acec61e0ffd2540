use thiserror::Error;

/// Errors raised when an input violates a precondition of the construction.
///
/// Structural defects found while *checking* data (a failed invariant in a
/// sweep, a non-vanishing Ext group) are never errors; they are reported
/// through [`crate::report::ValidationReport`] entries instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// gcd(n, q) > 1 would mean the group contains a pseudo-reflection.
    #[error("gcd({n}, {q}) = {gcd}; gcd(n, q) must be 1")]
    NotCoprime { n: i64, q: i64, gcd: i64 },

    #[error("q = {q} out of range; need 0 < q < n = {n}")]
    QOutOfRange { n: i64, q: i64 },

    #[error("modulus n = {n} too small; need n >= 2")]
    ModulusTooSmall { n: i64 },

    /// The character is special, so it has no level and no collection object.
    #[error("character {d} (mod {n}) is special; a non-special character is required")]
    SpecialCharacter { d: i64, n: i64 },

    /// The twists of a y-power map do not differ by the character of the
    /// monomial, so the map is not equivariant.
    #[error("twist mismatch: multiplication by y^{power} needs destination twist {expected}, got {actual}")]
    TwistMismatch {
        power: i64,
        expected: i64,
        actual: i64,
    },

    #[error("length mismatch: source module has length {src}, destination {dst}")]
    LengthMismatch { src: i64, dst: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
