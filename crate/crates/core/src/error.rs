//! Error type shared by every module of the crate.
//!
//! Errors split into two families: *validation* errors, raised while
//! constructing a value that violates a structural invariant (bad rational
//! literal, degree bound breach, non-bijective permutation), and *domain*
//! errors, raised by an operation whose input is well-formed but outside the
//! operation's mathematical domain (resultant of two constants, packing that
//! cannot succeed). Callers that need to distinguish them, e.g. to pick an
//! exit code, use [`Error::is_validation`].

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // ---- validation ----
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("section of twist {twist} needs degree <= {twist}, got {degree}")]
    SectionDegreeBound { twist: i64, degree: i64 },
    #[error("section twist must be non-negative, got {0}")]
    NegativeTwist(i64),
    #[error("splitting type must be non-empty and sorted non-increasing")]
    UnsortedSplitting,
    #[error("twist must be positive, got {0}")]
    NonPositiveTwist(i64),
    #[error("matrix entry ({row},{col}) violates its twist bound {twist}")]
    EntryDegreeBound { row: usize, col: usize, twist: i64 },
    #[error("characteristic tuple entry {index} must have twist {expected}, got {got}")]
    TupleTwistMismatch {
        index: usize,
        expected: i64,
        got: i64,
    },
    #[error("phi must be an r x r matrix matching the splitting rank")]
    MatrixShape,
    #[error("images do not form a permutation")]
    InvalidPermutation,
    #[error("permutation degrees disagree")]
    DegreeMismatch,
    #[error("no generators supplied")]
    EmptyGenerators,
    #[error("blocks do not form an equal-size partition with 1 < size < degree")]
    InvalidBlocks,
    #[error("invalid factored section: {0}")]
    InvalidFactoredSection(String),
    #[error("invalid bundle description: {0}")]
    InvalidBundleSpec(String),

    // ---- domain ----
    #[error("undefined squarefree test for the zero polynomial")]
    ZeroPolynomial,
    #[error("zero section has no zero profile")]
    ZeroSection,
    #[error("resultant requires both arguments nonzero in the spectral variable")]
    ZeroResultantInput,
    #[error("resultant of two polynomials constant in the spectral variable")]
    ConstantResultant,
    #[error("rank-1 tuple carries no branch data")]
    NoBranchData,
    #[error("group too large: closure exceeded bound {0}")]
    GroupTooLarge(usize),
    #[error("imprimitivity undefined: group is not transitive")]
    NotTransitive,
    #[error("unpackable factorization")]
    UnpackableFactorization,
    #[error("no general computational strategy for this bundle")]
    OutsideEllipticTable,
    #[error("not a proper factorization: need r = m*p with m, p >= 2")]
    NotAProperFactorization,
    #[error("outside the treated cases: twist must be >= 1")]
    OutsideTreatedCases,
    #[error("factorizability undefined for degree {0} < 2")]
    DegreeTooSmall(u64),
}

impl Error {
    /// True when the error reports a malformed value rather than an
    /// operation applied outside its mathematical domain.
    pub fn is_validation(&self) -> bool {
        use Error::*;
        matches!(
            self,
            InvalidRational(_)
                | ZeroDenominator
                | SectionDegreeBound { .. }
                | NegativeTwist(_)
                | UnsortedSplitting
                | NonPositiveTwist(_)
                | EntryDegreeBound { .. }
                | TupleTwistMismatch { .. }
                | MatrixShape
                | InvalidPermutation
                | DegreeMismatch
                | EmptyGenerators
                | InvalidBlocks
                | InvalidFactoredSection(_)
                | InvalidBundleSpec(_)
        )
    }
}
