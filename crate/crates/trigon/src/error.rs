//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the exact-arithmetic, enumeration and verification layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// `two_cos_pi_over(p)` was requested in a field whose conductor is not
    /// divisible by `2p`.
    #[error("conductor {n} is not divisible by {required}")]
    Divisibility { n: u32, required: u32 },

    /// Attempt to invert the zero element of a cyclotomic field.
    #[error("inversion of zero in Q(zeta_{n})")]
    ZeroInversion { n: u32 },

    /// Arithmetic between elements of fields with different conductors.
    #[error("mixed cyclotomic fields: Q(zeta_{left}) vs Q(zeta_{right})")]
    MixedField { left: u32, right: u32 },

    /// Group elements from different group contexts were combined.
    #[error("mixed group contexts")]
    MixedContext,

    /// A signature parameter was out of range.
    #[error("invalid triangle signature: {0}")]
    InvalidSignature(String),

    /// A build-time self check of a group context failed.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    /// `enumerate` was called on a non-spherical signature.
    #[error("group is infinite for signature ({p1},{p2},{p3})")]
    NotFinite { p1: u32, p2: u32, p3: u32 },

    /// Coset enumeration ran out of room. Carries the coset high-water mark.
    #[error("coset enumeration exceeded the cap (high-water mark {high_water})")]
    CapExceeded { high_water: usize },

    /// A coset table implies a cover with non-integral or negative genus.
    #[error("inconsistent cover: {0}")]
    InconsistentCover(String),

    /// A fill was requested for a boundary cycle whose degree does not
    /// divide the exceptional cone order.
    #[error("illegal fill: cycle length {cycle} does not divide {order}")]
    IllegalFill { cycle: usize, order: u32 },

    /// A fill plan does not line up with the reconstruction it is applied to.
    #[error("fill plan has {plan} entries but the cover has {cycles} boundary cycles")]
    PlanShapeMismatch { plan: usize, cycles: usize },

    /// Case parameters violate the catalog constraints.
    #[error("invalid case parameters: {0}")]
    InvalidParams(String),

    /// A Nielsen search finished its budget without a certificate.
    #[error("no certificate found within bounds")]
    NotFoundWithinBounds,

    /// A verification step that the catalog asserts must hold failed.
    #[error("verification failure in case {case}: {what}")]
    ReportedFailure { case: String, what: String },

    /// Word or orbifold grammar error.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
