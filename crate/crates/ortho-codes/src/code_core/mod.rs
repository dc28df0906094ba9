//! Linear codes over GF(q): exhaustive enumeration, weight distributions,
//! MacWilliams duality, Pless moments, orthogonality, projectivity, bounds
//! and low-weight dual words.

pub mod bounds;
pub mod code;
pub mod duality;
pub mod enumerate;
pub mod gf;
pub mod lowweight;
pub mod projective;
pub mod span;
pub mod weights;

pub use bounds::{bounds_audit, BoundsReport, SpherePackingClass};
pub use code::LinearCode;
pub use duality::{macwilliams, pless_verify, DualSummary, PlessCheck};
pub use enumerate::{weight_distribution, EnumOptions, DEFAULT_BUDGET};
pub use gf::GfTables;
pub use lowweight::{low_weight_dual_words, min_weight_dual_supports};
pub use projective::{is_projective, projectivity, Projectivity};
pub use weights::WeightDistribution;

/// Whether `code` is self-orthogonal (`C ⊆ C⊥`).
pub fn is_self_orthogonal(code: &LinearCode) -> bool {
    code.is_self_orthogonal()
}

/// Divisor Δ of a distribution (gcd of nonzero weights; 0 for the zero code).
pub fn divisor(wd: &WeightDistribution) -> u64 {
    wd.divisor()
}
