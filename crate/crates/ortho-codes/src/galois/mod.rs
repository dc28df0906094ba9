//! Exact arithmetic in GF(p^d) and its subfields, plus exact character sums
//! with values in the cyclotomic ring `Z[ζ_p]`.

pub mod bent;
pub mod cycint;
pub mod field;
pub mod gauss;
pub mod subfield;

pub use bent::{rf_membership, walsh_transform, BentProfile, BentRejection, FunctionTable};
pub use cycint::CycInt;
pub use field::{is_prime, prime_power, FieldSpec, DEFAULT_TABLE_BUDGET};
pub use gauss::{gauss_sum_brute, gauss_sum_quadratic, weil_sum, weil_sum_direct, GaussValue};
pub use subfield::SubfieldMap;
