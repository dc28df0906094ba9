//! Mechanical audits: divisibility ⇒ self-orthogonality, the projective
//! two-weight and Griesmer corollaries, support designs with the
//! Assmus–Mattson scan, and locality.

pub mod audits;
pub mod designs;
pub mod locality;

pub use audits::{
    audit_griesmer, audit_projective_two_weight, check_divisible_so_theorem, macdonald_match, AuditOutcome, AuditRecord,
};
pub use designs::{assmus_mattson, extract_designs, AssmusMattson, DesignMode, DesignSource, DesignWitness};
pub use locality::{lemma_locality, locality, LemmaLocality, LocalityWitness, RepairSet};
