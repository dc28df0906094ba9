//! Code families: parameter validation, construction through the generic
//! trace-code engine, closed-form predictions and the auxiliary value-count
//! lemmas behind them.

pub mod build;
pub mod counting;
pub mod engine;
pub mod params;
pub mod predict;

pub use build::{build, build_family, family_config};
pub use engine::{trace_code_build, Completion, Slot, TraceCodeConfig};
pub use params::{Family, FamilyId, FamilyParams};
pub use predict::{predict_family, DesignClaim, DualFacts, Prediction, TableRow};
