//! A finite-field linear-code laboratory.
//!
//! The crate builds families of codes from trace representations over finite
//! fields, enumerates their weight distributions exhaustively, and checks
//! structural claims mechanically: self-orthogonality and divisibility, dual
//! distances through exact MacWilliams transforms, Pless power moments,
//! Griesmer and sphere-packing optimality, `t`-designs held by codeword
//! supports, and locality of every coordinate.
//!
//! Layers, bottom-up:
//!
//! * [`galois`] — GF(p^d) tables, subfields, `Z[ζ_p]`, Gauss/Weil sums, bent screening;
//! * [`code_core`] — linear codes, enumeration, duality, bounds;
//! * [`families`] — the trace-code engine, family builders and closed-form predictors;
//! * [`analysis`] — theorem audits, design extraction and locality search;
//! * [`cli`] — the `build` / `verify` / `report` pipeline behind the `ortho` binary.

pub mod analysis;
pub mod cli;
pub mod code_core;
pub mod error;
pub mod families;
pub mod galois;

pub use error::{OrthoError, Result};
