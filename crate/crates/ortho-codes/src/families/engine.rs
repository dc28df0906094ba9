//! Generic trace-code engine.
//!
//! Every family is described as a [`TraceCodeConfig`]. The config gives a big
//! field `GF(p^D)`, an alphabet subfield `GF(p^S)` (S | D), an ordered
//! evaluation domain `x_0, x_1, …` and a list of slots. Each slot is a map
//! `x_t ↦ y_t`. For every slot and every element `μ_j = α^j` of the
//! `GF(p^S)`-basis `1, α, …, α^{D/S−1}`, the engine emits the row
//! `(tr_{p^D/p^S}(μ_j · y_t))_t`. Because the trace is `GF(p^S)`-linear, these
//! rows span exactly the codewords `(tr(a · y_t))_t` for `a ∈ GF(p^D)`.

use std::sync::Arc;

use crate::code_core::code::LinearCode;
use crate::error::{OrthoError, Result};
use crate::galois::{FieldSpec, SubfieldMap};

/// How a slot turns the `t`-th domain point into a big-field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// `x_t ↦ x_t^e`.
    Monomial(u64),
    /// `x_t ↦ g^t`, a group-power sequence indexed by position.
    Power(u32),
}

/// Post-processing of the trace rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Completion {
    /// Append the all-one row (fails if it already lies in the span).
    pub augment: bool,
    /// Append a parity coordinate making every row sum to zero (applied last).
    pub extend: bool,
    /// Literal "trace + c, then a coordinate equal to c" form: every trace
    /// row gets a trailing 0 and an all-one row of length `n + 1` is added.
    pub trailing_constant: bool,
}

/// A complete description of a trace code.
#[derive(Debug, Clone)]
pub struct TraceCodeConfig {
    /// Relative trace from the big field onto the alphabet.
    pub map: Arc<SubfieldMap>,
    /// Ordered evaluation points (big-field element codes).
    pub domain: Vec<u32>,
    /// One coefficient slot per map.
    pub slots: Vec<Slot>,
    pub completion: Completion,
}

impl TraceCodeConfig {
    /// Config over `GF(p^big_degree)` with alphabet `GF(p^sub_degree)`.
    pub fn new(big: Arc<FieldSpec>, sub_degree: u32, domain: Vec<u32>, slots: Vec<Slot>) -> Result<Self> {
        let map = Arc::new(SubfieldMap::new(big, sub_degree)?);
        Ok(TraceCodeConfig { map, domain, slots, completion: Completion::default() })
    }

    /// Replace the post-processing flags.
    pub fn with_completion(mut self, completion: Completion) -> Self {
        self.completion = completion;
        self
    }

    /// The big field.
    pub fn big(&self) -> &Arc<FieldSpec> {
        self.map.big()
    }

    /// The alphabet field.
    pub fn alphabet(&self) -> &Arc<FieldSpec> {
        self.map.small()
    }

    /// Value of slot `s` at position `t`.
    pub fn slot_value(&self, slot: Slot, t: usize) -> u32 {
        let big = self.big();
        match slot {
            Slot::Monomial(e) => big.pow(self.domain[t], e),
            Slot::Power(g) => {
                let order = big.order() as u64 - 1;
                match big.log(g) {
                    None => u32::from(t == 0),
                    Some(l) => big.alpha_pow(((l as u64 * t as u64) % order) as i64),
                }
            }
        }
    }

    /// The trace rows before completion, `m/[sub degree]` per slot.
    pub fn trace_rows(&self) -> Vec<Vec<u8>> {
        let big = self.big();
        let rel = self.map.relative_degree();
        let mut rows = Vec::with_capacity(self.slots.len() * rel as usize);
        for &slot in &self.slots {
            let values: Vec<u32> = (0..self.domain.len()).map(|t| self.slot_value(slot, t)).collect();
            for j in 0..rel {
                let mu = big.alpha_pow(j as i64);
                rows.push(values.iter().map(|&y| self.map.trace_symbol(big.mul(mu, y)) as u8).collect());
            }
        }
        rows
    }
}

/// Build the code described by `cfg`.
pub fn trace_code_build(cfg: &TraceCodeConfig) -> Result<LinearCode> {
    let n = cfg.domain.len();
    if n == 0 {
        return Err(OrthoError::EmptyDomain);
    }
    let alphabet = cfg.alphabet().clone();
    let c = cfg.completion;
    let mut rows = cfg.trace_rows();
    let mut len = n;
    if c.trailing_constant {
        rows.iter_mut().for_each(|r| r.push(0));
        len += 1;
        rows.push(vec![1; len]);
    }
    let mut code = LinearCode::new(alphabet, len, rows)?;
    if c.augment && !c.trailing_constant {
        code = code.augment()?;
    }
    if c.extend {
        code = code.extend();
    }
    Ok(code)
}

/// The points `α^0, α^1, …, α^{count−1}` of the big field.
pub fn power_points(big: &FieldSpec, count: usize) -> Vec<u32> {
    (0..count).map(|t| big.alpha_pow(t as i64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_core::enumerate::{weight_distribution, EnumOptions};

    #[test]
    fn simplex_like_trace_code() {
        let big = Arc::new(FieldSpec::new(3, 3).unwrap());
        let cfg = TraceCodeConfig::new(big.clone(), 1, power_points(&big, 26), vec![Slot::Monomial(1)]).unwrap();
        let code = trace_code_build(&cfg).unwrap();
        assert_eq!((code.n(), code.k()), (26, 3));
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        // the irreducible cyclic code of full length is one-weight
        assert_eq!(wd.nonzero_weights(), vec![18]);
    }

    #[test]
    fn trailing_constant_layout() {
        let big = Arc::new(FieldSpec::new(3, 2).unwrap());
        let cfg = TraceCodeConfig::new(big.clone(), 1, power_points(&big, 8), vec![Slot::Power(big.alpha_pow(1))])
            .unwrap()
            .with_completion(Completion { trailing_constant: true, ..Default::default() });
        let code = trace_code_build(&cfg).unwrap();
        assert_eq!(code.n(), 9);
        let rows = code.rows();
        assert!(rows[..rows.len() - 1].iter().all(|r| r[8] == 0));
        assert_eq!(rows.last().unwrap(), &vec![1u8; 9]);
    }

    #[test]
    fn empty_domain_rejected() {
        let big = Arc::new(FieldSpec::new(3, 2).unwrap());
        let cfg = TraceCodeConfig::new(big, 1, vec![], vec![Slot::Monomial(1)]).unwrap();
        assert_eq!(trace_code_build(&cfg).unwrap_err(), OrthoError::EmptyDomain);
    }
}
