//! Exhaustive codeword enumeration.
//!
//! Messages `0 … q^k − 1` are visited in modular Gray-code order over the
//! prime field: consecutive messages differ in exactly one radix-`p` digit,
//! incremented by one, so each step adds a single generator to the running
//! codeword. The message range is split
//! into contiguous chunks processed by a fixed-size worker pool; every worker
//! owns a private histogram and the results are merged by exact addition, so
//! the output never depends on the partitioning.

use std::sync::Arc;

use rayon::prelude::*;

use crate::code_core::code::LinearCode;
use crate::code_core::gf::GfTables;
use crate::code_core::weights::WeightDistribution;
use crate::error::{OrthoError, Result};

/// Default enumeration budget: `2^26` messages.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Budget and parallelism for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Maximum number of messages `q^k` that may be visited.
    pub budget: u64,
    /// Worker threads.
    pub workers: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: DEFAULT_BUDGET,
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }
}

impl EnumOptions {
    /// Default options with an explicit budget.
    pub fn with_budget(budget: u64) -> Self {
        EnumOptions { budget, ..Default::default() }
    }
}

/// `q^k` if it fits in `u64`.
pub fn message_count(q: usize, k: usize) -> Option<u64> {
    (q as u64).checked_pow(k as u32)
}

/// Fail with [`OrthoError::BudgetExceeded`] unless `q^k ≤ budget`.
pub fn check_budget(what: &str, q: usize, k: usize, budget: u64) -> Result<u64> {
    match message_count(q, k) {
        Some(m) if m <= budget => Ok(m),
        _ => Err(OrthoError::BudgetExceeded { what: what.into(), needed: format!("{q}^{k}"), budget }),
    }
}

/// Exact weight distribution by enumerating all `q^k` codewords.
pub fn weight_distribution(code: &LinearCode, opts: &EnumOptions) -> Result<WeightDistribution> {
    let total = check_budget("weight enumeration", code.q(), code.k(), opts.budget)?;
    let stepper = Stepper::new(code);
    let n = code.n();
    let chunk_count = if total < 1 << 12 { 1 } else { (opts.workers.max(1) * 8) as u64 };
    let bounds: Vec<(u64, u64)> = (0..chunk_count)
        .map(|c| (total * c / chunk_count, total * (c + 1) / chunk_count))
        .filter(|(a, b)| a < b)
        .collect();
    let count_range = |&(a, b): &(u64, u64)| {
        let mut hist = vec![0u64; n + 1];
        stepper.run(a, b, |cw| hist[cw.iter().filter(|&&x| x != 0).count()] += 1);
        hist
    };
    let hist = if bounds.len() == 1 {
        count_range(&bounds[0])
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers.max(1))
            .build()
            .map_err(|e| OrthoError::Io(format!("worker pool: {e}")))?;
        pool.install(|| {
            bounds.par_iter().map(count_range).reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                    a
                },
            )
        })
    };
    Ok(WeightDistribution::from_histogram(n, code.k(), code.q() as u64, &hist))
}

/// Visit every codeword (sequentially) within the budget.
pub fn for_each_codeword(code: &LinearCode, budget: u64, mut f: impl FnMut(&[u8])) -> Result<()> {
    let total = check_budget("codeword enumeration", code.q(), code.k(), budget)?;
    Stepper::new(code).run(0, total, &mut f);
    Ok(())
}

/// Gray-code traversal state shared by all workers.
///
/// The code is viewed as a GF(p)-space spanned by the `k·e` generators
/// `x^t · b_i` (basis rows `b_i`, `q = p^e`). Messages are radix-`p` digit
/// strings, so "increment a digit" is exactly field addition of a generator.
struct Stepper {
    generators: Vec<Vec<u8>>,
    p: u64,
    n: usize,
    mode: AddMode,
    gf: Arc<GfTables>,
}

#[derive(Clone, Copy)]
enum AddMode {
    /// Characteristic 2: addition is XOR of element codes.
    Xor,
    /// Prime field with `2q ≤ 256`: add then conditionally subtract.
    SmallPrime(u8),
    /// General case: look-up in the addition table.
    Table,
}

impl Stepper {
    fn new(code: &LinearCode) -> Self {
        let gf = code.gf().clone();
        let p = gf.p() as u64;
        let e = gf.field().degree();
        let generators = code
            .basis()
            .iter()
            .flat_map(|row| (0..e).map(|t| gf.scale(p.pow(t) as u8, row)).collect::<Vec<_>>())
            .collect();
        let mode = if p == 2 {
            AddMode::Xor
        } else if gf.is_prime_field() && p < 128 {
            AddMode::SmallPrime(p as u8)
        } else {
            AddMode::Table
        };
        Stepper { generators, p, n: code.n(), mode, gf }
    }

    /// Codeword at Gray index `t`: generator `i` has coefficient
    /// `t_i − t_{i+1} mod p` (radix-`p` digits of `t`).
    fn codeword_at(&self, t: u64) -> Vec<u8> {
        let g = self.generators.len();
        let mut digits = Vec::with_capacity(g + 1);
        let mut x = t;
        for _ in 0..=g {
            digits.push(x % self.p);
            x /= self.p;
        }
        let mut cw = vec![0u8; self.n];
        for (i, gen) in self.generators.iter().enumerate() {
            let c = ((digits[i] + self.p - digits[i + 1]) % self.p) as u8;
            self.gf.axpy(&mut cw, c, gen);
        }
        cw
    }

    /// Call `f` on the codewords of Gray indices `a … b−1`.
    fn run(&self, a: u64, b: u64, mut f: impl FnMut(&[u8])) {
        if a >= b {
            return;
        }
        let gf = &self.gf;
        let mut cw = self.codeword_at(a);
        f(&cw);
        for t in a + 1..b {
            // the digit that changes is the lowest nonzero radix-p digit of t
            let mut j = 0;
            let mut x = t;
            while x % self.p == 0 {
                x /= self.p;
                j += 1;
            }
            let row = &self.generators[j];
            match self.mode {
                AddMode::Xor => cw.iter_mut().zip(row).for_each(|(c, &r)| *c ^= r),
                AddMode::SmallPrime(q) => cw.iter_mut().zip(row).for_each(|(c, &r)| {
                    let s = *c + r;
                    *c = if s >= q { s - q } else { s };
                }),
                AddMode::Table => cw.iter_mut().zip(row).for_each(|(c, &r)| *c = gf.add(*c, r)),
            }
            f(&cw);
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::galois::FieldSpec;

    fn naive(code: &LinearCode) -> Vec<u64> {
        let (q, k) = (code.q(), code.k());
        let mut hist = vec![0u64; code.n() + 1];
        for m in 0..q.pow(k as u32) {
            let msg: Vec<u8> = (0..k).map(|i| ((m / q.pow(i as u32)) % q) as u8).collect();
            hist[code.encode(&msg).iter().filter(|&&x| x != 0).count()] += 1;
        }
        hist
    }

    fn sample_code(p: u64, e: u32) -> LinearCode {
        let f = Arc::new(FieldSpec::new(p, e).unwrap());
        let q = f.order() as u64;
        let rows = (0..4u64).map(|i| (0..9u64).map(|j| ((i * 7 + j * j * 3 + i * j) % q) as u8).collect()).collect();
        LinearCode::new(f, 9, rows).unwrap()
    }

    #[test]
    fn gray_traversal_visits_every_codeword_once() {
        let code = sample_code(3, 1);
        let mut seen = HashSet::new();
        for_each_codeword(&code, 1 << 20, |c| assert!(seen.insert(c.to_vec()))).unwrap();
        assert_eq!(seen.len(), 3usize.pow(code.k() as u32));
    }

    #[test]
    fn matches_naive_enumeration_for_all_add_modes() {
        for (p, e) in [(2u64, 1u32), (2, 3), (3, 1), (5, 1), (3, 2), (131, 1)] {
            let code = sample_code(p, e);
            if message_count(code.q(), code.k()).unwrap() > 1 << 22 {
                continue;
            }
            let wd = weight_distribution(&code, &EnumOptions { budget: 1 << 30, workers: 3 }).unwrap();
            let expect = WeightDistribution::from_histogram(code.n(), code.k(), code.q() as u64, &naive(&code));
            assert_eq!(wd, expect, "GF({p}^{e})");
        }
    }

    #[test]
    fn budget_enforced() {
        let code = sample_code(5, 1);
        assert!(matches!(
            weight_distribution(&code, &EnumOptions { budget: 10, workers: 1 }),
            Err(OrthoError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn zero_code() {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let code = LinearCode::new(f, 4, vec![]).unwrap();
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        assert_eq!(wd, WeightDistribution::zero_code(4, 3));
    }
}
