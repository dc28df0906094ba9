//! Support designs of a code and its dual, with the Assmus–Mattson
//! applicability scan.
//!
//! Blocks are codeword supports of one weight `κ`, scalar multiples merged
//! (one block per support). A design is verified by counting, for `t`-subsets
//! of the coordinates, how many blocks contain them: all `t`-subsets when
//! their number is small ([`FULL_SUBSET_LIMIT`]), otherwise a uniform
//! sample drawn from a seeded ChaCha generator, with the sample size recorded.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::code_core::code::LinearCode;
use crate::code_core::duality::DualSummary;
use crate::code_core::enumerate::for_each_codeword;
use crate::code_core::lowweight::min_weight_dual_supports;
use crate::code_core::weights::{big_uint_string, WeightDistribution};
use crate::error::{OrthoError, Result};

/// Full verification when `C(n, t)` is at most this.
pub const FULL_SUBSET_LIMIT: u64 = 4096;
/// Number of sampled `t`-subsets otherwise.
pub const DEFAULT_SAMPLE_SIZE: usize = 512;
/// Seed of the sampling generator (fixed for reproducible reports).
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_de51;

/// Whether blocks come from the code or its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DesignSource {
    Code,
    Dual,
}

/// How the `t`-subsets were covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum DesignMode {
    Full,
    Sampled { sample_size: usize, seed: u64 },
}

/// A verified (or refuted) support design `t-(n, κ, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignWitness {
    pub source: DesignSource,
    pub t: usize,
    pub n: usize,
    pub kappa: usize,
    /// The common number of blocks through a `t`-subset, if constant.
    pub lambda: Option<u64>,
    /// Distinct supports found.
    pub block_count: u64,
    /// `A_κ / (q − 1)` from the weight distribution.
    #[serde(with = "big_uint_string")]
    pub expected_blocks: BigUint,
    /// `λ` from `λ·C(n,t) = C(κ,t)·A_κ/(q−1)`, when that is an integer.
    pub counting_lambda: Option<u64>,
    pub mode: DesignMode,
    /// Whether the Assmus–Mattson scan predicts this design.
    pub am_predicted: bool,
}

impl DesignWitness {
    /// Constant `λ`, block count as expected, and `λ` consistent with the
    /// counting identity.
    pub fn is_design(&self) -> bool {
        self.lambda.is_some()
            && BigUint::from(self.block_count) == self.expected_blocks
            && self.lambda == self.counting_lambda
    }
}

/// Outcome of the Assmus–Mattson applicability scan for one `t`.
///
/// The theorem is applied in both orientations: with `C` as the base code
/// (`t < d`, at most `d − t` nonzero dual weights in `[1, n−t]`) and with
/// `C⊥` as the base code (`t < d⊥`, at most `d⊥ − t` nonzero weights of `C`
/// in `[1, n−t]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssmusMattson {
    pub t: usize,
    pub d: usize,
    pub d_perp: usize,
    /// Largest `w ≤ n` with `w − ⌊(w+q−2)/(q−1)⌋ < d`.
    pub w: usize,
    /// The same with `d⊥`.
    pub w_perp: usize,
    /// Orientation with `C` as base code applies.
    pub applies_to_code: bool,
    /// Orientation with `C⊥` as base code applies.
    pub applies_to_dual: bool,
}

impl AssmusMattson {
    /// Whether the theorem predicts that weight-`κ` supports of `source`
    /// hold a `t`-design.
    pub fn predicts(&self, source: DesignSource, kappa: usize, n: usize) -> bool {
        let (own_d, own_w) = match source {
            DesignSource::Code => (self.d, self.w),
            DesignSource::Dual => (self.d_perp, self.w_perp),
        };
        let (base_is_source, base_is_other) = match source {
            DesignSource::Code => (self.applies_to_code, self.applies_to_dual),
            DesignSource::Dual => (self.applies_to_dual, self.applies_to_code),
        };
        // base code: weights d..w; the other code: weights d..min(n−t, w)
        (base_is_source && own_d <= kappa && kappa <= own_w)
            || (base_is_other && own_d <= kappa && kappa <= own_w.min(n - self.t))
    }
}

fn am_w(n: usize, d: usize, q: u64) -> usize {
    let q = q as usize;
    (0..=n).rev().find(|&w| w - (w + q - 2) / (q - 1) < d).unwrap_or(0)
}

/// Run the Assmus–Mattson applicability scan.
pub fn assmus_mattson(wd: &WeightDistribution, dual: &DualSummary, t: usize) -> Option<AssmusMattson> {
    let n = wd.n;
    let d = wd.min_distance()?;
    let d_perp = dual.d_perp?;
    let count_in =
        |dist: &WeightDistribution| dist.counts.iter().filter(|(&w, c)| w >= 1 && w + t <= n && !c.is_zero()).count();
    let dual_weights = count_in(&dual.distribution);
    let code_weights = count_in(wd);
    Some(AssmusMattson {
        t,
        d,
        d_perp,
        w: am_w(n, d, wd.q),
        w_perp: am_w(n, d_perp, wd.q),
        applies_to_code: t >= 1 && t < d && dual_weights + t <= d,
        applies_to_dual: t >= 1 && t < d_perp && code_weights + t <= d_perp,
    })
}

type Block = Vec<u64>;

fn to_block(support: impl Iterator<Item = usize>, n: usize) -> Block {
    let mut b = vec![0u64; n.div_ceil(64)];
    for j in support {
        b[j / 64] |= 1 << (j % 64);
    }
    b
}

fn contains_all(block: &Block, subset: &[usize]) -> bool {
    subset.iter().all(|&j| block[j / 64] >> (j % 64) & 1 == 1)
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::from(1u8), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Extract and verify support designs.
///
/// `requests` lists `(source, κ)`; code blocks are collected by enumerating
/// all codewords (within `budget`), dual blocks by the minimum-weight circuit
/// search (`κ = d⊥` only).
pub fn extract_designs(
    code: &LinearCode,
    wd: &WeightDistribution,
    dual: &DualSummary,
    requests: &[(DesignSource, usize)],
    t: usize,
    budget: u64,
) -> Result<Vec<DesignWitness>> {
    extract_designs_seeded(code, wd, dual, requests, t, budget, DEFAULT_SEED)
}

/// [`extract_designs`] with an explicit sampling seed.
pub fn extract_designs_seeded(
    code: &LinearCode,
    wd: &WeightDistribution,
    dual: &DualSummary,
    requests: &[(DesignSource, usize)],
    t: usize,
    budget: u64,
    seed: u64,
) -> Result<Vec<DesignWitness>> {
    let n = code.n();
    if t == 0 || t > 2 || t > n {
        return Err(OrthoError::UnsupportedDesign(format!("t = {t} (supported: 1 and 2)")));
    }
    let am = assmus_mattson(wd, dual, t);
    let code_kappas: Vec<usize> = requests.iter().filter(|(s, _)| *s == DesignSource::Code).map(|&(_, k)| k).collect();
    let mut code_blocks: Vec<HashSet<Block>> = vec![HashSet::new(); code_kappas.len()];
    if !code_kappas.is_empty() {
        for_each_codeword(code, budget, |cw| {
            let w = cw.iter().filter(|&&x| x != 0).count();
            if let Some(i) = code_kappas.iter().position(|&k| k == w) {
                code_blocks[i].insert(to_block(cw.iter().positions(|&x| x != 0), n));
            }
        })?;
    }
    let q1 = BigUint::from(code.q() as u64 - 1);
    let mut out = Vec::new();
    for &(source, kappa) in requests {
        let (blocks, a_kappa): (Vec<Block>, BigUint) = match source {
            DesignSource::Code => {
                let i = code_kappas.iter().position(|&k| k == kappa).unwrap();
                (code_blocks[i].iter().cloned().collect(), wd.count(kappa))
            }
            DesignSource::Dual => {
                if dual.d_perp != Some(kappa) {
                    return Err(OrthoError::UnsupportedDesign(format!(
                        "dual blocks only at the minimum dual weight (κ = {kappa}, d⊥ = {:?})",
                        dual.d_perp
                    )));
                }
                let supports = min_weight_dual_supports(code, kappa, budget)?;
                (supports.into_iter().map(|s| to_block(s.into_iter(), n)).collect(), dual.a(kappa))
            }
        };
        let mut blocks = blocks;
        blocks.sort();
        let expected_blocks = a_kappa / &q1;
        let (num, rem) = (binom(kappa, t) * &expected_blocks).div_rem(&binom(n, t));
        let counting_lambda = if rem.is_zero() { u64::try_from(num).ok() } else { None };
        let subsets = binom(n, t);
        let (mode, lambdas): (DesignMode, Vec<u64>) = if subsets <= BigUint::from(FULL_SUBSET_LIMIT) {
            (DesignMode::Full, full_counts(&blocks, n, t))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ kappa as u64);
            let counts = (0..DEFAULT_SAMPLE_SIZE)
                .map(|_| {
                    let s = sample(&mut rng, n, t).into_vec();
                    blocks.iter().filter(|b| contains_all(b, &s)).count() as u64
                })
                .collect();
            (DesignMode::Sampled { sample_size: DEFAULT_SAMPLE_SIZE, seed: seed ^ kappa as u64 }, counts)
        };
        let lambda = lambdas.iter().all_equal_value().ok().copied();
        out.push(DesignWitness {
            source,
            t,
            n,
            kappa,
            lambda,
            block_count: blocks.len() as u64,
            expected_blocks,
            counting_lambda,
            mode,
            am_predicted: am.as_ref().is_some_and(|a| a.predicts(source, kappa, n)),
        });
    }
    Ok(out)
}

/// Blocks through every `t`-subset (`t ≤ 2`), in lexicographic subset order.
fn full_counts(blocks: &[Block], n: usize, t: usize) -> Vec<u64> {
    let mut counts = vec![0u64; if t == 1 { n } else { n * n }];
    for b in blocks {
        let support: Vec<usize> = (0..n).filter(|&j| b[j / 64] >> (j % 64) & 1 == 1).collect();
        if t == 1 {
            support.iter().for_each(|&j| counts[j] += 1);
        } else {
            for (i, &x) in support.iter().enumerate() {
                for &y in &support[i + 1..] {
                    counts[x * n + y] += 1;
                }
            }
        }
    }
    if t == 1 {
        counts
    } else {
        (0..n).tuple_combinations().map(|(x, y)| counts[x * n + y]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_core::duality::macwilliams;
    use crate::code_core::enumerate::{weight_distribution, EnumOptions};
    use crate::families::{build_family, FamilyParams};

    #[test]
    fn all_one_multiples_form_a_single_block() {
        let code = build_family(&FamilyParams::parse("family=example q=3 m=3").unwrap()).unwrap();
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        let dual = macwilliams(&wd).unwrap();
        let w = extract_designs(&code, &wd, &dual, &[(DesignSource::Code, 9)], 1, 1 << 20).unwrap();
        assert_eq!((w[0].block_count, w[0].lambda), (1, Some(1)));
        assert!(w[0].is_design());
    }

    #[test]
    fn am_weight_bound() {
        assert_eq!(am_w(27, 15, 3), 27);
        assert_eq!(am_w(27, 5, 3), 9);
        assert_eq!(am_w(10, 3, 2), 10);
    }
}
