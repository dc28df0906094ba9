//! Low-weight words of the dual code, found from dependencies among the
//! generator columns rather than by enumerating `C⊥`.
//!
//! A dual word of weight `w` with support `S` is a relation `Σ_{j∈S} x_j g_j = 0`
//! with every `x_j ≠ 0`, where `g_j` are the generator columns.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::code_core::code::{null_space, rref, LinearCode};
use crate::code_core::span::IncrementalSpan;
use crate::error::{OrthoError, Result};

/// `C(n, k)` in big integers.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// `Σ_{w ≤ w_max} C(n, w)(q − 1)^{w−1}`: the work estimate for
/// [`low_weight_dual_words`].
pub fn low_weight_cost(n: usize, q: usize, w_max: usize) -> BigUint {
    (1..=w_max.min(n)).map(|w| binomial(n, w) * BigUint::from(q - 1).pow(w as u32 - 1)).sum()
}

/// All dual codewords of weight `1 … w_max`, grouped by weight.
pub fn low_weight_dual_words(code: &LinearCode, w_max: usize, budget: u64) -> Result<BTreeMap<usize, Vec<Vec<u8>>>> {
    let cost = low_weight_cost(code.n(), code.q(), w_max);
    if cost > BigUint::from(budget) {
        return Err(OrthoError::BudgetExceeded {
            what: format!("dual words of weight ≤ {w_max}"),
            needed: cost.to_string(),
            budget,
        });
    }
    let gf = code.gf();
    let (n, k, q) = (code.n(), code.k(), code.q());
    let columns: Vec<Vec<u8>> = (0..n).map(|j| code.column(j)).collect();
    let mut out: BTreeMap<usize, Vec<Vec<u8>>> = BTreeMap::new();
    for w in 1..=w_max.min(n) {
        let mut found = Vec::new();
        for subset in (0..n).combinations(w) {
            // rows of the k × w submatrix; its null space holds the relations
            let sub: Vec<Vec<u8>> = (0..k).map(|r| subset.iter().map(|&j| columns[j][r]).collect()).collect();
            let ech = rref(gf, &sub, w);
            if ech.rows.len() == w {
                continue;
            }
            let basis = null_space(gf, &ech, w);
            let dim = basis.len() as u32;
            for idx in 1..(q as u64).pow(dim) {
                let mut v = vec![0u8; w];
                let mut x = idx;
                for b in &basis {
                    gf.axpy(&mut v, (x % q as u64) as u8, b);
                    x /= q as u64;
                }
                if v.iter().all(|&c| c != 0) {
                    let mut word = vec![0u8; n];
                    for (&j, &c) in subset.iter().zip(&v) {
                        word[j] = c;
                    }
                    found.push(word);
                }
            }
        }
        if !found.is_empty() {
            out.insert(w, found);
        }
    }
    Ok(out)
}

/// Supports of the minimum-weight dual words when the dual distance is
/// `d_perp` (one support per projective class of words).
///
/// Such supports are circuits of the column matroid: every proper subset is
/// independent. Each is found exactly once as an independent `(d⊥−1)`-set `T`
/// plus a later column in the span of `T` with all coefficients nonzero.
/// The budget bounds the number of `(d⊥−1)`-subsets, `C(n, d⊥−1)`.
pub fn min_weight_dual_supports(code: &LinearCode, d_perp: usize, budget: u64) -> Result<Vec<Vec<usize>>> {
    let n = code.n();
    let cost = binomial(n, d_perp.saturating_sub(1));
    if cost > BigUint::from(budget) || d_perp == 0 {
        return Err(OrthoError::BudgetExceeded {
            what: format!("minimum-weight dual supports (d⊥ = {d_perp})"),
            needed: cost.to_string(),
            budget,
        });
    }
    let columns: Vec<Vec<u8>> = (0..n).map(|j| code.column(j)).collect();
    let mut out = Vec::new();
    if let Some(packing) = PackedPrime::for_code(code, d_perp - 1) {
        packing.circuits(&columns, d_perp - 1, &mut out);
        out.sort_unstable();
    } else {
        let mut span = IncrementalSpan::new(code.gf());
        let mut stack = Vec::with_capacity(d_perp);
        circuits_dfs(&columns, d_perp - 1, 0, &mut span, &mut stack, &mut out);
    }
    Ok(out)
}

/// Largest span size `q^{d⊥−1}` kept per search level.
const PACKED_SPAN_LIMIT: usize = 4096;

/// Vectors over a prime field `GF(p)`, `p < 128`, of length at most 16,
/// packed one byte per coordinate so that addition is a few word operations.
///
/// The circuit search then walks independent `(d⊥−1)`-subsets `T` while
/// carrying the whole span of `T` (for the independence test of the next
/// column) and every combination `Σ a_i g_i` with all `a_i ≠ 0`, which is
/// looked up among the later columns.
struct PackedPrime {
    p: u8,
    /// `0x01` in every lane.
    ones: u128,
    /// `128 − p` in every lane: adding it sets bit 7 exactly where a lane is `≥ p`.
    bias: u128,
}

impl PackedPrime {
    fn for_code(code: &LinearCode, depth: usize) -> Option<Self> {
        let q = code.q();
        let span = q.checked_pow(depth as u32)?;
        if !code.gf().is_prime_field() || q >= 128 || code.k() > 16 || span > PACKED_SPAN_LIMIT {
            return None;
        }
        let ones = u128::from_le_bytes([1; 16]);
        Some(PackedPrime { p: q as u8, ones, bias: ones * (128 - q as u128) })
    }

    fn pack(v: impl DoubleEndedIterator<Item = u8>) -> u128 {
        v.rev().fold(0u128, |acc, x| (acc << 8) | x as u128)
    }

    /// Lane-wise `(a + b) mod p`; lanes stay below `2p ≤ 254`, so no carries.
    fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        let reduce = ((s + self.bias) >> 7) & self.ones;
        s - reduce * self.p as u128
    }

    fn circuits(&self, columns: &[Vec<u8>], depth: usize, out: &mut Vec<Vec<usize>>) {
        let p = self.p as u32;
        // multiples[j][a − 1] = a · g_j
        let multiples: Vec<Vec<u128>> = columns
            .iter()
            .map(|c| (1..p).map(|a| Self::pack(c.iter().map(|&x| (x as u32 * a % p) as u8))).collect())
            .collect();
        let mut index: HashMap<u128, Vec<usize>> = HashMap::new();
        for (j, m) in multiples.iter().enumerate() {
            index.entry(m[0]).or_default().push(j);
        }
        if depth == 0 {
            self.close(&index, &[0], &[], out);
            return;
        }
        // the first column of T is distributed over the worker pool
        let found: Vec<Vec<Vec<usize>>> = (0..multiples.len().saturating_sub(depth - 1))
            .into_par_iter()
            .map(|j| {
                let mut local = Vec::new();
                let span: Vec<u128> = std::iter::once(0).chain(multiples[j].iter().copied()).collect();
                let mut stack = vec![j];
                self.dfs(&multiples, &index, depth, j + 1, (&span, &multiples[j]), &mut stack, &mut local);
                local
            })
            .collect();
        out.extend(found.into_iter().flatten());
    }

    /// Record `T ∪ {j}` for every later column `g_j` equal to one of `sums`.
    fn close(&self, index: &HashMap<u128, Vec<usize>>, sums: &[u128], stack: &[usize], out: &mut Vec<Vec<usize>>) {
        let after = stack.last().map_or(0, |&l| l + 1);
        for s in sums {
            for &j in index.get(s).into_iter().flatten().filter(|&&j| j >= after) {
                let mut support = stack.to_vec();
                support.push(j);
                out.push(support);
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        multiples: &[Vec<u128>],
        index: &HashMap<u128, Vec<usize>>,
        depth: usize,
        start: usize,
        (span, sums): (&[u128], &[u128]),
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == depth {
            self.close(index, sums, stack, out);
            return;
        }
        let remaining = depth - stack.len();
        let extend = |base: &[u128], with: &[u128], keep: bool, into: &mut Vec<u128>| {
            into.clear();
            if keep {
                into.extend_from_slice(base);
            }
            into.extend(base.iter().flat_map(|&s| with.iter().map(move |&m| self.add(s, m))));
        };
        let (mut next_span, mut next_sums) = (Vec::new(), Vec::new());
        for j in start..multiples.len().saturating_sub(remaining) {
            if span.contains(&multiples[j][0]) {
                continue; // g_j depends on the columns already chosen
            }
            extend(span, &multiples[j], true, &mut next_span);
            extend(sums, &multiples[j], false, &mut next_sums);
            stack.push(j);
            self.dfs(multiples, index, depth, j + 1, (&next_span, &next_sums), stack, out);
            stack.pop();
        }
    }
}

fn circuits_dfs(
    columns: &[Vec<u8>],
    depth: usize,
    start: usize,
    span: &mut IncrementalSpan<'_>,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == depth {
        let after = stack.last().map_or(0, |&l| l + 1);
        for (j, col) in columns.iter().enumerate().skip(after) {
            if let Some(c) = span.express(col) {
                if c.iter().all(|&x| x != 0) {
                    let mut s = stack.clone();
                    s.push(j);
                    out.push(s);
                }
            }
        }
        return;
    }
    let remaining = depth - stack.len();
    for j in start..columns.len().saturating_sub(remaining) {
        if span.push(&columns[j]) {
            stack.push(j);
            circuits_dfs(columns, depth, j + 1, span, stack, out);
            stack.pop();
            span.pop();
        }
    }
}

/// Number of dual words represented by `supports` (each support carries the
/// `q − 1` nonzero multiples of one relation).
pub fn words_from_supports(supports: &[Vec<usize>], q: usize) -> u64 {
    supports.len() as u64 * (q as u64 - 1)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::code_core::duality::macwilliams;
    use crate::code_core::enumerate::{weight_distribution, EnumOptions};
    use crate::galois::FieldSpec;

    fn sample() -> LinearCode {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        // ternary [8,3] code with a few low-weight dual words
        LinearCode::new(
            f,
            8,
            vec![vec![1, 0, 0, 1, 2, 1, 0, 2], vec![0, 1, 0, 2, 2, 1, 1, 0], vec![0, 0, 1, 1, 1, 2, 2, 2]],
        )
        .unwrap()
    }

    /// The packed prime-field search and the general span search find the
    /// same circuits, including when a smaller `κ` than `d⊥` is requested.
    #[test]
    fn packed_search_matches_span_search() {
        let mut codes = vec![sample()];
        for params in ["family=bch2 q=3 m=3", "family=lrc1 q=3 m=4 m1=1 m2=1", "family=c4 p=5 e=1 s=2"] {
            codes.push(crate::families::build_family(&crate::families::FamilyParams::parse(params).unwrap()).unwrap());
        }
        for code in &codes {
            let columns: Vec<Vec<u8>> = (0..code.n()).map(|j| code.column(j)).collect();
            for kappa in 1..=5 {
                if binomial(code.n(), kappa - 1) > BigUint::from(200_000u32) {
                    continue; // the span search is too slow here to serve as a reference
                }
                let Some(packing) = PackedPrime::for_code(code, kappa - 1) else { continue };
                let mut packed = Vec::new();
                packing.circuits(&columns, kappa - 1, &mut packed);
                packed.sort_unstable();
                let mut general = Vec::new();
                let mut span = IncrementalSpan::new(code.gf());
                circuits_dfs(&columns, kappa - 1, 0, &mut span, &mut Vec::new(), &mut general);
                assert_eq!(packed, general, "n = {}, κ = {kappa}", code.n());
            }
        }
    }

    #[test]
    fn counts_match_macwilliams() {
        let code = sample();
        let dual = macwilliams(&weight_distribution(&code, &EnumOptions::default()).unwrap()).unwrap();
        let words = low_weight_dual_words(&code, 4, 1 << 20).unwrap();
        for w in 1..=4 {
            let got = words.get(&w).map_or(0, Vec::len);
            assert_eq!(BigUint::from(got), dual.a(w), "weight {w}");
        }
        for ws in words.values() {
            for x in ws {
                for b in code.basis() {
                    assert_eq!(code.gf().dot(x, b), 0);
                }
            }
        }
    }

    #[test]
    fn circuits_agree_with_subset_search() {
        let code = sample();
        let dual = macwilliams(&weight_distribution(&code, &EnumOptions::default()).unwrap()).unwrap();
        let d = dual.d_perp.unwrap();
        let supports = min_weight_dual_supports(&code, d, 1 << 20).unwrap();
        assert_eq!(BigUint::from(words_from_supports(&supports, 3)), dual.a(d));
    }

    #[test]
    fn full_space_has_no_dual_words() {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let code = LinearCode::full_space(f, 4).unwrap();
        assert!(low_weight_dual_words(&code, 4, 1 << 20).unwrap().is_empty());
    }

    #[test]
    fn budget() {
        assert!(low_weight_dual_words(&sample(), 8, 10).is_err());
    }
}
