//! Value counts behind the weight tables.
//!
//! For the trace families the weight of a codeword is governed by
//! `N(c) = #{t : tr(a·y1_t + b·y2_t) = c}`. Enumerating `N(c)` over every
//! coefficient choice yields a value distribution that is compared with its
//! closed form. The square-trace count `N(a) = #{b ∈ ⟨α²⟩ : tr(b) = a}` of
//! the locality-2 trace family is a single number with a Gauss-sum closed form.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{OrthoError, Result};
use crate::galois::{gauss_sum_quadratic, FieldSpec, SubfieldMap};

/// Work limit (trace evaluations) for one count.
pub const COUNTING_BUDGET: u64 = 1 << 27;

/// Which population is enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CountingSpec {
    /// `tr(a·g^t + b·α^{(p^k+1)t/2})` over `GF(p^m)`, `t ≤ p^m − 2`, with
    /// `g = −α` (`minus`) or `g = α`; population all `(a, b)`.
    CyclicPair { p: u64, m: u32, k: u32, minus: bool },
    /// `tr_{q^m/q}(a·α^t + b·α^{((Q−1)/2+1)t})`, `q = p^e`, `Q = q^m`;
    /// population all `(a, b)`.
    QuadraticPair { p: u64, e: u32, m: u32 },
    /// `tr_{q^m/q}(a·θ^t)` with `θ = α^{q+1}`, `m = 2s`,
    /// `t < (Q−1)/(q+1)`; population all `a`.
    Subgroup { p: u64, e: u32, s: u32 },
    /// `#{b ∈ ⟨α²⟩ : tr_{q^m/q^{m1}}(b) = a}`, `q = p^e`; population trivial.
    SquareTrace { p: u64, e: u32, m: u32, m1: u32 },
}

/// Result of [`count_trace_values`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueCount {
    pub spec: CountingSpec,
    /// Target value (element code of the alphabet field).
    pub c: u32,
    /// Enumerated distribution: value of `N(c)` → number of coefficient choices.
    pub enumerated: BTreeMap<u64, u64>,
    /// Closed form of the same distribution, when one is tabulated.
    pub closed_form: Option<BTreeMap<u64, u64>>,
}

impl ValueCount {
    /// Whether enumeration and closed form agree (`None` without a closed form).
    pub fn agrees(&self) -> Option<bool> {
        self.closed_form.as_ref().map(|cf| cf == &self.enumerated)
    }

    /// The single count for a trivial population.
    pub fn single(&self) -> Option<u64> {
        (self.enumerated.len() == 1 && self.enumerated.values().next() == Some(&1))
            .then(|| *self.enumerated.keys().next().unwrap())
    }
}

fn field(p: u64, d: u32) -> Result<Arc<FieldSpec>> {
    Ok(Arc::new(FieldSpec::new(p, d)?))
}

fn budget(work: u64) -> Result<()> {
    if work > COUNTING_BUDGET {
        return Err(OrthoError::BudgetExceeded {
            what: "value counting".into(),
            needed: work.to_string(),
            budget: COUNTING_BUDGET,
        });
    }
    Ok(())
}

/// Histogram of `N(c)` over all `(a, b)` for two slot sequences.
fn pair_histogram(map: &SubfieldMap, y1: &[u32], y2: &[u32], c: u32) -> Result<BTreeMap<u64, u64>> {
    let big = map.big();
    let order = big.order() as u64;
    budget(order * order * y1.len() as u64)?;
    // traces are additive: tabulate tr(a·y1_t) and tr(b·y2_t) once
    let table = |ys: &[u32]| -> Vec<Vec<u32>> {
        big.elements().map(|a| ys.iter().map(|&y| map.trace(big.mul(a, y))).collect()).collect()
    };
    let (ta, tb) = (table(y1), table(y2));
    let target = map.from_small(c);
    let mut hist = BTreeMap::new();
    for ra in &ta {
        for rb in &tb {
            let n = ra.iter().zip(rb).filter(|(&u, &v)| big.add(u, v) == target).count() as u64;
            *hist.entry(n).or_insert(0) += 1;
        }
    }
    Ok(hist)
}

fn to_u64(x: &BigInt) -> Option<u64> {
    x.to_u64()
}

/// Build a closed-form histogram from `(value, frequency)` terms, merging
/// equal values; `None` if any term is negative or non-integral.
fn histogram(terms: Vec<(BigInt, BigInt, BigInt)>) -> Option<BTreeMap<u64, u64>> {
    let mut out = BTreeMap::new();
    for (value, num, den) in terms {
        let (f, r) = num.div_rem(&den);
        if !r.is_zero() {
            return None;
        }
        let f = to_u64(&f)?;
        if f > 0 {
            *out.entry(to_u64(&value)?).or_insert(0) += f;
        }
    }
    Some(out)
}

fn pw(b: u64, e: i64) -> BigInt {
    BigInt::from(b).pow(e as u32)
}

/// Enumerate the value distribution of `N(c)` and compare with its closed form.
pub fn count_trace_values(spec: CountingSpec, c: u32) -> Result<ValueCount> {
    let one = BigInt::one;
    let (enumerated, closed_form) = match spec {
        CountingSpec::CyclicPair { p, m, k, minus } => {
            let big = field(p, m)?;
            let map = SubfieldMap::new(big.clone(), 1)?;
            if c as u64 >= p {
                return Err(OrthoError::NotInSubfield(c));
            }
            let n = big.order() as i64 - 1;
            let g = if minus { big.neg(big.alpha_pow(1)) } else { big.alpha_pow(1) };
            let h = p.pow(k).div_ceil(2) as i64;
            let y1: Vec<u32> = (0..n).map(|t| big.pow(g, t as u64)).collect();
            let y2: Vec<u32> = (0..n).map(|t| big.alpha_pow(h * t)).collect();
            let hist = pair_histogram(&map, &y1, &y2, c)?;
            let e = (m as u64).gcd(&(k as u64)) as i64;
            let mi = m as i64;
            let closed = (c != 0 && (m as i64 - e) % 2 == 0).then(|| {
                let big_p: BigInt = pw(p, mi);
                let p1: BigInt = pw(p, mi - 1);
                let ee: BigInt = pw(p, (mi + e - 2) / 2);
                let a: BigInt = pw(p, mi - e);
                let b: BigInt = pw(p, (mi - e) / 2);
                let pm1: BigInt = &big_p - 1;
                let two = BigInt::from(2);
                let mut terms = vec![
                    (BigInt::zero(), one(), one()),
                    (&p1 + &ee, (&a - &b) * &pm1, two.clone()),
                    (&p1 - &ee, (&a + &b) * &pm1, two.clone()),
                ];
                if !minus || e % 2 == 0 || p % 4 == 1 {
                    terms.push((p1.clone(), (&big_p - &a + 1) * &pm1, one()));
                } else {
                    let r_den: BigInt = pw(p, 2 * e) - 1;
                    let a1: BigInt = &a - 1;
                    let (r, rem) = a1.div_rem(&r_den);
                    if !rem.is_zero() {
                        return None;
                    }
                    let x: BigInt = &big_p - &a + 1;
                    let near: BigInt = pw(p, (mi - 1) / 2);
                    let far: BigInt = pw(p, (mi + 2 * e - 1) / 2);
                    for v in [&p1 + &near, &p1 - &near] {
                        terms.push((v, &pm1 * (&x - &r), two.clone()));
                    }
                    for v in [&p1 + &far, &p1 - &far] {
                        terms.push((v, &pm1 * &r, two.clone()));
                    }
                }
                histogram(terms)
            });
            (hist, closed.flatten())
        }
        CountingSpec::QuadraticPair { p, e, m } => {
            let big = field(p, e * m)?;
            let map = SubfieldMap::new(big.clone(), e)?;
            if c >= map.small().order() {
                return Err(OrthoError::NotInSubfield(c));
            }
            let n = big.order() as i64 - 1;
            let y1: Vec<u32> = (0..n).map(|t| big.alpha_pow(t)).collect();
            let y2: Vec<u32> = (0..n).map(|t| big.alpha_pow((n / 2 + 1) * t)).collect();
            let hist = pair_histogram(&map, &y1, &y2, c)?;
            let q = p.pow(e);
            let mi = m as i64;
            let closed = (c != 0).then(|| {
                let big_q: BigInt = pw(q, mi);
                let q1: BigInt = pw(q, mi - 1);
                let y: BigInt = if m % 2 == 1 { pw(q, (mi - 1) / 2) } else { pw(q, (mi - 2) / 2) };
                let sq: BigInt = (&big_q - 1) * (&big_q - 1);
                let (two, four) = (BigInt::from(2), BigInt::from(4));
                histogram(vec![
                    (BigInt::zero(), one(), one()),
                    (q1.clone(), sq.clone(), two.clone()),
                    (&q1 + &y, sq.clone(), four.clone()),
                    (&q1 - &y, sq, four),
                    ((&q1 + &y) / 2, &big_q - 1, one()),
                    ((&q1 - &y) / 2, &big_q - 1, one()),
                ])
            });
            (hist, closed.flatten())
        }
        CountingSpec::Subgroup { p, e, s } => {
            let m = 2 * s;
            let big = field(p, e * m)?;
            let map = SubfieldMap::new(big.clone(), e)?;
            if c >= map.small().order() {
                return Err(OrthoError::NotInSubfield(c));
            }
            let q = p.pow(e);
            let nn = q + 1;
            let len = (big.order() as u64 - 1) / nn;
            budget(big.order() as u64 * len)?;
            let theta: Vec<u32> = (0..len as i64).map(|t| big.alpha_pow(nn as i64 * t)).collect();
            let target = map.from_small(c);
            let mut hist = BTreeMap::new();
            for a in big.elements() {
                let n = theta.iter().filter(|&&y| map.trace(big.mul(a, y)) == target).count() as u64;
                *hist.entry(n).or_insert(0) += 1;
            }
            let mi = m as i64;
            let big_q: BigInt = pw(q, mi);
            let q1: BigInt = pw(q, mi - 1);
            let zz: BigInt = pw(q, (mi - 2) / 2);
            let nb: BigInt = BigInt::from(nn);
            let qm1: BigInt = &big_q - 1;
            let sign = if s % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            let qz = BigInt::from(q);
            let terms = if c == 0 {
                vec![
                    (&qm1 / &nb, one(), one()),
                    ((&q1 - 1 + &sign * (&qz - 1) * (&nb - 1) * &zz) / &nb, qm1.clone(), nb.clone()),
                    ((&q1 - 1 - &sign * (&qz - 1) * &zz) / &nb, &qm1 * (&nb - 1), nb.clone()),
                ]
            } else {
                vec![
                    (BigInt::zero(), one(), one()),
                    ((&q1 - &sign * (&nb - 1) * &zz) / &nb, qm1.clone(), nb.clone()),
                    ((&q1 + &sign * &zz) / &nb, &qm1 * (&nb - 1), nb.clone()),
                ]
            };
            (hist, histogram(terms))
        }
        CountingSpec::SquareTrace { p, e, m, m1 } => {
            if m1 == 0 || m % m1 != 0 {
                return Err(OrthoError::NotASubfield { sub: m1, degree: m });
            }
            let big = field(p, e * m)?;
            let map = SubfieldMap::new(big.clone(), e * m1)?;
            let small = map.small().clone();
            if c >= small.order() {
                return Err(OrthoError::NotInSubfield(c));
            }
            budget(big.order() as u64)?;
            let target = map.from_small(c);
            let count =
                (0..(big.order() as i64 - 1) / 2).filter(|&i| map.trace(big.alpha_pow(2 * i)) == target).count() as u64;
            let q = p.pow(e);
            let big_q: BigInt = pw(q, (m) as i64);
            let qm1: BigInt = pw(q, m1 as i64);
            let g = gauss_sum_quadratic(&big)?;
            let closed = if (m / m1) % 2 == 1 {
                if c == 0 {
                    Some((pw(q, (m - m1) as i64) - 1) / 2)
                } else {
                    let g1 = gauss_sum_quadratic(&small)?;
                    let minus_c = small.neg(c);
                    let eta = small.quadratic_character(minus_c)?;
                    g.mul(&g1).signed(eta).as_integer().and_then(|gg| {
                        let (v, r) = (&big_q + gg).div_rem(&(2 * &qm1));
                        r.is_zero().then_some(v)
                    })
                }
            } else {
                g.as_integer().and_then(|g| {
                    let num = if c == 0 { &big_q - &qm1 + (&qm1 - 1) * g } else { &big_q - g };
                    let (v, r) = num.div_rem(&(2 * &qm1));
                    r.is_zero().then_some(v)
                })
            };
            let closed = closed.and_then(|v| to_u64(&v)).map(|v| BTreeMap::from([(v, 1)]));
            (BTreeMap::from([(count, 1)]), closed)
        }
    };
    Ok(ValueCount { spec, c, enumerated, closed_form })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_trace_zero_target() {
        let v = count_trace_values(CountingSpec::SquareTrace { p: 3, e: 1, m: 3, m1: 1 }, 0).unwrap();
        assert_eq!(v.single(), Some(4));
        assert_eq!(v.agrees(), Some(true));
    }

    #[test]
    fn square_trace_partition() {
        for (m, m1) in [(3, 1), (4, 1), (4, 2), (6, 2), (6, 3)] {
            let spec = CountingSpec::SquareTrace { p: 3, e: 1, m, m1 };
            let qm1 = 3u32.pow(m1);
            let mut total = 0;
            for c in 0..qm1 {
                let v = count_trace_values(spec, c).unwrap();
                assert_eq!(v.agrees(), Some(true), "m={m} m1={m1} c={c}: {v:?}");
                total += v.single().unwrap();
            }
            assert_eq!(total, (3u64.pow(m) - 1) / 2);
        }
    }

    #[test]
    fn subgroup_counts_both_parities() {
        for s in [2, 3] {
            for c in [0, 1] {
                let v = count_trace_values(CountingSpec::Subgroup { p: 3, e: 1, s }, c).unwrap();
                assert_eq!(v.agrees(), Some(true), "s={s} c={c}: {v:?}");
            }
        }
    }

    #[test]
    fn pair_counts() {
        for spec in [
            CountingSpec::CyclicPair { p: 3, m: 3, k: 1, minus: true },
            CountingSpec::CyclicPair { p: 3, m: 3, k: 2, minus: false },
            CountingSpec::QuadraticPair { p: 3, e: 1, m: 3 },
            CountingSpec::QuadraticPair { p: 3, e: 1, m: 4 },
        ] {
            let v = count_trace_values(spec, 1).unwrap();
            assert_eq!(v.agrees(), Some(true), "{spec:?}: {v:?}");
        }
    }
}
