//! Closed-form predictions: parameters, weight tables, dual coefficients,
//! designs and locality of every family, evaluated exactly in big integers.
//!
//! Each table is evaluated row by row (raw rows are kept, in table order, for
//! spot checks); rows sharing a weight are merged into the expected
//! distribution. Every division is exact-checked, every weight must be an
//! integer in `[0, n]`, and the frequencies must total `q^k` — a violation is
//! an error, never a rounding.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::code_core::weights::{big_count_map, WeightDistribution};
use crate::error::{OrthoError, Result};
use crate::families::build::bent_function;
use crate::families::params::{Family, FamilyParams};
use crate::galois::rf_membership;

/// One evaluated table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub weight: usize,
    #[serde(with = "crate::code_core::weights::big_uint_string")]
    pub frequency: BigUint,
}

/// Claimed facts about the dual code.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualFacts {
    /// Claimed minimum distance of `C⊥`.
    pub d_perp: Option<usize>,
    /// Claimed low-weight coefficients `A⊥_i` (zeros below `d⊥` included).
    #[serde(with = "big_count_map")]
    pub coefficients: BTreeMap<usize, BigUint>,
}

/// A claimed support design `t-(n, κ, λ)` held by the code or its dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignClaim {
    /// Blocks are supports of dual codewords.
    pub in_dual: bool,
    pub t: usize,
    pub n: usize,
    pub kappa: usize,
    #[serde(with = "crate::code_core::weights::big_uint_string")]
    pub lambda: BigUint,
}

/// Everything predicted about a family instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub params: FamilyParams,
    /// Which parity/congruence case of the family applies.
    pub case: String,
    pub n: usize,
    pub k: usize,
    pub q: u64,
    /// Minimum distance read off the expected distribution (or the closed form).
    pub d: Option<usize>,
    /// Minimum distance as stated alongside the table, when it differs from
    /// the table's own smallest weight (recorded, not enforced).
    pub stated_d: Option<usize>,
    /// Expected distribution (rows with equal weight merged).
    pub distribution: Option<WeightDistribution>,
    /// Raw table rows, in table order.
    pub rows: Vec<TableRow>,
    pub dual: DualFacts,
    /// Claimed divisibility (every weight a multiple of this).
    pub divisible_by: Option<u64>,
    pub self_orthogonal: Option<bool>,
    pub contains_all_ones: Option<bool>,
    pub locality: Option<usize>,
    pub designs: Vec<DesignClaim>,
    pub notes: Vec<String>,
}

impl Prediction {
    /// Frequencies of raw rows with the given weight (before merging).
    pub fn raw_frequencies(&self, weight: usize) -> Vec<BigUint> {
        self.rows.iter().filter(|r| r.weight == weight).map(|r| r.frequency.clone()).collect()
    }
}

// ---------------------------------------------------------------------------
// exact arithmetic helpers

type Z = BigInt;

fn z(x: u64) -> Z {
    Z::from(x)
}

fn pw(b: u64, e: i64) -> Result<Z> {
    if e < 0 {
        return Err(OrthoError::NoPrediction(format!("negative exponent {b}^{e}")));
    }
    Ok(Z::from(b).pow(e as u32))
}

/// `(−1)^l`.
fn sgn(l: &Z) -> Z {
    if l.is_even() {
        Z::one()
    } else {
        -Z::one()
    }
}

/// Exact quotient, or an error naming the non-integral term.
fn ex(num: Z, den: Z, what: &str) -> Result<Z> {
    let (quo, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(OrthoError::InconsistentDistribution(format!("{what}: {num}/{den} is not an integer")));
    }
    Ok(quo)
}

fn half(x: i64, what: &str) -> Result<i64> {
    if x % 2 != 0 {
        return Err(OrthoError::NoPrediction(format!("{what}: exponent {x}/2 is not an integer")));
    }
    Ok(x / 2)
}

fn to_usize(x: &Z, what: &str) -> Result<usize> {
    x.to_usize().ok_or_else(|| OrthoError::InconsistentDistribution(format!("{what}: {x} is not a valid weight")))
}

fn to_uint(x: &Z, what: &str) -> Result<BigUint> {
    x.to_biguint().ok_or_else(|| OrthoError::InconsistentDistribution(format!("{what}: negative value {x}")))
}

/// Accumulates table rows and finishes them into a [`Prediction`].
struct Table {
    rows: Vec<(Z, Z)>,
}

impl Table {
    fn new() -> Self {
        Table { rows: Vec::new() }
    }
    fn row(&mut self, w: Z, f: Z) {
        self.rows.push((w, f));
    }
}

struct Skeleton {
    case: String,
    n: usize,
    k: usize,
    q: u64,
    stated_d: Option<Z>,
    table: Option<Table>,
    dual: DualFacts,
    divisible_by: Option<u64>,
    self_orthogonal: Option<bool>,
    locality: Option<usize>,
    designs: Vec<(bool, usize, usize, Z)>,
    notes: Vec<String>,
    /// Fallback minimum distance when there is no table.
    closed_d: Option<usize>,
}

impl Skeleton {
    fn new(case: &str, n: Z, k: usize, q: u64) -> Result<Self> {
        Ok(Skeleton {
            case: case.to_string(),
            n: to_usize(&n, "length")?,
            k,
            q,
            stated_d: None,
            table: None,
            dual: DualFacts::default(),
            divisible_by: None,
            self_orthogonal: None,
            locality: None,
            designs: Vec::new(),
            notes: Vec::new(),
            closed_d: None,
        })
    }

    /// Claim `d⊥` and `A⊥_{d⊥}`, with zeros below.
    fn dual_min(&mut self, d_perp: usize, a: Z) -> Result<()> {
        self.dual.d_perp = Some(d_perp);
        for i in 1..d_perp {
            self.dual.coefficients.insert(i, BigUint::zero());
        }
        self.dual.coefficients.insert(d_perp, to_uint(&a, "dual coefficient")?);
        Ok(())
    }

    fn finish(self, params: &FamilyParams) -> Result<Prediction> {
        let (n, k, q) = (self.n, self.k, self.q);
        let mut rows = Vec::new();
        let mut distribution = None;
        if let Some(table) = self.table {
            let mut merged: BTreeMap<usize, BigUint> = BTreeMap::new();
            merged.insert(0, BigUint::one());
            for (w, f) in &table.rows {
                let weight = to_usize(w, "weight")?;
                if weight > n || weight == 0 {
                    return Err(OrthoError::InconsistentDistribution(format!("weight {weight} outside [1, {n}]")));
                }
                let frequency = to_uint(f, "frequency")?;
                *merged.entry(weight).or_default() += &frequency;
                rows.push(TableRow { weight, frequency });
            }
            merged.retain(|_, c| !c.is_zero());
            let wd = WeightDistribution::from_pairs(n, k, q, merged);
            wd.validate()
                .map_err(|e| OrthoError::InconsistentDistribution(format!("{} ({}): {e}", params, self.case)))?;
            distribution = Some(wd);
        }
        let d = distribution.as_ref().and_then(|wd| wd.min_distance()).or(self.closed_d);
        let stated_d = match self.stated_d {
            Some(s) => {
                let s = to_usize(&s, "stated minimum distance")?;
                (Some(s) != d).then_some(s)
            }
            None => None,
        };
        let mut notes = self.notes;
        if let (Some(s), Some(d)) = (stated_d, d) {
            notes.push(format!("stated minimum distance {s} differs from the table's smallest weight {d}"));
        }
        let designs = self
            .designs
            .into_iter()
            .map(|(in_dual, t, kappa, lambda)| {
                Ok(DesignClaim { in_dual, t, n, kappa, lambda: to_uint(&lambda, "design λ")? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Prediction {
            params: params.clone(),
            case: self.case,
            n,
            k,
            q,
            d,
            stated_d,
            distribution,
            rows,
            dual: self.dual,
            divisible_by: self.divisible_by,
            self_orthogonal: self.self_orthogonal,
            contains_all_ones: Some(true),
            locality: self.locality,
            designs,
            notes,
        })
    }
}

/// `λ` of the 1-design formed by the weight-`κ` supports:
/// `λ·n = κ·A_κ/(q − 1)`.
fn one_design_lambda(n: usize, kappa: usize, a_kappa: &Z, q: u64) -> Result<Z> {
    let blocks = ex(a_kappa.clone(), z(q - 1), "block count")?;
    ex(blocks * Z::from(kappa), Z::from(n), "1-design λ")
}

fn weight_count(table: &Table, w: &Z) -> Z {
    table.rows.iter().filter(|(x, _)| x == w).map(|(_, f)| f.clone()).sum()
}

// ---------------------------------------------------------------------------
// families

/// Predict parameters and distribution of a family instance.
pub fn predict_family(params: &FamilyParams) -> Result<Prediction> {
    let family = params.resolve()?;
    let sk = match &family {
        Family::C1 { p, m, e, .. } => cyclic_pair(*p, *m, *e, true)?,
        Family::C2 { p, m, e, .. } => cyclic_pair(*p, *m, *e, false)?,
        Family::C3 { p, e, m } => c3(*p, *e, *m)?,
        Family::C4 { p, e, s } => c4(*p, *e, *s)?,
        Family::Bch { q, m, delta: 2 } => bch2(*q, *m)?,
        Family::Bch { q, m, .. } => bch3(*q, *m)?,
        Family::Grs { p, e, k, n } => grs(*p, *e, *k, *n)?,
        Family::Grm { p, e, m, rho } => grm(*p, *e, *m, *rho)?,
        Family::Lrc1 { p, e, m, m1, m2 } => lrc1(*p, *e, *m, *m1, *m2)?,
        Family::Lrc2 { p, m, function } => {
            let f = bent_function(*p, *m, function.as_deref())?;
            let profile = rf_membership(&f)
                .map_err(|r| OrthoError::NoPrediction(format!("{params}: function is not weakly regular bent: {r}")))?;
            lrc2(*p, *m, profile.epsilon)?
        }
        Family::Example { p, e, m } => example(*p, *e, *m)?,
    };
    sk.finish(params)
}

/// The two-slot cyclic families with `e = gcd(m, k)`: slot `(−α)^t` (first)
/// or `α^t` (second), plus `α^{(p^k+1)t/2}`.
fn cyclic_pair(p: u64, m: u32, e: u32, minus: bool) -> Result<Skeleton> {
    let mi = m as i64;
    let ei = e as i64;
    let big_p = pw(p, mi)?;
    let p1: Z = pw(p, mi - 1)?;
    let ee = pw(p, half(mi + ei - 2, "E")?)?;
    let a = pw(p, mi - ei)?;
    let b = pw(p, half(mi - ei, "B")?)?;
    let pz = z(p);
    let base: Z = &big_p - &p1;
    let general = !minus || e.is_multiple_of(2) || p % 4 == 1;
    let case = match (minus, general) {
        (false, _) => "c2/k-over-e-even",
        (true, true) => "c1/e-even-or-p-1-mod-4",
        (true, false) => "c1/e-odd-p-3-mod-4",
    };
    let mut sk = Skeleton::new(case, big_p.clone(), 2 * m as usize + 1, p)?;
    let mut t = Table::new();
    let pm1: Z = &big_p - 1;
    t.row(&base - (&pz - 1) * &ee, ex((&a + &b) * &pm1, z(2), "row 1")?);
    t.row(&base - &ee, ex((&a - &b) * &pm1 * (&pz - 1), z(2), "row 2")?);
    if general {
        t.row(base.clone(), &pz * (&big_p - &a + 1) * &pm1);
    } else {
        let r = ex(&a - 1, pw(p, 2 * ei)? - 1, "(p^(m-e)-1)/(p^(2e)-1)")?;
        let x = &big_p - &a + 1;
        let far = pw(p, half(mi + 2 * ei - 1, "far offset")?)?;
        let near = pw(p, half(mi - 1, "near offset")?)?;
        let f_far = ex(&pm1 * &r * (&pz - 1), z(2), "far rows")?;
        let f_near = ex(&pm1 * (&x - &r) * (&pz - 1), z(2), "near rows")?;
        t.row(&base - &far, f_far.clone());
        t.row(&base - &near, f_near.clone());
        t.row(base.clone(), &x * &pm1);
        t.row(&base + &near, f_near);
        t.row(&base + &far, f_far);
    }
    t.row(&base + &ee, ex((&a + &b) * &pm1 * (&pz - 1), z(2), "row 4")?);
    t.row(&base + (&pz - 1) * &ee, ex((&a - &b) * &pm1, z(2), "row 5")?);
    t.row(big_p.clone(), &pz - 1);
    sk.table = Some(t);
    sk.stated_d = Some(&base - (&pz - 1) * &ee);
    sk.divisible_by = Some(p);
    sk.self_orthogonal = Some(true);
    if general {
        let a3 = ex(pw(p, ei)? * &pm1 * (&pz * &pz - 3 * &pz + 2), z(6), "A⊥_3")?;
        sk.dual_min(3, a3)?;
    } else {
        sk.notes.push("no closed form for the dual coefficients in this case".into());
    }
    Ok(sk)
}

fn c3(p: u64, e: u32, m: u32) -> Result<Skeleton> {
    let q = p.pow(e);
    let qz = z(q);
    let mi = m as i64;
    let big_q = pw(q, mi)?;
    let q1 = pw(q, mi - 1)?;
    let qm1: Z = &big_q - 1;
    let odd = m % 2 == 1;
    let mut sk = Skeleton::new(if odd { "c3/m-odd" } else { "c3/m-even" }, big_q.clone(), 2 * m as usize + 1, q)?;
    let mut t = Table::new();
    let sq: Z = &qm1 * &qm1;
    if odd {
        let y = pw(q, (mi - 1) / 2)?;
        t.row(&big_q - &q1, ex(&sq * (&qz + 1), z(2), "middle row")?);
        let side: Z = ex(&sq * (&qz - 1), z(4), "side rows")?;
        t.row(&big_q - &q1 - &y, side.clone());
        t.row(&big_q - &q1 + &y, side);
        t.row(&big_q - ex(&q1 - &y, z(2), "weight")?, &qm1 * (&qz - 1));
        t.row(&big_q - ex(&q1 + &y, z(2), "weight")?, &qm1 * (&qz - 1));
        let dmin: Z = ex(&q1 * (&qz - 1), z(2), "weight")?;
        t.row(dmin.clone(), 2 * &qm1);
        sk.stated_d = Some(dmin);
        sk.dual_min(3, ex(&qm1 * (&qz - 1) * (&big_q * (&qz - 2) - 3), z(24), "A⊥_3")?)?;
    } else {
        let zz = pw(q, (mi - 2) / 2)?;
        let x = pw(q, mi / 2)?;
        t.row(&big_q - &q1, ex(&qz * &sq, z(2), "middle row")?);
        let side: Z = ex(&sq * (&qz - 1), z(4), "side rows")?;
        t.row(&big_q - &q1 - &zz, side.clone());
        t.row(&big_q - &q1 + &zz, side);
        t.row(&big_q - ex(&q1 - &zz, z(2), "weight")?, &qm1 * (&qz - 1));
        t.row(&big_q - ex(&q1 + &zz, z(2), "weight")?, &qm1 * (&qz - 1));
        let quarter: Z = ex(sq.clone(), z(4), "quarter rows")?;
        t.row(&zz * (&qz - 1) * (&x + 1), quarter.clone());
        t.row(&zz * (&qz - 1) * (&x - 1), quarter);
        t.row(ex(&zz * (&qz - 1) * (&x + 1), z(2), "weight")?, qm1.clone());
        let dmin: Z = ex(&zz * (&qz - 1) * (&x - 1), z(2), "weight")?;
        t.row(dmin.clone(), qm1.clone());
        sk.stated_d = Some(dmin);
        sk.dual_min(3, ex(&qm1 * (&qz - 1) * (&qz - 2) * (&big_q + 3), z(24), "A⊥_3")?)?;
    }
    t.row(big_q.clone(), &qz - 1);
    sk.table = Some(t);
    sk.divisible_by = Some(p);
    sk.self_orthogonal = Some(true);
    Ok(sk)
}

fn c4(p: u64, e: u32, s: u32) -> Result<Skeleton> {
    let q = p.pow(e);
    let qz = z(q);
    let m = 2 * s as i64;
    let big_q = pw(q, m)?;
    let q1 = pw(q, m - 1)?;
    let nn = z(q + 1);
    let zz = pw(q, (m - 2) / 2)?;
    let qm1: Z = &big_q - 1;
    let n: Z = ex(qm1.clone(), nn.clone(), "length")? + 1;
    let odd = s % 2 == 1;
    let mut sk = Skeleton::new(if odd { "c4/s-odd" } else { "c4/s-even" }, n.clone(), m as usize + 1, q)?;
    let mut t = Table::new();
    let f1 = ex(qm1.clone(), nn.clone(), "frequency")?;
    let f2 = ex(&qm1 * (&nn - 1), nn.clone(), "frequency")?;
    let f3 = ex(&qm1 * (&qz - 1), nn.clone(), "frequency")?;
    let f4 = ex(&qm1 * (&qz - 1) * (&nn - 1), nn.clone(), "frequency")?;
    let sign = if odd { -Z::one() } else { Z::one() };
    let w1 = ex((&qz - 1) * &q1 + &sign * (&qz - 1) * (&nn - 1) * &zz, nn.clone(), "weight")?;
    let w2 = ex((&qz - 1) * &q1 - &sign * (&qz - 1) * &zz, nn.clone(), "weight")?;
    let (w3, w4) = if odd {
        (
            ex(&big_q - &q1 + (&nn - 1) * (&zz + 1), nn.clone(), "weight")?,
            ex(&big_q - &q1 - &zz + &nn - 1, nn.clone(), "weight")?,
        )
    } else {
        (
            ex(&big_q - &q1 - (&nn - 1) * (&zz - 1), nn.clone(), "weight")?,
            ex(&big_q - &q1 + &zz + &nn - 1, nn.clone(), "weight")?,
        )
    };
    sk.stated_d = Some(if odd { w1.clone() } else { w3.clone() });
    t.row(w1, f1);
    t.row(w2, f2);
    t.row(w3, f3);
    t.row(w4, f4);
    t.row(n, &qz - 1);
    sk.table = Some(t);
    let (plus, minus) = if odd { (m + 4, m + 2) } else { (m + 2, m + 4) };
    let inner: Z = &big_q + pw(q, plus / 2)? + 2 * &qz * &qz + &qz - pw(q, minus / 2)?;
    let a3 = ex(
        &qm1 * (&qz * &qz - 3 * &qz + 2) * inner,
        {
            let np: Z = &qz + 1;
            z(6) * np.pow(3u32)
        },
        "A⊥_3",
    )?;
    sk.dual_min(3, a3)?;
    sk.divisible_by = Some(p);
    sk.self_orthogonal = Some(true);
    Ok(sk)
}

fn bch2(q: u64, m: u32) -> Result<Skeleton> {
    let qz = z(q);
    let mi = m as i64;
    let big_q = pw(q, mi)?;
    let q1 = pw(q, mi - 1)?;
    let qm1: Z = &big_q - 1;
    let odd = m % 2 == 1;
    let k = if odd { 2 * m + 1 } else { 3 * m / 2 + 1 } as usize;
    let n = to_usize(&big_q, "length")?;
    let mut sk = Skeleton::new(if odd { "bch2/m-odd" } else { "bch2/m-even" }, big_q.clone(), k, q)?;
    let mut t = Table::new();
    let mid: Z = (&qz - 1) * &q1;
    let a4_generic = ex(&big_q * (&qz - 3) * (&qz - 1) * (&qz - 2) * &qm1, z(24), "A⊥_4")?;
    if odd {
        let y = pw(q, (mi - 1) / 2)?;
        let side: Z = ex(&big_q * &qm1 * (&qz - 1), z(2), "side rows")?;
        t.row(&mid - &y, side.clone());
        t.row(mid.clone(), (&big_q + &qz) * &qm1);
        t.row(&mid + &y, side);
        t.row(big_q.clone(), &qz - 1);
        let d = to_usize(&(&mid - &y), "d")?;
        if q == 3 {
            let a5 = ex(&big_q * &qm1 * (pw(3, mi - 1)? - 1), z(4), "A⊥_5")?;
            sk.dual_min(5, a5)?;
            let kappa = Z::from(d);
            sk.designs.push((false, 2, d, ex(&kappa * (&kappa - 1), z(2), "λ")?));
            sk.designs.push((true, 2, 5, ex(5 * (pw(3, mi - 1)? - 1), z(2), "λ")?));
            sk.locality = Some(4);
        } else {
            sk.dual_min(4, a4_generic.clone())?;
            let lam = one_design_lambda(n, d, &weight_count(&t, &(&mid - &y)), q)?;
            sk.designs.push((false, 1, d, lam));
            sk.designs.push((true, 1, 4, one_design_lambda(n, 4, &a4_generic, q)?));
            sk.locality = Some(3);
        }
    } else {
        let zz = pw(q, (mi - 2) / 2)?;
        let x = pw(q, mi / 2)?;
        t.row(&mid - &zz, &big_q * (&x - 1) * (&qz - 1));
        t.row(mid.clone(), &qz * &qm1);
        t.row((&qz - 1) * (&q1 + &zz), pw(q, 3 * mi / 2)? - &big_q);
        t.row(big_q.clone(), &qz - 1);
        let a4 = ex(&big_q * (&qz - 1) * &qm1 * ((&x + 1) * (&qz * &qz - 3 * &qz + 3) - 3 * &qz + 3), z(24), "A⊥_4")?;
        sk.dual_min(4, a4.clone())?;
        let d = to_usize(&(&mid - &zz), "d")?;
        sk.designs.push((false, 1, d, one_design_lambda(n, d, &weight_count(&t, &(&mid - &zz)), q)?));
        sk.designs.push((true, 1, 4, one_design_lambda(n, 4, &a4, q)?));
        sk.locality = Some(3);
    }
    sk.table = Some(t);
    sk.divisible_by = Some(q);
    sk.self_orthogonal = Some(true);
    Ok(sk)
}

fn bch3(q: u64, m: u32) -> Result<Skeleton> {
    let qz = z(q);
    let mi = m as i64;
    let big_q = pw(q, mi)?;
    let q1 = pw(q, mi - 1)?;
    let qm1: Z = &big_q - 1;
    let odd = m % 2 == 1;
    let k = if odd { 3 * m + 1 } else { 5 * m / 2 + 1 } as usize;
    let mut sk = Skeleton::new(if odd { "bch3/m-odd" } else { "bch3/m-even" }, big_q.clone(), k, q)?;
    let mut t = Table::new();
    let mid: Z = (&qz - 1) * &q1;
    let two_q1: Z = 2 * (&qz + 1);
    if odd {
        let y = pw(q, (mi - 1) / 2)?;
        let yy = pw(q, (mi + 1) / 2)?;
        let y3 = pw(q, (mi + 3) / 2)?;
        let outer: Z = ex(pw(q, mi - 2)? * (&q1 - 1) * &qm1, two_q1.clone(), "u1")?;
        let poly: Z = pw(q, mi + 3)? - pw(q, mi + 2)? - &q1 + pw(q, 3)?;
        t.row(&mid - &yy, outer.clone());
        t.row((&qz - 1) * (&q1 - &y), ex(&q1 * &qm1 * (&q1 + &y), z(2), "u2")?);
        t.row(&mid - &y, ex(&q1 * &qm1 * (&poly - &y3 + &y), two_q1.clone(), "u3")?);
        let u4: Z = &qz
            * &qm1
            * ((&qz - 1) * (2 * pw(q, 2 * mi - 2)? + pw(q, 2 * mi - 4)? + pw(q, mi - 2)?) + pw(q, mi - 3)? + 1);
        t.row(mid.clone(), u4);
        t.row(&mid + &y, ex(&q1 * &qm1 * (&poly + &y3 - &y), two_q1.clone(), "u5")?);
        t.row((&qz - 1) * (&q1 + &y), ex(&q1 * &qm1 * (&q1 - &y), z(2), "u6")?);
        t.row(&mid + &yy, outer);
    } else {
        let x = pw(q, mi / 2)?;
        let x1 = pw(q, mi / 2 - 1)?;
        let x2 = pw(q, mi / 2 - 2)?;
        t.row(&mid - &x, ex(&x2 * &qm1 * (pw(q, mi + 2)? - &big_q + 2 * &q1 - 2 * &x), two_q1.clone(), "row 1")?);
        t.row((&qz - 1) * (&q1 - &x1), ex(pw(q, mi + 1)? * (&x + 1) * &qm1, two_q1.clone(), "row 2")?);
        let inner: Z = pw(q, mi + 1)? - 2 * &big_q + &qz;
        t.row(&mid - &x1, ex(&big_q * &inner * (&x - 1), z(2), "row 3")?);
        let e3 = 3 * mi / 2;
        let u4: Z = &qz * &qm1 * (1 + pw(q, e3 - 1)? - pw(q, e3 - 2)? + 2 * pw(q, e3 - 3)? - pw(q, mi - 2)?);
        t.row(mid.clone(), u4);
        t.row(&mid + &x1, ex(pw(q, mi + 1)? * (&qz - 1) * (&x + 1) * &qm1, two_q1.clone(), "row 5")?);
        t.row((&qz - 1) * (&q1 + &x1), ex(&big_q * &inner * (&x - 1), 2 * (&qz - 1), "row 6")?);
        t.row(&mid + &x, ex(pw(q, e3 - 2)? * &qm1 * (&qz - 1), z(2), "row 7")?);
        t.row((&qz - 1) * (&q1 + &x), ex(pw(q, mi - 2)? * &qm1 * (&x1 - 1), &qz * &qz - 1, "row 8")?);
        sk.notes.push(
            "frequency of weight (q−1)q^(m−1) uses coefficient 2 on q^(3m/2−3); coefficient 1 does not total q^k"
                .into(),
        );
    }
    t.row(big_q.clone(), &qz - 1);
    sk.table = Some(t);
    if q == 3 {
        let a6 = if odd {
            ex(pw(3, mi - 1)? * &qm1 * (pw(3, mi - 1)? - 1), z(2), "A⊥_6")?
        } else {
            let inner: Z = 11 * pw(3, 3 * mi / 2 - 1)? + 11 * pw(3, mi - 1)? + 7 - 11 * pw(3, (mi + 2) / 2)?;
            ex(pw(3, mi - 1)? * &qm1 * inner, z(40), "A⊥_6")?
        };
        sk.dual_min(6, a6)?;
    } else {
        sk.dual_min(4, ex(&big_q * (&qz - 3) * (&qz - 1) * (&qz - 2) * &qm1, z(24), "A⊥_4")?)?;
    }
    sk.divisible_by = Some(q);
    sk.self_orthogonal = Some(true);
    Ok(sk)
}

/// MDS weight distribution `A_w = C(n,w) Σ_{j ≤ w−d} (−1)^j C(w,j)(q^{w−d+1−j} − 1)`.
fn grs(p: u64, e: u32, k: u32, n: usize) -> Result<Skeleton> {
    let q = p.pow(e);
    let k = k as usize;
    let d = n - k + 1;
    let mut sk = Skeleton::new("grs/mds", Z::from(n), k, q)?;
    let binom = |a: usize, b: usize| -> Z { (0..b).fold(Z::one(), |acc, i| acc * Z::from(a - i) / Z::from(i + 1)) };
    let mut t = Table::new();
    for w in d..=n {
        let mut s = Z::zero();
        for j in 0..=(w - d) {
            let term = binom(w, j) * (pw(q, (w - d + 1 - j) as i64)? - 1);
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        t.row(Z::from(w), binom(n, w) * s);
    }
    t.rows.retain(|(_, f)| !f.is_zero());
    sk.table = Some(t);
    if k < n {
        // the dual of an MDS code is MDS: d⊥ = k + 1
        sk.dual = DualFacts { d_perp: Some(k + 1), coefficients: BTreeMap::new() };
    }
    if n as u64 == q {
        // Σ_{a∈GF(q)} a^j vanishes unless j is a positive multiple of q − 1
        sk.self_orthogonal = Some(2 * (k as u64 - 1) < q - 1);
    }
    Ok(sk)
}

/// Dimension `Σ_j (−1)^j C(m,j) C(m+ρ−jq, ρ−jq)` of `RM_q(ρ, m)`.
pub fn grm_dimension(q: u64, m: u32, rho: u32) -> usize {
    let binom = |a: i64, b: i64| -> Z {
        if b < 0 || a < b {
            return Z::zero();
        }
        (0..b).fold(Z::one(), |acc, i| acc * Z::from(a - i) / Z::from(i + 1))
    };
    let mut s = Z::zero();
    for j in 0..=m as i64 {
        let r = rho as i64 - j * q as i64;
        if r < 0 {
            break;
        }
        let term = binom(m as i64, j) * binom(m as i64 + r, r);
        if j % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    s.to_usize().expect("dimension fits")
}

fn grm(p: u64, e: u32, m: u32, rho: u32) -> Result<Skeleton> {
    let q = p.pow(e);
    let n = pw(q, m as i64)?;
    let k = grm_dimension(q, m, rho);
    let mut sk = Skeleton::new("grm", n.clone(), k, q)?;
    let slack = m as u64 * (q - 1) - rho as u64;
    let (a, b) = (slack / (q - 1), slack % (q - 1));
    sk.closed_d = Some(to_usize(&((b + 1) * pw(q, a as i64)?), "d")?);
    if rho == 1 {
        let mut t = Table::new();
        t.row(&n - pw(q, m as i64 - 1)?, pw(q, m as i64 + 1)? - q);
        t.row(n.clone(), z(q - 1));
        sk.table = Some(t);
    }
    let ax = q.pow(m.div_ceil(rho) - 1);
    sk.divisible_by = Some(ax);
    sk.self_orthogonal = Some(rho < m);
    Ok(sk)
}

fn l_exp(num: Z, plus_one: bool) -> Result<Z> {
    let l = ex(num, z(4), "sign exponent")?;
    Ok(if plus_one { l + 1 } else { l })
}

fn lrc1(p: u64, e: u32, m: u32, m1: u32, m2: u32) -> Result<Skeleton> {
    let q = p.pow(e);
    let (mi, m1i, m2i) = (m as i64, m1 as i64, m2 as i64);
    let n = pw(q, mi - m1i)?;
    let w = &n - pw(q, mi - m1i - m2i)?;
    let qq1 = pw(q, m1i)?;
    let qq2 = pw(q, m2i)?;
    let pe = z((p - 1) * e as u64);
    // sign exponents; each case only uses (and requires integrality of) some
    let l1 = || l_exp(&pe * (mi + m2i), false);
    let l2 = || l_exp(&pe * (mi + 3 * m1i), false);
    let l3 = || l_exp(&pe * mi, true);
    let l4 = || l_exp(&pe * (mi + 3 * m1i + m2i), true);
    let l5 = || l_exp(&pe * (mi + m1i), false);
    let mut used = Vec::new();
    let odd_m = (m / m2) % 2 == 1;
    let odd_m1 = (m1 / m2) % 2 == 1;
    let odd_mm1 = (m / m1) % 2 == 1;
    let case = match (odd_m, odd_m1, odd_mm1) {
        (true, true, _) => "lrc1/odd-odd",
        (false, true, _) => "lrc1/even-odd",
        (false, false, true) => "lrc1/even-even-odd",
        (false, false, false) => "lrc1/even-even-even",
        (true, false, _) => {
            return Err(OrthoError::NoPrediction(format!(
                "m/m2 odd with m1/m2 even cannot occur (m2 | m1 | m); got m={m}, m1={m1}, m2={m2}"
            )))
        }
    };
    let mut sk = Skeleton::new(case, n.clone(), (m / m2) as usize + 1, qq2.to_u64().unwrap())?;
    let mut t = Table::new();
    t.row(n.clone(), &qq2 - 1);
    // rows whose offsets use the sign (−1)^{l3}
    let l3_rows = |t: &mut Table, shift: Option<Z>, used: &mut Vec<String>| -> Result<()> {
        let l3 = l3()?;
        used.push(format!("l3={}", &l3 % 2));
        let s3 = sgn(&l3);
        let off: Z = pw(q, half(mi - 2 * m2i, "offset")?)?;
        let corr: Z = match shift {
            Some(c) => c,
            None => Z::zero(),
        };
        let nm1: Z = &n - 1;
        t.row(&w - &s3 * (&qq2 - 1) * &off, ex(&nm1 + &s3 * &corr, z(2), "frequency")?);
        t.row(&w + &s3 * (&qq2 - 1) * &off, ex(&nm1 - &s3 * &corr, z(2), "frequency")?);
        t.row(&w + &s3 * &off, ex((&qq2 - 1) * (&nm1 + &s3 * &corr), z(2), "frequency")?);
        t.row(&w - &s3 * &off, ex((&qq2 - 1) * (&nm1 - &s3 * &corr), z(2), "frequency")?);
        Ok(())
    };
    // rows whose offsets use q^{(m−m1−2m2)/2} with sign s and a correction
    let split_rows = |t: &mut Table, s: Z, corr: Z| -> Result<()> {
        let off: Z = pw(q, half(mi - m1i - 2 * m2i, "offset")?)?;
        let base: Z = (&qq1 - 1) * &n;
        let c: Z = (&qq1 - 1) * &corr;
        t.row(&w - &s * (&qq2 - 1) * &off, ex(&base + &s * &c, z(2), "frequency")?);
        t.row(&w + &s * (&qq2 - 1) * &off, ex(&base - &s * &c, z(2), "frequency")?);
        t.row(&w + &s * &off, ex((&qq2 - 1) * (&base + &s * &c), z(2), "frequency")?);
        t.row(&w - &s * &off, ex((&qq2 - 1) * (&base - &s * &c), z(2), "frequency")?);
        Ok(())
    };
    match (odd_m, odd_m1, odd_mm1) {
        (true, true, _) => {
            let l1 = l1()?;
            used.push(format!("l1={}", &l1 % 2));
            let s1 = sgn(&l1);
            let off: Z = pw(q, half(mi - m2i, "offset")?)?;
            t.row(w.clone(), &n - 1);
            let f: Z = ex((&qq2 - 1) * (&n - 1), z(2), "frequency")?;
            t.row(&w - &s1 * &off, f.clone());
            t.row(&w + &s1 * &off, f);
            let l2 = l2()?;
            used.push(format!("l2={}", &l2 % 2));
            split_rows(&mut t, sgn(&l2), pw(q, half(mi - m1i, "correction")?)?)?;
            sk.notes.push(
                "frequencies of the four (m−m1−2m2)/2-offset weights use (q^m1−1)(n ± q^((m−m1)/2))/2; \
                 the form (n ± (q^m1−1)q^((m−m1)/2))/2 is non-integral"
                    .into(),
            );
            sk.stated_d = Some(&w - pw(q, half(mi - m2i, "d")?)?);
        }
        (false, true, _) => {
            t.row(w.clone(), pw(q, mi)? - &n);
            l3_rows(&mut t, Some((&qq1 - 1) * pw(q, half(mi - 2 * m1i, "correction")?)?), &mut used)?;
            let l4 = l4()?;
            used.push(format!("l4={}", &l4 % 2));
            let s4 = sgn(&l4);
            let off: Z = pw(q, half(mi - m1i - m2i, "offset")?)?;
            let f: Z = ex(&n * (&qq2 - 1) * (&qq1 - 1), z(2), "frequency")?;
            t.row(&w + &s4 * &off, f.clone());
            t.row(&w - &s4 * &off, f);
        }
        (false, false, true) => {
            l3_rows(&mut t, None, &mut used)?;
            let l5 = l5()?;
            used.push(format!("l5={}", &l5 % 2));
            split_rows(&mut t, sgn(&l5), pw(q, half(mi - m1i, "correction")?)?)?;
        }
        _ => {
            l3_rows(&mut t, Some((&qq1 - 1) * pw(q, half(mi - 2 * m1i, "correction")?)?), &mut used)?;
            let l5 = l5()?;
            used.push(format!("l5={}", &l5 % 2));
            split_rows(&mut t, sgn(&l5), Z::zero())?;
        }
    }
    if !(odd_m && odd_m1) {
        sk.stated_d = Some(&w - (&qq2 - 1) * pw(q, half(mi - 2 * m2i, "d")?)?);
    }
    t.rows.retain(|(_, f)| !f.is_zero());
    sk.table = Some(t);
    sk.divisible_by = Some(q);
    sk.self_orthogonal = Some(true);
    sk.locality = Some(2);
    sk.notes.push(format!("sign exponents mod 2: {}", used.join(" ")));
    Ok(sk)
}

/// `√(p*)^j` for even `j`: `(p*)^{j/2}` with `p* = (−1)^{(p−1)/2} p`.
fn sqrt_pstar_even(p: u64, j: i64) -> Result<Z> {
    let pstar = if p % 4 == 1 { z(p) } else { -z(p) };
    Ok(pstar.pow(half(j, "√p*")? as u32))
}

fn lrc2(p: u64, m: u32, epsilon: i8) -> Result<Skeleton> {
    let pz = z(p);
    let mi = m as i64;
    let eps = Z::from(epsilon);
    let pm = pw(p, mi)?;
    let mut t = Table::new();
    let (case, n) = if m.is_multiple_of(2) {
        let s: Z = &eps * sqrt_pstar_even(p, mi)?;
        let n = ex(&pm + (&pz - 1) * &s, pz.clone(), "length")?;
        t.row((&pz - 1) * pw(p, mi - 2)?, &n - 1);
        t.row(
            ex((&pz - 1) * pw(p, mi - 1)? + (&pz - 2) * &s, pz.clone(), "weight")?,
            ex((&pz - 1) * (&pz - 1) * (&pm - &s), pz.clone(), "frequency")?,
        );
        t.row(
            ex((&pz - 1) * (pw(p, mi - 1)? + &s), pz.clone(), "weight")?,
            ex((&pz - 1) * (2 * &pm + (&pz - 2) * &s - &pz), pz.clone(), "frequency")?,
        );
        t.row(n.clone(), &pz - 1);
        ("lrc2/m-even", n)
    } else {
        let s_hi: Z = &eps * sqrt_pstar_even(p, mi + 1)?;
        let eta0: Z = if p % 4 == 1 { Z::one() } else { -Z::one() };
        let s_lo: Z = &eta0 * &eps * sqrt_pstar_even(p, mi - 1)?;
        let p1: Z = pw(p, mi - 1)?;
        let p2: Z = &pz * &pz;
        let n = p1.clone();
        t.row(ex((&pz - 1) * (&pm - &s_hi), p2.clone(), "weight")?, ex((&pz - 1) * (&p1 + &s_lo), z(2), "frequency")?);
        t.row(
            ex((&pz - 1) * &pm - &s_hi, p2.clone(), "weight")?,
            ex((&pz - 1) * (&pz - 1) * (&p1 - &s_lo), z(2), "frequency")?,
        );
        t.row((&pz - 1) * pw(p, mi - 2)?, &pz * (&p1 - 1));
        t.row(
            ex((&pz - 1) * &pm + &s_hi, p2.clone(), "weight")?,
            ex((&pz - 1) * (&pz - 1) * (&p1 + &s_lo), z(2), "frequency")?,
        );
        t.row(ex((&pz - 1) * (&pm + &s_hi), p2.clone(), "weight")?, ex((&pz - 1) * (&p1 - &s_lo), z(2), "frequency")?);
        t.row(p1, &pz - 1);
        ("lrc2/m-odd", n)
    };
    let mut sk = Skeleton::new(case, n, m as usize + 1, p)?;
    sk.table = Some(t);
    sk.dual.d_perp = Some(3);
    sk.dual.coefficients.insert(1, BigUint::zero());
    sk.dual.coefficients.insert(2, BigUint::zero());
    sk.divisible_by = Some(p);
    sk.self_orthogonal = Some(true);
    sk.locality = Some(2);
    sk.notes.push(format!("Walsh sign ε = {epsilon}"));
    Ok(sk)
}

fn example(p: u64, e: u32, m: u32) -> Result<Skeleton> {
    let q = p.pow(e);
    let mi = m as i64;
    let n = pw(q, mi - 1)?;
    let mut sk = Skeleton::new("example", n.clone(), m as usize, q)?;
    let mut t = Table::new();
    t.row(&n - pw(q, mi - 2)?, z(q) * (&n - 1));
    t.row(n.clone(), z(q - 1));
    sk.table = Some(t);
    sk.dual.d_perp = Some(3);
    sk.dual.coefficients.insert(1, BigUint::zero());
    sk.dual.coefficients.insert(2, BigUint::zero());
    sk.divisible_by = Some(p);
    sk.self_orthogonal = Some(true);
    Ok(sk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn predicted(spec: &str) -> Vec<(usize, u64)> {
        let pr = predict_family(&FamilyParams::parse(spec).unwrap()).unwrap();
        pr.distribution.unwrap().counts.iter().map(|(&w, c)| (w, u64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn c4_even_row_spot_value() {
        let pr = predict_family(&FamilyParams::parse("family=c4 p=3 e=1 s=2").unwrap()).unwrap();
        assert_eq!(pr.raw_frequencies(12), vec![BigUint::from(60u32), BigUint::from(40u32)]);
        assert_eq!((pr.n, pr.k, pr.d), (21, 5, Some(12)));
        assert_eq!(pr.dual.coefficients[&3], BigUint::from(20u32));
    }

    #[test]
    fn frozen_distributions() {
        assert_eq!(
            predicted("family=c1 p=3 m=3 k=1"),
            vec![(0, 1), (9, 26), (12, 156), (15, 624), (18, 494), (21, 780), (24, 78), (27, 28)]
        );
        assert_eq!(
            predicted("family=c2 p=3 m=3 k=2"),
            vec![(0, 1), (12, 156), (15, 156), (18, 1482), (21, 312), (24, 78), (27, 2)]
        );
        assert_eq!(
            predicted("family=c3 q=3 m=4"),
            vec![
                (0, 1),
                (24, 80),
                (30, 80),
                (48, 1600),
                (51, 3200),
                (54, 9600),
                (57, 3200),
                (60, 1600),
                (66, 160),
                (69, 160),
                (81, 2)
            ]
        );
        assert_eq!(
            predicted("family=bch3 q=3 m=4"),
            vec![
                (0, 1),
                (45, 6840),
                (48, 24300),
                (51, 27216),
                (54, 49920),
                (57, 48600),
                (60, 13608),
                (63, 6480),
                (72, 180),
                (81, 2)
            ]
        );
        assert_eq!(
            predicted("family=lrc1 q=3 m=5 m1=1 m2=1"),
            vec![(0, 1), (45, 80), (48, 90), (51, 144), (54, 80), (57, 180), (60, 72), (63, 80), (81, 2)]
        );
        assert_eq!(
            predicted("family=lrc1 q=3 m=4 m1=1 m2=1"),
            vec![(0, 1), (12, 16), (15, 74), (18, 54), (21, 86), (24, 10), (27, 2)]
        );
        assert_eq!(predicted("family=lrc2 p=3 m=4"), vec![(0, 1), (12, 100), (15, 120), (18, 20), (21, 2)]);
        assert_eq!(predicted("family=grs q=27 k=3"), vec![(0, 1), (25, 9126), (26, 1404), (27, 9152)]);
    }

    #[test]
    fn stated_distance_recorded_when_it_disagrees() {
        let pr = predict_family(&FamilyParams::parse("family=c1 p=3 m=3 k=1").unwrap()).unwrap();
        assert_eq!((pr.d, pr.stated_d), (Some(9), Some(12)));
    }

    #[test]
    fn grm_dimension_formula() {
        assert_eq!(grm_dimension(3, 2, 1), 3);
        assert_eq!(grm_dimension(3, 2, 2), 6);
        assert_eq!(grm_dimension(3, 2, 3), 8);
        assert_eq!(grm_dimension(2, 4, 2), 11);
    }

    #[test]
    fn designs_of_bch2() {
        let pr = predict_family(&FamilyParams::parse("family=bch2 q=3 m=3").unwrap()).unwrap();
        let lam: Vec<_> = pr.designs.iter().map(|d| (d.in_dual, d.t, d.kappa, d.lambda.clone())).collect();
        assert_eq!(lam, vec![(false, 2, 15, BigUint::from(105u32)), (true, 2, 5, BigUint::from(20u32))]);
        assert_eq!(pr.locality, Some(4));
        assert_eq!(pr.dual.coefficients[&5], BigUint::from(1404u32));
    }
}
