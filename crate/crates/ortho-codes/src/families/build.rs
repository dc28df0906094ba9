//! Family constructors. Trace families are expressed as [`TraceCodeConfig`]s
//! and built by the generic engine; the two evaluation codes (GRS, GRM) are
//! built from their evaluation matrices.

use std::sync::Arc;

use itertools::Itertools;

use crate::code_core::code::LinearCode;
use crate::error::{OrthoError, Result};
use crate::families::engine::{power_points, trace_code_build, Completion, Slot, TraceCodeConfig};
use crate::families::params::{Family, FamilyParams};
use crate::galois::{rf_membership, FieldSpec, FunctionTable, SubfieldMap};

fn field(p: u64, d: u32) -> Result<Arc<FieldSpec>> {
    Ok(Arc::new(FieldSpec::new(p, d)?))
}

const LITERAL_BAR: Completion = Completion { augment: false, extend: false, trailing_constant: true };
const AUGMENT: Completion = Completion { augment: true, extend: false, trailing_constant: false };
const AUGMENT_EXTEND: Completion = Completion { augment: true, extend: true, trailing_constant: false };

/// Elements `x` of `GF(p^{e·m})` with `tr_{q^m/q^{m1}}(x) = 0`, in code order.
fn trace_kernel(big: &Arc<FieldSpec>, sub_degree: u32) -> Result<Vec<u32>> {
    let map = SubfieldMap::new(big.clone(), sub_degree)?;
    Ok(big.elements().filter(|&x| map.trace(x) == 0).collect())
}

/// The function table of the bent-function family: `tr(x²)` or a file.
pub fn bent_function(p: u64, m: u32, path: Option<&std::path::Path>) -> Result<FunctionTable> {
    let big = field(p, m)?;
    match path {
        None => Ok(FunctionTable::trace_square(big)),
        Some(path) => FunctionTable::from_file(big, path),
    }
}

/// The trace-code description of a family (`None` for GRS and GRM).
pub fn family_config(family: &Family) -> Result<Option<TraceCodeConfig>> {
    let cfg = match *family {
        Family::C1 { p, m, k, .. } | Family::C2 { p, m, k, .. } => {
            let big = field(p, m)?;
            let n = big.order() as usize - 1;
            let first = if matches!(family, Family::C1 { .. }) { big.neg(big.alpha_pow(1)) } else { big.alpha_pow(1) };
            let half = p.pow(k).div_ceil(2) % (n as u64);
            let slots = vec![Slot::Power(first), Slot::Power(big.alpha_pow(half as i64))];
            TraceCodeConfig::new(big.clone(), 1, power_points(&big, n), slots)?.with_completion(LITERAL_BAR)
        }
        Family::C3 { p, e, m } => {
            let big = field(p, e * m)?;
            let n = big.order() as usize - 1;
            let g2 = big.alpha_pow((n / 2 + 1) as i64);
            let slots = vec![Slot::Power(big.alpha_pow(1)), Slot::Power(g2)];
            TraceCodeConfig::new(big.clone(), e, power_points(&big, n), slots)?.with_completion(LITERAL_BAR)
        }
        Family::C4 { p, e, s } => {
            let big = field(p, 2 * e * s)?;
            let nn = p.pow(e) + 1;
            let len = (big.order() as u64 - 1) / nn;
            let theta = big.alpha_pow(nn as i64);
            TraceCodeConfig::new(big.clone(), e, power_points(&big, len as usize), vec![Slot::Power(theta)])?
                .with_completion(LITERAL_BAR)
        }
        Family::Bch { q, m, delta } => {
            let big = field(q, m)?;
            let h = (m - 1) / 2 + 1;
            let exps = if delta == 2 { vec![1 + q.pow(h), 1] } else { vec![1, 1 + q.pow(h), 1 + q.pow(h + 1)] };
            let slots = exps.into_iter().map(Slot::Monomial).collect();
            let n = big.order() as usize - 1;
            TraceCodeConfig::new(big.clone(), 1, power_points(&big, n), slots)?.with_completion(AUGMENT_EXTEND)
        }
        Family::Lrc1 { p, e, m, m1, m2 } => {
            let big = field(p, e * m)?;
            let domain = trace_kernel(&big, e * m1)?;
            TraceCodeConfig::new(big, e * m2, domain, vec![Slot::Monomial(2)])?.with_completion(AUGMENT)
        }
        Family::Lrc2 { p, m, ref function } => {
            let f = bent_function(p, m, function.as_deref())?;
            rf_membership(&f).map_err(|r| OrthoError::InvalidParams {
                family: "lrc2".into(),
                reason: format!("function is not weakly regular bent: {r}"),
            })?;
            let big = f.field().clone();
            let domain = big.elements().filter(|&x| f.value(x) == 0).collect();
            TraceCodeConfig::new(big, 1, domain, vec![Slot::Monomial(1)])?.with_completion(AUGMENT)
        }
        Family::Example { p, e, m } => {
            let big = field(p, e * m)?;
            let domain = trace_kernel(&big, e)?;
            TraceCodeConfig::new(big, e, domain, vec![Slot::Monomial(1)])?.with_completion(AUGMENT)
        }
        Family::Grs { .. } | Family::Grm { .. } => return Ok(None),
    };
    Ok(Some(cfg))
}

/// Build the code of a validated family.
pub fn build(family: &Family) -> Result<LinearCode> {
    match *family {
        Family::Grs { p, e, k, n } => grs(p, e, k, n),
        Family::Grm { p, e, m, rho } => grm(p, e, m, rho),
        _ => trace_code_build(&family_config(family)?.expect("trace family")),
    }
}

/// Validate the parameters and build the family's code.
pub fn build_family(params: &FamilyParams) -> Result<LinearCode> {
    build(&params.resolve()?)
}

/// GRS code on the points `0, β^0, …, β^{n−2}` of GF(p^e) with unit
/// multipliers: rows `(a_j^i)_j` for `i < k`.
pub fn grs(p: u64, e: u32, k: u32, n: usize) -> Result<LinearCode> {
    let f = field(p, e)?;
    let points: Vec<u32> =
        std::iter::once(0).chain((0..f.order() as i64 - 1).map(|i| f.alpha_pow(i))).take(n).collect();
    let rows = (0..k as u64).map(|i| points.iter().map(|&a| f.pow(a, i) as u8).collect()).collect();
    LinearCode::new(f, n, rows)
}

/// Monomial exponent vectors of `RM_q(ρ, m)`: per-variable degree ≤ q − 1,
/// total degree ≤ ρ, graded-lexicographic order.
pub fn grm_monomials(q: u64, m: u32, rho: u32) -> Vec<Vec<u32>> {
    let top = (q - 1).min(rho as u64) as u32;
    let mut monos: Vec<Vec<u32>> =
        (0..m).map(|_| 0..=top).multi_cartesian_product().filter(|d| d.iter().sum::<u32>() <= rho).collect();
    if m == 0 {
        monos = vec![vec![]];
    }
    monos.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then_with(|| b.cmp(a)));
    monos
}

/// `RM_q(ρ, m)` evaluated at all of `GF(q)^m` (point index digits in base
/// `q` are the coordinates, first variable least significant).
pub fn grm(p: u64, e: u32, m: u32, rho: u32) -> Result<LinearCode> {
    let f = field(p, e)?;
    let q = f.order() as u64;
    let n = q.checked_pow(m).filter(|&n| n <= 1 << 22).ok_or_else(|| OrthoError::InvalidParams {
        family: "grm".into(),
        reason: format!("length {q}^{m} too large"),
    })? as usize;
    let points: Vec<Vec<u32>> = (0..n as u64).map(|i| (0..m).map(|j| ((i / q.pow(j)) % q) as u32).collect()).collect();
    let rows = grm_monomials(q, m, rho)
        .iter()
        .map(|d| {
            points
                .iter()
                .map(|z| z.iter().zip(d).fold(1u32, |acc, (&x, &k)| f.mul(acc, f.pow(x, k as u64))) as u8)
                .collect()
        })
        .collect();
    LinearCode::new(f, n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_core::enumerate::{weight_distribution, EnumOptions};

    fn dist(spec: &str) -> (usize, usize, Vec<(usize, u64)>) {
        let code = build_family(&FamilyParams::parse(spec).unwrap()).unwrap();
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        let pairs = wd.counts.iter().map(|(&w, c)| (w, u64::try_from(c).unwrap())).collect();
        (code.n(), code.k(), pairs)
    }

    #[test]
    fn example_code() {
        assert_eq!(dist("family=example q=3 m=3"), (9, 3, vec![(0, 1), (6, 24), (9, 2)]));
    }

    #[test]
    fn c4_small() {
        let (n, k, d) = dist("family=c4 p=3 e=1 s=2");
        assert_eq!((n, k), (21, 5));
        assert_eq!(d, vec![(0, 1), (12, 100), (15, 120), (18, 20), (21, 2)]);
    }

    #[test]
    fn bch2_small() {
        let (n, k, d) = dist("family=bch2 q=3 m=3");
        assert_eq!((n, k), (27, 7));
        assert_eq!(d, vec![(0, 1), (15, 702), (18, 780), (21, 702), (27, 2)]);
    }

    #[test]
    fn grs_and_grm() {
        assert_eq!(dist("family=grs q=27 k=3"), (27, 3, vec![(0, 1), (25, 9126), (26, 1404), (27, 9152)]));
        assert_eq!(dist("family=grm q=3 m=2 rho=1"), (9, 3, vec![(0, 1), (6, 24), (9, 2)]));
        assert_eq!(
            grm_monomials(3, 2, 2),
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
    }
}
