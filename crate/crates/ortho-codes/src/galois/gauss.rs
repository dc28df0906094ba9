//! Quadratic Gauss sums and Weil sums, evaluated exactly.
//!
//! The quadratic Gauss sum `G(η, χ₁)` of GF(p^e) is `±√q` or `±i√q`; the
//! symbolic [`GaussValue`] carries sign and "imaginary" flag so products of
//! Gauss sums in weight formulas stay exact, and converts into `Z[ζ_p]` via
//! the prime-field Gauss sum `g₁ = Σ_x (x/p) ζ^x` (with `g₁² = (−1)^{(p−1)/2}p`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{OrthoError, Result};
use crate::galois::cycint::CycInt;
use crate::galois::field::FieldSpec;

/// The exact value `sign · (i if imaginary) · √(p^exponent)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussValue {
    /// `+1` or `−1`.
    pub sign: i8,
    /// Whether the value is purely imaginary.
    pub imaginary: bool,
    /// Odd prime `p`.
    pub p: u32,
    /// The value has absolute value `√(p^exponent)`.
    pub exponent: u32,
}

impl GaussValue {
    /// The real unit `+1` (exponent 0).
    pub fn one(p: u32) -> Self {
        GaussValue { sign: 1, imaginary: false, p, exponent: 0 }
    }

    /// `|value|² = p^exponent`.
    pub fn magnitude_sq(&self) -> BigInt {
        BigInt::from(self.p).pow(self.exponent)
    }

    /// Product of two values over the same prime.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "Gauss values over different primes");
        let mut sign = self.sign * other.sign;
        if self.imaginary && other.imaginary {
            sign = -sign;
        }
        GaussValue {
            sign,
            imaginary: self.imaginary ^ other.imaginary,
            p: self.p,
            exponent: self.exponent + other.exponent,
        }
    }

    /// Multiply by `±1`.
    pub fn signed(&self, s: i8) -> Self {
        GaussValue { sign: self.sign * s, ..*self }
    }

    /// `value^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(GaussValue::one(self.p), |acc, _| acc.mul(self))
    }

    /// The value as a rational integer, if it is one (real, even exponent).
    pub fn as_integer(&self) -> Option<BigInt> {
        (!self.imaginary && self.exponent.is_multiple_of(2))
            .then(|| BigInt::from(self.sign) * BigInt::from(self.p).pow(self.exponent / 2))
    }

    /// The value as an element of `Z[ζ_p]`, when it lies there.
    pub fn to_cycint(&self) -> Result<CycInt> {
        let p = self.p;
        let half = BigInt::from(p).pow(self.exponent / 2);
        let sign = BigInt::from(self.sign);
        if self.exponent.is_multiple_of(2) {
            return if self.imaginary {
                Err(OrthoError::NotCyclotomic(self.to_string()))
            } else {
                Ok(CycInt::from_int(p, sign * half))
            };
        }
        // √p = g₁ when p ≡ 1 (mod 4); i√p = g₁ when p ≡ 3 (mod 4).
        let needs_imaginary = p % 4 == 3;
        if self.imaginary != needs_imaginary {
            return Err(OrthoError::NotCyclotomic(self.to_string()));
        }
        Ok(prime_gauss_sum(p).scale(&(sign * half)))
    }
}

impl fmt::Display for GaussValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        let i = if self.imaginary { "i" } else { "" };
        write!(f, "{s}{i}√({}^{})", self.p, self.exponent)
    }
}

/// The prime-field quadratic Gauss sum `g₁ = Σ_{x=1}^{p−1} (x/p) ζ^x`.
pub fn prime_gauss_sum(p: u32) -> CycInt {
    let mut counts = vec![0i64; p as usize];
    // squares mod p: x ↦ x² hits each nonzero square twice
    let mut is_square = vec![false; p as usize];
    for x in 1..p as u64 {
        is_square[(x * x % p as u64) as usize] = true;
    }
    for x in 1..p as usize {
        counts[x] = if is_square[x] { 1 } else { -1 };
    }
    CycInt::from_zeta_counts(p, &counts)
}

/// Closed form of the quadratic Gauss sum of GF(p^e):
/// `(−1)^{e−1} · i^{((p−1)/2)² e} · √q`.
pub fn gauss_sum_quadratic(spec: &FieldSpec) -> Result<GaussValue> {
    if !spec.is_odd() {
        return Err(OrthoError::EvenCharacteristic);
    }
    let (p, e) = (spec.p(), spec.degree());
    let h = ((p - 1) / 2) as u64;
    let ipow = (h * h * e as u64) % 4;
    let mut sign: i8 = if e % 2 == 0 { -1 } else { 1 };
    if ipow >= 2 {
        sign = -sign;
    }
    Ok(GaussValue { sign, imaginary: ipow % 2 == 1, p, exponent: e })
}

/// Direct evaluation of `G(η, χ₁) = Σ_{x≠0} η(x) ζ_p^{tr(x)}`.
pub fn gauss_sum_brute(spec: &FieldSpec) -> Result<CycInt> {
    if !spec.is_odd() {
        return Err(OrthoError::EvenCharacteristic);
    }
    let mut counts = vec![0i64; spec.p() as usize];
    for x in 1..spec.order() {
        counts[spec.abs_trace(x) as usize] += spec.quadratic_character(x)? as i64;
    }
    Ok(CycInt::from_zeta_counts(spec.p(), &counts))
}

/// Weil sum `Σ_{c} ζ^{tr(a2 c² + a1 c + a0)}` by the completing-the-square
/// closed form `χ₁(a0 − a1²(4a2)^{−1}) η(a2) G(η, χ₁)`.
pub fn weil_sum(spec: &FieldSpec, a2: u32, a1: u32, a0: u32) -> Result<CycInt> {
    if !spec.is_odd() {
        return Err(OrthoError::EvenCharacteristic);
    }
    let (a2, a1, a0) = (spec.check(a2 as u64)?, spec.check(a1 as u64)?, spec.check(a0 as u64)?);
    if a2 == 0 {
        return Err(OrthoError::ZeroArgument("a2"));
    }
    let four_a2 = spec.mul(spec.from_int(4), a2);
    let shift = spec.sub(a0, spec.div(spec.mul(a1, a1), four_a2).expect("4·a2 ≠ 0 in odd characteristic"));
    let g = gauss_sum_quadratic(spec)?.to_cycint()?;
    let eta = spec.quadratic_character(a2)?;
    Ok(g.shift(spec.abs_trace(shift) as i64).scale(&BigInt::from(eta)))
}

/// Weil sum by direct summation over the field.
pub fn weil_sum_direct(spec: &FieldSpec, a2: u32, a1: u32, a0: u32) -> CycInt {
    let mut counts = vec![0i64; spec.p() as usize];
    for c in spec.elements() {
        let v = spec.add(spec.add(spec.mul(a2, spec.mul(c, c)), spec.mul(a1, c)), a0);
        counts[spec.abs_trace(v) as usize] += 1;
    }
    CycInt::from_zeta_counts(spec.p(), &counts)
}

/// `(−1)^k` as a signed unit.
pub fn minus_one_pow(k: impl Into<BigInt>) -> i8 {
    let k: BigInt = k.into();
    if (k % 2u32).is_zero() {
        1
    } else {
        -1
    }
}

/// `√q` with `q = p^e` as a GaussValue of exponent `e` (sign `+`, real).
pub fn sqrt_power(p: u32, e: u32) -> GaussValue {
    GaussValue { sign: 1, imaginary: false, p, exponent: e }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_from_the_lemma() {
        let g5 = gauss_sum_quadratic(&FieldSpec::new(5, 1).unwrap()).unwrap();
        assert_eq!((g5.sign, g5.imaginary), (1, false));
        let g3 = gauss_sum_quadratic(&FieldSpec::new(3, 1).unwrap()).unwrap();
        assert_eq!((g3.sign, g3.imaginary), (1, true));
        let g9 = gauss_sum_quadratic(&FieldSpec::new(3, 2).unwrap()).unwrap();
        assert_eq!(g9.as_integer(), Some(BigInt::from(3)));
    }

    #[test]
    fn closed_form_equals_brute_force() {
        for (p, e) in [(3u64, 1u32), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)] {
            let f = FieldSpec::new(p, e).unwrap();
            let closed = gauss_sum_quadratic(&f).unwrap().to_cycint().unwrap();
            assert_eq!(closed, gauss_sum_brute(&f).unwrap(), "GF({p}^{e})");
        }
    }

    #[test]
    fn weil_sum_example_gf3() {
        let f = FieldSpec::new(3, 1).unwrap();
        let w = weil_sum_direct(&f, 1, 0, 0);
        assert_eq!(w.coeffs(), &[BigInt::from(1), BigInt::from(2)]);
        assert_eq!(weil_sum(&f, 1, 0, 0).unwrap(), w);
        assert_eq!(weil_sum(&f, 0, 1, 0), Err(OrthoError::ZeroArgument("a2")));
    }

    #[test]
    fn weil_sum_closed_form_exhaustive_gf9() {
        let f = FieldSpec::new(3, 2).unwrap();
        for a2 in 1..9 {
            for a1 in 0..9 {
                for a0 in 0..9 {
                    let w = weil_sum(&f, a2, a1, a0).unwrap();
                    assert_eq!(w, weil_sum_direct(&f, a2, a1, a0));
                    assert_eq!(w.abs_sq().as_integer(), Some(BigInt::from(9)));
                }
            }
        }
    }

    #[test]
    fn products_of_imaginary_values() {
        let i3 = GaussValue { sign: 1, imaginary: true, p: 3, exponent: 1 };
        assert_eq!(i3.mul(&i3).as_integer(), Some(BigInt::from(-3)));
        assert!(i3.pow(2).to_cycint().is_ok());
        let real_odd = GaussValue { sign: 1, imaginary: false, p: 3, exponent: 1 };
        assert!(real_odd.to_cycint().is_err());
    }
}
