//! Exact arithmetic in the cyclotomic ring `Z[ζ_p]`.
//!
//! An element is stored as `Σ_{i=0}^{p−2} c_i ζ^i`, the canonical
//! representative modulo `Φ_p(x) = 1 + x + … + x^{p−1}`; equality of elements
//! is coefficient equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// An element of `Z[ζ_p]` with arbitrary-precision coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    /// The zero element of `Z[ζ_p]`.
    pub fn zero(p: u32) -> Self {
        assert!(p >= 2, "cyclotomic ring needs p ≥ 2");
        CycInt { p, coeffs: vec![BigInt::zero(); (p - 1) as usize] }
    }

    /// The rational integer `n`.
    pub fn from_int(p: u32, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = n.into();
        z
    }

    /// `ζ_p^k` for any integer `k`.
    pub fn zeta_pow(p: u32, k: i64) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[k.rem_euclid(p as i64) as usize] = 1;
        Self::from_zeta_counts(p, &counts)
    }

    /// `Σ_k counts[k] ζ^k` for `k < p` — the natural result of a character sum
    /// that tallies how often each exponent occurs.
    pub fn from_zeta_counts(p: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), p as usize, "need one count per exponent");
        let top = counts[(p - 1) as usize];
        let coeffs = counts[..(p - 1) as usize].iter().map(|&c| BigInt::from(c - top)).collect();
        CycInt { p, coeffs }
    }

    /// The prime `p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Canonical coefficients `c_0 … c_{p−2}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `Some(n)` when the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Complex conjugate (`ζ ↦ ζ^{−1}`).
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(p - i) % p] += c;
        }
        Self::reduce(self.p, full)
    }

    /// `z · conj(z)`, the squared absolute value.
    pub fn abs_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiply by `ζ^k`.
    pub fn shift(&self, k: i64) -> Self {
        let p = self.p as usize;
        let k = k.rem_euclid(p as i64) as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(i + k) % p] += c;
        }
        Self::reduce(self.p, full)
    }

    /// Non-negative integer power.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(self.p, BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduce a length-`p` coefficient vector modulo `Φ_p`.
    fn reduce(p: u32, mut full: Vec<BigInt>) -> Self {
        let top = full.pop().expect("length p");
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        CycInt { p, coeffs: full }
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing Z[ζ_{}] and Z[ζ_{}]", self.p, other.p);
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.check_same_ring(rhs);
        CycInt { p: self.p, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.check_same_ring(rhs);
        CycInt { p: self.p, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_same_ring(rhs);
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % p] += a * b;
                }
            }
        }
        CycInt::reduce(self.p, full)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for CycInt {
            type Output = CycInt;
            fn $f(self, rhs: CycInt) -> CycInt {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}·ζ"),
                _ => format!("{c}·ζ^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_to_the_p_is_one() {
        let z = CycInt::zeta_pow(5, 1);
        assert_eq!(z.pow(5), CycInt::from_int(5, 1));
        assert_eq!(CycInt::zeta_pow(5, -1), z.conj());
    }

    #[test]
    fn sum_of_all_roots_is_zero() {
        let s = CycInt::from_zeta_counts(7, &[1; 7]);
        assert_eq!(s, CycInt::zero(7));
    }

    #[test]
    fn reduction_example() {
        // ζ − ζ² = 1 + 2ζ in Z[ζ_3]
        let z = CycInt::zeta_pow(3, 1);
        let lhs = &z - &z.pow(2);
        assert_eq!(lhs.coeffs(), &[BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn quadratic_gauss_sum_squares_to_p_star() {
        // g = ζ − ζ² over GF(3): g² = −3
        let z = CycInt::zeta_pow(3, 1);
        let g = &z - &z.pow(2);
        assert_eq!((&g * &g).as_integer(), Some(BigInt::from(-3)));
        assert_eq!(g.abs_sq().as_integer(), Some(BigInt::from(3)));
    }
}
