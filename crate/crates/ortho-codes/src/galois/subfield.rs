//! Subfields GF(p^s) ⊆ GF(p^d): relative trace, relative norm, and an explicit
//! isomorphism between the fixed field inside the big field and a standalone
//! small field (so subfield values can be used as code symbols).

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{OrthoError, Result};
use crate::galois::field::FieldSpec;

/// The subfield of degree `sub_degree` inside `big`, with relative trace and
/// norm maps and a symbol isomorphism onto a standalone `GF(p^s)`.
#[derive(Debug, Clone)]
pub struct SubfieldMap {
    big: Arc<FieldSpec>,
    small: Arc<FieldSpec>,
    sub_degree: u32,
    /// `(p^d − 1)/(p^s − 1)`: logs of subfield elements are multiples of it.
    cofactor: u64,
    /// Exponent `j` such that `γ^i ↦ α^{cofactor·j·i}` is a field isomorphism.
    iso_exp: u64,
    /// Inverse of `iso_exp` modulo `p^s − 1`.
    iso_exp_inv: u64,
}

impl SubfieldMap {
    /// Subfield of degree `sub_degree` in `big`; the standalone copy is built
    /// with [`FieldSpec::new`].
    pub fn new(big: Arc<FieldSpec>, sub_degree: u32) -> Result<Self> {
        let d = big.degree();
        if sub_degree == 0 || !d.is_multiple_of(sub_degree) {
            return Err(OrthoError::NotASubfield { sub: sub_degree, degree: d });
        }
        let small = if sub_degree == d { big.clone() } else { Arc::new(FieldSpec::new(big.p() as u64, sub_degree)?) };
        let n_big = (big.order() - 1) as u64;
        let n_small = (small.order() - 1) as u64;
        let cofactor = n_big / n_small;
        // β = α^cofactor generates the subfield's multiplicative group; pick
        // the least j coprime to p^s − 1 with β^j a root of the small modulus.
        let (iso_exp, iso_exp_inv) = if n_small <= 1 {
            (1, 1)
        } else {
            (1..n_small)
                .filter(|j| j.gcd(&n_small) == 1)
                .find(|&j| {
                    let root = big.alpha_pow((cofactor * j) as i64);
                    big.eval_prime_poly(small.modulus(), root) == 0
                })
                .map(|j| (j, mod_inverse(j, n_small)))
                .expect("a conjugate of the subfield generator is a root of the small modulus")
        };
        Ok(SubfieldMap { big, small, sub_degree, cofactor, iso_exp, iso_exp_inv })
    }

    /// The ambient field.
    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }
    /// The standalone copy of the subfield.
    pub fn small(&self) -> &Arc<FieldSpec> {
        &self.small
    }
    /// Degree `s` of the subfield over the prime field.
    pub fn sub_degree(&self) -> u32 {
        self.sub_degree
    }
    /// Relative degree `d/s`.
    pub fn relative_degree(&self) -> u32 {
        self.big.degree() / self.sub_degree
    }

    /// Relative trace `Σ_{i<d/s} x^{p^{s i}}`, as an element of the big field.
    pub fn trace(&self, x: u32) -> u32 {
        let Some(l) = self.big.log(x) else { return 0 };
        let n = (self.big.order() - 1) as u64;
        let stride = (self.small.order() as u64) % n.max(1);
        let mut e = l as u64;
        let mut acc = 0;
        for _ in 0..self.relative_degree() {
            acc = self.big.add(acc, self.big.alpha_pow(e as i64));
            e = (e * stride) % n;
        }
        acc
    }

    /// Relative norm `x^{(p^d−1)/(p^s−1)}`, as an element of the big field.
    pub fn norm(&self, x: u32) -> u32 {
        self.big.pow(x, self.cofactor)
    }

    /// Whether `x` lies in the subfield (is fixed by the stride Frobenius).
    pub fn contains(&self, x: u32) -> bool {
        self.big.log(x).is_none_or(|l| (l as u64).is_multiple_of(self.cofactor))
    }

    /// Map a subfield element of the big field onto the standalone small field.
    pub fn to_small(&self, x: u32) -> Result<u32> {
        let Some(l) = self.big.log(x) else {
            return Ok(0);
        };
        let l = l as u64;
        if !l.is_multiple_of(self.cofactor) {
            return Err(OrthoError::NotInSubfield(x));
        }
        let n_small = (self.small.order() - 1) as u64;
        let i = ((l / self.cofactor) % n_small.max(1)) * self.iso_exp_inv % n_small.max(1);
        Ok(self.small.alpha_pow(i as i64))
    }

    /// Embed a standalone small-field element into the big field.
    pub fn from_small(&self, y: u32) -> u32 {
        match self.small.log(y) {
            None => 0,
            Some(i) => self.big.alpha_pow((self.cofactor * self.iso_exp * i as u64) as i64),
        }
    }

    /// Relative trace followed by [`SubfieldMap::to_small`]: a code symbol.
    pub fn trace_symbol(&self, x: u32) -> u32 {
        self.to_small(self.trace(x)).expect("trace values lie in the subfield")
    }
}

/// Inverse of `a` modulo `n` (requires `gcd(a, n) = 1`).
pub fn mod_inverse(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(n as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(p: u64, d: u32, s: u32) -> SubfieldMap {
        SubfieldMap::new(Arc::new(FieldSpec::new(p, d).unwrap()), s).unwrap()
    }

    #[test]
    fn trace_of_one_is_degree() {
        let m = map(3, 2, 1);
        assert_eq!(m.trace(1), 2);
    }

    #[test]
    fn trace_kernel_size() {
        let m = map(3, 3, 1);
        let ker = m.big().elements().filter(|&x| m.trace(x) == 0).count();
        assert_eq!(ker, 9);
    }

    #[test]
    fn relative_trace_matches_direct_powers() {
        // tr_{81/9}(x) = x + x^9 by direct exponentiation
        let m = map(3, 4, 2);
        let f = m.big().clone();
        for x in f.elements() {
            assert_eq!(m.trace(x), f.add(x, f.pow(x, 9)));
        }
    }

    #[test]
    fn absolute_trace_agrees() {
        let m = map(5, 3, 1);
        for x in m.big().elements() {
            assert_eq!(m.trace(x), m.big().abs_trace(x));
            assert_eq!(m.trace_symbol(x), m.big().abs_trace(x));
        }
    }

    #[test]
    fn subfield_isomorphism_is_a_ring_map() {
        for (p, d, s) in [(3u64, 4u32, 2u32), (2, 6, 3), (3, 6, 2), (5, 2, 1), (3, 3, 3)] {
            let m = map(p, d, s);
            let (big, small) = (m.big().clone(), m.small().clone());
            for a in small.elements() {
                let ea = m.from_small(a);
                assert!(m.contains(ea));
                assert_eq!(m.to_small(ea).unwrap(), a);
                for b in small.elements() {
                    let eb = m.from_small(b);
                    assert_eq!(m.from_small(small.add(a, b)), big.add(ea, eb));
                    assert_eq!(m.from_small(small.mul(a, b)), big.mul(ea, eb));
                }
            }
            let inside = big.elements().filter(|&x| m.contains(x)).count();
            assert_eq!(inside as u32, small.order());
        }
    }

    #[test]
    fn norm_lands_in_subfield() {
        let m = map(3, 4, 2);
        for x in m.big().elements() {
            assert!(m.contains(m.norm(x)));
        }
    }

    #[test]
    fn bad_subfield_degree() {
        let big = Arc::new(FieldSpec::new(3, 4).unwrap());
        assert!(matches!(SubfieldMap::new(big, 3), Err(OrthoError::NotASubfield { .. })));
    }
}
