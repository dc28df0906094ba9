//! Concrete finite fields GF(p^d) backed by log/exp tables.
//!
//! Elements are encoded as integers in `[0, p^d)`: the base-p digits are the
//! coefficients of the polynomial representative, constant term least
//! significant. The defining modulus is the lexicographically smallest monic
//! primitive polynomial under the coefficient order `(c_{d-1}, …, c_0)`, so
//! element codes are reproducible across runs and implementations.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{OrthoError, Result};

/// Default maximum field order for which tables are built.
pub const DEFAULT_TABLE_BUDGET: u64 = 1 << 22;

/// Deterministic trial-division primality test (inputs are small).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut i = 3;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

/// Decompose `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// A finite field GF(p^d) with precomputed logarithm tables.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    d: u32,
    order: u32,
    /// Monic modulus, coefficients `c_0 … c_d` (constant first, `c_d = 1`).
    modulus: Vec<u32>,
    primitive_code: u32,
    /// `exp[i] = α^i` for `0 ≤ i < 2(order−1)` (doubled to skip a reduction).
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// `p^i` for `0 ≤ i ≤ d`.
    place: Vec<u32>,
    /// Lazily built table of the absolute trace `tr_{p^d/p}`.
    abs_trace: OnceLock<Vec<u32>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) modulus {:?}", self.p, self.d, self.modulus)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    /// Build GF(p^d) with the default table budget.
    pub fn new(p: u64, d: u32) -> Result<Self> {
        Self::with_budget(p, d, DEFAULT_TABLE_BUDGET)
    }

    /// Build GF(p^d), rejecting fields whose order exceeds `budget`.
    pub fn with_budget(p: u64, d: u32, budget: u64) -> Result<Self> {
        let order = check_order(p, d, budget)?;
        let p32 = p as u32;
        // Candidates in lexicographic order of (c_{d-1}, …, c_0) are exactly
        // the integers Σ c_i p^i in increasing order.
        for lower in 0..order {
            let mut modulus = digits(lower, p32, d);
            modulus.push(1);
            if modulus[0] == 0 {
                continue;
            }
            if let Some(field) = Self::try_build(p32, d, order, modulus) {
                return Ok(field);
            }
        }
        unreachable!("primitive polynomials exist for every prime power")
    }

    /// Build GF(p^d) for an explicitly supplied monic modulus `c_0 … c_d`.
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(OrthoError::ZeroDegree);
        }
        let d = (modulus.len() - 1) as u32;
        let order = check_order(p, d, DEFAULT_TABLE_BUDGET)?;
        if modulus[d as usize] != 1 || modulus.iter().any(|&c| c as u64 >= p) {
            return Err(OrthoError::NotPrimitive(d));
        }
        Self::try_build(p as u32, d, order, modulus.to_vec()).ok_or(OrthoError::NotPrimitive(d))
    }

    /// Attempt to use `modulus` as a defining polynomial; returns `None` unless
    /// its root has multiplicative order exactly `p^d − 1`.
    fn try_build(p: u32, d: u32, order: u32, modulus: Vec<u32>) -> Option<Self> {
        let mut place = Vec::with_capacity(d as usize + 1);
        let mut acc = 1u32;
        for _ in 0..=d {
            place.push(acc);
            acc = acc.wrapping_mul(p);
        }
        let top = place[d as usize - 1];
        let n = (order - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![u32::MAX; order as usize];
        let mut x = 1u32;
        for i in 0..n {
            if log[x as usize] != u32::MAX {
                return None;
            }
            log[x as usize] = i as u32;
            exp[i] = x;
            x = times_root(x, p, d, top, &modulus);
        }
        if x != 1 {
            return None;
        }
        for i in 0..n {
            exp[n + i] = exp[i];
        }
        let primitive_code = if n == 0 { 1 } else { exp[1 % n] };
        Some(FieldSpec { p, d, order, modulus, primitive_code, exp, log, place, abs_trace: OnceLock::new() })
    }

    /// Characteristic.
    pub fn p(&self) -> u32 {
        self.p
    }
    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.d
    }
    /// Number of elements `p^d`.
    pub fn order(&self) -> u32 {
        self.order
    }
    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// Code of the primitive element α (the class of x).
    pub fn primitive(&self) -> u32 {
        self.primitive_code
    }
    /// Whether `p` is odd.
    pub fn is_odd(&self) -> bool {
        self.p % 2 == 1
    }

    /// Validate an element code.
    pub fn check(&self, x: u64) -> Result<u32> {
        if x < self.order as u64 {
            Ok(x as u32)
        } else {
            Err(OrthoError::ElementOutOfRange { code: x, order: self.order as u64 })
        }
    }

    /// Image of the integer `n` in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Sum of two elements (digit-wise modulo p).
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.d == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut r) = (a, b, 0u32);
        for i in 0..self.d as usize {
            let s = (a % self.p + b % self.p) % self.p;
            r += s * self.place[i];
            a /= self.p;
            b /= self.p;
        }
        r
    }

    /// Additive inverse.
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut r) = (a, 0u32);
        for i in 0..self.d as usize {
            let c = a % self.p;
            r += ((self.p - c) % self.p) * self.place[i];
            a /= self.p;
        }
        r
    }

    /// Difference `a − b`.
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Product.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.order - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// Quotient `a / b`; `None` when `b = 0`.
    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^e` for a non-negative exponent (`0^0 = 1`).
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.order - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[l as usize]
    }

    /// α^i for any integer exponent.
    pub fn alpha_pow(&self, i: i64) -> u32 {
        let n = (self.order - 1) as i64;
        self.exp[i.rem_euclid(n) as usize]
    }

    /// Discrete logarithm to base α; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Quadratic character η: 0 at zero, +1 on nonzero squares, −1 otherwise.
    pub fn quadratic_character(&self, x: u32) -> Result<i8> {
        if !self.is_odd() {
            return Err(OrthoError::EvenCharacteristic);
        }
        Ok(match self.log(x) {
            None => 0,
            Some(l) if l % 2 == 0 => 1,
            Some(_) => -1,
        })
    }

    /// Evaluate a polynomial with prime-field coefficients (constant first)
    /// at the element `x`.
    pub fn eval_prime_poly(&self, coeffs: &[u32], x: u32) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c % self.p))
    }

    /// Absolute trace `tr_{p^d/p}(x) = Σ x^{p^i}`, returned as an integer in
    /// `[0, p)` (the prime-field element code).
    pub fn abs_trace(&self, x: u32) -> u32 {
        self.abs_trace.get_or_init(|| self.build_abs_trace())[x as usize]
    }

    fn build_abs_trace(&self) -> Vec<u32> {
        // The trace is GF(p)-linear: tabulate it on the monomial basis and
        // extend digit-wise.
        let basis: Vec<u32> = (0..self.d as usize)
            .map(|i| {
                let x = self.place[i];
                let mut acc = 0u32;
                let mut y = x;
                for _ in 0..self.d {
                    acc = self.add(acc, y);
                    y = self.pow(y, self.p as u64);
                }
                acc
            })
            .collect();
        (0..self.order)
            .map(|x| {
                let s: u32 = self.digits(x).iter().zip(&basis).map(|(c, b)| c * b).sum();
                s % self.p
            })
            .collect()
    }

    /// All element codes `0 … p^d − 1`.
    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order
    }

    /// Base-p digits of an element (constant coefficient first).
    pub fn digits(&self, x: u32) -> Vec<u32> {
        digits(x, self.p, self.d)
    }

    /// Field descriptor line `p d c_0 c_1 … c_d`.
    pub fn descriptor(&self) -> String {
        let mut s = format!("{} {}", self.p, self.d);
        for c in &self.modulus {
            s.push_str(&format!(" {c}"));
        }
        s
    }

    /// Parse a descriptor line produced by [`FieldSpec::descriptor`].
    pub fn from_descriptor(line: &str) -> Result<Self> {
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|e| OrthoError::Parse(format!("descriptor: {e}"))))
            .collect::<Result<_>>()?;
        if nums.len() < 3 {
            return Err(OrthoError::Parse("descriptor needs `p d c_0 … c_d`".into()));
        }
        let (p, d) = (nums[0], nums[1] as usize);
        if nums.len() != d + 3 {
            return Err(OrthoError::Parse(format!("descriptor for degree {d} needs {} coefficients", d + 1)));
        }
        if !is_prime(p) {
            return Err(OrthoError::NotPrime(p));
        }
        let modulus: Vec<u32> = nums[2..].iter().map(|&c| c as u32).collect();
        Self::with_modulus(p, &modulus)
    }
}

fn check_order(p: u64, d: u32, budget: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(OrthoError::NotPrime(p));
    }
    if d == 0 {
        return Err(OrthoError::ZeroDegree);
    }
    let order = (p as u128).checked_pow(d).unwrap_or(u128::MAX);
    if order > budget as u128 || order > u32::MAX as u128 {
        return Err(OrthoError::TableBudget { p, d, budget });
    }
    Ok(order as u32)
}

fn digits(mut x: u32, p: u32, d: u32) -> Vec<u32> {
    (0..d)
        .map(|_| {
            let c = x % p;
            x /= p;
            c
        })
        .collect()
}

/// Multiply an element by the root of the modulus (shift and reduce).
fn times_root(x: u32, p: u32, d: u32, top: u32, modulus: &[u32]) -> u32 {
    let lead = x / top;
    let shifted = (x % top) * p;
    if lead == 0 {
        return shifted;
    }
    // subtract lead·(c_0 + c_1 x + … + c_{d−1} x^{d−1})
    let mut r = 0u32;
    let mut s = shifted;
    let mut place = 1u32;
    for &c in modulus.iter().take(d as usize) {
        let digit = s % p;
        s /= p;
        let v = (digit + p * p - (lead * c) % p) % p;
        r += v * place;
        place *= p;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: polynomial arithmetic on coefficient vectors.
    fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
        let d = modulus.len() - 1;
        let mut prod = vec![0u32; 2 * d];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (d..2 * d).rev() {
            let c = prod[k];
            if c != 0 {
                for (i, &m) in modulus.iter().enumerate() {
                    let idx = k - d + i;
                    prod[idx] = (prod[idx] + p * p - (c * m) % p) % p;
                }
            }
        }
        prod.truncate(d);
        prod
    }

    #[test]
    fn prime_field_is_residues() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.mul(2, 2), 1);
        // modulus x + f0 with −f0 primitive: −f0 = 2 ⇒ f0 = 1
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.primitive(), 2);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(FieldSpec::new(4, 2), Err(OrthoError::NotPrime(4)));
    }

    #[test]
    fn budget_rejected() {
        assert!(matches!(FieldSpec::with_budget(3, 5, 100), Err(OrthoError::TableBudget { .. })));
    }

    #[test]
    fn gf27_modulus_is_lexicographically_first_primitive() {
        // brute-force oracle: scan monic cubics in (c2, c1, c0) order and
        // take the first whose root has order 26 under polynomial arithmetic.
        let p = 3u32;
        let mut found = None;
        'outer: for c2 in 0..p {
            for c1 in 0..p {
                for c0 in 0..p {
                    let m = vec![c0, c1, c2, 1];
                    if c0 == 0 {
                        continue;
                    }
                    let x = vec![0, 1, 0];
                    let mut acc = vec![1, 0, 0];
                    let mut ord = 0;
                    for i in 1..=26 {
                        acc = poly_mulmod(&acc, &x, &m, p);
                        if acc == vec![1, 0, 0] {
                            ord = i;
                            break;
                        }
                    }
                    if ord == 26 {
                        found = Some(m);
                        break 'outer;
                    }
                }
            }
        }
        let f = FieldSpec::new(3, 3).unwrap();
        assert_eq!(Some(f.modulus().to_vec()), found);
        // frozen value from the oracle above: x^3 + 2x + 1
        assert_eq!(f.modulus(), &[1, 2, 0, 1]);
    }

    #[test]
    fn multiplication_matches_polynomial_oracle() {
        for (p, d) in [(3u64, 2u32), (3, 3), (5, 2), (2, 4), (7, 2)] {
            let f = FieldSpec::new(p, d).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let expect = poly_mulmod(&f.digits(a), &f.digits(b), f.modulus(), p as u32);
                    let code: u32 = expect.iter().rev().fold(0, |acc, &c| acc * p as u32 + c);
                    assert_eq!(f.mul(a, b), code, "GF({p}^{d}) {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = FieldSpec::new(5, 3).unwrap();
        for x in 1..f.order() {
            assert_eq!(f.alpha_pow(f.log(x).unwrap() as i64), x);
        }
        assert_eq!(f.alpha_pow((f.order() - 1) as i64), 1);
    }

    #[test]
    fn quadratic_character_examples() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.quadratic_character(0).unwrap(), 0);
        assert_eq!(f9.quadratic_character(f9.primitive()).unwrap(), -1);
        assert_eq!(f9.quadratic_character(f9.from_int(-1)).unwrap(), 1);
        let f2 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f2.quadratic_character(1), Err(OrthoError::EvenCharacteristic));
    }

    #[test]
    fn descriptor_roundtrip() {
        let f = FieldSpec::new(3, 4).unwrap();
        let g = FieldSpec::from_descriptor(&f.descriptor()).unwrap();
        assert_eq!(f, g);
        assert!(FieldSpec::from_descriptor("3 2 0 0 1").is_err());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(7), Some((7, 1)));
    }
}
