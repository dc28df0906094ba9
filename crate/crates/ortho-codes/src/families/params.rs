//! Family parameters: the `family=<id> key=value …` syntax, and validation
//! into a typed [`Family`] with every hypothesis of the construction checked.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{OrthoError, Result};
use crate::galois::{is_prime, prime_power};

/// Identifier of a code family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    /// Cyclic code with slots `(−α)^t`, `α^{(p^k+1)t/2}`; `k/e` odd.
    C1,
    /// Cyclic code with slots `α^t`, `α^{(p^k+1)t/2}`; `k/e` even.
    C2,
    /// Cyclic code over GF(q) with slots `g₁^t = θ^t`, `g₂^t = (−θ)^t`.
    C3,
    /// Irreducible cyclic code with slot `θ^t`, `θ = α^{p^e+1}`, `m = 2s`.
    C4,
    /// Extended narrow-sense BCH code with designed distance δ₂.
    Bch2,
    /// Extended narrow-sense BCH code with designed distance δ₃.
    Bch3,
    /// Generalized Reed–Solomon code on all points of GF(q), unit multipliers.
    Grs,
    /// Generalized Reed–Muller code `RM_q(ρ, m)`.
    Grm,
    /// Augmented code of `tr(b x²)` over the kernel of a relative trace (locality 2).
    Lrc1,
    /// Augmented code of `tr(b x)` over the zero set of a bent function (locality 2).
    Lrc2,
    /// Augmented code of `tr(b x)` over the kernel of the trace: a projective two-weight Griesmer code.
    Example,
}

impl FamilyId {
    /// All identifiers, in display order.
    pub const ALL: [FamilyId; 11] = [
        FamilyId::C1,
        FamilyId::C2,
        FamilyId::C3,
        FamilyId::C4,
        FamilyId::Bch2,
        FamilyId::Bch3,
        FamilyId::Grs,
        FamilyId::Grm,
        FamilyId::Lrc1,
        FamilyId::Lrc2,
        FamilyId::Example,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyId::C1 => "c1",
            FamilyId::C2 => "c2",
            FamilyId::C3 => "c3",
            FamilyId::C4 => "c4",
            FamilyId::Bch2 => "bch2",
            FamilyId::Bch3 => "bch3",
            FamilyId::Grs => "grs",
            FamilyId::Grm => "grm",
            FamilyId::Lrc1 => "lrc1",
            FamilyId::Lrc2 => "lrc2",
            FamilyId::Example => "example",
        }
    }

    /// Keys accepted by this family (besides `family`, `fn`, `p`, `e`, `q`).
    fn keys(&self) -> &'static [&'static str] {
        match self {
            FamilyId::C1 | FamilyId::C2 => &["m", "k"],
            FamilyId::C3 | FamilyId::Example => &["m"],
            FamilyId::C4 => &["s"],
            FamilyId::Bch2 | FamilyId::Bch3 => &["m", "delta"],
            FamilyId::Grs => &["k", "n"],
            FamilyId::Grm => &["m", "rho"],
            FamilyId::Lrc1 => &["m", "m1", "m2"],
            FamilyId::Lrc2 => &["m"],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = OrthoError;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.as_str() == s.to_ascii_lowercase())
            .ok_or_else(|| OrthoError::UnknownFamily(s.to_string()))
    }
}

/// Raw family parameters as given on the command line or in a config line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: FamilyId,
    /// Integer parameters by key (`f` is stored as its alias `e`).
    pub values: BTreeMap<String, u64>,
    /// Path to a function table (bent-function family only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<PathBuf>,
}

const INTEGER_KEYS: [&str; 12] = ["p", "e", "q", "m", "k", "s", "m1", "m2", "rho", "delta", "n", "f"];

impl FamilyParams {
    /// Parameters for `family` with no values set.
    pub fn new(family: FamilyId) -> Self {
        FamilyParams { family, values: BTreeMap::new(), function: None }
    }

    /// Builder-style setter; `f` is an alias of `e`.
    pub fn with(mut self, key: &str, value: u64) -> Self {
        let key = if key == "f" { "e" } else { key };
        self.values.insert(key.to_string(), value);
        self
    }

    /// Parse `family=<id> key=value …` (whitespace separated).
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_pairs(text.split_whitespace())
    }

    /// Parse from `key=value` tokens.
    pub fn from_pairs<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut family = None;
        let mut values = BTreeMap::new();
        let mut function = None;
        for tok in tokens {
            let (key, value) =
                tok.split_once('=').ok_or_else(|| OrthoError::Parse(format!("expected key=value, got '{tok}'")))?;
            match key {
                "family" => family = Some(value.parse::<FamilyId>()?),
                "fn" => function = Some(PathBuf::from(value)),
                k if INTEGER_KEYS.contains(&k) => {
                    let v: u64 = value
                        .parse()
                        .map_err(|_| OrthoError::Parse(format!("{key} must be an integer, got '{value}'")))?;
                    let k = if k == "f" { "e" } else { k };
                    if values.insert(k.to_string(), v).is_some() {
                        return Err(OrthoError::Parse(format!("parameter {k} given twice")));
                    }
                }
                _ => return Err(OrthoError::Parse(format!("unknown parameter '{key}'"))),
            }
        }
        let family = family.ok_or_else(|| OrthoError::Parse("missing family=<id>".into()))?;
        Ok(FamilyParams { family, values, function })
    }

    /// Value of `key`, if set.
    pub fn get(&self, key: &str) -> Option<u64> {
        self.values.get(key).copied()
    }

    fn invalid(&self, reason: impl Into<String>) -> OrthoError {
        OrthoError::InvalidParams { family: self.family.to_string(), reason: reason.into() }
    }

    fn require(&self, key: &str) -> Result<u64> {
        self.get(key).ok_or_else(|| self.invalid(format!("missing parameter {key}")))
    }

    fn require_u32(&self, key: &str) -> Result<u32> {
        u32::try_from(self.require(key)?).map_err(|_| self.invalid(format!("{key} too large")))
    }

    /// Resolve `(p, e)` from `q`, or from `p` and `e` (default 1).
    fn prime_and_degree(&self) -> Result<(u64, u32)> {
        let from_q = match self.get("q") {
            Some(q) => Some(prime_power(q).ok_or_else(|| self.invalid(format!("q = {q} is not a prime power")))?),
            None => None,
        };
        let (p, e) = match (from_q, self.get("p"), self.get("e")) {
            (Some((p, e)), p2, e2) => {
                if p2.is_some_and(|x| x != p) || e2.is_some_and(|x| x != e as u64) {
                    return Err(self.invalid("q disagrees with p and e"));
                }
                (p, e)
            }
            (None, Some(p), e) => {
                if !is_prime(p) {
                    return Err(self.invalid(format!("p = {p} is not prime")));
                }
                (p, u32::try_from(e.unwrap_or(1)).map_err(|_| self.invalid("e too large"))?)
            }
            (None, None, _) => return Err(self.invalid("missing parameter p (or q)")),
        };
        if p == 2 {
            return Err(self.invalid("the characteristic must be odd"));
        }
        if e == 0 {
            return Err(self.invalid("e must be at least 1"));
        }
        Ok((p, e))
    }

    /// Validate every hypothesis of the construction.
    pub fn resolve(&self) -> Result<Family> {
        for key in self.values.keys() {
            if !["p", "e", "q"].contains(&key.as_str()) && !self.family.keys().contains(&key.as_str()) {
                return Err(self.invalid(format!("parameter {key} does not apply")));
            }
        }
        if self.function.is_some() && self.family != FamilyId::Lrc2 {
            return Err(self.invalid("fn applies to the bent-function family only"));
        }
        let fam = match self.family {
            FamilyId::C1 | FamilyId::C2 => {
                let p = self.prime_only()?;
                let (m, k) = (self.require_u32("m")?, self.require_u32("k")?);
                if m == 0 || k == 0 {
                    return Err(self.invalid("m and k must be positive"));
                }
                let e = m.gcd(&k);
                let s = m / e;
                if s < 3 {
                    return Err(self.invalid(format!("s = m/e = {s} must be at least 3")));
                }
                if s % 2 == 0 {
                    return Err(self.invalid(format!("s = m/e = {s} must be odd")));
                }
                let k_odd = (k / e) % 2 == 1;
                if self.family == FamilyId::C1 && !k_odd {
                    return Err(self.invalid("k/e must be odd for C1"));
                }
                if self.family == FamilyId::C2 && k_odd {
                    return Err(self.invalid("k/e must be even for C2"));
                }
                if self.family == FamilyId::C1 {
                    Family::C1 { p, m, k, e }
                } else {
                    Family::C2 { p, m, k, e }
                }
            }
            FamilyId::C3 => {
                let (p, e) = self.prime_and_degree()?;
                let m = self.require_u32("m")?;
                if m < 3 || (m % 2 == 0 && m < 4) {
                    return Err(self.invalid("m must be odd and at least 3, or even and at least 4"));
                }
                Family::C3 { p, e, m }
            }
            FamilyId::C4 => {
                let (p, e) = self.prime_and_degree()?;
                let s = self.require_u32("s")?;
                if s < 2 || (s % 2 == 1 && s < 3) {
                    return Err(self.invalid("s must be even and at least 2, or odd and at least 3"));
                }
                Family::C4 { p, e, s }
            }
            FamilyId::Bch2 | FamilyId::Bch3 => {
                let q = self.prime_only()?;
                let m = self.require_u32("m")?;
                let delta = if self.family == FamilyId::Bch2 { 2 } else { 3 };
                if let Some(d) = self.get("delta") {
                    if d != delta {
                        return Err(self.invalid(format!("delta = {d} contradicts family {}", self.family)));
                    }
                }
                let min_m = match (delta, m % 2) {
                    (2, 1) => 3,
                    (3, 1) => 5,
                    _ => 4,
                };
                if m < min_m {
                    return Err(self.invalid(format!("m = {m} too small (needs m ≥ {min_m} for this parity)")));
                }
                Family::Bch { q, m, delta: delta as u32 }
            }
            FamilyId::Grs => {
                let (p, e) = self.prime_and_degree()?;
                let q = p.pow(e);
                let k = self.require_u32("k")?;
                let n = self.get("n").unwrap_or(q);
                if n > q {
                    return Err(self.invalid(format!("at most q = {q} distinct points exist")));
                }
                if k == 0 || k as u64 > n {
                    return Err(self.invalid("need 1 ≤ k ≤ n"));
                }
                Family::Grs { p, e, k, n: n as usize }
            }
            FamilyId::Grm => {
                let (p, e) = self.prime_and_degree()?;
                let m = self.require_u32("m")?;
                let rho = self.require_u32("rho")?;
                let q = p.pow(e);
                if m == 0 || rho as u64 >= m as u64 * (q - 1) {
                    return Err(self.invalid("need m ≥ 1 and ρ < m(q − 1)"));
                }
                Family::Grm { p, e, m, rho }
            }
            FamilyId::Lrc1 => {
                let (p, e) = self.prime_and_degree()?;
                let (m, m1, m2) = (self.require_u32("m")?, self.require_u32("m1")?, self.require_u32("m2")?);
                if m2 == 0 || m1 % m2 != 0 || m % m1 != 0 {
                    return Err(self.invalid("need m2 | m1 | m"));
                }
                if m < 3 * m1 {
                    return Err(self.invalid("need m ≥ 3·m1"));
                }
                if (m / m2) % 2 == 1 && (m1 / m2) % 2 == 1 && m == 3 * m1 {
                    return Err(self.invalid("need m > 3·m1 when m/m2 and m1/m2 are both odd"));
                }
                Family::Lrc1 { p, e, m, m1, m2 }
            }
            FamilyId::Lrc2 => {
                let p = self.prime_only()?;
                let m = self.require_u32("m")?;
                if m < 4 {
                    return Err(self.invalid("m must be at least 4"));
                }
                Family::Lrc2 { p, m, function: self.function.clone() }
            }
            FamilyId::Example => {
                let (p, e) = self.prime_and_degree()?;
                let m = self.require_u32("m")?;
                if m < 3 {
                    return Err(self.invalid("m must be at least 3"));
                }
                Family::Example { p, e, m }
            }
        };
        Ok(fam)
    }

    /// A prime characteristic given as `p` (or as a prime `q`).
    fn prime_only(&self) -> Result<u64> {
        let (p, e) = self.prime_and_degree()?;
        if e != 1 {
            return Err(self.invalid("this family is defined over a prime field (e = 1)"));
        }
        Ok(p)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={}", self.family)?;
        for (k, v) in &self.values {
            write!(f, " {k}={v}")?;
        }
        if let Some(path) = &self.function {
            write!(f, " fn={}", path.display())?;
        }
        Ok(())
    }
}

impl FromStr for FamilyParams {
    type Err = OrthoError;

    fn from_str(s: &str) -> Result<Self> {
        FamilyParams::parse(s)
    }
}

/// Validated family parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `e = gcd(m, k)`.
    C1 {
        p: u64,
        m: u32,
        k: u32,
        e: u32,
    },
    C2 {
        p: u64,
        m: u32,
        k: u32,
        e: u32,
    },
    /// Alphabet GF(q), `q = p^e`.
    C3 {
        p: u64,
        e: u32,
        m: u32,
    },
    /// Alphabet GF(q), `q = p^e`, big field GF(q^{2s}).
    C4 {
        p: u64,
        e: u32,
        s: u32,
    },
    /// `q` prime; `delta ∈ {2, 3}`.
    Bch {
        q: u64,
        m: u32,
        delta: u32,
    },
    Grs {
        p: u64,
        e: u32,
        k: u32,
        n: usize,
    },
    Grm {
        p: u64,
        e: u32,
        m: u32,
        rho: u32,
    },
    Lrc1 {
        p: u64,
        e: u32,
        m: u32,
        m1: u32,
        m2: u32,
    },
    /// `function = None` selects the built-in `tr(x²)`.
    Lrc2 {
        p: u64,
        m: u32,
        function: Option<PathBuf>,
    },
    Example {
        p: u64,
        e: u32,
        m: u32,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let fp = FamilyParams::parse("family=c4 p=3 f=1 s=2").unwrap();
        assert_eq!(fp.get("e"), Some(1));
        assert_eq!(fp.to_string(), "family=c4 e=1 p=3 s=2");
        assert_eq!(FamilyParams::parse(&fp.to_string()).unwrap(), fp);
        assert_eq!(fp.resolve().unwrap(), Family::C4 { p: 3, e: 1, s: 2 });
    }

    #[test]
    fn constraint_violations_are_named() {
        let err = FamilyParams::parse("family=c1 p=3 m=3 k=2").unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("k/e must be odd for C1"), "{err}");
        let err = FamilyParams::parse("family=c1 p=3 m=4 k=1").unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("must be odd"), "{err}");
        let err = FamilyParams::parse("family=lrc1 q=3 m=3 m1=1 m2=1").unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("m > 3·m1"), "{err}");
        assert!(FamilyParams::parse("family=lrc1 q=3 m=4 m1=2 m2=1").unwrap().resolve().is_err());
        assert!(matches!(FamilyParams::parse("family=nosuch"), Err(OrthoError::UnknownFamily(_))));
        assert!(FamilyParams::parse("family=c4 p=3 s=2 zz=1").is_err());
        assert!(FamilyParams::parse("family=bch2 q=9 m=3").unwrap().resolve().is_err());
        assert!(FamilyParams::parse("family=c4 p=3 s=2 m=3").unwrap().resolve().is_err());
    }

    #[test]
    fn q_resolves_to_prime_power() {
        let fam = FamilyParams::parse("family=grs q=27 k=3").unwrap().resolve().unwrap();
        assert_eq!(fam, Family::Grs { p: 3, e: 3, k: 3, n: 27 });
        assert!(FamilyParams::parse("family=grs q=12 k=3").unwrap().resolve().is_err());
        assert!(FamilyParams::parse("family=grs q=9 p=5 k=3").unwrap().resolve().is_err());
    }
}
