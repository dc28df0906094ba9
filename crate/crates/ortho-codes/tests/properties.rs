//! Property tests of the structural invariants: field axioms, enumeration
//! against a naive oracle, the MacWilliams involution, `Σ A_w = q^k`, the
//! Pless moments, "divisible with 1 ⇒ self-orthogonal", determinism across
//! worker counts, and lossless serialisation.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Pow;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ortho_codes::analysis::{check_divisible_so_theorem, AuditOutcome};
use ortho_codes::cli::acceptance::{random_divisible_code, untimed};
use ortho_codes::cli::parse_budget;
use ortho_codes::cli::{verify_family, VerificationReport, VerifyOptions};
use ortho_codes::code_core::{
    is_self_orthogonal, macwilliams, pless_verify, weight_distribution, EnumOptions, LinearCode, WeightDistribution,
};
use ortho_codes::families::FamilyParams;
use ortho_codes::galois::{gauss_sum_brute, gauss_sum_quadratic, weil_sum, weil_sum_direct, FieldSpec};

/// Small alphabets `(p, d)` used for random codes.
const ALPHABETS: [(u64, u32); 5] = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)];

fn field(idx: usize) -> Arc<FieldSpec> {
    let (p, d) = ALPHABETS[idx % ALPHABETS.len()];
    Arc::new(FieldSpec::new(p, d).expect("small field"))
}

/// A random code from raw symbols reduced into the alphabet.
fn random_code(idx: usize, k: usize, n: usize, raw: &[u32]) -> LinearCode {
    let f = field(idx);
    let q = f.order();
    let rows = (0..k).map(|i| (0..n).map(|j| (raw[(i * n + j) % raw.len()] % q) as u8).collect()).collect();
    LinearCode::new(f, n, rows).expect("well-formed rows")
}

fn code_strategy() -> impl Strategy<Value = LinearCode> {
    (0..ALPHABETS.len(), 1usize..=3, 1usize..=8, prop::collection::vec(any::<u32>(), 24))
        .prop_map(|(idx, k, n, raw)| random_code(idx, k, n, &raw))
}

/// Naive oracle: encode every message in `GF(q)^k` and count weights.
fn naive_distribution(code: &LinearCode) -> WeightDistribution {
    let (q, k, n) = (code.q(), code.k(), code.n());
    let basis = code.basis().to_vec();
    let mut hist = vec![0u64; n + 1];
    for msg in (0..k).map(|_| 0..q as u8).multi_cartesian_product() {
        let mut word = vec![0u8; n];
        for (row, &c) in basis.iter().zip(&msg) {
            code.gf().axpy(&mut word, c, row);
        }
        hist[word.iter().filter(|&&x| x != 0).count()] += 1;
    }
    if k == 0 {
        hist[0] = 1;
    }
    WeightDistribution::from_histogram(n, k, q as u64, &hist)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(idx in 0usize..ALPHABETS.len(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(idx);
        let q = f.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.alpha_pow(f.log(a).unwrap() as i64), a);
        } else {
            prop_assert!(f.inv(a).is_none());
        }
    }

    #[test]
    fn weil_sum_closed_form(idx in 0usize..3, a2 in any::<u32>(), a1 in any::<u32>(), a0 in any::<u32>()) {
        let (p, d) = [(3, 1), (5, 1), (3, 2)][idx];
        let f = FieldSpec::new(p, d).unwrap();
        let q = f.order();
        let a2 = 1 + a2 % (q - 1);
        let (a1, a0) = (a1 % q, a0 % q);
        prop_assert_eq!(weil_sum(&f, a2, a1, a0).unwrap(), weil_sum_direct(&f, a2, a1, a0));
    }

    #[test]
    fn enumeration_matches_naive_oracle(code in code_strategy()) {
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        prop_assert_eq!(&wd, &naive_distribution(&code));
        prop_assert_eq!(wd.total(), BigUint::from(code.q()).pow(code.k() as u32));
    }

    #[test]
    fn macwilliams_is_an_involution_and_pless_holds(code in code_strategy()) {
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        let dual = macwilliams(&wd).unwrap();
        prop_assert_eq!(dual.distribution.total(), BigUint::from(code.q()).pow((code.n() - code.k()) as u32));
        prop_assert_eq!(&macwilliams(&dual.distribution).unwrap().distribution, &wd);
        prop_assert!(pless_verify(&wd, &dual.a(1), &dual.a(2), &dual.a(3)).passed);
        // and the transform equals the enumerated dual
        let enumerated = weight_distribution(&code.dual(), &EnumOptions::default()).unwrap();
        prop_assert_eq!(dual.distribution, enumerated);
    }

    #[test]
    fn divisible_with_all_ones_is_self_orthogonal(seed in any::<u64>(), which in 0usize..3) {
        let (p, d) = [(3, 1), (5, 1), (3, 2)][which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_divisible_code(&mut rng, p, d).unwrap();
        let wd = weight_distribution(&code, &EnumOptions::default()).unwrap();
        prop_assert!(wd.is_divisible_by(p));
        prop_assert!(code.contains_all_ones());
        prop_assert!(is_self_orthogonal(&code));
        prop_assert_eq!(check_divisible_so_theorem(&code, &wd).outcome, AuditOutcome::Confirmed);
    }

    #[test]
    fn enumeration_is_independent_of_worker_count(code in code_strategy(), workers in 1usize..=16) {
        let one = weight_distribution(&code, &EnumOptions { workers: 1, ..Default::default() }).unwrap();
        let many = weight_distribution(&code, &EnumOptions { workers, ..Default::default() }).unwrap();
        prop_assert_eq!(one, many);
    }

    #[test]
    fn code_text_round_trip(code in code_strategy()) {
        let back = LinearCode::from_text(&code.to_text()).unwrap();
        prop_assert_eq!(back.n(), code.n());
        prop_assert_eq!(back.basis(), code.basis());
    }

    #[test]
    fn budget_notations_agree(e in 0u32..40) {
        let exact = 1u64 << e;
        prop_assert_eq!(parse_budget(&format!("2^{e}")).unwrap(), exact);
        prop_assert_eq!(parse_budget(&exact.to_string()).unwrap(), exact);
    }
}

#[test]
fn quadratic_gauss_sums_match_brute_force() {
    for (p, e) in [(3, 1), (5, 1), (7, 1), (11, 1), (3, 2), (5, 2), (7, 2), (3, 3), (3, 4)] {
        let spec = FieldSpec::new(p, e).unwrap();
        let closed = gauss_sum_quadratic(&spec).unwrap();
        assert_eq!(closed.magnitude_sq(), num_bigint::BigInt::from(p).pow(e), "GF({p}^{e})");
        assert_eq!(closed.to_cycint().unwrap(), gauss_sum_brute(&spec).unwrap(), "GF({p}^{e})");
    }
}

/// Reports survive a JSON round-trip unchanged, and the whole report (not
/// just the distribution) is independent of the worker count.
#[test]
fn reports_round_trip_and_are_deterministic() {
    for params in ["family=c4 p=3 e=1 s=2", "family=example q=3 m=3", "family=lrc2 p=3 m=4", "family=grm q=3 m=2 rho=1"]
    {
        let fp = FamilyParams::parse(params).unwrap();
        let reports: Vec<VerificationReport> = [1, 3, 8]
            .into_iter()
            .map(|w| verify_family(&fp, &VerifyOptions { workers: w, ..Default::default() }).unwrap())
            .collect();
        for r in &reports {
            assert_eq!(&VerificationReport::from_json(&r.to_json().unwrap()).unwrap(), r, "{params}");
        }
        let untimed: Vec<_> = reports.into_iter().map(untimed).collect();
        assert!(untimed.windows(2).all(|w| w[0] == w[1]), "{params}");
    }
}
