//! Finite-field arithmetic, exact character sums and bent-function screening.
//!
//! Builds GF(3^4), checks the quadratic Gauss sum closed form against the
//! brute-force sum in `Z[ζ_3]`, evaluates a Weil sum both ways, and screens
//! `tr(x²)` for membership in the weakly regular bent class.
//!
//! ```text
//! cargo run --example field_and_character_sums
//! ```

use std::error::Error;
use std::sync::Arc;

use ortho_codes::galois::{
    gauss_sum_brute, gauss_sum_quadratic, rf_membership, weil_sum, weil_sum_direct, FieldSpec, FunctionTable,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let field = Arc::new(FieldSpec::new(3, 4)?);
    let a = field.alpha_pow(17);
    let inv = field.inv(a).ok_or("nonzero element has an inverse")?;
    println!("GF(81): α^17 = {a}, inverse {inv}, product {}", field.mul(a, inv));
    println!("absolute trace of α^17: {}", field.abs_trace(a));

    let closed = gauss_sum_quadratic(&field)?;
    assert_eq!(closed.to_cycint()?, gauss_sum_brute(&field)?);
    println!(
        "quadratic Gauss sum: sign {:+}, imaginary {}, |G|² = {}",
        closed.sign,
        closed.imaginary,
        closed.magnitude_sq()
    );

    let (a2, a1, a0) = (field.alpha_pow(3), field.alpha_pow(5), 1);
    assert_eq!(weil_sum(&field, a2, a1, a0)?, weil_sum_direct(&field, a2, a1, a0));
    println!("Weil sum Σ ζ^tr(a2·c² + a1·c + 1): closed form equals direct sum");

    let square_trace = FunctionTable::trace_square(field.clone());
    let profile = rf_membership(&square_trace)?;
    println!("tr(x²) is weakly regular bent: ε = {}, degree h = {}", profile.epsilon, profile.h);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
