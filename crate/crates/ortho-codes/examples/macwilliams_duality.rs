//! Dual distributions by the exact MacWilliams transform, checked three ways.
//!
//! For a ternary BCH-type code the transform is compared with direct
//! enumeration of the dual, inverted back to the original, and fed into the
//! first four Pless power moments.
//!
//! ```text
//! cargo run --example macwilliams_duality
//! ```

use std::error::Error;

use ortho_codes::code_core::{macwilliams, pless_verify, weight_distribution, EnumOptions};
use ortho_codes::families::{build_family, FamilyParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let code = build_family(&FamilyParams::parse("family=c4 p=3 e=1 s=2")?)?;
    let wd = weight_distribution(&code, &EnumOptions::default())?;
    let dual = macwilliams(&wd)?;
    println!("code [{}, {}], dual [{}, {}, {:?}]", code.n(), code.k(), code.n(), code.n() - code.k(), dual.d_perp);
    for (i, a) in &dual.low {
        println!("A⊥_{i} = {a}");
    }

    let back = macwilliams(&dual.distribution)?;
    println!("transform is an involution: {}", back.distribution == wd);
    let pless = pless_verify(&wd, &dual.a(1), &dual.a(2), &dual.a(3));
    println!("Pless moments hold: {}", pless.passed);

    let enumerated = weight_distribution(&code.dual(), &EnumOptions::default())?;
    println!(
        "transform equals the enumerated dual (3^{} words): {}",
        code.n() - code.k(),
        enumerated == dual.distribution
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
